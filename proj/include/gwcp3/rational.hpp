#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gwcp3 {

using Int = boost::multiprecision::cpp_int;

/// Exact rational number, always in canonical form: denominator > 0,
/// gcd(|num|, den) = 1, zero represented as 0/1.
class Rational {
public:
    Rational() = default;
    Rational(int v) : q_(v) {}
    Rational(long long v) : q_(v) {}
    Rational(Int v) : q_(std::move(v)) {}
    Rational(const Int& num, const Int& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        q_ = den < 0 ? backend(-num, -den) : backend(num, den);
    }

    Int numerator() const { return boost::multiprecision::numerator(q_); }
    Int denominator() const { return boost::multiprecision::denominator(q_); }
    bool is_zero() const { return q_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }

    Rational operator-() const { return Rational(backend(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational x, const Rational& y) { return x += y; }
    friend Rational operator-(Rational x, const Rational& y) { return x -= y; }
    friend Rational operator*(Rational x, const Rational& y) { return x *= y; }
    friend Rational operator/(Rational x, const Rational& y) { return x /= y; }

    friend bool operator==(const Rational& x, const Rational& y) { return x.q_ == y.q_; }
    friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
        if (x.q_ < y.q_) return std::strong_ordering::less;
        if (x.q_ > y.q_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    Rational abs() const { return *this < Rational(0) ? -*this : *this; }

    /// "p/q" in canonical form; plain "p" when the denominator is 1.
    std::string str() const;

    /// Accepts "p" or "p/q" with optional sign; canonicalizes. Throws
    /// std::invalid_argument on malformed input or zero denominator.
    static Rational parse(std::string_view text);

private:
    using backend = boost::multiprecision::cpp_rational;
    explicit Rational(backend q) : q_(std::move(q)) {}
    backend q_;
};

/// n^k for small non-negative k.
Rational pow_int(const Rational& base, int k);

}  // namespace gwcp3
