#include "gwcp3/combinatorics.hpp"

#include <deque>
#include <mutex>
#include <stdexcept>

namespace gwcp3 {

const Int& factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    // deque keeps element references stable while the table grows
    static std::deque<Int> table{Int(1)};
    static std::mutex mu;
    std::lock_guard lock(mu);
    while (static_cast<int>(table.size()) <= n)
        table.push_back(table.back() * Int(static_cast<int>(table.size())));
    return table[static_cast<std::size_t>(n)];
}

Int binom(long long m, long long k) {
    if (k < 0 || m < 0 || k > m) return Int(0);
    return factorial(static_cast<int>(m)) /
           (factorial(static_cast<int>(k)) * factorial(static_cast<int>(m - k)));
}

Int multinom(long long m, long long k1, long long k2) {
    if (m < 0 || k1 < 0 || k2 < 0 || k1 + k2 > m) return Int(0);
    return factorial(static_cast<int>(m)) /
           (factorial(static_cast<int>(k1)) * factorial(static_cast<int>(k2)) *
            factorial(static_cast<int>(m - k1 - k2)));
}

}  // namespace gwcp3
