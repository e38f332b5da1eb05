#pragma once

#include "gwcp3/rational.hpp"

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gwcp3 {

enum class Provenance { wdvv_solved, relation_a, relation_b, seed, loaded_golden, loaded_cache };

std::string to_string(Provenance p);
std::optional<Provenance> provenance_from_string(std::string_view s);

/// Key of one Gromov-Witten coefficient: genus g in {0,1}, curve degree
/// n >= 1, a line constraints and b point constraints with 4n = a + 2b.
struct GWKey {
    int genus = 0;
    int degree = 1;
    int a = 0;
    int b = 0;

    static bool dimension_ok(int degree, int a, int b) { return 4 * degree == a + 2 * b; }
    bool valid() const {
        return (genus == 0 || genus == 1) && degree >= 1 && a >= 0 && b >= 0 &&
               dimension_ok(degree, a, b);
    }
    auto operator<=>(const GWKey&) const = default;
};

struct MissingEntry : std::runtime_error {
    explicit MissingEntry(const GWKey& k);
    GWKey key;
};

struct ConsistencyViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MalformedFile : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Memoized write-once store of coefficients N^(g)_{ab} keyed per degree.
class GWTable {
public:
    struct Entry {
        Rational value;
        Provenance prov;
    };

    /// The (a,b) cells of one degree, ascending b: (4n, 0), ..., (0, 2n).
    /// genus must be 0 or 1 and degree >= 1.
    static std::vector<std::pair<int, int>> cells_for_degree(int genus, int degree);

    /// Value lookup. Returns 0 whenever 4*degree != a + 2b (dimension gate).
    /// Throws std::invalid_argument outside the key domain (genus not in
    /// {0,1}, degree < 1, a or b negative) and MissingEntry for a valid key
    /// that has not been computed yet.
    Rational get(int genus, int degree, int a, int b) const;

    /// Dimension-gated lookup for convolution sums: any out-of-domain index
    /// (negative a/b, degree < 1, gate mismatch) yields 0; a valid missing
    /// key still throws MissingEntry.
    Rational coeff_or_zero(int genus, int degree, int a, int b) const;

    bool has(const GWKey& key) const { return entries_.count(key) != 0; }

    /// Write-once: re-inserting a key requires the identical value, anything
    /// else throws ConsistencyViolation.
    void put(const GWKey& key, const Rational& value, Provenance prov);

    const Entry* find(const GWKey& key) const;
    const std::map<GWKey, Entry>& entries() const { return entries_; }

    int max_complete_degree(int genus) const;
    /// Records that every cell of `degree` (and below) is present for genus.
    /// Throws ConsistencyViolation if a cell is missing.
    void mark_complete(int genus, int degree);

    void save(const std::string& path) const;
    static GWTable load(const std::string& path);

    void write_records(std::ostream& out) const;
    static GWTable read_records(std::istream& in, const std::string& origin);

    /// CSV export, header genus,degree,a,b,value; integers rendered bare.
    void write_csv(std::ostream& out) const;
    /// JSON export: array of {g,n,a,b,num,den,provenance}.
    void write_json(std::ostream& out) const;

private:
    std::map<GWKey, Entry> entries_;
    std::array<int, 2> complete_{0, 0};
};

/// One row of the embedded reference table: rational count N0, elliptic
/// coefficient N1 and the combined elliptic curve count.
struct GoldenRow {
    int degree;
    int a;
    int b;
    long long n0;
    long long n1_num;
    int n1_den;
    long long count;
};

/// Embedded reference data, degrees 1..5, 35 rows, grouped by degree.
const std::vector<GoldenRow>& golden_rows();

/// Reference data as a table (both genera, provenance loaded_golden).
GWTable load_golden_table1();

constexpr int kGoldenMaxDegree = 5;

}  // namespace gwcp3
