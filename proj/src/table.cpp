#include "gwcp3/table.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace gwcp3 {

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::wdvv_solved: return "WDVV_SOLVED";
        case Provenance::relation_a: return "RELATION_A";
        case Provenance::relation_b: return "RELATION_B";
        case Provenance::seed: return "SEED";
        case Provenance::loaded_golden: return "LOADED_GOLDEN";
        case Provenance::loaded_cache: return "LOADED_CACHE";
    }
    return "?";
}

std::optional<Provenance> provenance_from_string(std::string_view s) {
    for (auto p : {Provenance::wdvv_solved, Provenance::relation_a, Provenance::relation_b,
                   Provenance::seed, Provenance::loaded_golden, Provenance::loaded_cache})
        if (to_string(p) == s) return p;
    return std::nullopt;
}

MissingEntry::MissingEntry(const GWKey& k)
    : std::runtime_error("missing entry N^(" + std::to_string(k.genus) + ") degree " +
                         std::to_string(k.degree) + " cell (" + std::to_string(k.a) + "," +
                         std::to_string(k.b) + ")"),
      key(k) {}

std::vector<std::pair<int, int>> GWTable::cells_for_degree(int genus, int degree) {
    if (genus != 0 && genus != 1) throw std::invalid_argument("cells_for_degree: genus must be 0 or 1");
    if (degree < 1) throw std::invalid_argument("cells_for_degree: degree must be >= 1");
    std::vector<std::pair<int, int>> out;
    out.reserve(2 * degree + 1);
    for (int b = 0; b <= 2 * degree; ++b) out.emplace_back(4 * degree - 2 * b, b);
    return out;
}

Rational GWTable::get(int genus, int degree, int a, int b) const {
    if (genus != 0 && genus != 1) throw std::invalid_argument("get: genus must be 0 or 1");
    if (degree < 1 || a < 0 || b < 0) throw std::invalid_argument("get: degree >= 1 and a,b >= 0 required");
    if (!GWKey::dimension_ok(degree, a, b)) return Rational(0);
    GWKey key{genus, degree, a, b};
    auto it = entries_.find(key);
    if (it == entries_.end()) throw MissingEntry(key);
    return it->second.value;
}

Rational GWTable::coeff_or_zero(int genus, int degree, int a, int b) const {
    if (degree < 1 || a < 0 || b < 0 || !GWKey::dimension_ok(degree, a, b)) return Rational(0);
    GWKey key{genus, degree, a, b};
    auto it = entries_.find(key);
    if (it == entries_.end()) throw MissingEntry(key);
    return it->second.value;
}

void GWTable::put(const GWKey& key, const Rational& value, Provenance prov) {
    if (!key.valid()) throw std::invalid_argument("put: invalid key");
    auto [it, inserted] = entries_.emplace(key, Entry{value, prov});
    if (!inserted && !(it->second.value == value)) {
        std::ostringstream msg;
        msg << "put: conflicting value for genus " << key.genus << " degree " << key.degree
            << " cell (" << key.a << "," << key.b << "): stored " << it->second.value.str()
            << ", new " << value.str();
        throw ConsistencyViolation(msg.str());
    }
}

const GWTable::Entry* GWTable::find(const GWKey& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : &it->second;
}

int GWTable::max_complete_degree(int genus) const {
    if (genus != 0 && genus != 1) throw std::invalid_argument("max_complete_degree: genus must be 0 or 1");
    return complete_[static_cast<std::size_t>(genus)];
}

void GWTable::mark_complete(int genus, int degree) {
    for (int n = max_complete_degree(genus) + 1; n <= degree; ++n)
        for (auto [a, b] : cells_for_degree(genus, n))
            if (!has(GWKey{genus, n, a, b}))
                throw ConsistencyViolation("mark_complete: genus " + std::to_string(genus) +
                                           " degree " + std::to_string(n) + " cell (" +
                                           std::to_string(a) + "," + std::to_string(b) +
                                           ") missing");
    complete_[static_cast<std::size_t>(genus)] =
        std::max(complete_[static_cast<std::size_t>(genus)], degree);
}

namespace {
constexpr std::string_view kCacheHeader = "gwtable 1";
}

void GWTable::write_records(std::ostream& out) const {
    out << kCacheHeader << "\n";
    for (const auto& [key, entry] : entries_)
        out << key.genus << " " << key.degree << " " << key.a << " " << key.b << " "
            << entry.value.str() << " " << to_string(entry.prov) << "\n";
}

GWTable GWTable::read_records(std::istream& in, const std::string& origin) {
    GWTable table;
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& what) {
        throw MalformedFile(origin + ":" + std::to_string(lineno) + ": " + what);
    };
    if (!std::getline(in, line)) throw MalformedFile(origin + ": empty file");
    lineno = 1;
    if (line != kCacheHeader) fail("expected header '" + std::string(kCacheHeader) + "'");
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream fields(line);
        GWKey key;
        std::string value, prov;
        if (!(fields >> key.genus >> key.degree >> key.a >> key.b >> value >> prov))
            fail("expected 'g n a b num/den provenance'");
        std::string rest;
        if (fields >> rest) fail("trailing field '" + rest + "'");
        if (!key.valid()) fail("invalid key (dimension constraint 4n = a+2b)");
        auto p = provenance_from_string(prov);
        if (!p) fail("unknown provenance '" + prov + "'");
        Rational v;
        try {
            v = Rational::parse(value);
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
        try {
            table.put(key, v, *p);
        } catch (const ConsistencyViolation& e) {
            fail(e.what());
        }
    }
    return table;
}

void GWTable::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw MalformedFile(path + ": cannot open for writing");
    write_records(out);
    if (!out) throw MalformedFile(path + ": write failed");
}

GWTable GWTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedFile(path + ": cannot open");
    return read_records(in, path);
}

void GWTable::write_csv(std::ostream& out) const {
    out << "genus,degree,a,b,value\n";
    for (const auto& [key, entry] : entries_)
        out << key.genus << "," << key.degree << "," << key.a << "," << key.b << ","
            << entry.value.str() << "\n";
}

void GWTable::write_json(std::ostream& out) const {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [key, entry] : entries_) {
        rows.push_back({{"g", key.genus},
                        {"n", key.degree},
                        {"a", key.a},
                        {"b", key.b},
                        {"num", entry.value.numerator().str()},
                        {"den", entry.value.denominator().str()},
                        {"provenance", to_string(entry.prov)}});
    }
    out << rows.dump(2) << "\n";
}

GWTable load_golden_table1() {
    GWTable table;
    for (const auto& row : golden_rows()) {
        table.put(GWKey{0, row.degree, row.a, row.b}, Rational(row.n0), Provenance::loaded_golden);
        table.put(GWKey{1, row.degree, row.a, row.b}, Rational(Int(row.n1_num), Int(row.n1_den)),
                  Provenance::loaded_golden);
    }
    for (int g : {0, 1}) table.mark_complete(g, kGoldenMaxDegree);
    return table;
}

}  // namespace gwcp3
