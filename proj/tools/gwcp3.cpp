// Command-line driver: compute | verify | crosscheck | export.
// Exit codes: 0 success, 1 usage or I/O error, 2 solver inconsistency,
// 3 verification or cross-check failure.

#include "gwcp3/elliptic.hpp"
#include "gwcp3/linalg.hpp"
#include "gwcp3/report.hpp"
#include "gwcp3/table.hpp"
#include "gwcp3/wdvv.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

struct RunConfig {
    int max_degree = 5;
    std::string genus = "both";
    std::string format = "csv";
    std::string out_path;
    std::string cache_path;
    int workers = 1;
    bool verbose = false;
};

int write_output(const RunConfig& cfg, const std::string& text) {
    if (cfg.out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(cfg.out_path);
    if (!out) {
        std::cerr << "error: cannot open " << cfg.out_path << " for writing\n";
        return 1;
    }
    out << text;
    return out ? 0 : 1;
}

gwcp3::GWTable make_table(const RunConfig& cfg) {
    if (!cfg.cache_path.empty()) {
        std::ifstream probe(cfg.cache_path);
        if (probe.good()) {
            auto table = gwcp3::GWTable::load(cfg.cache_path);
            if (cfg.verbose)
                std::cerr << "loaded cache " << cfg.cache_path << " ("
                          << table.entries().size() << " entries)\n";
            // re-derive completeness from the cached entries
            for (int g : {0, 1}) {
                int n = 0;
                while (true) {
                    bool full = true;
                    for (auto [a, b] : gwcp3::GWTable::cells_for_degree(g, n + 1))
                        if (!table.has(gwcp3::GWKey{g, n + 1, a, b})) { full = false; break; }
                    if (!full) break;
                    table.mark_complete(g, ++n);
                }
            }
            gwcp3::solve_genus0(table, cfg.max_degree, cfg.workers);
            if (cfg.genus != "0") gwcp3::solve_genus1(table, cfg.max_degree);
            return table;
        }
    }
    gwcp3::GWTable table;
    gwcp3::solve_genus0(table, cfg.max_degree, cfg.workers);
    if (cfg.genus != "0") gwcp3::solve_genus1(table, cfg.max_degree);
    if (!cfg.cache_path.empty()) table.save(cfg.cache_path);
    return table;
}

gwcp3::GWTable genus_filtered(const gwcp3::GWTable& table, const std::string& genus) {
    if (genus == "both") return table;
    int want = genus == "0" ? 0 : 1;
    gwcp3::GWTable out;
    for (const auto& [key, entry] : table.entries())
        if (key.genus == want) out.put(key, entry.value, entry.prov);
    return out;
}

std::string render(const RunConfig& cfg, const gwcp3::GWTable& table) {
    std::ostringstream out;
    if (cfg.genus == "0") {
        // genus-0 only: no elliptic or count columns to report
        if (cfg.format == "csv") genus_filtered(table, "0").write_csv(out);
        else if (cfg.format == "json") genus_filtered(table, "0").write_json(out);
        else {
            out << "| n | (a,b) | N0 |\n|---|-------|----|\n";
            for (int n = 1; n <= cfg.max_degree; ++n) {
                auto cells = gwcp3::GWTable::cells_for_degree(0, n);
                for (auto it = cells.rbegin(); it != cells.rend(); ++it)
                    out << "| " << (it == cells.rbegin() ? std::to_string(n) : std::string())
                        << " | (" << it->first << "," << it->second << ") | "
                        << table.get(0, n, it->first, it->second).str() << " |\n";
            }
        }
        return out.str();
    }
    if (cfg.format == "csv") gwcp3::write_combined_csv(out, table, cfg.max_degree);
    else if (cfg.format == "json") gwcp3::write_combined_json(out, table, cfg.max_degree);
    else gwcp3::write_combined_markdown(out, table, cfg.max_degree);
    return out.str();
}

int cmd_compute(const RunConfig& cfg) {
    auto table = make_table(cfg);
    return write_output(cfg, render(cfg, table));
}

int cmd_verify(const RunConfig& cfg) {
    if (cfg.max_degree > gwcp3::kGoldenMaxDegree) {
        std::cerr << "error: reference data extends to degree " << gwcp3::kGoldenMaxDegree
                  << "; use --max-degree <= " << gwcp3::kGoldenMaxDegree << " for verify\n";
        return 1;
    }
    auto table = gwcp3::compute_table(cfg.max_degree, cfg.workers);
    auto diffs = gwcp3::verify_against_golden(table, cfg.max_degree);
    std::size_t cells = 0;
    for (const auto& row : gwcp3::golden_rows())
        if (row.degree <= cfg.max_degree) ++cells;
    if (diffs.empty()) {
        std::cout << "verify: all " << cells << " cells match through degree "
                  << cfg.max_degree << "\n";
        return 0;
    }
    std::cout << "verify: " << diffs.size() << " mismatching column(s)\n";
    std::cout << "degree (a,b) column expected actual\n";
    for (const auto& d : diffs)
        std::cout << d.degree << " (" << d.a << "," << d.b << ") " << d.column << " "
                  << d.expected << " " << d.actual << "\n";
    return 3;
}

int cmd_crosscheck(const RunConfig& cfg) {
    auto table = make_table(cfg);
    bool bad = false;
    for (int n = 1; n <= cfg.max_degree; ++n) {
        auto rows = gwcp3::cross_check(table, n, cfg.workers);
        if (rows.empty()) {
            std::cout << "degree " << n << ": no overlap cells\n";
            continue;
        }
        for (const auto& r : rows) {
            if (!r.difference.is_zero()) bad = true;
            if (cfg.verbose || !r.difference.is_zero())
                std::cout << "degree " << n << " cell (" << r.a << "," << r.b
                          << "): A = " << r.rel_a.str() << ", B = " << r.rel_b.str()
                          << ", difference = " << r.difference.str() << "\n";
        }
        std::cout << "degree " << n << ": " << rows.size() << " overlap cell(s) checked\n";
    }
    std::cout << (bad ? "crosscheck: FAILED\n" : "crosscheck: all differences exactly 0\n");
    return bad ? 3 : 0;
}

int cmd_export(const RunConfig& cfg) {
    auto table = make_table(cfg);
    if (!cfg.cache_path.empty()) table.save(cfg.cache_path);
    auto filtered = genus_filtered(table, cfg.genus);
    std::ostringstream out;
    if (cfg.format == "csv") filtered.write_csv(out);
    else if (cfg.format == "json") filtered.write_json(out);
    else gwcp3::write_combined_markdown(out, table, cfg.max_degree);
    return write_output(cfg, out.str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Gromov-Witten invariants of CP^3: rational counts via WDVV, "
                 "elliptic counts via recursion"};
    app.require_subcommand(1);

    RunConfig cfg;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--max-degree", cfg.max_degree, "highest curve degree (default 5)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--genus", cfg.genus, "genus selection (default both)")
            ->check(CLI::IsMember({"0", "1", "both"}));
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"csv", "json", "md"}));
        sub->add_option("--out", cfg.out_path, "write output to file instead of stdout");
        sub->add_option("--cache", cfg.cache_path, "table cache file (read if present, else written)");
        sub->add_option("--workers", cfg.workers, "worker threads (default 1)")
            ->check(CLI::PositiveNumber);
        sub->add_flag("--verbose", cfg.verbose, "chatty diagnostics");
    };

    auto* compute = app.add_subcommand("compute", "solve and print the invariant table");
    auto* verify = app.add_subcommand("verify", "recompute and diff against the built-in reference");
    auto* crosscheck = app.add_subcommand("crosscheck", "evaluate both recursions on overlap cells");
    auto* exp = app.add_subcommand("export", "write cache/CSV/JSON artifacts");
    for (auto* sub : {compute, verify, crosscheck, exp}) add_common(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 1;
    }

    try {
        if (app.got_subcommand(compute)) return cmd_compute(cfg);
        if (app.got_subcommand(verify)) return cmd_verify(cfg);
        if (app.got_subcommand(crosscheck)) return cmd_crosscheck(cfg);
        return cmd_export(cfg);
    } catch (const gwcp3::SolverError& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return 2;
    } catch (const gwcp3::ConsistencyViolation& e) {
        std::cerr << "consistency violation: " << e.what() << "\n";
        return 2;
    } catch (const gwcp3::MalformedFile& e) {
        std::cerr << "file error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
