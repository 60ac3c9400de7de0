// hamcount: exact and asymptotic counting of Smirnov color-words and
// Hamiltonian paths/cycles in complete multipartite graphs.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hamcount/asymptotics.hpp"
#include "hamcount/cache.hpp"
#include "hamcount/composition.hpp"
#include "hamcount/count.hpp"
#include "hamcount/exact.hpp"
#include "hamcount/oracle.hpp"
#include "hamcount/table.hpp"
#include "hamcount/verify.hpp"

namespace {

using namespace hamcount;

constexpr int kExitUsage = 1;
constexpr int kExitInconsistent = 2;

Strategy parse_strategy(const std::string& s) {
    if (s == "closed") return Strategy::Closed;
    if (s == "recurrence") return Strategy::Recurrence;
    if (s == "auto") return Strategy::Auto;
    throw CLI::ValidationError("--strategy must be closed|recurrence|auto");
}

std::string strategy_name(Strategy s) {
    switch (s) {
        case Strategy::Closed: return "closed";
        case Strategy::Recurrence: return "recurrence";
        default: return "auto";
    }
}

struct PartsArgs {
    std::string parts_str;
    int m = 0, n = 0;

    Composition resolve() const {
        if (!parts_str.empty()) return Composition::parse(parts_str);
        if (m >= 1 && n >= 1) return Composition(std::vector<int>(static_cast<size_t>(m), n));
        throw CLI::ValidationError("need --parts or the uniform shorthand --m/--n");
    }
};

void add_parts_options(CLI::App* cmd, PartsArgs& args) {
    cmd->add_option("--parts", args.parts_str, "comma-separated part sizes, e.g. 3,3,4");
    cmd->add_option("--m", args.m, "uniform shorthand: number of parts");
    cmd->add_option("--n", args.n, "uniform shorthand: size of each part");
}

std::optional<std::string> cache_path(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("HAMCOUNT_CACHE")) return std::string(env);
    return std::nullopt;
}

void parse_range(const std::string& s, int& lo, int& hi) {
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        lo = hi = std::stoi(s);
    } else {
        lo = std::stoi(s.substr(0, dots));
        hi = std::stoi(s.substr(dots + 2));
    }
    if (lo < 1 || hi < lo) throw CLI::ValidationError("bad range: " + s);
}

int run_count(const PartsArgs& pargs, const std::string& object, int ep_s, int ep_r,
              Strategy strategy, const std::string& cache_flag, bool no_cache, bool verbose) {
    Composition parts = pargs.resolve();
    auto t0 = std::chrono::steady_clock::now();

    Count value(0ul);
    std::string kind;
    std::optional<std::pair<int, int>> endpoints;
    if (object == "smirnov-endpoint") {
        if (ep_s < 1 || ep_r < 1)
            throw CLI::ValidationError("smirnov-endpoint needs --s and --r");
        value = f_endpoint(parts, ep_s, ep_r, strategy);
        kind = "F";
        endpoints = {{ep_s, ep_r}};
    } else if (object == "smirnov-total") {
        value = s_count(parts, strategy);
        kind = "S";
    } else if (object == "admissible-words") {
        value = admissible_word_count(parts, strategy);
        kind = "W";
    } else if (object == "ham-paths") {
        value = hamiltonian_paths(parts, strategy);
        kind = "W";
    } else if (object == "ham-cycles") {
        if (ep_s || ep_r) throw CLI::ValidationError("ham-cycles takes no endpoints");
        value = hamiltonian_cycles(parts, strategy);
        kind = "H";
    } else if (object == "ham-cycles-directed") {
        value = hamiltonian_cycles_directed(parts, strategy);
        kind = "H_directed";
    } else if (object == "circular-positioned") {
        value = circular_positioned_count(parts, strategy);
        kind = "S";
    } else if (object == "necklaces") {
        value = necklace_count(parts, strategy);
        kind = "necklace";
    } else {
        throw CLI::ValidationError("unknown --object: " + object);
    }

    std::cout << value.str() << "\n";
    if (verbose) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0).count();
        std::cerr << "strategy=" << strategy_name(strategy) << " elapsed_ms=" << ms << "\n";
    }

    if (!no_cache) {
        if (auto path = cache_path(cache_flag)) {
            cache::CacheRecord rec;
            rec.kind = kind;
            rec.parts = parts.sorted_key();
            rec.endpoints = endpoints;
            rec.value = value.str();
            cache::append(*path, rec);
        }
    }
    return 0;
}

int run_table(const std::string& quantity, const std::string& m_range, const std::string& n_range,
              const std::string& format, double budget, unsigned workers, Strategy strategy) {
    table::TableRequest req;
    if (quantity == "S") req.quantity = table::Quantity::S;
    else if (quantity == "H") req.quantity = table::Quantity::H;
    else throw CLI::ValidationError("--quantity must be S or H");
    parse_range(m_range, req.m_lo, req.m_hi);
    parse_range(n_range, req.n_lo, req.n_hi);
    if (format == "text") req.format = table::Format::Text;
    else if (format == "csv") req.format = table::Format::Csv;
    else if (format == "json") req.format = table::Format::Json;
    else throw CLI::ValidationError("--format must be text|csv|json");
    req.budget_seconds = budget;
    req.workers = workers;
    req.strategy = strategy;

    auto result = table::generate(req);
    auto cell = [&](int i, int j) -> std::string {
        const auto& v = result.grid[static_cast<size_t>(i)][static_cast<size_t>(j)];
        return v ? *v : std::string("?");
    };

    if (req.format == table::Format::Json) {
        nlohmann::json j;
        for (int i = 0; i <= req.m_hi - req.m_lo; ++i) {
            nlohmann::json row;
            for (int jj = 0; jj <= req.n_hi - req.n_lo; ++jj) {
                const auto& v = result.grid[static_cast<size_t>(i)][static_cast<size_t>(jj)];
                if (v) row[std::to_string(req.n_lo + jj)] = *v;
            }
            j[std::to_string(req.m_lo + i)] = row;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        const char sep = req.format == table::Format::Csv ? ',' : '\t';
        std::cout << "m\\n";
        for (int n = req.n_lo; n <= req.n_hi; ++n) std::cout << sep << n;
        std::cout << "\n";
        for (int i = 0; i <= req.m_hi - req.m_lo; ++i) {
            std::cout << (req.m_lo + i);
            for (int jj = 0; jj <= req.n_hi - req.n_lo; ++jj) std::cout << sep << cell(i, jj);
            std::cout << "\n";
        }
    }
    if (!result.complete) {
        std::cerr << "error: time budget exceeded; output is partial\n";
        return kExitUsage;
    }
    return 0;
}

int run_verify(int max_n, int max_m, unsigned workers) {
    auto results = verify::run_all(max_n, max_m, workers);
    bool all_ok = true;
    for (const auto& r : results) {
        std::cout << (r.passed() ? "PASS" : "FAIL") << "  " << r.name
                  << "  (" << r.checked << " compositions";
        if (!r.passed())
            std::cout << ", " << r.failures << " failures, first: " << r.first_counterexample;
        std::cout << ")\n";
        all_ok = all_ok && r.passed();
    }
    std::cout << (all_ok ? "all suites pass" : "FAILURES detected") << "\n";
    return all_ok ? 0 : kExitInconsistent;
}

int run_asympt(const PartsArgs& pargs, const std::string& variant, bool calibrate,
               const std::string& n_range, const std::string& out_path) {
    using namespace hamcount::asympt;
    std::cout << std::setprecision(12);

    if (!pargs.parts_str.empty()) {
        Composition parts = Composition::parse(pargs.parts_str);
        Count exact = hamiltonian_cycles(parts);
        double est = nonuniform_log_estimate(parts);
        std::cout << "exact H = " << exact.str() << "\n";
        std::cout << "nonuniform log estimate = " << est << "\n";
        if (!exact.is_zero()) {
            auto rep = error_report(exact, est);
            std::cout << "log exact = " << rep.exact_log
                      << "  abs_log_error = " << rep.abs_log_error;
            if (rep.relative_defined) std::cout << "  rel_log_error = " << rep.rel_log_error;
            std::cout << "\n";
        }
        return 0;
    }

    if (pargs.m < 1) throw CLI::ValidationError("need --m (and --n) or --parts");

    std::vector<Variant> variants;
    if (variant == "paper") variants = {Variant::Paper};
    else if (variant == "alternative") variants = {Variant::Alternative};
    else if (variant == "both") variants = {Variant::Paper, Variant::Alternative};
    else throw CLI::ValidationError("--variant must be paper|alternative|both");

    if (calibrate) {
        int lo = 4, hi = 7;
        if (!n_range.empty()) parse_range(n_range, lo, hi);
        std::vector<std::pair<unsigned long, double>> pts;
        for (int n = lo; n <= hi; ++n) {
            Composition c(std::vector<int>(static_cast<size_t>(pargs.m), n));
            pts.emplace_back(static_cast<unsigned long>(n), hamiltonian_cycles(c).log_natural());
        }
        double c_m = fit_compact_constant(pargs.m, pts);
        std::cout << "fitted C_m for m=" << pargs.m << " over n=" << lo << ".." << hi
                  << ": " << c_m << "\n";
        nlohmann::json j;
        {
            std::ifstream in(out_path);
            if (in) { try { in >> j; } catch (...) { j = nlohmann::json::object(); } }
        }
        j["C_m"][std::to_string(pargs.m)] = c_m;
        std::ofstream out(out_path);
        out << j.dump(2) << "\n";
        std::cout << "stored in " << out_path << "\n";
        return 0;
    }

    if (pargs.n < 1) throw CLI::ValidationError("need --n with --m");
    Composition c(std::vector<int>(static_cast<size_t>(pargs.m), pargs.n));
    Count exact = hamiltonian_cycles(c);
    std::cout << "exact H_" << pargs.m << "(" << pargs.n << ") = " << exact.str() << "\n";
    double exact_log = exact.is_zero() ? 0.0 : exact.log_natural();
    if (!exact.is_zero()) std::cout << "log exact = " << exact_log << "\n";
    for (Variant v : variants) {
        auto est = h_asymptotic(pargs.m, static_cast<unsigned long>(pargs.n), v);
        std::cout << variant_name(v) << ": log estimate = " << est.log_value;
        if (!exact.is_zero()) {
            auto rep = error_report(exact, est);
            std::cout << "  abs_log_error = " << rep.abs_log_error;
            if (rep.relative_defined) std::cout << "  rel_log_error = " << rep.rel_log_error;
        }
        std::cout << "\n";
    }
    if (pargs.m >= 3) {
        std::cout << "master expansion = " << log_h_expansion(pargs.m, static_cast<unsigned long>(pargs.n)) << "\n";
        std::cout << "ratio estimate R_" << pargs.m << "(" << pargs.n << ") = "
                  << ratio_estimate(pargs.m, static_cast<unsigned long>(pargs.n)) << "\n";
    }
    return 0;
}

int run_bench(const PartsArgs& pargs) {
    Composition parts = pargs.resolve();
    for (Strategy s : {Strategy::Closed, Strategy::Recurrence}) {
        auto t0 = std::chrono::steady_clock::now();
        Count v = s_count(parts, s);
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0).count();
        std::cout << strategy_name(s) << ": S(" << parts.str() << ") = " << v.str()
                  << "  elapsed_ms=" << ms << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact enumeration of Smirnov color-words and Hamiltonian cycles in complete multipartite graphs"};
    app.require_subcommand(1);

    std::string strategy_str = "auto";
    app.add_option("--strategy", strategy_str, "closed|recurrence|auto")->capture_default_str();

    // count
    auto* count_cmd = app.add_subcommand("count", "compute one exact count");
    PartsArgs count_parts;
    add_parts_options(count_cmd, count_parts);
    std::string object = "ham-cycles";
    int ep_s = 0, ep_r = 0;
    std::string cache_flag;
    bool no_cache = false, verbose = false;
    count_cmd->add_option("--object", object,
                          "smirnov-endpoint|smirnov-total|admissible-words|ham-paths|ham-cycles|"
                          "ham-cycles-directed|circular-positioned|necklaces")->capture_default_str();
    count_cmd->add_option("--s", ep_s, "first-letter color (smirnov-endpoint)");
    count_cmd->add_option("--r", ep_r, "last-letter color (smirnov-endpoint)");
    count_cmd->add_option("--cache", cache_flag, "cache file path (or HAMCOUNT_CACHE)");
    count_cmd->add_flag("--no-cache", no_cache, "disable the result cache");
    count_cmd->add_flag("--verbose", verbose, "print strategy and timing to stderr");

    // table
    auto* table_cmd = app.add_subcommand("table", "generate an S or H value grid");
    std::string quantity = "S", m_range = "1..5", n_range = "1..7", format = "text";
    double budget = 300.0;
    unsigned workers = 0;
    table_cmd->add_option("--quantity", quantity, "S|H")->capture_default_str();
    table_cmd->add_option("--m", m_range, "m range, e.g. 1..5")->capture_default_str();
    table_cmd->add_option("--n", n_range, "n range, e.g. 1..7")->capture_default_str();
    table_cmd->add_option("--format", format, "text|csv|json")->capture_default_str();
    table_cmd->add_option("--budget", budget, "time budget in seconds (or HAMCOUNT_BUDGET)");
    table_cmd->add_option("--workers", workers, "worker pool size (0 = auto)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run oracle and invariant sweeps");
    int max_n = 9, max_m = 4;
    unsigned vworkers = 0;
    verify_cmd->add_option("--max-n", max_n, "largest composition total")->capture_default_str();
    verify_cmd->add_option("--max-m", max_m, "largest number of parts")->capture_default_str();
    verify_cmd->add_option("--workers", vworkers, "worker pool size (0 = auto)");

    // asympt
    auto* asympt_cmd = app.add_subcommand("asympt", "asymptotic estimates vs exact counts");
    PartsArgs asympt_parts;
    add_parts_options(asympt_cmd, asympt_parts);
    std::string variant = "both", cal_range, cal_out = "calibration.json";
    bool calibrate = false;
    asympt_cmd->add_option("--variant", variant, "paper|alternative|both")->capture_default_str();
    asympt_cmd->add_flag("--calibrate", calibrate, "fit the compact-form constant C_m");
    asympt_cmd->add_option("--n-range", cal_range, "fit range, e.g. 4..7");
    asympt_cmd->add_option("--out", cal_out, "calibration results file")->capture_default_str();

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "time both exact strategies");
    PartsArgs bench_parts;
    add_parts_options(bench_cmd, bench_parts);

    try {
        app.parse(argc, argv);
        Strategy strategy = parse_strategy(strategy_str);
        if (*table_cmd && table_cmd->count("--budget") == 0) {
            if (const char* env = std::getenv("HAMCOUNT_BUDGET")) budget = std::stod(env);
        }
        if (*count_cmd)
            return run_count(count_parts, object, ep_s, ep_r, strategy, cache_flag, no_cache, verbose);
        if (*table_cmd)
            return run_table(quantity, m_range, n_range, format, budget, workers, strategy);
        if (*verify_cmd) return run_verify(max_n, max_m, vworkers);
        if (*asympt_cmd) return run_asympt(asympt_parts, variant, calibrate, cal_range, cal_out);
        if (*bench_cmd) return run_bench(bench_parts);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    } catch (const hamcount::InternalInconsistency& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return kExitInconsistent;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
