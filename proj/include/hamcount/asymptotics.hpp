#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "hamcount/composition.hpp"
#include "hamcount/count.hpp"

namespace hamcount::asympt {

// Two adjacency-avoidance factors are in circulation: the stated
// (1 - 1/(m-1)) form and the probabilistic (1 - 1/m) form. Both are
// first-class; the artifact measures rather than adjudicates.
enum class Variant { Paper, Alternative };

inline std::string variant_name(Variant v) {
    return v == Variant::Paper ? "paper" : "alternative";
}

struct LogEstimate {
    double log_value = 0.0;
    Variant variant = Variant::Paper;
    int m = 0;
    int n = 0;
};

struct ErrorReport {
    double exact_log = 0.0;
    double abs_log_error = 0.0;
    double rel_log_error = 0.0;  // defined when exact > 1
    bool relative_defined = false;
};

// k log k - k + (1/2) log(2 pi k); within 1/(12k) of log k!.
inline double stirling_log_factorial(unsigned long k) {
    if (k == 0) throw std::domain_error("stirling_log_factorial needs k >= 1");
    double kd = static_cast<double>(k);
    return kd * std::log(kd) - kd + 0.5 * std::log(2.0 * std::numbers::pi * kd);
}

inline double exact_log_factorial(unsigned long k) {
    return k == 0 ? 0.0 : factorial(k).log_natural();
}

inline double avoidance_log(int m, Variant variant) {
    if (variant == Variant::Paper) {
        if (m < 3) throw std::domain_error("paper variant needs m >= 3 (factor vanishes at m = 2)");
        return std::log1p(-1.0 / (m - 1));
    }
    if (m < 2) throw std::domain_error("avoidance factor needs m >= 2");
    return std::log1p(-1.0 / m);
}

// log of m(m-1) T_m(n) rho^{mn-1}, with T_m(n) = (mn)!/(n!)^m.
inline LogEstimate s_asymptotic(int m, unsigned long n, Variant variant,
                                bool use_stirling = false) {
    if (n == 0) throw std::domain_error("n must be positive");
    auto lf = use_stirling ? stirling_log_factorial : exact_log_factorial;
    unsigned long mn = static_cast<unsigned long>(m) * n;
    double log_t = lf(mn) - static_cast<double>(m) * lf(n);
    double v = std::log(static_cast<double>(m) * (m - 1)) + log_t +
               (static_cast<double>(mn) - 1.0) * avoidance_log(m, variant);
    return {v, variant, m, static_cast<int>(n)};
}

// log of ((m-1)(mn)!/(2n)) rho^{mn-1}.
inline LogEstimate h_asymptotic(int m, unsigned long n, Variant variant,
                                bool use_stirling = false) {
    if (n == 0) throw std::domain_error("n must be positive");
    auto lf = use_stirling ? stirling_log_factorial : exact_log_factorial;
    unsigned long mn = static_cast<unsigned long>(m) * n;
    double v = std::log(static_cast<double>(m - 1)) - std::log(2.0 * static_cast<double>(n)) +
               lf(mn) + (static_cast<double>(mn) - 1.0) * avoidance_log(m, variant);
    return {v, variant, m, static_cast<int>(n)};
}

// Master expansion: mn log n + n[m log m + m log(1 - 1/(m-1)) - m] - log(2mn).
inline double log_h_expansion(int m, unsigned long n) {
    if (m < 3) throw std::domain_error("expansion needs m >= 3");
    if (n == 0) throw std::domain_error("n must be positive");
    double md = static_cast<double>(m), nd = static_cast<double>(n);
    double bracket = md * std::log(md) + md * std::log1p(-1.0 / (md - 1.0)) - md;
    return md * nd * std::log(nd) + nd * bracket - std::log(2.0 * md * nd);
}

// mn log n + n log(m!) - log(2mn) - n + c_m, with c_m a fitted constant.
inline double compact_log_form(int m, unsigned long n, double c_m) {
    if (m < 3) throw std::domain_error("compact form needs m >= 3");
    if (n == 0) throw std::domain_error("n must be positive");
    double md = static_cast<double>(m), nd = static_cast<double>(n);
    return md * nd * std::log(nd) + nd * exact_log_factorial(static_cast<unsigned long>(m)) -
           std::log(2.0 * md * nd) - nd + c_m;
}

// Approximation to the growth ratio H_m(n+1)/H_m(n):
// prod_{k=1..m}(mn+k) * n/(n+1) * (1 - 1/(m-1))^m.
inline double ratio_estimate(int m, unsigned long n) {
    if (m < 3) throw std::domain_error("ratio estimate needs m >= 3");
    if (n == 0) throw std::domain_error("n must be positive");
    double prod = 1.0;
    for (int k = 1; k <= m; ++k)
        prod *= static_cast<double>(static_cast<unsigned long>(m) * n + static_cast<unsigned long>(k));
    double nd = static_cast<double>(n);
    return prod * (nd / (nd + 1.0)) * std::pow(1.0 - 1.0 / (m - 1), m);
}

// Proportion heuristic for the nonuniform case:
// log H ~ log(N!/(2N)) + sum log n_i! + (N-1) log(1 - sum p_i^2).
inline double nonuniform_log_estimate(const Composition& parts) {
    const int N = parts.total();
    double sum_sq = 0.0;
    for (int p : parts.parts()) {
        double pi = static_cast<double>(p) / N;
        sum_sq += pi * pi;
    }
    if (sum_sq >= 1.0) throw std::domain_error("proportion heuristic undefined: sum p_i^2 >= 1");
    double v = exact_log_factorial(static_cast<unsigned long>(N)) - std::log(2.0 * N);
    for (int p : parts.parts()) v += exact_log_factorial(static_cast<unsigned long>(p));
    v += (static_cast<double>(N) - 1.0) * std::log1p(-sum_sq);
    return v;
}

inline ErrorReport error_report(const Count& exact, double estimate_log) {
    ErrorReport rep;
    if (exact.is_zero()) throw std::domain_error("error report needs a positive exact count");
    rep.exact_log = exact.log_natural();
    rep.abs_log_error = std::fabs(rep.exact_log - estimate_log);
    if (Count(2ul) <= exact) {
        rep.rel_log_error = rep.abs_log_error / rep.exact_log;
        rep.relative_defined = true;
    }
    return rep;
}

inline ErrorReport error_report(const Count& exact, const LogEstimate& est) {
    return error_report(exact, est.log_value);
}

// Least-squares fit of the additive constant c_m over an n range,
// against exact log values supplied by the caller.
inline double fit_compact_constant(int m, const std::vector<std::pair<unsigned long, double>>& exact_logs) {
    if (exact_logs.empty()) throw std::invalid_argument("need at least one (n, log exact) point");
    double sum = 0.0;
    for (auto [n, lg] : exact_logs) sum += lg - compact_log_form(m, n, 0.0);
    return sum / static_cast<double>(exact_logs.size());
}

}  // namespace hamcount::asympt
