#pragma once

#include <cstdlib>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "isacnet/core.hpp"
#include "isacnet/fim.hpp"
#include "isacnet/geometry.hpp"
#include "isacnet/rng.hpp"

namespace isacnet {

// Thread count resolution: explicit > ISAC_NETSIM_THREADS > hardware.
inline int resolve_threads(int requested = 0) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("ISAC_NETSIM_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Static block partition; body(i) must depend only on i so results are
// schedule-independent.
template <class F>
inline void parallel_for(std::int64_t n, int threads, F&& body) {
    threads = resolve_threads(threads);
    if (threads <= 1 || n < 2048) {
        for (std::int64_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    const std::int64_t chunk = (n + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        const std::int64_t lo = t * chunk;
        const std::int64_t hi = std::min<std::int64_t>(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &body] {
            for (std::int64_t i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& th : pool) th.join();
}

// Deterministic pairwise reduction (fixed tree, independent of thread count).
inline double pairwise_sum(std::span<const double> v) {
    if (v.size() <= 32) {
        double s = 0.0;
        for (double x : v) s += x;
        return s;
    }
    const std::size_t half = v.size() / 2;
    return pairwise_sum(v.subspan(0, half)) + pairwise_sum(v.subspan(half));
}

struct MeanResult {
    double mean = 0.0;
    double std_error = 0.0;
};

inline MeanResult mean_and_se(std::span<const double> v) {
    if (v.empty()) return {0.0, 0.0};
    const double n = static_cast<double>(v.size());
    const double m = pairwise_sum(v) / n;
    std::vector<double> sq(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double d = v[i] - m;
        sq[i] = d * d;
    }
    const double var = v.size() > 1 ? pairwise_sum(sq) / (n - 1.0) : 0.0;
    return {m, std::sqrt(var / n)};
}

// Expected CRLB / GDoP estimate. `estimate` is the per-trial mean of
// tr(F^-1) over localizable (finite) trials; `moment_ratio` is
// E[adjugate trace] / E[det], the quantity the closed-form approximations
// are derived for (their numerator and denominator expectations are taken
// separately). Both are reported; infinite trials are counted separately.
struct McCrlbResult {
    McEstimate estimate;
    double moment_ratio = 0.0;
    double singular_fraction = 0.0;
    std::int64_t finite_trials = 0;
    bool defined = true; // false when every trial was singular
};

namespace detail {

template <class FimOfTrial>
inline McCrlbResult mc_trace_inverse(FimOfTrial&& fim_of, std::int64_t trials,
                                     std::uint64_t seed, int threads) {
    std::vector<double> tr(trials), num(trials), den(trials);
    std::vector<char> finite(trials);
    parallel_for(trials, threads, [&](std::int64_t t) {
        const Fim2 f = fim_of(static_cast<std::uint64_t>(t));
        num[t] = f.trace();
        den[t] = f.det();
        const double ti = trace_inverse(f);
        finite[t] = std::isfinite(ti) ? 1 : 0;
        tr[t] = finite[t] ? ti : 0.0;
    });
    std::vector<double> fin;
    fin.reserve(trials);
    for (std::int64_t t = 0; t < trials; ++t)
        if (finite[t]) fin.push_back(tr[t]);

    McCrlbResult out;
    out.finite_trials = static_cast<std::int64_t>(fin.size());
    out.singular_fraction = 1.0 - static_cast<double>(out.finite_trials) / trials;
    out.defined = !fin.empty();
    const auto ms = mean_and_se(fin);
    out.estimate = {ms.mean, ms.std_error, trials, seed};
    const double dsum = pairwise_sum(den);
    out.moment_ratio = dsum > 0 ? pairwise_sum(num) / dsum : kInf;
    if (!out.defined) out.estimate.mean = kInf;
    return out;
}

} // namespace detail

// Monte Carlo expected CRLB over deployments; deterministic given seed
// (per-trial substreams, fixed reduction tree).
inline McCrlbResult mc_expected_crlb(SensingMode mode, const DeploymentSpec& spec,
                                     const SystemParams& params, std::int64_t trials,
                                     std::uint64_t seed, int threads = 0) {
    check_deployment(spec);
    return detail::mc_trace_inverse(
        [&](std::uint64_t t) {
            const auto r = sample_realization(spec, mix_seed(seed, t));
            if (r.n() == 0) return Fim2{}; // singular: no BS in range
            return fim_for_mode(mode, r, params);
        },
        trials, seed, threads);
}

// Monte Carlo expected GDoP: bearings uniform, unit distances.
inline McCrlbResult mc_expected_gdop(SensingMode mode, int n, std::int64_t trials,
                                     std::uint64_t seed, int threads = 0) {
    if (n < 1) throw std::invalid_argument("mc_expected_gdop: n >= 1 required");
    return detail::mc_trace_inverse(
        [&](std::uint64_t t) {
            auto rng = substream_engine(seed, t);
            std::uniform_real_distribution<double> unit(0.0, 1.0);
            NetworkRealization r;
            r.distances.assign(n, 1.0);
            r.bearings.resize(n);
            for (int i = 0; i < n; ++i) r.bearings[i] = unit(rng) * 2.0 * kPi;
            return gdop_matrix(mode, r);
        },
        trials, seed, threads);
}

} // namespace isacnet
