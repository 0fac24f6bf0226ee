#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "isacnet/core.hpp"
#include "isacnet/rng.hpp"

namespace isacnet {

// BS deployment sampler around the origin.
//   ppp:       N ~ Poisson(lambda_b * pi * (D^2 - r_ex^2)), points uniform on
//              the annulus [r_ex, D].
//   fixed_n:   exactly n_override points uniform on the annulus.
//   nearest_n: the n_override nearest points of an unbounded PPP outside the
//              exclusion disk (squared distances have exact Gamma increments);
//              this is the geometry the large-N scaling laws are stated for.
struct DeploymentSpec {
    enum class Mode { ppp, fixed_n, nearest_n };
    Mode mode = Mode::ppp;
    double lambda_b = 12.5e-6;   // m^-2
    double coop_radius_d = 100.0; // m
    int n_override = 0;          // required for fixed_n / nearest_n
    double exclusion_radius = 1.0; // m, guards the d -> 0 pathloss divergence
};

inline void check_deployment(const DeploymentSpec& s) {
    if (!(s.lambda_b > 0)) throw std::invalid_argument("DeploymentSpec: lambda_b must be > 0");
    if (s.mode != DeploymentSpec::Mode::nearest_n) {
        if (!(s.coop_radius_d > 0)) throw std::invalid_argument("DeploymentSpec: coop_radius_d must be > 0");
        if (!(s.exclusion_radius < s.coop_radius_d))
            throw std::invalid_argument("DeploymentSpec: exclusion_radius must be < coop_radius_d");
    }
    if (s.mode != DeploymentSpec::Mode::ppp && s.n_override < 1)
        throw std::invalid_argument("DeploymentSpec: n_override >= 1 required");
    if (s.exclusion_radius < 0) throw std::invalid_argument("DeploymentSpec: exclusion_radius must be >= 0");
}

// Deterministic given (spec, seed). Distances follow the pdf proportional to
// r on the annulus (r^2 uniform); bearings uniform on [0, 2pi).
inline NetworkRealization sample_realization(const DeploymentSpec& spec, std::uint64_t seed) {
    check_deployment(spec);
    auto rng = substream_engine(seed, 0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    NetworkRealization out;
    const double rex2 = spec.exclusion_radius * spec.exclusion_radius;

    int n = 0;
    if (spec.mode == DeploymentSpec::Mode::ppp) {
        const double area = kPi * (spec.coop_radius_d * spec.coop_radius_d - rex2);
        std::poisson_distribution<int> pois(spec.lambda_b * area);
        n = pois(rng);
    } else {
        n = spec.n_override;
    }
    out.distances.reserve(n);
    out.bearings.reserve(n);

    if (spec.mode == DeploymentSpec::Mode::nearest_n) {
        // squared distances beyond the exclusion disk: cumulative Exp(1/(lambda pi))
        std::exponential_distribution<double> expd(spec.lambda_b * kPi);
        double r2 = rex2;
        for (int i = 0; i < n; ++i) {
            r2 += expd(rng);
            out.distances.push_back(std::sqrt(r2));
        }
    } else {
        const double d2 = spec.coop_radius_d * spec.coop_radius_d;
        for (int i = 0; i < n; ++i) {
            const double r2 = rex2 + unit(rng) * (d2 - rex2);
            out.distances.push_back(std::sqrt(r2));
        }
    }
    for (int i = 0; i < n; ++i) out.bearings.push_back(unit(rng) * 2.0 * kPi);
    return out;
}

// Expected distance from the n-th closest BS of a PPP to the origin:
// Gamma(n + 1/2) / (sqrt(lambda pi) Gamma(n)), with the sqrt(n/(lambda pi))
// approximation selected by flag.
inline double nth_nearest_mean_distance(int n, double lambda_b, bool approximate = false) {
    if (n < 1) throw std::invalid_argument("nth_nearest_mean_distance: n >= 1 required");
    if (!(lambda_b > 0)) throw std::invalid_argument("nth_nearest_mean_distance: lambda_b must be > 0");
    if (approximate) return std::sqrt(static_cast<double>(n) / (lambda_b * kPi));
    return std::exp(std::lgamma(n + 0.5) - std::lgamma(static_cast<double>(n))) /
           std::sqrt(lambda_b * kPi);
}

// Rayleigh-type nearest-BS distance density f(r) = 2 pi lambda r exp(-pi lambda r^2).
inline double nearest_distance_pdf(double r, double lambda_b) {
    if (r < 0) return 0.0;
    return 2.0 * kPi * lambda_b * r * std::exp(-kPi * lambda_b * r * r);
}

} // namespace isacnet
