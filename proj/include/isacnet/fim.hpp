#pragma once

#include <cmath>
#include <stdexcept>

#include "isacnet/core.hpp"

namespace isacnet {

enum class SensingMode { aoa, tof, hybrid, aoa_oriented };

// Relative determinant threshold separating genuine rank deficiency
// (collinear geometry, single-BS AOA/TOF) from float noise.
inline constexpr double kSingularRelThreshold = 1e-12;

// Closed 2x2 form tr(F^-1) = (f11 + f22) / (f11 f22 - f12^2); +inf when the
// matrix is singular at the relative threshold. Infinity is a value here.
inline double trace_inverse(const Fim2& f, double rel_threshold = kSingularRelThreshold) {
    const double tr = f.trace();
    const double det = f.det();
    if (!(det > rel_threshold * tr * tr)) return kInf;
    return tr / det;
}

// Two-way link SNR gamma_{i,j} = sigma p_s gamma_0 / (d_i^beta d_j^beta).
inline double link_snr(int i, int j, const NetworkRealization& r, const SystemParams& p) {
    const double di = r.distances.at(i);
    const double dj = r.distances.at(j);
    return p.rcs_sigma * p.p_s * p.gamma_0 /
           (std::pow(di, p.beta) * std::pow(dj, p.beta));
}

// AOA error variance of link (i,j), rad^2: 1 / (|zeta_a|^2 cos^2(theta_i)
// d_i^-beta d_j^-beta); +inf when the bearing is orthogonal to the array
// (that link carries no AOA information).
inline double aoa_variance(int i, int j, const NetworkRealization& r, const SystemParams& p) {
    const double c = std::cos(r.bearings.at(i));
    const double za = zeta_a_sq(p);
    if (za <= 0) return kInf;
    const double w = std::pow(r.distances.at(i), -p.beta) * std::pow(r.distances.at(j), -p.beta);
    const double denom = za * c * c * w;
    if (denom <= 0) return kInf;
    return 1.0 / denom;
}

// Bistatic range error variance of link (i,j), m^2:
// 1 / (|zeta_r|^2 d_i^-beta d_j^-beta).
inline double tof_variance(int i, int j, const NetworkRealization& r, const SystemParams& p) {
    const double zr = zeta_r_sq(p);
    if (zr <= 0) return kInf;
    const double w = std::pow(r.distances.at(i), -p.beta) * std::pow(r.distances.at(j), -p.beta);
    return 1.0 / (zr * w);
}

namespace detail {

struct TrigSums {
    // weighted by w_i = d_i^-beta (or 1 for geometry-only matrices)
    double w = 0, wc = 0, ws = 0, wc2 = 0, ws2 = 0, wcs = 0;
    // weighted by v_i = d_i^-beta-2 (AOA inner sums, cos^2 factored in)
    double vc2s2 = 0, vc3s = 0, vc4 = 0;
};

template <bool WithDistances>
inline TrigSums trig_sums(const NetworkRealization& r, double beta) {
    TrigSums t;
    const int n = r.n();
    for (int i = 0; i < n; ++i) {
        const double c = std::cos(r.bearings[i]);
        const double s = std::sin(r.bearings[i]);
        double w = 1.0, v = 1.0;
        if constexpr (WithDistances) {
            const double d = r.distances[i];
            w = std::pow(d, -beta);
            v = w / (d * d);
        }
        t.w += w;
        t.wc += w * c;
        t.ws += w * s;
        t.wc2 += w * c * c;
        t.ws2 += w * s * s;
        t.wcs += w * c * s;
        t.vc2s2 += v * c * c * s * s;
        t.vc3s += v * c * c * c * s;
        t.vc4 += v * c * c * c * c;
    }
    return t;
}

// AOA information: (sum_j w_j) * sum_i v_i cos^2(theta_i) [[s^2, -sc], [-sc, c^2]].
inline Fim2 fim_aoa_from(const TrigSums& t, double gain) {
    return Fim2{gain * t.w * t.vc2s2, -gain * t.w * t.vc3s, gain * t.w * t.vc4};
}

// TOF information with a_{ij} = c_i + c_j, b_{ij} = s_i + s_j expanded into
// separable single sums (O(N) instead of the literal O(N^2) double sum).
inline Fim2 fim_tof_from(const TrigSums& t, double gain) {
    return Fim2{gain * 2.0 * (t.w * t.wc2 + t.wc * t.wc),
                gain * 2.0 * (t.w * t.wcs + t.wc * t.ws),
                gain * 2.0 * (t.w * t.ws2 + t.ws * t.ws)};
}

} // namespace detail

// F_A = |zeta_a|^2 sum_j sum_i cos^2(theta_i) d_j^-beta d_i^-beta-2
//       [[sin^2, -sin cos], [-sin cos, cos^2]](theta_i)
inline Fim2 fim_aoa(const NetworkRealization& r, const SystemParams& p) {
    const auto t = detail::trig_sums<true>(r, p.beta);
    return detail::fim_aoa_from(t, zeta_a_sq(p));
}

// F_R = |zeta_r|^2 sum_i sum_j d_i^-beta d_j^-beta [[a^2, ab], [ab, b^2]]
inline Fim2 fim_tof(const NetworkRealization& r, const SystemParams& p) {
    const auto t = detail::trig_sums<true>(r, p.beta);
    return detail::fim_tof_from(t, zeta_r_sq(p));
}

// Uncorrelated AOA and TOF errors: information adds entrywise.
inline Fim2 fim_hybrid(const NetworkRealization& r, const SystemParams& p) {
    const auto t = detail::trig_sums<true>(r, p.beta);
    return detail::fim_aoa_from(t, zeta_a_sq(p)) + detail::fim_tof_from(t, zeta_r_sq(p));
}

// Geometry-only matrix: unit distances, unit gains. aoa_oriented drops the
// cos^2(theta_i) array-orientation factor (array steered broadside to the
// target).
inline Fim2 gdop_matrix(SensingMode mode, const NetworkRealization& r) {
    const int n = r.n();
    if (n < 1) throw std::invalid_argument("gdop_matrix: empty realization");
    const auto t = detail::trig_sums<false>(r, 0.0);
    const double nn = static_cast<double>(n);
    switch (mode) {
    case SensingMode::aoa:
        return detail::fim_aoa_from(t, 1.0);
    case SensingMode::aoa_oriented:
        return Fim2{nn * t.ws2, -nn * t.wcs, nn * t.wc2};
    case SensingMode::tof:
        return detail::fim_tof_from(t, 1.0);
    case SensingMode::hybrid:
        return detail::fim_aoa_from(t, 1.0) + detail::fim_tof_from(t, 1.0);
    }
    throw std::logic_error("gdop_matrix: unknown mode");
}

inline Fim2 fim_for_mode(SensingMode mode, const NetworkRealization& r, const SystemParams& p) {
    switch (mode) {
    case SensingMode::aoa: return fim_aoa(r, p);
    case SensingMode::tof: return fim_tof(r, p);
    case SensingMode::hybrid: return fim_hybrid(r, p);
    case SensingMode::aoa_oriented: break;
    }
    throw std::invalid_argument("fim_for_mode: aoa_oriented is a GDoP-only mode");
}

} // namespace isacnet
