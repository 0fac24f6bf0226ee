#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

namespace isacnet {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kEulerGamma = 0.5772156649015329;

// All scalar physical and network constants. Distances are meters, densities
// are per m^2 (configs take per-km^2 and convert once at parse time), powers
// are fractions of the normalized per-station transmit power.
struct SystemParams {
    double lambda_t = 50e-6;   // transmit antenna density, m^-2
    double lambda_r = 50e-6;   // receive antenna density, m^-2
    int m_t = 4;               // transmit antennas per BS
    int m_r = 10;              // receive antennas per BS
    double lambda_b = 12.5e-6; // BS density, m^-2 (lambda_t / m_t)
    double coop_radius_d = 100.0; // cooperation disk radius D, m
    double alpha = 4.0;        // communication pathloss exponent
    double beta = 2.0;         // sensing pathloss exponent
    double p_c = 0.5;          // communication power fraction
    double p_s = 0.5;          // sensing power fraction
    double rcs_sigma = 1.0;    // radar cross section, normalized
    double gamma_0 = 1.0;      // channel power at 1 m reference distance
    double noise_sigma_s2 = 1e-10; // sensing noise power, linear
    double bandwidth_b = 1e7;  // effective bandwidth, Hz
    double g_t = 4.0;          // transmit beamforming gain
    double speed_of_light_c = 299792458.0;

    enum class PowerMode { strict, sweep };
    PowerMode power_mode = PowerMode::strict;

    // Rescale the BS split of a fixed antenna budget: lambda_b = lambda_t/m_t,
    // m_r chosen to use the receive budget at that density.
    SystemParams with_m_t(int mt) const {
        SystemParams p = *this;
        p.m_t = mt;
        p.lambda_b = p.lambda_t / mt;
        p.m_r = std::max(1, static_cast<int>(std::floor(p.lambda_r / p.lambda_b)));
        return p;
    }
};

struct Violation {
    std::string field;
    std::string message;
};

// Every violated invariant, with offending field names; never throws.
inline std::vector<Violation> validate(const SystemParams& p) {
    std::vector<Violation> v;
    const double eps = 1e-12;
    if (!(p.lambda_t > 0)) v.push_back({"lambda_t", "lambda_t must be > 0"});
    if (!(p.lambda_r > 0)) v.push_back({"lambda_r", "lambda_r must be > 0"});
    if (!(p.lambda_b > 0)) v.push_back({"lambda_b", "lambda_b must be > 0"});
    if (p.m_t < 1) v.push_back({"m_t", "m_t must be >= 1"});
    if (p.m_r < 1) v.push_back({"m_r", "m_r must be >= 1"});
    if (p.alpha < 2.0) v.push_back({"alpha", "alpha < 2"});
    if (p.beta < 2.0) v.push_back({"beta", "beta < 2"});
    if (p.p_c < 0 || p.p_c > 1) v.push_back({"p_c", "p_c outside [0,1]"});
    if (p.p_s < 0 || p.p_s > 1) v.push_back({"p_s", "p_s outside [0,1]"});
    if (p.p_c + p.p_s > 1 + eps) v.push_back({"p_c", "p_c + p_s > 1"});
    if (p.power_mode == SystemParams::PowerMode::strict &&
        std::abs(p.p_c + p.p_s - 1.0) > 1e-9)
        v.push_back({"p_s", "strict power mode requires p_c + p_s = 1"});
    if (p.lambda_b * p.m_t > p.lambda_t * (1 + eps))
        v.push_back({"m_t", "lambda_b * m_t > lambda_t (transmit antenna budget)"});
    if (p.lambda_b * p.m_r > p.lambda_r * (1 + eps))
        v.push_back({"m_r", "lambda_b * m_r > lambda_r (receive antenna budget)"});
    if (!(p.coop_radius_d > 0)) v.push_back({"coop_radius_d", "coop_radius_d must be > 0"});
    if (!(p.rcs_sigma >= 0)) v.push_back({"rcs_sigma", "rcs_sigma must be >= 0"});
    if (!(p.gamma_0 >= 0)) v.push_back({"gamma_0", "gamma_0 must be >= 0"});
    if (!(p.noise_sigma_s2 > 0)) v.push_back({"noise_sigma_s2", "noise_sigma_s2 must be > 0"});
    if (!(p.bandwidth_b > 0)) v.push_back({"bandwidth_b", "bandwidth_b must be > 0"});
    if (!(p.g_t >= 0)) v.push_back({"g_t", "g_t must be >= 0"});
    return v;
}

// AOA system gain: pi^2/6 * M_r(M_r^2-1) G_t sigma p_s gamma_0 / sigma_s^2.
inline double zeta_a_sq(const SystemParams& p) {
    const double mr = static_cast<double>(p.m_r);
    return (kPi * kPi / 6.0) * mr * (mr * mr - 1.0) * p.g_t * p.rcs_sigma * p.p_s *
           p.gamma_0 / p.noise_sigma_s2;
}

// TOF system gain: 8 pi^2 p_s G_t M_r B^2 sigma gamma_0 / (3 c^2 sigma_s^2).
inline double zeta_r_sq(const SystemParams& p) {
    const double c2 = p.speed_of_light_c * p.speed_of_light_c;
    return 8.0 * kPi * kPi * p.p_s * p.g_t * static_cast<double>(p.m_r) *
           p.bandwidth_b * p.bandwidth_b * p.rcs_sigma * p.gamma_0 /
           (3.0 * c2 * p.noise_sigma_s2);
}

// Antenna-stripped gains used by the total-power-constrained forms.
inline double zeta_a_tilde_sq(const SystemParams& p) {
    return (kPi * kPi / 6.0) * p.rcs_sigma * p.p_s * p.gamma_0 / p.noise_sigma_s2;
}

inline double zeta_r_tilde_sq(const SystemParams& p) {
    const double c2 = p.speed_of_light_c * p.speed_of_light_c;
    return 8.0 * kPi * kPi * p.p_s * p.bandwidth_b * p.bandwidth_b * p.rcs_sigma *
           p.gamma_0 / (c2 * p.noise_sigma_s2);
}

// One sampled deployment: polar coordinates of the cooperating BSs around the
// typical target/user at the origin. Immutable after construction.
struct NetworkRealization {
    std::vector<double> distances; // d_i > 0, meters
    std::vector<double> bearings;  // theta_i in [0, 2pi)
    int n() const { return static_cast<int>(distances.size()); }
};

// Symmetric 2x2 position Fisher information matrix.
struct Fim2 {
    double f11 = 0.0;
    double f12 = 0.0;
    double f22 = 0.0;

    Fim2 operator+(const Fim2& o) const { return {f11 + o.f11, f12 + o.f12, f22 + o.f22}; }
    Fim2 scaled(double k) const { return {k * f11, k * f12, k * f22}; }
    double trace() const { return f11 + f22; }
    double det() const { return f11 * f22 - f12 * f12; }
};

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
};

} // namespace isacnet
