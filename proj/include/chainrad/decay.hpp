#pragma once

// Total decay rates of the one-excitation eigenstates,
//   Gamma_g / gamma = 1 + sum_{i != j} F(ka |i - j|, u) c^i_g c^j_g,
// their classification, and the subradiant census across chain lengths.

#include "chainrad/chain_model.hpp"

#include <cmath>
#include <string_view>
#include <utility>
#include <vector>

namespace chainrad {

/// Below this argument F is evaluated from its Taylor series.
inline constexpr double kKernelSeriesThreshold = 1e-2;

/// Rates within this distance of 1 count as natural.
inline constexpr double kClassificationTolerance = 1e-9;

/// Fourth-order Taylor form of F, accurate for small x.
template <typename Scalar = double>
Scalar f_kernel_series(Scalar x, Scalar u) {
    const Scalar u2 = u * u;
    // sin x / x                    = 1 - x^2/6  + x^4/120  - ...
    // cos x / x^2 - sin x / x^3    = -1/3 + x^2/30 - x^4/840 + ...
    const Scalar x2 = x * x;
    const Scalar sinc = Scalar(1) - x2 / Scalar(6) + x2 * x2 / Scalar(120);
    const Scalar near = -Scalar(1) / Scalar(3) + x2 / Scalar(30) - x2 * x2 / Scalar(840);
    return Scalar(1.5) * ((Scalar(1) - u2) * sinc + (Scalar(1) - Scalar(3) * u2) * near);
}

/// Cross-damping kernel F(x) for dipoles whose projection on the pair axis is u.
/// F(0) = 1 for every u.
template <typename Scalar = double>
Scalar f_kernel(Scalar x, Scalar u) {
    if (x < Scalar(kKernelSeriesThreshold)) return f_kernel_series(x, u);
    const Scalar u2 = u * u;
    const Scalar s = std::sin(x);
    const Scalar c = std::cos(x);
    return Scalar(1.5) * ((Scalar(1) - u2) * s / x + (Scalar(1) - Scalar(3) * u2) * (c / (x * x) - s / (x * x * x)));
}

enum class RateClass { subradiant, natural, superradiant };

std::string_view to_string(RateClass cls);
RateClass classify_rate(double rate);

/// Gamma_g / gamma from the pair kernel.
double total_decay_rate(const ChainConfig& cfg, int g);

struct QuadratureOptions {
    int initial_polar_nodes = 64;
    int azimuthal_nodes = 128;
    int max_polar_nodes = 8192;
    double tolerance = 1e-7;
};

struct QuadratureResult {
    double rate = 0.0;
    double error_estimate = 0.0;  ///< difference between the last two refinements
    int polar_nodes = 0;
};

/// Gamma_g / gamma by integrating the differential rate
///   3/(8 pi) (1 - (k.mu)^2) |sum_p c^p_g exp(-i p k.a)|^2
/// over the sphere: Gauss-Legendre in cos(theta), trapezoid in phi, polar
/// nodes doubled until successive results agree. Throws ConvergenceError.
QuadratureResult total_decay_rate_quadrature(const ChainConfig& cfg, int g, const QuadratureOptions& options = {});

struct DecayTable {
    int n_atoms = 0;
    double ka = 0.0;
    double u = 0.0;
    Eigen::VectorXd rates;  ///< entry g-1
    std::vector<RateClass> classes;

    int count(RateClass cls) const;
};

DecayTable decay_table(const ChainConfig& cfg);

struct CensusEntry {
    int n_atoms = 0;
    int subradiant = 0;
};

struct CensusSeries {
    std::vector<CensusEntry> entries;
    /// Mean slope of the segments joining adjacent (N, count) points. With a
    /// single point, count / N.
    double gradient = 0.0;
};

/// Uses every field of `base` except n_atoms.
CensusSeries subradiant_census(const ChainConfig& base, int n_min, int n_max);

inline constexpr int kDefaultCensusMinAtoms = 10;
inline constexpr int kDefaultCensusMaxAtoms = 100;

struct FractionPoint {
    double ka = 0.0;
    double fraction = 0.0;
};

std::vector<FractionPoint> fraction_scan(const ChainConfig& base, const std::vector<double>& ka_grid,
                                         int n_min = kDefaultCensusMinAtoms, int n_max = kDefaultCensusMaxAtoms);

}  // namespace chainrad
