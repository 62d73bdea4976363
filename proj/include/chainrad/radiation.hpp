#pragma once

// One-photon emission structure factor f(k, g, N) of the M=1 eigenstates and
// the emission pattern of a single excited atom |j>.
//
// Directions enter only through the phase k.a = ka cos(theta), theta being
// the polar angle from the chain axis; the azimuth drops out.

#include "chainrad/chain_model.hpp"

#include <variant>
#include <vector>

namespace chainrad {

/// Below this |cos(k.a) - cos(g xi)| the closed form is replaced by the
/// direct sum.
inline constexpr double kStructureFactorSingularThreshold = 1e-6;

struct EmissionDirection {
    double theta = 0.0;
    double k_dot_a = 0.0;

    static EmissionDirection from_theta(double ka, double theta) { return {theta, ka * std::cos(theta)}; }
};

struct PatternSample {
    double theta = 0.0;
    double value = 0.0;
};

struct AngularGrid {
    std::vector<double> thetas;

    /// `points` equally spaced angles covering [0, pi] inclusive.
    static AngularGrid uniform(int points);
};

/// Closed form, falling back to the direct sum near cos(k.a) = cos(g xi).
double structure_factor(int n_atoms, int g, double k_dot_a);

/// |sum_j c^j_g exp(-i j k.a)|^2
double structure_factor_direct_sum(int n_atoms, int g, double k_dot_a);

/// N+1 slit form; undefined at the same points as the closed form.
double structure_factor_diffraction_form(int n_atoms, int g, double k_dot_a);

/// k.a -> 0 limit: (1 - (-1)^g) cot^2(g xi / 2) / (N+1).
double structure_factor_small_sample(int n_atoms, int g);

/// 8 (N+1) / pi^2, the large-N value of the g=1 small-sample limit.
double structure_factor_max_large_n(int n_atoms);

/// sum_g (c^j_g)^2 f(k, g, N)
double single_atom_pattern(int n_atoms, int j, double k_dot_a);

inline double structure_factor(const ChainConfig& cfg, int g, const EmissionDirection& dir) {
    return structure_factor(cfg.n_atoms, g, dir.k_dot_a);
}
inline double structure_factor_direct_sum(const ChainConfig& cfg, int g, const EmissionDirection& dir) {
    return structure_factor_direct_sum(cfg.n_atoms, g, dir.k_dot_a);
}
inline double structure_factor_diffraction_form(const ChainConfig& cfg, int g, const EmissionDirection& dir) {
    return structure_factor_diffraction_form(cfg.n_atoms, g, dir.k_dot_a);
}
inline double single_atom_pattern(const ChainConfig& cfg, int j, const EmissionDirection& dir) {
    return single_atom_pattern(cfg.n_atoms, j, dir.k_dot_a);
}

/// Azimuth-averaged dipole factor 1 - <(k.mu)^2>_phi for a dipole with axis
/// projection u.
double dipole_weight(double u, double theta);

struct EigenSource {
    int g = 1;
};
struct AtomSource {
    int j = 1;
};
using PatternSource = std::variant<EigenSource, AtomSource>;

struct PatternScanOptions {
    bool dipole_weighted = false;
};

std::vector<PatternSample> pattern_scan(const ChainConfig& cfg, const PatternSource& source, const AngularGrid& grid,
                                        const PatternScanOptions& options = {});

}  // namespace chainrad
