#include "chainrad/radiation.hpp"

#include "chainrad/error.hpp"

#include <string>

namespace chainrad {

namespace {

void check_mode(int n_atoms, int g) {
    if (n_atoms < 1) throw ContractViolation("n", "n_atoms must be >= 1, got " + std::to_string(n_atoms));
    if (g < 1 || g > n_atoms)
        throw ContractViolation("g", "g=" + std::to_string(g) + " outside [1, " + std::to_string(n_atoms) + "]");
}

}  // namespace

AngularGrid AngularGrid::uniform(int points) {
    if (points < 1) throw ContractViolation("points", "grid needs at least one point");
    AngularGrid grid;
    grid.thetas.resize(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i)
        grid.thetas[static_cast<std::size_t>(i)] = points == 1 ? 0.0 : std::numbers::pi * i / (points - 1);
    if (points > 1) grid.thetas.back() = std::numbers::pi;
    return grid;
}

double structure_factor_direct_sum(int n_atoms, int g, double k_dot_a) {
    check_mode(n_atoms, g);
    const Eigen::VectorXd c = single_excitation_amplitudes(n_atoms, g);
    double re = 0.0;
    double im = 0.0;
    for (int j = 1; j <= n_atoms; ++j) {
        re += c[j - 1] * std::cos(j * k_dot_a);
        im -= c[j - 1] * std::sin(j * k_dot_a);
    }
    return re * re + im * im;
}

double structure_factor(int n_atoms, int g, double k_dot_a) {
    check_mode(n_atoms, g);
    // 1 - (-1)^g cos((N+1)x) and cos x - cos(g xi) as half-angle products, free of cancellation
    const double phase = g * std::numbers::pi / (n_atoms + 1);
    const double gap = -2.0 * std::sin(0.5 * (k_dot_a + phase)) * std::sin(0.5 * (k_dot_a - phase));
    if (std::abs(gap) < kStructureFactorSingularThreshold) return structure_factor_direct_sum(n_atoms, g, k_dot_a);
    const double s = chain_sine<double>(n_atoms, g);
    const double half = std::sin(0.5 * ((n_atoms + 1) * k_dot_a - g * std::numbers::pi));
    const double numerator = 2.0 * half * half;
    return numerator / (gap * gap) * (s * s / (n_atoms + 1));
}

double structure_factor_diffraction_form(int n_atoms, int g, double k_dot_a) {
    check_mode(n_atoms, g);
    const double phase = g * std::numbers::pi / (n_atoms + 1);
    const double s = chain_sine<double>(n_atoms, g);
    const double slit = std::sin(0.5 * (n_atoms + 1) * (k_dot_a - phase));
    const double sum_half = std::sin(0.5 * (k_dot_a + phase));
    const double diff_half = std::sin(0.5 * (k_dot_a - phase));
    return slit * slit / (2.0 * sum_half * sum_half * diff_half * diff_half) * (s * s / (n_atoms + 1));
}

double structure_factor_small_sample(int n_atoms, int g) {
    check_mode(n_atoms, g);
    if (g % 2 == 0) return 0.0;
    const double t = std::tan(0.5 * g * std::numbers::pi / (n_atoms + 1));
    return 2.0 / ((n_atoms + 1) * t * t);
}

double structure_factor_max_large_n(int n_atoms) {
    if (n_atoms < 1) throw ContractViolation("n", "n_atoms must be >= 1, got " + std::to_string(n_atoms));
    return 8.0 * (n_atoms + 1) / (std::numbers::pi * std::numbers::pi);
}

double single_atom_pattern(int n_atoms, int j, double k_dot_a) {
    if (n_atoms < 1) throw ContractViolation("n", "n_atoms must be >= 1, got " + std::to_string(n_atoms));
    if (j < 1 || j > n_atoms)
        throw ContractViolation("j", "j=" + std::to_string(j) + " outside [1, " + std::to_string(n_atoms) + "]");
    const double norm = normalization(n_atoms, 1);
    double total = 0.0;
    for (int g = 1; g <= n_atoms; ++g) {
        const double c = norm * chain_sine<double>(n_atoms, static_cast<long long>(g) * j);
        total += c * c * structure_factor(n_atoms, g, k_dot_a);
    }
    return total;
}

double dipole_weight(double u, double theta) {
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    return 1.0 - (0.5 * (1.0 - u * u) * s * s + u * u * c * c);
}

std::vector<PatternSample> pattern_scan(const ChainConfig& cfg, const PatternSource& source, const AngularGrid& grid,
                                        const PatternScanOptions& options) {
    cfg.validate();
    std::visit(
        [&](const auto& s) {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, EigenSource>)
                check_mode(cfg.n_atoms, s.g);
            else if (s.j < 1 || s.j > cfg.n_atoms)
                throw ContractViolation("j", "j=" + std::to_string(s.j) + " outside [1, " +
                                                 std::to_string(cfg.n_atoms) + "]");
        },
        source);
    for (double theta : grid.thetas)
        if (!(theta >= 0.0 && theta <= std::numbers::pi))
            throw ContractViolation("theta", "grid angle " + std::to_string(theta) + " outside [0, pi]");

    std::vector<PatternSample> samples;
    samples.reserve(grid.thetas.size());
    for (double theta : grid.thetas) {
        const auto dir = EmissionDirection::from_theta(cfg.ka, theta);
        double value = std::visit(
            [&](const auto& s) {
                using S = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<S, EigenSource>)
                    return structure_factor(cfg.n_atoms, s.g, dir.k_dot_a);
                else
                    return single_atom_pattern(cfg.n_atoms, s.j, dir.k_dot_a);
            },
            source);
        if (options.dipole_weighted) value *= dipole_weight(cfg.mu_dot_a, theta);
        samples.push_back({theta, value});
    }
    return samples;
}

}  // namespace chainrad
