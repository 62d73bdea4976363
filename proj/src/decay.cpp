#include "chainrad/decay.hpp"

#include "chainrad/error.hpp"
#include "chainrad/quadrature.hpp"

#include <algorithm>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

namespace chainrad {

std::string_view to_string(RateClass cls) {
    switch (cls) {
        case RateClass::subradiant: return "subradiant";
        case RateClass::natural: return "natural";
        case RateClass::superradiant: return "superradiant";
    }
    return "unknown";
}

RateClass classify_rate(double rate) {
    if (rate < 1.0 - kClassificationTolerance) return RateClass::subradiant;
    if (rate > 1.0 + kClassificationTolerance) return RateClass::superradiant;
    return RateClass::natural;
}

namespace {

void check_mode(const ChainConfig& cfg, int g) {
    cfg.validate();
    if (g < 1 || g > cfg.n_atoms)
        throw ContractViolation("g", "g=" + std::to_string(g) + " outside [1, " + std::to_string(cfg.n_atoms) + "]");
}

}  // namespace

double total_decay_rate(const ChainConfig& cfg, int g) {
    check_mode(cfg, g);
    const int n = cfg.n_atoms;
    const Eigen::VectorXd c = single_excitation_amplitudes(n, g);
    double cross = 0.0;
    for (int d = 1; d < n; ++d)
        cross += 2.0 * f_kernel<double>(cfg.ka * d, cfg.mu_dot_a) * c.head(n - d).dot(c.tail(n - d));
    return 1.0 + cross;
}

namespace {

double integrate_sphere(const Eigen::VectorXd& c, double ka, double u, int polar_nodes, int azimuthal_nodes) {
    const GaussLegendreRule rule = gauss_legendre(polar_nodes);
    const double transverse = std::sqrt(std::max(0.0, 1.0 - u * u));
    const double dphi = 2.0 * std::numbers::pi / azimuthal_nodes;
    double total = 0.0;
    for (Eigen::Index q = 0; q < rule.nodes.size(); ++q) {
        const double x = rule.nodes[q];
        double re = 0.0;
        double im = 0.0;
        for (Eigen::Index p = 0; p < c.size(); ++p) {
            const double phase = static_cast<double>(p + 1) * ka * x;
            re += c[p] * std::cos(phase);
            im -= c[p] * std::sin(phase);
        }
        const double array_factor = re * re + im * im;
        const double sin_theta = std::sqrt(std::max(0.0, 1.0 - x * x));
        double dipole = 0.0;
        for (int a = 0; a < azimuthal_nodes; ++a) {
            const double projection = transverse * sin_theta * std::cos(a * dphi) + u * x;
            dipole += 1.0 - projection * projection;
        }
        total += rule.weights[q] * array_factor * dipole * dphi;
    }
    return 3.0 / (8.0 * std::numbers::pi) * total;
}

}  // namespace

QuadratureResult total_decay_rate_quadrature(const ChainConfig& cfg, int g, const QuadratureOptions& options) {
    check_mode(cfg, g);
    if (options.initial_polar_nodes < 1 || options.azimuthal_nodes < 3)
        throw ContractViolation("points", "quadrature needs >= 1 polar and >= 3 azimuthal nodes");
    const Eigen::VectorXd c = single_excitation_amplitudes(cfg.n_atoms, g);

    int nodes = options.initial_polar_nodes;
    double previous = integrate_sphere(c, cfg.ka, cfg.mu_dot_a, nodes, options.azimuthal_nodes);
    double error = std::numeric_limits<double>::infinity();
    while (2 * nodes <= options.max_polar_nodes) {
        nodes *= 2;
        const double refined = integrate_sphere(c, cfg.ka, cfg.mu_dot_a, nodes, options.azimuthal_nodes);
        error = std::abs(refined - previous);
        previous = refined;
        if (error < options.tolerance) return {refined, error, nodes};
    }
    std::ostringstream msg;
    msg << "decay-rate quadrature for g=" << g << ", N=" << cfg.n_atoms << ", ka=" << cfg.ka
        << " did not converge: last refinement changed the result by " << error << " with " << nodes
        << " polar nodes";
    throw ConvergenceError(msg.str());
}

int DecayTable::count(RateClass cls) const {
    int total = 0;
    for (auto c : classes) total += c == cls ? 1 : 0;
    return total;
}

DecayTable decay_table(const ChainConfig& cfg) {
    DecayTable table;
    table.n_atoms = cfg.n_atoms;
    table.ka = cfg.ka;
    table.u = cfg.mu_dot_a;
    cfg.validate();
    table.rates.resize(cfg.n_atoms);
    for (int g = 1; g <= cfg.n_atoms; ++g) table.rates[g - 1] = total_decay_rate(cfg, g);
    table.classes.reserve(static_cast<std::size_t>(cfg.n_atoms));
    for (double rate : table.rates) table.classes.push_back(classify_rate(rate));
    return table;
}

CensusSeries subradiant_census(const ChainConfig& base, int n_min, int n_max) {
    if (n_min < 1) throw ContractViolation("n-min", "n-min must be >= 1, got " + std::to_string(n_min));
    if (n_max < n_min)
        throw ContractViolation("n-max", "n-max (" + std::to_string(n_max) + ") must be >= n-min (" +
                                              std::to_string(n_min) + ")");
    sector_dimension(n_max, 1);

    CensusSeries series;
    for (int n = n_min; n <= n_max; ++n) {
        ChainConfig cfg = base;
        cfg.n_atoms = n;
        series.entries.push_back({n, decay_table(cfg).count(RateClass::subradiant)});
    }
    if (series.entries.size() == 1) {
        series.gradient = static_cast<double>(series.entries.front().subradiant) / series.entries.front().n_atoms;
        return series;
    }
    double slope_sum = 0.0;
    for (std::size_t i = 1; i < series.entries.size(); ++i) {
        const auto& a = series.entries[i - 1];
        const auto& b = series.entries[i];
        slope_sum += static_cast<double>(b.subradiant - a.subradiant) / (b.n_atoms - a.n_atoms);
    }
    series.gradient = slope_sum / static_cast<double>(series.entries.size() - 1);
    return series;
}

std::vector<FractionPoint> fraction_scan(const ChainConfig& base, const std::vector<double>& ka_grid, int n_min,
                                         int n_max) {
    std::vector<FractionPoint> points;
    points.reserve(ka_grid.size());
    for (double ka : ka_grid) {
        if (!(ka >= 0.0) || !std::isfinite(ka))
            throw ContractViolation("ka", "ka grid values must be finite and >= 0, got " + std::to_string(ka));
        ChainConfig cfg = base;
        cfg.ka = ka;
        points.push_back({ka, subradiant_census(cfg, n_min, n_max).gradient});
    }
    return points;
}

}  // namespace chainrad
