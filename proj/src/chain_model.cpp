#include "chainrad/chain_model.hpp"

#include "chainrad/error.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace chainrad {

void ChainConfig::validate() const {
    if (n_atoms < 1)
        throw ContractViolation("n", "n_atoms must be >= 1, got " + std::to_string(n_atoms));
    if (!(ka >= 0.0) || !std::isfinite(ka))
        throw ContractViolation("ka", "ka must be finite and >= 0, got " + std::to_string(ka));
    if (!(mu_dot_a >= 0.0 && mu_dot_a <= 1.0))
        throw ContractViolation("u", "dipole projection u must lie in [0, 1], got " + std::to_string(mu_dot_a));
    if (!std::isfinite(omega0))
        throw ContractViolation("omega0", "omega0 must be finite");
    if (!std::isfinite(omega_coupling))
        throw ContractViolation("omega", "coupling Omega must be finite");
}

namespace {

void validate_indices(const std::vector<int>& values, int n_atoms, const char* name, bool strict) {
    if (n_atoms < 1)
        throw ContractViolation("n", "n_atoms must be >= 1, got " + std::to_string(n_atoms));
    if (static_cast<int>(values.size()) > n_atoms)
        throw ContractViolation(name, std::string(name) + " has more entries than atoms in the chain");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] < 1 || values[i] > n_atoms)
            throw ContractViolation(name, std::string(name) + " entry " + std::to_string(values[i]) +
                                              " outside [1, " + std::to_string(n_atoms) + "]");
        if (strict && i > 0 && values[i] <= values[i - 1])
            throw ContractViolation(name, std::string(name) + " must be strictly increasing");
    }
}

}  // namespace

void validate_label(const EigenLabel& label, int n_atoms) { validate_indices(label.g, n_atoms, "g", true); }

void validate_ket_range(const BasisKet& ket, int n_atoms) { validate_indices(ket.k, n_atoms, "k", false); }

void validate_canonical_ket(const BasisKet& ket, int n_atoms) { validate_indices(ket.k, n_atoms, "k", true); }

std::uint64_t binomial(int n, int m) {
    if (m < 0 || m > n) return 0;
    m = std::min(m, n - m);
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t result = 1;
    for (int i = 1; i <= m; ++i) {
        // result * (n - m + i) / i is always integral; guard the multiply.
        const std::uint64_t factor = static_cast<std::uint64_t>(n - m + i);
        if (result > kMax / factor) return kMax;
        result = result * factor / static_cast<std::uint64_t>(i);
    }
    return result;
}

std::size_t sector_dimension(int n, int m) {
    if (n < 0 || m < 0 || m > n)
        throw ContractViolation("m", "sector M=" + std::to_string(m) + " outside [0, " + std::to_string(n) + "]");
    const auto dim = binomial(n, m);
    if (dim > kMaxSectorDimension)
        throw SectorTooLarge("m", "sector C(" + std::to_string(n) + ", " + std::to_string(m) +
                                      ") exceeds the limit of " + std::to_string(kMaxSectorDimension) +
                                      " basis states");
    return static_cast<std::size_t>(dim);
}

namespace {

template <typename Visit>
void for_each_combination(int n, int m, Visit&& visit) {
    std::vector<int> combo(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) combo[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        visit(combo);
        int i = m - 1;
        while (i >= 0 && combo[static_cast<std::size_t>(i)] == n - m + i + 1) --i;
        if (i < 0) return;
        ++combo[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < m; ++j) combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
    }
}

}  // namespace

std::vector<BasisKet> sector_basis(int n, int m) {
    std::vector<BasisKet> basis;
    basis.reserve(sector_dimension(n, m));
    for_each_combination(n, m, [&](const std::vector<int>& c) { basis.push_back(BasisKet{c}); });
    return basis;
}

std::vector<EigenLabel> sector_labels(int n, int m) {
    std::vector<EigenLabel> labels;
    labels.reserve(sector_dimension(n, m));
    for_each_combination(n, m, [&](const std::vector<int>& c) { labels.push_back(EigenLabel{c}); });
    return labels;
}

std::size_t ket_index(int n, const BasisKet& ket) {
    validate_canonical_ket(ket, n);
    const int m = ket.m();
    std::uint64_t rank = 0;
    int previous = 0;
    for (int i = 0; i < m; ++i) {
        for (int v = previous + 1; v < ket.k[static_cast<std::size_t>(i)]; ++v) rank += binomial(n - v, m - i - 1);
        previous = ket.k[static_cast<std::size_t>(i)];
    }
    return static_cast<std::size_t>(rank);
}

double normalization(int n_atoms, int m) { return std::pow(2.0 / (n_atoms + 1), 0.5 * m); }

EigenAmplitude coefficient(const ChainConfig& cfg, const EigenLabel& label, const BasisKet& ket) {
    validate_label(label, cfg.n_atoms);
    if (label.m() != ket.m())
        throw ContractViolation("k", "sector mismatch: label has M=" + std::to_string(label.m()) + " but ket has " +
                                         std::to_string(ket.m()) + " excitations");
    validate_ket_range(ket, cfg.n_atoms);
    const double c = antisymmetrized_sine_product<double>(cfg.n_atoms, label.g, ket.k);
    return {c, normalization(cfg.n_atoms, label.m()) * c};
}

double eigenvalue(const ChainConfig& cfg, const EigenLabel& label) {
    validate_label(label, cfg.n_atoms);
    const int n = cfg.n_atoms;
    // cos(g xi) = -cos((N+1-g) xi): fold every label onto g <= (N+1)/2 and
    // accumulate signed multiplicities so mirror pairs cancel identically.
    std::vector<int> net(static_cast<std::size_t>(n / 2 + 1), 0);
    for (int g : label.g) {
        if (2 * g == n + 1) continue;
        if (2 * g < n + 1)
            ++net[static_cast<std::size_t>(g)];
        else
            --net[static_cast<std::size_t>(n + 1 - g)];
    }
    double cosine_sum = 0.0;
    for (std::size_t g = 1; g < net.size(); ++g)
        if (net[g] != 0) cosine_sum += net[g] * chain_cosine<double>(n, static_cast<long long>(g));
    return label.m() * cfg.omega0 + 2.0 * cfg.omega_coupling * cosine_sum;
}

double inner_product_unnormalized(const ChainConfig& cfg, const EigenLabel& lhs, const EigenLabel& rhs) {
    validate_label(lhs, cfg.n_atoms);
    validate_label(rhs, cfg.n_atoms);
    if (lhs.m() != rhs.m())
        throw ContractViolation("g", "sector mismatch: M=" + std::to_string(lhs.m()) + " vs M=" +
                                         std::to_string(rhs.m()));
    double sum = 0.0;
    for (const auto& ket : sector_basis(cfg.n_atoms, lhs.m()))
        sum += antisymmetrized_sine_product<double>(cfg.n_atoms, lhs.g, ket.k) *
               antisymmetrized_sine_product<double>(cfg.n_atoms, rhs.g, ket.k);
    return sum;
}

Parity reflection_parity(const EigenLabel& label) {
    long long exponent = static_cast<long long>(label.m()) * (label.m() + 1) / 2;
    for (int g : label.g) exponent += g;
    return exponent % 2 == 0 ? Parity::symmetric : Parity::antisymmetric;
}

double SectorState::amplitude(const BasisKet& ket) const {
    if (ket.m() != (basis.empty() ? 0 : basis.front().m()))
        throw ContractViolation("k", "ket is not in this state's sector");
    return amplitudes[static_cast<Eigen::Index>(ket_index(n_atoms, ket))];
}

SectorState expand_state(const ChainConfig& cfg, const EigenLabel& label) {
    validate_label(label, cfg.n_atoms);
    SectorState state;
    state.n_atoms = cfg.n_atoms;
    state.basis = sector_basis(cfg.n_atoms, label.m());
    state.amplitudes.resize(static_cast<Eigen::Index>(state.basis.size()));
    const double norm = normalization(cfg.n_atoms, label.m());
    for (std::size_t i = 0; i < state.basis.size(); ++i)
        state.amplitudes[static_cast<Eigen::Index>(i)] =
            norm * antisymmetrized_sine_product<double>(cfg.n_atoms, label.g, state.basis[i].k);
    return state;
}

Eigen::VectorXd single_excitation_amplitudes(int n_atoms, int g) {
    validate_label(EigenLabel{{g}}, n_atoms);
    const double norm = normalization(n_atoms, 1);
    Eigen::VectorXd c(n_atoms);
    for (int j = 1; j <= n_atoms; ++j) c[j - 1] = norm * chain_sine<double>(n_atoms, static_cast<long long>(g) * j);
    return c;
}

Eigen::MatrixXd single_excitation_modes(int n_atoms) {
    if (n_atoms < 1) throw ContractViolation("n", "n_atoms must be >= 1");
    Eigen::MatrixXd modes(n_atoms, n_atoms);
    for (int g = 1; g <= n_atoms; ++g) modes.col(g - 1) = single_excitation_amplitudes(n_atoms, g);
    return modes;
}

}  // namespace chainrad
