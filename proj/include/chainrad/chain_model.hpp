#pragma once

// Analytic eigensystem of an N-site nearest-neighbour XY (dipole-coupled
// qubit) chain with open ends.
//
// Conventions used throughout the library:
//   * atoms and eigen-labels are 1-based, as in the physics notation;
//   * xi = pi / (N + 1);
//   * energies are measured from the ground state (|0> has energy 0) and
//     all frequencies and rates are in units of the single-atom rate gamma
//     with hbar = 1.

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

namespace chainrad {

/// Largest sector dimension C(N, M) that may be materialized as a dense
/// vector or matrix.
inline constexpr std::uint64_t kMaxSectorDimension = 1'000'000;

struct ChainConfig {
    int n_atoms = 1;
    double ka = 0.0;           ///< photon wavenumber times lattice spacing
    double mu_dot_a = 1.0;     ///< projection of the dipole unit vector on the chain axis
    double omega0 = 100.0;     ///< transition frequency
    double omega_coupling = 1.0;  ///< nearest-neighbour exchange Omega

    double xi() const { return std::numbers::pi / (n_atoms + 1); }

    /// Throws ContractViolation naming the first offending field.
    void validate() const;
};

/// Eigenstate label g_1 < ... < g_M. An empty list is the ground state.
struct EigenLabel {
    std::vector<int> g;

    int m() const { return static_cast<int>(g.size()); }
    friend bool operator==(const EigenLabel&, const EigenLabel&) = default;
};

/// Computational basis state: indices of excited atoms, canonically
/// k_1 < ... < k_M. An empty list is the ground state.
struct BasisKet {
    std::vector<int> k;

    int m() const { return static_cast<int>(k.size()); }
    friend bool operator==(const BasisKet&, const BasisKet&) = default;
    friend auto operator<=>(const BasisKet&, const BasisKet&) = default;
};

struct EigenAmplitude {
    double unnormalized = 0.0;
    double normalized = 0.0;
};

enum class Parity : int { antisymmetric = -1, symmetric = 1 };

// -- validation ------------------------------------------------------------

void validate_label(const EigenLabel& label, int n_atoms);
/// Checks range only; repeated or unordered indices are allowed.
void validate_ket_range(const BasisKet& ket, int n_atoms);
void validate_canonical_ket(const BasisKet& ket, int n_atoms);

// -- combinatorics ---------------------------------------------------------

/// C(n, m), saturating at UINT64_MAX.
std::uint64_t binomial(int n, int m);

/// C(n, m) after checking it against kMaxSectorDimension.
std::size_t sector_dimension(int n, int m);

/// All canonical kets of the M-excitation sector in lexicographic order.
std::vector<BasisKet> sector_basis(int n, int m);

/// All eigen-labels of the M-excitation sector in lexicographic order.
std::vector<EigenLabel> sector_labels(int n, int m);

/// Position of a canonical ket in the lexicographic sector ordering.
std::size_t ket_index(int n, const BasisKet& ket);

// -- reduced trigonometry on the chain's angular lattice -------------------
//
// Arguments are integer multiples of xi. Reducing the integer first keeps
// sin(N+1 xi) == 0 and the mirror identities exact in floating point.

template <typename Scalar = double>
Scalar chain_sine(int n_atoms, long long multiple) {
    const long long half = n_atoms + 1;
    long long r = multiple % (2 * half);
    if (r < 0) r += 2 * half;
    Scalar sign(1);
    if (r > half) {
        r -= half;
        sign = Scalar(-1);
    }
    if (2 * r > half) r = half - r;
    if (r == 0) return Scalar(0);
    return sign * std::sin(Scalar(r) * std::numbers::pi_v<Scalar> / Scalar(half));
}

template <typename Scalar = double>
Scalar chain_cosine(int n_atoms, long long multiple) {
    const long long half = n_atoms + 1;
    long long r = multiple % (2 * half);
    if (r < 0) r += 2 * half;
    if (r > half) r = 2 * half - r;
    if (2 * r == half) return Scalar(0);
    if (2 * r > half)
        return -std::cos(Scalar(half - r) * std::numbers::pi_v<Scalar> / Scalar(half));
    return std::cos(Scalar(r) * std::numbers::pi_v<Scalar> / Scalar(half));
}

/// Antisymmetrized sine product: det S with S(a, b) = sin(g_a k_b xi).
/// Exactly zero when two k coincide.
template <typename Scalar = double>
Scalar antisymmetrized_sine_product(int n_atoms, std::span<const int> g, std::span<const int> k) {
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    const auto m = static_cast<Eigen::Index>(g.size());
    if (m == 0) return Scalar(1);
    for (Eigen::Index a = 0; a < m; ++a)
        for (Eigen::Index b = a + 1; b < m; ++b)
            if (k[a] == k[b]) return Scalar(0);

    Matrix s(m, m);
    for (Eigen::Index a = 0; a < m; ++a)
        for (Eigen::Index b = 0; b < m; ++b)
            s(a, b) = chain_sine<Scalar>(n_atoms, static_cast<long long>(g[a]) * k[b]);
    if (m == 1) return s(0, 0);
    return s.partialPivLu().determinant();
}

/// (2 / (N+1))^(M/2)
double normalization(int n_atoms, int m);

// -- analytic eigensystem --------------------------------------------------

EigenAmplitude coefficient(const ChainConfig& cfg, const EigenLabel& label, const BasisKet& ket);

/// M omega0 + 2 Omega sum_i cos(g_i xi). Mirror pairs g, N+1-g cancel exactly.
double eigenvalue(const ChainConfig& cfg, const EigenLabel& label);

/// Sum over the canonical kets of the sector of C_{g'} C_{g}.
double inner_product_unnormalized(const ChainConfig& cfg, const EigenLabel& lhs, const EigenLabel& rhs);

Parity reflection_parity(const EigenLabel& label);

/// Normalized amplitude vector of an eigenstate over the sector basis.
struct SectorState {
    int n_atoms = 0;
    std::vector<BasisKet> basis;
    Eigen::VectorXd amplitudes;

    double amplitude(const BasisKet& ket) const;
};

SectorState expand_state(const ChainConfig& cfg, const EigenLabel& label);

/// c^j_g for j = 1..N (entry j-1).
Eigen::VectorXd single_excitation_amplitudes(int n_atoms, int g);

/// N x N orthogonal matrix U with U(j-1, g-1) = c^j_g.
Eigen::MatrixXd single_excitation_modes(int n_atoms);

}  // namespace chainrad
