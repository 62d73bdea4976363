#pragma once

// Brute-force check of the analytic eigensystem: build the M-excitation
// block of H = omega0 sum S^z + Omega sum_<ij> S+_i S-_j in the lexicographic
// ket basis, diagonalize it densely and compare.

#include "chainrad/chain_model.hpp"

#include <functional>
#include <string>
#include <vector>

namespace chainrad {

struct SectorMatrix {
    int n_atoms = 0;
    int m = 0;
    std::vector<BasisKet> basis;
    Eigen::MatrixXd entries;

    Eigen::Index dimension() const { return entries.rows(); }
};

SectorMatrix build_sector_hamiltonian(const ChainConfig& cfg, int m);

struct Eigensystem {
    Eigen::VectorXd values;   ///< ascending
    Eigen::MatrixXd vectors;  ///< orthonormal columns
};

/// Throws ConvergenceError if the solver does not converge.
Eigensystem diagonalize(const SectorMatrix& sector);

/// Groups ascending eigenvalues whose neighbours lie within
/// tolerance * (spectral range). Returns [begin, end) index pairs.
std::vector<std::pair<Eigen::Index, Eigen::Index>> degenerate_clusters(const Eigen::VectorXd& ascending_values,
                                                                        double relative_tolerance = 1e-8);

struct OracleTolerances {
    double eigenvalue_relative = 1e-9;
    double vector_residual = 1e-9;
    double projector_residual = 1e-8;
    double cluster_relative = 1e-8;
};

struct OracleReport {
    int n = 0;
    int m = 0;
    double max_eigenvalue_residual = 0.0;  ///< relative, sorted spectra
    double max_vector_residual = 0.0;      ///< max ||H c - E c||
    double max_projector_residual = 0.0;   ///< max ||c - P c|| over the matching numeric eigenspace
    std::vector<std::string> failures;     ///< one entry per offending label

    bool passed() const { return failures.empty(); }
    std::string status() const { return passed() ? "pass" : "fail"; }
};

/// Test hook: rewrites analytic amplitudes before they are checked.
using AmplitudeTamper = std::function<void(const EigenLabel&, Eigen::VectorXd&)>;

OracleReport verify_analytic(const ChainConfig& cfg, int m, const OracleTolerances& tol = {},
                             const AmplitudeTamper& tamper = {});

std::string format_label(const EigenLabel& label);

}  // namespace chainrad
