#include "chainrad/dense_oracle.hpp"

#include "chainrad/error.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace chainrad {

std::string format_label(const EigenLabel& label) {
    std::string out = "g=(";
    for (std::size_t i = 0; i < label.g.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(label.g[i]);
    }
    return out + ")";
}

SectorMatrix build_sector_hamiltonian(const ChainConfig& cfg, int m) {
    cfg.validate();
    SectorMatrix sector;
    sector.n_atoms = cfg.n_atoms;
    sector.m = m;
    sector.basis = sector_basis(cfg.n_atoms, m);
    const auto dim = static_cast<Eigen::Index>(sector.basis.size());
    sector.entries = Eigen::MatrixXd::Zero(dim, dim);
    sector.entries.diagonal().setConstant(m * cfg.omega0);

    for (Eigen::Index col = 0; col < dim; ++col) {
        const auto& ket = sector.basis[static_cast<std::size_t>(col)].k;
        // S+_{i} S-_{i+1} moves the excitation on i+1 to an empty site i;
        // hopping to an adjacent empty site keeps the ket sorted.
        for (std::size_t p = 0; p < ket.size(); ++p) {
            for (int step : {-1, +1}) {
                const int target = ket[p] + step;
                if (target < 1 || target > cfg.n_atoms) continue;
                if (std::binary_search(ket.begin(), ket.end(), target)) continue;
                BasisKet moved{ket};
                moved.k[p] = target;
                const auto row = static_cast<Eigen::Index>(ket_index(cfg.n_atoms, moved));
                sector.entries(row, col) = cfg.omega_coupling;
            }
        }
    }
    return sector;
}

Eigensystem diagonalize(const SectorMatrix& sector) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sector.entries);
    if (solver.info() != Eigen::Success) {
        std::ostringstream msg;
        msg << "symmetric eigensolver failed for N=" << sector.n_atoms << ", M=" << sector.m
            << " (dimension " << sector.dimension() << ", ||H||_F=" << sector.entries.norm()
            << ", asymmetry=" << (sector.entries - sector.entries.transpose()).cwiseAbs().maxCoeff() << ")";
        throw ConvergenceError(msg.str());
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

std::vector<std::pair<Eigen::Index, Eigen::Index>> degenerate_clusters(const Eigen::VectorXd& values,
                                                                        double relative_tolerance) {
    std::vector<std::pair<Eigen::Index, Eigen::Index>> clusters;
    if (values.size() == 0) return clusters;
    const double range = values[values.size() - 1] - values[0];
    const double scale = range > 0.0 ? range : std::max(1.0, std::abs(values[0]));
    const double tol = relative_tolerance * scale;
    Eigen::Index begin = 0;
    for (Eigen::Index i = 1; i <= values.size(); ++i) {
        if (i == values.size() || values[i] - values[i - 1] > tol) {
            clusters.emplace_back(begin, i);
            begin = i;
        }
    }
    return clusters;
}

OracleReport verify_analytic(const ChainConfig& cfg, int m, const OracleTolerances& tol, const AmplitudeTamper& tamper) {
    OracleReport report;
    report.n = cfg.n_atoms;
    report.m = m;

    const SectorMatrix sector = build_sector_hamiltonian(cfg, m);
    const Eigensystem numeric = diagonalize(sector);
    const auto labels = sector_labels(cfg.n_atoms, m);
    const auto dim = sector.dimension();

    Eigen::VectorXd analytic(dim);
    for (Eigen::Index i = 0; i < dim; ++i) analytic[i] = eigenvalue(cfg, labels[static_cast<std::size_t>(i)]);

    // (a) spectra as sorted multisets
    Eigen::VectorXd sorted = analytic;
    std::sort(sorted.begin(), sorted.end());
    const double scale = std::max(1.0, numeric.values.cwiseAbs().maxCoeff());
    for (Eigen::Index i = 0; i < dim; ++i) {
        const double residual = std::abs(sorted[i] - numeric.values[i]) / scale;
        report.max_eigenvalue_residual = std::max(report.max_eigenvalue_residual, residual);
    }
    if (report.max_eigenvalue_residual > tol.eigenvalue_relative)
        report.failures.push_back("spectrum mismatch: max relative residual " +
                                  std::to_string(report.max_eigenvalue_residual));

    // (b) eigenvector residuals, (c) projection onto the numeric eigenspace
    const auto clusters = degenerate_clusters(numeric.values, tol.cluster_relative);
    for (Eigen::Index i = 0; i < dim; ++i) {
        const auto& label = labels[static_cast<std::size_t>(i)];
        Eigen::VectorXd c = expand_state(cfg, label).amplitudes;
        if (tamper) tamper(label, c);

        const double vector_residual = (sector.entries * c - analytic[i] * c).norm();
        report.max_vector_residual = std::max(report.max_vector_residual, vector_residual);

        // cluster whose eigenvalues are nearest the analytic energy
        auto best = clusters.front();
        double best_distance = std::numeric_limits<double>::infinity();
        for (const auto& cluster : clusters) {
            const auto lo = numeric.values[cluster.first];
            const auto hi = numeric.values[cluster.second - 1];
            const double distance = analytic[i] < lo ? lo - analytic[i] : (analytic[i] > hi ? analytic[i] - hi : 0.0);
            if (distance < best_distance) {
                best_distance = distance;
                best = cluster;
            }
        }
        const auto basis = numeric.vectors.middleCols(best.first, best.second - best.first);
        const double projector_residual = (c - basis * (basis.transpose() * c)).norm();
        report.max_projector_residual = std::max(report.max_projector_residual, projector_residual);

        if (vector_residual > tol.vector_residual || projector_residual > tol.projector_residual) {
            std::ostringstream msg;
            msg << format_label(label) << ": eigenvector residual " << vector_residual << ", projector residual "
                << projector_residual;
            report.failures.push_back(msg.str());
        }
    }
    return report;
}

}  // namespace chainrad
