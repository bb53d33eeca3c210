#ifndef QOSC_MATRIXREP_HPP
#define QOSC_MATRIXREP_HPP

#include <optional>

#include <Eigen/Dense>

#include "qosc/classifier.hpp"
#include "qosc/params.hpp"

namespace qosc {

/// Matrices of (a, a^+, N, K) in the basis Psi_{offset}, ..., Psi_{offset+D-1}.
/// Entry (m, k) is <Psi_{offset+m} | X | Psi_{offset+k}>, so a lives on the
/// superdiagonal and a^+ on the subdiagonal.
struct OperatorQuad {
    Eigen::MatrixXd a;
    Eigen::MatrixXd a_dag;
    Eigen::MatrixXd n_op;
    Eigen::MatrixXd k_op;
    long index_offset = 0;
    RepClass rep;
    /// Label actually used to fill the matrices (forced lambda0 and, for the
    /// finite families, the exact boundary value of B).
    RepLabel label{0.0, 0.0, 0.0};

    Eigen::Index dim() const noexcept { return a.rows(); }
};

/// Max-norm residuals of the defining relations. The main relation
/// a a^+ - q a^+ a = q^{-N}(1 + 2 alpha K) is measured on the interior block
/// only; the commutators and anticommutators hold on the full block.
struct ResidualReport {
    double rel1_norm = 0.0;
    double comm_n_a = 0.0;
    double comm_n_adag = 0.0;
    double anticomm_k_a = 0.0;
    double anticomm_k_adag = 0.0;
    double comm_n_k = 0.0;
    double hermiticity = 0.0;      ///< a^+ vs a^T, N and K symmetric
    double casimir_residual = 0.0; ///< K^2 - (B/(2 alpha))^2 I on the full block
    double scale = 0.0;            ///< largest entry magnitude entering rel1_norm
    long interior_dim = 0;

    double max_residual() const noexcept;
};

struct BuildOptions {
    /// First basis index of an Unbounded window; defaults to -floor(D/2).
    std::optional<long> index_lo;
    Tolerances tol;
};

OperatorQuad build(const AlgebraParams& params, const RepLabel& label, const RepClass& rep, long dim,
                   const BuildOptions& options = {});

ResidualReport verify(const OperatorQuad& quad, const AlgebraParams& params);

struct PositivityResult {
    bool ok = true;
    std::optional<long> first_violation; ///< smallest |n| with lambda_n below tolerance
};

/// Checks lambda_n >= -tolerance over the class range clipped to [-window, window].
PositivityResult positivity_scan(const AlgebraParams& params, const RepLabel& label, const RepClass& rep,
                                 long window, const Tolerances& tol = {});

} // namespace qosc

#endif // QOSC_MATRIXREP_HPP
