#include "qosc/matrixrep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "qosc/errors.hpp"
#include "qosc/spectrum.hpp"

namespace qosc {

namespace {

double max_abs(const Eigen::MatrixXd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

OperatorQuad empty_quad(const RepClass& rep, const RepLabel& label, long dim, long offset) {
    OperatorQuad quad{
        .a = Eigen::MatrixXd::Zero(dim, dim),
        .a_dag = Eigen::MatrixXd::Zero(dim, dim),
        .n_op = Eigen::MatrixXd::Zero(dim, dim),
        .k_op = Eigen::MatrixXd::Zero(dim, dim),
        .index_offset = offset,
        .rep = rep,
        .label = label,
    };
    return quad;
}

// Fills N and K from the diagonal action and places sqrt(lambda) on the ladder diagonals.
void fill(OperatorQuad& quad, const AlgebraParams& params, const std::vector<double>& lambda) {
    const long dim = quad.dim();
    const double k0 = quad.label.b() / (2.0 * params.alpha());
    for (long row = 0; row < dim; ++row) {
        const long n = quad.index_offset + row;
        quad.n_op(row, row) = quad.label.nu0() + static_cast<double>(n);
        quad.k_op(row, row) = parity_sign(n) * k0;
    }
    // a Psi_n = sqrt(lambda_n) Psi_{n-1}; lambda[k] belongs to basis vector k.
    for (long col = 1; col < dim; ++col) {
        const double amp = std::sqrt(lambda[static_cast<std::size_t>(col)]);
        quad.a(col - 1, col) = amp;
        quad.a_dag(col, col - 1) = amp;
    }
}

void check_finite_dim(const RepClass& rep, long dim, long expected) {
    if (dim != expected) {
        throw DimensionMismatch(std::string(family_name(rep.family)) + " has dimension " +
                                std::to_string(expected) + ", requested " + std::to_string(dim));
    }
}

} // namespace

double ResidualReport::max_residual() const noexcept {
    return std::max({rel1_norm, comm_n_a, comm_n_adag, anticomm_k_a, anticomm_k_adag, comm_n_k, hermiticity,
                     casimir_residual});
}

OperatorQuad build(const AlgebraParams& params, const RepLabel& label, const RepClass& rep, long dim,
                   const BuildOptions& options) {
    if (dim < 1) {
        throw InvalidWindow("matrix dimension must be at least 1");
    }
    const double q = params.q();
    const double nu0 = label.nu0();

    switch (rep.family) {
    case Family::OneDimensional: {
        check_finite_dim(rep, dim, 1);
        OperatorQuad quad = empty_quad(rep, RepLabel(nu0, -1.0, 0.0), 1, 0);
        fill(quad, params, {0.0});
        return quad;
    }
    case Family::TwoDimensionalOdd: {
        check_finite_dim(rep, dim, 2);
        const double top = 2.0 * std::pow(q, -nu0) / (1.0 / q - q);
        OperatorQuad quad = empty_quad(rep, RepLabel(nu0, b_star(q), top), 2, -1);
        fill(quad, params, {0.0, top});
        return quad;
    }
    case Family::TwoDimensionalEven: {
        check_finite_dim(rep, dim, 2);
        const double top = 2.0 * std::pow(q, -nu0 - 1.0) / (1.0 / q - q);
        OperatorQuad quad = empty_quad(rep, RepLabel(nu0, -b_star(q), 0.0), 2, 0);
        fill(quad, params, {0.0, top});
        return quad;
    }
    case Family::Fock:
    case Family::AntiFock:
    case Family::Unbounded:
        break;
    }

    long offset = 0;
    if (rep.family == Family::AntiFock) {
        offset = -(dim - 1);
    } else if (rep.family == Family::Unbounded) {
        offset = options.index_lo.value_or(-(dim / 2));
    }
    const RepLabel used(nu0, label.b(), std::max(0.0, rep.forced_lambda0.value_or(label.lambda0())));

    std::vector<double> lambda(static_cast<std::size_t>(dim));
    for (long k = 0; k < dim; ++k) {
        const long n = offset + k;
        double value = lambda_closed(params, used, n);
        if (value < -lambda_tolerance(params, used, n, options.tol)) {
            throw NegativeLambda("lambda_" + std::to_string(n) + " = " + std::to_string(value) +
                                 " is negative; the label does not define a " +
                                 std::string(family_name(rep.family)) + " representation");
        }
        lambda[static_cast<std::size_t>(k)] = std::max(0.0, value);
    }
    // The head of a Fock representation is annihilated by a exactly.
    if (rep.family == Family::Fock) {
        lambda[0] = 0.0;
    }

    OperatorQuad quad = empty_quad(rep, used, dim, offset);
    fill(quad, params, lambda);
    return quad;
}

ResidualReport verify(const OperatorQuad& quad, const AlgebraParams& params) {
    using Eigen::MatrixXd;
    const long dim = quad.dim();
    const double q = params.q();
    const double alpha = params.alpha();
    ResidualReport r;

    const MatrixXd aa_dag = quad.a * quad.a_dag;
    const MatrixXd a_dag_a = quad.a_dag * quad.a;
    MatrixXd source = MatrixXd::Zero(dim, dim);
    for (long i = 0; i < dim; ++i) {
        source(i, i) = std::pow(q, -quad.n_op(i, i)) * (1.0 + 2.0 * alpha * quad.k_op(i, i));
    }
    const MatrixXd rel1 = aa_dag - q * a_dag_a - source;

    const bool exact = quad.rep.finite();
    const long first = exact ? 0 : 1;
    r.interior_dim = exact ? dim : std::max(0L, dim - 2);
    if (r.interior_dim > 0) {
        const auto block = [&](const MatrixXd& m) {
            return max_abs(m.block(first, first, r.interior_dim, r.interior_dim));
        };
        r.rel1_norm = block(rel1);
        r.scale = std::max({block(aa_dag), q * block(a_dag_a), block(source)});
    }

    const MatrixXd& n = quad.n_op;
    const MatrixXd& k = quad.k_op;
    r.comm_n_a = max_abs(n * quad.a - quad.a * n + quad.a);
    r.comm_n_adag = max_abs(n * quad.a_dag - quad.a_dag * n - quad.a_dag);
    r.anticomm_k_a = max_abs(k * quad.a + quad.a * k);
    r.anticomm_k_adag = max_abs(k * quad.a_dag + quad.a_dag * k);
    r.comm_n_k = max_abs(n * k - k * n);
    r.hermiticity = std::max({max_abs(quad.a_dag - quad.a.transpose()), max_abs(n - n.transpose()),
                              max_abs(k - k.transpose())});

    const double k0 = quad.label.b() / (2.0 * alpha);
    r.casimir_residual = max_abs(k * k - k0 * k0 * MatrixXd::Identity(dim, dim));
    return r;
}

PositivityResult positivity_scan(const AlgebraParams& params, const RepLabel& label, const RepClass& rep,
                                 long window, const Tolerances& tol) {
    if (window < 1) {
        throw InvalidWindow("positivity window must be at least 1");
    }
    const long lo = std::max(-window, rep.index_lo.value_or(-window));
    const long hi = std::min(window, rep.index_hi.value_or(window));

    PositivityResult result;
    const auto violates = [&](long n) {
        return n >= lo && n <= hi && lambda_closed(params, label, n) < -lambda_tolerance(params, label, n, tol);
    };
    for (long m = 0; m <= window; ++m) {
        for (long n : {m, -m}) {
            if (violates(n)) {
                result.ok = false;
                result.first_violation = n;
                return result;
            }
        }
    }
    return result;
}

} // namespace qosc
