#ifndef QOSC_PARAMS_HPP
#define QOSC_PARAMS_HPP

#include <complex>

namespace qosc {

/// Numerical tolerances shared by all modules. Every field can be overridden
/// from the command line with --tol (boundary) or programmatically.
struct Tolerances {
    double imag_rel = 1e-9;       ///< relative size of Im(B) accepted as zero
    double boundary = 1e-12;      ///< B = -1, B = +-B*, e0 = 0 and forced-lambda0 matching
    double equivalence = 1e-9;    ///< relative tolerance of the integer-shift equivalence test
    double positivity_abs = 1e-12;
    double positivity_rel = 1e-9; ///< scaled by the largest closed-form term at n
};

/// Deformation parameter q and coupling alpha. Always valid once constructed:
/// q > 0, q != 1, alpha != 0.
class AlgebraParams {
  public:
    AlgebraParams(double q, double alpha);

    double q() const noexcept { return q_; }
    double alpha() const noexcept { return alpha_; }

    /// q - 1/q
    double q_minus() const noexcept { return q_ - 1.0 / q_; }
    /// q + 1/q
    double q_plus() const noexcept { return q_ + 1.0 / q_; }

  private:
    double q_;
    double alpha_;
};

AlgebraParams make_params(double q, double alpha);

/// (nu0, B, lambda0): eigenvalue of N on Psi_0, the real Klein/Casimir
/// combination B = 2*alpha*gamma*exp(-i*pi*nu0), and the eigenvalue of a^+ a on Psi_0.
class RepLabel {
  public:
    RepLabel(double nu0, double b, double lambda0);

    double nu0() const noexcept { return nu0_; }
    double b() const noexcept { return b_; }
    double lambda0() const noexcept { return lambda0_; }

    friend bool operator==(const RepLabel&, const RepLabel&) = default;

  private:
    double nu0_;
    double b_;
    double lambda0_;
};

RepLabel make_label(double nu0, double b, double lambda0);

/// Eigenvalues of C1 = K^2, C2 = K exp(i pi N), C3 = exp(2 i pi N).
struct CasimirValues {
    std::complex<double> c1;
    std::complex<double> c2;
    std::complex<double> c3;
};

/// B = Re(2 alpha gamma exp(-i pi nu0)); throws NonRealB if the imaginary part
/// exceeds imag_rel * max(1, |2 alpha gamma|).
double b_from_gamma(std::complex<double> gamma, double alpha, double nu0,
                    double imag_rel = Tolerances{}.imag_rel);

/// gamma = B exp(i pi nu0) / (2 alpha), the C2 eigenvalue of the representation.
std::complex<double> gamma_of(const AlgebraParams& params, const RepLabel& label);

CasimirValues casimir_values(const AlgebraParams& params, const RepLabel& label);

/// (-1)^n for any integer n.
constexpr double parity_sign(long n) noexcept { return (n % 2 == 0) ? 1.0 : -1.0; }

/// Eigenvalue of K on Psi_n read off the diagonal action: (-1)^n B / (2 alpha).
double klein_eigenvalue(const AlgebraParams& params, const RepLabel& label, long n);

/// Same eigenvalue through K = gamma exp(-i pi N): gamma exp(-i pi (nu0 + n)).
std::complex<double> klein_eigenvalue_from_gamma(const AlgebraParams& params,
                                                 const RepLabel& label, long n);

} // namespace qosc

#endif // QOSC_PARAMS_HPP
