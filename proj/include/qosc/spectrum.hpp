#ifndef QOSC_SPECTRUM_HPP
#define QOSC_SPECTRUM_HPP

#include <vector>

#include "qosc/params.hpp"

namespace qosc {

/// lambda_n over the index window [lo, lo + values.size() - 1].
struct Spectrum {
    long lo = 0;
    std::vector<double> values;
    bool all_nonnegative = true;

    long hi() const noexcept { return lo + static_cast<long>(values.size()) - 1; }
    /// lambda_n; n must lie in [lo, hi].
    double at(long n) const { return values.at(static_cast<std::size_t>(n - lo)); }
};

/// Closed form
///   lambda_n = lambda0 q^n + q^{-nu0} [ (q^n - q^{-n})/(q - 1/q) + B (q^n - (-1)^n q^{-n})/(q + 1/q) ].
/// Throws SpectrumOverflow when the result is not finite.
double lambda_closed(const AlgebraParams& params, const RepLabel& label, long n);

/// Magnitude of the largest term entering lambda_closed at n. Rounding error of
/// lambda_n is a small multiple of eps * lambda_scale.
double lambda_scale(const AlgebraParams& params, const RepLabel& label, long n);

/// Admissible negative excursion of lambda_n before it counts as a genuine violation.
double lambda_tolerance(const AlgebraParams& params, const RepLabel& label, long n,
                        const Tolerances& tol = {});

/// Iterates lambda_{n+1} = q lambda_n + q^{-nu0-n} (1 + (-1)^n B) forward from
/// lambda0 and its inverse backward. Requires lo <= 0 <= hi.
Spectrum lambda_recurrence(const AlgebraParams& params, const RepLabel& label, long lo, long hi,
                           const Tolerances& tol = {});

/// mu_n, the eigenvalue of a a^+ on Psi_n; equals lambda_{n+1}.
double mu(const AlgebraParams& params, const RepLabel& label, long n);

/// mu_n - q lambda_n - q^{-(nu0+n)} (1 + (-1)^n B). Vanishes up to rounding.
double relation_11_residual(const AlgebraParams& params, const RepLabel& label, long n);

} // namespace qosc

#endif // QOSC_SPECTRUM_HPP
