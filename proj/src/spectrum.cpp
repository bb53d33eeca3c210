#include "qosc/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qosc/errors.hpp"

namespace qosc {

namespace {

double checked(double value, long n) {
    if (!std::isfinite(value)) {
        throw SpectrumOverflow("lambda_" + std::to_string(n) + " overflows double precision");
    }
    return value;
}

// q^{-nu0-n} (1 + (-1)^n B)
double recurrence_source(const AlgebraParams& params, const RepLabel& label, long n) {
    const double q = params.q();
    return std::pow(q, -label.nu0() - static_cast<double>(n)) * (1.0 + parity_sign(n) * label.b());
}

} // namespace

double lambda_closed(const AlgebraParams& params, const RepLabel& label, long n) {
    const double q = params.q();
    const double qn = std::pow(q, static_cast<double>(n));
    const double qmn = std::pow(q, -static_cast<double>(n));
    const double value =
        label.lambda0() * qn +
        std::pow(q, -label.nu0()) *
            ((qn - qmn) / params.q_minus() + label.b() * (qn - parity_sign(n) * qmn) / params.q_plus());
    return checked(value, n);
}

double lambda_scale(const AlgebraParams& params, const RepLabel& label, long n) {
    const double q = params.q();
    const double qn = std::pow(q, static_cast<double>(n));
    const double qmn = std::pow(q, -static_cast<double>(n));
    const double bracket = 1.0 / std::abs(params.q_minus()) + std::abs(label.b()) / params.q_plus();
    return std::max(label.lambda0() * qn, std::pow(q, -label.nu0()) * (qn + qmn) * bracket);
}

double lambda_tolerance(const AlgebraParams& params, const RepLabel& label, long n, const Tolerances& tol) {
    return tol.positivity_abs + tol.positivity_rel * lambda_scale(params, label, n);
}

Spectrum lambda_recurrence(const AlgebraParams& params, const RepLabel& label, long lo, long hi,
                           const Tolerances& tol) {
    if (lo > 0 || hi < 0) {
        throw InvalidWindow("recurrence window must contain n = 0, got [" + std::to_string(lo) + ", " +
                            std::to_string(hi) + "]");
    }
    Spectrum out;
    out.lo = lo;
    out.values.assign(static_cast<std::size_t>(hi - lo + 1), 0.0);
    const auto slot = [&](long n) -> double& { return out.values[static_cast<std::size_t>(n - lo)]; };

    const double q = params.q();
    slot(0) = label.lambda0();
    for (long n = 0; n < hi; ++n) {
        slot(n + 1) = checked(q * slot(n) + recurrence_source(params, label, n), n + 1);
    }
    for (long n = -1; n >= lo; --n) {
        slot(n) = checked((slot(n + 1) - recurrence_source(params, label, n)) / q, n);
    }

    for (long n = lo; n <= hi; ++n) {
        if (slot(n) < -lambda_tolerance(params, label, n, tol)) {
            out.all_nonnegative = false;
            break;
        }
    }
    return out;
}

double mu(const AlgebraParams& params, const RepLabel& label, long n) {
    return lambda_closed(params, label, n + 1);
}

double relation_11_residual(const AlgebraParams& params, const RepLabel& label, long n) {
    return mu(params, label, n) - params.q() * lambda_closed(params, label, n) -
           recurrence_source(params, label, n);
}

} // namespace qosc
