#include "qosc/params.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qosc/errors.hpp"

namespace qosc {

AlgebraParams::AlgebraParams(double q, double alpha) : q_(q), alpha_(alpha) {
    if (!std::isfinite(q) || q <= 0.0 || q == 1.0) {
        throw QOutOfRange("q must be positive and different from 1, got " + std::to_string(q));
    }
    if (!std::isfinite(alpha) || alpha == 0.0) {
        throw AlphaZero("alpha must be finite and nonzero");
    }
}

AlgebraParams make_params(double q, double alpha) { return AlgebraParams(q, alpha); }

RepLabel::RepLabel(double nu0, double b, double lambda0) : nu0_(nu0), b_(b), lambda0_(lambda0) {
    if (!std::isfinite(nu0) || !std::isfinite(b) || !std::isfinite(lambda0)) {
        throw InvalidLabel("label entries must be finite");
    }
    if (lambda0 < 0.0) {
        throw InvalidLabel("lambda0 is an eigenvalue of a^+ a and must be nonnegative, got " +
                           std::to_string(lambda0));
    }
}

RepLabel make_label(double nu0, double b, double lambda0) { return RepLabel(nu0, b, lambda0); }

namespace {

std::complex<double> phase(double turns_of_pi) { return std::polar(1.0, std::numbers::pi * turns_of_pi); }

} // namespace

double b_from_gamma(std::complex<double> gamma, double alpha, double nu0, double imag_rel) {
    const std::complex<double> value = 2.0 * alpha * gamma * phase(-nu0);
    const double scale = std::max(1.0, std::abs(value));
    if (std::abs(value.imag()) > imag_rel * scale) {
        throw NonRealB("2*alpha*gamma*exp(-i*pi*nu0) has imaginary part " + std::to_string(value.imag()));
    }
    return value.real();
}

std::complex<double> gamma_of(const AlgebraParams& params, const RepLabel& label) {
    return label.b() / (2.0 * params.alpha()) * phase(label.nu0());
}

CasimirValues casimir_values(const AlgebraParams& params, const RepLabel& label) {
    const double k0 = label.b() / (2.0 * params.alpha());
    return CasimirValues{
        .c1 = {k0 * k0, 0.0},
        .c2 = gamma_of(params, label),
        .c3 = phase(2.0 * label.nu0()),
    };
}

double klein_eigenvalue(const AlgebraParams& params, const RepLabel& label, long n) {
    return parity_sign(n) * label.b() / (2.0 * params.alpha());
}

std::complex<double> klein_eigenvalue_from_gamma(const AlgebraParams& params, const RepLabel& label,
                                                 long n) {
    // exp(-i pi (nu0 + n)) split so the integer part stays exact.
    return gamma_of(params, label) * phase(-label.nu0()) * parity_sign(n);
}

} // namespace qosc
