#include "qosc/classifier.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <sstream>
#include <utility>

#include "qosc/errors.hpp"
#include "qosc/spectrum.hpp"

namespace qosc {

namespace {

bool near(double x, double target, double eps) {
    return std::abs(x - target) <= eps * std::max(1.0, std::abs(target));
}

std::string normalize(std::string_view text) {
    std::string out;
    for (char c : text) {
        if (c != '-' && c != '_' && c != ' ') {
            out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        }
    }
    return out;
}

// lambda0 q^nu0 + d_plus >= 0  <=>  lambda0 >= -d_plus q^{-nu0}
Lambda0Bound unbounded_bound(const AlgebraParams& params, double nu0, double b, bool strict) {
    const ThresholdSet t = thresholds(params, nu0, b);
    return Lambda0Bound{.min = -t.d_plus * std::pow(params.q(), -nu0), .strict = strict};
}

std::string describe_requirement(const RepClass& rep) {
    std::ostringstream os;
    os.precision(17);
    os << family_name(rep.family);
    if (rep.forced_lambda0) {
        os << " requires lambda0 = " << *rep.forced_lambda0;
    } else if (rep.lambda0_constraint) {
        os << " requires lambda0 " << (rep.lambda0_constraint->strict ? "> " : ">= ")
           << rep.lambda0_constraint->min;
    }
    return os.str();
}

} // namespace

std::string_view family_name(Family family) noexcept {
    switch (family) {
    case Family::OneDimensional:
        return "OneDimensional";
    case Family::TwoDimensionalOdd:
        return "TwoDimensionalOdd";
    case Family::TwoDimensionalEven:
        return "TwoDimensionalEven";
    case Family::Fock:
        return "Fock";
    case Family::AntiFock:
        return "AntiFock";
    case Family::Unbounded:
        return "Unbounded";
    }
    return "?";
}

std::optional<Family> parse_family(std::string_view text) {
    static const std::array<std::pair<std::string_view, Family>, 10> names{{
        {"onedimensional", Family::OneDimensional},
        {"onedim", Family::OneDimensional},
        {"twodimensionalodd", Family::TwoDimensionalOdd},
        {"twodimodd", Family::TwoDimensionalOdd},
        {"twodimensionaleven", Family::TwoDimensionalEven},
        {"twodimeven", Family::TwoDimensionalEven},
        {"fock", Family::Fock},
        {"antifock", Family::AntiFock},
        {"unbounded", Family::Unbounded},
        {"doublyunbounded", Family::Unbounded},
    }};
    const std::string key = normalize(text);
    for (const auto& [name, family] : names) {
        if (key == name) {
            return family;
        }
    }
    return std::nullopt;
}

bool Lambda0Bound::admits(double lambda0, double eps) const noexcept {
    const double slack = eps * std::max(1.0, std::abs(min));
    return strict ? lambda0 > min + slack : lambda0 >= min - slack;
}

double b_star(double q) noexcept { return (q + 1.0 / q) / (q - 1.0 / q); }

ThresholdSet thresholds(const AlgebraParams& params, double nu0, double b, double lambda0) {
    ThresholdSet t;
    t.b_star = params.q_plus() / params.q_minus();
    t.d_plus = 1.0 / params.q_minus() + b / params.q_plus();
    t.d_minus = 1.0 / params.q_minus() - b / params.q_plus();
    t.e0 = lambda0 * std::pow(params.q(), nu0) + t.d_plus;
    return t;
}

RepClass canonical_class(Family family, const AlgebraParams& params, double nu0, double b,
                         const Tolerances& tol) {
    const double q = params.q();
    RepClass rep;
    rep.family = family;
    switch (family) {
    case Family::OneDimensional:
        rep.index_lo = 0;
        rep.index_hi = 0;
        rep.forced_lambda0 = 0.0;
        break;
    case Family::TwoDimensionalOdd:
        rep.index_lo = -1;
        rep.index_hi = 0;
        rep.forced_lambda0 = 2.0 * std::pow(q, -nu0) / (1.0 / q - q);
        break;
    case Family::TwoDimensionalEven:
        rep.index_lo = 0;
        rep.index_hi = 1;
        rep.forced_lambda0 = 0.0;
        break;
    case Family::Fock:
        rep.index_lo = 0;
        rep.forced_lambda0 = 0.0;
        break;
    case Family::AntiFock:
        rep.index_hi = 0;
        rep.forced_lambda0 = -std::pow(q, -nu0 - 1.0) * (1.0 + b);
        break;
    case Family::Unbounded: {
        const double edge = -b_star(q);
        const bool on_edge = q < 1.0 && near(std::abs(b), edge, tol.boundary);
        rep.lambda0_constraint = unbounded_bound(params, nu0, b, on_edge);
        break;
    }
    }
    return rep;
}

std::vector<RepClass> enumerate_classes(const AlgebraParams& params, double nu0, double b,
                                        const Tolerances& tol) {
    const double q = params.q();
    const double eps = tol.boundary;
    std::vector<RepClass> out;
    const auto add = [&](Family f) { out.push_back(canonical_class(f, params, nu0, b, tol)); };

    if (near(b, -1.0, eps)) {
        add(Family::OneDimensional);
        return out;
    }
    if (q > 1.0) {
        if (b > -1.0) {
            add(Family::Fock);
        }
        return out;
    }

    // q < 1: B* < -1 < 0 < -B*
    const double bs = b_star(q);
    if (near(b, bs, eps)) {
        add(Family::TwoDimensionalOdd);
    } else if (b < bs) {
        add(Family::AntiFock);
    } else if (near(b, -bs, eps)) {
        add(Family::TwoDimensionalEven);
        add(Family::Unbounded);
    } else if (b < -bs) {
        if (b > -1.0) {
            add(Family::Fock);
        }
        add(Family::Unbounded);
    }
    // b > -B*: a highest-weight vector would need lambda0 = -q^{-nu0-1}(1+B) < 0,
    // and every lowest-weight spectrum turns negative. Nothing survives.
    return out;
}

RepClass classify_label(const AlgebraParams& params, const RepLabel& label, const Tolerances& tol) {
    const std::vector<RepClass> classes = enumerate_classes(params, label.nu0(), label.b(), tol);
    const double lambda0 = label.lambda0();
    const ThresholdSet t = thresholds(params, label.nu0(), label.b(), lambda0);

    for (const RepClass& rep : classes) {
        if (rep.forced_lambda0) {
            if (near(lambda0, *rep.forced_lambda0, tol.boundary)) {
                return rep;
            }
        } else if (rep.lambda0_constraint) {
            // Decide on e0 directly; it carries the natural scale of the boundary.
            const bool ok = rep.lambda0_constraint->strict ? t.e0 > tol.boundary : t.e0 >= -tol.boundary;
            if (ok) {
                return rep;
            }
        }
    }

    std::ostringstream msg;
    msg.precision(17);
    msg << "no irreducible representation with q = " << params.q() << ", nu0 = " << label.nu0()
        << ", B = " << label.b() << ", lambda0 = " << lambda0;
    if (classes.empty()) {
        msg << ": no family is admissible at this (q, B)";
    } else {
        msg << ":";
        for (const RepClass& rep : classes) {
            msg << " " << describe_requirement(rep) << ";";
        }
        const bool has_head = std::any_of(classes.begin(), classes.end(),
                                          [](const RepClass& r) { return r.forced_lambda0.has_value(); });
        if (has_head) {
            msg << " labels are taken in canonical numbering (head or tail vector at n = 0);"
                   " shift the label to that vector instead";
        }
    }
    throw NoRepresentation(msg.str());
}

RepLabel shift_label(const AlgebraParams& params, const RepLabel& label, long n) {
    return RepLabel(label.nu0() + static_cast<double>(n), parity_sign(n) * label.b(),
                    std::max(0.0, lambda_closed(params, label, n)));
}

std::optional<long> equivalence_shift(const AlgebraParams& params, const RepLabel& first,
                                      const RepLabel& second, const Tolerances& tol) {
    for (const RepLabel* label : {&first, &second}) {
        const RepClass rep = [&] {
            try {
                return classify_label(params, *label, tol);
            } catch (const NoRepresentation& e) {
                throw NotUnbounded(std::string("label is not a representation: ") + e.what());
            }
        }();
        if (rep.family != Family::Unbounded) {
            throw NotUnbounded("label classifies as " + std::string(family_name(rep.family)) +
                               ", equivalence is defined for Unbounded labels");
        }
    }

    const double diff = second.nu0() - first.nu0();
    const double rounded = std::round(diff);
    if (std::abs(diff - rounded) > tol.equivalence * std::max(1.0, std::abs(diff))) {
        return std::nullopt;
    }
    const long n = static_cast<long>(rounded);
    if (!near(second.b(), parity_sign(n) * first.b(), tol.equivalence)) {
        return std::nullopt;
    }
    double expected = 0.0;
    try {
        expected = lambda_closed(params, first, n);
    } catch (const SpectrumOverflow&) {
        return std::nullopt;
    }
    if (!near(second.lambda0(), expected, tol.equivalence)) {
        return std::nullopt;
    }
    return n;
}

bool equivalent(const AlgebraParams& params, const RepLabel& first, const RepLabel& second,
                const Tolerances& tol) {
    return equivalence_shift(params, first, second, tol).has_value();
}

} // namespace qosc
