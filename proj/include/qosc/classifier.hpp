#ifndef QOSC_CLASSIFIER_HPP
#define QOSC_CLASSIFIER_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qosc/params.hpp"

namespace qosc {

enum class Family {
    OneDimensional,
    TwoDimensionalOdd,  // basis {Psi_-1, Psi_0}, odd-n lambda vanish
    TwoDimensionalEven, // basis {Psi_0, Psi_1}, even-n lambda vanish
    Fock,
    AntiFock,
    Unbounded,
};

std::string_view family_name(Family family) noexcept;

/// Accepts canonical names ("AntiFock") and CLI spellings ("anti-fock", "two-dim-odd").
std::optional<Family> parse_family(std::string_view text);

/// Half-line lambda0 >= min (or > min when strict).
struct Lambda0Bound {
    double min = 0.0;
    bool strict = false;

    bool admits(double lambda0, double eps) const noexcept;
};

/// One admissible representation family with its basis index range.
/// An empty index_lo / index_hi means the range is unbounded on that side.
struct RepClass {
    Family family = Family::Fock;
    std::optional<long> index_lo;
    std::optional<long> index_hi;
    std::optional<double> forced_lambda0;
    std::optional<Lambda0Bound> lambda0_constraint;

    bool finite() const noexcept { return index_lo.has_value() && index_hi.has_value(); }
    bool contains(long n) const noexcept {
        return (!index_lo || n >= *index_lo) && (!index_hi || n <= *index_hi);
    }
};

struct ThresholdSet {
    double b_star = 0.0;  // (q + 1/q)/(q - 1/q)
    double d_plus = 0.0;  // 1/(q - 1/q) + B/(q + 1/q)
    double d_minus = 0.0; // 1/(q - 1/q) - B/(q + 1/q)
    double e0 = 0.0;      // lambda0 q^nu0 + d_plus
};

double b_star(double q) noexcept;

ThresholdSet thresholds(const AlgebraParams& params, double nu0, double b, double lambda0 = 0.0);

/// Index range and forced lambda0 of a family in canonical numbering, with no
/// admissibility check. The Unbounded constraint is filled in from (nu0, B).
RepClass canonical_class(Family family, const AlgebraParams& params, double nu0, double b,
                         const Tolerances& tol = {});

/// Every family admissible at (q, B), in Family declaration order.
std::vector<RepClass> enumerate_classes(const AlgebraParams& params, double nu0, double b,
                                        const Tolerances& tol = {});

/// The unique class matching the label's lambda0. Throws NoRepresentation
/// (with a diagnostic naming what each admissible family requires) otherwise.
RepClass classify_label(const AlgebraParams& params, const RepLabel& label,
                        const Tolerances& tol = {});

/// Shifts the reference vector of a doubly-unbounded label by n steps:
/// (nu0 + n, (-1)^n B, lambda_n).
RepLabel shift_label(const AlgebraParams& params, const RepLabel& label, long n);

/// Integer n relating the two Unbounded labels, if they are equivalent.
/// Throws NotUnbounded if either label is not in the Unbounded family.
std::optional<long> equivalence_shift(const AlgebraParams& params, const RepLabel& first,
                                      const RepLabel& second, const Tolerances& tol = {});

bool equivalent(const AlgebraParams& params, const RepLabel& first, const RepLabel& second,
                const Tolerances& tol = {});

} // namespace qosc

#endif // QOSC_CLASSIFIER_HPP
