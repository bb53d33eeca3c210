#ifndef QOSC_SCAN_HPP
#define QOSC_SCAN_HPP

#include <optional>
#include <string>
#include <vector>

#include "qosc/classifier.hpp"
#include "qosc/params.hpp"

namespace qosc {

struct ScanCell {
    double q = 0.0;
    double b = 0.0;
    std::vector<RepClass> classes;
    bool boundary = false; ///< within the boundary epsilon of B = -1 or B = +-B*
};

/// Family sets over a q x B grid. cells[i * b_values.size() + j] belongs to
/// (q_values[i], b_values[j]) regardless of how the cells were evaluated.
struct ScanGrid {
    std::vector<double> q_values;
    std::vector<double> b_values;
    std::vector<ScanCell> cells;

    const ScanCell& cell(std::size_t iq, std::size_t ib) const { return cells.at(iq * b_values.size() + ib); }
};

/// Evaluates enumerate_classes on every grid point, in parallel across `threads` workers.
/// Throws InvalidInput for an empty grid or an invalid (q, alpha) pair.
ScanGrid scan_grid(const std::vector<double>& q_values, const std::vector<double>& b_values, double alpha,
                   double nu0, const Tolerances& tol = {}, unsigned threads = 0);

/// lo:hi:count inclusive linear grid (count >= 1).
std::vector<double> linear_grid(double lo, double hi, long count);

enum class PathKind { Q, B };

struct LimitPoint {
    double q = 0.0;
    double b = 0.0;
    double b_star = 0.0;
    bool exists = false;
    /// Forced lambda0, or the lower end of the Unbounded lambda0 half-line.
    std::optional<double> lambda0_required;
    std::vector<double> head; ///< first lambda values of the canonical label from the head/tail
};

struct LimitProbe {
    Family family = Family::Fock;
    PathKind kind = PathKind::Q;
    bool tracking = false; ///< B follows the family's representative value along a q path
    std::vector<LimitPoint> points;
    bool threshold_diverges = false;
    bool survives = false;
};

/// Representative B of a family at q when none is given: -1, B*, -B*, B* - 1, or 0.
double representative_b(Family family, double q);

/// Follows a family along a q path (B fixed or tracked) or a B path (q fixed).
/// The family survives the limit iff it exists at the final point and its
/// required |B| or lambda0 does not grow monotonically by more than 10x.
LimitProbe probe_limits(Family family, PathKind kind, const std::vector<double>& path,
                        std::optional<double> fixed_q, std::optional<double> fixed_b, double alpha,
                        double nu0, const Tolerances& tol = {});

} // namespace qosc

#endif // QOSC_SCAN_HPP
