#include "qosc/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "qosc/errors.hpp"
#include "qosc/spectrum.hpp"

namespace qosc {

namespace {

bool near(double x, double target, double eps) {
    return std::abs(x - target) <= eps * std::max(1.0, std::abs(target));
}

bool on_boundary(double q, double b, double eps) {
    if (near(b, -1.0, eps)) {
        return true;
    }
    return q < 1.0 && (near(b, b_star(q), eps) || near(b, -b_star(q), eps));
}

bool contains_family(const std::vector<RepClass>& classes, Family family) {
    return std::any_of(classes.begin(), classes.end(), [&](const RepClass& r) { return r.family == family; });
}

std::vector<long> head_indices(const RepClass& rep) {
    if (rep.finite()) {
        std::vector<long> out;
        for (long n = *rep.index_lo; n <= *rep.index_hi; ++n) {
            out.push_back(n);
        }
        return out;
    }
    if (rep.family == Family::Fock) {
        return {0, 1, 2, 3};
    }
    if (rep.family == Family::AntiFock) {
        return {0, -1, -2, -3};
    }
    return {};
}

} // namespace

std::vector<double> linear_grid(double lo, double hi, long count) {
    if (count < 1) {
        throw InvalidInput("grid needs at least one point");
    }
    if (count == 1) {
        return {lo};
    }
    std::vector<double> out(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) {
        out[static_cast<std::size_t>(i)] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    }
    out.back() = hi;
    return out;
}

ScanGrid scan_grid(const std::vector<double>& q_values, const std::vector<double>& b_values, double alpha,
                   double nu0, const Tolerances& tol, unsigned threads) {
    if (q_values.empty() || b_values.empty()) {
        throw InvalidInput("scan grid is empty");
    }
    std::vector<AlgebraParams> params;
    params.reserve(q_values.size());
    for (double q : q_values) {
        params.push_back(make_params(q, alpha));
    }

    ScanGrid grid{q_values, b_values, std::vector<ScanCell>(q_values.size() * b_values.size())};
    const std::size_t total = grid.cells.size();
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t idx = next++; idx < total; idx = next++) {
            const std::size_t iq = idx / b_values.size();
            const std::size_t ib = idx % b_values.size();
            ScanCell& cell = grid.cells[idx];
            cell.q = q_values[iq];
            cell.b = b_values[ib];
            cell.classes = enumerate_classes(params[iq], nu0, cell.b, tol);
            cell.boundary = on_boundary(cell.q, cell.b, tol.boundary);
        }
    };

    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, total));
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    return grid;
}

double representative_b(Family family, double q) {
    switch (family) {
    case Family::OneDimensional:
        return -1.0;
    case Family::TwoDimensionalOdd:
        return b_star(q);
    case Family::TwoDimensionalEven:
        return -b_star(q);
    case Family::AntiFock:
        return b_star(q) - 1.0;
    case Family::Fock:
    case Family::Unbounded:
        return 0.0;
    }
    return 0.0;
}

LimitProbe probe_limits(Family family, PathKind kind, const std::vector<double>& path,
                        std::optional<double> fixed_q, std::optional<double> fixed_b, double alpha, double nu0,
                        const Tolerances& tol) {
    if (path.empty()) {
        throw InvalidInput("limit path is empty");
    }
    if (kind == PathKind::B && !fixed_q) {
        throw InvalidInput("a B path needs a fixed q");
    }

    LimitProbe probe;
    probe.family = family;
    probe.kind = kind;
    probe.tracking = kind == PathKind::Q && !fixed_b;

    std::vector<double> required;
    for (double value : path) {
        const double q = kind == PathKind::Q ? value : *fixed_q;
        const AlgebraParams params = make_params(q, alpha);
        LimitPoint point;
        point.q = q;
        point.b = kind == PathKind::B ? value : fixed_b.value_or(representative_b(family, q));
        point.b_star = b_star(q);

        const std::vector<RepClass> classes = enumerate_classes(params, nu0, point.b, tol);
        point.exists = contains_family(classes, family);
        const RepClass rep = canonical_class(family, params, nu0, point.b, tol);
        if (rep.forced_lambda0) {
            point.lambda0_required = *rep.forced_lambda0;
        } else if (rep.lambda0_constraint) {
            point.lambda0_required = rep.lambda0_constraint->min;
        }
        if (point.exists && rep.forced_lambda0) {
            const RepLabel label(nu0, point.b, std::max(0.0, *rep.forced_lambda0));
            for (long n : head_indices(rep)) {
                point.head.push_back(lambda_closed(params, label, n));
            }
        }

        double threshold = probe.tracking ? std::abs(point.b) : 0.0;
        if (point.lambda0_required) {
            threshold = std::max(threshold, std::abs(*point.lambda0_required));
        }
        required.push_back(threshold);
        probe.points.push_back(std::move(point));
    }

    if (required.size() >= 2) {
        bool increasing = true;
        for (std::size_t i = 1; i < required.size(); ++i) {
            increasing = increasing && required[i] > required[i - 1];
        }
        probe.threshold_diverges = increasing && required.back() > 10.0 * std::max(required.front(), 1e-300);
    }
    probe.survives = probe.points.back().exists && !probe.threshold_diverges;
    return probe;
}

} // namespace qosc
