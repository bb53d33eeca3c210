#include "qosc/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "qosc/errors.hpp"

namespace qosc {

std::string format_double(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

namespace {

void dump_into(std::ostringstream& os, const Json& value, int indent, int depth) {
    const auto newline = [&](int level) {
        if (indent >= 0) {
            os << '\n' << std::string(static_cast<std::size_t>(indent * level), ' ');
        }
    };
    switch (value.type()) {
    case Json::value_t::object: {
        if (value.empty()) {
            os << "{}";
            return;
        }
        os << '{';
        bool first = true;
        for (const auto& [key, item] : value.items()) {
            if (!first) {
                os << ',';
            }
            first = false;
            newline(depth + 1);
            os << Json(key).dump() << (indent >= 0 ? ": " : ":");
            dump_into(os, item, indent, depth + 1);
        }
        newline(depth);
        os << '}';
        return;
    }
    case Json::value_t::array: {
        if (value.empty()) {
            os << "[]";
            return;
        }
        os << '[';
        bool first = true;
        for (const auto& item : value) {
            if (!first) {
                os << ',';
            }
            first = false;
            newline(depth + 1);
            dump_into(os, item, indent, depth + 1);
        }
        newline(depth);
        os << ']';
        return;
    }
    case Json::value_t::number_float: {
        const double x = value.get<double>();
        os << (std::isfinite(x) ? format_double(x) : "null");
        return;
    }
    default:
        os << value.dump();
        return;
    }
}

Json complex_json(std::complex<double> z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json index_bound(const std::optional<long>& bound, const char* infinite) {
    return bound ? Json(*bound) : Json(infinite);
}

} // namespace

std::string dump_json(const Json& value, int indent) {
    std::ostringstream os;
    dump_into(os, value, indent, 0);
    return os.str();
}

std::vector<std::string> split_list(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) {
        const auto lo = item.find_first_not_of(" \t");
        const auto hi = item.find_last_not_of(" \t");
        out.push_back(lo == std::string::npos ? std::string{} : item.substr(lo, hi - lo + 1));
    }
    return out;
}

double parse_real(const std::string& text) {
    const auto one = [&](const std::string& part) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(part, &used);
        } catch (const std::exception&) {
            throw InvalidInput("not a number: '" + text + "'");
        }
        if (used != part.size() || !std::isfinite(v)) {
            throw InvalidInput("not a number: '" + text + "'");
        }
        return v;
    };
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        return one(text);
    }
    const double den = one(text.substr(slash + 1));
    if (den == 0.0) {
        throw InvalidInput("zero denominator in '" + text + "'");
    }
    return one(text.substr(0, slash)) / den;
}

Json to_json(const AlgebraParams& params) { return Json{{"q", params.q()}, {"alpha", params.alpha()}}; }

Json to_json(const RepLabel& label) {
    return Json{{"nu0", label.nu0()}, {"B", label.b()}, {"lambda0", label.lambda0()}};
}

Json to_json(const RepClass& rep) {
    Json j{{"family", family_name(rep.family)},
           {"index_lo", index_bound(rep.index_lo, "-inf")},
           {"index_hi", index_bound(rep.index_hi, "+inf")},
           {"forced_lambda0", rep.forced_lambda0 ? Json(*rep.forced_lambda0) : Json(nullptr)},
           {"lambda0_constraint", nullptr}};
    if (rep.lambda0_constraint) {
        j["lambda0_constraint"] = Json{{"min", rep.lambda0_constraint->min},
                                       {"strict", rep.lambda0_constraint->strict}};
    }
    return j;
}

Json to_json(const ThresholdSet& t) {
    return Json{{"b_star", t.b_star}, {"d_plus", t.d_plus}, {"d_minus", t.d_minus}, {"e0", t.e0}};
}

Json to_json(const CasimirValues& c) {
    return Json{{"c1", complex_json(c.c1)}, {"c2", complex_json(c.c2)}, {"c3", complex_json(c.c3)}};
}

Json to_json(const Spectrum& s) {
    return Json{{"lo", s.lo}, {"hi", s.hi()}, {"all_nonnegative", s.all_nonnegative}, {"values", s.values}};
}

Json to_json(const ResidualReport& r) {
    return Json{{"rel1_norm", r.rel1_norm},
                {"comm_n_a", r.comm_n_a},
                {"comm_n_adag", r.comm_n_adag},
                {"anticomm_k_a", r.anticomm_k_a},
                {"anticomm_k_adag", r.anticomm_k_adag},
                {"comm_n_k", r.comm_n_k},
                {"hermiticity", r.hermiticity},
                {"casimir_residual", r.casimir_residual},
                {"scale", r.scale},
                {"interior_dim", r.interior_dim}};
}

Json to_json(const OperatorQuad& quad) {
    const auto rows = [](const Eigen::MatrixXd& m) {
        Json out = Json::array();
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            Json row = Json::array();
            for (Eigen::Index j = 0; j < m.cols(); ++j) {
                row.push_back(m(i, j));
            }
            out.push_back(std::move(row));
        }
        return out;
    };
    return Json{{"dim", quad.dim()},          {"index_offset", quad.index_offset},
                {"class", to_json(quad.rep)}, {"label", to_json(quad.label)},
                {"a", rows(quad.a)},          {"a_dag", rows(quad.a_dag)},
                {"N", rows(quad.n_op)},       {"K", rows(quad.k_op)}};
}

Json to_json(const Tolerances& tol) {
    return Json{{"imag_rel", tol.imag_rel},
                {"boundary", tol.boundary},
                {"equivalence", tol.equivalence},
                {"positivity_abs", tol.positivity_abs},
                {"positivity_rel", tol.positivity_rel}};
}

Json report_envelope(const std::string& command, Json input, const Tolerances& tol) {
    return Json{{"schema", "qosc.report"},
                {"schema_version", kReportSchemaVersion},
                {"tool_version", kToolVersion},
                {"command", command},
                {"input", std::move(input)},
                {"tolerances", to_json(tol)}};
}

std::string family_set_label(const std::vector<RepClass>& classes) {
    if (classes.empty()) {
        return "none";
    }
    std::string out;
    for (const RepClass& rep : classes) {
        if (!out.empty()) {
            out += '+';
        }
        out += family_name(rep.family);
    }
    return out;
}

} // namespace qosc
