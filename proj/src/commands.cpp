#include "qosc/commands.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qosc/classifier.hpp"
#include "qosc/errors.hpp"
#include "qosc/matrixrep.hpp"
#include "qosc/report.hpp"
#include "qosc/scan.hpp"
#include "qosc/spectrum.hpp"

namespace qosc {

namespace {

// Raw flag values; numbers stay strings until parse_real so "-5/3" is accepted.
struct Flags {
    std::string q;
    std::string alpha = "1";
    std::string nu0 = "0";
    std::string b;
    std::string lambda0;
    std::string family;
    std::string range;
    std::string label_a;
    std::string label_b;
    std::string q_range;
    std::string b_range;
    std::string q_path;
    std::string b_path;
    long dim = 0;
    long window = 0;
    std::optional<long> index_lo;
    double tol = Tolerances{}.boundary;
    std::string format = "json";
    std::string out;
    unsigned threads = 0;
};

struct Outcome {
    std::string text;
    int code = kExitOk;
};

std::optional<double> optional_real(const std::string& text) {
    if (text.empty()) {
        return std::nullopt;
    }
    return parse_real(text);
}

double required_real(const std::string& text, const char* flag) {
    if (text.empty()) {
        throw InvalidInput(std::string("missing required flag ") + flag);
    }
    return parse_real(text);
}

std::vector<double> real_list(const std::string& text, const char* flag) {
    std::vector<double> out;
    for (const std::string& item : split_list(text)) {
        if (item.empty()) {
            throw InvalidInput(std::string("empty entry in ") + flag);
        }
        out.push_back(parse_real(item));
    }
    return out;
}

std::pair<long, long> parse_range(const std::string& text) {
    const auto parts = split_list(text, ':');
    if (parts.size() != 2) {
        throw InvalidInput("range must look like lo:hi, got '" + text + "'");
    }
    try {
        std::size_t u1 = 0, u2 = 0;
        const long lo = std::stol(parts[0], &u1);
        const long hi = std::stol(parts[1], &u2);
        if (u1 != parts[0].size() || u2 != parts[1].size() || lo > hi) {
            throw InvalidInput("bad range '" + text + "'");
        }
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw InvalidInput("bad range '" + text + "'");
    }
}

std::vector<double> grid_axis(const std::string& list, const std::string& range, const char* flag) {
    if (!list.empty() && !range.empty()) {
        throw InvalidInput(std::string("give either a list or a range for ") + flag);
    }
    if (!range.empty()) {
        const auto parts = split_list(range, ':');
        if (parts.size() != 3) {
            throw InvalidInput("grid range must look like lo:hi:count, got '" + range + "'");
        }
        long count = 0;
        try {
            count = std::stol(parts[2]);
        } catch (const std::logic_error&) {
            throw InvalidInput("bad point count in '" + range + "'");
        }
        return linear_grid(parse_real(parts[0]), parse_real(parts[1]), count);
    }
    if (list.empty()) {
        return {};
    }
    return real_list(list, flag);
}

RepLabel label_triple(const std::string& text, const char* flag) {
    const auto values = real_list(text, flag);
    if (values.size() != 3) {
        throw InvalidInput(std::string(flag) + " expects nu0,B,lambda0");
    }
    return RepLabel(values[0], values[1], values[2]);
}

Tolerances tolerances(const Flags& f) {
    Tolerances tol;
    tol.boundary = f.tol;
    return tol;
}

Json flags_echo(const Flags& f) {
    Json j = Json::object();
    const auto put = [&](const char* key, const std::string& value) {
        if (!value.empty()) {
            j[key] = value;
        }
    };
    put("q", f.q);
    put("alpha", f.alpha);
    put("nu0", f.nu0);
    put("B", f.b);
    put("lambda0", f.lambda0);
    put("family", f.family);
    put("range", f.range);
    put("a", f.label_a);
    put("b", f.label_b);
    put("q_range", f.q_range);
    put("B_range", f.b_range);
    put("q_path", f.q_path);
    put("B_path", f.b_path);
    if (f.dim > 0) {
        j["dim"] = f.dim;
    }
    if (f.window > 0) {
        j["window"] = f.window;
    }
    if (f.index_lo) {
        j["index_lo"] = *f.index_lo;
    }
    return j;
}

std::string csv_optional(const std::optional<double>& v) { return v ? format_double(*v) : std::string{}; }

std::string csv_bound(const std::optional<long>& v, const char* infinite) {
    return v ? std::to_string(*v) : std::string(infinite);
}

std::string classes_csv(const std::vector<RepClass>& classes) {
    std::ostringstream os;
    os << "family,index_lo,index_hi,forced_lambda0,lambda0_min,lambda0_strict\n";
    for (const RepClass& rep : classes) {
        os << family_name(rep.family) << ',' << csv_bound(rep.index_lo, "-inf") << ','
           << csv_bound(rep.index_hi, "+inf") << ',' << csv_optional(rep.forced_lambda0) << ','
           << (rep.lambda0_constraint ? format_double(rep.lambda0_constraint->min) : "") << ','
           << (rep.lambda0_constraint ? (rep.lambda0_constraint->strict ? "true" : "false") : "") << '\n';
    }
    return os.str();
}

Outcome finish(const Flags& f, const Json& report, const std::string& csv, int code = kExitOk) {
    return Outcome{f.format == "csv" ? csv : dump_json(report) + "\n", code};
}

// ---- classify ---------------------------------------------------------------

Outcome cmd_classify(const Flags& f, std::ostream& err) {
    const Tolerances tol = tolerances(f);
    const AlgebraParams params = make_params(required_real(f.q, "--q"), parse_real(f.alpha));
    const double nu0 = parse_real(f.nu0);
    const double b = required_real(f.b, "--B");
    const long window = f.window > 0 ? f.window : 60;
    Json report = report_envelope("classify", flags_echo(f), tol);

    if (f.lambda0.empty()) {
        const std::vector<RepClass> classes = enumerate_classes(params, nu0, b, tol);
        Json list = Json::array();
        for (const RepClass& rep : classes) {
            list.push_back(to_json(rep));
        }
        report["result"] = Json{{"mode", "enumerate"},
                                {"family_set", family_set_label(classes)},
                                {"classes", list},
                                {"thresholds", to_json(thresholds(params, nu0, b))}};
        if (classes.empty()) {
            err << "qosc: no representation family exists at q = " << format_double(params.q())
                << ", B = " << format_double(b) << "\n";
            return finish(f, report, classes_csv(classes), kExitNoRepresentation);
        }
        return finish(f, report, classes_csv(classes));
    }

    const RepLabel label(nu0, b, parse_real(f.lambda0));
    try {
        const RepClass rep = classify_label(params, label, tol);
        const PositivityResult pos = positivity_scan(params, label, rep, window, tol);
        const long lo = std::max(-5L, rep.index_lo.value_or(-5));
        const long hi = std::min(5L, rep.index_hi.value_or(5));
        Json excerpt = Json::array();
        for (long n = lo; n <= hi; ++n) {
            excerpt.push_back(Json{{"n", n}, {"lambda", lambda_closed(params, label, n)}});
        }
        report["result"] = Json{{"mode", "label"},
                                {"status", "ok"},
                                {"class", to_json(rep)},
                                {"thresholds", to_json(thresholds(params, nu0, b, label.lambda0()))},
                                {"casimir", to_json(casimir_values(params, label))},
                                {"positivity", Json{{"window", window},
                                                    {"ok", pos.ok},
                                                    {"first_violation", pos.first_violation
                                                                            ? Json(*pos.first_violation)
                                                                            : Json(nullptr)}}},
                                {"spectrum_excerpt", excerpt}};
        return finish(f, report, classes_csv({rep}));
    } catch (const NoRepresentation& e) {
        err << "qosc: " << e.what() << "\n";
        report["result"] = Json{{"mode", "label"}, {"status", "no_representation"}, {"message", e.what()}};
        return finish(f, report, classes_csv({}), kExitNoRepresentation);
    }
}

// ---- spectrum ---------------------------------------------------------------

Outcome cmd_spectrum(const Flags& f) {
    const Tolerances tol = tolerances(f);
    const AlgebraParams params = make_params(required_real(f.q, "--q"), parse_real(f.alpha));
    const RepLabel label(parse_real(f.nu0), required_real(f.b, "--B"),
                         optional_real(f.lambda0).value_or(0.0));
    long lo = 0, hi = 10;
    if (!f.range.empty()) {
        std::tie(lo, hi) = parse_range(f.range);
    } else if (f.window > 0) {
        lo = -f.window;
        hi = f.window;
    }
    const Spectrum s = lambda_recurrence(params, label, lo, hi, tol);

    std::ostringstream csv;
    csv << "n,lambda,mu\n";
    Json mus = Json::array();
    for (long n = lo; n <= hi; ++n) {
        const double m = n < hi ? s.at(n + 1) : mu(params, label, n);
        mus.push_back(m);
        csv << n << ',' << format_double(s.at(n)) << ',' << format_double(m) << '\n';
    }
    Json report = report_envelope("spectrum", flags_echo(f), tol);
    report["result"] = Json{{"spectrum", to_json(s)}, {"mu", mus}};
    return finish(f, report, csv.str());
}

// ---- matrix / verify --------------------------------------------------------

struct Built {
    AlgebraParams params;
    OperatorQuad quad;
};

Built build_from_flags(const Flags& f, const Tolerances& tol) {
    const AlgebraParams params = make_params(required_real(f.q, "--q"), parse_real(f.alpha));
    const double nu0 = parse_real(f.nu0);
    const double q = params.q();

    RepClass rep;
    RepLabel label(nu0, 0.0, 0.0);
    if (!f.family.empty()) {
        const auto family = parse_family(f.family);
        if (!family) {
            throw InvalidInput("unknown family '" + f.family + "'");
        }
        double b = 0.0;
        switch (*family) {
        case Family::OneDimensional:
            b = -1.0;
            break;
        case Family::TwoDimensionalOdd:
            b = b_star(q);
            break;
        case Family::TwoDimensionalEven:
            b = -b_star(q);
            break;
        default:
            b = required_real(f.b, "--B");
            break;
        }
        const RepClass shape = canonical_class(*family, params, nu0, b, tol);
        const double lambda0 = shape.forced_lambda0 ? std::max(0.0, *shape.forced_lambda0)
                                                    : required_real(f.lambda0, "--lambda0");
        label = RepLabel(nu0, b, lambda0);
        rep = classify_label(params, label, tol);
        if (rep.family != *family) {
            throw NoRepresentation("label classifies as " + std::string(family_name(rep.family)) + ", not " +
                                   std::string(family_name(*family)));
        }
    } else {
        label = RepLabel(nu0, required_real(f.b, "--B"), optional_real(f.lambda0).value_or(0.0));
        rep = classify_label(params, label, tol);
    }

    long dim = f.dim;
    if (dim <= 0) {
        dim = rep.finite() ? (*rep.index_hi - *rep.index_lo + 1) : 8;
    }
    BuildOptions options;
    options.index_lo = f.index_lo;
    options.tol = tol;
    return Built{params, build(params, label, rep, dim, options)};
}

Outcome cmd_matrix(const Flags& f) {
    const Tolerances tol = tolerances(f);
    const Built built = build_from_flags(f, tol);
    const OperatorQuad& quad = built.quad;

    std::ostringstream csv;
    csv << "matrix,row,col,n_row,n_col,value\n";
    const auto rows = [&](const char* name, const Eigen::MatrixXd& m, bool diagonal) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            for (Eigen::Index j = 0; j < m.cols(); ++j) {
                if ((diagonal && i == j) || (!diagonal && m(i, j) != 0.0)) {
                    csv << name << ',' << i << ',' << j << ',' << quad.index_offset + i << ','
                        << quad.index_offset + j << ',' << format_double(m(i, j)) << '\n';
                }
            }
        }
    };
    rows("a", quad.a, false);
    rows("a_dag", quad.a_dag, false);
    rows("N", quad.n_op, true);
    rows("K", quad.k_op, true);

    Json report = report_envelope("matrix", flags_echo(f), tol);
    report["result"] = to_json(quad);
    return finish(f, report, csv.str());
}

Outcome cmd_verify(const Flags& f) {
    const Tolerances tol = tolerances(f);
    const Built built = build_from_flags(f, tol);
    const ResidualReport r = verify(built.quad, built.params);
    const bool ok = r.rel1_norm <= 1e-9 * std::max(1.0, r.scale) &&
                    std::max({r.comm_n_a, r.comm_n_adag, r.anticomm_k_a, r.anticomm_k_adag, r.comm_n_k,
                              r.hermiticity, r.casimir_residual}) <= 1e-12 * std::max(1.0, r.scale);

    std::ostringstream csv;
    csv << "relation,residual\n";
    const Json rj = to_json(r);
    for (const auto& [key, value] : rj.items()) {
        csv << key << ',' << (value.is_number_float() ? format_double(value.get<double>()) : value.dump()) << '\n';
    }
    Json report = report_envelope("verify", flags_echo(f), tol);
    report["result"] = Json{{"class", to_json(built.quad.rep)},
                            {"label", to_json(built.quad.label)},
                            {"dim", built.quad.dim()},
                            {"index_offset", built.quad.index_offset},
                            {"residuals", rj},
                            {"casimir", to_json(casimir_values(built.params, built.quad.label))},
                            {"within_tolerance", ok}};
    return finish(f, report, csv.str());
}

// ---- scan -------------------------------------------------------------------

Outcome cmd_scan(const Flags& f) {
    const Tolerances tol = tolerances(f);
    const std::vector<double> qs = grid_axis(f.q, f.q_range, "--q");
    const std::vector<double> bs = grid_axis(f.b, f.b_range, "--B");
    const ScanGrid grid = scan_grid(qs, bs, parse_real(f.alpha), parse_real(f.nu0), tol, f.threads);

    std::ostringstream csv;
    csv << "q,B,families,boundary\n";
    Json cells = Json::array();
    for (const ScanCell& cell : grid.cells) {
        const std::string label = family_set_label(cell.classes);
        csv << format_double(cell.q) << ',' << format_double(cell.b) << ',' << label << ','
            << (cell.boundary ? "true" : "false") << '\n';
        Json families = Json::array();
        for (const RepClass& rep : cell.classes) {
            families.push_back(family_name(rep.family));
        }
        cells.push_back(Json{{"q", cell.q}, {"B", cell.b}, {"families", families}, {"boundary", cell.boundary}});
    }
    Json report = report_envelope("scan", flags_echo(f), tol);
    report["result"] = Json{{"q_values", grid.q_values}, {"B_values", grid.b_values}, {"cells", cells}};
    return finish(f, report, csv.str());
}

// ---- equiv ------------------------------------------------------------------

Outcome cmd_equiv(const Flags& f) {
    const Tolerances tol = tolerances(f);
    const AlgebraParams params = make_params(required_real(f.q, "--q"), parse_real(f.alpha));
    if (f.label_a.empty() || f.label_b.empty()) {
        throw InvalidInput("equiv needs --a and --b (nu0,B,lambda0)");
    }
    const RepLabel first = label_triple(f.label_a, "--a");
    const RepLabel second = label_triple(f.label_b, "--b");
    const std::optional<long> shift = equivalence_shift(params, first, second, tol);

    std::ostringstream csv;
    csv << "equivalent,shift\n" << (shift ? "true" : "false") << ',' << (shift ? std::to_string(*shift) : "") << '\n';
    Json report = report_envelope("equiv", flags_echo(f), tol);
    report["result"] = Json{{"equivalent", shift.has_value()}, {"shift", shift ? Json(*shift) : Json(nullptr)}};
    return finish(f, report, csv.str());
}

// ---- limits -----------------------------------------------------------------

Outcome cmd_limits(const Flags& f) {
    const Tolerances tol = tolerances(f);
    const auto family = parse_family(f.family);
    if (!family) {
        throw InvalidInput("limits needs --family, got '" + f.family + "'");
    }
    if (f.q_path.empty() == f.b_path.empty()) {
        throw InvalidInput("limits needs exactly one of --q-path or --B-path");
    }
    const PathKind kind = f.q_path.empty() ? PathKind::B : PathKind::Q;
    const std::vector<double> path = real_list(kind == PathKind::Q ? f.q_path : f.b_path, "path");
    const LimitProbe probe = probe_limits(*family, kind, path, optional_real(f.q), optional_real(f.b),
                                          parse_real(f.alpha), parse_real(f.nu0), tol);

    std::ostringstream csv;
    csv << "step,q,B,b_star,exists,lambda0_required,head\n";
    Json points = Json::array();
    for (std::size_t i = 0; i < probe.points.size(); ++i) {
        const LimitPoint& p = probe.points[i];
        std::string head;
        for (double v : p.head) {
            head += (head.empty() ? "" : ";") + format_double(v);
        }
        csv << i << ',' << format_double(p.q) << ',' << format_double(p.b) << ',' << format_double(p.b_star) << ','
            << (p.exists ? "true" : "false") << ',' << csv_optional(p.lambda0_required) << ',' << head << '\n';
        points.push_back(Json{{"q", p.q},
                              {"B", p.b},
                              {"b_star", p.b_star},
                              {"exists", p.exists},
                              {"lambda0_required", p.lambda0_required ? Json(*p.lambda0_required) : Json(nullptr)},
                              {"head", p.head}});
    }
    Json report = report_envelope("limits", flags_echo(f), tol);
    report["result"] = Json{
        {"family", family_name(probe.family)},
        {"probe", kind == PathKind::Q ? "q->1" : "B->0"},
        {"note", kind == PathKind::Q ? "q path; B tracks the family's representative value unless --B is given"
                                     : "B->0 at fixed q stands in for the alpha->0 limit (B = 2 alpha gamma exp(-i pi nu0))"},
        {"tracking", probe.tracking},
        {"points", points},
        {"threshold_diverges", probe.threshold_diverges},
        {"limit", probe.survives ? "exists" : "does not exist"}};
    return finish(f, report, csv.str());
}

void add_common(CLI::App* cmd, Flags& f) {
    cmd->add_option("--q", f.q, "deformation parameter q (> 0, != 1)");
    cmd->add_option("--alpha", f.alpha, "coupling alpha (!= 0)")->capture_default_str();
    cmd->add_option("--nu0", f.nu0, "eigenvalue of N on Psi_0")->capture_default_str();
    cmd->add_option("--B", f.b, "B = 2 alpha gamma exp(-i pi nu0)");
    cmd->add_option("--lambda0", f.lambda0, "eigenvalue of a^+ a on Psi_0");
    cmd->add_option("--dim", f.dim, "matrix dimension");
    cmd->add_option("--window", f.window, "index window half-width");
    cmd->add_option("--tol", f.tol, "boundary epsilon")->capture_default_str();
    cmd->add_option("--format", f.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--out", f.out, "write the report to FILE instead of stdout");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Classify, construct and verify representations of the q-deformed generalized oscillator algebra",
                 "qosc"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);
    Flags f;

    auto* classify = app.add_subcommand("classify", "enumerate families at (q, B) or classify a full label");
    auto* spectrum = app.add_subcommand("spectrum", "lambda_n by recurrence over an index range");
    auto* matrix = app.add_subcommand("matrix", "matrices of a, a^+, N, K");
    auto* verify_cmd = app.add_subcommand("verify", "residuals of the defining relations");
    auto* scan = app.add_subcommand("scan", "family sets over a q x B grid");
    auto* equiv = app.add_subcommand("equiv", "equivalence of two doubly-unbounded labels");
    auto* limits = app.add_subcommand("limits", "q -> 1 and B -> 0 limit probes");
    for (auto* cmd : {classify, spectrum, matrix, verify_cmd, scan, equiv, limits}) {
        add_common(cmd, f);
    }
    spectrum->add_option("--range", f.range, "index range lo:hi (must contain 0)");
    for (auto* cmd : {matrix, verify_cmd}) {
        cmd->add_option("--family", f.family, "one-dim, two-dim-odd, two-dim-even, fock, anti-fock, unbounded");
        cmd->add_option("--index-lo", f.index_lo, "first basis index of an Unbounded window");
    }
    scan->add_option("--q-range", f.q_range, "lo:hi:count");
    scan->add_option("--B-range", f.b_range, "lo:hi:count");
    scan->add_option("--threads", f.threads, "worker threads (0 = hardware concurrency)");
    equiv->add_option("--a", f.label_a, "first label nu0,B,lambda0");
    equiv->add_option("--b", f.label_b, "second label nu0,B,lambda0");
    limits->add_option("--family", f.family, "family to follow");
    limits->add_option("--q-path", f.q_path, "comma list of q values approaching 1");
    limits->add_option("--B-path", f.b_path, "comma list of B values approaching 0 (needs --q)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << kToolVersion << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "qosc: " << e.what() << "\n";
        return kExitInvalidInput;
    }

    Outcome outcome;
    try {
        if (classify->parsed()) {
            outcome = cmd_classify(f, err);
        } else if (spectrum->parsed()) {
            outcome = cmd_spectrum(f);
        } else if (matrix->parsed()) {
            outcome = cmd_matrix(f);
        } else if (verify_cmd->parsed()) {
            outcome = cmd_verify(f);
        } else if (scan->parsed()) {
            outcome = cmd_scan(f);
        } else if (equiv->parsed()) {
            outcome = cmd_equiv(f);
        } else {
            outcome = cmd_limits(f);
        }
    } catch (const NoRepresentation& e) {
        err << "qosc: " << e.what() << "\n";
        return kExitNoRepresentation;
    } catch (const Error& e) {
        err << "qosc: " << e.what() << "\n";
        return kExitInvalidInput;
    }

    if (f.out.empty()) {
        out << outcome.text;
    } else {
        std::ofstream file(f.out);
        if (!file) {
            err << "qosc: cannot open " << f.out << " for writing\n";
            return kExitInvalidInput;
        }
        file << outcome.text;
    }
    return outcome.code;
}

} // namespace qosc
