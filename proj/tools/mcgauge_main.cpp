/// @file mcgauge_main.cpp
/// Batch front end. Reads a problem document (file or stdin), dispatches to
/// the check / cohomology / solve / linearize pipelines, and emits a report
/// (JSON by default, plain text on request). `example <name>` prints a
/// bundled input. Exit codes: 0 success or equivalent, 2 obstructed (valid
/// run, negative answer), 3 invalid input, 4 internal consistency failure.

#include <CLI11.hpp>

#include <mcgauge/cohomology.hpp>
#include <mcgauge/corpus.hpp>
#include <mcgauge/errors.hpp>
#include <mcgauge/jsonio.hpp>
#include <mcgauge/multivec.hpp>
#include <mcgauge/solver.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace mcgauge;

constexpr int kExitOk = 0;
constexpr int kExitObstructed = 2;
constexpr int kExitInvalidInput = 3;
constexpr int kExitInternal = 4;

// ---------------------------------------------------------------------------
// Plumbing
// ---------------------------------------------------------------------------

struct Options {
    std::string input;  // path, or "-" / empty for stdin
    std::optional<int> jet_order;
    std::optional<int> x_cap;
    std::string format = "json";
    std::string out;
    bool timing = false;
};

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw InputError("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

void write_output(const std::string& out, const std::string& text) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out, std::ios::binary);
    if (!file) throw InputError("cannot open output file '" + out + "'");
    file << text;
}

/// Load the problem and apply the flag overrides (flags win over the file).
ProblemDocument load_problem(const Options& opt) {
    ProblemDocument doc = parse_problem(read_input(opt.input));
    if (opt.jet_order) doc.jet_order = *opt.jet_order;
    if (opt.x_cap) doc.x_cap = *opt.x_cap;
    return doc;
}

std::vector<std::string> scalars_to_strings(const std::vector<Scalar>& v) {
    std::vector<std::string> r;
    r.reserve(v.size());
    for (const Scalar& c : v) r.push_back(scalar_to_string(c));
    return r;
}

ObstructionDoc obstruction_doc(const ObstructionReport& ob) {
    ObstructionDoc d;
    d.level = ob.level;
    d.dim_h1 = ob.dim_h1;
    for (const auto& rep : ob.representatives) d.representatives.push_back(scalars_to_strings(rep));
    d.cocycle = scalars_to_strings(ob.cocycle);
    return d;
}

SolveReportDoc solve_doc(const SolverReport& report) {
    SolveReportDoc d;
    d.status = report.status == SolveStatus::equivalent ? "equivalent" : "obstructed";
    d.gauge = from_multivec(report.gauge.log).terms;
    for (const IterationLog& it : report.iterations)
        d.iterations.push_back(IterationDoc{it.level, it.x_norm.str(), it.residual_norm.str()});
    d.final_residual = from_multivec(report.final_residual).terms;
    if (report.obstruction) d.obstruction = obstruction_doc(*report.obstruction);
    return d;
}

/// Caps for the stepped-cap complex at bivector cap B (the same policy the
/// solver uses for its descent): bases step by the x-growth of [j^1 gamma, .]
/// on either side of B. For p = 0 caps are irrelevant.
std::array<int, 4> report_caps(const MultiVec& gamma, std::optional<int> x_cap) {
    if (gamma.space().p == 0) return {0, 0, 0, 0};
    if (!x_cap) throw InputError("a finite x-degree cap is required when p > 0");
    const int g = max_x_degree(sp_truncate_y(gamma.body(), 1)).value_or(0);
    const int b = *x_cap;
    return {std::max(0, b - 2 * g), std::max(0, b - g), b, b + g};
}

// ---------------------------------------------------------------------------
// Pipelines: each returns (report, exit code)
// ---------------------------------------------------------------------------

struct Outcome {
    ReportDocument report;
    int exit_code = kExitOk;
};

/// Tangency, the Maurer-Cartan defect with its L-norm, the Jacobiator
/// cross-validation over all coordinate triples, and — when pi is valid to
/// first order only — whether an order-2 polynomial extension exists.
Outcome run_check(const ProblemDocument& doc) {
    if (!doc.check) throw InputError("the document has no check section");
    const MultiVec pi = to_multivec(doc, doc.check->pi);
    if (pi.degree() != 2) throw InputError("check.pi must name a bivector");

    CheckReportDoc r;
    r.tangent = is_tangent(pi);
    MultiVec defect = MultiVec::zero(pi.space(), pi.jet_order(), 3);
    if (r.tangent) defect = mc_defect(pi);
    r.maurer_cartan = r.tangent && defect.is_zero();
    r.defect_norm = filtration_info(defect).norm.str();

    // Cross-validation: 1/2 <[pi,pi], df^dg^dh> = +jacobiator for every
    // triple of coordinate functions.
    r.jacobiator_consistent = true;
    const int n = pi.space().dim();
    for (int a = 1; a <= n && r.tangent; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c) {
                std::vector<std::int32_t> ea(n, 0), eb(n, 0), ec(n, 0);
                ea[a - 1] = eb[b - 1] = ec[c - 1] = 1;
                const SuperPoly f = SuperPoly::monomial(pi.space(), Scalar(1), ea, {});
                const SuperPoly g = SuperPoly::monomial(pi.space(), Scalar(1), eb, {});
                const SuperPoly h = SuperPoly::monomial(pi.space(), Scalar(1), ec, {});
                const SuperPoly lhs = contract3(defect, f, g, h);
                const SuperPoly rhs = Scalar(2) * jacobiator(pi, f, g, h);
                if (!(lhs == rhs)) r.jacobiator_consistent = false;
            }

    // Order-2 analysis applies when pi fails MC but holds modulo y^2.
    if (r.tangent && !r.maurer_cartan && filtration_info(defect).min_y_degree >= 2) {
        std::vector<int> caps;
        const int top = doc.x_cap.value_or(4);
        for (int c = 0; c <= top; ++c) caps.push_back(c);
        bool extendable = false;
        for (const ExtensionAttempt& at : extend_order2(pi, caps))
            extendable = extendable || at.correction.has_value();
        r.order2_extendable = extendable;
    }

    Outcome out;
    out.report.command = "check";
    out.report.status = r.maurer_cartan ? "maurer-cartan" : "not-maurer-cartan";
    out.report.check = std::move(r);
    return out;
}

Outcome run_cohomology(const ProblemDocument& doc) {
    if (!doc.cohomology) throw InputError("the document has no cohomology section");
    const MultiVec gamma = to_multivec(doc, doc.cohomology->gamma);
    const std::array<int, 4> caps = report_caps(gamma, doc.x_cap);

    CohomologyReportDoc r;
    for (const int level : doc.cohomology->levels) {
        const QuotientComplex complex = assemble_quotient_complex(gamma, level, caps);
        CohomologyReportDoc::LevelEntry entry;
        entry.level = level;
        for (int d = 0; d < 4; ++d) entry.basis_dims[d] = complex.basis[d].dim();
        entry.dims = cohomology_dims(complex);
        r.levels.push_back(entry);
    }

    Outcome out;
    out.report.command = "cohomology";
    out.report.status = "ok";
    out.report.cohomology = std::move(r);
    return out;
}

Outcome run_solve(const ProblemDocument& doc) {
    if (!doc.solve) throw InputError("the document has no solve section");
    const SolveSection& sec = *doc.solve;
    Outcome out;
    out.report.command = "solve";

    if (sec.first_order) {
        const MultiVec pi1 = to_multivec(doc, *sec.first_order);
        std::vector<int> caps = sec.x_caps;
        if (caps.empty()) caps.push_back(doc.x_cap.value_or(0));
        ExtensionReportDoc r;
        bool extendable = false;
        for (const ExtensionAttempt& at : extend_order2(pi1, caps)) {
            ExtensionAttemptDoc a;
            a.x_cap = at.x_cap;
            a.solvable = at.correction.has_value();
            if (at.correction) a.correction = from_multivec(*at.correction).terms;
            a.certificate = scalars_to_strings(at.certificate);
            a.cocycle = scalars_to_strings(at.cocycle);
            extendable = extendable || a.solvable;
            r.attempts.push_back(std::move(a));
        }
        r.status = extendable ? "extendable" : "obstructed";
        out.report.status = r.status;
        out.report.extension = std::move(r);
        out.exit_code = extendable ? kExitOk : kExitObstructed;
        return out;
    }

    const MCElement gamma = make_mc_element(to_multivec(doc, *sec.gamma));
    const MCElement gamma_prime = make_mc_element(to_multivec(doc, *sec.gamma_prime));
    const SolverReport report = solve_equivalence(gamma, gamma_prime, doc.x_cap);
    out.report.status =
        report.status == SolveStatus::equivalent ? "equivalent" : "obstructed";
    out.report.solve = solve_doc(report);
    out.exit_code = report.status == SolveStatus::equivalent ? kExitOk : kExitObstructed;
    return out;
}

Outcome run_linearize(const ProblemDocument& doc) {
    if (!doc.linearize) throw InputError("the document has no linearize section");
    const MCElement pi = make_mc_element(to_multivec(doc, doc.linearize->pi));
    const SolverReport report = linearize(pi, doc.x_cap);
    Outcome out;
    out.report.command = "linearize";
    out.report.status =
        report.status == SolveStatus::equivalent ? "equivalent" : "obstructed";
    out.report.solve = solve_doc(report);
    out.exit_code = report.status == SolveStatus::equivalent ? kExitOk : kExitObstructed;
    return out;
}

// ---------------------------------------------------------------------------
// Text rendering
// ---------------------------------------------------------------------------

std::string terms_to_text(const std::vector<TermDoc>& terms) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) os << "  +  ";
        os << "(" << scalar_to_string(terms[i].c) << ")";
        for (std::size_t j = 0; j < terms[i].even.size(); ++j)
            if (terms[i].even[j]) os << " u" << (j + 1) << "^" << terms[i].even[j];
        for (const int o : terms[i].odd) os << " xi" << o;
    }
    return os.str();
}

std::string render_text(const ReportDocument& doc) {
    std::ostringstream os;
    os << doc.tool << " " << doc.command << ": " << doc.status << "\n";
    if (doc.check) {
        os << "  tangent: " << (doc.check->tangent ? "yes" : "no") << "\n";
        os << "  maurer-cartan: " << (doc.check->maurer_cartan ? "yes" : "no")
           << "  (defect norm " << doc.check->defect_norm << ")\n";
        os << "  jacobiator cross-check: "
           << (doc.check->jacobiator_consistent ? "consistent" : "INCONSISTENT") << "\n";
        if (doc.check->order2_extendable)
            os << "  order-2 extension: "
               << (*doc.check->order2_extendable ? "exists" : "none under the swept caps")
               << "\n";
    }
    if (doc.cohomology)
        for (const auto& e : doc.cohomology->levels)
            os << "  level " << e.level << ": basis (" << e.basis_dims[0] << ", "
               << e.basis_dims[1] << ", " << e.basis_dims[2] << ", " << e.basis_dims[3]
               << "), dim H = (" << e.dims[0] << ", " << e.dims[1] << ", " << e.dims[2]
               << ")\n";
    if (doc.solve) {
        for (const auto& it : doc.solve->iterations)
            os << "  level " << it.level << ": |X| = " << it.x_norm
               << ", residual " << it.residual_norm << "\n";
        os << "  gauge log: " << terms_to_text(doc.solve->gauge) << "\n";
        os << "  final residual: " << terms_to_text(doc.solve->final_residual) << "\n";
        if (doc.solve->obstruction)
            os << "  obstruction at level " << doc.solve->obstruction->level
               << ", dim H^1 = " << doc.solve->obstruction->dim_h1 << "\n";
    }
    if (doc.extension)
        for (const auto& at : doc.extension->attempts) {
            os << "  x-cap " << at.x_cap << ": "
               << (at.solvable ? "solvable, correction " + terms_to_text(at.correction)
                               : "no polynomial solution (certificate on file)")
               << "\n";
        }
    if (doc.timing_ms) os << "  time: " << *doc.timing_ms << " ms\n";
    return os.str();
}

int emit(Outcome outcome, const Options& opt,
         const std::chrono::steady_clock::time_point& started) {
    if (opt.timing)
        outcome.report.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                       std::chrono::steady_clock::now() - started)
                                       .count();
    write_output(opt.out,
                 opt.format == "text" ? render_text(outcome.report)
                                      : print_report(outcome.report));
    return outcome.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mcgauge: formal gauge equivalence of Poisson structures along a submanifold"};
    app.require_subcommand(1);

    Options opt;
    std::string example_name;

    const auto add_common = [&](CLI::App* cmd, bool takes_input) {
        if (takes_input)
            cmd->add_option("input", opt.input, "problem file ('-' or absent reads stdin)");
        cmd->add_option("--jet-order", opt.jet_order, "override the document's jet order");
        cmd->add_option("--x-cap", opt.x_cap, "override the document's x-degree cap");
        cmd->add_option("--format", opt.format, "report format")
            ->check(CLI::IsMember({"json", "text"}));
        cmd->add_option("--out", opt.out, "write the report to a file instead of stdout");
        cmd->add_flag("--timing", opt.timing, "measure wall time into timing_ms");
    };

    CLI::App* check = app.add_subcommand("check", "tangency, Maurer-Cartan defect, Jacobiator");
    CLI::App* cohomology =
        app.add_subcommand("cohomology", "dim H^0..H^2 at the requested levels");
    CLI::App* solve =
        app.add_subcommand("solve", "gauge equivalence or order-2 extension sweep");
    CLI::App* linearize = app.add_subcommand("linearize", "equivalence with the linear model");
    CLI::App* example = app.add_subcommand("example", "print a bundled example problem");
    add_common(check, true);
    add_common(cohomology, true);
    add_common(solve, true);
    add_common(linearize, true);
    example->add_option("name", example_name, "one of: r3-nonextendable, so3-roundtrip, abelian-obstructed")
        ->required();
    example->add_option("--out", opt.out, "write the document to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalidInput;
    }

    const auto started = std::chrono::steady_clock::now();
    try {
        if (example->parsed()) {
            write_output(opt.out, print_problem(corpus_example(example_name)));
            return kExitOk;
        }
        const ProblemDocument doc = load_problem(opt);
        if (check->parsed()) return emit(run_check(doc), opt, started);
        if (cohomology->parsed()) return emit(run_cohomology(doc), opt, started);
        if (solve->parsed()) return emit(run_solve(doc), opt, started);
        return emit(run_linearize(doc), opt, started);
    } catch (const InputError& e) {
        std::cerr << "mcgauge: invalid input: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const InternalError& e) {
        std::cerr << "mcgauge: internal consistency failure: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "mcgauge: " << e.what() << "\n";
        return kExitInternal;
    }
}
