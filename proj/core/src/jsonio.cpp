/// @file jsonio.cpp
/// JSON encoding of problem and report documents over nlohmann::json. The
/// object type is a sorted map, so printing is deterministic by
/// construction; all validation errors surface as InputError with the
/// offending path in the message.

#include "mcgauge/jsonio.hpp"

#include <json.hpp>

namespace mcgauge {

namespace {

using json = nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& why) {
    throw InputError("document error at " + path + ": " + why);
}

const json& expect(const json& j, const std::string& path, json::value_t type,
                   const char* what) {
    if (j.type() != type) fail(path, std::string("expected ") + what);
    return j;
}

int expect_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<int>();
}

std::string expect_string(const json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
}

Scalar expect_scalar(const json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "rationals must be \"num/den\" strings");
    try {
        return scalar_from_string(j.get<std::string>());
    } catch (const InputError& e) {
        fail(path, e.what());
    }
}

/// Strict object walk: every key must be consumed by the caller's table.
void reject_unknown_keys(const json& obj, const std::string& path,
                         std::initializer_list<const char*> known) {
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) fail(path + "." + key, "unknown key");
    }
}

// ---------------------------------------------------------------------------
// Problem side
// ---------------------------------------------------------------------------

json term_to_json(const TermDoc& t) {
    return json{{"c", scalar_to_string(t.c)}, {"even", t.even}, {"odd", t.odd}};
}

TermDoc term_from_json(const json& j, const std::string& path) {
    expect(j, path, json::value_t::object, "an object");
    reject_unknown_keys(j, path, {"c", "even", "odd"});
    if (!j.contains("c") || !j.contains("even") || !j.contains("odd"))
        fail(path, "a term needs c, even, odd");
    TermDoc t{expect_scalar(j.at("c"), path + ".c"), {}, {}};
    for (const auto& e : expect(j.at("even"), path + ".even", json::value_t::array, "an array"))
        t.even.push_back(static_cast<std::int32_t>(expect_int(e, path + ".even[]")));
    for (const auto& o : expect(j.at("odd"), path + ".odd", json::value_t::array, "an array"))
        t.odd.push_back(expect_int(o, path + ".odd[]"));
    return t;
}

json multivec_to_json(const MultiVecDoc& m) {
    json terms = json::array();
    for (const TermDoc& t : m.terms) terms.push_back(term_to_json(t));
    return json{{"degree", m.degree}, {"terms", std::move(terms)}};
}

MultiVecDoc multivec_from_json(const json& j, const std::string& path) {
    expect(j, path, json::value_t::object, "an object");
    reject_unknown_keys(j, path, {"degree", "terms"});
    if (!j.contains("degree") || !j.contains("terms")) fail(path, "needs degree and terms");
    MultiVecDoc m{expect_int(j.at("degree"), path + ".degree"), {}};
    int idx = 0;
    for (const auto& t :
         expect(j.at("terms"), path + ".terms", json::value_t::array, "an array"))
        m.terms.push_back(term_from_json(t, path + ".terms[" + std::to_string(idx++) + "]"));
    return m;
}

json lie_algebra_to_json(const LieAlgebraDoc& g) {
    json rows = json::array();
    for (const auto& [ijk, c] : g.brackets)
        rows.push_back(json::array({ijk[0], ijk[1], ijk[2], scalar_to_string(c)}));
    return json{{"brackets", std::move(rows)}, {"dim", g.dim}};
}

LieAlgebraDoc lie_algebra_from_json(const json& j, const std::string& path) {
    expect(j, path, json::value_t::object, "an object");
    reject_unknown_keys(j, path, {"brackets", "dim"});
    if (!j.contains("dim") || !j.contains("brackets")) fail(path, "needs dim and brackets");
    LieAlgebraDoc g{expect_int(j.at("dim"), path + ".dim"), {}};
    int idx = 0;
    for (const auto& row :
         expect(j.at("brackets"), path + ".brackets", json::value_t::array, "an array")) {
        const std::string rpath = path + ".brackets[" + std::to_string(idx++) + "]";
        if (!row.is_array() || row.size() != 4) fail(rpath, "expected [i, j, k, c]");
        g.brackets.emplace_back(
            std::array<int, 3>{expect_int(row[0], rpath), expect_int(row[1], rpath),
                               expect_int(row[2], rpath)},
            expect_scalar(row[3], rpath + ".c"));
    }
    return g;
}

}  // namespace

ProblemDocument parse_problem(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("problem document is not valid JSON: ") + e.what());
    }
    expect(j, "$", json::value_t::object, "an object");
    reject_unknown_keys(j, "$",
                        {"space", "jet_order", "x_cap", "multivectors", "lie_algebra", "check",
                         "cohomology", "solve", "linearize"});

    ProblemDocument doc;
    if (!j.contains("space") || !j.contains("jet_order")) fail("$", "needs space and jet_order");
    const json& space = expect(j.at("space"), "$.space", json::value_t::object, "an object");
    reject_unknown_keys(space, "$.space", {"p", "q"});
    if (!space.contains("p") || !space.contains("q")) fail("$.space", "needs p and q");
    doc.space = SpaceModel{expect_int(space.at("p"), "$.space.p"),
                           expect_int(space.at("q"), "$.space.q")};
    doc.jet_order = expect_int(j.at("jet_order"), "$.jet_order");
    if (j.contains("x_cap")) doc.x_cap = expect_int(j.at("x_cap"), "$.x_cap");

    if (j.contains("multivectors")) {
        const json& mvs = expect(j.at("multivectors"), "$.multivectors", json::value_t::object,
                                 "an object");
        for (const auto& [name, value] : mvs.items())
            doc.multivectors.emplace(name,
                                     multivec_from_json(value, "$.multivectors." + name));
    }
    if (j.contains("lie_algebra"))
        doc.lie_algebra = lie_algebra_from_json(j.at("lie_algebra"), "$.lie_algebra");

    if (j.contains("check")) {
        const json& s = expect(j.at("check"), "$.check", json::value_t::object, "an object");
        reject_unknown_keys(s, "$.check", {"pi"});
        if (!s.contains("pi")) fail("$.check", "needs pi");
        doc.check = CheckSection{expect_string(s.at("pi"), "$.check.pi")};
    }
    if (j.contains("cohomology")) {
        const json& s =
            expect(j.at("cohomology"), "$.cohomology", json::value_t::object, "an object");
        reject_unknown_keys(s, "$.cohomology", {"gamma", "levels"});
        if (!s.contains("gamma") || !s.contains("levels")) fail("$.cohomology", "needs gamma and levels");
        CohomologySection sec{expect_string(s.at("gamma"), "$.cohomology.gamma"), {}};
        for (const auto& l : expect(s.at("levels"), "$.cohomology.levels", json::value_t::array,
                                    "an array"))
            sec.levels.push_back(expect_int(l, "$.cohomology.levels[]"));
        doc.cohomology = std::move(sec);
    }
    if (j.contains("solve")) {
        const json& s = expect(j.at("solve"), "$.solve", json::value_t::object, "an object");
        reject_unknown_keys(s, "$.solve", {"gamma", "gamma_prime", "first_order", "x_caps"});
        SolveSection sec;
        if (s.contains("gamma")) sec.gamma = expect_string(s.at("gamma"), "$.solve.gamma");
        if (s.contains("gamma_prime"))
            sec.gamma_prime = expect_string(s.at("gamma_prime"), "$.solve.gamma_prime");
        if (s.contains("first_order"))
            sec.first_order = expect_string(s.at("first_order"), "$.solve.first_order");
        if (s.contains("x_caps"))
            for (const auto& c :
                 expect(s.at("x_caps"), "$.solve.x_caps", json::value_t::array, "an array"))
                sec.x_caps.push_back(expect_int(c, "$.solve.x_caps[]"));
        const bool equivalence = sec.gamma.has_value() && sec.gamma_prime.has_value();
        const bool extension = sec.first_order.has_value();
        if (equivalence == extension)
            fail("$.solve", "give either gamma + gamma_prime or first_order (+ x_caps)");
        doc.solve = std::move(sec);
    }
    if (j.contains("linearize")) {
        const json& s =
            expect(j.at("linearize"), "$.linearize", json::value_t::object, "an object");
        reject_unknown_keys(s, "$.linearize", {"pi"});
        if (!s.contains("pi")) fail("$.linearize", "needs pi");
        doc.linearize = LinearizeSection{expect_string(s.at("pi"), "$.linearize.pi")};
    }
    return doc;
}

std::string print_problem(const ProblemDocument& doc) {
    json j;
    j["space"] = json{{"p", doc.space.p}, {"q", doc.space.q}};
    j["jet_order"] = doc.jet_order;
    if (doc.x_cap) j["x_cap"] = *doc.x_cap;
    if (!doc.multivectors.empty()) {
        json mvs = json::object();
        for (const auto& [name, m] : doc.multivectors) mvs[name] = multivec_to_json(m);
        j["multivectors"] = std::move(mvs);
    }
    if (doc.lie_algebra) j["lie_algebra"] = lie_algebra_to_json(*doc.lie_algebra);
    if (doc.check) j["check"] = json{{"pi", doc.check->pi}};
    if (doc.cohomology)
        j["cohomology"] = json{{"gamma", doc.cohomology->gamma}, {"levels", doc.cohomology->levels}};
    if (doc.solve) {
        json s = json::object();
        if (doc.solve->gamma) s["gamma"] = *doc.solve->gamma;
        if (doc.solve->gamma_prime) s["gamma_prime"] = *doc.solve->gamma_prime;
        if (doc.solve->first_order) s["first_order"] = *doc.solve->first_order;
        if (!doc.solve->x_caps.empty()) s["x_caps"] = doc.solve->x_caps;
        j["solve"] = std::move(s);
    }
    if (doc.linearize) j["linearize"] = json{{"pi", doc.linearize->pi}};
    return j.dump(2) + "\n";
}

MultiVec to_multivec(const ProblemDocument& doc, const std::string& name) {
    const auto it = doc.multivectors.find(name);
    if (it == doc.multivectors.end())
        throw InputError("no multivector named '" + name + "' in the document");
    const MultiVecDoc& m = it->second;
    SuperPoly body(doc.space);
    for (const TermDoc& t : m.terms)
        body = body + SuperPoly::monomial(doc.space, t.c, t.even, t.odd);
    return MultiVec(doc.space, doc.jet_order, m.degree, std::move(body));
}

MultiVecDoc from_multivec(const MultiVec& w) {
    MultiVecDoc m{w.degree(), {}};
    for (const auto& [key, c] : w.body().terms()) {
        TermDoc t{c, key.even, {}};
        for (int i = 0; i < kMaxDim; ++i)
            if (key.odd & (OddMask{1} << i)) t.odd.push_back(i + 1);
        m.terms.push_back(std::move(t));
    }
    return m;
}

LieAlgebraData to_lie_algebra(const LieAlgebraDoc& doc) {
    const int n = doc.dim;
    if (n <= 0) throw InputError("lie_algebra.dim must be positive");
    std::vector<Scalar> flat(static_cast<std::size_t>(n) * n * n, Scalar(0));
    for (const auto& [ijk, c] : doc.brackets) {
        const auto [i, j, k] = ijk;
        if (i < 1 || j < 1 || k < 1 || i > n || j > n || k > n)
            throw InputError("lie_algebra bracket indices out of range");
        if (i >= j) throw InputError("lie_algebra brackets must have i < j");
        flat[(static_cast<std::size_t>(i - 1) * n + (j - 1)) * n + (k - 1)] += c;
        flat[(static_cast<std::size_t>(j - 1) * n + (i - 1)) * n + (k - 1)] -= c;
    }
    return LieAlgebraData(n, std::move(flat));
}

// ---------------------------------------------------------------------------
// Report side
// ---------------------------------------------------------------------------

namespace {

json terms_to_json(const std::vector<TermDoc>& terms) {
    json arr = json::array();
    for (const TermDoc& t : terms) arr.push_back(term_to_json(t));
    return arr;
}

std::vector<TermDoc> terms_from_json(const json& j, const std::string& path) {
    expect(j, path, json::value_t::array, "an array");
    std::vector<TermDoc> terms;
    int idx = 0;
    for (const auto& t : j)
        terms.push_back(term_from_json(t, path + "[" + std::to_string(idx++) + "]"));
    return terms;
}

json strings_to_json(const std::vector<std::string>& v) {
    return json(v);
}

std::vector<std::string> strings_from_json(const json& j, const std::string& path) {
    expect(j, path, json::value_t::array, "an array");
    std::vector<std::string> v;
    for (const auto& s : j) v.push_back(expect_string(s, path + "[]"));
    return v;
}

json obstruction_to_json(const ObstructionDoc& ob) {
    json reps = json::array();
    for (const auto& r : ob.representatives) reps.push_back(strings_to_json(r));
    return json{{"cocycle", strings_to_json(ob.cocycle)},
                {"dim_h1", ob.dim_h1},
                {"level", ob.level},
                {"representatives", std::move(reps)}};
}

ObstructionDoc obstruction_from_json(const json& j, const std::string& path) {
    expect(j, path, json::value_t::object, "an object");
    reject_unknown_keys(j, path, {"cocycle", "dim_h1", "level", "representatives"});
    ObstructionDoc ob;
    ob.level = expect_int(j.at("level"), path + ".level");
    ob.dim_h1 = expect_int(j.at("dim_h1"), path + ".dim_h1");
    ob.cocycle = strings_from_json(j.at("cocycle"), path + ".cocycle");
    for (const auto& r : expect(j.at("representatives"), path + ".representatives",
                                json::value_t::array, "an array"))
        ob.representatives.push_back(strings_from_json(r, path + ".representatives[]"));
    return ob;
}

}  // namespace

std::string print_report(const ReportDocument& doc) {
    json j;
    j["command"] = doc.command;
    j["convention"] = doc.convention;
    j["status"] = doc.status;
    j["timing_ms"] = doc.timing_ms ? json(*doc.timing_ms) : json(nullptr);
    j["tool"] = doc.tool;

    if (doc.check) {
        json c;
        c["tangent"] = doc.check->tangent;
        c["maurer_cartan"] = doc.check->maurer_cartan;
        c["defect_norm"] = doc.check->defect_norm;
        c["jacobiator_consistent"] = doc.check->jacobiator_consistent;
        c["order2_extendable"] =
            doc.check->order2_extendable ? json(*doc.check->order2_extendable) : json(nullptr);
        j["check"] = std::move(c);
    }
    if (doc.cohomology) {
        json levels = json::array();
        for (const auto& e : doc.cohomology->levels)
            levels.push_back(json{{"basis_dims", e.basis_dims}, {"dims", e.dims}, {"level", e.level}});
        j["cohomology"] = json{{"levels", std::move(levels)}};
    }
    if (doc.solve) {
        json s;
        s["status"] = doc.solve->status;
        s["gauge"] = terms_to_json(doc.solve->gauge);
        json its = json::array();
        for (const auto& it : doc.solve->iterations)
            its.push_back(json{{"level", it.level},
                               {"residual_norm", it.residual_norm},
                               {"x_norm", it.x_norm}});
        s["iterations"] = std::move(its);
        s["final_residual"] = terms_to_json(doc.solve->final_residual);
        s["obstruction"] =
            doc.solve->obstruction ? obstruction_to_json(*doc.solve->obstruction) : json(nullptr);
        j["solve"] = std::move(s);
    }
    if (doc.extension) {
        json attempts = json::array();
        for (const auto& at : doc.extension->attempts)
            attempts.push_back(json{{"certificate", strings_to_json(at.certificate)},
                                    {"cocycle", strings_to_json(at.cocycle)},
                                    {"correction", terms_to_json(at.correction)},
                                    {"solvable", at.solvable},
                                    {"x_cap", at.x_cap}});
        j["extension"] = json{{"attempts", std::move(attempts)}, {"status", doc.extension->status}};
    }
    return j.dump(2) + "\n";
}

namespace {
ReportDocument parse_report_object(const json& j);
}  // namespace

ReportDocument parse_report(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("report document is not valid JSON: ") + e.what());
    }
    try {
        return parse_report_object(j);
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed report document: ") + e.what());
    }
}

namespace {

ReportDocument parse_report_object(const json& j) {
    expect(j, "$", json::value_t::object, "an object");
    reject_unknown_keys(j, "$",
                        {"command", "convention", "status", "timing_ms", "tool", "check",
                         "cohomology", "solve", "extension"});
    ReportDocument doc;
    doc.command = expect_string(j.at("command"), "$.command");
    doc.convention = expect_string(j.at("convention"), "$.convention");
    doc.status = expect_string(j.at("status"), "$.status");
    doc.tool = expect_string(j.at("tool"), "$.tool");
    if (!j.contains("timing_ms")) fail("$", "needs timing_ms (null when not measured)");
    if (!j.at("timing_ms").is_null())
        doc.timing_ms = j.at("timing_ms").get<std::int64_t>();

    if (j.contains("check")) {
        const json& c = expect(j.at("check"), "$.check", json::value_t::object, "an object");
        reject_unknown_keys(c, "$.check",
                            {"tangent", "maurer_cartan", "defect_norm", "jacobiator_consistent",
                             "order2_extendable"});
        CheckReportDoc r;
        r.tangent = c.at("tangent").get<bool>();
        r.maurer_cartan = c.at("maurer_cartan").get<bool>();
        r.defect_norm = expect_string(c.at("defect_norm"), "$.check.defect_norm");
        r.jacobiator_consistent = c.at("jacobiator_consistent").get<bool>();
        if (!c.at("order2_extendable").is_null())
            r.order2_extendable = c.at("order2_extendable").get<bool>();
        doc.check = std::move(r);
    }
    if (j.contains("cohomology")) {
        const json& c =
            expect(j.at("cohomology"), "$.cohomology", json::value_t::object, "an object");
        reject_unknown_keys(c, "$.cohomology", {"levels"});
        CohomologyReportDoc r;
        for (const auto& e : expect(c.at("levels"), "$.cohomology.levels", json::value_t::array,
                                    "an array")) {
            CohomologyReportDoc::LevelEntry entry;
            entry.level = expect_int(e.at("level"), "$.cohomology.levels[].level");
            entry.basis_dims = e.at("basis_dims").get<std::array<int, 4>>();
            entry.dims = e.at("dims").get<std::array<int, 3>>();
            r.levels.push_back(entry);
        }
        doc.cohomology = std::move(r);
    }
    if (j.contains("solve")) {
        const json& s = expect(j.at("solve"), "$.solve", json::value_t::object, "an object");
        reject_unknown_keys(s, "$.solve",
                            {"status", "gauge", "iterations", "final_residual", "obstruction"});
        SolveReportDoc r;
        r.status = expect_string(s.at("status"), "$.solve.status");
        r.gauge = terms_from_json(s.at("gauge"), "$.solve.gauge");
        for (const auto& it : expect(s.at("iterations"), "$.solve.iterations",
                                     json::value_t::array, "an array"))
            r.iterations.push_back(
                IterationDoc{expect_int(it.at("level"), "$.solve.iterations[].level"),
                             expect_string(it.at("x_norm"), "$.solve.iterations[].x_norm"),
                             expect_string(it.at("residual_norm"),
                                           "$.solve.iterations[].residual_norm")});
        r.final_residual = terms_from_json(s.at("final_residual"), "$.solve.final_residual");
        if (!s.at("obstruction").is_null())
            r.obstruction = obstruction_from_json(s.at("obstruction"), "$.solve.obstruction");
        doc.solve = std::move(r);
    }
    if (j.contains("extension")) {
        const json& x =
            expect(j.at("extension"), "$.extension", json::value_t::object, "an object");
        reject_unknown_keys(x, "$.extension", {"attempts", "status"});
        ExtensionReportDoc r;
        r.status = expect_string(x.at("status"), "$.extension.status");
        for (const auto& at : expect(x.at("attempts"), "$.extension.attempts",
                                     json::value_t::array, "an array")) {
            ExtensionAttemptDoc a;
            a.x_cap = expect_int(at.at("x_cap"), "$.extension.attempts[].x_cap");
            a.solvable = at.at("solvable").get<bool>();
            a.correction = terms_from_json(at.at("correction"), "$.extension.attempts[].correction");
            a.certificate =
                strings_from_json(at.at("certificate"), "$.extension.attempts[].certificate");
            a.cocycle = strings_from_json(at.at("cocycle"), "$.extension.attempts[].cocycle");
            r.attempts.push_back(std::move(a));
        }
        doc.extension = std::move(r);
    }
    return doc;
}

}  // namespace

}  // namespace mcgauge
