#include <doctest.h>

#include <mcgauge/corpus.hpp>
#include <mcgauge/errors.hpp>
#include <mcgauge/glagroup.hpp>
#include <mcgauge/jsonio.hpp>

#include "test_util.hpp"

using namespace mcgauge;
using mcgauge::testing::Rng;

namespace {

SuperPoly mono(const SpaceModel& sp, int num, int den, std::vector<std::int32_t> even,
               std::vector<int> odd) {
    return SuperPoly::monomial(sp, make_scalar(num, den), std::move(even), odd);
}

/// A document exercising every optional section at once.
ProblemDocument rich_problem() {
    ProblemDocument doc;
    doc.space = SpaceModel{1, 2};
    doc.jet_order = 3;
    doc.x_cap = 2;
    doc.multivectors.emplace(
        "pi", MultiVecDoc{2,
                          {TermDoc{make_scalar(1), {0, 1, 0}, {1, 2}},
                           TermDoc{make_scalar(-1, 2), {1, 0, 1}, {1, 3}}}});
    doc.multivectors.emplace("gamma", MultiVecDoc{2, {}});
    LieAlgebraDoc heis{3, {}};
    heis.brackets.emplace_back(std::array<int, 3>{1, 2, 3}, make_scalar(1));
    doc.lie_algebra = std::move(heis);
    doc.check = CheckSection{"pi"};
    doc.cohomology = CohomologySection{"gamma", {1, 2}};
    SolveSection solve;
    solve.gamma = "gamma";
    solve.gamma_prime = "pi";
    doc.solve = std::move(solve);
    doc.linearize = LinearizeSection{"pi"};
    return doc;
}

ReportDocument rich_report() {
    ReportDocument doc;
    doc.command = "solve";
    doc.status = "obstructed";
    doc.timing_ms = 42;

    CheckReportDoc check;
    check.tangent = true;
    check.maurer_cartan = false;
    check.defect_norm = "2^-1";
    check.jacobiator_consistent = true;
    check.order2_extendable = false;
    doc.check = std::move(check);

    CohomologyReportDoc coh;
    coh.levels.push_back({1, {6, 18, 18, 6}, {0, 0, 6}});
    coh.levels.push_back({2, {10, 30, 30, 10}, {0, 0, 10}});
    doc.cohomology = std::move(coh);

    SolveReportDoc solve;
    solve.status = "obstructed";
    solve.gauge = {TermDoc{make_scalar(1), {2, 0}, {2}}};
    solve.iterations.push_back(IterationDoc{1, "2^-1", "2^-2"});
    solve.iterations.push_back(IterationDoc{2, "2^-2", "0"});
    solve.final_residual = {TermDoc{make_scalar(1), {2, 0}, {1, 2}}};
    ObstructionDoc ob;
    ob.level = 1;
    ob.dim_h1 = 3;
    ob.representatives = {{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}};
    ob.cocycle = {"1", "0", "-1/2"};
    solve.obstruction = std::move(ob);
    doc.solve = std::move(solve);

    ExtensionReportDoc ext;
    ext.status = "obstructed";
    ExtensionAttemptDoc attempt;
    attempt.x_cap = 0;
    attempt.solvable = false;
    attempt.certificate = {"1", "0"};
    attempt.cocycle = {"-2", "0"};
    ext.attempts.push_back(std::move(attempt));
    doc.extension = std::move(ext);
    return doc;
}

}  // namespace

TEST_CASE("problem documents round trip through print and parse") {
    const ProblemDocument doc = rich_problem();
    const std::string text = print_problem(doc);
    CHECK(parse_problem(text) == doc);
    CHECK(print_problem(parse_problem(text)) == text);

    // Minimal document: only the required keys.
    ProblemDocument minimal;
    minimal.space = SpaceModel{0, 2};
    minimal.jet_order = 4;
    const std::string small = print_problem(minimal);
    CHECK(parse_problem(small) == minimal);
    CHECK(parse_problem(R"({"jet_order": 4, "space": {"p": 0, "q": 2}})") == minimal);
}

TEST_CASE("report documents round trip through print and parse") {
    const ReportDocument doc = rich_report();
    const std::string text = print_report(doc);
    CHECK(parse_report(text) == doc);
    CHECK(print_report(parse_report(text)) == text);

    // Unmeasured timing prints as null and parses back to absent.
    ReportDocument bare;
    bare.command = "cohomology";
    bare.status = "ok";
    const std::string printed = print_report(bare);
    CHECK(printed.find("\"timing_ms\": null") != std::string::npos);
    CHECK(parse_report(printed) == bare);
}

TEST_CASE("strict parsing rejects malformed problem documents") {
    CHECK_THROWS_AS(parse_problem("not json at all"), InputError);
    CHECK_THROWS_AS(parse_problem("[1, 2, 3]"), InputError);
    CHECK_THROWS_AS(parse_problem(R"({"jet_order": 2})"), InputError);
    CHECK_THROWS_AS(parse_problem(R"({"space": {"p": 0, "q": 2}})"), InputError);

    // Unknown keys anywhere are an error, with the offending path reported.
    CHECK_THROWS_WITH_AS(
        parse_problem(R"({"space": {"p": 0, "q": 2}, "jet_order": 2, "extra": 1})"),
        "document error at $.extra: unknown key", InputError);
    CHECK_THROWS_AS(
        parse_problem(R"({"space": {"p": 0, "q": 2, "r": 1}, "jet_order": 2})"), InputError);

    // Rationals must be strings; bare numbers are rejected outright.
    const char* numeric_coeff = R"({
      "space": {"p": 0, "q": 2}, "jet_order": 2,
      "multivectors": {"w": {"degree": 1, "terms": [{"c": 1, "even": [1, 0], "odd": [1]}]}}
    })";
    CHECK_THROWS_WITH_AS(parse_problem(numeric_coeff),
                         "document error at $.multivectors.w.terms[0].c: rationals must be "
                         "\"num/den\" strings",
                         InputError);

    // The solve section must pick exactly one mode.
    const std::string head = R"({"space": {"p": 0, "q": 2}, "jet_order": 2, "solve": )";
    CHECK_THROWS_AS(parse_problem(head + R"({"gamma": "a"}})"), InputError);
    CHECK_THROWS_AS(parse_problem(head + R"({"x_caps": [0, 1]}})"), InputError);
    CHECK_THROWS_AS(
        parse_problem(head + R"({"gamma": "a", "gamma_prime": "b", "first_order": "a"}})"),
        InputError);
    CHECK_NOTHROW(parse_problem(head + R"({"gamma": "a", "gamma_prime": "b"}})"));
    CHECK_NOTHROW(parse_problem(head + R"({"first_order": "a", "x_caps": [0]}})"));
}

TEST_CASE("strict parsing rejects malformed report documents") {
    CHECK_THROWS_AS(parse_report("{"), InputError);
    // timing_ms is mandatory (null when not measured), and typed when present.
    CHECK_THROWS_AS(parse_report(R"({"command": "check", "convention": "c",
                                     "status": "ok", "tool": "t"})"),
                    InputError);
    CHECK_THROWS_AS(parse_report(R"({"command": "check", "convention": "c",
                                     "status": "ok", "tool": "t", "timing_ms": "5"})"),
                    InputError);
    CHECK_THROWS_AS(parse_report(R"({"command": "check", "convention": "c", "status": "ok",
                                     "tool": "t", "timing_ms": null, "verdict": true})"),
                    InputError);
    // A truncated solve section (missing iterations) is malformed.
    CHECK_THROWS_AS(parse_report(R"({"command": "solve", "convention": "c", "status": "ok",
                                     "tool": "t", "timing_ms": null,
                                     "solve": {"status": "equivalent", "gauge": [],
                                               "final_residual": [], "obstruction": null}})"),
                    InputError);
}

TEST_CASE("multivector conversion matches the engine representation") {
    Rng rng(0x901a11u);
    for (const SpaceModel sp : {SpaceModel{1, 2}, SpaceModel{2, 1}, SpaceModel{0, 3}}) {
        for (int degree = 1; degree <= 3; ++degree) {
            for (int iter = 0; iter < 10; ++iter) {
                const MultiVec w =
                    mcgauge::testing::draw_multivec(rng, sp, 3, degree, 4, 2, 2);
                ProblemDocument doc;
                doc.space = sp;
                doc.jet_order = 3;
                doc.multivectors.emplace("w", from_multivec(w));
                CHECK(to_multivec(doc, "w") == w);
                CHECK(parse_problem(print_problem(doc)) == doc);
            }
        }
    }

    // Odd indices may arrive in any order; the sign normalizes.
    ProblemDocument doc;
    doc.space = SpaceModel{2, 1};
    doc.jet_order = 2;
    doc.multivectors.emplace("w",
                             MultiVecDoc{2, {TermDoc{make_scalar(1), {0, 0, 1}, {2, 1}}}});
    const SpaceModel sp{2, 1};
    CHECK(to_multivec(doc, "w") ==
          MultiVec(sp, 2, 2, mono(sp, -1, 1, {0, 0, 1}, {1, 2})));

    CHECK_THROWS_AS(to_multivec(doc, "missing"), InputError);

    // Terms that do not fit the document's space are rejected.
    ProblemDocument bad;
    bad.space = SpaceModel{0, 2};
    bad.jet_order = 2;
    bad.multivectors.emplace("w",
                             MultiVecDoc{1, {TermDoc{make_scalar(1), {0, 0, 1}, {1}}}});
    CHECK_THROWS_AS(to_multivec(bad, "w"), InputError);
}

TEST_CASE("lie algebra conversion validates structure constants") {
    LieAlgebraDoc so3{3, {}};
    so3.brackets.emplace_back(std::array<int, 3>{1, 2, 3}, make_scalar(1));
    so3.brackets.emplace_back(std::array<int, 3>{1, 3, 2}, make_scalar(-1));
    so3.brackets.emplace_back(std::array<int, 3>{2, 3, 1}, make_scalar(1));
    const LieAlgebraData g = to_lie_algebra(so3);
    const LieAlgebraData oracle = LieAlgebraData::so3();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) CHECK(g.c(i, j, k) == oracle.c(i, j, k));

    LieAlgebraDoc bad_order{2, {{{2, 1, 1}, make_scalar(1)}}};
    CHECK_THROWS_AS(to_lie_algebra(bad_order), InputError);
    LieAlgebraDoc bad_index{2, {{{1, 3, 1}, make_scalar(1)}}};
    CHECK_THROWS_AS(to_lie_algebra(bad_index), InputError);
    LieAlgebraDoc bad_dim{0, {}};
    CHECK_THROWS_AS(to_lie_algebra(bad_dim), InputError);
    // Jacobi failures surface from the constructed data itself.
    LieAlgebraDoc not_jacobi{3, {}};
    not_jacobi.brackets.emplace_back(std::array<int, 3>{1, 2, 2}, make_scalar(1));
    not_jacobi.brackets.emplace_back(std::array<int, 3>{1, 3, 3}, make_scalar(1));
    not_jacobi.brackets.emplace_back(std::array<int, 3>{2, 3, 1}, make_scalar(1));
    CHECK_THROWS_AS(to_lie_algebra(not_jacobi), InputError);
}

TEST_CASE("built-in examples parse, print stably, and verify") {
    CHECK(corpus_names() ==
          std::vector<std::string>{"r3-nonextendable", "so3-roundtrip", "abelian-obstructed"});
    CHECK_THROWS_AS(corpus_example("nope"), InputError);

    for (const std::string& name : corpus_names()) {
        const ProblemDocument doc = corpus_example(name);
        const std::string text = print_problem(doc);
        CHECK(parse_problem(text) == doc);
        CHECK(print_problem(parse_problem(text)) == text);
    }

    SUBCASE("r3-nonextendable carries the surface-times-line structure") {
        const ProblemDocument doc = corpus_example("r3-nonextendable");
        CHECK(doc.space == SpaceModel{2, 1});
        CHECK(doc.jet_order == 2);
        REQUIRE(doc.check.has_value());
        REQUIRE(doc.solve.has_value());
        CHECK(doc.solve->first_order == "pi");
        CHECK(doc.solve->x_caps == std::vector<int>{0, 1, 2, 3, 4});
        const SpaceModel sp{2, 1};
        CHECK(to_multivec(doc, "pi") ==
              MultiVec(sp, 2, 2,
                       mono(sp, 1, 1, {0, 0, 1}, {1, 2}) + mono(sp, 1, 1, {1, 0, 1}, {1, 3})));
    }

    SUBCASE("so3-roundtrip ships a genuine exp_ad pushforward") {
        const ProblemDocument doc = corpus_example("so3-roundtrip");
        CHECK(doc.space == SpaceModel{0, 3});
        REQUIRE(doc.lie_algebra.has_value());
        const LieAlgebraData g = to_lie_algebra(*doc.lie_algebra);
        const LieAlgebraData oracle = LieAlgebraData::so3();
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k) CHECK(g.c(i, j, k) == oracle.c(i, j, k));

        const MultiVec gamma = to_multivec(doc, "gamma");
        CHECK(gamma == lie_poisson(LieAlgebraData::so3(), doc.jet_order));
        const SpaceModel sp{0, 3};
        const MultiVec log(sp, doc.jet_order, 1,
                           mono(sp, 1, 1, {2, 0, 0}, {2}) + mono(sp, -2, 1, {0, 1, 1}, {1}));
        CHECK(to_multivec(doc, "gamma_prime") == exp_ad(log, gamma));
        REQUIRE(doc.cohomology.has_value());
        CHECK(doc.cohomology->levels == std::vector<int>{1, 2, 3});
    }

    SUBCASE("abelian-obstructed opposes zero to a quadratic bivector") {
        const ProblemDocument doc = corpus_example("abelian-obstructed");
        CHECK(doc.space == SpaceModel{0, 2});
        const SpaceModel sp{0, 2};
        CHECK(to_multivec(doc, "gamma").is_zero());
        CHECK(to_multivec(doc, "gamma") == MultiVec::zero(sp, doc.jet_order, 2));
        CHECK(to_multivec(doc, "gamma_prime") ==
              MultiVec(sp, doc.jet_order, 2, mono(sp, 1, 1, {2, 0}, {1, 2})));
    }
}
