/// @file corpus.cpp
/// The example documents are constructed through the same library calls the
/// solver uses (lie_poisson, exp_ad), so the corpus stays consistent with
/// the pinned bracket convention by construction rather than by transcript.

#include "mcgauge/corpus.hpp"

#include "mcgauge/errors.hpp"
#include "mcgauge/glagroup.hpp"
#include "mcgauge/multivec.hpp"

namespace mcgauge {

namespace {

// ---------------------------------------------------------------------------
// Individual examples
// ---------------------------------------------------------------------------

/// pi = y xi_1 xi_2 + x_1 y xi_1 xi_3 on a surface times a line: Maurer-Cartan
/// modulo y^2, but its order-2 obstruction cocycle is never exact under any
/// polynomial x-degree cap, so `solve` reports obstructed at every cap.
ProblemDocument r3_nonextendable() {
    const SpaceModel sp{2, 1};
    const int jet = 2;
    MultiVec pi(sp, jet, 2,
                SuperPoly::monomial(sp, Scalar(1), {0, 0, 1}, {1, 2}) +
                    SuperPoly::monomial(sp, Scalar(1), {1, 0, 1}, {1, 3}));

    ProblemDocument doc;
    doc.space = sp;
    doc.jet_order = jet;
    doc.x_cap = 4;
    doc.multivectors.emplace("pi", from_multivec(pi));
    doc.check = CheckSection{"pi"};
    SolveSection solve;
    solve.first_order = "pi";
    solve.x_caps = {0, 1, 2, 3, 4};
    doc.solve = std::move(solve);
    return doc;
}

/// The so(3) linear structure against its pushforward by exp of a quadratic
/// gauge log; the solver walks back down the filtration and recovers an
/// exact equivalence within the estimate budget.
ProblemDocument so3_roundtrip() {
    const SpaceModel sp{0, 3};
    const int jet = 6;
    const MultiVec gamma = lie_poisson(LieAlgebraData::so3(), jet);
    const MultiVec log(sp, jet, 1,
                       SuperPoly::monomial(sp, Scalar(1), {2, 0, 0}, {2}) +
                           SuperPoly::monomial(sp, Scalar(-2), {0, 1, 1}, {1}));
    const MultiVec gamma_prime = exp_ad(log, gamma);

    ProblemDocument doc;
    doc.space = sp;
    doc.jet_order = jet;
    doc.multivectors.emplace("gamma", from_multivec(gamma));
    doc.multivectors.emplace("gamma_prime", from_multivec(gamma_prime));
    LieAlgebraDoc so3{3, {}};
    so3.brackets.emplace_back(std::array<int, 3>{1, 2, 3}, Scalar(1));
    so3.brackets.emplace_back(std::array<int, 3>{1, 3, 2}, Scalar(-1));
    so3.brackets.emplace_back(std::array<int, 3>{2, 3, 1}, Scalar(1));
    doc.lie_algebra = std::move(so3);
    SolveSection solve;
    solve.gamma = "gamma";
    solve.gamma_prime = "gamma_prime";
    doc.solve = std::move(solve);
    doc.cohomology = CohomologySection{"gamma", {1, 2, 3}};
    return doc;
}

/// Zero structure versus y_1^2 xi_1 xi_2 over the abelian plane: every
/// quotient differential vanishes, so the difference is its own obstruction
/// class and the solver must exit obstructed with a certificate.
ProblemDocument abelian_obstructed() {
    const SpaceModel sp{0, 2};
    const int jet = 4;
    const MultiVec gamma = MultiVec::zero(sp, jet, 2);
    const MultiVec gamma_prime(sp, jet, 2,
                               SuperPoly::monomial(sp, Scalar(1), {2, 0}, {1, 2}));

    ProblemDocument doc;
    doc.space = sp;
    doc.jet_order = jet;
    doc.multivectors.emplace("gamma", from_multivec(gamma));
    doc.multivectors.emplace("gamma_prime", from_multivec(gamma_prime));
    SolveSection solve;
    solve.gamma = "gamma";
    solve.gamma_prime = "gamma_prime";
    doc.solve = std::move(solve);
    doc.cohomology = CohomologySection{"gamma", {1}};
    return doc;
}

}  // namespace

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

std::vector<std::string> corpus_names() {
    return {"r3-nonextendable", "so3-roundtrip", "abelian-obstructed"};
}

ProblemDocument corpus_example(const std::string& name) {
    if (name == "r3-nonextendable") return r3_nonextendable();
    if (name == "so3-roundtrip") return so3_roundtrip();
    if (name == "abelian-obstructed") return abelian_obstructed();
    throw InputError("unknown example '" + name + "'; known: r3-nonextendable, " +
                     "so3-roundtrip, abelian-obstructed");
}

}  // namespace mcgauge
