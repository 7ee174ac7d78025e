#include <doctest.h>

#include <mcgauge/cohomology.hpp>

#include "test_util.hpp"

using namespace mcgauge;
using mcgauge::testing::Rng;

namespace {

SuperPoly mono(const SpaceModel& sp, int num, int den, std::vector<std::int32_t> even,
               std::vector<int> odd) {
    return SuperPoly::monomial(sp, make_scalar(num, den), std::move(even), odd);
}

MultiVec pi_example(int jet_order) {
    const SpaceModel sp{2, 1};
    return MultiVec(sp, jet_order, 2,
                    mono(sp, 1, 1, {0, 0, 1}, {1, 2}) + mono(sp, 1, 1, {1, 0, 1}, {1, 3}));
}

bool matrices_equal(const QuotientComplex& a, const QuotientComplex& b) {
    for (int d = 0; d < 4; ++d)
        if (!(a.basis[d] == b.basis[d])) return false;
    for (int d = 0; d < 3; ++d)
        if (!(a.d[d].entries == b.d[d].entries)) return false;
    return true;
}

}  // namespace

TEST_CASE("algebroid extraction: running example on R^3") {
    const MultiVec pi = pi_example(3);
    const SpaceModel sp = pi.space();
    const RestrictedAlgebroid alg = algebroid_from_jet(pi);

    // Anchor vanishes identically: pi has no y-degree-0 part, so pi|_P = 0.
    for (int a = 0; a < 3; ++a)
        for (int i = 0; i < 2; ++i) CHECK(alg.anchor[a][i].is_zero());

    // [dx,dy] = dz, [dx,dz] = x dz, [dy,dz] = 0.
    CHECK(alg.gamma(0, 1, 2) == SuperPoly::constant(sp, Scalar(1)));
    CHECK(alg.gamma(0, 1, 0).is_zero());
    CHECK(alg.gamma(0, 1, 1).is_zero());
    CHECK(alg.gamma(0, 2, 2) == mono(sp, 1, 1, {1, 0, 0}, {}));
    CHECK(alg.gamma(1, 2, 2).is_zero());
    CHECK(alg.gamma(1, 0, 2) == SuperPoly::constant(sp, Scalar(-1)));

    CHECK(algebroid_axioms(alg).pass);

    // Only the 1-jet matters: perturbing by a level >= 1 tangent bivector
    // leaves the extraction unchanged.
    const MultiVec bump(sp, 3, 2, mono(sp, 2, 1, {1, 0, 2}, {1, 3}) + mono(sp, 1, 1, {0, 0, 3}, {1, 2}));
    CHECK(algebroid_from_jet(pi + bump) == alg);
}

TEST_CASE("algebroid extraction: point leaf and anchors") {
    // At a point leaf the algebroid is the isotropy Lie algebra itself.
    const auto g = LieAlgebraData::so3();
    const RestrictedAlgebroid from_pi = algebroid_from_jet(lie_poisson(g, 2));
    const RestrictedAlgebroid from_g = algebroid_from_lie_algebra(g);
    CHECK(from_pi == from_g);
    CHECK(algebroid_axioms(from_pi).pass);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                CHECK(from_pi.gamma(a, b, c) == SuperPoly::constant(from_pi.space, g.c(a, b, c)));

    // pi = xi_1 xi_2 on (x1, x2 | z): constant symplectic part, anchor
    // rho(dx1) = d/dx2, rho(dx2) = -d/dx1, zero bracket.
    const SpaceModel sp{2, 1};
    const MultiVec symp(sp, 2, 2, mono(sp, 1, 1, {}, {1, 2}));
    const RestrictedAlgebroid alg = algebroid_from_jet(symp);
    CHECK(alg.anchor[0][1] == SuperPoly::constant(sp, Scalar(1)));
    CHECK(alg.anchor[1][0] == SuperPoly::constant(sp, Scalar(-1)));
    CHECK(alg.anchor[0][0].is_zero());
    CHECK(alg.anchor[2][0].is_zero());
    CHECK(alg.anchor[2][1].is_zero());
    CHECK(algebroid_axioms(alg).pass);

    // pi = 0: everything vanishes and the axioms hold trivially.
    const RestrictedAlgebroid zero = algebroid_from_jet(MultiVec::zero(sp, 2, 2));
    for (const auto& s : zero.bracket_structure) CHECK(s.is_zero());
    CHECK(algebroid_axioms(zero).pass);

    CHECK_THROWS_AS(algebroid_from_jet(MultiVec(SpaceModel{0, 2}, 2, 2, mono(SpaceModel{0, 2}, 1, 1, {}, {1, 2}))),
                    NotTangent);
}

TEST_CASE("algebroid axioms report failures with witnesses") {
    // Jacobi violation: [e1,e2]=e2, [e1,e3]=e3, [e2,e3]=e1 at p=0.
    const SpaceModel sp{0, 3};
    RestrictedAlgebroid bad{sp, {}, {}};
    bad.anchor.assign(3, {});
    bad.bracket_structure.assign(27, SuperPoly::zero(sp));
    const auto set = [&](int a, int b, int c, int v) {
        bad.bracket_structure[static_cast<std::size_t>(a * 3 + b) * 3 + c] =
            SuperPoly::constant(sp, Scalar(v));
        bad.bracket_structure[static_cast<std::size_t>(b * 3 + a) * 3 + c] =
            SuperPoly::constant(sp, Scalar(-v));
    };
    set(0, 1, 1, 1);
    set(0, 2, 2, 1);
    set(1, 2, 0, 1);
    const auto report = algebroid_axioms(bad);
    CHECK_FALSE(report.pass);
    CHECK(report.witness.find("Jacobi") != std::string::npos);

    // Anchor-morphism violation: rho(du1) = d/dx, rho(du2) = x d/dx, no bracket.
    const SpaceModel sq{1, 1};
    RestrictedAlgebroid skew{sq, {}, {}};
    skew.anchor.assign(2, std::vector<SuperPoly>(1, SuperPoly::zero(sq)));
    skew.anchor[0][0] = SuperPoly::constant(sq, Scalar(1));
    skew.anchor[1][0] = mono(sq, 1, 1, {1, 0}, {});
    skew.bracket_structure.assign(8, SuperPoly::zero(sq));
    const auto report2 = algebroid_axioms(skew);
    CHECK_FALSE(report2.pass);
    CHECK(report2.witness.find("anchor") != std::string::npos);
}

TEST_CASE("cochain bases: dimensions and determinism") {
    // so(3) at level 1 (k = 2): Lambda^d(R^3*) (x) S^2(R^3).
    const SpaceModel sp{0, 3};
    const int expected[4] = {6, 18, 18, 6};
    for (int d = 0; d < 4; ++d) {
        const CochainBasis basis(sp, 1, d, 0);
        CHECK(basis.dim() == expected[d]);
        // Keys are strictly increasing in the graded-lex order.
        for (int i = 1; i < basis.dim(); ++i)
            CHECK(TermKeyLess{}(basis.keys()[i - 1], basis.keys()[i]));
        for (int i = 0; i < basis.dim(); ++i) CHECK(basis.index_of(basis.keys()[i]) == i);
    }

    // p > 0 with x-cap: (x | y), level 0, degree 1: y * {1, x, x^2} * {xi_1, xi_2}.
    const CochainBasis capped(SpaceModel{1, 1}, 0, 1, 2);
    CHECK(capped.dim() == 6);

    // Coordinates round trip.
    Rng rng(0xc0c0au);
    std::vector<Scalar> coords(capped.dim());
    for (auto& c : coords) c = testing::draw_coeff(rng);
    CHECK(coordinates(capped, from_coordinates(capped, coords)) == coords);
    CHECK_THROWS_AS(coordinates(capped, mono(SpaceModel{1, 1}, 1, 1, {0, 2}, {1})), InputError);
}

TEST_CASE("quotient complex: d^2 = 0 and first-jet dependence") {
    Rng rng(0xdd2200u);
    const int N = 4;
    std::vector<MultiVec> seeds;
    seeds.push_back(pi_example(N));
    seeds.push_back(lie_poisson(LieAlgebraData::so3(), N));
    seeds.push_back(lie_poisson(LieAlgebraData::sl2(), N));
    for (const MultiVec& seed : seeds) {
        const SpaceModel sp = seed.space();
        for (int iter = 0; iter < 4; ++iter) {
            // Tangent noise of level >= 1 leaves the 1-jet, and hence the
            // induced differential, untouched.
            const MultiVec raw = testing::draw_tangent_multivec(rng, sp, N, 2, 3, 1, 3);
            const MultiVec bump(sp, N, 2, raw.body() - sp_truncate_y(raw.body(), 1));
            const MultiVec gamma = seed + bump;
            const int level = testing::draw(rng, 1, 2);
            const std::array<int, 4> caps{2, 3, 4, 5};
            const QuotientComplex c = assemble_quotient_complex(gamma, level, caps);
            CHECK_NOTHROW(cohomology_dims(c));  // includes the d^2 = 0 assertion
            CHECK(matrices_equal(c, assemble_quotient_complex(seed, level, caps)));
        }
    }
}

TEST_CASE("whitehead vanishing and the abelian control case") {
    for (const auto& g : {LieAlgebraData::so3(), LieAlgebraData::sl2()}) {
        const MultiVec gamma = lie_poisson(g, 6);
        for (int level = 1; level <= 3; ++level) {  // symmetric powers k = 2, 3, 4
            const QuotientComplex c = quotient_complex(gamma, level, std::nullopt);
            const auto h = cohomology_dims(c);
            CHECK(h[1] == 0);
            CHECK(h[2] == 0);

            // Euler-characteristic consistency, with the top cohomology
            // h3 = dim ker d_3 - rank d_2 (d_3 = 0 on the truncated complex).
            const int h3 = c.basis[3].dim() - rank(c.d[2].entries);
            const int chi_basis = c.basis[0].dim() - c.basis[1].dim() + c.basis[2].dim() -
                                  c.basis[3].dim();
            CHECK(h[0] - h[1] + h[2] - h3 == chi_basis);
        }
    }

    // Abelian control: gamma = 0 gives a zero differential, so H^1 at the
    // bivector slot is the full kernel = the whole cochain space.
    const SpaceModel sp{0, 2};
    const QuotientComplex c0 = quotient_complex(MultiVec::zero(sp, 4, 2), 1, std::nullopt);
    for (int d = 0; d < 3; ++d) CHECK(c0.d[d].entries == Matrix(c0.basis[d + 1].dim(), c0.basis[d].dim()));
    const auto h0 = cohomology_dims(c0);
    CHECK(h0[0] == c0.basis[0].dim());
    CHECK(h0[1] == c0.basis[1].dim());
    CHECK(h0[2] == c0.basis[2].dim());
    CHECK(c0.basis[2].dim() == 3);  // S^2(R^2) (x) xi_1 xi_2
}

TEST_CASE("uniform caps overflow on the R^3 example; stepped caps assemble") {
    const MultiVec pi = pi_example(4);
    for (int cap = 0; cap <= 3; ++cap)
        CHECK_THROWS_AS(quotient_complex(pi, 1, cap), XDegreeOverflow);

    for (int d_cap = 0; d_cap <= 3; ++d_cap) {
        const std::array<int, 4> caps{d_cap, d_cap + 1, d_cap + 2, d_cap + 3};
        const QuotientComplex c = assemble_quotient_complex(pi, 1, caps);
        CHECK_NOTHROW(cohomology_dims(c));
    }

    CHECK_THROWS_AS(quotient_complex(pi, 0, 2), InputError);       // level >= 1
    CHECK_THROWS_AS(quotient_complex(pi, 1, std::nullopt), InputError);  // cap required
}

TEST_CASE("homotopy pair: so(3) certifies, zero differential obstructs") {
    const MultiVec gamma = lie_poisson(LieAlgebraData::so3(), 6);
    for (int level = 1; level <= 3; ++level) {
        const QuotientComplex c = quotient_complex(gamma, level, std::nullopt);
        const auto result = homotopy_pair(c);
        REQUIRE(std::holds_alternative<HomotopyPair>(result));
        const auto& pair = std::get<HomotopyPair>(result);
        CHECK(pair.certified);
        const Matrix& dA = c.d[1].entries;
        const Matrix& dB = c.d[2].entries;
        CHECK(dA * pair.h1.entries + pair.h2.entries * dB ==
              Matrix::identity(c.basis[2].dim()));
        // Section property: d h1 d = d on degree-1 cochains.
        CHECK(dA * pair.h1.entries * dA == dA);
    }

    const SpaceModel sp{0, 2};
    const QuotientComplex c0 =
        quotient_complex(MultiVec::zero(sp, 4, 2), 1, std::nullopt);
    const auto result = homotopy_pair(c0);
    REQUIRE(std::holds_alternative<ObstructionReport>(result));
    const auto& report = std::get<ObstructionReport>(result);
    CHECK(report.dim_h1 == 3);
    CHECK(report.representatives.size() == 3);
    for (const auto& rep : report.representatives) {
        bool nonzero = false;
        for (const auto& v : c0.d[2].entries * rep) CHECK(v == 0);
        for (const auto& v : rep) nonzero = nonzero || v != 0;
        CHECK(nonzero);
    }
}

TEST_CASE("cohomology_dims rejects non-complexes") {
    QuotientComplex c = quotient_complex(lie_poisson(LieAlgebraData::so3(), 4), 1, std::nullopt);
    c.d[1].entries.at(0, 0) += Scalar(1);
    CHECK_THROWS_AS(cohomology_dims(c), NotAComplex);
}

TEST_CASE("tau_map: kernel and level guard") {
    const SpaceModel sp{2, 1};
    const MultiVec w1(sp, 4, 1, mono(sp, 1, 1, {0, 0, 1}, {1}));  // z xi_x
    CHECK(tau_map(1, w1) == w1.body());                            // kept verbatim

    const MultiVec w2(sp, 4, 1, mono(sp, 1, 1, {0, 0, 2}, {1}));  // z^2 xi_x
    CHECK(tau_map(1, w2).is_zero());

    const MultiVec w3(sp, 4, 1, mono(sp, 1, 1, {1, 0, 0}, {1}));  // x xi_x: y-degree 0
    CHECK_THROWS_AS(tau_map(1, w3), LevelTooLow);

    const MultiVec mixed(sp, 4, 1,
                         mono(sp, 1, 1, {0, 0, 1}, {2}) + mono(sp, 3, 2, {1, 0, 2}, {1}));
    CHECK(tau_map(1, mixed) == mono(sp, 1, 1, {0, 0, 1}, {2}));
}

TEST_CASE("tau conjugates the quotient differential into the CE differential") {
    // Matrix-level comparison: identical labeled bases, identical entries.
    const MultiVec pi = pi_example(4);
    const RestrictedAlgebroid alg_r3 = algebroid_from_jet(pi);
    for (int k = 1; k <= 2; ++k) {
        const std::array<int, 4> caps{1, 2, 3, 4};
        const QuotientComplex quot = assemble_quotient_complex(pi, k - 1, caps);
        const QuotientComplex ce = ce_complex(alg_r3, k, caps);
        CHECK(matrices_equal(quot, ce));
    }

    const MultiVec gamma = lie_poisson(LieAlgebraData::so3(), 4);
    const RestrictedAlgebroid alg_so3 = algebroid_from_jet(gamma);
    for (int k = 1; k <= 2; ++k) {
        const std::array<int, 4> caps{0, 0, 0, 0};
        const QuotientComplex quot = assemble_quotient_complex(gamma, k - 1, caps);
        const QuotientComplex ce = ce_complex(alg_so3, k, caps);
        CHECK(matrices_equal(quot, ce));
    }

    // Element-level intertwining: tau_k([pi, W]) = d_CE(tau_k(W)) for random
    // W of y-degree >= k, read through cochain coordinates.
    Rng rng(0x7a0badu);
    for (int iter = 0; iter < 40; ++iter) {
        const bool use_r3 = iter % 2 == 0;
        const MultiVec& g = use_r3 ? pi : gamma;
        const RestrictedAlgebroid& alg = use_r3 ? alg_r3 : alg_so3;
        const SpaceModel sp = g.space();
        const int k = testing::draw(rng, 1, 2);
        const int deg = testing::draw(rng, 0, 2);
        const std::array<int, 4> caps{1, 2, 3, 4};
        const QuotientComplex ce = ce_complex(alg, k, caps);

        // Draw W with y-degree exactly k and x-degree within the domain cap.
        MultiVec w = MultiVec::zero(sp, g.jet_order(), deg);
        for (int t = 0; t < 3; ++t) {
            const int idx = testing::draw(rng, 0, ce.basis[deg].dim() - 1);
            SuperPoly term(sp);
            term.add_term(ce.basis[deg].keys()[idx], testing::draw_coeff(rng));
            w = w + MultiVec(sp, g.jet_order(), deg, term);
        }
        const std::vector<Scalar> lhs =
            coordinates(ce.basis[deg + 1], tau_map(k, schouten(g, w)));
        const std::vector<Scalar> rhs = ce.d[deg].entries * coordinates(ce.basis[deg], tau_map(k, w));
        CHECK(lhs == rhs);
    }
}
