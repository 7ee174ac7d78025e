/// @file solver.cpp
/// Gauge-equivalence descent, linearization, jet realization, and the
/// order-2 extension sweep.

#include "mcgauge/solver.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <utility>
#include <variant>

#include "mcgauge/linalg.hpp"

namespace mcgauge {

namespace {

// ---------------------------------------------------------------------------
// Per-level homotopy cache
// ---------------------------------------------------------------------------

/// Everything the solver needs at one filtration level: the assembled
/// complex and either the certified homotopy pair or the obstruction data.
struct LevelData {
    QuotientComplex complex;
    std::variant<HomotopyPair, ObstructionReport> homotopy;
};

/// The quotient complex depends only on (space, j^1 gamma, level, caps);
/// solves against the same first jet (every step of one descent, and every
/// roundtrip over a common target) share the assembled homotopy. Write-once:
/// concurrent misses recompute the same deterministic value.
std::shared_ptr<const LevelData> level_data(const MultiVec& gamma, int level,
                                            const std::array<int, 4>& caps) {
    std::ostringstream key;
    const SpaceModel& sp = gamma.space();
    key << sp.p << '|' << sp.q << '|' << level;
    for (const int c : caps) key << '|' << c;
    key << '|' << to_string(sp_truncate_y(gamma.body(), 1));

    static std::mutex mutex;
    static std::map<std::string, std::shared_ptr<const LevelData>> cache;
    {
        const std::lock_guard<std::mutex> lock(mutex);
        const auto it = cache.find(key.str());
        if (it != cache.end()) return it->second;
    }

    QuotientComplex complex = assemble_quotient_complex(gamma, level, caps);
    auto homotopy = homotopy_pair(complex);
    auto data = std::make_shared<const LevelData>(
        LevelData{std::move(complex), std::move(homotopy)});

    const std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(key.str(), std::move(data)).first->second;
}

// ---------------------------------------------------------------------------
// Descent helpers
// ---------------------------------------------------------------------------

/// Growth of the x-degree under one application of [j^1 gamma, .].
int x_growth(const MultiVec& gamma) {
    return max_x_degree(sp_truncate_y(gamma.body(), 1)).value_or(0);
}

/// Caps for a descent at bivector cap B: the homotopy reads bivectors and
/// writes vector fields, the closedness certificate reads trivectors, so the
/// bases step by the growth g on either side of B.
std::array<int, 4> descent_caps(const SpaceModel& sp, const MultiVec& gamma,
                                std::optional<int> x_cap) {
    if (sp.p == 0) return {0, 0, 0, 0};
    if (!x_cap) throw InputError("a finite x-degree cap is required when p > 0");
    const int g = x_growth(gamma);
    const int b = *x_cap;
    return {std::max(0, b - 2 * g), std::max(0, b - g), b, b + g};
}

/// The y-degree-(level+1) slice of a body as a quotient cochain.
SuperPoly level_slice(const SuperPoly& body, int level, const SpaceModel& sp) {
    SuperPoly slice(sp);
    for (const auto& [key, c] : body.terms())
        if (y_degree(key, sp) == level + 1) slice.add_term(key, c);
    return slice;
}

Scalar constant_coefficient(const SuperPoly& a) {
    Scalar c(0);
    for (const auto& [key, v] : a.terms()) {
        if (total_even_degree(key) != 0 || key.odd != 0)
            throw InternalError("expected a constant polynomial");
        c = v;
    }
    return c;
}

}  // namespace

// ---------------------------------------------------------------------------
// solve_equivalence
// ---------------------------------------------------------------------------

SolverReport solve_equivalence(const MCElement& gamma, const MCElement& gamma_prime,
                               std::optional<int> x_cap) {
    const MultiVec& target = gamma.bivector;
    const MultiVec& start = gamma_prime.bivector;
    if (target.space() != start.space()) throw SpaceMismatch();
    if (target.jet_order() != start.jet_order()) throw JetOrderMismatch();
    const SpaceModel sp = target.space();
    const int n_jet = target.jet_order();

    MultiVec current = start;
    GaugeElement total = make_gauge_element(MultiVec::zero(sp, n_jet, 1));
    std::vector<IterationLog> log;

    const MultiVec initial_diff = current - target;
    if (initial_diff.is_zero())
        return SolverReport{SolveStatus::equivalent, std::move(total), std::move(log),
                            MultiVec::zero(sp, n_jet, 2), std::nullopt};

    const int p = filtration_info(initial_diff).level;
    if (p < 1) throw JetMismatch();

    const std::array<int, 4> caps = descent_caps(sp, target, x_cap);
    const int max_steps = n_jet - p + 1;

    for (int k = 1;; ++k) {
        const MultiVec diff = current - target;
        if (diff.is_zero()) break;
        if (k > max_steps)
            throw InternalError("descent failed to terminate within the truncation bound");

        const int q = filtration_info(diff).level;
        if (q < p + k - 1)
            throw EstimateViolated("residual level " + std::to_string(q) +
                                   " below the guaranteed " + std::to_string(p + k - 1));

        const SuperPoly slice = level_slice(diff.body(), q, sp);
        if (const auto xd = max_x_degree(slice); xd && *xd > caps[2])
            throw XDegreeOverflow("the level-" + std::to_string(q) +
                                  " residual exceeds the x-degree cap " +
                                  std::to_string(caps[2]));

        const auto data = level_data(target, q, caps);
        const std::vector<Scalar> r = coordinates(data->complex.basis[2], slice);

        // Corrective log: the homotopy image when cohomology vanishes, else
        // a direct solve for this specific cocycle (it may still be exact).
        std::vector<Scalar> x_coords;
        if (const auto* pair = std::get_if<HomotopyPair>(&data->homotopy)) {
            x_coords = pair->h1.entries * r;
        } else {
            LinearSolveResult direct = solve_with_certificate(data->complex.d[1].entries, r);
            if (!direct.solution) {
                ObstructionReport ob = std::get<ObstructionReport>(data->homotopy);
                ob.cocycle = r;
                return SolverReport{SolveStatus::obstructed, std::move(total), std::move(log),
                                    diff, std::move(ob)};
            }
            x_coords = std::move(*direct.solution);
        }

        const MultiVec x_k(sp, n_jet, 1, from_coordinates(data->complex.basis[1], x_coords));
        const GaugeElement step = make_gauge_element(x_k);
        current = exp_ad(step, current);
        total = bch(step, total);

        const LNorm x_norm = filtration_info(x_k).norm;
        const LNorm residual_norm = filtration_info(current - target).norm;
        if (!(x_norm <= LNorm::pow2(p + k - 1)))
            throw EstimateViolated("||X_" + std::to_string(k) + "|| = " + x_norm.str() +
                                   " exceeds 2^-" + std::to_string(p + k - 1));
        if (!(residual_norm <= LNorm::pow2(p + k)))
            throw EstimateViolated("residual norm " + residual_norm.str() + " exceeds 2^-" +
                                   std::to_string(p + k) + " after step " + std::to_string(k));
        log.push_back(IterationLog{q, x_norm, residual_norm});
    }

    // Soundness certificate: re-verify the accumulated gauge independently.
    if (!(exp_ad(total, start) == target))
        throw InternalError("accumulated gauge failed the final re-verification");
    return SolverReport{SolveStatus::equivalent, std::move(total), std::move(log),
                        MultiVec::zero(sp, n_jet, 2), std::nullopt};
}

// ---------------------------------------------------------------------------
// linearize / realize_jet
// ---------------------------------------------------------------------------

SolverReport linearize(const MCElement& pi, std::optional<int> x_cap) {
    const MultiVec& body = pi.bivector;
    if (body.space().p != 0) throw InputError("linearize expects a point leaf (p = 0)");
    const int n = body.space().q;

    // Isotropy Lie algebra from the linear part. The constructor re-checks
    // antisymmetry and Jacobi, which hold because pi is Maurer-Cartan.
    const RestrictedAlgebroid alg = algebroid_from_jet(body);
    std::vector<Scalar> flat(static_cast<std::size_t>(n) * n * n, Scalar(0));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                flat[(static_cast<std::size_t>(a) * n + b) * n + c] =
                    constant_coefficient(alg.gamma(a, b, c));
    const LieAlgebraData g(n, std::move(flat));

    const MCElement linear = make_mc_element(lie_poisson(g, body.jet_order()));
    return solve_equivalence(linear, pi, x_cap);
}

SolverReport realize_jet(const MCElement& pi_hat, const MCElement& first_order,
                         std::optional<int> x_cap) {
    return solve_equivalence(pi_hat, first_order, x_cap);
}

// ---------------------------------------------------------------------------
// extend_order2
// ---------------------------------------------------------------------------

std::vector<ExtensionAttempt> extend_order2(const MultiVec& pi1,
                                            const std::vector<int>& x_caps) {
    if (pi1.degree() != 2) throw InputError("first-order data must be a bivector");
    if (!is_tangent(pi1)) throw NotTangent();
    const SpaceModel sp = pi1.space();

    const MultiVec jet1(sp, 2, 2, sp_truncate_y(pi1.body(), 1));
    const MultiVec defect = schouten(jet1, jet1);
    SuperPoly cocycle(sp);
    for (const auto& [key, c] : defect.body().terms()) {
        if (y_degree(key, sp) < 2)
            throw InputError("first-order data is not Maurer-Cartan modulo y^2");
        if (y_degree(key, sp) == 2) cocycle.add_term(key, make_scalar(-1, 2) * c);
    }

    const int growth = x_growth(jet1);
    const int cocycle_x = max_x_degree(cocycle).value_or(0);

    std::vector<ExtensionAttempt> attempts;
    for (const int cap : x_caps) {
        const int codomain_cap = std::max(cap + growth, cocycle_x);
        const LinearMapMatrix d2 = quotient_differential(jet1, 1, 2, cap, codomain_cap);
        const std::vector<Scalar> rhs = coordinates(d2.codomain, cocycle);

        // The graded Jacobi identity forces the cocycle closed; certify it.
        const LinearMapMatrix d3 =
            quotient_differential(jet1, 1, 3, codomain_cap, codomain_cap + growth);
        for (const Scalar& v : d3.entries * rhs)
            if (v != 0) throw InternalError("order-2 cocycle is not closed");

        ExtensionAttempt attempt{cap, rhs, std::nullopt, {}};
        LinearSolveResult solve = solve_with_certificate(d2.entries, rhs);
        if (solve.solution)
            attempt.correction =
                MultiVec(sp, 2, 2, from_coordinates(d2.domain, *solve.solution));
        else
            attempt.certificate = std::move(*solve.certificate);
        attempts.push_back(std::move(attempt));
    }
    return attempts;
}

}  // namespace mcgauge
