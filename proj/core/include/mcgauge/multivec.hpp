/// @file multivec.hpp
/// The graded Lie algebra of formal multivector fields along P = {y = 0}:
/// homogeneous multivectors with jet truncation, the Schouten-Nijenhuis
/// bracket, tangency, the y-adic filtration with its dyadic L-norm, and the
/// standard constructors (Lie-Poisson structures, Jacobiator).
///
/// Convention (pinned here, used everywhere): the bracket is the BV-style
/// antibracket
///
///     [A,B] = sum_i ( dr A/dxi_i * d B/du_i  -  d A/du_i * dl B/dxi_i )
///
/// with the right xi-derivative on the first slot (termwise sign (-1)^{k-1},
/// k = odd degree of the term) and the left xi-derivative on the second.
/// This is the unique convention satisfying: [X,f] = X(f) and the Lie
/// bracket on vector fields; graded antisymmetry
/// [a,b] = -(-1)^{(d_a-1)(d_b-1)}[b,a]; the graded Jacobi identity; and the
/// graded Leibniz rule over the wedge product. Derived signs under it:
/// [pi,f] = -X_f, and for the Hamiltonian pairing {f,g} := pi(df^dg) the
/// cross-validation identity reads  1/2 <[pi,pi], df^dg^dh> = +Jacobiator.

#pragma once

#include <array>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "mcgauge/superpoly.hpp"

namespace mcgauge {

// ---------------------------------------------------------------------------
// Dyadic L-norm
// ---------------------------------------------------------------------------

/// Value in {0} union {2^-n : n >= 0}, the ultrametric attached to the
/// filtration F_k = I^{k+1}(P) * X.
struct LNorm {
    bool zero = true;
    int exponent = 0;  // norm = 2^-exponent when !zero

    static LNorm of_zero() { return {true, 0}; }
    static LNorm pow2(int n) { return {false, n}; }

    bool operator==(const LNorm&) const = default;
    bool operator<=(const LNorm& other) const;

    LNorm max(const LNorm& other) const;
    /// Product bound: exponents add, zero absorbs.
    LNorm times(const LNorm& other) const;
    LNorm squared() const { return zero ? of_zero() : pow2(2 * exponent); }

    /// "0", "1", or "2^-n".
    std::string str() const;
};

/// Filtration placement of a multivector. Levels: the element lies in
/// F_level \ F_{level+1}; level = minYDegree - 1 when minYDegree >= 1,
/// kOutsideFiltration (-1) when minYDegree = 0, and kLevelInfinity for the
/// zero element (which lies in every F_k).
inline constexpr int kOutsideFiltration = -1;
inline constexpr int kLevelInfinity = std::numeric_limits<int>::max();

struct FiltrationInfo {
    bool zero = false;
    int min_y_degree = 0;  // meaningful when !zero
    int level = kLevelInfinity;
    LNorm norm;
};

// ---------------------------------------------------------------------------
// MultiVec
// ---------------------------------------------------------------------------

/// Homogeneous-degree multivector field with ambient model and jet order.
/// The body is a supercommutative polynomial of pure odd degree d; the
/// constructor projects to the jet quotient (drops y-degree > jetOrder), so
/// a MultiVec is always the canonical representative of its jet class.
/// GLA degree is d - 1 (functions sit in degree -1, bivectors in degree 1).
/// The zero multivector is degree-agnostic: ==, + and - treat zeros of
/// different nominal degree as the same element, so bracket identities can be
/// stated without special-casing degenerate degrees.
class MultiVec {
public:
    MultiVec(SpaceModel space, int jet_order, int degree, SuperPoly body);

    static MultiVec zero(SpaceModel space, int jet_order, int degree) {
        return MultiVec(space, jet_order, degree, SuperPoly::zero(space));
    }

    const SpaceModel& space() const { return space_; }
    int jet_order() const { return jet_order_; }
    int degree() const { return degree_; }
    int gla_degree() const { return degree_ - 1; }
    const SuperPoly& body() const { return body_; }
    bool is_zero() const { return body_.is_zero(); }

    bool operator==(const MultiVec& other) const;

private:
    SpaceModel space_;
    int jet_order_;
    int degree_;
    SuperPoly body_;
};

MultiVec operator+(const MultiVec& a, const MultiVec& b);
MultiVec operator-(const MultiVec& a, const MultiVec& b);
MultiVec operator-(const MultiVec& a);
MultiVec operator*(const Scalar& c, const MultiVec& a);

/// Schouten-Nijenhuis bracket under the pinned convention, truncated at the
/// common jet order; result degree d_a + d_b - 1 (clamped at 0 with a zero
/// body when both arguments are functions).
/// Throws SpaceMismatch / JetOrderMismatch.
MultiVec schouten(const MultiVec& a, const MultiVec& b);

/// Minimal y-degree, filtration level, and dyadic L-norm.
FiltrationInfo filtration_info(const MultiVec& w);

/// True iff every term carrying a normal odd generator xi_{p+j} has total
/// y-degree >= 1 (the restriction to P is a multivector field *of* P).
bool is_tangent(const MultiVec& w);

/// [pi, pi] for a tangent bivector; pi is Maurer-Cartan iff this vanishes.
/// Throws NotTangent / InputError (degree != 2).
MultiVec mc_defect(const MultiVec& pi);

/// Hamiltonian pairing {f,g} = pi(df^dg) for purely even f, g.
SuperPoly hamiltonian_bracket(const MultiVec& pi, const SuperPoly& f, const SuperPoly& g);

/// Cyclic sum {f,{g,h}} + {g,{h,f}} + {h,{f,g}} by direct double
/// contraction: an implementation path independent of mc_defect, used for
/// cross-validation. f, g, h must be purely even.
SuperPoly jacobiator(const MultiVec& pi, const SuperPoly& f, const SuperPoly& g,
                     const SuperPoly& h);

/// Pairing of a trivector with df^dg^dh (determinant contraction).
SuperPoly contract3(const MultiVec& t, const SuperPoly& f, const SuperPoly& g,
                    const SuperPoly& h);

// ---------------------------------------------------------------------------
// Maurer-Cartan elements
// ---------------------------------------------------------------------------

/// A validated Maurer-Cartan element: tangent bivector with [g,g] = 0 in the
/// truncated algebra. Construct through make_mc_element.
struct MCElement {
    MultiVec bivector;
};

/// Validates degree 2, tangency, and vanishing MC defect.
/// Throws InputError / NotTangent.
MCElement make_mc_element(const MultiVec& pi);

// ---------------------------------------------------------------------------
// Finite-dimensional Lie algebra data
// ---------------------------------------------------------------------------

/// Structure constants c[i][j][k] of a finite-dimensional Lie algebra,
/// [E_i, E_j] = sum_k c[i][j][k] E_k. Antisymmetry and the Jacobi identity
/// are machine-checked at construction (throws InputError with a witness).
class LieAlgebraData {
public:
    LieAlgebraData(int dim, std::vector<Scalar> flat_constants);

    int dim() const { return n_; }
    const Scalar& c(int i, int j, int k) const { return c_[(i * n_ + j) * n_ + k]; }

    static LieAlgebraData abelian(int dim);
    static LieAlgebraData so3();
    static LieAlgebraData sl2();

private:
    int n_;
    std::vector<Scalar> c_;  // flat [i][j][k]
};

/// Linear Poisson structure on the dual: pi_lin = 1/2 sum c[i][j][k] y_k
/// xi_i xi_j on SpaceModel{0, dim}, truncated at jet_order (>= 1).
MultiVec lie_poisson(const LieAlgebraData& g, int jet_order);

}  // namespace mcgauge
