/// @file cohomology.hpp
/// Finite-dimensional graded-quotient complexes and their exact linear
/// algebra: the differential d_gamma = [gamma, .] on F_q / F_{q+1}, the
/// Chevalley-Eilenberg complex of the restricted algebroid with symmetric
/// conormal coefficients, cohomology dimensions, certified homotopy pairs,
/// and the tau comparison map identifying the two complexes.
///
/// Index bookkeeping (used consistently below): filtration level q
/// corresponds to y-degree exactly q+1 and to the symmetric power k = q+1.
/// Cochain degrees are multivector degrees (number of xi factors), so the
/// complex spans degrees 0..3 with three differentials; the solver's
/// obstruction space sits at degree 2 (bivectors), which is the algebroid
/// H^2 under the tau identification.

#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mcgauge/linalg.hpp"
#include "mcgauge/multivec.hpp"

namespace mcgauge {

// ---------------------------------------------------------------------------
// Restricted algebroid
// ---------------------------------------------------------------------------

/// The algebroid structure induced on A_P = (dx|_P, dy|_P) by the 1-jet of a
/// tangent bivector: anchor rho(du_a) = sum_i rho[a][i] d/dx_i and bracket
/// [du_a, du_b] = sum_c gamma(a,b,c) du_c, all with polynomial coefficients
/// in x (stored as y-free, even superpolynomials over the ambient model).
struct RestrictedAlgebroid {
    SpaceModel space;
    /// rho[a][i], a in 0..p+q-1, i in 0..p-1.
    std::vector<std::vector<SuperPoly>> anchor;
    /// Flat [a][b][c] structure functions, each y-free and even.
    std::vector<SuperPoly> bracket_structure;

    const SuperPoly& gamma(int a, int b, int c) const {
        const int n = space.dim();
        return bracket_structure[static_cast<std::size_t>(a * n + b) * n + c];
    }

    bool operator==(const RestrictedAlgebroid&) const = default;
};

/// Extracts the restricted algebroid from the 1-jet of a tangent bivector:
/// rho[a][i] = pi^{ai}|_{y=0} and gamma(a,b,c) = (d pi^{ab} / d u_c)|_{y=0}.
/// Depends only on j^1(pi). Throws NotTangent / InputError (degree != 2).
RestrictedAlgebroid algebroid_from_jet(const MultiVec& pi);
RestrictedAlgebroid algebroid_from_jet(const MCElement& pi);

/// Lifts structure constants to a p = 0 algebroid (zero anchor).
RestrictedAlgebroid algebroid_from_lie_algebra(const LieAlgebraData& g);

/// Symbolic verification of antisymmetry, anchor morphism, and the Jacobi
/// identity on the frame. `witness` names the first failing combination.
struct AlgebroidAxiomReport {
    bool pass = true;
    std::string witness;
};

AlgebroidAxiomReport algebroid_axioms(const RestrictedAlgebroid& a);

// ---------------------------------------------------------------------------
// Cochain bases and complexes
// ---------------------------------------------------------------------------

/// Labeled monomial basis of F_q L^d / F_{q+1} L^d restricted to x-degree
/// <= x_cap: all term keys y^alpha x^beta xi_I with |alpha| = q+1,
/// |beta| <= x_cap, |I| = degree, in graded-lexicographic key order. Under
/// tau the same keys read as S^{q+1} conormal symbols tensor algebroid
/// cochains, so the basis doubles as the Chevalley-Eilenberg one.
class CochainBasis {
public:
    CochainBasis(SpaceModel space, int level, int degree, int x_cap);

    const SpaceModel& space() const { return space_; }
    int level() const { return level_; }
    int degree() const { return degree_; }
    int x_cap() const { return x_cap_; }
    int dim() const { return static_cast<int>(keys_.size()); }
    const std::vector<TermKey>& keys() const { return keys_; }

    std::optional<int> index_of(const TermKey& key) const;

    bool operator==(const CochainBasis& other) const;

private:
    SpaceModel space_;
    int level_;
    int degree_;
    int x_cap_;
    std::vector<TermKey> keys_;
    std::map<TermKey, int, TermKeyLess> index_;
};

/// Coordinates of a polynomial whose every term lies in the basis; throws
/// InputError when a term falls outside (wrong y-degree or over the cap).
std::vector<Scalar> coordinates(const CochainBasis& basis, const SuperPoly& poly);
SuperPoly from_coordinates(const CochainBasis& basis, const std::vector<Scalar>& coords);

/// Exact matrix of a linear map between labeled bases.
struct LinearMapMatrix {
    CochainBasis domain;
    CochainBasis codomain;
    Matrix entries;  // codomain.dim() x domain.dim()
};

/// Level-q quotient complex in multivector degrees 0..3, differentials
/// d[i]: degree i -> i+1.
struct QuotientComplex {
    int level = 0;
    std::array<CochainBasis, 4> basis;
    std::array<LinearMapMatrix, 3> d;
};

/// Stepped-cap assembler of d_gamma = [j^1 gamma, .] on the level-q quotient
/// (y-degree exactly q+1). The degree-d basis is capped at caps[d]; every
/// image must fit the codomain cap, else XDegreeOverflow. Accepts level
/// q >= 0 (the public wrapper insists on q >= 1). Only j^1 of gamma enters.
QuotientComplex assemble_quotient_complex(const MultiVec& gamma, int level,
                                          const std::array<int, 4>& caps);

/// Uniform-cap complex: level q >= 1; x_cap must be given for p > 0 and is
/// ignored when p = 0. Raises XDegreeOverflow when the cap is not
/// d-invariant (always the case for p > 0 inputs with genuine x-dependence;
/// use the stepped assembler for those).
QuotientComplex quotient_complex(const MultiVec& gamma, int level, std::optional<int> x_cap);

/// Single block of the stepped-cap complex: the matrix of
/// w -> proj_{level}[j^1 gamma, w] from degree-`degree` cochains (x-cap
/// domain_cap) to degree-(degree+1) cochains (x-cap codomain_cap). Lets a
/// caller solve against one differential without assembling neighbours whose
/// caps would overflow.
LinearMapMatrix quotient_differential(const MultiVec& gamma, int level, int degree,
                                      int domain_cap, int codomain_cap);

/// The Chevalley-Eilenberg complex of the restricted algebroid with
/// S^k(TP-conormal) coefficients on the same labeled bases (level = k-1):
///
///   d = sum_a xi_a (rho_a + nabla_a)  -  sum_{a<b} gamma(a,b,c) xi_a xi_b d/dxi_c
///
/// where rho_a differentiates the x-part and nabla_a acts on the symbols by
/// nabla_a s_j = sum_{c normal} gamma(a, p+j, c) s_{c-p}.
QuotientComplex ce_complex(const RestrictedAlgebroid& a, int k, const std::array<int, 4>& caps);

/// (dim H^0, dim H^1, dim H^2), ranks by exact elimination; asserts d^2 = 0
/// first and throws NotAComplex otherwise.
std::array<int, 3> cohomology_dims(const QuotientComplex& c);

// ---------------------------------------------------------------------------
// Homotopy pairs and obstructions
// ---------------------------------------------------------------------------

/// Certified contraction at the bivector slot of a level-q quotient:
/// d[1] h1 + h2 d[2] = Id on degree-2 cochains, checked by exact matrix
/// arithmetic. h1: bivectors -> vector fields, h2: trivectors -> bivectors.
struct HomotopyPair {
    int level = 0;
    LinearMapMatrix h1;
    LinearMapMatrix h2;
    bool certified = false;
};

/// Nonzero bivector-slot cohomology: a basis of closed-not-exact
/// representatives (coordinates in the degree-2 basis). `cocycle` stays
/// empty here; the solver fills it with the specific failing residual.
struct ObstructionReport {
    int level = 0;
    int dim_h1 = 0;  // dim ker d[2] - rank d[1]: the solver's "H^1"
    std::vector<std::vector<Scalar>> representatives;
    std::vector<Scalar> cocycle;
};

/// Synthesizes the homotopy pair by exact row reduction with graded-lex
/// pivot tie-breaking, or reports the obstruction space when the bivector
/// cohomology of the capped complex is nonzero. Throws NotAComplex.
std::variant<HomotopyPair, ObstructionReport> homotopy_pair(const QuotientComplex& c);

// ---------------------------------------------------------------------------
// tau comparison
// ---------------------------------------------------------------------------

/// tau_k: keeps the y-degree-exactly-k part of W verbatim (the y-exponents
/// become S^k symbols, the rest restricts to P); terms of y-degree >= k+1
/// form the kernel. Every term of W must have y-degree >= k, else
/// LevelTooLow.
SuperPoly tau_map(int k, const MultiVec& w);

}  // namespace mcgauge
