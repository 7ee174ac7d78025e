/// @file superpoly.hpp
/// Supercommutative polynomials over exact rationals: the coefficient carrier
/// for every multivector field in the engine.
///
/// Ambient model: p even "tangent" coordinates x_1..x_p, q even "normal"
/// coordinates y_1..y_q (the submanifold P is {y = 0}), and p+q odd
/// generators xi_1..xi_{p+q}, one per coordinate direction (xi_i encodes the
/// wedge factor d/du_i, where u_i = x_i for i <= p and u_i = y_{i-p} above).
///
/// Terms are kept in a canonical form: odd generators strictly increasing
/// (signs normalized on insertion), no zero coefficients, keys ordered
/// graded-lexicographically. Equality is decidable key-by-key and every
/// operation is exact and deterministic.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mcgauge/errors.hpp"
#include "mcgauge/scalar.hpp"

namespace mcgauge {

/// Ambient space model: p tangent and q normal even coordinates.
struct SpaceModel {
    int p = 0;
    int q = 0;

    int dim() const { return p + q; }
    bool operator==(const SpaceModel&) const = default;
};

/// Largest supported p+q (odd sets live in a 32-bit mask).
inline constexpr int kMaxDim = 32;

/// Throws InputError unless 0 <= p, 0 <= q, 1 <= p+q <= kMaxDim.
void validate_space(const SpaceModel& space);

/// Set of odd generators as a bitmask; bit i-1 represents xi_i. The mask
/// encoding makes the strictly-increasing normalization automatic.
using OddMask = std::uint32_t;

/// Monomial key: even exponents (length p+q) plus the odd-generator set.
struct TermKey {
    std::vector<std::int32_t> even;
    OddMask odd = 0;

    bool operator==(const TermKey&) const = default;
};

/// Graded-lexicographic key order: total even degree first, then the even
/// exponent vector lexicographically, then odd count, then the odd mask.
/// Fixes a deterministic iteration order for all term maps and bases.
struct TermKeyLess {
    bool operator()(const TermKey& a, const TermKey& b) const;
};

int total_even_degree(const TermKey& key);
int y_degree(const TermKey& key, const SpaceModel& space);
int x_degree(const TermKey& key, const SpaceModel& space);
int odd_degree(const TermKey& key);

/// Supercommutative polynomial: finite map from canonical keys to nonzero
/// exact rational coefficients over a fixed ambient model.
class SuperPoly {
public:
    using TermMap = std::map<TermKey, Scalar, TermKeyLess>;

    SuperPoly() = default;
    explicit SuperPoly(SpaceModel space) : space_(space) { validate_space(space_); }

    static SuperPoly zero(SpaceModel space) { return SuperPoly(space); }
    static SuperPoly constant(SpaceModel space, const Scalar& c);

    /// Build a single term from 1-based odd indices in any order; the sign is
    /// normalized to the increasing order (duplicates give the zero poly).
    /// `even` may be shorter than p+q (padded with zeros).
    static SuperPoly monomial(SpaceModel space, const Scalar& coeff,
                              std::vector<std::int32_t> even,
                              const std::vector<int>& odd_indices);

    const SpaceModel& space() const { return space_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Coefficient of a canonical key (0 if absent).
    Scalar coeff(const TermKey& key) const;

    /// Accumulate c into the key's coefficient, dropping the term when the
    /// sum cancels. The key must already be canonical.
    void add_term(const TermKey& key, const Scalar& c);

    bool operator==(const SuperPoly& other) const {
        return space_ == other.space_ && terms_ == other.terms_;
    }

private:
    SpaceModel space_{0, 1};
    TermMap terms_;
};

SuperPoly operator+(const SuperPoly& a, const SuperPoly& b);
SuperPoly operator-(const SuperPoly& a, const SuperPoly& b);
SuperPoly operator-(const SuperPoly& a);
SuperPoly operator*(const Scalar& c, const SuperPoly& a);

/// Supercommutative product. Even exponents add; odd sets merge with the
/// Koszul sign (-1)^{#inversions}; intersecting odd sets give zero.
/// Throws SpaceMismatch when the ambient models differ.
SuperPoly sp_mul(const SuperPoly& a, const SuperPoly& b);

/// Kind selector for sp_deriv.
enum class Deriv { Even, Odd };

/// Partial derivative by the i-th coordinate direction (1-based, 1..p+q).
/// Even: d/du_i on exponents. Odd: left derivative d/dxi_i, removing xi_i
/// with sign (-1)^{#odd generators preceding xi_i}; terms lacking xi_i die.
/// Throws IndexOutOfRange for i outside 1..p+q.
SuperPoly sp_deriv(const SuperPoly& a, Deriv kind, int i);

/// Drop every term of total y-degree > N (idempotent; N >= 0).
SuperPoly sp_truncate_y(const SuperPoly& a, int N);

/// Minimal total y-degree over stored terms; nullopt for the zero poly.
std::optional<int> min_y_degree(const SuperPoly& a);

/// Maximal total x-degree over stored terms; nullopt for the zero poly.
std::optional<int> max_x_degree(const SuperPoly& a);

/// True when no term carries an odd generator.
bool is_even_poly(const SuperPoly& a);

/// Odd degree when all terms share it; nullopt for inhomogeneous a.
/// The zero polynomial is homogeneous of every degree (returns the hint).
std::optional<int> homogeneous_odd_degree(const SuperPoly& a, int zero_hint = 0);

/// Deterministic rendering, e.g. "5/2 x1^2 y1 xi2 xi3 + y2".
std::string to_string(const SuperPoly& a);

}  // namespace mcgauge
