/// @file glagroup.hpp
/// The gauge group G(L) = { e^X : X in F_1 L^0 } acting on the truncated
/// graded Lie algebra: the exponential of the adjoint action and the
/// Campbell-Hausdorff product. Both series are finite here because every
/// adjoint application raises the filtration level by at least one, so terms
/// with more than jetOrder adjoints vanish modulo the truncation ideal.

#pragma once

#include "mcgauge/multivec.hpp"

namespace mcgauge {

/// Logarithm of a gauge transformation: a tangent vector field of
/// filtration level >= 1 (every term has total y-degree >= 2), so its
/// L-norm is at most 1/2. Construct through make_gauge_element.
struct GaugeElement {
    MultiVec log;
};

/// Validates degree 1, tangency, and filtration level >= 1.
/// Throws NotGaugeElement (the zero vector field is a valid gauge).
GaugeElement make_gauge_element(const MultiVec& x);

/// Ad(e^X) W = sum_{n>=0} ad_X^n(W) / n! in the truncated algebra.
/// Preserves multivector degree and the L-norm. W must be tangent.
MultiVec exp_ad(const GaugeElement& x, const MultiVec& w);

/// Convenience overload validating x on the fly.
MultiVec exp_ad(const MultiVec& x, const MultiVec& w);

/// Campbell-Hausdorff product X*Y = log(e^X e^Y), summed over adjoint words
///
///   X*Y = X + Y + sum_{k>=1} (-1)^k/(k+1) sum_{(l_i,m_i), l_i+m_i>0}
///         ad_X^{l_1} ad_Y^{m_1} ... ad_X^{l_k} ad_Y^{m_k} (X)
///         / ( (1 + sum_i l_i) * prod_i l_i! m_i! ),
///
/// the closed form of X*Y = Y + int_0^1 g(e^{t ad_X} e^{ad_Y})(X) dt with
/// g(z) = ln z / (z-1). Tuples with sum(l_i + m_i) > jetOrder - 2 vanish by
/// the level-raising argument and are not enumerated. Satisfies
/// ||X*Y|| <= max(||X||, ||Y||), so the result is again a gauge element.
GaugeElement bch(const GaugeElement& x, const GaugeElement& y);

}  // namespace mcgauge
