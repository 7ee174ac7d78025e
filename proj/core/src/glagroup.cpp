#include "mcgauge/glagroup.hpp"

#include <utility>
#include <vector>

namespace mcgauge {

GaugeElement make_gauge_element(const MultiVec& x) {
    if (x.degree() != 1) throw NotGaugeElement("gauge logarithm must be a vector field");
    if (!is_tangent(x)) throw NotGaugeElement("gauge logarithm must be tangent to P");
    const auto info = filtration_info(x);
    if (!info.zero && info.level < 1)
        throw NotGaugeElement("gauge logarithm must lie in F_1 (every term y-degree >= 2)");
    return GaugeElement{x};
}

MultiVec exp_ad(const GaugeElement& x, const MultiVec& w) {
    if (x.log.space() != w.space()) throw SpaceMismatch();
    if (x.log.jet_order() != w.jet_order()) throw JetOrderMismatch();
    if (!is_tangent(w)) throw NotTangent();
    MultiVec acc = w;
    MultiVec term = w;
    // Each ad_X raises the filtration level by >= 1, so the series is finite;
    // jetOrder + 1 applications are always enough.
    for (int n = 1; n <= w.jet_order() + 1; ++n) {
        term = Scalar(1, n) * schouten(x.log, term);
        if (term.is_zero()) break;
        acc = acc + term;
    }
    return acc;
}

MultiVec exp_ad(const MultiVec& x, const MultiVec& w) { return exp_ad(make_gauge_element(x), w); }

namespace {

/// Enumerate tuples ((l_1,m_1),...,(l_k,m_k)) with l_i+m_i >= 1 and total
/// sum <= budget, invoking emit on every prefix length k >= 1.
template <typename Emit>
void for_each_word(int budget, std::vector<std::pair<int, int>>& blocks, Emit&& emit) {
    for (int l = 0; l <= budget; ++l) {
        for (int m = (l == 0 ? 1 : 0); l + m <= budget; ++m) {
            blocks.emplace_back(l, m);
            emit(blocks);
            for_each_word(budget - l - m, blocks, emit);
            blocks.pop_back();
        }
    }
}

}  // namespace

GaugeElement bch(const GaugeElement& x, const GaugeElement& y) {
    if (x.log.space() != y.log.space()) throw SpaceMismatch();
    if (x.log.jet_order() != y.log.jet_order()) throw JetOrderMismatch();
    const int N = x.log.jet_order();
    MultiVec total = x.log + y.log;

    // A word with j adjoint applications has filtration level >= j+1, hence
    // y-degree >= j+2: it survives the truncation only for j <= N-2. (Any
    // looser budget would only add exact zeros.)
    const int budget = N - 2;
    if (budget >= 1) {
        std::vector<std::pair<int, int>> blocks;
        for_each_word(budget, blocks, [&](const std::vector<std::pair<int, int>>& word) {
            // Innermost block acting on X: ad_X^{l_k}(X) = 0 when m_k = 0.
            if (word.back().second == 0) return;
            MultiVec v = x.log;
            for (auto it = word.rbegin(); it != word.rend(); ++it) {
                for (int i = 0; i < it->second && !v.is_zero(); ++i) v = schouten(y.log, v);
                for (int i = 0; i < it->first && !v.is_zero(); ++i) v = schouten(x.log, v);
            }
            if (v.is_zero()) return;
            const int k = static_cast<int>(word.size());
            long l_sum = 0;
            Scalar denom(1);
            for (const auto& [l, m] : word) {
                l_sum += l;
                denom *= factorial(static_cast<unsigned>(l)) * factorial(static_cast<unsigned>(m));
            }
            denom *= Scalar(k + 1) * Scalar(1 + l_sum);
            Scalar weight = Scalar(k % 2 == 0 ? 1 : -1) / denom;
            total = total + weight * v;
        });
    }
    return make_gauge_element(total);
}

}  // namespace mcgauge
