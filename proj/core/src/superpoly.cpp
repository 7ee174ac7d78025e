#include "mcgauge/superpoly.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace mcgauge {

// ---------------------------------------------------------------------------
// Scalar helpers
// ---------------------------------------------------------------------------

Scalar make_scalar(long num, long den) {
    if (den == 0) throw InputError("rational with zero denominator");
    Scalar v(num, den);
    v.canonicalize();
    return v;
}

Scalar scalar_from_string(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            Scalar v(mpz_class(text), 1);
            v.canonicalize();
            return v;
        }
        mpz_class num(text.substr(0, slash));
        mpz_class den(text.substr(slash + 1));
        if (den == 0) throw InputError("rational with zero denominator: " + text);
        Scalar v(num, den);
        v.canonicalize();
        return v;
    } catch (const std::invalid_argument&) {
        throw InputError("malformed rational: " + text);
    }
}

std::string scalar_to_string(const Scalar& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Scalar factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Scalar(f, 1);
}

// ---------------------------------------------------------------------------
// Keys and ordering
// ---------------------------------------------------------------------------

void validate_space(const SpaceModel& space) {
    if (space.p < 0 || space.q < 0 || space.dim() < 1 || space.dim() > kMaxDim)
        throw InputError("space model out of range: p=" + std::to_string(space.p) +
                         " q=" + std::to_string(space.q));
}

int total_even_degree(const TermKey& key) {
    int d = 0;
    for (auto e : key.even) d += e;
    return d;
}

int y_degree(const TermKey& key, const SpaceModel& space) {
    int d = 0;
    for (int j = space.p; j < space.dim(); ++j) d += key.even[j];
    return d;
}

int x_degree(const TermKey& key, const SpaceModel& space) {
    int d = 0;
    for (int i = 0; i < space.p; ++i) d += key.even[i];
    return d;
}

int odd_degree(const TermKey& key) { return std::popcount(key.odd); }

bool TermKeyLess::operator()(const TermKey& a, const TermKey& b) const {
    const int da = total_even_degree(a), db = total_even_degree(b);
    if (da != db) return da < db;
    if (a.even != b.even) return a.even < b.even;
    const int oa = std::popcount(a.odd), ob = std::popcount(b.odd);
    if (oa != ob) return oa < ob;
    return a.odd < b.odd;
}

// ---------------------------------------------------------------------------
// SuperPoly
// ---------------------------------------------------------------------------

SuperPoly SuperPoly::constant(SpaceModel space, const Scalar& c) {
    SuperPoly r(space);
    if (c != 0) r.terms_.emplace(TermKey{std::vector<std::int32_t>(space.dim(), 0), 0}, c);
    return r;
}

SuperPoly SuperPoly::monomial(SpaceModel space, const Scalar& coeff,
                              std::vector<std::int32_t> even,
                              const std::vector<int>& odd_indices) {
    SuperPoly r(space);
    if (coeff == 0) return r;
    if (static_cast<int>(even.size()) > space.dim())
        throw InputError("even exponent vector longer than p+q");
    even.resize(space.dim(), 0);
    for (auto e : even)
        if (e < 0) throw InputError("negative even exponent");

    // Normalize the odd factor: count inversions of the given sequence, then
    // sort. A repeated index squares an odd generator, so the term is zero.
    OddMask mask = 0;
    long inversions = 0;
    std::vector<int> seen;
    for (int idx : odd_indices) {
        if (idx < 1 || idx > space.dim())
            throw IndexOutOfRange("odd index " + std::to_string(idx) + " outside 1.." +
                                  std::to_string(space.dim()));
        const OddMask bit = OddMask{1} << (idx - 1);
        if (mask & bit) return r;  // xi_i * xi_i = 0
        for (int prev : seen)
            if (prev > idx) ++inversions;
        seen.push_back(idx);
        mask |= bit;
    }
    const Scalar c = (inversions % 2 == 0) ? coeff : Scalar(-coeff);
    r.terms_.emplace(TermKey{std::move(even), mask}, c);
    return r;
}

Scalar SuperPoly::coeff(const TermKey& key) const {
    const auto it = terms_.find(key);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void SuperPoly::add_term(const TermKey& key, const Scalar& c) {
    if (c == 0) return;
    const auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SuperPoly operator+(const SuperPoly& a, const SuperPoly& b) {
    if (a.space() != b.space()) throw SpaceMismatch();
    SuperPoly r = a;
    for (const auto& [key, c] : b.terms()) r.add_term(key, c);
    return r;
}

SuperPoly operator-(const SuperPoly& a, const SuperPoly& b) {
    if (a.space() != b.space()) throw SpaceMismatch();
    SuperPoly r = a;
    for (const auto& [key, c] : b.terms()) r.add_term(key, -c);
    return r;
}

SuperPoly operator-(const SuperPoly& a) { return Scalar(-1) * a; }

SuperPoly operator*(const Scalar& c, const SuperPoly& a) {
    SuperPoly r(a.space());
    if (c == 0) return r;
    for (const auto& [key, v] : a.terms()) r.add_term(key, c * v);
    return r;
}

namespace {

/// Koszul sign for moving the odd block `b` past the odd block `a` into one
/// increasing block: (-1)^{#{(i,j) : i in a, j in b, i > j}}.
int merge_sign(OddMask a, OddMask b) {
    long inversions = 0;
    OddMask rest = b;
    while (rest) {
        const int j = std::countr_zero(rest);
        rest &= rest - 1;
        // a-bits strictly greater than j
        const OddMask above = (j + 1 >= kMaxDim) ? 0 : (a >> (j + 1));
        inversions += std::popcount(above);
    }
    return (inversions % 2 == 0) ? 1 : -1;
}

}  // namespace

SuperPoly sp_mul(const SuperPoly& a, const SuperPoly& b) {
    if (a.space() != b.space()) throw SpaceMismatch();
    SuperPoly r(a.space());
    const int n = a.space().dim();
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            if (ka.odd & kb.odd) continue;  // repeated odd generator
            TermKey key;
            key.even.resize(n);
            for (int i = 0; i < n; ++i) key.even[i] = ka.even[i] + kb.even[i];
            key.odd = ka.odd | kb.odd;
            const int sign = merge_sign(ka.odd, kb.odd);
            r.add_term(key, sign > 0 ? ca * cb : Scalar(-(ca * cb)));
        }
    }
    return r;
}

SuperPoly sp_deriv(const SuperPoly& a, Deriv kind, int i) {
    const int n = a.space().dim();
    if (i < 1 || i > n)
        throw IndexOutOfRange("derivative index " + std::to_string(i) + " outside 1.." +
                              std::to_string(n));
    SuperPoly r(a.space());
    if (kind == Deriv::Even) {
        for (const auto& [key, c] : a.terms()) {
            const std::int32_t e = key.even[i - 1];
            if (e == 0) continue;
            TermKey k = key;
            k.even[i - 1] = e - 1;
            r.add_term(k, Scalar(e) * c);
        }
        return r;
    }
    const OddMask bit = OddMask{1} << (i - 1);
    for (const auto& [key, c] : a.terms()) {
        if (!(key.odd & bit)) continue;
        const int preceding = std::popcount(key.odd & (bit - 1));
        TermKey k = key;
        k.odd = key.odd & ~bit;
        r.add_term(k, (preceding % 2 == 0) ? c : Scalar(-c));
    }
    return r;
}

SuperPoly sp_truncate_y(const SuperPoly& a, int N) {
    if (N < 0) throw InputError("negative jet order");
    SuperPoly r(a.space());
    for (const auto& [key, c] : a.terms())
        if (y_degree(key, a.space()) <= N) r.add_term(key, c);
    return r;
}

std::optional<int> min_y_degree(const SuperPoly& a) {
    std::optional<int> m;
    for (const auto& [key, c] : a.terms()) {
        const int d = y_degree(key, a.space());
        if (!m || d < *m) m = d;
    }
    return m;
}

std::optional<int> max_x_degree(const SuperPoly& a) {
    std::optional<int> m;
    for (const auto& [key, c] : a.terms()) {
        const int d = x_degree(key, a.space());
        if (!m || d > *m) m = d;
    }
    return m;
}

bool is_even_poly(const SuperPoly& a) {
    for (const auto& [key, c] : a.terms())
        if (key.odd) return false;
    return true;
}

std::optional<int> homogeneous_odd_degree(const SuperPoly& a, int zero_hint) {
    if (a.is_zero()) return zero_hint;
    std::optional<int> d;
    for (const auto& [key, c] : a.terms()) {
        const int k = odd_degree(key);
        if (!d)
            d = k;
        else if (*d != k)
            return std::nullopt;
    }
    return d;
}

std::string to_string(const SuperPoly& a) {
    if (a.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, c] : a.terms()) {
        Scalar abs = c < 0 ? Scalar(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::vector<std::string> factors;
        if (abs != 1) factors.push_back(scalar_to_string(abs));
        const auto& sp = a.space();
        for (int i = 0; i < sp.dim(); ++i) {
            const std::int32_t e = key.even[i];
            if (e == 0) continue;
            std::string name = (i < sp.p) ? "x" + std::to_string(i + 1)
                                          : "y" + std::to_string(i - sp.p + 1);
            if (e > 1) name += "^" + std::to_string(e);
            factors.push_back(name);
        }
        for (int i = 0; i < sp.dim(); ++i)
            if (key.odd & (OddMask{1} << i)) factors.push_back("xi" + std::to_string(i + 1));
        if (factors.empty()) factors.push_back(scalar_to_string(abs));
        for (std::size_t k = 0; k < factors.size(); ++k) {
            if (k) out << " ";
            out << factors[k];
        }
    }
    return out.str();
}

}  // namespace mcgauge
