#include "mcgauge/multivec.hpp"

#include <algorithm>
#include <bit>

namespace mcgauge {

// ---------------------------------------------------------------------------
// LNorm
// ---------------------------------------------------------------------------

bool LNorm::operator<=(const LNorm& other) const {
    if (zero) return true;
    if (other.zero) return false;
    return exponent >= other.exponent;
}

LNorm LNorm::max(const LNorm& other) const {
    if (zero) return other;
    if (other.zero) return *this;
    return pow2(std::min(exponent, other.exponent));
}

LNorm LNorm::times(const LNorm& other) const {
    if (zero || other.zero) return of_zero();
    return pow2(exponent + other.exponent);
}

std::string LNorm::str() const {
    if (zero) return "0";
    if (exponent == 0) return "1";
    return "2^-" + std::to_string(exponent);
}

// ---------------------------------------------------------------------------
// MultiVec
// ---------------------------------------------------------------------------

MultiVec::MultiVec(SpaceModel space, int jet_order, int degree, SuperPoly body)
    : space_(space), jet_order_(jet_order), degree_(degree), body_(std::move(body)) {
    validate_space(space_);
    if (jet_order_ < 0) throw InputError("negative jet order");
    if (degree_ < 0 || degree_ > space_.dim())
        throw InputError("multivector degree outside 0..p+q");
    if (body_.space() != space_) throw SpaceMismatch();
    const auto d = homogeneous_odd_degree(body_, degree_);
    if (!d || *d != degree_)
        throw InputError("body is not homogeneous of odd degree " + std::to_string(degree_));
    body_ = sp_truncate_y(body_, jet_order_);
}

bool MultiVec::operator==(const MultiVec& other) const {
    if (space_ != other.space_ || jet_order_ != other.jet_order_) return false;
    if (degree_ != other.degree_) return body_.is_zero() && other.body_.is_zero();
    return body_ == other.body_;
}

namespace {

void require_compatible(const MultiVec& a, const MultiVec& b) {
    if (a.space() != b.space()) throw SpaceMismatch();
    if (a.jet_order() != b.jet_order()) throw JetOrderMismatch();
}

int sum_degree(const MultiVec& a, const MultiVec& b) {
    require_compatible(a, b);
    if (a.degree() == b.degree()) return a.degree();
    if (a.is_zero()) return b.degree();
    if (b.is_zero()) return a.degree();
    throw InputError("multivector degrees differ");
}

}  // namespace

MultiVec operator+(const MultiVec& a, const MultiVec& b) {
    const int degree = sum_degree(a, b);
    return MultiVec(a.space(), a.jet_order(), degree, a.body() + b.body());
}

MultiVec operator-(const MultiVec& a, const MultiVec& b) {
    const int degree = sum_degree(a, b);
    return MultiVec(a.space(), a.jet_order(), degree, a.body() - b.body());
}

MultiVec operator-(const MultiVec& a) {
    return MultiVec(a.space(), a.jet_order(), a.degree(), -a.body());
}

MultiVec operator*(const Scalar& c, const MultiVec& a) {
    return MultiVec(a.space(), a.jet_order(), a.degree(), c * a.body());
}

namespace {

/// Right xi-derivative: termwise (-1)^{k-1} times the left derivative,
/// k = odd degree of the term.
SuperPoly sp_deriv_odd_right(const SuperPoly& a, int i) {
    const SuperPoly left = sp_deriv(a, Deriv::Odd, i);
    // The sign depends on the odd degree of the *original* term, which is
    // odd degree of the derivative plus one.
    SuperPoly r(a.space());
    for (const auto& [key, c] : left.terms()) {
        const int k = odd_degree(key) + 1;
        r.add_term(key, (k - 1) % 2 == 0 ? c : Scalar(-c));
    }
    return r;
}

}  // namespace

MultiVec schouten(const MultiVec& a, const MultiVec& b) {
    require_compatible(a, b);
    const SpaceModel& sp = a.space();
    // The raw degree d_a + d_b - 1 can leave [0, dim] only with a zero body
    // (two functions, or odd degree exceeding the number of generators).
    const int degree = std::clamp(a.degree() + b.degree() - 1, 0, sp.dim());
    SuperPoly acc(sp);
    for (int i = 1; i <= sp.dim(); ++i) {
        acc = acc + sp_mul(sp_deriv_odd_right(a.body(), i), sp_deriv(b.body(), Deriv::Even, i));
        acc = acc - sp_mul(sp_deriv(a.body(), Deriv::Even, i), sp_deriv(b.body(), Deriv::Odd, i));
    }
    return MultiVec(sp, a.jet_order(), degree, std::move(acc));
}

FiltrationInfo filtration_info(const MultiVec& w) {
    FiltrationInfo info;
    const auto m = min_y_degree(w.body());
    if (!m) {
        info.zero = true;
        info.level = kLevelInfinity;
        info.norm = LNorm::of_zero();
        return info;
    }
    info.zero = false;
    info.min_y_degree = *m;
    info.level = (*m >= 1) ? *m - 1 : kOutsideFiltration;
    info.norm = LNorm::pow2(*m >= 1 ? *m - 1 : 0);
    return info;
}

bool is_tangent(const MultiVec& w) {
    const SpaceModel& sp = w.space();
    OddMask normal_mask = 0;
    for (int j = sp.p; j < sp.dim(); ++j) normal_mask |= OddMask{1} << j;
    for (const auto& [key, c] : w.body().terms())
        if ((key.odd & normal_mask) && y_degree(key, sp) < 1) return false;
    return true;
}

MultiVec mc_defect(const MultiVec& pi) {
    if (pi.degree() != 2) throw InputError("mc_defect expects a bivector");
    if (!is_tangent(pi)) throw NotTangent();
    return schouten(pi, pi);
}

SuperPoly hamiltonian_bracket(const MultiVec& pi, const SuperPoly& f, const SuperPoly& g) {
    if (pi.degree() != 2) throw InputError("hamiltonian_bracket expects a bivector");
    if (!is_even_poly(f) || !is_even_poly(g))
        throw InputError("hamiltonian_bracket expects even arguments");
    if (f.space() != pi.space() || g.space() != pi.space()) throw SpaceMismatch();
    const SpaceModel& sp = pi.space();
    // {f,g} = sum_{a<b} pi^{ab} (d_a f d_b g - d_b f d_a g), pi^{ab} the
    // coefficient of xi_a xi_b.
    SuperPoly r(sp);
    for (const auto& [key, c] : pi.body().terms()) {
        OddMask m = key.odd;
        const int a = std::countr_zero(m) + 1;
        m &= m - 1;
        const int b = std::countr_zero(m) + 1;
        TermKey even_part{key.even, 0};
        SuperPoly coeff(sp);
        coeff.add_term(even_part, c);
        const SuperPoly da_f = sp_deriv(f, Deriv::Even, a), db_f = sp_deriv(f, Deriv::Even, b);
        const SuperPoly da_g = sp_deriv(g, Deriv::Even, a), db_g = sp_deriv(g, Deriv::Even, b);
        r = r + sp_mul(coeff, sp_mul(da_f, db_g) - sp_mul(db_f, da_g));
    }
    return r;
}

SuperPoly jacobiator(const MultiVec& pi, const SuperPoly& f, const SuperPoly& g,
                     const SuperPoly& h) {
    return hamiltonian_bracket(pi, f, hamiltonian_bracket(pi, g, h)) +
           hamiltonian_bracket(pi, g, hamiltonian_bracket(pi, h, f)) +
           hamiltonian_bracket(pi, h, hamiltonian_bracket(pi, f, g));
}

SuperPoly contract3(const MultiVec& t, const SuperPoly& f, const SuperPoly& g,
                    const SuperPoly& h) {
    if (t.degree() != 3 && !t.is_zero()) throw InputError("contract3 expects a trivector");
    if (!is_even_poly(f) || !is_even_poly(g) || !is_even_poly(h))
        throw InputError("contract3 expects even arguments");
    const SpaceModel& sp = t.space();
    const std::array<const SuperPoly*, 3> fgh{&f, &g, &h};
    SuperPoly r(sp);
    for (const auto& [key, c] : t.body().terms()) {
        OddMask m = key.odd;
        std::array<int, 3> idx{};
        for (int k = 0; k < 3; ++k) {
            idx[k] = std::countr_zero(m) + 1;
            m &= m - 1;
        }
        // det of the 3x3 matrix (d_{idx[j]} fgh[i]) via Leibniz expansion.
        SuperPoly det(sp);
        constexpr std::array<std::array<int, 3>, 6> perms{
            {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}}};
        for (int pnum = 0; pnum < 6; ++pnum) {
            const auto& perm = perms[pnum];
            SuperPoly prod = sp_deriv(*fgh[0], Deriv::Even, idx[perm[0]]);
            prod = sp_mul(prod, sp_deriv(*fgh[1], Deriv::Even, idx[perm[1]]));
            prod = sp_mul(prod, sp_deriv(*fgh[2], Deriv::Even, idx[perm[2]]));
            det = (pnum < 3) ? det + prod : det - prod;
        }
        TermKey even_part{key.even, 0};
        SuperPoly coeff(sp);
        coeff.add_term(even_part, c);
        r = r + sp_mul(coeff, det);
    }
    return r;
}

MCElement make_mc_element(const MultiVec& pi) {
    if (pi.degree() != 2) throw InputError("Maurer-Cartan element must be a bivector");
    if (!is_tangent(pi)) throw NotTangent();
    if (!mc_defect(pi).is_zero())
        throw InputError("not Maurer-Cartan: [pi,pi] != 0 in the truncated algebra");
    return MCElement{pi};
}

// ---------------------------------------------------------------------------
// LieAlgebraData
// ---------------------------------------------------------------------------

LieAlgebraData::LieAlgebraData(int dim, std::vector<Scalar> flat_constants)
    : n_(dim), c_(std::move(flat_constants)) {
    if (n_ < 1) throw InputError("Lie algebra dimension must be >= 1");
    if (c_.size() != static_cast<std::size_t>(n_) * n_ * n_)
        throw InputError("structure constant array has wrong size");
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            for (int k = 0; k < n_; ++k)
                if (c(i, j, k) != -c(j, i, k))
                    throw InputError("structure constants not antisymmetric at (" +
                                     std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                                     std::to_string(k + 1) + ")");
    // Jacobi: sum_m c[i][j][m] c[m][k][l] + c[j][k][m] c[m][i][l] +
    //               c[k][i][m] c[m][j][l] = 0.
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            for (int k = 0; k < n_; ++k)
                for (int l = 0; l < n_; ++l) {
                    Scalar s(0);
                    for (int m = 0; m < n_; ++m)
                        s += c(i, j, m) * c(m, k, l) + c(j, k, m) * c(m, i, l) +
                             c(k, i, m) * c(m, j, l);
                    if (s != 0)
                        throw InputError("Jacobi identity fails at (" + std::to_string(i + 1) +
                                         "," + std::to_string(j + 1) + "," +
                                         std::to_string(k + 1) + ")");
                }
}

LieAlgebraData LieAlgebraData::abelian(int dim) {
    return LieAlgebraData(dim, std::vector<Scalar>(static_cast<std::size_t>(dim) * dim * dim,
                                                   Scalar(0)));
}

LieAlgebraData LieAlgebraData::so3() {
    std::vector<Scalar> c(27, Scalar(0));
    const auto set = [&](int i, int j, int k, int v) { c[(i * 3 + j) * 3 + k] = Scalar(v); };
    // Levi-Civita symbol: [E_i, E_j] = sum_k eps_{ijk} E_k.
    set(0, 1, 2, 1);
    set(1, 0, 2, -1);
    set(1, 2, 0, 1);
    set(2, 1, 0, -1);
    set(2, 0, 1, 1);
    set(0, 2, 1, -1);
    return LieAlgebraData(3, std::move(c));
}

LieAlgebraData LieAlgebraData::sl2() {
    // Basis (E, F, H): [E,F] = H, [H,E] = 2E, [H,F] = -2F.
    std::vector<Scalar> c(27, Scalar(0));
    const auto set = [&](int i, int j, int k, int v) { c[(i * 3 + j) * 3 + k] = Scalar(v); };
    const int E = 0, F = 1, H = 2;
    set(E, F, H, 1);
    set(F, E, H, -1);
    set(H, E, E, 2);
    set(E, H, E, -2);
    set(H, F, F, -2);
    set(F, H, F, 2);
    return LieAlgebraData(3, std::move(c));
}

MultiVec lie_poisson(const LieAlgebraData& g, int jet_order) {
    const int n = g.dim();
    const SpaceModel sp{0, n};
    SuperPoly body(sp);
    const Scalar half(1, 2);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const Scalar& cijk = g.c(i, j, k);
                if (cijk == 0) continue;
                std::vector<std::int32_t> even(n, 0);
                even[k] = 1;
                body = body + SuperPoly::monomial(sp, half * cijk, even, {i + 1, j + 1});
            }
    return MultiVec(sp, jet_order, 2, std::move(body));
}

}  // namespace mcgauge
