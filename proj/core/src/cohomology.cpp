#include "mcgauge/cohomology.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <exception>
#include <functional>
#include <thread>

namespace mcgauge {

namespace {

/// Restriction to P = {y = 0}: drop every term with positive y-degree.
SuperPoly restrict_to_p(const SuperPoly& a) {
    SuperPoly r(a.space());
    for (const auto& [key, c] : a.terms())
        if (y_degree(key, a.space()) == 0) r.add_term(key, c);
    return r;
}

/// Coefficient polynomial pi^{ab} (1-based a < b as stored keys; extended
/// antisymmetrically by the caller).
SuperPoly bivector_component(const MultiVec& pi, int a, int b) {
    const SpaceModel& sp = pi.space();
    SuperPoly r(sp);
    const OddMask mask = (OddMask{1} << (a - 1)) | (OddMask{1} << (b - 1));
    for (const auto& [key, c] : pi.body().terms())
        if (key.odd == mask) r.add_term(TermKey{key.even, 0}, c);
    return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// Restricted algebroid
// ---------------------------------------------------------------------------

RestrictedAlgebroid algebroid_from_jet(const MultiVec& pi) {
    if (pi.degree() != 2) throw InputError("algebroid extraction expects a bivector");
    if (!is_tangent(pi)) throw NotTangent();
    const SpaceModel& sp = pi.space();
    const int n = sp.dim();
    const MultiVec jet1(sp, 1, 2, pi.body());  // only j^1 enters below

    // pi^{ab} for a < b; antisymmetric extension on the fly.
    const auto component = [&](int a, int b) -> SuperPoly {
        if (a == b) return SuperPoly::zero(sp);
        if (a < b) return bivector_component(jet1, a, b);
        return -bivector_component(jet1, b, a);
    };

    RestrictedAlgebroid result{sp, {}, {}};
    result.anchor.assign(n, std::vector<SuperPoly>(sp.p, SuperPoly::zero(sp)));
    for (int a = 0; a < n; ++a)
        for (int i = 0; i < sp.p; ++i)
            result.anchor[a][i] = restrict_to_p(component(a + 1, i + 1));

    result.bracket_structure.assign(static_cast<std::size_t>(n) * n * n, SuperPoly::zero(sp));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const SuperPoly pab = component(a + 1, b + 1);
            for (int c = 0; c < n; ++c)
                result.bracket_structure[static_cast<std::size_t>(a * n + b) * n + c] =
                    restrict_to_p(sp_deriv(pab, Deriv::Even, c + 1));
        }
    return result;
}

RestrictedAlgebroid algebroid_from_jet(const MCElement& pi) { return algebroid_from_jet(pi.bivector); }

RestrictedAlgebroid algebroid_from_lie_algebra(const LieAlgebraData& g) {
    const int n = g.dim();
    const SpaceModel sp{0, n};
    RestrictedAlgebroid result{sp, {}, {}};
    result.anchor.assign(n, {});
    result.bracket_structure.reserve(static_cast<std::size_t>(n) * n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                result.bracket_structure.push_back(SuperPoly::constant(sp, g.c(a, b, c)));
    return result;
}

AlgebroidAxiomReport algebroid_axioms(const RestrictedAlgebroid& alg) {
    const SpaceModel& sp = alg.space;
    const int n = sp.dim();
    if (static_cast<int>(alg.anchor.size()) != n ||
        alg.bracket_structure.size() != static_cast<std::size_t>(n) * n * n)
        throw InputError("restricted algebroid has malformed containers");

    const auto rho_applied = [&](int c, const SuperPoly& g) {
        SuperPoly r(sp);
        for (int i = 0; i < sp.p; ++i)
            r = r + sp_mul(alg.anchor[c][i], sp_deriv(g, Deriv::Even, i + 1));
        return r;
    };

    const auto frame = [](int a, int b) {
        return "(du_" + std::to_string(a + 1) + ", du_" + std::to_string(b + 1) + ")";
    };

    for (int a = 0; a < n; ++a)
        for (int b = 0; b <= a; ++b)
            for (int c = 0; c < n; ++c)
                if (!(alg.gamma(a, b, c) + alg.gamma(b, a, c)).is_zero())
                    return {false, "antisymmetry fails at " + frame(a, b) + " -> du_" +
                                       std::to_string(c + 1)};

    // Anchor is a bracket morphism: rho([du_a, du_b]) = [rho_a, rho_b].
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < a; ++b)
            for (int i = 0; i < sp.p; ++i) {
                SuperPoly lhs(sp);
                for (int c = 0; c < n; ++c)
                    lhs = lhs + sp_mul(alg.gamma(a, b, c), alg.anchor[c][i]);
                const SuperPoly rhs =
                    rho_applied(a, alg.anchor[b][i]) - rho_applied(b, alg.anchor[a][i]);
                if (!(lhs - rhs).is_zero())
                    return {false, "anchor morphism fails at " + frame(a, b) + ", component d/dx_" +
                                       std::to_string(i + 1)};
            }

    // Jacobi on the frame with the Leibniz correction:
    // sum_cyc(a,b,c) [ sum_e gamma(a,b,e) gamma(e,c,f) - rho_c(gamma(a,b,f)) ] = 0.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < a; ++b)
            for (int c = 0; c < b; ++c)
                for (int f = 0; f < n; ++f) {
                    SuperPoly sum(sp);
                    const int cyc[3][3] = {{a, b, c}, {b, c, a}, {c, a, b}};
                    for (const auto& t : cyc) {
                        for (int e = 0; e < n; ++e)
                            sum = sum + sp_mul(alg.gamma(t[0], t[1], e), alg.gamma(e, t[2], f));
                        sum = sum - rho_applied(t[2], alg.gamma(t[0], t[1], f));
                    }
                    if (!sum.is_zero())
                        return {false, "Jacobi fails at (du_" + std::to_string(a + 1) + ", du_" +
                                           std::to_string(b + 1) + ", du_" + std::to_string(c + 1) +
                                           ") -> du_" + std::to_string(f + 1)};
                }
    return {true, ""};
}

// ---------------------------------------------------------------------------
// Cochain bases
// ---------------------------------------------------------------------------

namespace {

/// All exponent vectors of the given length with entry sum == total.
void compositions(int length, int total, std::vector<std::int32_t>& scratch,
                  const std::function<void(const std::vector<std::int32_t>&)>& emit, int pos = 0) {
    if (pos == length) {
        if (total == 0) emit(scratch);
        return;
    }
    if (pos == length - 1) {
        scratch[pos] = total;
        emit(scratch);
        scratch[pos] = 0;
        return;
    }
    for (int v = 0; v <= total; ++v) {
        scratch[pos] = v;
        compositions(length, total - v, scratch, emit, pos + 1);
        scratch[pos] = 0;
    }
}

}  // namespace

CochainBasis::CochainBasis(SpaceModel space, int level, int degree, int x_cap)
    : space_(space), level_(level), degree_(degree), x_cap_(x_cap) {
    validate_space(space_);
    if (level_ < 0) throw InputError("negative filtration level");
    // Degrees above p+q are legal and give the empty basis (no odd masks),
    // so low-dimensional models can still carry the full 0..3 complex.
    if (degree_ < 0) throw InputError("negative cochain degree");
    if (x_cap_ < 0) throw InputError("negative x-degree cap");

    const int n = space_.dim();
    std::vector<OddMask> masks;
    for (OddMask m = 0; m < (OddMask{1} << n); ++m)
        if (std::popcount(m) == degree_) masks.push_back(m);

    // y-part: |alpha| = level + 1 exactly; x-part: |beta| <= x_cap.
    std::vector<std::vector<std::int32_t>> evens;
    std::vector<std::int32_t> ypart(space_.q, 0);
    compositions(space_.q, level_ + 1, ypart, [&](const std::vector<std::int32_t>& ys) {
        std::vector<std::int32_t> xpart(space_.p, 0);
        for (int t = 0; t <= (space_.p > 0 ? x_cap_ : 0); ++t)
            compositions(space_.p, t, xpart, [&](const std::vector<std::int32_t>& xs) {
                std::vector<std::int32_t> even(n);
                std::copy(xs.begin(), xs.end(), even.begin());
                std::copy(ys.begin(), ys.end(), even.begin() + space_.p);
                evens.push_back(std::move(even));
            });
    });

    for (const auto& even : evens)
        for (const OddMask m : masks) keys_.push_back(TermKey{even, m});
    std::sort(keys_.begin(), keys_.end(), TermKeyLess{});
    for (int i = 0; i < static_cast<int>(keys_.size()); ++i) index_.emplace(keys_[i], i);
}

std::optional<int> CochainBasis::index_of(const TermKey& key) const {
    const auto it = index_.find(key);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool CochainBasis::operator==(const CochainBasis& other) const {
    return space_ == other.space_ && level_ == other.level_ && degree_ == other.degree_ &&
           x_cap_ == other.x_cap_ && keys_ == other.keys_;
}

std::vector<Scalar> coordinates(const CochainBasis& basis, const SuperPoly& poly) {
    if (poly.space() != basis.space()) throw SpaceMismatch();
    std::vector<Scalar> coords(basis.dim(), Scalar(0));
    for (const auto& [key, c] : poly.terms()) {
        const auto idx = basis.index_of(key);
        if (!idx) throw InputError("term outside the cochain basis (y-degree or cap mismatch)");
        coords[*idx] = c;
    }
    return coords;
}

SuperPoly from_coordinates(const CochainBasis& basis, const std::vector<Scalar>& coords) {
    if (static_cast<int>(coords.size()) != basis.dim())
        throw InputError("coordinate vector length does not match basis dimension");
    SuperPoly r(basis.space());
    for (int i = 0; i < basis.dim(); ++i)
        if (coords[i] != 0) r.add_term(basis.keys()[i], coords[i]);
    return r;
}

// ---------------------------------------------------------------------------
// Complex assembly
// ---------------------------------------------------------------------------

namespace {

int assembly_threads() {
    int threads = static_cast<int>(std::thread::hardware_concurrency());
    threads = std::clamp(threads, 1, 8);
    if (const char* env = std::getenv("MCGAUGE_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1) threads = static_cast<int>(std::min<long>(v, 64));
    }
    return threads;
}

/// Assembles the matrix of a degree-(+1) linear map given columnwise images.
/// Every image term must land in the codomain basis; terms over the x-cap
/// raise XDegreeOverflow, anything else inconsistent is an internal error.
LinearMapMatrix assemble_matrix(const CochainBasis& domain, const CochainBasis& codomain,
                                const std::function<SuperPoly(const TermKey&)>& image) {
    LinearMapMatrix m{domain, codomain, Matrix(codomain.dim(), domain.dim())};

    const auto fill_column = [&](int j) {
        const SuperPoly img = image(domain.keys()[j]);
        for (const auto& [key, c] : img.terms()) {
            if (x_degree(key, domain.space()) > codomain.x_cap())
                throw XDegreeOverflow(
                    "the x-degree cap is not invariant under the differential (domain cap " +
                    std::to_string(domain.x_cap()) + ", codomain cap " +
                    std::to_string(codomain.x_cap()) + ")");
            const auto idx = codomain.index_of(key);
            if (!idx) throw InternalError("differential image leaves the quotient basis");
            m.entries.at(*idx, j) = c;
        }
    };

    const int threads = std::min(assembly_threads(), std::max(domain.dim(), 1));
    if (threads <= 1 || domain.dim() < 64) {
        for (int j = 0; j < domain.dim(); ++j) fill_column(j);
        return m;
    }

    std::vector<std::exception_ptr> errors(domain.dim());
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            for (int j = t; j < domain.dim(); j += threads) {
                try {
                    fill_column(j);
                } catch (...) {
                    errors[j] = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return m;
}

/// [j^1 gamma, key-monomial] projected onto y-degree exactly level+1.
SuperPoly quotient_image(const MultiVec& jet1, int level, int d, const TermKey& key) {
    const SpaceModel& sp = jet1.space();
    SuperPoly mono(sp);
    mono.add_term(key, Scalar(1));
    const MultiVec w(sp, level + 2, d, std::move(mono));
    const MultiVec img = schouten(jet1, w);
    SuperPoly projected(sp);
    for (const auto& [k, v] : img.body().terms()) {
        const int ydeg = y_degree(k, sp);
        if (ydeg < level + 1)
            throw InternalError("differential dropped below the filtration level");
        if (ydeg == level + 1) projected.add_term(k, v);
    }
    return projected;
}

MultiVec first_jet_of(const MultiVec& gamma, int level) {
    if (gamma.degree() != 2) throw InputError("the differential requires a bivector");
    if (!is_tangent(gamma)) throw NotTangent();
    if (level < 0) throw InputError("negative filtration level");
    // Only j^1(gamma) can contribute to the quotient differential; arithmetic
    // runs at jet order level+2 so nothing truncates prematurely.
    return MultiVec(gamma.space(), level + 2, 2, sp_truncate_y(gamma.body(), 1));
}

}  // namespace

QuotientComplex assemble_quotient_complex(const MultiVec& gamma, int level,
                                          const std::array<int, 4>& caps) {
    const MultiVec jet1 = first_jet_of(gamma, level);
    const SpaceModel& sp = gamma.space();

    std::array<CochainBasis, 4> bases{
        CochainBasis(sp, level, 0, caps[0]), CochainBasis(sp, level, 1, caps[1]),
        CochainBasis(sp, level, 2, caps[2]), CochainBasis(sp, level, 3, caps[3])};

    const auto differential = [&](int d) {
        return assemble_matrix(bases[d], bases[d + 1], [&, d](const TermKey& key) {
            return quotient_image(jet1, level, d, key);
        });
    };

    std::array<LinearMapMatrix, 3> ds{differential(0), differential(1), differential(2)};
    return QuotientComplex{level, std::move(bases), std::move(ds)};
}

LinearMapMatrix quotient_differential(const MultiVec& gamma, int level, int degree,
                                      int domain_cap, int codomain_cap) {
    const MultiVec jet1 = first_jet_of(gamma, level);
    const SpaceModel& sp = gamma.space();
    const CochainBasis domain(sp, level, degree, domain_cap);
    const CochainBasis codomain(sp, level, degree + 1, codomain_cap);
    return assemble_matrix(domain, codomain, [&](const TermKey& key) {
        return quotient_image(jet1, level, degree, key);
    });
}

QuotientComplex quotient_complex(const MultiVec& gamma, int level, std::optional<int> x_cap) {
    if (level < 1) throw InputError("quotient_complex requires level >= 1");
    if (gamma.space().p > 0 && !x_cap)
        throw InputError("a finite x-degree cap is required when p > 0");
    const int cap = gamma.space().p > 0 ? *x_cap : 0;
    return assemble_quotient_complex(gamma, level, {cap, cap, cap, cap});
}

QuotientComplex ce_complex(const RestrictedAlgebroid& alg, int k, const std::array<int, 4>& caps) {
    if (k < 1) throw InputError("symmetric power k must be >= 1");
    const SpaceModel& sp = alg.space;
    const int n = sp.dim();
    if (static_cast<int>(alg.anchor.size()) != n ||
        alg.bracket_structure.size() != static_cast<std::size_t>(n) * n * n)
        throw InputError("restricted algebroid has malformed containers");

    const int level = k - 1;
    std::array<CochainBasis, 4> bases{
        CochainBasis(sp, level, 0, caps[0]), CochainBasis(sp, level, 1, caps[1]),
        CochainBasis(sp, level, 2, caps[2]), CochainBasis(sp, level, 3, caps[3])};

    // nabla_a acts on the symbols: nabla_a s_j = sum_{c normal} gamma(a, p+j, c) s_{c-p}.
    const auto xi = [&](int a) {  // 1-based odd generator
        return SuperPoly::monomial(sp, Scalar(1), std::vector<std::int32_t>(n, 0), {a});
    };
    const auto symbol = [&](int j) {  // 1-based s_j = even generator p+j
        std::vector<std::int32_t> even(n, 0);
        even[sp.p + j - 1] = 1;
        return SuperPoly::monomial(sp, Scalar(1), even, {});
    };

    const auto differential = [&](int d) {
        return assemble_matrix(bases[d], bases[d + 1], [&](const TermKey& key) {
            SuperPoly w(sp);
            w.add_term(key, Scalar(1));
            SuperPoly img(sp);
            for (int a = 0; a < n; ++a) {
                SuperPoly action(sp);
                for (int i = 0; i < sp.p; ++i)
                    action = action + sp_mul(alg.anchor[a][i], sp_deriv(w, Deriv::Even, i + 1));
                for (int j = 1; j <= sp.q; ++j) {
                    SuperPoly nabla_s(sp);
                    for (int cc = sp.p; cc < n; ++cc)
                        nabla_s = nabla_s +
                                  sp_mul(alg.gamma(a, sp.p + j - 1, cc), symbol(cc - sp.p + 1));
                    action = action + sp_mul(nabla_s, sp_deriv(w, Deriv::Even, sp.p + j));
                }
                img = img + sp_mul(xi(a + 1), action);
            }
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b) {
                    SuperPoly coeff(sp);
                    for (int cc = 0; cc < n; ++cc)
                        coeff = coeff + sp_mul(alg.gamma(a, b, cc), sp_deriv(w, Deriv::Odd, cc + 1));
                    img = img - sp_mul(sp_mul(xi(a + 1), xi(b + 1)), coeff);
                }
            return img;
        });
    };

    std::array<LinearMapMatrix, 3> ds{differential(0), differential(1), differential(2)};
    return QuotientComplex{level, std::move(bases), std::move(ds)};
}

std::array<int, 3> cohomology_dims(const QuotientComplex& c) {
    const Matrix z1 = c.d[1].entries * c.d[0].entries;
    const Matrix z2 = c.d[2].entries * c.d[1].entries;
    if (!(z1 == Matrix(z1.rows(), z1.cols())) || !(z2 == Matrix(z2.rows(), z2.cols())))
        throw NotAComplex("d^2 != 0 on the assembled quotient complex");

    const int r0 = rank(c.d[0].entries);
    const int r1 = rank(c.d[1].entries);
    const int r2 = rank(c.d[2].entries);
    const int n0 = c.basis[0].dim(), n1 = c.basis[1].dim(), n2 = c.basis[2].dim();
    return {n0 - r0, (n1 - r1) - r0, (n2 - r2) - r1};
}

// ---------------------------------------------------------------------------
// Homotopy pairs
// ---------------------------------------------------------------------------

namespace {

Matrix columns_from(const Matrix& src, const std::vector<int>& cols) {
    Matrix m(src.rows(), static_cast<int>(cols.size()));
    for (int j = 0; j < static_cast<int>(cols.size()); ++j)
        for (int i = 0; i < src.rows(); ++i) m.at(i, j) = src.at(i, cols[j]);
    return m;
}

Matrix hcat(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) m.at(i, a.cols() + j) = b.at(i, j);
    }
    return m;
}

/// Unit-vector extension of a column space to the full space, chosen
/// greedily in basis (graded-lex) order: one row reduction of [base | I].
std::vector<int> greedy_complement(const Matrix& base) {
    const Echelon e = row_reduce(hcat(base, Matrix::identity(base.rows())));
    std::vector<int> picks;
    for (int col : e.pivot_cols)
        if (col >= base.cols()) picks.push_back(col - base.cols());
    return picks;
}

/// Particular solutions Z with [A | C] Z = I (free variables zero); valid
/// whenever the concatenation has full row rank.
Matrix solve_against_identity(const Matrix& aug) {
    const Echelon e = row_reduce(aug);
    if (e.rank() != aug.rows())
        throw InternalError("homotopy synthesis: expected a full-row-rank decomposition");
    Matrix z(aug.cols(), aug.rows());
    for (int i = 0; i < e.rank(); ++i)
        for (int j = 0; j < aug.rows(); ++j) z.at(e.pivot_cols[i], j) = e.transform.at(i, j);
    return z;
}

Matrix rows_from(const Matrix& src, int first, int count) {
    Matrix m(count, src.cols());
    for (int i = 0; i < count; ++i)
        for (int j = 0; j < src.cols(); ++j) m.at(i, j) = src.at(first + i, j);
    return m;
}

}  // namespace

std::variant<HomotopyPair, ObstructionReport> homotopy_pair(const QuotientComplex& c) {
    const Matrix z2 = c.d[2].entries * c.d[1].entries;
    if (!(z2 == Matrix(z2.rows(), z2.cols())))
        throw NotAComplex("d^2 != 0 at the bivector slot");

    const Matrix& dA = c.d[1].entries;  // vector fields -> bivectors
    const Matrix& dB = c.d[2].entries;  // bivectors -> trivectors
    const int n1 = dA.cols(), n2 = dA.rows(), n3 = dB.rows();

    const Echelon eA = row_reduce(dA);
    const Matrix image_basis = columns_from(dA, eA.pivot_cols);
    const int h = (n2 - rank(dB)) - eA.rank();

    if (h != 0) {
        ObstructionReport report{c.level, h, {}, {}};
        // Representatives: kernel vectors of dB that extend im(dA).
        const auto kernel = kernel_basis(dB);
        Matrix kernel_mat(n2, static_cast<int>(kernel.size()));
        for (int j = 0; j < kernel_mat.cols(); ++j)
            for (int i = 0; i < n2; ++i) kernel_mat.at(i, j) = kernel[j][i];
        const Echelon joint = row_reduce(hcat(image_basis, kernel_mat));
        for (int col : joint.pivot_cols)
            if (col >= image_basis.cols()) report.representatives.push_back(kernel[col - image_basis.cols()]);
        return report;
    }

    // V = im(dA) (+) C with C spanned by greedily chosen unit vectors; then
    //   h1 = (section of dA) o (projection onto im(dA)),
    //   h2 = (dB|_C)^{-1} on dB(C), zero on the greedy complement of dB(C).
    const std::vector<int> c_idx = greedy_complement(image_basis);
    Matrix c_mat(n2, static_cast<int>(c_idx.size()));
    for (int j = 0; j < c_mat.cols(); ++j) c_mat.at(c_idx[j], j) = Scalar(1);

    const Matrix z = solve_against_identity(hcat(dA, c_mat));
    HomotopyPair pair{c.level,
                      LinearMapMatrix{c.basis[2], c.basis[1], rows_from(z, 0, n1)},
                      LinearMapMatrix{c.basis[3], c.basis[2], Matrix(n2, n3)},
                      false};

    const Matrix db_c = dB * c_mat;  // injective since ker dB is inside im dA
    const std::vector<int> r_idx = greedy_complement(db_c);
    Matrix r_mat(n3, static_cast<int>(r_idx.size()));
    for (int j = 0; j < r_mat.cols(); ++j) r_mat.at(r_idx[j], j) = Scalar(1);
    const Matrix z2inv = solve_against_identity(hcat(db_c, r_mat));
    pair.h2.entries = c_mat * rows_from(z2inv, 0, c_mat.cols());

    // Exact certificate: dA h1 + h2 dB = Id on bivector cochains.
    pair.certified = (dA * pair.h1.entries + pair.h2.entries * dB == Matrix::identity(n2));
    if (!pair.certified) throw InternalError("homotopy certificate failed to verify");
    return pair;
}

// ---------------------------------------------------------------------------
// tau
// ---------------------------------------------------------------------------

SuperPoly tau_map(int k, const MultiVec& w) {
    if (k < 1) throw InputError("symmetric power k must be >= 1");
    const SpaceModel& sp = w.space();
    SuperPoly r(sp);
    for (const auto& [key, c] : w.body().terms()) {
        const int ydeg = y_degree(key, sp);
        if (ydeg < k)
            throw LevelTooLow("term of y-degree " + std::to_string(ydeg) +
                              " below the requested power " + std::to_string(k));
        if (ydeg == k) r.add_term(key, c);
    }
    return r;
}

}  // namespace mcgauge
