#include "mcgauge/linalg.hpp"

#include <stdexcept>

namespace mcgauge {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    a_.assign(static_cast<std::size_t>(rows) * cols, Scalar(0));
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Matrix transpose(const Matrix& m) {
    Matrix t(m.cols(), m.rows());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) t.at(c, r) = m.at(r, c);
    return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
    Matrix r(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j) r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix sum shape mismatch");
    Matrix r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix difference shape mismatch");
    Matrix r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j) - b.at(i, j);
    return r;
}

std::vector<Scalar> operator*(const Matrix& a, const std::vector<Scalar>& v) {
    if (a.cols() != static_cast<int>(v.size()))
        throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<Scalar> r(a.rows(), Scalar(0));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a.at(i, j) != 0) r[i] += a.at(i, j) * v[j];
    return r;
}

Echelon row_reduce(const Matrix& m) {
    Echelon e{m, Matrix::identity(m.rows()), {}};
    Matrix& r = e.rref;
    Matrix& t = e.transform;
    int pivot_row = 0;
    for (int col = 0; col < r.cols() && pivot_row < r.rows(); ++col) {
        int src = -1;
        for (int i = pivot_row; i < r.rows(); ++i)
            if (r.at(i, col) != 0) {
                src = i;
                break;
            }
        if (src < 0) continue;
        if (src != pivot_row) {
            for (int j = 0; j < r.cols(); ++j) std::swap(r.at(src, j), r.at(pivot_row, j));
            for (int j = 0; j < t.cols(); ++j) std::swap(t.at(src, j), t.at(pivot_row, j));
        }
        const Scalar inv = Scalar(1) / r.at(pivot_row, col);
        for (int j = 0; j < r.cols(); ++j) r.at(pivot_row, j) *= inv;
        for (int j = 0; j < t.cols(); ++j) t.at(pivot_row, j) *= inv;
        for (int i = 0; i < r.rows(); ++i) {
            if (i == pivot_row || r.at(i, col) == 0) continue;
            const Scalar f = r.at(i, col);
            for (int j = 0; j < r.cols(); ++j) r.at(i, j) -= f * r.at(pivot_row, j);
            for (int j = 0; j < t.cols(); ++j) t.at(i, j) -= f * t.at(pivot_row, j);
        }
        e.pivot_cols.push_back(col);
        ++pivot_row;
    }
    return e;
}

int rank(const Matrix& m) { return row_reduce(m).rank(); }

std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m) {
    const Echelon e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : e.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Scalar>> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(m.cols(), Scalar(0));
        v[free] = Scalar(1);
        for (int i = 0; i < e.rank(); ++i) v[e.pivot_cols[i]] = -e.rref.at(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

LinearSolveResult solve_with_certificate(const Matrix& a, const std::vector<Scalar>& b) {
    if (a.rows() != static_cast<int>(b.size()))
        throw std::invalid_argument("right-hand side length mismatch");
    const Echelon e = row_reduce(a);
    const std::vector<Scalar> tb = e.transform * b;

    // T A = R: a zero row of R with (T b)_i != 0 certifies infeasibility.
    for (int i = e.rank(); i < a.rows(); ++i) {
        if (tb[i] == 0) continue;
        std::vector<Scalar> phi(a.rows());
        for (int j = 0; j < a.rows(); ++j) phi[j] = e.transform.at(i, j);
        return {std::nullopt, std::move(phi)};
    }

    std::vector<Scalar> x(a.cols(), Scalar(0));
    for (int i = 0; i < e.rank(); ++i) x[e.pivot_cols[i]] = tb[i];
    return {std::move(x), std::nullopt};
}

}  // namespace mcgauge
