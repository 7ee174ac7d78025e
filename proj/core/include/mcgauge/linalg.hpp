/// @file linalg.hpp
/// Dense exact-rational linear algebra: row reduction with a recorded
/// transform, rank, kernel bases, and linear solves that return either a
/// solution or a machine-checkable infeasibility certificate. Everything is
/// exact; there is no pivoting heuristic beyond "first nonzero entry".

#pragma once

#include <optional>
#include <vector>

#include "mcgauge/scalar.hpp"

namespace mcgauge {

/// Row-major dense matrix of exact rationals. Zero-row / zero-column shapes
/// are legal and behave as the corresponding empty linear maps.
class Matrix {
public:
    Matrix(int rows, int cols);

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Scalar& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

    bool operator==(const Matrix& other) const = default;

private:
    int rows_;
    int cols_;
    std::vector<Scalar> a_;
};

Matrix transpose(const Matrix& m);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
std::vector<Scalar> operator*(const Matrix& a, const std::vector<Scalar>& v);

/// Reduced row echelon form R of the input A together with the invertible
/// transform T satisfying T A = R (Gauss-Jordan on [A | I]).
struct Echelon {
    Matrix rref;
    Matrix transform;
    std::vector<int> pivot_cols;

    int rank() const { return static_cast<int>(pivot_cols.size()); }
};

Echelon row_reduce(const Matrix& m);

int rank(const Matrix& m);

/// Basis of { x : A x = 0 } (standard free-variable construction; one vector
/// per non-pivot column, unit at the free column).
std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m);

/// Outcome of solving A x = b: exactly one of `solution` (A solution with all
/// free variables set to zero) or `certificate` (a row functional phi with
/// phi A = 0 and phi . b != 0, which proves infeasibility) is present.
struct LinearSolveResult {
    std::optional<std::vector<Scalar>> solution;
    std::optional<std::vector<Scalar>> certificate;
};

LinearSolveResult solve_with_certificate(const Matrix& a, const std::vector<Scalar>& b);

}  // namespace mcgauge
