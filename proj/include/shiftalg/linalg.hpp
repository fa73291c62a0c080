/*
   Copyright 2026 The shiftalg Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SHIFTALG_LINALG_HPP
#define SHIFTALG_LINALG_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "shiftalg/gaussian_rational.hpp"

namespace shiftalg {

using Vector = std::vector<GaussianRational>;

/// Dense row-major matrix of Gaussian rationals.
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static Matrix identity(std::size_t n);
    /// Matrix whose j-th column is columns[j] (all of equal length).
    static Matrix from_columns(std::span<const Vector> columns, std::size_t rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    GaussianRational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const GaussianRational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector column(std::size_t j) const;
    void set_column(std::size_t j, const Vector& v);
    Vector operator*(const Vector& v) const;
    bool is_zero() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<GaussianRational> data_;
};

/// Serial product; see kernels.hpp for the parallel one.
Matrix operator*(const Matrix& a, const Matrix& b);

/// Row echelon form produced by fraction-free (Bareiss) elimination after
/// every row has been scaled to Gaussian-integer entries.
struct Echelon {
    Matrix reduced;                   // upper echelon form of the scaled matrix
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
    int sign = 1;                     // parity of row swaps
    GaussianRational scale = 1;       // product of the row scale factors
};

Echelon echelon(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Basis of {v : m v = 0}; one vector per free column, with a 1 in that
/// column and 0 in the other free columns. Each vector is checked exactly.
std::vector<Vector> nullspace(const Matrix& m);

/// Some x with m x = rhs (free variables set to 0); the residual is verified
/// to be exactly zero. Throws NoSolution.
Vector solve(const Matrix& m, const Vector& rhs);

/// Exact determinant of a square matrix.
GaussianRational determinant(const Matrix& m);

/// True when span(a) == span(b).
bool same_span(std::span<const Vector> a, std::span<const Vector> b);
/// True when v lies in span(basis).
bool in_span(std::span<const Vector> basis, const Vector& v);

}  // namespace shiftalg

#endif
