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

#include "shiftalg/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "shiftalg/errors.hpp"

namespace shiftalg {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_columns(std::span<const Vector> columns, std::size_t rows) {
    Matrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) m.set_column(j, columns[j]);
    return m;
}

Vector Matrix::column(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

void Matrix::set_column(std::size_t j, const Vector& v) {
    if (v.size() != rows_) throw InvalidArgument("column length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Vector Matrix::operator*(const Vector& v) const {
    if (v.size() != cols_) throw InvalidArgument("matrix-vector size mismatch");
    Vector r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!v[j].is_zero()) r[i] += (*this)(i, j) * v[j];
    return r;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const auto& x) { return x.is_zero(); });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw InvalidArgument("matrix product size mismatch");
    Matrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += a(i, k) * b(k, j);
        }
    return r;
}

namespace {

// Multiplier turning every entry of row i into a Gaussian integer.
mpz_class row_denominator_lcm(const Matrix& m, std::size_t i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).re().get_den_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).im().get_den_mpz_t());
    }
    return l;
}

}  // namespace

Echelon echelon(const Matrix& m) {
    Echelon e{m, {}, 1, 1};
    Matrix& a = e.reduced;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        GaussianRational s(mpq_class(row_denominator_lcm(a, i)));
        if (!s.is_one()) {
            for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) *= s;
            e.scale *= s;
        }
    }
    GaussianRational prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c).is_zero()) ++p;
        if (p == a.rows()) continue;
        if (p != r) {
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
            e.sign = -e.sign;
        }
        const GaussianRational pivot = a(r, c);
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            const GaussianRational lead = a(i, c);
            for (std::size_t j = c + 1; j < a.cols(); ++j) a(i, j) = (pivot * a(i, j) - lead * a(r, j)) / prev;
            a(i, c) = 0;
        }
        prev = pivot;
        e.pivots.push_back(c);
        ++r;
    }
    return e;
}

std::size_t rank(const Matrix& m) { return echelon(m).pivots.size(); }

std::vector<Vector> nullspace(const Matrix& m) {
    Echelon e = echelon(m);
    const Matrix& a = e.reduced;
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(m.cols());
        v[f] = 1;
        for (std::size_t r = e.pivots.size(); r-- > 0;) {
            const std::size_t pc = e.pivots[r];
            GaussianRational acc;
            for (std::size_t j = pc + 1; j < m.cols(); ++j)
                if (!v[j].is_zero()) acc += a(r, j) * v[j];
            v[pc] = -acc / a(r, pc);
        }
        Vector residual = m * v;
        if (!std::all_of(residual.begin(), residual.end(), [](const auto& x) { return x.is_zero(); }))
            throw std::logic_error("nullspace vector failed exact verification");
        basis.push_back(std::move(v));
    }
    return basis;
}

Vector solve(const Matrix& m, const Vector& rhs) {
    if (rhs.size() != m.rows()) throw InvalidArgument("right-hand side length mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = rhs[i];
    }
    Echelon e = echelon(aug);
    if (!e.pivots.empty() && e.pivots.back() == m.cols()) throw NoSolution();
    const Matrix& a = e.reduced;
    Vector x(m.cols());
    for (std::size_t r = e.pivots.size(); r-- > 0;) {
        const std::size_t pc = e.pivots[r];
        GaussianRational acc = a(r, m.cols());
        for (std::size_t j = pc + 1; j < m.cols(); ++j)
            if (!x[j].is_zero()) acc -= a(r, j) * x[j];
        x[pc] = acc / a(r, pc);
    }
    if (m * x != rhs) throw NoSolution();
    return x;
}

GaussianRational determinant(const Matrix& m) {
    if (m.rows() != m.cols()) throw InvalidArgument("determinant of a non-square matrix");
    if (m.rows() == 0) return 1;
    Echelon e = echelon(m);
    if (e.pivots.size() < m.rows()) return 0;
    // Bareiss: the last pivot is the determinant of the scaled matrix.
    GaussianRational d = e.reduced(m.rows() - 1, m.cols() - 1) / e.scale;
    return e.sign < 0 ? -d : d;
}

bool in_span(std::span<const Vector> basis, const Vector& v) {
    if (basis.empty()) return std::all_of(v.begin(), v.end(), [](const auto& x) { return x.is_zero(); });
    Matrix m = Matrix::from_columns(basis, v.size());
    try {
        solve(m, v);
        return true;
    } catch (const NoSolution&) {
        return false;
    }
}

bool same_span(std::span<const Vector> a, std::span<const Vector> b) {
    for (const auto& v : b)
        if (!in_span(a, v)) return false;
    for (const auto& v : a)
        if (!in_span(b, v)) return false;
    return true;
}

}  // namespace shiftalg
