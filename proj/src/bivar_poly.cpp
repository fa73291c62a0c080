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

#include "shiftalg/bivar_poly.hpp"

#include <algorithm>

#include "shiftalg/errors.hpp"

namespace shiftalg {

BivarPoly::BivarPoly(std::vector<std::vector<GaussianRational>> rows) : rows_(std::move(rows)) { trim(); }

void BivarPoly::trim() {
    std::size_t cols = 0;
    for (const auto& r : rows_) cols = std::max(cols, r.size());
    for (auto& r : rows_) r.resize(cols);
    std::size_t last_col = 0;
    bool any = false;
    for (const auto& r : rows_)
        for (std::size_t j = 0; j < r.size(); ++j)
            if (!r[j].is_zero()) {
                any = true;
                last_col = std::max(last_col, j);
            }
    if (!any) {
        rows_.clear();
        return;
    }
    for (auto& r : rows_) r.resize(last_col + 1);
    while (std::all_of(rows_.back().begin(), rows_.back().end(), [](const auto& x) { return x.is_zero(); }))
        rows_.pop_back();
}

BivarPoly BivarPoly::outer(const Poly& in_t, const Poly& in_z) {
    std::vector<std::vector<GaussianRational>> rows(in_t.coeffs().size(),
                                                    std::vector<GaussianRational>(in_z.coeffs().size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < in_z.coeffs().size(); ++j) rows[i][j] = in_t.coeffs()[i] * in_z.coeffs()[j];
    return BivarPoly(std::move(rows));
}

GaussianRational BivarPoly::coeff(std::size_t i, std::size_t j) const {
    if (i >= t_size() || j >= z_size()) return {};
    return rows_[i][j];
}

Poly BivarPoly::t_coeff(std::size_t i) const {
    if (i >= t_size()) return {};
    return Poly(rows_[i]);
}

Poly BivarPoly::at_t(const GaussianRational& value) const {
    std::vector<GaussianRational> acc(z_size());
    for (std::size_t i = t_size(); i-- > 0;)
        for (std::size_t j = 0; j < acc.size(); ++j) acc[j] = acc[j] * value + rows_[i][j];
    return Poly(std::move(acc));
}

Poly BivarPoly::at_z(const GaussianRational& value) const { return swapped().at_t(value); }

Poly BivarPoly::diagonal() const {
    std::vector<GaussianRational> d(t_size() + z_size());
    for (std::size_t i = 0; i < t_size(); ++i)
        for (std::size_t j = 0; j < z_size(); ++j) d[i + j] += rows_[i][j];
    return Poly(std::move(d));
}

BivarPoly BivarPoly::swapped() const {
    std::vector<std::vector<GaussianRational>> r(z_size(), std::vector<GaussianRational>(t_size()));
    for (std::size_t i = 0; i < t_size(); ++i)
        for (std::size_t j = 0; j < z_size(); ++j) r[j][i] = rows_[i][j];
    return BivarPoly(std::move(r));
}

BivarPoly BivarPoly::times_t() const {
    if (is_zero()) return {};
    auto r = rows_;
    r.insert(r.begin(), std::vector<GaussianRational>(z_size()));
    return BivarPoly(std::move(r));
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
    if (rows_.size() < o.rows_.size()) rows_.resize(o.rows_.size());
    std::size_t cols = std::max(z_size(), o.z_size());
    for (auto& r : rows_) r.resize(cols);
    for (std::size_t i = 0; i < o.t_size(); ++i)
        for (std::size_t j = 0; j < o.z_size(); ++j) rows_[i][j] += o.rows_[i][j];
    trim();
    return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
    if (rows_.size() < o.rows_.size()) rows_.resize(o.rows_.size());
    std::size_t cols = std::max(z_size(), o.z_size());
    for (auto& r : rows_) r.resize(cols);
    for (std::size_t i = 0; i < o.t_size(); ++i)
        for (std::size_t j = 0; j < o.z_size(); ++j) rows_[i][j] -= o.rows_[i][j];
    trim();
    return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<std::vector<GaussianRational>> r(a.t_size() + b.t_size() - 1,
                                                 std::vector<GaussianRational>(a.z_size() + b.z_size() - 1));
    for (std::size_t i = 0; i < a.t_size(); ++i)
        for (std::size_t j = 0; j < a.z_size(); ++j) {
            if (a.rows_[i][j].is_zero()) continue;
            for (std::size_t k = 0; k < b.t_size(); ++k)
                for (std::size_t l = 0; l < b.z_size(); ++l) r[i + k][j + l] += a.rows_[i][j] * b.rows_[k][l];
        }
    return BivarPoly(std::move(r));
}

BivarPoly exact_div_t_minus_z(const BivarPoly& num) {
    // Synthetic division in t with coefficients in C[z]: q_{k-1} = c_k + z*q_k,
    // and the remainder c_0 + z*q_0 must vanish.
    const std::size_t n = num.t_size();
    if (n == 0) return {};
    std::vector<Poly> q(n - 1);
    Poly carry;
    for (std::size_t k = n; k-- > 1;) {
        carry = num.t_coeff(k) + carry.shifted_up(1);
        q[k - 1] = carry;
    }
    if (!(num.t_coeff(0) + carry.shifted_up(1)).is_zero()) throw NonzeroRemainder();
    std::size_t cols = 0;
    for (const auto& p : q) cols = std::max(cols, p.coeffs().size());
    std::vector<std::vector<GaussianRational>> rows(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) rows[i] = q[i].padded(cols);
    return BivarPoly(std::move(rows));
}

}  // namespace shiftalg
