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

#include "shiftalg/jet.hpp"

#include <algorithm>
#include <ostream>

#include "shiftalg/errors.hpp"

namespace shiftalg {

Jet::Jet(GaussianRational center, unsigned order) : center_(std::move(center)), c_(order + 1) {}

Jet::Jet(GaussianRational center, std::vector<GaussianRational> coeffs)
    : center_(std::move(center)), c_(std::move(coeffs)) {
    if (c_.empty()) throw InvalidArgument("jet needs at least one coefficient");
}

GaussianRational Jet::derivative_at_center(unsigned k) const { return factorial(k) * c_.at(k); }

Jet Jet::truncated(unsigned order) const {
    if (order > this->order()) throw OrderTooSmall("cannot raise jet order by truncation");
    return Jet(center_, std::vector<GaussianRational>(c_.begin(), c_.begin() + order + 1));
}

Jet Jet::derivative() const {
    if (order() == 0) throw OrderTooSmall("derivative of an order-0 jet");
    std::vector<GaussianRational> d(c_.size() - 1);
    for (std::size_t n = 0; n < d.size(); ++n) d[n] = c_[n + 1] * GaussianRational(static_cast<long>(n + 1));
    return Jet(center_, std::move(d));
}

bool Jet::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const auto& x) { return x.is_zero(); });
}

Jet operator+(const Jet& a, const Jet& b) {
    if (!(a.center_ == b.center_)) throw CenterMismatch();
    Jet r(a.center_, std::min(a.order(), b.order()));
    for (std::size_t n = 0; n < r.c_.size(); ++n) r.c_[n] = a.c_[n] + b.c_[n];
    return r;
}

Jet operator-(const Jet& a, const Jet& b) {
    if (!(a.center_ == b.center_)) throw CenterMismatch();
    Jet r(a.center_, std::min(a.order(), b.order()));
    for (std::size_t n = 0; n < r.c_.size(); ++n) r.c_[n] = a.c_[n] - b.c_[n];
    return r;
}

Jet operator*(const Jet& a, const Jet& b) {
    if (!(a.center_ == b.center_)) throw CenterMismatch();
    Jet r(a.center_, std::min(a.order(), b.order()));
    for (std::size_t n = 0; n < r.c_.size(); ++n)
        for (std::size_t k = 0; k <= n; ++k) r.c_[n] += a.c_[k] * b.c_[n - k];
    return r;
}

Jet operator*(const GaussianRational& s, Jet a) {
    for (auto& x : a.c_) x *= s;
    return a;
}

std::ostream& operator<<(std::ostream& os, const Jet& j) {
    os << "jet@" << j.center() << "[";
    for (std::size_t n = 0; n < j.coeffs().size(); ++n) os << (n ? ", " : "") << j.coeffs()[n];
    return os << "]";
}

Jet jet_of_poly(const Poly& p, const GaussianRational& center, unsigned order) {
    Poly shifted = p.taylor_shift(center);
    std::vector<GaussianRational> c(order + 1);
    for (std::size_t n = 0; n <= order; ++n) c[n] = shifted.coeff(n);
    return Jet(center, std::move(c));
}

}  // namespace shiftalg
