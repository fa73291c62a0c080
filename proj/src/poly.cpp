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

#include "shiftalg/poly.hpp"

#include <algorithm>
#include <ostream>

#include "shiftalg/errors.hpp"

namespace shiftalg {

Poly::Poly(GaussianRational constant) {
    if (!constant.is_zero()) c_.push_back(std::move(constant));
}

Poly::Poly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::monomial(std::size_t power, GaussianRational coeff) {
    std::vector<GaussianRational> c(power + 1);
    c[power] = std::move(coeff);
    return Poly(std::move(c));
}

GaussianRational Poly::operator()(const GaussianRational& x) const {
    GaussianRational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Poly Poly::derivative(unsigned k) const {
    if (c_.size() <= k) return {};
    std::vector<GaussianRational> d(c_.size() - k);
    for (std::size_t n = k; n < c_.size(); ++n)
        d[n - k] = c_[n] * falling_factorial(static_cast<unsigned>(n), k);
    return Poly(std::move(d));
}

Poly Poly::taylor_shift(const GaussianRational& center) const {
    // Horner in the shifted variable: p(c + w) = (...(a_n (c+w) + a_{n-1})(c+w) ...).
    std::vector<GaussianRational> r(c_.size());
    for (std::size_t step = c_.size(); step-- > 0;) {
        for (std::size_t j = c_.size() - 1; j > 0; --j) r[j] = r[j] * center + r[j - 1];
        r[0] = r[0] * center + c_[step];
    }
    return Poly(std::move(r));
}

Poly Poly::shifted_up(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<GaussianRational> r(k);
    r.insert(r.end(), c_.begin(), c_.end());
    return Poly(std::move(r));
}

Poly& Poly::operator+=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator*=(const GaussianRational& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<GaussianRational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Poly Poly::pow(unsigned n) const {
    Poly r(1);
    for (unsigned k = 0; k < n; ++k) r = r * *this;
    return r;
}

std::vector<GaussianRational> Poly::padded(std::size_t len) const {
    if (c_.size() > len) throw InvalidArgument("polynomial degree exceeds target dimension");
    std::vector<GaussianRational> r = c_;
    r.resize(len);
    return r;
}

namespace {

std::string monomial_text(std::size_t k) {
    if (k == 0) return "";
    if (k == 1) return "z";
    return "z^" + std::to_string(k);
}

}  // namespace

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        const GaussianRational& a = c_[k];
        if (a.is_zero()) continue;
        std::string mono = monomial_text(k);
        if (a.is_real()) {
            bool neg = sgn(a.re()) < 0;
            mpq_class mag = abs(a.re());
            std::string body;
            if (mono.empty())
                body = mag.get_str();
            else if (mag == 1)
                body = mono;
            else
                body = mag.get_str() + "*" + mono;
            if (first)
                out += (neg ? "-" : "") + body;
            else
                out += (neg ? " - " : " + ") + body;
        } else {
            std::string body = "(" + a.str() + ")" + (mono.empty() ? "" : "*" + mono);
            out += (first ? "" : " + ") + body;
        }
        first = false;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

DivMod divmod(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::domain_error("polynomial division by zero");
    if (num.degree() < den.degree()) return {Poly(), num};
    std::vector<GaussianRational> rem = num.coeffs();
    const auto& d = den.coeffs();
    const std::size_t dn = d.size() - 1;
    std::vector<GaussianRational> q(rem.size() - dn);
    for (std::size_t k = q.size(); k-- > 0;) {
        GaussianRational lead = rem[k + dn] / d[dn];
        q[k] = lead;
        if (lead.is_zero()) continue;
        for (std::size_t j = 0; j <= dn; ++j) rem[k + j] -= lead * d[j];
    }
    rem.resize(dn);
    return {Poly(std::move(q)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& num, const GaussianRational& root) {
    // Synthetic division by (z - root).
    const auto& c = num.coeffs();
    if (c.empty()) return {};
    std::vector<GaussianRational> q(c.size() - 1);
    GaussianRational carry;
    for (std::size_t k = c.size(); k-- > 1;) {
        carry = c[k] + carry * root;
        q[k - 1] = carry;
    }
    if (!(c[0] + carry * root).is_zero()) throw NonzeroRemainder();
    return Poly(std::move(q));
}

Poly exact_div(const Poly& num, const Poly& den) {
    DivMod qr = divmod(num, den);
    if (!qr.remainder.is_zero()) throw NonzeroRemainder();
    return qr.quotient;
}

}  // namespace shiftalg
