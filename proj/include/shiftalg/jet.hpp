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

#ifndef SHIFTALG_JET_HPP
#define SHIFTALG_JET_HPP

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "shiftalg/gaussian_rational.hpp"
#include "shiftalg/poly.hpp"

namespace shiftalg {

/// Truncated Taylor expansion sum_{n<=order} coeffs[n] (z - center)^n.
/// Every operation documents the order of its result: the highest index whose
/// coefficient is still exact given the orders of the inputs.
class Jet {
   public:
    /// Zero jet of the given order.
    Jet(GaussianRational center, unsigned order);
    /// coeffs.size() fixes the order (size - 1); throws InvalidArgument when empty.
    Jet(GaussianRational center, std::vector<GaussianRational> coeffs);

    const GaussianRational& center() const noexcept { return center_; }
    unsigned order() const noexcept { return static_cast<unsigned>(c_.size() - 1); }
    const std::vector<GaussianRational>& coeffs() const noexcept { return c_; }
    const GaussianRational& operator[](std::size_t n) const { return c_.at(n); }
    /// Value of the k-th derivative at the center, k! * coeffs[k].
    GaussianRational derivative_at_center(unsigned k) const;

    /// Same center, lower order.
    Jet truncated(unsigned order) const;
    /// Order drops by one; throws OrderTooSmall at order 0.
    Jet derivative() const;
    bool is_zero() const;

    // Sum, difference and product have order min(order a, order b);
    // mismatched centers throw CenterMismatch.
    friend Jet operator+(const Jet& a, const Jet& b);
    friend Jet operator-(const Jet& a, const Jet& b);
    friend Jet operator*(const Jet& a, const Jet& b);
    friend Jet operator*(const GaussianRational& s, Jet a);

    friend bool operator==(const Jet&, const Jet&) = default;

   private:
    GaussianRational center_;
    std::vector<GaussianRational> c_;
};

std::ostream& operator<<(std::ostream& os, const Jet& j);

/// Taylor jet of a polynomial at `center`; exact for every order.
Jet jet_of_poly(const Poly& p, const GaussianRational& center, unsigned order);

/// Free-function spelling of the product, order min(order a, order b).
inline Jet jet_mul(const Jet& a, const Jet& b) { return a * b; }

}  // namespace shiftalg

#endif
