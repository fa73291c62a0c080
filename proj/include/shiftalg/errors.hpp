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

#ifndef SHIFTALG_ERRORS_HPP
#define SHIFTALG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace shiftalg {

/// Base class of every error raised by the library.
class MathError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

// exact-core
class NonzeroRemainder : public MathError {
   public:
    NonzeroRemainder() : MathError("division left a nonzero remainder") {}
};
class ZeroRoot : public MathError {
   public:
    ZeroRoot() : MathError("factored polynomial has a root at 0; normalization p(0)=1 impossible") {}
};
class CenterMismatch : public MathError {
   public:
    CenterMismatch() : MathError("jets have different centers") {}
};
class NonzeroCenterForExpPoly : public MathError {
   public:
    NonzeroCenterForExpPoly() : MathError("exponential polynomials have exact jets only at center 0") {}
};
class NoSolution : public MathError {
   public:
    NoSolution() : MathError("linear system has no exact solution") {}
};
class OrderTooSmall : public MathError {
   public:
    explicit OrderTooSmall(const std::string& what) : MathError("order too small: " + what) {}
};

// functionals / commutant
class ConstantPolynomial : public MathError {
   public:
    ConstantPolynomial() : MathError("canonical functional needs a nonconstant polynomial") {}
};
class ReconstructionInconsistent : public MathError {
   public:
    explicit ReconstructionInconsistent(unsigned bound)
        : MathError("convolution reconstruction inconsistent up to derivative order " + std::to_string(bound)),
          bound_(bound) {}
    unsigned bound() const noexcept { return bound_; }

   private:
    unsigned bound_;
};
class CriterionFailed : public MathError {
   public:
    CriterionFailed() : MathError("phi(g0) = 0; inversion criterion fails") {}
};
class RestrictedMatrixSingular : public MathError {
   public:
    RestrictedMatrixSingular() : MathError("restriction to the invariant subspace is singular") {}
};
class ZeroFunctional : public MathError {
   public:
    ZeroFunctional() : MathError("functional is zero") {}
};
class InvalidArgument : public MathError {
   public:
    using MathError::MathError;
};

// parsing
class SyntaxError : public MathError {
   public:
    SyntaxError(const std::string& msg, std::size_t offset)
        : MathError("syntax error at offset " + std::to_string(offset) + ": " + msg), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

   private:
    std::size_t offset_;
};

}  // namespace shiftalg

#endif
