// Copyright 2026 The duoc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DUOC_ERRORS_HPP
#define DUOC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace duoc {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not agree (dimension lists, factor counts).
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

/// Coefficients or vectors that should have unit norm do not.
class NormalizationError : public Error {
 public:
  using Error::Error;
};

/// Matrix is not Hermitian, not positive semidefinite, or not unit trace.
class DensityMatrixError : public Error {
 public:
  using Error::Error;
};

/// A state expected to be diagonal in the computational basis is not.
class NotClassicalError : public Error {
 public:
  using Error::Error;
};

/// A vector or operator is not a valid object of the theory.
class ValidityError : public Error {
 public:
  using Error::Error;
};

class NotEntangledError : public Error {
 public:
  using Error::Error;
};

}  // namespace duoc

#endif  // DUOC_ERRORS_HPP
