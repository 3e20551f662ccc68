// Copyright 2026 The hsnp Authors
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

#ifndef HSNP_ERRORS_HPP
#define HSNP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hsnp {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-domain user input (composite p, bad residue, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

class DegenerateInputError : public InputError {
 public:
  using InputError::InputError;
};

class InvalidResidueError : public InputError {
 public:
  using InputError::InputError;
};

class DivisibilityError : public InputError {
 public:
  using InputError::InputError;
};

class OutOfRangeError : public InputError {
 public:
  using InputError::InputError;
};

class DomainError : public InputError {
 public:
  using InputError::InputError;
};

/// Summation convention does not match the pole structure of the polynomial.
class ConventionError : public InputError {
 public:
  using InputError::InputError;
};

/// A rational coefficient has a denominator divisible by p.
class ReductionError : public InputError {
 public:
  using InputError::InputError;
};

/// Polygons with different total horizontal length cannot be ordered.
class IncomparableError : public Error {
 public:
  using Error::Error;
};

/// A field or enumeration would exceed the configured element cap.
class SizeCapError : public Error {
 public:
  using Error::Error;
};

/// Reconstructed L-polynomial is not integral or has the wrong degree.
class DegreeMismatchError : public Error {
 public:
  using Error::Error;
};

/// p-adic model ran out of precision on a nonzero input.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// Two independent computations that must agree did not.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace hsnp

#endif  // HSNP_ERRORS_HPP
