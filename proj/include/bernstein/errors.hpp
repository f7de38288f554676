// Copyright 2026 The Bernstein Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BERNSTEIN_ERRORS_HPP_
#define BERNSTEIN_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace bernstein {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument lies outside the domain of the function.
class DomainError : public Error {
 public:
  using Error::Error;
};

// The result is not representable as a finite double.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// A truncated series did not reach its tolerance within the term budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// Adaptive quadrature could not meet the requested tolerance.
class QuadratureError : public Error {
 public:
  using Error::Error;
};

// The initial-condition branch requested does not match the model.
class ModelMismatch : public Error {
 public:
  using Error::Error;
};

// Invalid simulation scheme settings.
class SchemeError : public Error {
 public:
  using Error::Error;
};

// Malformed configuration (params file, grid spec, CLI option).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace bernstein

#endif  // BERNSTEIN_ERRORS_HPP_
