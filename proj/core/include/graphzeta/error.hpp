// Copyright 2026 The graphzeta Authors
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

#ifndef GRAPHZETA_ERROR_HPP_
#define GRAPHZETA_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace graphzeta {

// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an argument was violated (bad parameters, zero divisor).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Malformed textual input (graph JSON, rational literals).
class ParseError : public Error {
 public:
  using Error::Error;
};

// A graph failed structural validation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A numerical or exact computation could not complete.
class ComputationError : public Error {
 public:
  using Error::Error;
};

// An enumeration exceeded its configured work budget.
class BudgetExceeded : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

}  // namespace graphzeta

#endif  // GRAPHZETA_ERROR_HPP_
