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

#ifndef GRAPHZETA_ROOTS_HPP_
#define GRAPHZETA_ROOTS_HPP_

#include <complex>
#include <vector>

#include "graphzeta/poly.hpp"

namespace graphzeta {

struct Root {
  std::complex<double> value;
  int multiplicity = 1;
};

// All complex roots of p, sorted by modulus and then argument. Multiplicities
// come from an exact square-free decomposition; each square-free factor is
// solved by Aberth-Ehrlich iteration in extended precision and polished by
// Newton steps. Throws InvalidArgument for p == 0 or tol <= 0, and
// ComputationError when the iteration does not converge.
std::vector<Root> complex_roots(const Poly& p, double tol = 1e-12);

}  // namespace graphzeta

#endif  // GRAPHZETA_ROOTS_HPP_
