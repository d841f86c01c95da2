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

#ifndef GRAPHZETA_POLY_MATRIX_HPP_
#define GRAPHZETA_POLY_MATRIX_HPP_

#include <cstddef>
#include <vector>

#include "graphzeta/poly.hpp"

namespace graphzeta {

// Square matrix of polynomials, stored row-major.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  explicit PolyMatrix(std::size_t n) : n_(n), entries_(n * n) {}
  static PolyMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  Poly& at(std::size_t row, std::size_t col) { return entries_.at(row * n_ + col); }
  const Poly& at(std::size_t row, std::size_t col) const { return entries_.at(row * n_ + col); }

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Poly> entries_;
};

// Exact determinant. Each row is scaled by the lcm of its coefficient
// denominators, the integer-polynomial matrix is reduced with Bareiss
// fraction-free elimination, and the row scalars are divided back out.
Poly poly_det(const PolyMatrix& m);

}  // namespace graphzeta

#endif  // GRAPHZETA_POLY_MATRIX_HPP_
