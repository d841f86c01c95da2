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

#include "graphzeta/poly_matrix.hpp"

#include <utility>

#include "graphzeta/error.hpp"

namespace graphzeta {

namespace {

using IntPoly = std::vector<mpz_class>;

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly multiply(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  trim(out);
  return out;
}

void subtract_in_place(IntPoly& a, const IntPoly& b) {
  if (b.size() > a.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
}

// a / b where b divides a exactly in Z[u].
IntPoly divide_exact(IntPoly a, const IntPoly& b) {
  if (b.size() == 1 && b[0] == 1) return a;
  if (a.empty()) return a;
  if (a.size() < b.size()) throw ComputationError("Bareiss: inexact polynomial division");
  const std::size_t db = b.size() - 1;
  IntPoly q(a.size() - db);
  for (std::size_t k = q.size(); k-- > 0;) {
    mpz_class& lead = a[k + db];
    if (lead == 0) continue;
    if (!mpz_divisible_p(lead.get_mpz_t(), b.back().get_mpz_t())) {
      throw ComputationError("Bareiss: inexact polynomial division");
    }
    mpz_divexact(q[k].get_mpz_t(), lead.get_mpz_t(), b.back().get_mpz_t());
    for (std::size_t i = 0; i <= db; ++i) {
      mpz_submul(a[k + i].get_mpz_t(), q[k].get_mpz_t(), b[i].get_mpz_t());
    }
  }
  for (const auto& r : a) {
    if (r != 0) throw ComputationError("Bareiss: inexact polynomial division");
  }
  trim(q);
  return q;
}

}  // namespace

PolyMatrix PolyMatrix::identity(std::size_t n) {
  PolyMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Poly::constant(1);
  return m;
}

Poly poly_det(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return Poly::constant(1);

  std::vector<IntPoly> a(n * n);
  mpz_class row_scale_product = 1;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class lcm = 1;
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& c : m.at(i, j).coefficients()) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.value().get_den_mpz_t());
      }
    }
    row_scale_product *= lcm;
    for (std::size_t j = 0; j < n; ++j) {
      IntPoly& e = a[i * n + j];
      for (const auto& c : m.at(i, j).coefficients()) {
        e.push_back(c.numerator() * (lcm / c.denominator()));
      }
    }
  }
  auto at = [&](std::size_t r, std::size_t c) -> IntPoly& { return a[r * n + c]; };

  int sign = 1;
  IntPoly prev{mpz_class(1)};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k).empty()) {
      std::size_t r = k + 1;
      while (r < n && at(r, k).empty()) ++r;
      if (r == n) return Poly();
      for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(r, c));
      sign = -sign;
    }
    const IntPoly& pivot = at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const IntPoly& aik = at(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        IntPoly& aij = at(i, j);
        const IntPoly& akj = at(k, j);
        if (aik.empty() || akj.empty()) {
          if (aij.empty()) continue;
          aij = divide_exact(multiply(pivot, aij), prev);
        } else {
          IntPoly t = multiply(pivot, aij);
          subtract_in_place(t, multiply(aik, akj));
          aij = divide_exact(std::move(t), prev);
        }
      }
      at(i, k).clear();
    }
    prev = pivot;
  }

  std::vector<Rational> coeffs;
  const IntPoly& det = at(n - 1, n - 1);
  coeffs.reserve(det.size());
  for (const auto& c : det) coeffs.emplace_back(sign * c, row_scale_product);
  return Poly(std::move(coeffs));
}

}  // namespace graphzeta
