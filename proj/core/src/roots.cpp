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

#include "graphzeta/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "graphzeta/error.hpp"

namespace graphzeta {

namespace {

using Complex = std::complex<long double>;

constexpr int kMaxIterations = 2000;

struct Horner {
  Complex value;
  Complex derivative;
};

Horner horner(const std::vector<long double>& a, Complex z) {
  Complex v = 0;
  Complex d = 0;
  for (std::size_t i = a.size(); i-- > 0;) {
    d = d * z + v;
    v = v * z + a[i];
  }
  return {v, d};
}

// Bound on the rounding error of evaluating a at z, used for the residual test.
long double evaluation_bound(const std::vector<long double>& a, Complex z) {
  long double r = std::abs(z);
  long double s = 0;
  for (std::size_t i = a.size(); i-- > 0;) s = s * r + std::abs(a[i]);
  return s;
}

std::vector<Complex> aberth(const std::vector<long double>& a, double tol) {
  const std::size_t n = a.size() - 1;
  if (n == 1) return {Complex(-a[0] / a[1], 0)};

  // Cauchy bound: every root has modulus below 1 + max |a_i / a_n|.
  long double bound = 0;
  for (std::size_t i = 0; i < n; ++i) bound = std::max(bound, std::abs(a[i] / a[n]));
  // Lower bound from the reversed polynomial keeps the circle inside the roots' annulus.
  long double lower = 0;
  if (a[0] != 0) {
    for (std::size_t i = 1; i <= n; ++i) lower = std::max(lower, std::abs(a[i] / a[0]));
    lower = 1 / (1 + lower);
  }
  const long double radius = std::sqrt((1 + bound) * std::max(lower, 1e-6L));

  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const long double theta = 2 * std::numbers::pi_v<long double> * (k + 0.25L) / n + 0.4L;
    z[k] = std::polar(radius, theta);
  }

  const long double eps = std::numeric_limits<long double>::epsilon();
  std::vector<bool> done(n, false);
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    bool all_done = true;
    for (std::size_t k = 0; k < n; ++k) {
      if (done[k]) continue;
      const Horner h = horner(a, z[k]);
      if (std::abs(h.value) <= 4 * eps * evaluation_bound(a, z[k])) {
        done[k] = true;
        continue;
      }
      Complex repulsion = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != k) repulsion += Complex(1) / (z[k] - z[j]);
      }
      const Complex ratio = h.value / h.derivative;
      const Complex step = ratio / (Complex(1) - ratio * repulsion);
      z[k] -= step;
      if (std::abs(step) <= 8 * eps * std::max<long double>(1, std::abs(z[k]))) {
        done[k] = true;
      } else {
        all_done = false;
      }
    }
    if (all_done) break;
    if (iter + 1 == kMaxIterations) {
      throw ComputationError("root finding did not converge after " + std::to_string(kMaxIterations) +
                             " iterations");
    }
  }

  for (auto& root : z) {
    for (int polish = 0; polish < 3; ++polish) {
      const Horner h = horner(a, root);
      if (h.derivative == Complex(0)) break;
      root -= h.value / h.derivative;
    }
    const Horner h = horner(a, root);
    const long double allowed =
        std::max<long double>(tol, 1e3L * eps) * std::max<long double>(1, std::abs(h.derivative)) +
        64 * eps * evaluation_bound(a, root);
    if (std::abs(h.value) > allowed) {
      throw ComputationError("root residual above tolerance at " + std::to_string(static_cast<double>(root.real())) +
                             (root.imag() < 0 ? "" : "+") + std::to_string(static_cast<double>(root.imag())) + "i");
    }
  }
  return z;
}

}  // namespace

std::vector<Root> complex_roots(const Poly& p, double tol) {
  if (p.is_zero()) throw InvalidArgument("the zero polynomial has no finite root set");
  if (!(tol > 0)) throw InvalidArgument("root tolerance must be positive");

  std::vector<Root> roots;
  for (const auto& [factor, multiplicity] : squarefree_decomposition(p)) {
    if (factor.degree() < 1) continue;
    std::vector<long double> a;
    a.reserve(factor.coefficients().size());
    for (const auto& c : factor.coefficients()) a.push_back(c.to_long_double());
    for (const Complex& z : aberth(a, tol)) {
      long double re = z.real();
      long double im = z.imag();
      // Exact real-coefficient input: snap residual imaginary noise.
      if (std::abs(im) <= tol * std::max<long double>(1, std::abs(z))) im = 0;
      if (re == 0) re = 0;
      roots.push_back({std::complex<double>(static_cast<double>(re), static_cast<double>(im)), multiplicity});
    }
  }

  std::sort(roots.begin(), roots.end(), [](const Root& x, const Root& y) {
    const double mx = std::abs(x.value);
    const double my = std::abs(y.value);
    if (mx != my) return mx < my;
    return std::arg(x.value) < std::arg(y.value);
  });
  return roots;
}

}  // namespace graphzeta
