// Copyright 2026 The shutterlab Authors. All rights reserved.
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

#include "shutterlab/specfun.hpp"

#include <cmath>
#include <string>

#include "shutterlab/errors.hpp"

namespace shutterlab::specfun {
namespace {

constexpr double kTwoOverSqrtPi = 1.12837916709551257390;
// log(DBL_MAX / 2): largest exponent for which 2 exp(q) is finite.
constexpr double kMaxExpArg = 708.503061461606;
// Beyond this the argument of cos/sin has no fractional digits left.
constexpr double kMaxTrigArg = 3.53711887601422e15;
constexpr double kMaxAbsComponent = 0.5e154;

struct UpperResult {
  Complex w;            // w(|x| + i|y|)
  Complex exp_neg_sq;   // exp(-(|x| + i|y|)^2), only set by the series branch
  bool has_exp_neg_sq;
};

// w(z) for z = xa + i ya in the first quadrant (xa, ya >= 0).
UpperResult faddeyeva_first_quadrant(double xa, double ya) {
  const double xs = xa / 6.3;
  const double ys = ya / 4.4;
  double rho2 = xs * xs + ys * ys;
  const double re_sq = xa * xa - ya * ya;  // Re(z^2)
  const double im_sq = 2.0 * xa * ya;      // Im(z^2)

  if (rho2 < 0.085264) {
    // w(z) = exp(-z^2) (1 - erf(-iz)); erf via its Taylor series in z^2,
    // evaluated by Horner's rule from the tail.
    const double rho = (1.0 - 0.85 * ys) * std::sqrt(rho2);
    const int n = static_cast<int>(std::lround(6.0 + 72.0 * rho));
    int j = 2 * n + 1;
    double sx = 1.0 / j;
    double sy = 0.0;
    for (int i = n; i >= 1; --i) {
      j -= 2;
      const double tx = (sx * re_sq - sy * im_sq) / i;
      sy = (sx * im_sq + sy * re_sq) / i;
      sx = tx + 1.0 / j;
    }
    const double u1 = 1.0 - kTwoOverSqrtPi * (sx * ya + sy * xa);
    const double v1 = kTwoOverSqrtPi * (sx * xa - sy * ya);
    const double mag = std::exp(-re_sq);
    const Complex e(mag * std::cos(im_sq), -mag * std::sin(im_sq));
    return {Complex(u1, v1) * e, e, true};
  }

  // Laplace continued fraction; inside the unit ellipse it is combined with
  // Gautschi's truncated Taylor sum with step h to accelerate convergence.
  double h = 0.0;
  int kapn = 0;
  int nu = 0;
  if (rho2 > 1.0) {
    const double rho = std::sqrt(rho2);
    nu = static_cast<int>(3.0 + 1442.0 / (26.0 * rho + 77.0));
  } else {
    const double rho = (1.0 - ys) * std::sqrt(1.0 - rho2);
    h = 1.88 * rho;
    kapn = static_cast<int>(std::lround(7.0 + 34.0 * rho));
    nu = static_cast<int>(std::lround(16.0 + 26.0 * rho));
  }
  const bool accelerated = h > 0.0;
  const double h2 = 2.0 * h;
  double lambda = accelerated ? std::pow(h2, kapn) : 0.0;

  double rx = 0.0, ry = 0.0, sx = 0.0, sy = 0.0;
  for (int n = nu; n >= 0; --n) {
    const double np1 = n + 1;
    double tx = ya + h + np1 * rx;
    const double ty = xa - np1 * ry;
    const double c = 0.5 / (tx * tx + ty * ty);
    rx = c * tx;
    ry = c * ty;
    if (accelerated && n <= kapn) {
      tx = lambda + sx;
      sx = rx * tx - ry * sy;
      sy = ry * tx + rx * sy;
      lambda /= h2;
    }
  }
  double u = kTwoOverSqrtPi * (accelerated ? sx : rx);
  const double v = kTwoOverSqrtPi * (accelerated ? sy : ry);
  if (ya == 0.0) u = std::exp(-xa * xa);
  return {Complex(u, v), Complex(), false};
}

}  // namespace

Complex faddeyeva_w(Complex z) {
  const double x = z.real();
  const double y = z.imag();
  if (!std::isfinite(x) || !std::isfinite(y)) {
    throw DomainError("faddeyeva_w: non-finite argument");
  }
  const double xa = std::abs(x);
  const double ya = std::abs(y);
  if (xa > kMaxAbsComponent || ya > kMaxAbsComponent) {
    throw RangeError("faddeyeva_w: |z| exceeds the representable range");
  }

  const UpperResult upper = faddeyeva_first_quadrant(xa, ya);
  double u = upper.w.real();
  double v = upper.w.imag();

  if (y < 0.0) {
    // w(z) = 2 exp(-z^2) - w(-z), evaluated at |x| + i|y| and conjugated
    // back into the fourth quadrant when x > 0.
    Complex twice_exp;
    if (upper.has_exp_neg_sq) {
      twice_exp = 2.0 * upper.exp_neg_sq;
    } else {
      const double q = ya * ya - xa * xa;
      const double phase = 2.0 * xa * ya;
      if (q > kMaxExpArg || phase > kMaxTrigArg) {
        throw RangeError("faddeyeva_w: exp(-z^2) overflows at z = (" +
                         std::to_string(x) + ", " + std::to_string(y) + ")");
      }
      const double mag = 2.0 * std::exp(q);
      twice_exp = Complex(mag * std::cos(phase), -mag * std::sin(phase));
    }
    u = twice_exp.real() - u;
    v = twice_exp.imag() - v;
    if (x > 0.0) v = -v;
  } else if (x < 0.0) {
    v = -v;
  }
  return {u, v};
}

Complex erfc_scaled(Complex y) {
  // i * y written out; matches std::complex multiplication by (0, 1).
  return faddeyeva_w(Complex(0.0, 1.0) * y);
}

}  // namespace shutterlab::specfun
