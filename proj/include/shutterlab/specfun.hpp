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

#pragma once

#include <complex>

namespace shutterlab {

/// Complex value of a wavefunction or special function.
using Complex = std::complex<double>;

namespace specfun {

/// Faddeyeva function w(z) = exp(-z^2) erfc(-iz).
///
/// The upper half-plane is evaluated with the three-region scheme of
/// Poppe & Wijers: a Taylor series of erf about the origin, a Gautschi
/// accelerated Laplace continued fraction in the intermediate region and the
/// plain continued fraction far out. Attained relative error is below 1e-13
/// for Im z >= 0 on the test grids. The lower half-plane uses
/// w(z) = 2 exp(-z^2) - w(-z); there the error is bounded by roughly
/// |z|^2 * 1e-16 * |2 exp(-z^2)| / |w(z)|, which stays below 1e-12 on
/// [-6, 6]^2.
///
/// Throws RangeError when exp(-z^2) overflows double precision
/// (Im z < 0 and Im(z)^2 - Re(z)^2 > ~708), or when |z| is too large for
/// the trigonometric factor to carry any significant digits.
Complex faddeyeva_w(Complex z);

/// Scaled complementary error function exp(y^2) erfc(y) = w(iy).
/// Bit-identical to faddeyeva_w(Complex(0, 1) * y).
Complex erfc_scaled(Complex y);

}  // namespace specfun
}  // namespace shutterlab
