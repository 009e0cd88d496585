#pragma once

#include <array>
#include <complex>

namespace graphmin::convention {

using Complex = std::complex<double>;
/// Row-major 2x2 matrix {m00, m01, m10, m11}.
using Matrix2 = std::array<Complex, 4>;

inline constexpr double kInvSqrt2 = 0.70710678118654752440;

// The local Clifford that realises local complementation at a:
//
//   |tau_a G> = sqrt(-iX)_a  prod_{b in N(a)} sqrt(iZ)_b  |G>
//
// with sqrt(-iX) = exp(-i pi/4 X) = (I - iX)/sqrt2 and
// sqrt(iZ) = exp(i pi/4 Z) = diag(e^{i pi/4}, e^{-i pi/4}).
//
// Stabilisers of tau_a(G) are the images of those of G under this product;
// verify_lc_unitary checks it numerically, up to global phase.
inline const Matrix2 kSqrtMinusIX = {Complex(kInvSqrt2, 0), Complex(0, -kInvSqrt2), Complex(0, -kInvSqrt2),
                                     Complex(kInvSqrt2, 0)};
inline const Matrix2 kSqrtIZ = {Complex(kInvSqrt2, kInvSqrt2), Complex(0, 0), Complex(0, 0),
                                Complex(kInvSqrt2, -kInvSqrt2)};

inline const Matrix2 kIdentity = {Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(1, 0)};
inline const Matrix2 kPauliX = {Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 0)};
inline const Matrix2 kPauliY = {Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0)};
inline const Matrix2 kPauliZ = {Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(-1, 0)};
inline const Matrix2 kHadamard = {Complex(kInvSqrt2, 0), Complex(kInvSqrt2, 0), Complex(kInvSqrt2, 0),
                                  Complex(-kInvSqrt2, 0)};
inline const Matrix2 kPhaseS = {Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(0, 1)};

}  // namespace graphmin::convention
