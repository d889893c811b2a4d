#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>

#include "octo/octonion.hpp"

namespace octo {

/// A purely imaginary octonion of norm one; squares to -1.
class ImaginaryUnit {
 public:
  static constexpr double kTolerance = 1e-12;

  /// e1, the convention used for points on the real axis.
  ImaginaryUnit() : value_(Octonion::unit(1)) {}

  /// Validates Re(v) = 0 and |v| = 1 within kTolerance.
  static ImaginaryUnit from(const Octonion& v) {
    if (std::abs(v.real()) > kTolerance || std::abs(norm(v) - 1.0) > kTolerance)
      throw std::invalid_argument("not an imaginary unit");
    return ImaginaryUnit(v);
  }

  /// Drops the real part and rescales. Throws if the imaginary part vanishes.
  static ImaginaryUnit normalized(const Octonion& v) {
    const Octonion im = v.imag();
    const double n = norm(im);
    if (!(n > 0.0)) throw std::invalid_argument("cannot normalize a real octonion to an imaginary unit");
    return ImaginaryUnit(im / n);
  }

  static ImaginaryUnit basis(std::size_t i) {
    if (i < 1 || i > 7) throw std::out_of_range("imaginary basis index must be in 1..7");
    return ImaginaryUnit(Octonion::unit(i));
  }

  const Octonion& value() const { return value_; }
  operator const Octonion&() const { return value_; }  // NOLINT

  ImaginaryUnit operator-() const { return ImaginaryUnit(-value_); }

 private:
  explicit ImaginaryUnit(const Octonion& v) : value_(v) {}
  Octonion value_;
};

/// Uniformly random unit on the sphere of imaginary units.
template <class Rng>
ImaginaryUnit random_imaginary_unit(Rng& rng) {
  std::normal_distribution<double> gauss;
  while (true) {
    Octonion v;
    for (std::size_t i = 1; i < 8; ++i) v[i] = gauss(rng);
    if (norm(v) > 1e-8) return ImaginaryUnit::normalized(v);
  }
}

/// x = u + axis * v with v >= 0.
struct SlicePoint {
  double u = 0;
  double v = 0;
  ImaginaryUnit axis;

  Octonion compose() const { return Octonion(u) + axis.value() * v; }
};

/// u = Re(x), v = |Im(x)|, axis = Im(x)/|Im(x)|; real points get axis e1 and v = 0.
inline SlicePoint decompose(const Octonion& x) {
  const Octonion im = x.imag();
  const double v = norm(im);
  if (!(v > 0.0)) return SlicePoint{x.real(), 0.0, ImaginaryUnit()};
  return SlicePoint{x.real(), v, ImaginaryUnit::normalized(im)};
}

/// The point u + J v of the sphere [x].
inline Octonion orbit_sample(const Octonion& x, const ImaginaryUnit& j) {
  const SlicePoint p = decompose(x);
  return Octonion(p.u) + j.value() * p.v;
}

/// Value at u + I v of a slice monogenic f, from f_plus = f(u + vJ) and
/// f_minus = f(u - vJ):  1/2 (f+ + f-) + 1/2 I (J (f- - f+)).
inline Octonion representation_formula(const Octonion& f_plus, const Octonion& f_minus, const ImaginaryUnit& i,
                                       const ImaginaryUnit& j) {
  return 0.5 * (f_plus + f_minus) + 0.5 * (i.value() * (j.value() * (f_minus - f_plus)));
}

/// Reconstructs f(x) for any x from a slice evaluator on C_J.
template <class F>
Octonion reconstruct_from_slice(F&& on_slice, const Octonion& x, const ImaginaryUnit& j) {
  const SlicePoint p = decompose(x);
  const Octonion plus = Octonion(p.u) + j.value() * p.v;
  const Octonion minus = Octonion(p.u) - j.value() * p.v;
  return representation_formula(on_slice(plus), on_slice(minus), p.axis, j);
}

/// Orthonormal frame {1, I1, I2, I1I2, I4, I1I4, I2I4, (I1I2)I4} adapted to C_I1.
struct SplittingFrame {
  ImaginaryUnit i1, i2, i4;
  std::array<Octonion, 8> basis;
};

namespace detail {

inline SplittingFrame assemble_frame(const ImaginaryUnit& i1, const ImaginaryUnit& i2, const ImaginaryUnit& i4) {
  const Octonion& a = i1.value();
  const Octonion& b = i2.value();
  const Octonion& c = i4.value();
  return SplittingFrame{i1, i2, i4, {Octonion(1.0), a, b, a * b, c, a * c, b * c, (a * b) * c}};
}

// Gram-Schmidt of v against an orthonormal set.
template <std::size_t N>
Octonion orthogonalize(Octonion v, const std::array<Octonion, N>& span) {
  for (int pass = 0; pass < 2; ++pass)
    for (const Octonion& s : span) v -= euclid_inner(v, s) * s;
  return v;
}

}  // namespace detail

/// Frame from explicitly chosen units. Throws unless I2 is orthogonal to {1, I1}
/// and I4 to {1, I1, I2, I1I2}.
inline SplittingFrame splitting_frame(const ImaginaryUnit& i1, const ImaginaryUnit& i2, const ImaginaryUnit& i4) {
  const Octonion& a = i1.value();
  const Octonion& b = i2.value();
  const Octonion& c = i4.value();
  constexpr double tol = 1e-12;
  if (std::abs(euclid_inner(a, b)) > tol || std::abs(euclid_inner(c, a)) > tol ||
      std::abs(euclid_inner(c, b)) > tol || std::abs(euclid_inner(c, a * b)) > tol)
    throw std::invalid_argument("splitting frame units are not orthogonal");
  return detail::assemble_frame(i1, i2, i4);
}

/// Deterministic (per seed) frame: I2 and I4 are seeded random directions
/// projected off the span built so far.
inline SplittingFrame splitting_frame(const ImaginaryUnit& i1, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  auto draw = [&](const auto& span) {
    while (true) {
      Octonion v;
      for (std::size_t k = 1; k < 8; ++k) v[k] = gauss(rng);
      v = detail::orthogonalize(v, span);
      if (norm(v) > 1e-3) return ImaginaryUnit::normalized(v);
    }
  };
  const ImaginaryUnit i2 = draw(std::array<Octonion, 2>{Octonion(1.0), i1.value()});
  const ImaginaryUnit i4 =
      draw(std::array<Octonion, 4>{Octonion(1.0), i1.value(), i2.value(), i1.value() * i2.value()});
  return detail::assemble_frame(i1, i2, i4);
}

/// Complex number a + b i read as a + b I1.
using SliceComplex = std::complex<double>;

inline Octonion embed(const SliceComplex& z, const ImaginaryUnit& axis) {
  return Octonion(z.real()) + axis.value() * z.imag();
}

/// value = F1 + F2 I2 + G1 I4 + G2 (I2 I4) with F1, F2, G1, G2 in C_I1.
///
/// G2 multiplies I2 I4 rather than (G2 I2) I4: with the latter grouping the
/// G2 part of a power series restricted to C_I1 is anti-holomorphic.
struct SplitComponents {
  SliceComplex f1, f2, g1, g2;
};

inline SplitComponents split_components(const Octonion& value, const SplittingFrame& frame) {
  const auto& b = frame.basis;
  const Octonion i1_i2i4 = frame.i1.value() * b[6];
  auto c = [&](const Octonion& re, const Octonion& im) {
    return SliceComplex(euclid_inner(value, re), euclid_inner(value, im));
  };
  return SplitComponents{c(b[0], b[1]), c(b[2], b[3]), c(b[4], b[5]), c(b[6], i1_i2i4)};
}

inline Octonion recompose(const SplitComponents& s, const SplittingFrame& frame) {
  const ImaginaryUnit& i1 = frame.i1;
  return embed(s.f1, i1) + embed(s.f2, i1) * frame.i2.value() + embed(s.g1, i1) * frame.i4.value() +
         embed(s.g2, i1) * frame.basis[6];
}

}  // namespace octo
