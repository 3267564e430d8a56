#pragma once

// Degree-2 Taylor jets in the four coordinates (x1, y1, x2, y2).
//
// Every field evaluation in the library goes through Jet<T>: analytic
// providers compose jet arithmetic (exact derivatives), grid providers fill
// the slots with finite differences. `ord` tracks how many derivative levels
// are trustworthy; arithmetic propagates the minimum and deriv() consumes one
// level. Entries above `ord` are still computed (they are cheap) but must not
// be read.

#include <array>
#include <cassert>
#include <cmath>
#include <complex>

namespace acx {

inline constexpr int kDim = 4;
inline constexpr int kSym = 10;  // packed symmetric 4x4

constexpr int sym_index(int i, int j) {
  if (i > j) { int t = i; i = j; j = t; }
  constexpr int row_off[4] = {0, 4, 7, 9};
  return row_off[i] + (j - i);
}

template <class T>
struct Jet {
  T v{};
  std::array<T, kDim> g{};
  std::array<T, kSym> h{};
  int ord = 2;

  Jet() = default;
  explicit Jet(T value, int order = 2) : v(value), ord(order) {}

  static Jet constant(T value) { return Jet(value); }

  static Jet variable(T value, int axis) {
    Jet j(value);
    j.g[axis] = T(1);
    return j;
  }

  T hess(int i, int j) const { return h[sym_index(i, j)]; }

  Jet& operator+=(const Jet& o) {
    v += o.v;
    for (int i = 0; i < kDim; ++i) g[i] += o.g[i];
    for (int i = 0; i < kSym; ++i) h[i] += o.h[i];
    ord = ord < o.ord ? ord : o.ord;
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    v -= o.v;
    for (int i = 0; i < kDim; ++i) g[i] -= o.g[i];
    for (int i = 0; i < kSym; ++i) h[i] -= o.h[i];
    ord = ord < o.ord ? ord : o.ord;
    return *this;
  }
  Jet& operator*=(T c) {
    v *= c;
    for (auto& x : g) x *= c;
    for (auto& x : h) x *= c;
    return *this;
  }
};

using RJet = Jet<double>;
using CJet = Jet<std::complex<double>>;

template <class T> Jet<T> operator+(Jet<T> a, const Jet<T>& b) { a += b; return a; }
template <class T> Jet<T> operator-(Jet<T> a, const Jet<T>& b) { a -= b; return a; }
template <class T> Jet<T> operator-(Jet<T> a) { a *= T(-1); return a; }
template <class T> Jet<T> operator*(Jet<T> a, T c) { a *= c; return a; }
template <class T> Jet<T> operator*(T c, Jet<T> a) { a *= c; return a; }
template <class T> Jet<T> operator+(Jet<T> a, T c) { a.v += c; return a; }
template <class T> Jet<T> operator+(T c, Jet<T> a) { a.v += c; return a; }
template <class T> Jet<T> operator-(Jet<T> a, T c) { a.v -= c; return a; }
template <class T> Jet<T> operator-(T c, const Jet<T>& a) { return (-a) + c; }

inline RJet operator*(RJet a, int c) { a *= double(c); return a; }

template <class T>
Jet<T> operator*(const Jet<T>& a, const Jet<T>& b) {
  Jet<T> r;
  r.ord = a.ord < b.ord ? a.ord : b.ord;
  r.v = a.v * b.v;
  for (int i = 0; i < kDim; ++i) r.g[i] = a.g[i] * b.v + a.v * b.g[i];
  for (int i = 0; i < kDim; ++i)
    for (int j = i; j < kDim; ++j) {
      int s = sym_index(i, j);
      r.h[s] = a.h[s] * b.v + a.g[i] * b.g[j] + a.g[j] * b.g[i] + a.v * b.h[s];
    }
  return r;
}

// reciprocal; requires value != 0
template <class T>
Jet<T> inv(const Jet<T>& a) {
  Jet<T> r;
  r.ord = a.ord;
  T iv = T(1) / a.v;
  T iv2 = iv * iv;
  T iv3 = iv2 * iv;
  r.v = iv;
  for (int i = 0; i < kDim; ++i) r.g[i] = -a.g[i] * iv2;
  for (int i = 0; i < kDim; ++i)
    for (int j = i; j < kDim; ++j) {
      int s = sym_index(i, j);
      r.h[s] = -a.h[s] * iv2 + T(2) * a.g[i] * a.g[j] * iv3;
    }
  return r;
}

template <class T>
Jet<T> operator/(const Jet<T>& a, const Jet<T>& b) { return a * inv(b); }
template <class T>
Jet<T> operator/(Jet<T> a, T c) { a *= T(1) / c; return a; }
template <class T>
Jet<T> operator/(T c, const Jet<T>& b) { Jet<T> r = inv(b); r *= c; return r; }

// partial derivative along axis j: degree drops by one
template <class T>
Jet<T> deriv(const Jet<T>& a, int j) {
  assert(a.ord >= 1);
  Jet<T> r;
  r.ord = a.ord - 1;
  r.v = a.g[j];
  for (int i = 0; i < kDim; ++i) r.g[i] = a.h[sym_index(i, j)];
  return r;
}

// scalar chain rule: f(a) with f', f'' at a.v
template <class T>
Jet<T> compose(const Jet<T>& a, T f0, T f1, T f2) {
  Jet<T> r;
  r.ord = a.ord;
  r.v = f0;
  for (int i = 0; i < kDim; ++i) r.g[i] = f1 * a.g[i];
  for (int i = 0; i < kDim; ++i)
    for (int j = i; j < kDim; ++j) {
      int s = sym_index(i, j);
      r.h[s] = f1 * a.h[s] + f2 * a.g[i] * a.g[j];
    }
  return r;
}

inline RJet exp(const RJet& a) {
  double e = std::exp(a.v);
  return compose(a, e, e, e);
}
inline RJet log(const RJet& a) {
  return compose(a, std::log(a.v), 1.0 / a.v, -1.0 / (a.v * a.v));
}
inline RJet sqrt(const RJet& a) {
  double s = std::sqrt(a.v);
  return compose(a, s, 0.5 / s, -0.25 / (s * a.v));
}
inline RJet sin(const RJet& a) { return compose(a, std::sin(a.v), std::cos(a.v), -std::sin(a.v)); }
inline RJet cos(const RJet& a) { return compose(a, std::cos(a.v), -std::sin(a.v), -std::cos(a.v)); }

// |a|; the kink at 0 is the caller's lookout (piecewise fields branch on v)
inline RJet abs(const RJet& a) {
  double s = a.v < 0 ? -1.0 : 1.0;
  return compose(a, s * a.v, s, 0.0);
}

inline RJet powi(RJet a, int n) {
  if (n == 0) return RJet(1.0);
  if (n < 0) return inv(powi(a, -n));
  RJet r = a;
  for (int k = 1; k < n; ++k) r = r * a;
  return r;
}

inline RJet pow(const RJet& a, double e) {
  double f0 = std::pow(a.v, e);
  double f1 = e * std::pow(a.v, e - 1.0);
  double f2 = e * (e - 1.0) * std::pow(a.v, e - 2.0);
  return compose(a, f0, f1, f2);
}

inline RJet sqr(const RJet& a) { return a * a; }

// ---- complex/real interplay ----

inline CJet widen(const RJet& a) {
  CJet r;
  r.ord = a.ord;
  r.v = a.v;
  for (int i = 0; i < kDim; ++i) r.g[i] = a.g[i];
  for (int i = 0; i < kSym; ++i) r.h[i] = a.h[i];
  return r;
}

inline CJet operator*(const CJet& a, const RJet& b) { return a * widen(b); }
inline CJet operator*(const RJet& a, const CJet& b) { return widen(a) * b; }

inline RJet real(const CJet& a) {
  RJet r;
  r.ord = a.ord;
  r.v = a.v.real();
  for (int i = 0; i < kDim; ++i) r.g[i] = a.g[i].real();
  for (int i = 0; i < kSym; ++i) r.h[i] = a.h[i].real();
  return r;
}
inline RJet imag(const CJet& a) {
  RJet r;
  r.ord = a.ord;
  r.v = a.v.imag();
  for (int i = 0; i < kDim; ++i) r.g[i] = a.g[i].imag();
  for (int i = 0; i < kSym; ++i) r.h[i] = a.h[i].imag();
  return r;
}
inline CJet conj(const CJet& a) {
  CJet r;
  r.ord = a.ord;
  r.v = std::conj(a.v);
  for (int i = 0; i < kDim; ++i) r.g[i] = std::conj(a.g[i]);
  for (int i = 0; i < kSym; ++i) r.h[i] = std::conj(a.h[i]);
  return r;
}
inline RJet norm2(const CJet& a) {  // |a|^2 as a real jet
  RJet re = real(a), im = imag(a);
  return re * re + im * im;
}

}  // namespace acx
