#pragma once

// Pointwise values of (p,q)-forms in the frame basis. A component is the
// value on a canonical tuple of frame vectors (ascending (1,0) indices, then
// ascending (0,1) indices); for n=2 that equals the coefficient against the
// corresponding wedge of dual covectors.

#include <array>
#include <cstdint>
#include <vector>

#include "acx/core/frame.hpp"
#include "acx/core/jet.hpp"

namespace acx {

inline bool pq_in_range(int p, int q) { return p >= 0 && p <= 2 && q >= 0 && q <= 2; }

inline int choose2(int k) { return k == 0 ? 1 : (k == 1 ? 2 : 1); }
inline int pq_ncomp(int p, int q) { return pq_in_range(p, q) ? choose2(p) * choose2(q) : 0; }

// subsets of {0,1} (for p) or {2,3} (for q) of a given size, ascending
// returned as fixed arrays: index list + count
struct IndexSet {
  std::array<int, 2> idx{};
  int n = 0;
};
const std::vector<IndexSet>& subsets10(int size);
const std::vector<IndexSet>& subsets01(int size);

struct FormValue {
  int p = 0, q = 0;
  std::array<CJet, 4> c{};  // components, canonical order: iI * nK + iK

  FormValue() = default;
  FormValue(int p_, int q_) : p(p_), q(q_) {
    for (auto& e : c) e = CJet(0.0);
  }
  int ncomp() const { return pq_ncomp(p, q); }
  bool empty() const { return ncomp() == 0; }

  static FormValue function(const CJet& f) {
    FormValue v(0, 0);
    v.c[0] = f;
    return v;
  }
  static FormValue function(const RJet& f) { return function(widen(f)); }
};

// value on a list of frame basis vectors (indices 0..3); handles permutation
// sign, duplicate args, and slot-count mismatch (-> 0)
CJet form_on_basis(const FormValue& f, const int* idxs, int n);

// value where one argument is a general frame-coefficient vector at position
// `pos` and the rest are basis vectors
CJet form_on_one_general(const FormValue& f, const FrameVec& v, int pos, const int* idxs, int n);

FormValue conj(const FormValue& f);
FormValue wedge(const FormValue& a, const FormValue& b);
FormValue operator+(const FormValue& a, const FormValue& b);
FormValue operator-(const FormValue& a, const FormValue& b);
FormValue scale(const FormValue& a, const std::complex<double>& s);

// sup over components of |value|
double sup_abs(const FormValue& f);

}  // namespace acx
