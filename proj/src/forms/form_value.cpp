#include "acx/forms/form_value.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace acx {

const std::vector<IndexSet>& subsets10(int size) {
  static const std::vector<IndexSet> s0{{{0, 0}, 0}};
  static const std::vector<IndexSet> s1{{{0, 0}, 1}, {{1, 0}, 1}};
  static const std::vector<IndexSet> s2{{{0, 1}, 2}};
  switch (size) {
    case 0: return s0;
    case 1: return s1;
    case 2: return s2;
  }
  throw std::logic_error("subsets10: bad size");
}

const std::vector<IndexSet>& subsets01(int size) {
  static const std::vector<IndexSet> s0{{{0, 0}, 0}};
  static const std::vector<IndexSet> s1{{{2, 0}, 1}, {{3, 0}, 1}};
  static const std::vector<IndexSet> s2{{{2, 3}, 2}};
  switch (size) {
    case 0: return s0;
    case 1: return s1;
    case 2: return s2;
  }
  throw std::logic_error("subsets01: bad size");
}

namespace {

// position of a size-p subset in subsets10/01 enumeration
int subset_pos10(const int* idx, int n) {
  if (n == 0 || n == 2) return 0;
  return idx[0] == 0 ? 0 : 1;
}
int subset_pos01(const int* idx, int n) {
  if (n == 0 || n == 2) return 0;
  return idx[0] == 2 ? 0 : 1;
}

}  // namespace

CJet form_on_basis(const FormValue& f, const int* idxs, int n) {
  if (n != f.p + f.q || f.empty()) return CJet(0.0);
  // sort a copy, tracking the permutation sign; duplicates kill the term
  std::array<int, 4> s{};
  for (int i = 0; i < n; ++i) s[size_t(i)] = idxs[i];
  int sign = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (s[size_t(i)] == s[size_t(j)]) return CJet(0.0);
      if (s[size_t(i)] > s[size_t(j)]) {
        std::swap(s[size_t(i)], s[size_t(j)]);
        sign = -sign;
      }
    }
  int i10[2], n10 = 0, i01[2], n01 = 0;
  for (int i = 0; i < n; ++i)
    (s[size_t(i)] < 2 ? i10[n10++] : i01[n01++]) = s[size_t(i)];
  if (n10 != f.p || n01 != f.q) return CJet(0.0);
  int nK = choose2(f.q);
  int pos = subset_pos10(i10, n10) * nK + subset_pos01(i01, n01);
  CJet out = f.c[size_t(pos)];
  if (sign < 0) out *= std::complex<double>(-1.0);
  return out;
}

CJet form_on_one_general(const FormValue& f, const FrameVec& v, int pos, const int* idxs, int n) {
  CJet total(0.0);
  std::array<int, 4> args{};
  for (int i = 0; i < n; ++i) args[size_t(i)] = idxs[i];
  for (int A = 0; A < 4; ++A) {
    const CJet& coef = v[size_t(A)];
    if (coef.v == std::complex<double>(0.0) && coef.ord == 2) {
      // still might have derivative content; only skip exact constants
      bool zero = true;
      for (auto& gg : coef.g)
        if (gg != std::complex<double>(0.0)) zero = false;
      for (auto& hh : coef.h)
        if (hh != std::complex<double>(0.0)) zero = false;
      if (zero) continue;
    }
    args[size_t(pos)] = A;
    CJet term = form_on_basis(f, args.data(), n);
    bool tz = term.v == std::complex<double>(0.0);
    if (tz) {
      tz = true;
      for (auto& gg : term.g)
        if (gg != std::complex<double>(0.0)) tz = false;
      for (auto& hh : term.h)
        if (hh != std::complex<double>(0.0)) tz = false;
    }
    if (tz) continue;
    total += coef * term;
  }
  return total;
}

FormValue conj(const FormValue& f) {
  FormValue out(f.q, f.p);
  if (f.empty()) return out;
  const auto& I10 = subsets10(out.p);
  const auto& K01 = subsets01(out.q);
  int nK = choose2(out.q);
  // conj(omega)(Z_I, Zb_K) = (-1)^{pq} conj( omega(Z_K', Zb_I') ) where K', I'
  // are the mirrored index sets
  double sgn = (f.p * f.q) % 2 == 0 ? 1.0 : -1.0;
  for (int iI = 0; iI < int(I10.size()); ++iI)
    for (int iK = 0; iK < int(K01.size()); ++iK) {
      // mirrored: the (1,0) part of conj-omega's component set maps to the
      // (0,1) slots of omega and vice versa
      int srcI[2], srcK[2];
      for (int t = 0; t < K01[size_t(iK)].n; ++t) srcI[t] = K01[size_t(iK)].idx[size_t(t)] - 2;
      for (int t = 0; t < I10[size_t(iI)].n; ++t) srcK[t] = I10[size_t(iI)].idx[size_t(t)] + 2;
      int srcNI = K01[size_t(iK)].n, srcNK = I10[size_t(iI)].n;
      int spos = subset_pos10(srcI, srcNI) * choose2(f.q) + subset_pos01(srcK, srcNK);
      CJet v = acx::conj(f.c[size_t(spos)]);
      if (sgn < 0) v *= std::complex<double>(-1.0);
      out.c[size_t(iI * nK + iK)] = v;
    }
  return out;
}

FormValue wedge(const FormValue& a, const FormValue& b) {
  FormValue out(a.p + b.p, a.q + b.q);
  if (out.empty() || a.empty() || b.empty()) return out;
  const auto& aI = subsets10(a.p);
  const auto& aK = subsets01(a.q);
  const auto& bI = subsets10(b.p);
  const auto& bK = subsets01(b.q);
  const auto& oI = subsets10(out.p);
  const auto& oK = subsets01(out.q);
  const int anK = choose2(a.q), bnK = choose2(b.q), onK = choose2(out.q);

  auto merge_sign = [](const IndexSet& x, const IndexSet& y, IndexSet& merged) -> int {
    // sign of sorting concat(x, y); 0 if they intersect
    int seq[4], n = 0;
    for (int t = 0; t < x.n; ++t) seq[n++] = x.idx[size_t(t)];
    for (int t = 0; t < y.n; ++t) seq[n++] = y.idx[size_t(t)];
    int sign = 1;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (seq[i] == seq[j]) return 0;
        if (seq[i] > seq[j]) {
          std::swap(seq[i], seq[j]);
          sign = -sign;
        }
      }
    merged.n = n;
    for (int i = 0; i < n; ++i) merged.idx[size_t(i)] = seq[i];
    return sign;
  };
  auto same = [](const IndexSet& x, const IndexSet& y) {
    if (x.n != y.n) return false;
    for (int t = 0; t < x.n; ++t)
      if (x.idx[size_t(t)] != y.idx[size_t(t)]) return false;
    return true;
  };

  for (size_t ia = 0; ia < aI.size(); ++ia)
    for (size_t ka = 0; ka < aK.size(); ++ka)
      for (size_t ib = 0; ib < bI.size(); ++ib)
        for (size_t kb = 0; kb < bK.size(); ++kb) {
          IndexSet mI, mK;
          int s1 = merge_sign(aI[ia], bI[ib], mI);
          if (s1 == 0) continue;
          int s2 = merge_sign(aK[ka], bK[kb], mK);
          if (s2 == 0) continue;
          // moving b's (1,0) block across a's (0,1) block
          int s3 = ((a.q * b.p) % 2 == 0) ? 1 : -1;
          int sign = s1 * s2 * s3;
          // locate output slot
          int oiI = -1, oiK = -1;
          for (size_t t = 0; t < oI.size(); ++t)
            if (same(oI[t], mI)) oiI = int(t);
          for (size_t t = 0; t < oK.size(); ++t)
            if (same(oK[t], mK)) oiK = int(t);
          CJet term = a.c[ia * size_t(anK) + ka] * b.c[ib * size_t(bnK) + kb];
          if (sign < 0) term *= std::complex<double>(-1.0);
          out.c[size_t(oiI * onK + oiK)] += term;
        }
  return out;
}

FormValue operator+(const FormValue& a, const FormValue& b) {
  assert(a.p == b.p && a.q == b.q);
  FormValue out = a;
  for (int i = 0; i < out.ncomp(); ++i) out.c[size_t(i)] += b.c[size_t(i)];
  return out;
}
FormValue operator-(const FormValue& a, const FormValue& b) {
  assert(a.p == b.p && a.q == b.q);
  FormValue out = a;
  for (int i = 0; i < out.ncomp(); ++i) out.c[size_t(i)] -= b.c[size_t(i)];
  return out;
}
FormValue scale(const FormValue& a, const std::complex<double>& s) {
  FormValue out = a;
  for (int i = 0; i < out.ncomp(); ++i) out.c[size_t(i)] *= s;
  return out;
}

double sup_abs(const FormValue& f) {
  double m = 0;
  for (int i = 0; i < f.ncomp(); ++i) m = std::max(m, std::abs(f.c[size_t(i)].v));
  return m;
}

}  // namespace acx
