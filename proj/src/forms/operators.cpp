#include "acx/forms/operators.hpp"

#include <algorithm>

namespace acx {

namespace {

// collect the component's defining argument tuple: zeta list then eta list
struct ArgLists {
  int zeta[2], nz = 0;
  int eta[2], ne = 0;
};

ArgLists args_of(int p, int q, int iI, int iK) {
  ArgLists a;
  const auto& I = subsets10(p)[size_t(iI)];
  const auto& K = subsets01(q)[size_t(iK)];
  a.nz = I.n;
  for (int t = 0; t < I.n; ++t) a.zeta[t] = I.idx[size_t(t)];
  a.ne = K.n;
  for (int t = 0; t < K.n; ++t) a.eta[t] = K.idx[size_t(t)];
  return a;
}

int pow_m1(int k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace

FormValue op_partial(const FrameContext& ctx, const FormValue& f) {
  const int P = f.p + 1, Q = f.q;
  FormValue out(P, Q);
  if (out.empty() || f.empty()) return out;
  const int nK = choose2(Q);
  for (int iI = 0; iI < choose2(P); ++iI)
    for (int iK = 0; iK < nK; ++iK) {
      ArgLists a = args_of(P, Q, iI, iK);
      CJet total(0.0);
      // sum 1: (-1)^{k+1} zeta_k ( f(..hat k.., eta) )
      for (int k = 0; k < P; ++k) {
        int rest[4], n = 0;
        for (int t = 0; t < P; ++t)
          if (t != k) rest[n++] = a.zeta[t];
        for (int t = 0; t < a.ne; ++t) rest[n++] = a.eta[t];
        CJet comp = form_on_basis(f, rest, n);
        CJet term = ctx.dir(a.zeta[k], comp);
        if (pow_m1(k) < 0) term *= std::complex<double>(-1.0);
        total += term;
      }
      // sum 2: (-1)^{k+l} f([z_k, z_l], rest zetas, etas)
      for (int k = 0; k < P; ++k)
        for (int l = k + 1; l < P; ++l) {
          int args[4], n = 0;
          args[n++] = -1;  // slot for the bracket
          for (int t = 0; t < P; ++t)
            if (t != k && t != l) args[n++] = a.zeta[t];
          for (int t = 0; t < a.ne; ++t) args[n++] = a.eta[t];
          const FrameVec& br = ctx.bracket[size_t(a.zeta[k])][size_t(a.zeta[l])];
          CJet term = form_on_one_general(f, br, 0, args, n);
          if (pow_m1(k + l) < 0) term *= std::complex<double>(-1.0);
          total += term;
        }
      // sum 3: (-1)^{k+l+P} f([z_k, eta_l], rest)   (1-based k,l and p+1 = P)
      for (int k = 0; k < P; ++k)
        for (int l = 0; l < a.ne; ++l) {
          int args[4], n = 0;
          args[n++] = -1;
          for (int t = 0; t < P; ++t)
            if (t != k) args[n++] = a.zeta[t];
          for (int t = 0; t < a.ne; ++t)
            if (t != l) args[n++] = a.eta[t];
          const FrameVec& br = ctx.bracket[size_t(a.zeta[k])][size_t(a.eta[l])];
          CJet term = form_on_one_general(f, br, 0, args, n);
          if (pow_m1((k + 1) + (l + 1) + P) < 0) term *= std::complex<double>(-1.0);
          total += term;
        }
      out.c[size_t(iI * nK + iK)] = total;
    }
  return out;
}

FormValue op_dbar(const FrameContext& ctx, const FormValue& f) {
  const int P = f.p, Q = f.q + 1;
  FormValue out(P, Q);
  if (out.empty() || f.empty()) return out;
  const int nK = choose2(Q);
  for (int iI = 0; iI < choose2(P); ++iI)
    for (int iK = 0; iK < nK; ++iK) {
      ArgLists a = args_of(P, Q, iI, iK);
      CJet total(0.0);
      // sum 1: (-1)^{k+p+1} eta_k ( f(zetas, ..hat k..) )
      for (int k = 0; k < Q; ++k) {
        int rest[4], n = 0;
        for (int t = 0; t < a.nz; ++t) rest[n++] = a.zeta[t];
        for (int t = 0; t < Q; ++t)
          if (t != k) rest[n++] = a.eta[t];
        CJet comp = form_on_basis(f, rest, n);
        CJet term = ctx.dir(a.eta[k], comp);
        if (pow_m1((k + 1) + P + 1) < 0) term *= std::complex<double>(-1.0);
        total += term;
      }
      // sum 2: (-1)^{k+l} f([eta_k, eta_l], zetas, rest etas)
      for (int k = 0; k < Q; ++k)
        for (int l = k + 1; l < Q; ++l) {
          int args[4], n = 0;
          args[n++] = -1;
          for (int t = 0; t < a.nz; ++t) args[n++] = a.zeta[t];
          for (int t = 0; t < Q; ++t)
            if (t != k && t != l) args[n++] = a.eta[t];
          const FrameVec& br = ctx.bracket[size_t(a.eta[k])][size_t(a.eta[l])];
          CJet term = form_on_one_general(f, br, 0, args, n);
          if (pow_m1(k + l) < 0) term *= std::complex<double>(-1.0);
          total += term;
        }
      // sum 3: (-1)^{k+l+p} f([zeta_k, eta_l], rest)
      for (int k = 0; k < a.nz; ++k)
        for (int l = 0; l < Q; ++l) {
          int args[4], n = 0;
          args[n++] = -1;
          for (int t = 0; t < a.nz; ++t)
            if (t != k) args[n++] = a.zeta[t];
          for (int t = 0; t < Q; ++t)
            if (t != l) args[n++] = a.eta[t];
          const FrameVec& br = ctx.bracket[size_t(a.zeta[k])][size_t(a.eta[l])];
          CJet term = form_on_one_general(f, br, 0, args, n);
          if (pow_m1((k + 1) + (l + 1) + P) < 0) term *= std::complex<double>(-1.0);
          total += term;
        }
      out.c[size_t(iI * nK + iK)] = total;
    }
  return out;
}

FormValue op_theta(const FrameContext& ctx, const FormValue& f) {
  const int P = f.p + 2, Q = f.q - 1;
  FormValue out(P, Q);
  if (out.empty() || f.empty()) return out;
  const int nK = choose2(Q);
  for (int iI = 0; iI < choose2(P); ++iI)
    for (int iK = 0; iK < nK; ++iK) {
      ArgLists a = args_of(P, Q, iI, iK);
      CJet total(0.0);
      for (int k = 0; k < P; ++k)
        for (int l = k + 1; l < P; ++l) {
          int args[4], n = 0;
          args[n++] = -1;
          for (int t = 0; t < P; ++t)
            if (t != k && t != l) args[n++] = a.zeta[t];
          for (int t = 0; t < a.ne; ++t) args[n++] = a.eta[t];
          const FrameVec& br = ctx.bracket[size_t(a.zeta[k])][size_t(a.zeta[l])];
          CJet term = form_on_one_general(f, br, 0, args, n);
          if (-pow_m1(k + l) < 0) term *= std::complex<double>(-1.0);
          total += term;
        }
      out.c[size_t(iI * nK + iK)] = total;
    }
  return out;
}

FormValue op_thetabar(const FrameContext& ctx, const FormValue& f) {
  const int P = f.p - 1, Q = f.q + 2;
  FormValue out(P, Q);
  if (out.empty() || f.empty()) return out;
  const int nK = choose2(Q);
  for (int iI = 0; iI < choose2(P); ++iI)
    for (int iK = 0; iK < nK; ++iK) {
      ArgLists a = args_of(P, Q, iI, iK);
      CJet total(0.0);
      for (int k = 0; k < Q; ++k)
        for (int l = k + 1; l < Q; ++l) {
          int args[4], n = 0;
          args[n++] = -1;
          for (int t = 0; t < a.nz; ++t) args[n++] = a.zeta[t];
          for (int t = 0; t < Q; ++t)
            if (t != k && t != l) args[n++] = a.eta[t];
          const FrameVec& br = ctx.bracket[size_t(a.eta[k])][size_t(a.eta[l])];
          CJet term = form_on_one_general(f, br, 0, args, n);
          if (-pow_m1(k + l) < 0) term *= std::complex<double>(-1.0);
          total += term;
        }
      out.c[size_t(iI * nK + iK)] = total;
    }
  return out;
}

double identity_residual(const FrameContext& ctx, const FormValue& f, OperatorIdentity id) {
  switch (id) {
    case OperatorIdentity::kAnticommutator: {
      FormValue r = op_partial(ctx, op_dbar(ctx, f)) + op_dbar(ctx, op_partial(ctx, f)) +
                    op_theta(ctx, op_thetabar(ctx, f)) + op_thetabar(ctx, op_theta(ctx, f));
      return sup_abs(r);
    }
    case OperatorIdentity::kPartialSquared: {
      FormValue r = op_partial(ctx, op_partial(ctx, f)) - op_theta(ctx, op_dbar(ctx, f)) -
                    op_dbar(ctx, op_theta(ctx, f));
      return sup_abs(r);
    }
    case OperatorIdentity::kDbarSquared: {
      FormValue r = op_dbar(ctx, op_dbar(ctx, f)) - op_thetabar(ctx, op_partial(ctx, f)) -
                    op_partial(ctx, op_thetabar(ctx, f));
      return sup_abs(r);
    }
  }
  return 0;
}

}  // namespace acx
