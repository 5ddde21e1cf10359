// Copyright 2026 The qrev developers.
//
// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#include "qrev/gaussian.hpp"

#include <cmath>
#include <cstdlib>

namespace qrev {

namespace {

void check_shapes(const GaussianChannelParams& g) {
  if (g.modes_in < 1 || g.modes_out < 1)
    fail(ErrorCode::InvalidShape, "mode counts must be positive");
  if (g.K.rows() != 2 * g.modes_in || g.K.cols() != 2 * g.modes_out)
    fail(ErrorCode::InvalidShape, "K must be 2*modes_in x 2*modes_out");
  if (g.alpha.rows() != 2 * g.modes_out || g.alpha.cols() != 2 * g.modes_out)
    fail(ErrorCode::InvalidShape, "alpha must be square on the output space");
  if (g.l.rows() != 2 * g.modes_out || g.l.cols() != 1)
    fail(ErrorCode::InvalidShape, "l must be an output phase vector");
}

// Best rational approximation with denominator <= max_denom: walk the
// continued fraction of the exact value, fall back to the uniform grid.
Rational snap_to_denominator(const Rational& x, long max_denom) {
  if (x.get_den() <= max_denom) return x;

  mpz_class p = x.get_num(), q = x.get_den();
  mpz_class h0 = 1, h1 = 0, k0 = 0, k1 = 1;  // convergent recurrences
  mpz_class best_num = 0, best_den = 1;
  mpz_class a, r;
  mpz_class num = p, den = q;
  while (den != 0) {
    mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(),
                den.get_mpz_t());
    mpz_class h = a * h0 + h1;
    mpz_class k = a * k0 + k1;
    if (k > max_denom) break;
    best_num = h;
    best_den = k;
    h1 = h0;
    h0 = h;
    k1 = k0;
    k0 = k;
    num = den;
    den = r;
  }
  Rational conv(best_num, best_den);
  conv.canonicalize();

  // Grid candidate round(x * D) / D, exact.
  mpz_class scaled_num = p * max_denom;
  mpz_class g_q, g_r;
  mpz_fdiv_qr(g_q.get_mpz_t(), g_r.get_mpz_t(), scaled_num.get_mpz_t(),
              q.get_mpz_t());
  if (2 * g_r >= q) g_q += 1;
  Rational grid(g_q, max_denom);
  grid.canonicalize();

  const Rational dc = abs(x - conv);
  const Rational dg = abs(x - grid);
  if (dc < dg) return conv;
  if (dg < dc) return grid;
  return conv.get_den() <= grid.get_den() ? conv : grid;
}

std::string kind_phrase(SubspaceKind kind) {
  switch (kind) {
    case SubspaceKind::Isotropic: return "isotropic";
    case SubspaceKind::Symplectic: return "symplectic";
    case SubspaceKind::Mixed: return "mixed";
  }
  return "";
}

}  // namespace

GaussianChannelParams make_gaussian(int modes_in, int modes_out,
                                    RationalMatrix K, RationalMatrix alpha,
                                    RationalMatrix l) {
  GaussianChannelParams g;
  g.modes_in = modes_in;
  g.modes_out = modes_out;
  g.K = std::move(K);
  g.alpha = std::move(alpha);
  if (l.rows() == 0 && l.cols() <= 1)
    l = RationalMatrix::zero(2 * modes_out, 1);
  g.l = std::move(l);
  check_shapes(g);
  if (!(g.alpha.transpose() == g.alpha))
    fail(ErrorCode::InvalidParameter, "alpha must be symmetric");
  return g;
}

GaussianChannelParams snap_gaussian(int modes_in, int modes_out,
                                    const RealMat& K, const RealMat& alpha,
                                    const RealVec& l, long max_denom,
                                    double max_dist) {
  if (max_denom < 1)
    fail(ErrorCode::InvalidParameter, "max_denom must be positive");
  Rational worst(0);
  auto snap_one = [&](double x) {
    Rational exact = rat_from_double_exact(x);
    Rational snapped = snap_to_denominator(exact, max_denom);
    Rational dist = abs(exact - snapped);
    if (dist > worst) worst = dist;
    return snapped;
  };

  RationalMatrix kq(static_cast<int>(K.rows()), static_cast<int>(K.cols()));
  for (int i = 0; i < kq.rows(); ++i)
    for (int j = 0; j < kq.cols(); ++j) kq(i, j) = snap_one(K(i, j));

  RationalMatrix aq(static_cast<int>(alpha.rows()),
                    static_cast<int>(alpha.cols()));
  for (int i = 0; i < aq.rows(); ++i)
    for (int j = 0; j <= i; ++j) {
      // Symmetrize before snapping so alpha stays exactly symmetric.
      aq(i, j) = snap_one(0.5 * (alpha(i, j) + alpha(j, i)));
      aq(j, i) = aq(i, j);
    }

  RationalMatrix lq(static_cast<int>(l.size()), 1);
  for (int i = 0; i < lq.rows(); ++i) lq(i, 0) = snap_one(l(i));

  if (worst > rat_from_double_exact(max_dist))
    fail(ErrorCode::SnapTooCoarse,
         "parameters are farther than " + std::to_string(max_dist) +
             " from any rational with denominator <= " +
             std::to_string(max_denom));

  GaussianChannelParams g = make_gaussian(modes_in, modes_out, std::move(kq),
                                          std::move(aq), std::move(lq));
  g.snap_distance = worst.get_d();
  return g;
}

GaussianValidation validate(const GaussianChannelParams& g,
                            const Tolerance& tol) {
  tol.validate();
  check_shapes(g);
  GaussianValidation v;
  v.alpha_symmetric = g.alpha.transpose() == g.alpha;
  if (!v.alpha_symmetric) return v;

  const RationalMatrix da = SymplecticSpace::standard(g.modes_in).delta;
  const RationalMatrix db = SymplecticSpace::standard(g.modes_out).delta;
  const RationalMatrix d_exact = db - g.K.transpose() * da * g.K;

  const RealMat alpha_d = g.alpha.to_double();
  const RealMat dd = d_exact.to_double();
  const Eigen::Index n = alpha_d.rows();
  Mat m_minus(n, n), m_plus(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      m_minus(i, j) = Complex(alpha_d(i, j), -0.5 * dd(i, j));
      m_plus(i, j) = Complex(alpha_d(i, j), 0.5 * dd(i, j));
    }
  RealVec ev_minus = hermitian_eigenvalues(m_minus);
  RealVec ev_plus = hermitian_eigenvalues(m_plus);
  v.min_eig_minus = ev_minus(0);
  v.min_eig_plus = ev_plus(0);
  const double scale =
      std::max({1.0, max_abs(m_minus), max_abs(m_plus)});
  v.ok = v.min_eig_minus >= -tol.eq_eps * scale &&
         v.min_eig_plus >= -tol.eq_eps * scale;
  return v;
}

SymplecticSubspace kernel_Zf(const GaussianChannelParams& g) {
  check_shapes(g);
  const SymplecticSpace zb = SymplecticSpace::standard(g.modes_out);
  return make_subspace(zb, g.alpha.kernel_basis());
}

const char* gaussian_index_name(GaussianIndex idx) {
  switch (idx) {
    case GaussianIndex::I00: return "00";
    case GaussianIndex::I01: return "01";
    case GaussianIndex::I02: return "02";
    case GaussianIndex::I22: return "22";
  }
  return "";
}

GaussianIndexReport gaussian_reversibility_index(const GaussianChannelParams& g,
                                                 const Tolerance& tol) {
  GaussianValidation v = validate(g, tol);
  if (!v.ok)
    fail(ErrorCode::InvalidParameter,
         "parameters fail the Gaussian validity inequality");

  GaussianIndexReport rep;
  rep.kernel = kernel_Zf(g);

  const bool alpha_zero = g.alpha.is_zero();
  bool k_invertible_symplectic = false;
  if (alpha_zero && g.modes_in == g.modes_out &&
      g.K.determinant() != 0) {
    const RationalMatrix da = SymplecticSpace::standard(g.modes_in).delta;
    const RationalMatrix db = SymplecticSpace::standard(g.modes_out).delta;
    k_invertible_symplectic = g.K.transpose() * da * g.K == db;
  }

  if (alpha_zero && k_invertible_symplectic) {
    rep.noiseless = true;
    rep.index = GaussianIndex::I22;
    rep.ri1 = rep.ri2 = 2;
    rep.kernel_kind = SubspaceKind::Symplectic;
    rep.narrative =
        "noiseless channel: alpha vanishes and the phase-space transform is "
        "an invertible symplectic map, so every family of input states can "
        "be recovered";
    return rep;
  }

  if (rep.kernel.dim() == 0) {
    rep.index = GaussianIndex::I00;
    rep.ri1 = rep.ri2 = 0;
    rep.narrative =
        "every output canonical variable picks up noise (the noise form has "
        "trivial kernel); no discrete family of pure input states survives";
    return rep;
  }

  SubspaceClassification cls = classify_subspace(rep.kernel);
  rep.kernel_kind = cls.kind;
  if (cls.kind == SubspaceKind::Isotropic) {
    rep.index = GaussianIndex::I01;
    rep.ri1 = 0;
    rep.ri2 = 1;
    rep.narrative =
        "the noise-free canonical variables all commute (isotropic kernel): "
        "suitable orthogonal families of pure states can be recovered, but "
        "no subspace is recovered perfectly";
  } else {
    rep.index = GaussianIndex::I02;
    rep.ri1 = 0;
    rep.ri2 = 2;
    rep.narrative =
        "the kernel of the noise form contains a conjugate pair of "
        "canonical variables (" + kind_phrase(cls.kind) +
        " kernel): the channel is perfectly reversible on a subspace";
  }
  return rep;
}

GaussianChannelParams onemode_canonical(OneModeClass cls, const Rational& N,
                                        const Rational& k) {
  if (N < 0) fail(ErrorCode::InvalidParameter, "thermal parameter N must be >= 0");
  RationalMatrix K(2, 2), alpha(2, 2);
  const RationalMatrix l = RationalMatrix::zero(2, 1);
  const Rational half = rat(1, 2);

  switch (cls) {
    case OneModeClass::A1: {
      alpha(0, 0) = alpha(1, 1) = N + half;
      break;
    }
    case OneModeClass::A2: {
      K(0, 0) = 1;
      // Minimal isotropic noise t*I admitted by the validity inequality,
      // found by bisection on t and snapped to a small denominator.
      Rational lo(0), hi = N + 2;
      auto valid_at = [&](const Rational& t) {
        RationalMatrix a(2, 2);
        a(0, 0) = a(1, 1) = t;
        GaussianChannelParams probe =
            make_gaussian(1, 1, K, a, RationalMatrix::zero(2, 1));
        return validate(probe).ok;
      };
      if (!valid_at(hi))
        fail(ErrorCode::InvalidParameter, "no admissible isotropic noise");
      for (int it = 0; it < 40; ++it) {
        Rational mid = (lo + hi) / 2;
        if (valid_at(mid))
          hi = mid;
        else
          lo = mid;
      }
      Rational t = snap_to_denominator(hi, 64);
      if (t < hi && !valid_at(t)) t = hi;
      alpha(0, 0) = alpha(1, 1) = N + t;
      break;
    }
    case OneModeClass::B1: {
      K = RationalMatrix::identity(2);
      alpha(1, 1) = rat(1, 4);
      break;
    }
    case OneModeClass::B2: {
      K = RationalMatrix::identity(2);
      alpha(0, 0) = alpha(1, 1) = N;
      break;
    }
    case OneModeClass::C: {
      if (k <= 0 || k == 1)
        fail(ErrorCode::InvalidParameter,
             "class C needs a gain k > 0 with k != 1");
      K(0, 0) = K(1, 1) = k;
      const Rational diff = 1 - k * k;
      const Rational spread = diff < 0 ? Rational(-diff) : diff;
      alpha(0, 0) = alpha(1, 1) = spread * (N + half);
      break;
    }
    case OneModeClass::D: {
      if (k <= 0)
        fail(ErrorCode::InvalidParameter, "class D needs a gain k > 0");
      K(0, 0) = k;
      K(1, 1) = -k;
      alpha(0, 0) = alpha(1, 1) = (1 + k * k) * (N + half);
      break;
    }
  }
  return make_gaussian(1, 1, std::move(K), std::move(alpha), l);
}

GaussianChannelParams channel_from_environment(const GaussianEnvironment& env) {
  const DilationBlocks& b = env.blocks;
  DilationReport rep = verify_dilation(b);
  if (!rep.ok())
    fail(ErrorCode::DilationInvalid,
         "blocks do not assemble into a symplectic dilation");
  if (env.alpha_D.rows() != 2 * b.s_D || env.alpha_D.cols() != 2 * b.s_D ||
      !(env.alpha_D.transpose() == env.alpha_D))
    fail(ErrorCode::InvalidShape,
         "environment covariance must be symmetric on the D modes");
  RationalMatrix alpha = b.K_D.transpose() * env.alpha_D * b.K_D;
  return make_gaussian(b.s_A, b.s_B, b.K, std::move(alpha),
                       RationalMatrix::zero(2 * b.s_B, 1));
}

WeakComplementaryParams weak_complementary_params(const GaussianEnvironment& env,
                                                  const Tolerance& tol) {
  const DilationBlocks& b = env.blocks;
  DilationReport rep = verify_dilation(b);
  if (!rep.ok())
    fail(ErrorCode::DilationInvalid,
         "blocks do not assemble into a symplectic dilation");
  if (env.alpha_D.rows() != 2 * b.s_D || env.alpha_D.cols() != 2 * b.s_D ||
      !(env.alpha_D.transpose() == env.alpha_D))
    fail(ErrorCode::InvalidShape,
         "environment covariance must be symmetric on the D modes");
  WeakComplementaryParams out;
  out.L = b.L;
  out.alpha_w = b.L_D.transpose() * env.alpha_D * b.L_D;
  if (b.s_E > 0 && b.s_A > 0) {
    GaussianChannelParams w = make_gaussian(
        b.s_A, b.s_E, b.L, out.alpha_w, RationalMatrix::zero(2 * b.s_E, 1));
    out.validity = validate(w, tol);
  } else {
    out.validity.ok = true;
    out.validity.alpha_symmetric = true;
  }
  return out;
}

ReversedSubspaceReport reversed_subspace_report(const GaussianChannelParams& g,
                                                const Tolerance& tol) {
  ReversedSubspaceReport out;
  out.index = gaussian_reversibility_index(g, tol);

  const SymplecticSpace za = SymplecticSpace::standard(g.modes_in);
  const RationalMatrix da = za.delta;
  const RationalMatrix db = SymplecticSpace::standard(g.modes_out).delta;
  const RationalMatrix d_exact = db - g.K.transpose() * da * g.K;
  out.det_test_nonzero = d_exact.determinant() != 0;
  // The validity inequality traps the kernel of alpha inside ker(D), so a
  // nondegenerate D certifies index 00 without touching alpha.
  out.det_test_agrees = !out.det_test_nonzero || out.index.kernel.dim() == 0;

  out.image = make_subspace(za, g.K * out.index.kernel.basis);
  if (out.image.dim() > 0) {
    SubspaceClassification cls = classify_subspace(out.image);
    out.image_kind = cls.kind;
    out.radical_dim = cls.radical.dim();
  }
  // Maximal isotropic dimension of the image: full for an isotropic image,
  // half the nondegenerate part plus the radical otherwise.
  out.d = (out.image.dim() + out.radical_dim) / 2;
  out.basis = symplectic_basis_through(out.image);
  return out;
}

}  // namespace qrev
