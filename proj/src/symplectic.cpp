// Copyright 2026 The qrev developers.
//
// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#include "qrev/symplectic.hpp"

#include <random>
#include <stdexcept>

namespace qrev {

SymplecticSpace SymplecticSpace::standard(int modes) {
  if (modes < 0) fail(ErrorCode::InvalidShape, "negative mode count");
  SymplecticSpace s;
  s.modes = modes;
  s.delta = RationalMatrix::zero(2 * modes, 2 * modes);
  for (int k = 0; k < modes; ++k) {
    s.delta(2 * k, 2 * k + 1) = 1;
    s.delta(2 * k + 1, 2 * k) = -1;
  }
  return s;
}

Rational SymplecticSpace::form(const RationalMatrix& u,
                               const RationalMatrix& v) const {
  if (u.rows() != dim() || v.rows() != dim() || u.cols() != 1 || v.cols() != 1)
    fail(ErrorCode::DimensionMismatch, "form arguments must be phase vectors");
  return (u.transpose() * delta * v)(0, 0);
}

bool SymplecticSubspace::contains(const RationalMatrix& v) const {
  if (v.rows() != space.dim() || v.cols() != 1)
    fail(ErrorCode::DimensionMismatch, "membership test needs a phase vector");
  if (basis.cols() == 0) return v.is_zero();
  return RationalMatrix::hstack(basis, v).rank() == basis.cols();
}

namespace {

// Canonical form of the span: RREF of the transposed basis.
RationalMatrix span_canonical(const RationalMatrix& basis) {
  RationalMatrix rt = basis.transpose();
  std::vector<int> pivots = rt.rref_in_place();
  RationalMatrix out(static_cast<int>(pivots.size()), rt.cols());
  for (int i = 0; i < out.rows(); ++i)
    for (int j = 0; j < out.cols(); ++j) out(i, j) = rt(i, j);
  return out;
}

}  // namespace

bool SymplecticSubspace::same_span(const SymplecticSubspace& o) const {
  if (space.dim() != o.space.dim()) return false;
  return span_canonical(basis) == span_canonical(o.basis);
}

SymplecticSubspace make_subspace(const SymplecticSpace& space,
                                 const RationalMatrix& generators) {
  if (generators.cols() > 0 && generators.rows() != space.dim())
    fail(ErrorCode::DimensionMismatch,
         "generators do not live in the given phase space");
  SymplecticSubspace l;
  l.space = space;
  l.basis = generators.cols() == 0 ? RationalMatrix(space.dim(), 0)
                                   : generators.column_space_basis();
  return l;
}

SymplecticSubspace skew_complement(const SymplecticSubspace& l) {
  // z in L^perp iff (Bᵀ Delta) z = 0.
  RationalMatrix constraints = l.basis.transpose() * l.space.delta;
  return make_subspace(l.space, constraints.kernel_basis());
}

SymplecticSubspace subspace_intersect(const SymplecticSubspace& a,
                                      const SymplecticSubspace& b) {
  if (a.space.dim() != b.space.dim())
    fail(ErrorCode::DimensionMismatch, "intersection of mismatched spaces");
  if (a.dim() == 0 || b.dim() == 0)
    return make_subspace(a.space, RationalMatrix(a.space.dim(), 0));
  RationalMatrix joint = RationalMatrix::hstack(a.basis, -b.basis);
  RationalMatrix null = joint.kernel_basis();
  RationalMatrix gens(a.space.dim(), null.cols());
  for (int c = 0; c < null.cols(); ++c) {
    RationalMatrix x(a.dim(), 1);
    for (int i = 0; i < a.dim(); ++i) x(i, 0) = null(i, c);
    RationalMatrix v = a.basis * x;
    for (int i = 0; i < v.rows(); ++i) gens(i, c) = v(i, 0);
  }
  return make_subspace(a.space, gens);
}

SubspaceClassification classify_subspace(const SymplecticSubspace& l) {
  SubspaceClassification out;
  const RationalMatrix gram =
      l.basis.transpose() * l.space.delta * l.basis;
  // radical = B * ker(gram)
  RationalMatrix null = gram.kernel_basis();
  out.radical = make_subspace(l.space, l.basis * null);
  if (out.radical.dim() == l.dim() && l.dim() > 0)
    out.kind = SubspaceKind::Isotropic;
  else if (out.radical.dim() == 0)
    out.kind = SubspaceKind::Symplectic;
  else
    out.kind = SubspaceKind::Mixed;
  return out;
}

namespace {

struct GsState {
  const SymplecticSpace* space;
  std::vector<RationalMatrix> work;
};

// Extracts one hyperbolic pair from the front of the work list and
// projects the remainder onto the pair's skew complement.
std::pair<RationalMatrix, RationalMatrix> gs_extract(GsState& st) {
  const RationalMatrix e = st.work.front();
  int partner = -1;
  Rational gamma;
  for (std::size_t j = 1; j < st.work.size(); ++j) {
    gamma = st.space->form(e, st.work[j]);
    if (gamma != 0) {
      partner = static_cast<int>(j);
      break;
    }
  }
  if (partner < 0)
    fail(ErrorCode::InvalidParameter,
         "degenerate form where a symplectic block was expected");
  RationalMatrix h = st.work[static_cast<std::size_t>(partner)].scaled(1 / gamma);

  std::vector<RationalMatrix> next;
  next.reserve(st.work.size() - 2);
  for (std::size_t j = 1; j < st.work.size(); ++j) {
    if (static_cast<int>(j) == partner) continue;
    const RationalMatrix& u = st.work[j];
    RationalMatrix proj = u + e.scaled(st.space->form(h, u)) -
                          h.scaled(st.space->form(e, u));
    next.push_back(std::move(proj));
  }
  st.work = std::move(next);
  return {e, h};
}

std::vector<RationalMatrix> matrix_columns(const RationalMatrix& m) {
  std::vector<RationalMatrix> cols;
  cols.reserve(static_cast<std::size_t>(m.cols()));
  for (int j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
  return cols;
}

RationalMatrix columns_matrix(const SymplecticSpace& space,
                              const std::vector<RationalMatrix>& cols) {
  RationalMatrix m(space.dim(), static_cast<int>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (int i = 0; i < space.dim(); ++i) m(i, static_cast<int>(j)) = cols[j](i, 0);
  return m;
}

}  // namespace

RationalMatrix SymplecticBasis::change_of_basis() const {
  RationalMatrix m(space.dim(), space.dim());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    for (int i = 0; i < space.dim(); ++i) {
      m(i, static_cast<int>(2 * k)) = pairs[k].e(i, 0);
      m(i, static_cast<int>(2 * k + 1)) = pairs[k].h(i, 0);
    }
  }
  return m;
}

SymplecticBasis symplectic_basis_through(const SymplecticSubspace& l) {
  const SymplecticSpace& space = l.space;
  SymplecticBasis out;
  out.space = space;

  SubspaceClassification cls = classify_subspace(l);
  const RationalMatrix& rad = cls.radical.basis;

  // Complement of the radical inside L: pivot columns of [rad | basis]
  // beyond the radical block.
  RationalMatrix l2(space.dim(), 0);
  {
    RationalMatrix joint = RationalMatrix::hstack(rad, l.basis);
    RationalMatrix copy = joint;
    std::vector<int> pivots = copy.rref_in_place();
    std::vector<RationalMatrix> keep;
    for (int p : pivots)
      if (p >= rad.cols()) keep.push_back(joint.col(p));
    l2 = columns_matrix(space, keep);
  }

  GsState st{&space, matrix_columns(l2)};
  while (!st.work.empty()) {
    auto [e, h] = gs_extract(st);
    out.pairs.push_back({e, h, true, true});
  }

  // Ambient complement of the symplectic part; contains the radical.
  SymplecticSubspace span_l2 = make_subspace(space, l2);
  SymplecticSubspace s = skew_complement(span_l2);

  // Basis of S that starts with the radical vectors.
  std::vector<RationalMatrix> s_cols;
  {
    RationalMatrix joint = RationalMatrix::hstack(rad, s.basis);
    RationalMatrix copy = joint;
    std::vector<int> pivots = copy.rref_in_place();
    for (int p : pivots) s_cols.push_back(joint.col(p));
  }

  GsState amb{&space, std::move(s_cols)};
  int remaining_rad = rad.cols();
  while (!amb.work.empty()) {
    if (remaining_rad > 0) {
      // Front vector is (a projection of) a radical vector: its pair leg
      // stays inside L, the partner leg cannot.
      auto [e, h] = gs_extract(amb);
      out.pairs.push_back({e, h, true, false});
      --remaining_rad;
    } else {
      auto [e, h] = gs_extract(amb);
      out.pairs.push_back({e, h, false, false});
    }
  }

  // Exact sanity of the construction.
  if (static_cast<int>(out.pairs.size()) != space.modes)
    throw std::logic_error("symplectic basis has wrong pair count");
  for (std::size_t a = 0; a < out.pairs.size(); ++a) {
    for (std::size_t b = 0; b < out.pairs.size(); ++b) {
      const Rational ee = space.form(out.pairs[a].e, out.pairs[b].e);
      const Rational hh = space.form(out.pairs[a].h, out.pairs[b].h);
      const Rational eh = space.form(out.pairs[a].e, out.pairs[b].h);
      if (ee != 0 || hh != 0 || eh != (a == b ? 1 : 0))
        throw std::logic_error("constructed basis is not symplectic");
    }
  }
  for (auto& p : out.pairs) {
    p.e_in_l = l.contains(p.e);
    p.h_in_l = l.contains(p.h);
  }
  return out;
}

bool is_symplectic_transform(const SymplecticSpace& space,
                             const RationalMatrix& t) {
  if (t.rows() != space.dim() || t.cols() != space.dim()) return false;
  return t.transpose() * space.delta * t == space.delta;
}

DilationReport verify_dilation(const DilationBlocks& b) {
  if (b.s_A < 0 || b.s_B < 0 || b.s_D < 0 || b.s_E < 0 ||
      b.s_A + b.s_D != b.s_B + b.s_E)
    fail(ErrorCode::InvalidShape, "dilation mode counts do not balance");
  if (b.K.rows() != 2 * b.s_A || b.K.cols() != 2 * b.s_B ||
      b.L.rows() != 2 * b.s_A || b.L.cols() != 2 * b.s_E ||
      b.K_D.rows() != 2 * b.s_D || b.K_D.cols() != 2 * b.s_B ||
      b.L_D.rows() != 2 * b.s_D || b.L_D.cols() != 2 * b.s_E)
    fail(ErrorCode::InvalidShape, "dilation block shapes are inconsistent");

  const RationalMatrix da = SymplecticSpace::standard(b.s_A).delta;
  const RationalMatrix db = SymplecticSpace::standard(b.s_B).delta;
  const RationalMatrix dd = SymplecticSpace::standard(b.s_D).delta;
  const RationalMatrix de = SymplecticSpace::standard(b.s_E).delta;

  DilationReport r;
  r.forms_b =
      b.K.transpose() * da * b.K + b.K_D.transpose() * dd * b.K_D == db;
  r.forms_e =
      b.L.transpose() * da * b.L + b.L_D.transpose() * dd * b.L_D == de;
  r.forms_mix = (b.K.transpose() * da * b.L + b.K_D.transpose() * dd * b.L_D)
                    .is_zero();
  r.rows_a = b.K * db * b.K.transpose() + b.L * de * b.L.transpose() == da;
  r.rows_d =
      b.K_D * db * b.K_D.transpose() + b.L_D * de * b.L_D.transpose() == dd;
  r.rows_mix =
      (b.K * db * b.K_D.transpose() + b.L * de * b.L_D.transpose()).is_zero();
  return r;
}

MainLCheck lemma_mainl_check(const DilationBlocks& b) {
  DilationReport rep = verify_dilation(b);
  if (!rep.ok())
    fail(ErrorCode::DilationInvalid,
         "blocks do not assemble into a symplectic dilation");

  const SymplecticSpace za = SymplecticSpace::standard(b.s_A);
  const SymplecticSpace zb = SymplecticSpace::standard(b.s_B);

  SymplecticSubspace ran_l = make_subspace(za, b.L);
  SymplecticSubspace perp = skew_complement(ran_l);

  SymplecticSubspace ker_kd = make_subspace(zb, b.K_D.kernel_basis());
  SymplecticSubspace image = make_subspace(za, b.K * ker_kd.basis);

  MainLCheck out;
  out.dim_ker_kd = ker_kd.dim();
  out.dim_ranl_perp = perp.dim();
  out.perp_of_ranl_equals_image = perp.same_span(image);

  // -Δ_B Kᵀ Δ_A inverts K on the noise-free block.
  RationalMatrix back = (zb.delta * b.K.transpose() * za.delta).scaled(-1);
  SymplecticSubspace round_trip = make_subspace(zb, back * perp.basis);
  out.inverse_direction = round_trip.same_span(ker_kd);

  const RationalMatrix gb =
      ker_kd.basis.transpose() * zb.delta * ker_kd.basis;
  const RationalMatrix ga = (b.K * ker_kd.basis).transpose() * za.delta *
                            (b.K * ker_kd.basis);
  out.restriction_preserves_form = gb == ga;
  out.image_symplectic =
      image.dim() == 0 ||
      classify_subspace(image).kind == SubspaceKind::Symplectic;
  return out;
}

RationalMatrix random_symplectic(int modes, std::uint64_t seed,
                                 int transvections) {
  if (modes < 1) fail(ErrorCode::InvalidShape, "need at least one mode");
  if (transvections <= 0) transvections = 2 * modes + 4;
  const SymplecticSpace space = SymplecticSpace::standard(modes);
  const int n = space.dim();

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-2, 2);
  const Rational coeffs[6] = {rat(1),  rat(-1), rat(1, 2),
                              rat(-1, 2), rat(2), rat(-1, 3)};
  std::uniform_int_distribution<int> coeff_pick(0, 5);

  RationalMatrix t = RationalMatrix::identity(n);
  for (int step = 0; step < transvections; ++step) {
    RationalMatrix v(n, 1);
    bool nonzero = false;
    while (!nonzero) {
      for (int i = 0; i < n; ++i) {
        v(i, 0) = entry(rng);
        if (v(i, 0) != 0) nonzero = true;
      }
    }
    const Rational c = coeffs[coeff_pick(rng)];
    // tau = I - c v vᵀ Delta
    RationalMatrix tau = RationalMatrix::identity(n) -
                         (v * v.transpose() * space.delta).scaled(c);
    t = tau * t;
  }
  return t;
}

DilationBlocks split_dilation(const RationalMatrix& t, int s_A, int s_B) {
  if (t.rows() != t.cols() || t.rows() % 2 != 0)
    fail(ErrorCode::InvalidShape, "transform must be square and even-sized");
  const int s = t.rows() / 2;
  if (s_A < 0 || s_A > s || s_B < 0 || s_B > s)
    fail(ErrorCode::InvalidShape, "block mode counts exceed the transform");
  DilationBlocks b;
  b.s_A = s_A;
  b.s_B = s_B;
  b.s_D = s - s_A;
  b.s_E = s - s_B;
  b.K = t.block(0, 0, 2 * s_A, 2 * s_B);
  b.L = t.block(0, 2 * s_B, 2 * s_A, 2 * b.s_E);
  b.K_D = t.block(2 * s_A, 0, 2 * b.s_D, 2 * s_B);
  b.L_D = t.block(2 * s_A, 2 * s_B, 2 * b.s_D, 2 * b.s_E);
  return b;
}

}  // namespace qrev
