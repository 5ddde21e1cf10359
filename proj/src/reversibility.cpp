// Copyright 2026 The qrev developers.
//
// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#include "qrev/reversibility.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qrev {

namespace {

// Pinned certificate policy: a search hit below kCandidateObjective is
// re-verified element-by-element at kWitnessEps; a dense-grid floor above
// kAbsenceMargin certifies that no witness exists (dimension <= 3 only).
constexpr double kCandidateObjective = 1e-10;
constexpr double kWitnessEps = 1e-8;
constexpr double kAbsenceMargin = 1e-6;
constexpr int kGridSamples = 10000;
constexpr int kPolishCount = 24;
constexpr int kAlsIters = 150;
constexpr int kStiefelIters = 300;

Vec mat_to_vec(const Mat& m) {
  return Eigen::Map<const Vec>(m.data(), m.size());
}

Mat vec_to_mat(const Vec& v, Eigen::Index rows, Eigen::Index cols) {
  return Eigen::Map<const Mat>(v.data(), rows, cols);
}

std::vector<Mat> orthonormalize_hs(const std::vector<Mat>& ops,
                                   double rank_eps) {
  const Eigen::Index rows = ops[0].rows(), cols = ops[0].cols();
  Mat stack(rows * cols, static_cast<Eigen::Index>(ops.size()));
  for (std::size_t k = 0; k < ops.size(); ++k)
    stack.col(static_cast<Eigen::Index>(k)) = mat_to_vec(ops[k]);
  Eigen::JacobiSVD<Mat> svd(stack, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  std::vector<Mat> basis;
  if (sv.size() == 0 || sv(0) <= 0.0) return basis;
  const double cut = rank_eps * sv(0);
  for (Eigen::Index k = 0; k < sv.size(); ++k)
    if (sv(k) > cut)
      basis.push_back(vec_to_mat(svd.matrixU().col(k), rows, cols));
  return basis;
}

double rank_one_value(const std::vector<Mat>& basis, const Vec& a,
                      const Vec& b) {
  double s = 0.0;
  for (const Mat& g : basis) s += std::norm((a.adjoint() * g * b)(0, 0));
  return s;
}

double rank_one_witness_residual(const std::vector<Mat>& basis, const Vec& a,
                                 const Vec& b) {
  double r = std::abs((a.adjoint() * b)(0, 0));
  for (const Mat& g : basis)
    r = std::max(r, std::abs((a.adjoint() * g * b)(0, 0)));
  return r;
}

struct PairSearchResult {
  double value = 0.0;
  Vec a, b;
};

Vec min_eigvec(const Mat& h) {
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  return es.eigenvectors().col(0);
}

PairSearchResult als_polish(const std::vector<Mat>& basis, Vec a, Vec b,
                            int iters) {
  const Eigen::Index d = a.size();
  double val = rank_one_value(basis, a, b);
  for (int it = 0; it < iters; ++it) {
    Mat m = Mat::Zero(d, d);
    for (const Mat& g : basis) {
      Vec w = g.adjoint() * a;
      m += w * w.adjoint();
    }
    b = min_eigvec(m);
    m.setZero();
    for (const Mat& g : basis) {
      Vec w = g * b;
      m += w * w.adjoint();
    }
    a = min_eigvec(m);
    val = rank_one_value(basis, a, b);
    if (val < 1e-26) break;
  }
  return {val, a, b};
}

// Thin QR factor with a deterministic phase convention.
Mat qf(const Mat& m) {
  Eigen::HouseholderQR<Mat> qr(m);
  Mat q = qr.householderQ() * Mat::Identity(m.rows(), m.cols());
  Mat r = qr.matrixQR()
              .topLeftCorner(m.cols(), m.cols())
              .triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < m.cols(); ++i) {
    const Complex rii = r(i, i);
    const double mag = std::abs(rii);
    if (mag > 0.0) q.col(i) *= rii / mag;
  }
  return q;
}

double kl_value(const std::vector<Mat>& basis, const Mat& v) {
  double s = 0.0;
  for (const Mat& g : basis) {
    Mat c = v.adjoint() * g * v;
    c -= 0.5 * c.trace() * Mat::Identity(2, 2);
    s += c.squaredNorm();
  }
  return s;
}

Mat kl_gradient(const std::vector<Mat>& basis, const Mat& v) {
  Mat grad = Mat::Zero(v.rows(), v.cols());
  for (const Mat& g : basis) {
    Mat c = v.adjoint() * g * v;
    c -= 0.5 * c.trace() * Mat::Identity(2, 2);
    grad += 2.0 * (g * v * c.adjoint() + g.adjoint() * v * c);
  }
  return grad;
}

PairSearchResult stiefel_polish(const std::vector<Mat>& basis, Mat v,
                                int iters) {
  v = qf(v);
  double f = kl_value(basis, v);
  double eta = 1.0;
  for (int it = 0; it < iters && f >= 1e-26; ++it) {
    Mat grad = kl_gradient(basis, v);
    Mat vg = v.adjoint() * grad;
    Mat xi = grad - v * (0.5 * (vg + vg.adjoint()));
    const double slope = xi.squaredNorm();
    if (slope < 1e-28) break;
    bool stepped = false;
    for (int ls = 0; ls < 40; ++ls) {
      Mat vn = qf(v - eta * xi);
      const double fn = kl_value(basis, vn);
      if (fn < f - 1e-4 * eta * slope) {
        v = std::move(vn);
        f = fn;
        stepped = true;
        eta = std::min(eta * 2.0, 1.0);
        break;
      }
      eta *= 0.5;
    }
    if (!stepped) break;
  }
  return {f, v.col(0), v.col(1)};
}

double compression_residual(const std::vector<Mat>& basis, const Mat& p,
                            double rank) {
  double r = 0.0;
  for (const Mat& g : basis) {
    Mat pgp = p * g * p;
    const Complex lambda = pgp.trace() / rank;
    r = std::max(r, hs_norm(pgp - lambda * p));
  }
  return r;
}

struct GridFloor {
  double rank_one = 0.0;
  double subspace = 0.0;
  PairSearchResult best_rank_one;
  PairSearchResult best_subspace;
};

// Dense sweep over orthonormal pairs with polishing of the best buckets.
GridFloor grid_floor(const std::vector<Mat>& basis, Eigen::Index d,
                     std::uint64_t seed) {
  auto rng = seeded_rng(mix_seed(seed, 0x9416dULL));
  std::vector<std::pair<double, Mat>> r1, kl;
  r1.reserve(kGridSamples);
  kl.reserve(kGridSamples);
  for (int n = 0; n < kGridSamples; ++n) {
    Mat v = qf(random_complex_matrix(d, 2, rng));
    r1.emplace_back(rank_one_value(basis, v.col(0), v.col(1)), v);
    kl.emplace_back(kl_value(basis, v), v);
  }
  auto by_value = [](const auto& x, const auto& y) { return x.first < y.first; };
  const int keep = std::min<int>(kPolishCount, kGridSamples);
  std::partial_sort(r1.begin(), r1.begin() + keep, r1.end(), by_value);
  std::partial_sort(kl.begin(), kl.begin() + keep, kl.end(), by_value);

  GridFloor out;
  out.rank_one = r1[0].first;
  out.subspace = kl[0].first;
  out.best_rank_one = {r1[0].first, r1[0].second.col(0), r1[0].second.col(1)};
  out.best_subspace = {kl[0].first, kl[0].second.col(0), kl[0].second.col(1)};
  for (int i = 0; i < keep; ++i) {
    PairSearchResult p =
        als_polish(basis, r1[i].second.col(0), r1[i].second.col(1), kAlsIters);
    if (p.value < out.rank_one) {
      out.rank_one = p.value;
      out.best_rank_one = p;
    }
    PairSearchResult q = stiefel_polish(basis, kl[i].second, kStiefelIters);
    if (q.value < out.subspace) {
      out.subspace = q.value;
      out.best_subspace = q;
    }
  }
  return out;
}

}  // namespace

const char* tri_state_name(TriState t) {
  switch (t) {
    case TriState::No: return "no";
    case TriState::Yes: return "yes";
    case TriState::Unknown: return "unknown";
  }
  return "";
}

OperatorSubspace noncommutative_graph(const KrausChannel& phi,
                                      const Tolerance& tol) {
  tol.validate();
  KrausChannel c = canonicalize(phi, tol);
  std::vector<Mat> products;
  products.reserve(c.kraus.size() * c.kraus.size());
  for (const Mat& vk : c.kraus)
    for (const Mat& vl : c.kraus) products.push_back(vk.adjoint() * vl);
  OperatorSubspace g;
  g.dim = phi.dim_in;
  g.basis = orthonormalize_hs(products, tol.rank_eps);
  return g;
}

ONDPartition ond_decompose(const StateFamily& family, const Tolerance& tol) {
  tol.validate();
  const std::size_t n = family.size();
  std::vector<Mat> projs;
  projs.reserve(n);
  for (const DensityMatrix& rho : family.states)
    projs.push_back(support_projector(rho.m, tol));

  // Supports overlap when |P_i P_j|_F clears sqrt(eq_eps): true overlaps
  // sit at order one, numerically orthogonal ones around machine epsilon.
  const double overlap_cut = std::sqrt(tol.eq_eps);
  std::vector<int> block_of(n, -1);
  ONDPartition out;
  for (std::size_t i = 0; i < n; ++i) {
    if (block_of[i] >= 0) continue;
    std::vector<int> block{static_cast<int>(i)};
    block_of[i] = static_cast<int>(out.blocks.size());
    for (std::size_t cursor = 0; cursor < block.size(); ++cursor) {
      const std::size_t a = static_cast<std::size_t>(block[cursor]);
      for (std::size_t b = 0; b < n; ++b) {
        if (block_of[b] >= 0) continue;
        if (hs_norm(projs[a] * projs[b]) > overlap_cut) {
          block_of[b] = block_of[i];
          block.push_back(static_cast<int>(b));
        }
      }
    }
    std::sort(block.begin(), block.end());
    Mat sum = Mat::Zero(family.dim(), family.dim());
    for (int idx : block) sum += family.states[static_cast<std::size_t>(idx)].m;
    out.projectors.push_back(
        support_projector(sum / static_cast<double>(block.size()), tol));
    out.blocks.push_back(std::move(block));
  }
  return out;
}

KrausChannel petz_recovery(const KrausChannel& phi, const DensityMatrix& avg,
                           const Tolerance& tol) {
  tol.validate();
  if (avg.dim() != phi.dim_in)
    fail(ErrorCode::DimensionMismatch,
         "reference state dimension does not match channel input");

  const Mat out_avg = apply_raw(phi, avg.m);
  auto [sqrt_in, ignore_in] = psd_sqrt_and_pinv_sqrt(avg.m, tol);
  auto [ignore_out, pinv_sqrt_out] = psd_sqrt_and_pinv_sqrt(out_avg, tol);

  std::vector<Mat> ops;
  ops.reserve(phi.kraus.size() + avg.dim());
  for (const Mat& v : phi.kraus)
    ops.push_back(sqrt_in * v.adjoint() * pinv_sqrt_out);

  // Off the support of phi(avg) the adjoint legs vanish; route that weight
  // back to the reference state to stay trace preserving.
  Eigen::SelfAdjointEigenSolver<Mat> es_out(out_avg);
  const RealVec& mu = es_out.eigenvalues();
  const double mu_cut =
      tol.rank_eps * std::max(mu(mu.size() - 1), 0.0);
  std::vector<Vec> kernel_vecs;
  for (Eigen::Index k = 0; k < mu.size(); ++k)
    if (mu(k) <= mu_cut) kernel_vecs.push_back(es_out.eigenvectors().col(k));

  if (!kernel_vecs.empty()) {
    Eigen::SelfAdjointEigenSolver<Mat> es_in(avg.m);
    for (Eigen::Index m = 0; m < es_in.eigenvalues().size(); ++m) {
      const double w = es_in.eigenvalues()(m);
      if (w <= 0.0) continue;
      for (const Vec& c : kernel_vecs)
        ops.push_back(std::sqrt(w) * es_in.eigenvectors().col(m) * c.adjoint());
    }
  }
  return KrausChannel(phi.dim_out, phi.dim_in, std::move(ops), tol);
}

ReversibilityCheck is_reversible_for(const KrausChannel& phi,
                                     const StateFamily& family,
                                     const std::vector<double>& weights,
                                     const Tolerance& tol, double threshold) {
  tol.validate();
  if (family.dim() != phi.dim_in)
    fail(ErrorCode::DimensionMismatch,
         "family dimension does not match channel input");
  if (weights.size() != family.size())
    fail(ErrorCode::InvalidParameter, "one weight per family member required");
  double sum = 0.0;
  for (double w : weights) {
    if (!(w > 0.0))
      fail(ErrorCode::InvalidProbability, "weights must be strictly positive");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    fail(ErrorCode::InvalidProbability, "weights must sum to 1");

  Mat avg = Mat::Zero(family.dim(), family.dim());
  for (std::size_t i = 0; i < family.size(); ++i)
    avg += (weights[i] / sum) * family.states[i].m;

  KrausChannel recovery = petz_recovery(phi, DensityMatrix(avg, tol), tol);

  ReversibilityCheck out;
  out.per_state.reserve(family.size());
  for (const DensityMatrix& rho : family.states) {
    const Mat round_trip = apply_raw(recovery, apply_raw(phi, rho.m));
    const double dist = trace_distance(round_trip, rho.m);
    out.per_state.push_back(dist);
    out.residual = std::max(out.residual, dist);
  }
  out.reversible = out.residual <= threshold;
  return out;
}

CriterionCheck check_orthogonal_criterion(const KrausChannel& phi,
                                          const ONDPartition& partition,
                                          const Tolerance& tol,
                                          double threshold) {
  tol.validate();
  const double thr = threshold > 0.0 ? threshold : tol.eq_eps;
  OperatorSubspace graph = noncommutative_graph(phi, tol);
  CriterionCheck out;
  for (std::size_t i = 0; i < partition.projectors.size(); ++i) {
    for (std::size_t k = 0; k < partition.projectors.size(); ++k) {
      if (i == k) continue;
      for (const Mat& g : graph.basis)
        out.residual = std::max(
            out.residual, hs_norm(partition.projectors[i] * g *
                                  partition.projectors[k]));
    }
  }
  out.holds = out.residual <= thr;
  return out;
}

CompressionCheck perfectly_reversible_on(const KrausChannel& phi, const Mat& p,
                                         const Tolerance& tol,
                                         double threshold) {
  tol.validate();
  if (p.rows() != phi.dim_in || p.cols() != phi.dim_in)
    fail(ErrorCode::DimensionMismatch,
         "projector dimension does not match channel input");
  const double scale = std::max(1.0, max_abs(p));
  if (!is_hermitian(p, tol.eq_eps * scale) ||
      max_abs(p * p - p) > 1e-8 * scale)
    fail(ErrorCode::InvalidParameter, "p is not an orthogonal projector");
  const double rank = std::round(p.trace().real());
  if (rank < 2.0) fail(ErrorCode::RankTooSmall, "projector rank must be >= 2");

  OperatorSubspace graph = noncommutative_graph(phi, tol);
  CompressionCheck out;
  out.residual = compression_residual(graph.basis, p, rank);
  out.holds = out.residual <= (threshold > 0.0 ? threshold : kWitnessEps);
  return out;
}

ReversibilityIndex reversibility_index(const KrausChannel& phi,
                                       const Tolerance& tol,
                                       std::uint64_t seed,
                                       std::uint64_t budget) {
  tol.validate();
  const Eigen::Index d = phi.dim_in;
  if (d < 2)
    fail(ErrorCode::InvalidParameter,
         "reversibility index needs input dimension >= 2");
  if (budget == 0) budget = 1;

  OperatorSubspace graph = noncommutative_graph(phi, tol);
  const std::vector<Mat>& basis = graph.basis;

  ReversibilityIndex idx;
  idx.status = "certified";

  std::optional<Mat> u = common_eigenbasis(basis, tol, seed);
  if (u) {
    idx.ri1 = 1;
    idx.eigenbasis = u;
    // Columns sharing every diagonal value sit in one joint eigenspace.
    std::vector<std::vector<Complex>> tuples(static_cast<std::size_t>(d));
    for (const Mat& g : basis) {
      Mat diag = u->adjoint() * g * *u;
      for (Eigen::Index i = 0; i < d; ++i)
        tuples[static_cast<std::size_t>(i)].push_back(diag(i, i));
    }
    for (Eigen::Index i = 0; i < d && idx.ri1 < 2; ++i) {
      for (Eigen::Index j = i + 1; j < d && idx.ri1 < 2; ++j) {
        double gap = 0.0;
        for (std::size_t m = 0; m < basis.size(); ++m)
          gap = std::max(gap,
                         std::abs(tuples[static_cast<std::size_t>(i)][m] -
                                  tuples[static_cast<std::size_t>(j)][m]));
        if (gap <= kWitnessEps) {
          idx.ri1 = 2;
          idx.repeated_diagonal = std::make_pair(static_cast<int>(i),
                                                 static_cast<int>(j));
        }
      }
    }
  }

  auto certify_pair = [&](const Vec& a, const Vec& b,
                          std::optional<PairCertificate>& slot) {
    const double res = rank_one_witness_residual(basis, a, b);
    if (res <= kWitnessEps) {
      slot = PairCertificate{a, b, res};
      return true;
    }
    return false;
  };
  auto certify_subspace = [&](const Vec& a, const Vec& b) {
    Mat p = a * a.adjoint() + b * b.adjoint();
    const double res = compression_residual(basis, p, 2.0);
    const double orth = std::abs((a.adjoint() * b)(0, 0));
    if (res <= kWitnessEps && orth <= kWitnessEps &&
        std::abs(a.norm() - 1.0) <= kWitnessEps &&
        std::abs(b.norm() - 1.0) <= kWitnessEps) {
      idx.subspace_pair = PairCertificate{a, b, res};
      return true;
    }
    return false;
  };

  if (idx.ri1 == 2) {
    const auto [i, j] = *idx.repeated_diagonal;
    const Vec a = u->col(i), b = u->col(j);
    if (certify_pair(a, b, idx.kernel_pair) && certify_subspace(a, b)) {
      idx.ri2 = 2;
      idx.ri2_exact = true;
      return idx;
    }
    // A repeated diagonal that fails re-verification would be a numerical
    // contradiction; fall through to the searches.
    idx.ri1 = 1;
    idx.repeated_diagonal.reset();
  }

  if (idx.ri1 == 1) {
    certify_pair(u->col(0), u->col(1), idx.kernel_pair);
    idx.ri2 = idx.kernel_pair ? 1 : 0;
  }

  auto rng_for = [&](std::uint64_t phase, std::uint64_t restart) {
    return seeded_rng(mix_seed(seed, (phase << 32) | restart));
  };
  const int restarts = static_cast<int>(std::min<std::uint64_t>(budget, 4096));

  if (!idx.kernel_pair) {
    double best = -1.0;
    for (int r = 0; r < restarts && !idx.kernel_pair; ++r) {
      auto rng = rng_for(1, static_cast<std::uint64_t>(r));
      Mat v = qf(random_complex_matrix(d, 2, rng));
      PairSearchResult res = als_polish(basis, v.col(0), v.col(1), kAlsIters);
      if (best < 0.0 || res.value < best) best = res.value;
      if (res.value < kCandidateObjective)
        certify_pair(res.a, res.b, idx.kernel_pair);
    }
    idx.best_rank_one_value = std::max(best, 0.0);
    if (idx.kernel_pair) idx.ri2 = std::max(idx.ri2, 1);
  }

  if (!idx.subspace_pair) {
    double best = -1.0;
    for (int r = 0; r < restarts && !idx.subspace_pair; ++r) {
      auto rng = rng_for(2, static_cast<std::uint64_t>(r));
      PairSearchResult res = stiefel_polish(
          basis, random_complex_matrix(d, 2, rng), kStiefelIters);
      if (best < 0.0 || res.value < best) best = res.value;
      if (res.value < kCandidateObjective &&
          certify_subspace(res.a, res.b)) {
        if (!idx.kernel_pair) certify_pair(res.a, res.b, idx.kernel_pair);
        idx.ri2 = 2;
      }
    }
    idx.best_subspace_value = std::max(best, 0.0);
  } else {
    idx.ri2 = 2;
  }

  if (idx.ri2 == 2) {
    idx.ri2_exact = true;
    return idx;
  }

  // Negative side: only a dense grid in low dimension is accepted as a
  // certificate of absence.
  if (d <= 3) {
    GridFloor floor = grid_floor(basis, d, seed);
    idx.best_rank_one_value = std::min(idx.best_rank_one_value, floor.rank_one);
    idx.best_subspace_value = std::min(idx.best_subspace_value, floor.subspace);
    bool settled = true;
    if (!idx.kernel_pair && floor.rank_one < kCandidateObjective &&
        certify_pair(floor.best_rank_one.a, floor.best_rank_one.b,
                     idx.kernel_pair))
      idx.ri2 = std::max(idx.ri2, 1);
    if (floor.subspace < kCandidateObjective &&
        certify_subspace(floor.best_subspace.a, floor.best_subspace.b)) {
      idx.ri2 = 2;
      idx.ri2_exact = true;
      return idx;
    }
    if (!idx.kernel_pair && floor.rank_one <= kAbsenceMargin) settled = false;
    if (floor.subspace <= kAbsenceMargin) settled = false;
    idx.ri2_exact = settled;
    idx.status = settled ? "certified" : "unknown_within_budget";
    return idx;
  }

  idx.ri2_exact = false;
  idx.status = "unknown_within_budget";
  return idx;
}

ZeroErrorReport zero_error_positivity(const ReversibilityIndex& idx) {
  ZeroErrorReport out;
  if (idx.ri2 >= 1)
    out.classical = TriState::Yes;
  else
    out.classical = idx.ri2_exact ? TriState::No : TriState::Unknown;
  if (idx.ri2 == 2)
    out.quantum = TriState::Yes;
  else
    out.quantum = idx.ri2_exact ? TriState::No : TriState::Unknown;
  return out;
}

CqRankDiagnostic cq_rank_diagnostic(const KrausChannel& phi,
                                    const Tolerance& tol, std::uint64_t seed) {
  tol.validate();
  CqRankDiagnostic out;
  OperatorSubspace graph = noncommutative_graph(phi, tol);
  std::optional<Mat> u = common_eigenbasis(graph.basis, tol, seed);
  if (!u) return out;
  out.applicable = true;

  KrausChannel comp = complementary(phi, tol);
  for (Eigen::Index k = 0; k < phi.dim_in; ++k) {
    Vec col = u->col(k);
    Mat sigma = apply_raw(comp, col * col.adjoint());
    out.max_sigma_rank = std::max(
        out.max_sigma_rank,
        static_cast<int>(numerical_rank(sigma, tol.rank_eps)));
  }

  // Output support of the averaged input.
  const Mat avg_out =
      apply_raw(phi, Mat::Identity(phi.dim_in, phi.dim_in) /
                         static_cast<double>(phi.dim_in));
  Eigen::SelfAdjointEigenSolver<Mat> es(avg_out);
  const RealVec& ev = es.eigenvalues();
  const double cut = tol.rank_eps * std::max(ev(ev.size() - 1), 0.0);
  std::vector<Vec> support;
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (ev(i) > cut) support.push_back(es.eigenvectors().col(i));
  const int ds = static_cast<int>(support.size());

  // Kernel dimension of the dual map on operators over that support.
  Mat dual_matrix(phi.dim_in * phi.dim_in, ds * ds);
  int col_idx = 0;
  for (int a = 0; a < ds; ++a)
    for (int b = 0; b < ds; ++b) {
      Mat e = support[static_cast<std::size_t>(a)] *
              support[static_cast<std::size_t>(b)].adjoint();
      dual_matrix.col(col_idx++) = mat_to_vec(dual_apply(phi, e));
    }
  const int kernel_dim =
      ds * ds - static_cast<int>(numerical_rank(dual_matrix, tol.rank_eps));
  out.bound = std::min(kernel_dim + 1, ds);
  out.ok = out.max_sigma_rank <= out.bound;
  return out;
}

}  // namespace qrev
