// Copyright 2026 The qrev developers.
//
// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#include "qrev/json_io.hpp"

#include <cmath>
#include <cstdio>

#include "qrev/version.hpp"

namespace qrev {

namespace {

[[noreturn]] void parse_fail(const std::string& path, const std::string& msg) {
  fail(ErrorCode::ParseError, path + ": " + msg);
}

const Json& member(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) parse_fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end())
    parse_fail(path, std::string("missing key \"") + key + "\"");
  return *it;
}

const Json* optional_member(const Json& j, const char* key) {
  if (!j.is_object()) return nullptr;
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

int int_at(const Json& j, const std::string& path) {
  if (!j.is_number_integer() && !j.is_number_unsigned())
    parse_fail(path, "expected an integer");
  return j.get<int>();
}

double number_at(const Json& j, const std::string& path) {
  if (!j.is_number()) parse_fail(path, "expected a number");
  return j.get<double>();
}

Complex complex_entry(const Json& e, const std::string& path) {
  if (e.is_number()) return Complex(e.get<double>(), 0.0);
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number())
    return Complex(e[0].get<double>(), e[1].get<double>());
  parse_fail(path, "expected a number or an [re, im] pair");
}

Mat mat_from_json(const Json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) parse_fail(path, "expected a nonempty array of rows");
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  Mat m;
  for (std::size_t r = 0; r < rows; ++r) {
    const Json& row = j[r];
    const std::string rpath = path + "[" + std::to_string(r) + "]";
    if (!row.is_array() || row.empty())
      parse_fail(rpath, "expected a nonempty row array");
    if (r == 0) {
      cols = row.size();
      m.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    } else if (row.size() != cols) {
      parse_fail(rpath, "rows must have equal length");
    }
    for (std::size_t c = 0; c < cols; ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          complex_entry(row[c], rpath + "[" + std::to_string(c) + "]");
  }
  return m;
}

Rational rational_entry(const Json& e, const std::string& path) {
  try {
    if (e.is_string()) return rat_from_string(e.get<std::string>());
    if (e.is_number_integer()) return rat(e.get<long>());
    if (e.is_number_unsigned()) return rat(static_cast<long>(e.get<unsigned long>()));
    if (e.is_number_float()) return rat_from_double_exact(e.get<double>());
  } catch (const Error& err) {
    parse_fail(path, err.what());
  }
  parse_fail(path, "expected a number or a \"p/q\" string");
}

RationalMatrix rational_matrix_from_json(const Json& j, int rows, int cols,
                                         const std::string& path) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    parse_fail(path, "expected " + std::to_string(rows) + " rows");
  RationalMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    const std::string rpath = path + "[" + std::to_string(r) + "]";
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      parse_fail(rpath, "expected " + std::to_string(cols) + " entries");
    for (int c = 0; c < cols; ++c)
      m(r, c) = rational_entry(row[static_cast<std::size_t>(c)],
                               rpath + "[" + std::to_string(c) + "]");
  }
  return m;
}

bool entries_all_strings(const Json& j) {
  if (j.is_string()) return true;
  if (j.is_array()) {
    for (const Json& e : j)
      if (!entries_all_strings(e)) return false;
    return true;
  }
  return false;
}

void write_json_rec(std::string& out, const Json& j, int level, int indent);

bool all_primitive(const Json& j) {
  for (const Json& e : j)
    if (e.is_structured()) return false;
  return true;
}

void write_number(std::string& out, const Json& j) {
  if (j.is_number_float()) {
    const double v = j.get<double>();
    if (!std::isfinite(v)) {
      out += "null";
      return;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    std::string s(buf);
    if (s.find_first_of(".eE") == std::string::npos) s += ".0";
    out += s;
  } else if (j.is_number_unsigned()) {
    out += std::to_string(j.get<std::uint64_t>());
  } else {
    out += std::to_string(j.get<std::int64_t>());
  }
}

void write_children(std::string& out, const Json& j, int level, int indent,
                    char open, char close) {
  const bool flat = all_primitive(j);
  out += open;
  bool first = true;
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out += ',';
      first = false;
      out += '\n';
      out.append(static_cast<std::size_t>((level + 1) * indent), ' ');
      out += Json(it.key()).dump();
      out += ": ";
      write_json_rec(out, it.value(), level + 1, indent);
    }
  } else {
    for (const Json& e : j) {
      if (!first) out += flat ? ", " : ",";
      if (!flat) {
        out += '\n';
        out.append(static_cast<std::size_t>((level + 1) * indent), ' ');
      }
      first = false;
      write_json_rec(out, e, level + 1, indent);
    }
  }
  if (!first && (!j.is_array() || !flat)) {
    out += '\n';
    out.append(static_cast<std::size_t>(level * indent), ' ');
  }
  out += close;
}

void write_json_rec(std::string& out, const Json& j, int level, int indent) {
  switch (j.type()) {
    case Json::value_t::null:
      out += "null";
      break;
    case Json::value_t::boolean:
      out += j.get<bool>() ? "true" : "false";
      break;
    case Json::value_t::string:
      out += j.dump();
      break;
    case Json::value_t::array:
      if (j.empty())
        out += "[]";
      else
        write_children(out, j, level, indent, '[', ']');
      break;
    case Json::value_t::object:
      if (j.empty())
        out += "{}";
      else
        write_children(out, j, level, indent, '{', '}');
      break;
    default:
      write_number(out, j);
  }
}

const char* subspace_kind_name(SubspaceKind k) {
  switch (k) {
    case SubspaceKind::Isotropic: return "isotropic";
    case SubspaceKind::Symplectic: return "symplectic";
    case SubspaceKind::Mixed: return "mixed";
  }
  return "";
}

Json json_from_symplectic_basis(const SymplecticBasis& basis) {
  Json pairs = Json::array();
  for (const BasisPair& p : basis.pairs) {
    Json jp;
    jp["e"] = json_from_rational_matrix(p.e.transpose())[0];
    jp["h"] = json_from_rational_matrix(p.h.transpose())[0];
    jp["e_in_subspace"] = p.e_in_l;
    jp["h_in_subspace"] = p.h_in_l;
    pairs.push_back(std::move(jp));
  }
  Json out;
  out["pairs"] = std::move(pairs);
  out["change_of_basis"] = json_from_rational_matrix(basis.change_of_basis());
  return out;
}

Json pair_certificate_json(const PairCertificate& c) {
  Json out;
  out["left"] = json_from_vec(c.left);
  out["right"] = json_from_vec(c.right);
  out["residual"] = c.residual;
  return out;
}

}  // namespace

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorCode::ParseError, e.what());
  }
}

std::string dump_json_17(const Json& j, int indent) {
  std::string out;
  write_json_rec(out, j, 0, indent);
  out += '\n';
  return out;
}

KrausChannel channel_from_json(const Json& j, const Tolerance& tol) {
  const int din = int_at(member(j, "dim_in", "$"), "$.dim_in");
  const int dout = int_at(member(j, "dim_out", "$"), "$.dim_out");
  if (din < 1 || dout < 1) parse_fail("$.dim_in", "dimensions must be >= 1");
  const Json& kraus = member(j, "kraus", "$");
  if (!kraus.is_array() || kraus.empty())
    parse_fail("$.kraus", "expected a nonempty array of matrices");
  std::vector<Mat> ops;
  ops.reserve(kraus.size());
  for (std::size_t k = 0; k < kraus.size(); ++k) {
    const std::string path = "$.kraus[" + std::to_string(k) + "]";
    Mat m = mat_from_json(kraus[k], path);
    if (m.rows() != dout || m.cols() != din)
      parse_fail(path, "expected a " + std::to_string(dout) + "x" +
                           std::to_string(din) + " matrix");
    ops.push_back(std::move(m));
  }
  return KrausChannel(din, dout, std::move(ops), tol);
}

FamilyInput family_from_json(const Json& j, const Tolerance& tol) {
  const int dim = int_at(member(j, "dim", "$"), "$.dim");
  if (dim < 1) parse_fail("$.dim", "dimension must be >= 1");
  const Json& states = member(j, "states", "$");
  if (!states.is_array() || states.empty())
    parse_fail("$.states", "expected a nonempty array of matrices");

  FamilyInput out;
  std::vector<DensityMatrix> rhos;
  for (std::size_t i = 0; i < states.size(); ++i) {
    const std::string path = "$.states[" + std::to_string(i) + "]";
    Mat m = mat_from_json(states[i], path);
    if (m.rows() != dim || m.cols() != dim)
      parse_fail(path, "expected a " + std::to_string(dim) + "x" +
                           std::to_string(dim) + " matrix");
    rhos.emplace_back(std::move(m), tol);
  }

  std::vector<std::string> labels;
  if (const Json* jl = optional_member(j, "labels")) {
    if (!jl->is_array() || jl->size() != rhos.size())
      parse_fail("$.labels", "expected one label per state");
    for (std::size_t i = 0; i < jl->size(); ++i) {
      if (!(*jl)[i].is_string())
        parse_fail("$.labels[" + std::to_string(i) + "]", "expected a string");
      labels.push_back((*jl)[i].get<std::string>());
    }
  }

  if (const Json* jw = optional_member(j, "weights")) {
    if (!jw->is_array() || jw->size() != rhos.size())
      parse_fail("$.weights", "expected one weight per state");
    for (std::size_t i = 0; i < jw->size(); ++i)
      out.weights.push_back(
          number_at((*jw)[i], "$.weights[" + std::to_string(i) + "]"));
  } else {
    out.weights.assign(rhos.size(), 1.0 / static_cast<double>(rhos.size()));
  }

  out.family = StateFamily(std::move(rhos), std::move(labels));
  return out;
}

Ensemble ensemble_from_json(const Json& j, const Tolerance& tol) {
  FamilyInput in = family_from_json(j, tol);
  return Ensemble(std::move(in.weights), std::move(in.family.states));
}

GaussianChannelParams gaussian_from_json(const Json& j) {
  const int sa = int_at(member(j, "modes_in", "$"), "$.modes_in");
  const int sb = int_at(member(j, "modes_out", "$"), "$.modes_out");
  if (sa < 1 || sb < 1) parse_fail("$.modes_in", "mode counts must be >= 1");
  const Json& jk = member(j, "K", "$");
  const Json& ja = member(j, "alpha", "$");
  const Json* jl = optional_member(j, "l");

  const bool exact = entries_all_strings(jk) && entries_all_strings(ja) &&
                     (jl == nullptr || entries_all_strings(*jl));
  if (exact) {
    RationalMatrix K = rational_matrix_from_json(jk, 2 * sa, 2 * sb, "$.K");
    RationalMatrix alpha =
        rational_matrix_from_json(ja, 2 * sb, 2 * sb, "$.alpha");
    RationalMatrix l = RationalMatrix::zero(2 * sb, 1);
    if (jl != nullptr) {
      if (!jl->is_array() || static_cast<int>(jl->size()) != 2 * sb)
        parse_fail("$.l", "expected " + std::to_string(2 * sb) + " entries");
      for (int r = 0; r < 2 * sb; ++r)
        l(r, 0) = rational_entry((*jl)[static_cast<std::size_t>(r)],
                                 "$.l[" + std::to_string(r) + "]");
    }
    return make_gaussian(sa, sb, std::move(K), std::move(alpha), std::move(l));
  }

  auto real_matrix = [](const Json& src, int rows, int cols,
                        const std::string& path) {
    RealMat m(rows, cols);
    if (!src.is_array() || static_cast<int>(src.size()) != rows)
      parse_fail(path, "expected " + std::to_string(rows) + " rows");
    for (int r = 0; r < rows; ++r) {
      const Json& row = src[static_cast<std::size_t>(r)];
      const std::string rpath = path + "[" + std::to_string(r) + "]";
      if (!row.is_array() || static_cast<int>(row.size()) != cols)
        parse_fail(rpath, "expected " + std::to_string(cols) + " entries");
      for (int c = 0; c < cols; ++c) {
        const Json& e = row[static_cast<std::size_t>(c)];
        const std::string epath = rpath + "[" + std::to_string(c) + "]";
        m(r, c) = e.is_string()
                      ? rational_entry(e, epath).get_d()
                      : number_at(e, epath);
      }
    }
    return m;
  };

  RealMat K = real_matrix(jk, 2 * sa, 2 * sb, "$.K");
  RealMat alpha = real_matrix(ja, 2 * sb, 2 * sb, "$.alpha");
  RealVec l = RealVec::Zero(2 * sb);
  if (jl != nullptr) {
    if (!jl->is_array() || static_cast<int>(jl->size()) != 2 * sb)
      parse_fail("$.l", "expected " + std::to_string(2 * sb) + " entries");
    for (int r = 0; r < 2 * sb; ++r) {
      const Json& e = (*jl)[static_cast<std::size_t>(r)];
      const std::string epath = "$.l[" + std::to_string(r) + "]";
      l(r) = e.is_string() ? rational_entry(e, epath).get_d()
                           : number_at(e, epath);
    }
  }
  return snap_gaussian(sa, sb, K, alpha, l);
}

SymplecticSubspace subspace_from_json(const Json& j) {
  const int modes = int_at(member(j, "modes", "$"), "$.modes");
  if (modes < 1) parse_fail("$.modes", "modes must be >= 1");
  const Json& basis = member(j, "basis", "$");
  if (!basis.is_array()) parse_fail("$.basis", "expected an array of vectors");
  RationalMatrix gen(2 * modes, static_cast<int>(basis.size()));
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const Json& v = basis[c];
    const std::string vpath = "$.basis[" + std::to_string(c) + "]";
    if (!v.is_array() || static_cast<int>(v.size()) != 2 * modes)
      parse_fail(vpath, "expected " + std::to_string(2 * modes) + " entries");
    for (int r = 0; r < 2 * modes; ++r)
      gen(r, static_cast<int>(c)) =
          rational_entry(v[static_cast<std::size_t>(r)],
                         vpath + "[" + std::to_string(r) + "]");
  }
  return make_subspace(SymplecticSpace::standard(modes), gen);
}

DilationBlocks blocks_from_json(const Json& j) {
  DilationBlocks b;
  b.s_A = int_at(member(j, "modes_A", "$"), "$.modes_A");
  b.s_B = int_at(member(j, "modes_B", "$"), "$.modes_B");
  b.s_D = int_at(member(j, "modes_D", "$"), "$.modes_D");
  b.s_E = int_at(member(j, "modes_E", "$"), "$.modes_E");
  if (b.s_A < 0 || b.s_B < 0 || b.s_D < 0 || b.s_E < 0)
    parse_fail("$.modes_A", "mode counts must be >= 0");
  b.K = rational_matrix_from_json(member(j, "K", "$"), 2 * b.s_A, 2 * b.s_B,
                                  "$.K");
  b.L = rational_matrix_from_json(member(j, "L", "$"), 2 * b.s_A, 2 * b.s_E,
                                  "$.L");
  b.K_D = rational_matrix_from_json(member(j, "K_D", "$"), 2 * b.s_D,
                                    2 * b.s_B, "$.K_D");
  b.L_D = rational_matrix_from_json(member(j, "L_D", "$"), 2 * b.s_D,
                                    2 * b.s_E, "$.L_D");
  return b;
}

GaussianEnvironment environment_from_json(const Json& j) {
  GaussianEnvironment env;
  env.blocks = blocks_from_json(j);
  env.alpha_D = rational_matrix_from_json(
      member(j, "alpha_D", "$"), 2 * env.blocks.s_D, 2 * env.blocks.s_D,
      "$.alpha_D");
  return env;
}

ReversedFamilySpec family_spec_from_json(const Json& j) {
  const int sa = int_at(member(j, "s_A", "$"), "$.s_A");
  const int d = int_at(member(j, "d", "$"), "$.d");
  const Json& members = member(j, "members", "$");
  if (!members.is_array() || members.empty())
    parse_fail("$.members", "expected a nonempty array");
  std::vector<BoxSupport> supports;
  for (std::size_t m = 0; m < members.size(); ++m) {
    const std::string mpath = "$.members[" + std::to_string(m) + "]";
    const Json& boxes = member(members[m], "boxes", mpath);
    if (!boxes.is_array() || boxes.empty())
      parse_fail(mpath + ".boxes", "expected a nonempty array of boxes");
    std::vector<Box> parsed;
    for (std::size_t b = 0; b < boxes.size(); ++b) {
      const Json& box = boxes[b];
      const std::string bpath = mpath + ".boxes[" + std::to_string(b) + "]";
      if (!box.is_array() || static_cast<int>(box.size()) != sa)
        parse_fail(bpath, "expected " + std::to_string(sa) + " intervals");
      Box cur;
      for (std::size_t i = 0; i < box.size(); ++i) {
        const Json& iv = box[i];
        const std::string ipath = bpath + "[" + std::to_string(i) + "]";
        if (!iv.is_array() || iv.size() != 2)
          parse_fail(ipath, "expected an [lo, hi] pair");
        cur.push_back(Interval{rational_entry(iv[0], ipath + "[0]"),
                               rational_entry(iv[1], ipath + "[1]")});
      }
      parsed.push_back(std::move(cur));
    }
    supports.push_back(make_box_support(sa, std::move(parsed)));
  }
  return make_family_spec(sa, d, std::move(supports));
}

Json json_from_mat(const Mat& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json json_from_vec(const Vec& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    out.push_back(Json::array({v(i).real(), v(i).imag()}));
  return out;
}

Json json_from_rational_matrix(const RationalMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(rat_to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json json_from_subspace(const SymplecticSubspace& l) {
  Json out;
  out["modes"] = l.space.modes;
  out["dim"] = l.dim();
  Json gens = Json::array();
  for (int c = 0; c < l.basis.cols(); ++c) {
    Json v = Json::array();
    for (int r = 0; r < l.basis.rows(); ++r)
      v.push_back(rat_to_string(l.basis(r, c)));
    gens.push_back(std::move(v));
  }
  out["basis"] = std::move(gens);
  return out;
}

Json json_from_box(const Box& b) {
  Json out = Json::array();
  for (const Interval& iv : b)
    out.push_back(Json::array({rat_to_string(iv.lo), rat_to_string(iv.hi)}));
  return out;
}

Json report_meta(const std::string& verb, std::uint64_t seed,
                 std::uint64_t budget, const Tolerance& tol) {
  Json meta;
  meta["tool"] = "qrev";
  meta["verb"] = verb;
  meta["version"] = QREV_VERSION_STRING;
  meta["seed"] = seed;
  meta["budget"] = budget;
  meta["tolerances"] = Json{{"rank_eps", tol.rank_eps}, {"eq_eps", tol.eq_eps}};
  return meta;
}

Json channel_summary_json(const KrausChannel& phi) {
  Json out;
  out["dim_in"] = static_cast<int>(phi.dim_in);
  out["dim_out"] = static_cast<int>(phi.dim_out);
  out["kraus_count"] = static_cast<int>(phi.kraus.size());
  out["completeness_residual"] = phi.completeness_residual();
  return out;
}

Json reversibility_report(const KrausChannel& phi,
                          const ReversibilityIndex& idx,
                          const ZeroErrorReport& zero_error,
                          const CqRankDiagnostic& cq) {
  Json ix;
  ix["digits"] = std::to_string(idx.ri1) + std::to_string(idx.ri2);
  ix["ri1"] = idx.ri1;
  ix["ri2"] = idx.ri2;
  ix["ri2_exact"] = idx.ri2_exact;
  ix["status"] = idx.status;
  ix["best_rank_one_value"] = idx.best_rank_one_value;
  ix["best_subspace_value"] = idx.best_subspace_value;
  if (idx.repeated_diagonal)
    ix["repeated_diagonal"] =
        Json::array({idx.repeated_diagonal->first, idx.repeated_diagonal->second});
  if (idx.kernel_pair) ix["kernel_pair"] = pair_certificate_json(*idx.kernel_pair);
  if (idx.subspace_pair)
    ix["subspace_pair"] = pair_certificate_json(*idx.subspace_pair);

  Json out;
  out["channel"] = channel_summary_json(phi);
  out["index"] = std::move(ix);
  out["zero_error"] = Json{{"classical", tri_state_name(zero_error.classical)},
                           {"quantum", tri_state_name(zero_error.quantum)}};
  out["cq_rank"] = Json{{"applicable", cq.applicable},
                        {"bound", cq.bound},
                        {"max_sigma_rank", cq.max_sigma_rank},
                        {"ok", cq.ok}};
  return out;
}

Json petz_report(const KrausChannel& phi, const FamilyInput& input,
                 const ReversibilityCheck& check, const ONDPartition& partition,
                 const CriterionCheck& criterion, double threshold) {
  Json out;
  out["channel"] = channel_summary_json(phi);
  out["family_size"] = static_cast<int>(input.family.size());
  out["labels"] = input.family.labels;
  out["petz"] = Json{{"reversible", check.reversible},
                     {"residual", check.residual},
                     {"threshold", threshold},
                     {"per_state", check.per_state}};
  out["partition"] = Json{{"blocks", partition.blocks}};
  out["orthogonal_criterion"] =
      Json{{"holds", criterion.holds}, {"residual", criterion.residual}};
  out["agreement"] = check.reversible == criterion.holds;
  return out;
}

Json ond_report(const FamilyInput& input, const ONDPartition& partition) {
  Json out;
  out["dim"] = static_cast<int>(input.family.dim());
  out["family_size"] = static_cast<int>(input.family.size());
  out["labels"] = input.family.labels;
  out["blocks"] = partition.blocks;
  Json ranks = Json::array();
  for (const Mat& p : partition.projectors)
    ranks.push_back(static_cast<int>(std::lround(p.trace().real())));
  out["projector_ranks"] = std::move(ranks);
  return out;
}

Json holevo_report(const Ensemble& e, double chi_in, bool has_channel,
                   double chi_out, double gap, bool bits) {
  const double f = bits ? 1.0 / std::log(2.0) : 1.0;
  Json out;
  out["units"] = bits ? "bits" : "nats";
  out["ensemble_size"] = static_cast<int>(e.size());
  out["dim"] = static_cast<int>(e.dim());
  out["chi"] = chi_in * f;
  if (has_channel) {
    out["chi_out"] = chi_out * f;
    out["gap"] = gap * f;
  }
  return out;
}

Json gaussian_validation_json(const GaussianChannelParams& g,
                              const GaussianValidation& v) {
  Json out;
  out["modes_in"] = g.modes_in;
  out["modes_out"] = g.modes_out;
  out["K"] = json_from_rational_matrix(g.K);
  out["alpha"] = json_from_rational_matrix(g.alpha);
  out["l"] = json_from_rational_matrix(g.l);
  out["snap_distance"] = g.snap_distance;
  out["ok"] = v.ok;
  out["alpha_symmetric"] = v.alpha_symmetric;
  out["min_eig_minus"] = v.min_eig_minus;
  out["min_eig_plus"] = v.min_eig_plus;
  return out;
}

Json gaussian_reversibility_report(const GaussianChannelParams& g,
                                   const GaussianValidation& v,
                                   const ReversedSubspaceReport& rep) {
  Json ix;
  ix["digits"] = gaussian_index_name(rep.index.index);
  ix["ri1"] = rep.index.ri1;
  ix["ri2"] = rep.index.ri2;
  ix["noiseless"] = rep.index.noiseless;
  ix["kernel_kind"] = subspace_kind_name(rep.index.kernel_kind);
  ix["kernel"] = json_from_subspace(rep.index.kernel);
  ix["narrative"] = rep.index.narrative;

  Json rev;
  rev["image"] = json_from_subspace(rep.image);
  rev["image_kind"] = subspace_kind_name(rep.image_kind);
  rev["radical_dim"] = rep.radical_dim;
  rev["d"] = rep.d;
  rev["adapted_basis"] = json_from_symplectic_basis(rep.basis);
  rev["det_test_nonzero"] = rep.det_test_nonzero;
  rev["det_test_agrees"] = rep.det_test_agrees;

  Json out;
  out["validation"] = gaussian_validation_json(g, v);
  out["index"] = std::move(ix);
  out["reversed"] = std::move(rev);
  return out;
}

Json symplectic_basis_report(const SymplecticSubspace& l,
                             const SubspaceClassification& cls,
                             const SymplecticBasis& basis) {
  Json out;
  out["modes"] = l.space.modes;
  out["subspace"] = json_from_subspace(l);
  out["kind"] = subspace_kind_name(cls.kind);
  out["radical_dim"] = cls.radical.dim();
  out["basis"] = json_from_symplectic_basis(basis);
  return out;
}

Json dilation_report_json(const DilationBlocks& blocks,
                          const DilationReport& identities,
                          const MainLCheck* lemma) {
  Json out;
  out["sizes"] = Json{{"modes_A", blocks.s_A},
                      {"modes_B", blocks.s_B},
                      {"modes_D", blocks.s_D},
                      {"modes_E", blocks.s_E}};
  out["identities"] = Json{{"forms_b", identities.forms_b},
                           {"forms_e", identities.forms_e},
                           {"forms_mix", identities.forms_mix},
                           {"rows_a", identities.rows_a},
                           {"rows_d", identities.rows_d},
                           {"rows_mix", identities.rows_mix},
                           {"ok", identities.ok()}};
  if (lemma != nullptr) {
    out["kernel_range"] =
        Json{{"perp_of_ranl_equals_image", lemma->perp_of_ranl_equals_image},
             {"inverse_direction", lemma->inverse_direction},
             {"restriction_preserves_form", lemma->restriction_preserves_form},
             {"image_symplectic", lemma->image_symplectic},
             {"dim_ker_kd", lemma->dim_ker_kd},
             {"dim_ranl_perp", lemma->dim_ranl_perp},
             {"ok", lemma->ok()}};
  }
  return out;
}

Json weak_complementary_json(const WeakComplementaryParams& w) {
  Json out;
  out["L"] = json_from_rational_matrix(w.L);
  out["alpha_w"] = json_from_rational_matrix(w.alpha_w);
  out["valid"] = w.validity.ok;
  out["min_eig_minus"] = w.validity.min_eig_minus;
  out["min_eig_plus"] = w.validity.min_eig_plus;
  return out;
}

Json family_spec_report(const ReversedFamilySpec& spec,
                        const DisjointCheck& check, const int* gaussian_d) {
  Json out;
  out["s_A"] = spec.s_A;
  out["d"] = spec.d;
  out["members"] = static_cast<int>(spec.members.size());
  out["ok"] = check.ok;
  if (check.witness) {
    out["witness"] = Json{{"member_i", check.witness->member_i},
                          {"member_j", check.witness->member_j},
                          {"box_i", check.witness->box_i},
                          {"box_j", check.witness->box_j},
                          {"overlap", json_from_box(check.witness->overlap)}};
  }
  if (gaussian_d != nullptr) {
    out["gaussian_d"] = *gaussian_d;
    out["d_matches_gaussian"] = (*gaussian_d == spec.d);
  }
  return out;
}

}  // namespace qrev
