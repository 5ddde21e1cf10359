// Copyright 2026 The qrev developers.
//
// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>
#include <string>

#include "qrev/channels.hpp"
#include "qrev/gaussian.hpp"
#include "qrev/json_io.hpp"
#include "qrev/numerics.hpp"

using namespace qrev;

namespace {

std::string contains_or_die(const Json& j, const char* needle) {
  const std::string text = dump_json_17(j);
  REQUIRE(text.find(needle) != std::string::npos);
  return text;
}

}  // namespace

TEST_CASE("channel round trip through JSON") {
  Json j = parse_json_text(R"({
    "dim_in": 2, "dim_out": 2,
    "kraus": [
      [[1, 0], [0, 0]],
      [[0, 0], [0, 1]]
    ]
  })");
  KrausChannel deph = channel_from_json(j);
  CHECK(deph.dim_in == 2);
  CHECK(deph.kraus.size() == 2);
  CHECK(channels_equal(deph, KrausChannel::dephasing(2)));

  // Re-serialize one Kraus operator and parse it back.
  Json wrapped;
  wrapped["dim_in"] = 2;
  wrapped["dim_out"] = 2;
  wrapped["kraus"] =
      Json::array({json_from_mat(deph.kraus[0]), json_from_mat(deph.kraus[1])});
  KrausChannel again = channel_from_json(wrapped);
  CHECK(channels_equal(again, deph));
}

TEST_CASE("scalar entries are accepted as real numbers") {
  Json j = parse_json_text(R"({"dim_in": 2, "dim_out": 2, "kraus": [
    [[0.7071067811865476, 0.7071067811865476],
     [0.7071067811865476, -0.7071067811865476]]
  ]})");
  KrausChannel had = channel_from_json(j);
  CHECK(had.kraus.size() == 1);
  CHECK(std::abs(had.kraus[0](0, 1) - Complex(0.7071067811865476, 0.0)) <
        1e-15);

  // The same operator with [re, im] entries parses identically.
  Json pairs = parse_json_text(R"({"dim_in": 2, "dim_out": 2, "kraus": [
    [[[0.7071067811865476, 0], [0.7071067811865476, 0]],
     [[0.7071067811865476, 0], [-0.7071067811865476, 0]]]
  ]})");
  CHECK(channels_equal(channel_from_json(pairs), had));
}

TEST_CASE("family parsing applies uniform weights by default") {
  Json j = parse_json_text(R"({
    "dim": 2,
    "states": [
      [[1, 0], [0, 0]],
      [[0, 0], [0, 1]]
    ],
    "labels": ["ground", "excited"]
  })");
  FamilyInput input = family_from_json(j);
  CHECK(input.family.size() == 2);
  CHECK(input.family.labels[1] == "excited");
  REQUIRE(input.weights.size() == 2);
  CHECK(input.weights[0] == doctest::Approx(0.5));

  Json weighted = j;
  weighted["weights"] = Json::array({0.25, 0.75});
  CHECK(family_from_json(weighted).weights[1] == doctest::Approx(0.75));
}

TEST_CASE("parse errors name the offending path") {
  auto message_of = [](const Json& j) {
    try {
      channel_from_json(j);
    } catch (const Error& e) {
      return std::string(e.what());
    }
    return std::string();
  };

  Json missing = parse_json_text(R"({"dim_in": 2, "dim_out": 2, "ops": []})");
  CHECK(message_of(missing).find("missing key \"kraus\"") != std::string::npos);

  Json ragged = parse_json_text(
      R"({"dim_in": 2, "dim_out": 2, "kraus": [[[1, 0], [0]]]})");
  const std::string msg = message_of(ragged);
  CHECK(msg.find("$.kraus[0]") != std::string::npos);

  Json bad_entry = parse_json_text(
      R"({"dim_in": 2, "dim_out": 2, "kraus": [[[true, 0], [0, 1]]]})");
  CHECK(message_of(bad_entry).find("$.kraus[0][0][0]") != std::string::npos);

  CHECK_THROWS_AS(parse_json_text("{not json"), Error);
}

TEST_CASE("floats are emitted with 17 significant digits") {
  Json j;
  j["third"] = 1.0 / 3.0;
  j["exact"] = 2.0;
  j["tiny"] = 0.1;
  const std::string text = dump_json_17(j);
  CHECK(text.find("0.33333333333333331") != std::string::npos);
  CHECK(text.find("\"exact\": 2.0") != std::string::npos);
  CHECK(text.find("0.10000000000000001") != std::string::npos);

  // The printed value parses back to the identical double.
  Json back = parse_json_text(text);
  CHECK(back["third"].get<double>() == 1.0 / 3.0);
  CHECK(back["tiny"].get<double>() == 0.1);
}

TEST_CASE("non-finite numbers serialize as null") {
  Json j;
  j["nan"] = std::numeric_limits<double>::quiet_NaN();
  j["inf"] = std::numeric_limits<double>::infinity();
  const std::string text = dump_json_17(j);
  CHECK(text.find("\"nan\": null") != std::string::npos);
  CHECK(text.find("\"inf\": null") != std::string::npos);
}

TEST_CASE("primitive arrays stay on one line and keys are sorted") {
  Json j;
  j["zeta"] = Json::array({1.0, 2.0, 3.0});
  j["alpha"] = 1;
  j["nested"] = Json::array({Json::array({1.0, 0.0})});
  const std::string text = dump_json_17(j);
  CHECK(text.find("[1.0, 2.0, 3.0]") != std::string::npos);
  CHECK(text.find("\"alpha\"") < text.find("\"nested\""));
  CHECK(text.find("\"nested\"") < text.find("\"zeta\""));

  // Identical inputs produce identical bytes.
  CHECK(dump_json_17(j) == dump_json_17(parse_json_text(dump_json_17(j))));
}

TEST_CASE("gaussian input takes the exact path only for string entries") {
  Json exact = parse_json_text(R"({
    "modes_in": 1, "modes_out": 1,
    "K": [["1", "0"], ["0", "1"]],
    "alpha": [["1/2", "0"], ["0", "1/2"]]
  })");
  GaussianChannelParams g = gaussian_from_json(exact);
  CHECK(g.alpha(0, 0) == rat(1, 2));
  CHECK(g.snap_distance == 0.0);

  Json nearly = parse_json_text(R"({
    "modes_in": 1, "modes_out": 1,
    "K": [[1, 0], [0, 1]],
    "alpha": [[0.3333333333333333, 0], [0, 0.3333333333333333]]
  })");
  GaussianChannelParams snapped = gaussian_from_json(nearly);
  CHECK(snapped.alpha(0, 0) == rat(1, 3));
  CHECK(snapped.snap_distance > 0.0);
  CHECK(snapped.snap_distance < 1e-9);
}

TEST_CASE("rational matrices round trip as exact strings") {
  Json j = parse_json_text(R"({
    "modes_in": 1, "modes_out": 1,
    "K": [["2/3", "-1"], ["0", "5"]],
    "alpha": [["0", "0"], ["0", "0"]]
  })");
  GaussianChannelParams g = gaussian_from_json(j);
  Json out = json_from_rational_matrix(g.K);
  CHECK(out[0][0].get<std::string>() == "2/3");
  CHECK(out[0][1].get<std::string>() == "-1");
  CHECK(out[1][1].get<std::string>() == "5");

  Json rebuilt = j;
  rebuilt["K"] = out;
  GaussianChannelParams back = gaussian_from_json(rebuilt);
  CHECK(back.K(0, 0) == rat(2, 3));
}

TEST_CASE("subspace and dilation blocks parse from generator lists") {
  Json sub = parse_json_text(R"({"modes": 2, "basis": [["1","0","0","0"]]})");
  SymplecticSubspace l = subspace_from_json(sub);
  CHECK(l.space.modes == 2);
  CHECK(l.basis.cols() == 1);

  Json round = json_from_subspace(l);
  SymplecticSubspace l2 = subspace_from_json(round);
  CHECK(l2.basis(0, 0) == rat(1));

  Json blocks = parse_json_text(R"({
    "modes_A": 1, "modes_B": 1, "modes_D": 1, "modes_E": 1,
    "K":   [["1", "0"], ["0", "1"]], "L":   [["0", "0"], ["0", "0"]],
    "K_D": [["0", "0"], ["0", "0"]], "L_D": [["1", "0"], ["0", "1"]]
  })");
  DilationBlocks b = blocks_from_json(blocks);
  CHECK(b.K(0, 0) == rat(1));
  CHECK(b.L_D(0, 0) == rat(1));
}

TEST_CASE("family specs parse boxes with rational endpoints") {
  Json j = parse_json_text(R"({
    "s_A": 1, "d": 1,
    "members": [
      {"boxes": [[["0", "1"]]]},
      {"boxes": [[["3/2", "2"]]]}
    ]
  })");
  ReversedFamilySpec spec = family_spec_from_json(j);
  CHECK(spec.s_A == 1);
  CHECK(spec.members.size() == 2);
  CHECK(spec.members[1].boxes[0][0].lo == rat(3, 2));
  CHECK(check_shift_disjoint(spec).ok);

  Json box = json_from_box(spec.members[1].boxes[0]);
  CHECK(box[0][0].get<std::string>() == "3/2");
}

TEST_CASE("reports carry meta and structured sections") {
  KrausChannel deph = KrausChannel::dephasing(2);
  ReversibilityIndex idx = reversibility_index(deph, {}, 7, 16);
  Json rep = reversibility_report(deph, idx, zero_error_positivity(idx),
                                  cq_rank_diagnostic(deph));
  rep["meta"] = report_meta("ri", 7, 16, Tolerance{});

  contains_or_die(rep, "\"digits\": \"11\"");
  contains_or_die(rep, "\"classical\": \"yes\"");
  contains_or_die(rep, "\"quantum\": \"no\"");
  contains_or_die(rep, "\"verb\": \"ri\"");
  CHECK(rep["index"]["ri1"].get<int>() == 1);
  CHECK(rep["index"]["status"].get<std::string>() == "certified");
  CHECK(rep["cq_rank"]["applicable"].get<bool>() == true);
  CHECK(rep["meta"]["seed"].get<std::uint64_t>() == 7);

  // Same inputs, same bytes.
  ReversibilityIndex idx2 = reversibility_index(deph, {}, 7, 16);
  Json rep2 = reversibility_report(deph, idx2, zero_error_positivity(idx2),
                                   cq_rank_diagnostic(deph));
  rep2["meta"] = report_meta("ri", 7, 16, Tolerance{});
  CHECK(dump_json_17(rep) == dump_json_17(rep2));
}

TEST_CASE("gaussian reports expose classification and reversal data") {
  Json j = parse_json_text(R"({
    "modes_in": 1, "modes_out": 1,
    "K": [["1", "0"], ["0", "1"]],
    "alpha": [["0", "0"], ["0", "1/4"]]
  })");
  GaussianChannelParams g = gaussian_from_json(j);
  Json rep = gaussian_reversibility_report(g, validate(g),
                                           reversed_subspace_report(g));
  contains_or_die(rep, "\"digits\": \"01\"");
  CHECK(rep["index"]["kernel_kind"].get<std::string>() == "isotropic");
  CHECK(rep["reversed"]["d"].get<int>() == 1);
  CHECK(rep["validation"]["ok"].get<bool>() == true);
}
