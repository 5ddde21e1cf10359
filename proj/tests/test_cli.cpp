// Copyright 2026 The qrev developers.
//
// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string(QREV_CLI_PATH) + " " + args;
  cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string sample(const char* name) {
  return std::string(QREV_SAMPLE_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("index verb prints a certified report") {
  RunResult r = run("ri --channel " + sample("dephasing.json") + " --seed 7");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"digits\": \"11\"") != std::string::npos);
  CHECK(r.out.find("\"status\": \"certified\"") != std::string::npos);
  CHECK(r.out.find("\"seed\": 7") != std::string::npos);

  RunResult d = run("ri --channel " + sample("depolarizing.json"));
  CHECK(d.exit_code == 0);
  CHECK(d.out.find("\"digits\": \"00\"") != std::string::npos);

  RunResult i = run("ri --channel " + sample("identity.json"));
  CHECK(i.exit_code == 0);
  CHECK(i.out.find("\"digits\": \"22\"") != std::string::npos);
}

TEST_CASE("index output is byte-identical across runs") {
  const std::string cmd =
      "ri --channel " + sample("dephasing.json") + " --seed 11 --budget 32";
  RunResult a = run(cmd);
  RunResult b = run(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"budget\": 32") != std::string::npos);
}

TEST_CASE("gaussian index verb") {
  RunResult r = run("gaussian-ri --params " + sample("b1.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"digits\": \"01\"") != std::string::npos);
  CHECK(r.out.find("\"kernel_kind\": \"isotropic\"") != std::string::npos);
}

TEST_CASE("petz and ond verbs") {
  RunResult p = run("petz-check --channel " + sample("dephasing.json") +
                    " --family " + sample("two_orth.json"));
  CHECK(p.exit_code == 0);
  CHECK(p.out.find("\"reversible\": true") != std::string::npos);
  CHECK(p.out.find("\"agreement\": true") != std::string::npos);

  // The two states are orthogonal, so each sits in its own block.
  RunResult o = run("ond --family " + sample("plus_minus.json"));
  CHECK(o.exit_code == 0);
  CHECK(o.out.find("\"blocks\"") != std::string::npos);
  CHECK(o.out.find("\"projector_ranks\": [1, 1]") != std::string::npos);
}

TEST_CASE("holevo verb reports bits on request") {
  RunResult r = run("holevo --ensemble " + sample("two_orth.json") + " --bits");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"units\": \"bits\"") != std::string::npos);
  CHECK(r.out.find("\"chi\": 1.0") != std::string::npos);

  RunResult gap = run("holevo --ensemble " + sample("plus_minus.json") +
                      " --channel " + sample("dephasing.json"));
  CHECK(gap.exit_code == 0);
  CHECK(gap.out.find("\"gap\": 0.6931471805599") != std::string::npos);
}

TEST_CASE("symplectic, dilation, and family verbs") {
  RunResult sb = run("symplectic-basis --subspace " + sample("subspace_e1.json"));
  CHECK(sb.exit_code == 0);
  CHECK(sb.out.find("\"kind\": \"isotropic\"") != std::string::npos);

  RunResult dc = run("dilation-check --blocks " + sample("dilation_rotation.json"));
  CHECK(dc.exit_code == 0);
  CHECK(dc.out.find("\"ok\": true") != std::string::npos);
  CHECK(dc.out.find("\"weak_complementary\"") != std::string::npos);

  RunResult fc = run("family-check --spec " + sample("family_pair.json"));
  CHECK(fc.exit_code == 0);
  CHECK(fc.out.find("\"ok\": true") != std::string::npos);
}

TEST_CASE("validate accepts exactly one input") {
  RunResult ok = run("validate --channel " + sample("dephasing.json"));
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("\"dim_in\": 2") != std::string::npos);

  RunResult both = run("validate --channel " + sample("dephasing.json") +
                           " --family " + sample("two_orth.json"),
                       true);
  CHECK(both.exit_code == 1);

  RunResult none = run("validate", true);
  CHECK(none.exit_code == 1);
}

TEST_CASE("errors exit nonzero with a message on stderr") {
  RunResult quiet = run("ri --channel /nonexistent.json");
  CHECK(quiet.exit_code == 1);
  CHECK(quiet.out.empty());

  RunResult loud = run("ri --channel /nonexistent.json", true);
  CHECK(loud.exit_code == 1);
  CHECK_FALSE(loud.out.empty());

  RunResult usage = run("frobnicate", true);
  CHECK(usage.exit_code == 1);
}
