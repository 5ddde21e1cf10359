// Copyright 2026 The qrev developers.
//
// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "qrev/qrev.h"

namespace {

struct CliError {
  std::string message;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{"cannot read file: " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Prints the report (if any) and maps the status to the exit code:
// 0 definite, 2 finished but not certified, 1 failure.
int finish(qrev_status status, char* report) {
  if (report != nullptr) {
    std::cout << report;
    qrev_string_free(report);
  }
  if (status == QREV_OK) return 0;
  if (status == QREV_UNKNOWN) return 2;
  std::cerr << "error: " << qrev_last_error_message() << "\n";
  return 1;
}

using ChannelPtr = std::unique_ptr<qrev_channel, decltype(&qrev_channel_free)>;
using FamilyPtr = std::unique_ptr<qrev_family, decltype(&qrev_family_free)>;
using GaussianPtr =
    std::unique_ptr<qrev_gaussian, decltype(&qrev_gaussian_free)>;

ChannelPtr load_channel(const std::string& path, qrev_status& status) {
  qrev_channel* ch = nullptr;
  status = qrev_channel_from_json(slurp(path).c_str(), &ch);
  return ChannelPtr(ch, &qrev_channel_free);
}

FamilyPtr load_family(const std::string& path, qrev_status& status) {
  qrev_family* f = nullptr;
  status = qrev_family_from_json(slurp(path).c_str(), &f);
  return FamilyPtr(f, &qrev_family_free);
}

GaussianPtr load_gaussian(const std::string& path, qrev_status& status) {
  qrev_gaussian* g = nullptr;
  status = qrev_gaussian_from_json(slurp(path).c_str(), &g);
  return GaussianPtr(g, &qrev_gaussian_free);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum channel reversibility toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(qrev_version()));

  qrev_options opts;
  qrev_options_default(&opts);
  bool bits = false;

  app.add_option("--seed", opts.seed, "base seed for randomized searches")
      ->envname("QREV_SEED");
  app.add_option("--budget", opts.budget, "restart budget for witness searches");
  app.add_option("--rank-eps", opts.rank_eps, "relative rank/support cutoff");
  app.add_option("--eq-eps", opts.eq_eps, "equality tolerance");

  std::string channel_path, family_path, gaussian_path, params_path;
  std::string ensemble_path, subspace_path, blocks_path, spec_path;

  CLI::App* validate =
      app.add_subcommand("validate", "parse and validate one input file");
  validate->add_option("--channel", channel_path, "Kraus channel JSON");
  validate->add_option("--family", family_path, "state family JSON");
  validate->add_option("--gaussian", gaussian_path, "Gaussian parameters JSON");

  CLI::App* ri = app.add_subcommand(
      "ri", "two-digit reversibility index with certificates");
  ri->add_option("--channel", channel_path, "Kraus channel JSON")->required();

  CLI::App* gri = app.add_subcommand(
      "gaussian-ri", "index classification of a Gaussian channel");
  gri->add_option("--params", params_path, "Gaussian parameters JSON")
      ->required();

  CLI::App* petz = app.add_subcommand(
      "petz-check", "recovery test for a family plus the support criterion");
  petz->add_option("--channel", channel_path, "Kraus channel JSON")->required();
  petz->add_option("--family", family_path, "state family JSON")->required();

  CLI::App* ond = app.add_subcommand(
      "ond", "partition a family into overlapping-support blocks");
  ond->add_option("--family", family_path, "state family JSON")->required();

  CLI::App* hol = app.add_subcommand(
      "holevo", "Holevo quantity of an ensemble, optionally through a channel");
  hol->add_option("--ensemble", ensemble_path, "ensemble JSON")->required();
  hol->add_option("--channel", channel_path, "Kraus channel JSON");
  hol->add_flag("--bits", bits, "report in bits instead of nats");

  CLI::App* sb = app.add_subcommand(
      "symplectic-basis", "adapted symplectic basis through a subspace");
  sb->add_option("--subspace", subspace_path, "subspace JSON")->required();

  CLI::App* dc = app.add_subcommand(
      "dilation-check", "symplectic dilation identities and kernel/range law");
  dc->add_option("--blocks", blocks_path, "dilation blocks JSON")->required();

  CLI::App* fc = app.add_subcommand(
      "family-check", "shift-disjointness of a reversed-family support spec");
  fc->add_option("--spec", spec_path, "family spec JSON")->required();
  fc->add_option("--gaussian", gaussian_path,
                 "Gaussian parameters JSON for the d cross-check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  opts.bits = bits ? 1 : 0;

  try {
    qrev_status status = QREV_OK;
    char* report = nullptr;

    if (validate->parsed()) {
      const int given = (channel_path.empty() ? 0 : 1) +
                        (family_path.empty() ? 0 : 1) +
                        (gaussian_path.empty() ? 0 : 1);
      if (given != 1) {
        std::cerr << "error: validate needs exactly one of --channel, "
                     "--family, --gaussian\n";
        return 1;
      }
      if (!channel_path.empty()) {
        ChannelPtr ch = load_channel(channel_path, status);
        if (status != QREV_OK) return finish(status, nullptr);
        status = qrev_channel_validate(ch.get(), &opts, &report);
      } else if (!family_path.empty()) {
        FamilyPtr f = load_family(family_path, status);
        if (status != QREV_OK) return finish(status, nullptr);
        status = qrev_family_validate(f.get(), &opts, &report);
      } else {
        GaussianPtr g = load_gaussian(gaussian_path, status);
        if (status != QREV_OK) return finish(status, nullptr);
        status = qrev_gaussian_validate(g.get(), &opts, &report);
      }
      return finish(status, report);
    }

    if (ri->parsed()) {
      ChannelPtr ch = load_channel(channel_path, status);
      if (status != QREV_OK) return finish(status, nullptr);
      status = qrev_reversibility_index(ch.get(), &opts, &report);
      return finish(status, report);
    }

    if (gri->parsed()) {
      GaussianPtr g = load_gaussian(params_path, status);
      if (status != QREV_OK) return finish(status, nullptr);
      status = qrev_gaussian_reversibility_index(g.get(), &opts, &report);
      return finish(status, report);
    }

    if (petz->parsed()) {
      ChannelPtr ch = load_channel(channel_path, status);
      if (status != QREV_OK) return finish(status, nullptr);
      FamilyPtr f = load_family(family_path, status);
      if (status != QREV_OK) return finish(status, nullptr);
      status = qrev_petz_check(ch.get(), f.get(), &opts, &report);
      return finish(status, report);
    }

    if (ond->parsed()) {
      FamilyPtr f = load_family(family_path, status);
      if (status != QREV_OK) return finish(status, nullptr);
      status = qrev_ond_decompose(f.get(), &opts, &report);
      return finish(status, report);
    }

    if (hol->parsed()) {
      FamilyPtr f = load_family(ensemble_path, status);
      if (status != QREV_OK) return finish(status, nullptr);
      ChannelPtr ch(nullptr, &qrev_channel_free);
      if (!channel_path.empty()) {
        ch = load_channel(channel_path, status);
        if (status != QREV_OK) return finish(status, nullptr);
      }
      status = qrev_holevo(f.get(), ch.get(), &opts, &report);
      return finish(status, report);
    }

    if (sb->parsed()) {
      status = qrev_symplectic_basis(slurp(subspace_path).c_str(), &opts,
                                     &report);
      return finish(status, report);
    }

    if (dc->parsed()) {
      status = qrev_dilation_check(slurp(blocks_path).c_str(), &opts, &report);
      return finish(status, report);
    }

    if (fc->parsed()) {
      const std::string spec_text = slurp(spec_path);
      std::string gaussian_text;
      if (!gaussian_path.empty()) gaussian_text = slurp(gaussian_path);
      status = qrev_family_spec_check(
          spec_text.c_str(),
          gaussian_path.empty() ? nullptr : gaussian_text.c_str(), &opts,
          &report);
      return finish(status, report);
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return 1;
  }
  return 0;
}
