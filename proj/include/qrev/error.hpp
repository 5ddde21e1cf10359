// Copyright 2026 The qrev developers.
//
// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#pragma once

#include <stdexcept>
#include <string>

namespace qrev {

enum class ErrorCode {
  ParseError,
  DimensionMismatch,
  InvalidShape,
  InvalidTolerance,
  InvalidProbability,
  InvalidParameter,
  NotPSD,
  NotHermitian,
  NotAState,
  NotAChannel,
  NotOrthonormal,
  RankTooSmall,
  SnapTooCoarse,
  DilationInvalid,
  NotDisjoint,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidShape: return "InvalidShape";
    case ErrorCode::InvalidTolerance: return "InvalidTolerance";
    case ErrorCode::InvalidProbability: return "InvalidProbability";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotAState: return "NotAState";
    case ErrorCode::NotAChannel: return "NotAChannel";
    case ErrorCode::NotOrthonormal: return "NotOrthonormal";
    case ErrorCode::RankTooSmall: return "RankTooSmall";
    case ErrorCode::SnapTooCoarse: return "SnapTooCoarse";
    case ErrorCode::DilationInvalid: return "DilationInvalid";
    case ErrorCode::NotDisjoint: return "NotDisjoint";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace qrev
