// Copyright 2026 The gaugekit authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace gaugekit {

// Stable machine-readable failure codes. The CLI maps these to named exit
// diagnostics, so the set of codes is part of the tool's interface.
enum class ErrorCode {
  DimensionMismatch,
  GaugeNotDefinite,       // gauge vanishes away from the origin
  NotInfeasible,          // witness requested for a feasible dual point
  WitnessUnavailable,
  NegativeMultiplier,
  SphereConditionViolated,
  KKTResidualTooLarge,
  RecoveryCertificateFailed,
  AnchorOutOfDomain,
  SubgradientUnavailable,
  NegativeFunctionValue,
  DimensionTooLarge,
  PenaltyTooSmall,
  InfeasibleProblem,
  UnboundedProblem,
  InvalidArgument,
  SchemaError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::GaugeNotDefinite: return "GaugeNotDefinite";
    case ErrorCode::NotInfeasible: return "NotInfeasible";
    case ErrorCode::WitnessUnavailable: return "WitnessUnavailable";
    case ErrorCode::NegativeMultiplier: return "NegativeMultiplier";
    case ErrorCode::SphereConditionViolated: return "SphereConditionViolated";
    case ErrorCode::KKTResidualTooLarge: return "KKTResidualTooLarge";
    case ErrorCode::RecoveryCertificateFailed: return "RecoveryCertificateFailed";
    case ErrorCode::AnchorOutOfDomain: return "AnchorOutOfDomain";
    case ErrorCode::SubgradientUnavailable: return "SubgradientUnavailable";
    case ErrorCode::NegativeFunctionValue: return "NegativeFunctionValue";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::PenaltyTooSmall: return "PenaltyTooSmall";
    case ErrorCode::InfeasibleProblem: return "InfeasibleProblem";
    case ErrorCode::UnboundedProblem: return "UnboundedProblem";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SchemaError: return "SchemaError";
  }
  return "UnknownError";
}

}  // namespace gaugekit
