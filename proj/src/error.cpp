// Copyright 2026 The ocscz Authors
//
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

#include "ocscz/error.hpp"

namespace ocscz {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParameterDomain: return "parameter-domain";
    case ErrorCode::kConvergence: return "convergence";
    case ErrorCode::kNetwork: return "network";
    case ErrorCode::kNumerical: return "numerical";
    case ErrorCode::kIntegration: return "integration";
    case ErrorCode::kDegenerateLadder: return "degenerate-ladder";
    case ErrorCode::kSynthesisFailure: return "synthesis-failure";
    case ErrorCode::kPhaseInfeasible: return "phase-infeasible";
    case ErrorCode::kLeakage: return "leakage";
    case ErrorCode::kInfeasibleBias: return "infeasible-bias";
    case ErrorCode::kUnit: return "unit";
    case ErrorCode::kUnsupportedAnalytic: return "unsupported-analytic";
    case ErrorCode::kConfig: return "config";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(error_code_name(code)) + " error: " + what),
      code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace ocscz
