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

#ifndef OCSCZ_ERROR_HPP_
#define OCSCZ_ERROR_HPP_

#include <array>
#include <stdexcept>
#include <string>

namespace ocscz {

enum class ErrorCode {
  kParameterDomain = 1,
  kConvergence,
  kNetwork,
  kNumerical,
  kIntegration,
  kDegenerateLadder,
  kSynthesisFailure,
  kPhaseInfeasible,
  kLeakage,
  kInfeasibleBias,
  kUnit,
  kUnsupportedAnalytic,
  kConfig,
  kIo,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Raised when a block is not back in |g> and phases are ill defined.
class LeakageError : public Error {
 public:
  LeakageError(const std::string& what, const std::array<double, 4>& pops)
      : Error(ErrorCode::kLeakage, what), populations(pops) {}
  std::array<double, 4> populations;
};

// Pulse optimizer could not meet its tolerance; carries the best found.
class SynthesisError : public Error {
 public:
  SynthesisError(const std::string& what, const std::array<double, 3>& res)
      : Error(ErrorCode::kSynthesisFailure, what), residuals(res) {}
  std::array<double, 3> residuals;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

inline void require(bool ok, ErrorCode code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace ocscz

#endif  // OCSCZ_ERROR_HPP_
