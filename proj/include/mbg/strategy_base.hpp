// Copyright 2026 The mbg Authors
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

#pragma once

#include <string>
#include <vector>

#include "mbg/engine.hpp"

namespace mbg {

// Common plumbing for the paper strategies: named invariant checks that are
// logged always and fatal only in strict mode. Strategies run strict in
// Maker-Breaker games; in strong games the checks run in observer mode
// because the opponent is not obligated to behave like Breaker.
class StrategyBase : public Strategy {
 public:
  explicit StrategyBase(bool strict) : strict_(strict) {}

  bool strict() const { return strict_; }

 protected:
  bool require(InvariantLog& log, const std::string& check, bool ok,
               const std::string& detail = {}) {
    log.check(check, ok);
    if (!ok && strict_) {
      throw StrategyFailure(name(), detail.empty() ? check : check + ": " + detail);
    }
    return ok;
  }

  [[noreturn]] void fail(const std::string& detail) {
    throw StrategyFailure(name(), detail);
  }

  bool strict_;
};

}  // namespace mbg
