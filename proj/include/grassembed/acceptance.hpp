// Copyright 2026 The grassembed Authors
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

#include <cstdint>
#include <string>
#include <vector>

// The acceptance criteria, each an exact combinatorial check with a wall
// clock limit. Shared by the acceptance test binary and `selftest`.

namespace grassembed::acceptance {

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
};

struct Result {
  int id;
  std::string name;
  bool passed;
  double seconds;
  double limit_seconds;
  std::string detail;
};

const std::vector<Criterion>& criteria();
// Throws Error on an unknown id.
Result run(int id, std::uint64_t seed);
std::vector<Result> run_all(std::uint64_t seed);
// "PASS [3] name (0.12 s / 5 s): detail"
std::string format(const Result& r);

}  // namespace grassembed::acceptance
