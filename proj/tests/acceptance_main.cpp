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

// Runs the acceptance criteria and prints one PASS/FAIL line each.
//
//   grassembed_acceptance            all criteria
//   grassembed_acceptance 3 7        selected criteria
//
// Exit status is 0 only when every selected criterion passes.

#include <cstdlib>
#include <iostream>

#include "grassembed/acceptance.hpp"
#include "grassembed/catalog.hpp"

int main(int argc, char** argv) {
  namespace acc = grassembed::acceptance;
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
  if (ids.empty()) {
    for (const auto& c : acc::criteria()) ids.push_back(c.id);
  }
  bool all = true;
  for (int id : ids) {
    const auto result = acc::run(id, grassembed::catalog::kDefaultSeed);
    std::cout << acc::format(result) << std::endl;
    all = all && result.passed;
  }
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
