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

#include <cstddef>

// Thread control for the OpenMP kernels. Every parallel kernel in the
// library has a `_serial` twin computing the same result in a fixed order;
// the twins are kept for the test suite and the benchmark.

namespace grassembed {

// Caps the threads used by parallel kernels; 0 restores the OpenMP default.
void set_max_threads(int threads);
int max_threads();

}  // namespace grassembed
