// Copyright 2026 The witnesslab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WITNESSLAB_WALSH_H
#define WITNESSLAB_WALSH_H

#include <cstddef>
#include <span>

namespace witnesslab {

/// In-place unnormalized Walsh-Hadamard transform:
/// out[m] = sum_s (-1)^{popcount(m & s)} in[s]. Size must be a power of two.
template <typename T>
void walsh_hadamard(std::span<T> values) {
    for (std::size_t half = 1; half < values.size(); half <<= 1) {
        for (std::size_t block = 0; block < values.size(); block += 2 * half) {
            for (std::size_t k = block; k < block + half; k++) {
                T a = values[k];
                T b = values[k + half];
                values[k] = a + b;
                values[k + half] = a - b;
            }
        }
    }
}

}  // namespace witnesslab

#endif
