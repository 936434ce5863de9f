// Copyright (c) 2026 The btsda authors
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
#include <span>
#include <vector>

namespace btsda {

// A probability distribution restricted to the classes a mask allows.
// Invariants: probs[i] == 0 exactly where mask[i] == 0, the probabilities
// sum to 1 (within 1e-6), and argmax ties break toward the lowest class id.
struct MaskedDistribution {
  std::vector<double> probs;
  std::vector<std::uint8_t> mask;

  std::size_t argmax() const;
};

namespace nn {

// Softmax over the masked-in classes only. Invalid classes are excluded
// from the log-sum-exp and get probability exactly 0, which is how the
// "-inf score" contract is realized without producing NaN. Throws
// UsageError if the mask admits no class.
MaskedDistribution masked_softmax(std::span<const double> scores,
                                  std::span<const std::uint8_t> mask);

// Cross-entropy -log p[target] of a masked softmax without materializing
// the distribution.
double masked_cross_entropy(std::span<const double> scores,
                            std::span<const std::uint8_t> mask,
                            std::size_t target);

// d(loss)/d(scores) for masked cross-entropy: probs with 1 subtracted at
// the target; exactly 0 for masked-out classes.
void masked_cross_entropy_grad(std::span<const double> scores,
                               std::span<const std::uint8_t> mask,
                               std::size_t target, std::span<double> grad);

inline double relu(double x) { return x > 0 ? x : 0; }

}  // namespace nn
}  // namespace btsda
