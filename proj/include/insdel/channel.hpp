/* Copyright 2026 The insdel-codes Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef INSDEL_CHANNEL_HPP
#define INSDEL_CHANNEL_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "insdel/metric.hpp"

namespace insdel {

struct EditOp {
  enum class Kind { kInsert, kDelete };
  Kind kind = Kind::kDelete;
  std::size_t pos = 0;
  std::uint32_t symbol = 0;  // inserts only

  bool operator==(const EditOp& rhs) const {
    return kind == rhs.kind && pos == rhs.pos &&
           (kind == Kind::kDelete || symbol == rhs.symbol);
  }
};

/// Events apply left to right, each against the word as transformed so far;
/// positions are validated at that moment.
using EditScript = std::vector<EditOp>;

Codeword apply_edits(const Codeword& word, const EditScript& script);

/// One channel use: what was sent, what the channel did, what arrived, and
/// (after decoding) what came back. The seed is embedded for replay.
struct ChannelTrace {
  Codeword sent;
  EditScript script;
  Codeword received;
  std::optional<Codeword> decoded;  // nullopt before decoding or on a tie
  bool ambiguous = false;
  bool success = false;
  std::uint64_t seed = 0;
};

/// Applies t_ins uniformly random insertions followed by t_del uniformly
/// random deletions, positions and symbols drawn from a std::mt19937_64
/// seeded with `seed`. Requires t_del <= |word| + t_ins. Deterministic per
/// seed; the trace is returned undecoded.
ChannelTrace random_channel(const Codeword& word, std::size_t t_ins,
                            std::size_t t_del, std::uint64_t seed);

struct DecodeResult {
  std::optional<Codeword> word;  // nullopt on a tie
  bool ambiguous = false;
  int best_distance = 0;
  std::uint64_t candidates = 0;
};

/// Nearest-codeword decoding in the insdel metric over all q^k codewords.
/// Two codewords tying at the minimum distance yield "ambiguous" rather than
/// an arbitrary pick: the capability statements are about unique decoding.
/// Throws BudgetExceeded past the 2^26 enumeration budget.
DecodeResult ml_decode(const LinearCode& code, const Codeword& received,
                       unsigned threads = 0,
                       kernels::Impl kernel = kernels::Impl::kAuto);

struct ExperimentResult {
  std::size_t trials = 0;
  std::size_t successes = 0;
  double success_rate = 0.0;
  std::vector<ChannelTrace> traces;  // filled when keep_traces
};

/// Random-codeword, random-script transmission experiment: each trial splits
/// t edits into insertions/deletions by fair coin, runs the channel, decodes,
/// and counts exact recoveries. Per-trial seeds derive from `seed`, so the
/// whole experiment replays bit-identically. Whenever 2t < d(C) the rate is
/// provably 1.0.
ExperimentResult correction_experiment(const LinearCode& code, std::size_t t,
                                       std::size_t trials, std::uint64_t seed,
                                       unsigned threads = 0,
                                       bool keep_traces = false,
                                       kernels::Impl kernel = kernels::Impl::kAuto);

/// Like correction_experiment but with fixed per-trial insertion and deletion
/// counts (the `simulate` CLI contract). Traces are always kept.
ExperimentResult simulate_channel(const LinearCode& code, std::size_t t_ins,
                                  std::size_t t_del, std::size_t trials,
                                  std::uint64_t seed, unsigned threads = 0,
                                  kernels::Impl kernel = kernels::Impl::kAuto);

}  // namespace insdel

#endif  // INSDEL_CHANNEL_HPP
