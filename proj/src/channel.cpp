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

#include "insdel/channel.hpp"

#include <algorithm>
#include <climits>
#include <random>

#include "insdel/parallel.hpp"

namespace insdel {

Codeword apply_edits(const Codeword& word, const EditScript& script) {
  Codeword out = word;
  for (const EditOp& op : script) {
    if (op.kind == EditOp::Kind::kInsert) {
      if (op.pos > out.symbols.size())
        throw std::invalid_argument("insert position out of range");
      if (op.symbol >= word.field->q())
        throw std::invalid_argument("inserted symbol is not a field element");
      out.symbols.insert(out.symbols.begin() + static_cast<std::ptrdiff_t>(op.pos),
                         op.symbol);
    } else {
      if (op.pos >= out.symbols.size())
        throw std::invalid_argument("delete position out of range");
      out.symbols.erase(out.symbols.begin() + static_cast<std::ptrdiff_t>(op.pos));
    }
  }
  return out;
}

ChannelTrace random_channel(const Codeword& word, std::size_t t_ins,
                            std::size_t t_del, std::uint64_t seed) {
  if (!word.field) throw std::invalid_argument("word without a field");
  if (t_del > word.size() + t_ins)
    throw std::invalid_argument("cannot delete more symbols than will exist");
  std::mt19937_64 rng(seed);
  ChannelTrace trace;
  trace.sent = word;
  trace.seed = seed;
  std::size_t len = word.size();
  for (std::size_t i = 0; i < t_ins; ++i) {
    std::uniform_int_distribution<std::size_t> pos_dist(0, len);
    std::uniform_int_distribution<std::uint32_t> sym_dist(
        0, static_cast<std::uint32_t>(word.field->q() - 1));
    const std::size_t pos = pos_dist(rng);
    const std::uint32_t sym = sym_dist(rng);
    trace.script.push_back({EditOp::Kind::kInsert, pos, sym});
    ++len;
  }
  for (std::size_t i = 0; i < t_del; ++i) {
    std::uniform_int_distribution<std::size_t> pos_dist(0, len - 1);
    trace.script.push_back({EditOp::Kind::kDelete, pos_dist(rng), 0});
    --len;
  }
  trace.received = apply_edits(word, trace.script);
  return trace;
}

namespace {

struct DecodeBest {
  int d = INT_MAX;
  std::uint64_t rank = 0;
  std::uint64_t ties = 0;  // codewords at distance d

  void offer(int dist, std::uint64_t r) {
    if (dist < d) {
      d = dist;
      rank = r;
      ties = 1;
    } else if (dist == d) {
      ++ties;
    }
  }
  void merge(const DecodeBest& rhs) {
    if (rhs.d < d) {
      *this = rhs;
    } else if (rhs.d == d) {
      ties += rhs.ties;
      rank = std::min(rank, rhs.rank);
    }
  }
};

}  // namespace

DecodeResult ml_decode(const LinearCode& code, const Codeword& received,
                       unsigned threads, kernels::Impl kernel) {
  if (!received.field || !received.field->same_spec(*code.field()))
    throw std::invalid_argument("received word belongs to a different field");
  const std::uint64_t count = code.enum_count_or_throw("ml_decode");
  const std::size_t n = code.n();
  const std::size_t m = received.size();
  const unsigned nthreads = resolve_threads(threads);
  auto bounds = uniform_bounds(0, count, nthreads);

  const bool batched = code.field()->q() <= 65536 && n <= kernels::kMaxLen &&
                       m <= kernels::kMaxLen;
  const auto kern = batched ? kernels::select(kernel) : nullptr;
  std::vector<std::uint16_t> recv16;
  if (batched)
    for (auto s : received.symbols) recv16.push_back(static_cast<std::uint16_t>(s));

  auto scan = [&](std::size_t, std::uint64_t lo, std::uint64_t hi) -> DecodeBest {
    DecodeBest best;
    CodewordStream stream(code);
    stream.seek(lo);
    constexpr std::size_t kBlock = 512;
    if (batched) {
      std::vector<std::uint16_t> rows(kBlock * n);
      std::vector<std::uint8_t> lens(kBlock);
      for (std::uint64_t r = lo; r < hi;) {
        const std::size_t take =
            static_cast<std::size_t>(std::min<std::uint64_t>(kBlock, hi - r));
        stream.fill_u16(rows.data(), take);
        kern(recv16.data(), m, rows.data(), n, take, lens.data());
        for (std::size_t i = 0; i < take; ++i)
          best.offer(static_cast<int>(m + n - 2 * lens[i]), r + i);
        r += take;
      }
    } else {
      std::vector<std::uint32_t> row(n);
      for (std::uint64_t r = lo; r < hi; ++r) {
        stream.fill_u32(row.data(), 1);
        best.offer(insdel_distance_u32(received.symbols, row), r);
      }
    }
    return best;
  };
  auto partials = run_partitioned<DecodeBest>(bounds, nthreads, scan);
  DecodeBest best;
  for (const auto& p : partials) best.merge(p);

  DecodeResult result;
  result.best_distance = best.d;
  result.candidates = count;
  result.ambiguous = best.ties > 1;
  if (!result.ambiguous)
    result.word = code.encode(code.message_of_rank(best.rank));
  return result;
}

ExperimentResult correction_experiment(const LinearCode& code, std::size_t t,
                                       std::size_t trials, std::uint64_t seed,
                                       unsigned threads, bool keep_traces,
                                       kernels::Impl kernel) {
  ExperimentResult result;
  result.trials = trials;
  std::mt19937_64 master(seed);
  const std::uint64_t count = code.enum_count_or_throw("correction_experiment");
  std::uniform_int_distribution<std::uint64_t> rank_dist(0, count - 1);

  for (std::size_t trial = 0; trial < trials; ++trial) {
    const std::uint64_t rank = rank_dist(master);
    const std::uint64_t trial_seed = master();
    std::size_t t_ins = 0;
    for (std::size_t i = 0; i < t; ++i)
      if (master() & 1) ++t_ins;
    const std::size_t t_del = t - t_ins;

    Codeword sent = code.encode(code.message_of_rank(rank));
    ChannelTrace trace = random_channel(sent, t_ins, t_del, trial_seed);
    DecodeResult decoded = ml_decode(code, trace.received, threads, kernel);
    trace.ambiguous = decoded.ambiguous;
    trace.decoded = decoded.word;
    trace.success = !decoded.ambiguous && decoded.word && *decoded.word == sent;
    if (trace.success) ++result.successes;
    if (keep_traces) result.traces.push_back(std::move(trace));
  }
  result.success_rate =
      trials == 0 ? 1.0 : static_cast<double>(result.successes) / trials;
  return result;
}

ExperimentResult simulate_channel(const LinearCode& code, std::size_t t_ins,
                                  std::size_t t_del, std::size_t trials,
                                  std::uint64_t seed, unsigned threads,
                                  kernels::Impl kernel) {
  ExperimentResult result;
  result.trials = trials;
  std::mt19937_64 master(seed);
  const std::uint64_t count = code.enum_count_or_throw("simulate_channel");
  std::uniform_int_distribution<std::uint64_t> rank_dist(0, count - 1);

  for (std::size_t trial = 0; trial < trials; ++trial) {
    const std::uint64_t rank = rank_dist(master);
    const std::uint64_t trial_seed = master();
    Codeword sent = code.encode(code.message_of_rank(rank));
    ChannelTrace trace = random_channel(sent, t_ins, t_del, trial_seed);
    DecodeResult decoded = ml_decode(code, trace.received, threads, kernel);
    trace.ambiguous = decoded.ambiguous;
    trace.decoded = decoded.word;
    trace.success = !decoded.ambiguous && decoded.word && *decoded.word == sent;
    if (trace.success) ++result.successes;
    result.traces.push_back(std::move(trace));
  }
  result.success_rate =
      trials == 0 ? 1.0 : static_cast<double>(result.successes) / trials;
  return result;
}

}  // namespace insdel
