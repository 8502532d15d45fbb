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

#include "insdel/metric.hpp"

#include <algorithm>
#include <chrono>
#include <climits>
#include <cmath>
#include <limits>

#include "insdel/parallel.hpp"

namespace insdel {

std::size_t lcs_length_u32(std::span<const std::uint32_t> a,
                           std::span<const std::uint32_t> b) {
  if (a.empty() || b.empty()) return 0;
  std::vector<std::uint32_t> prev(b.size() + 1, 0), curr(b.size() + 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::uint32_t cand = prev[j - 1] + (a[i] == b[j - 1] ? 1u : 0u);
      curr[j] = std::max({prev[j], curr[j - 1], cand});
    }
    std::swap(prev, curr);
  }
  return prev[b.size()];
}

namespace {
void check_same_field(const Codeword& a, const Codeword& b) {
  if (!a.field || !b.field || !a.field->same_spec(*b.field))
    throw std::invalid_argument("operands belong to different fields");
}
}  // namespace

std::size_t lcs_length(const Codeword& a, const Codeword& b) {
  check_same_field(a, b);
  return lcs_length_u32(a.symbols, b.symbols);
}

int insdel_distance_u32(std::span<const std::uint32_t> a,
                        std::span<const std::uint32_t> b) {
  return static_cast<int>(a.size() + b.size() - 2 * lcs_length_u32(a, b));
}

int insdel_distance(const Codeword& a, const Codeword& b) {
  check_same_field(a, b);
  return insdel_distance_u32(a.symbols, b.symbols);
}

const char* method_name(Method m) {
  switch (m) {
    case Method::kExhaustive:
      return "exhaustive";
    case Method::kNormalized:
      return "normalized";
    case Method::kWitnessOnly:
      return "witness-only";
  }
  return "?";
}

bool DistanceReport::same_results(const DistanceReport& rhs) const {
  return field && rhs.field && field->same_spec(*rhs.field) && n == rhs.n &&
         k == rhs.k && generator == rhs.generator && d_hamming == rhs.d_hamming &&
         d_insdel == rhs.d_insdel && witness_a == rhs.witness_a &&
         witness_b == rhs.witness_b && bound_improved == rhs.bound_improved &&
         bound_singleton == rhs.bound_singleton && method == rhs.method &&
         pairs_examined == rhs.pairs_examined;
}

BoundsVerdict check_bounds(const DistanceReport& report) {
  BoundsVerdict v;
  const int d = report.d_insdel;
  v.singleton_ok = d <= report.bound_singleton;
  v.meets_singleton = d == report.bound_singleton;
  v.improved_applicable = report.n > report.k && report.k >= 2;
  v.improved_ok = !v.improved_applicable || d <= report.bound_improved;
  v.meets_improved = v.improved_applicable && d == report.bound_improved;
  return v;
}

namespace {

struct BestPair {
  int d = INT_MAX;
  std::uint64_t a = 0, b = 0;

  void offer(int dist, std::uint64_t i, std::uint64_t j) {
    if (dist < d) {
      d = dist;
      a = i;
      b = j;
    }
  }
  // lexicographic preference among equal distances
  void merge(const BestPair& rhs) {
    if (rhs.d < d || (rhs.d == d && (rhs.a < a || (rhs.a == a && rhs.b < b))))
      *this = rhs;
  }
};

// Chunk bounds over first-index i in [0, count-1) with roughly equal pair
// counts per chunk (the scan over i covers count-1-i second indices).
std::vector<std::uint64_t> triangle_bounds(std::uint64_t count, unsigned chunks) {
  if (count < 2) return {0, 0};
  const std::uint64_t imax = count - 1;
  const double total = 0.5 * static_cast<double>(count) * static_cast<double>(count - 1);
  std::vector<std::uint64_t> bounds{0};
  for (unsigned c = 1; c < chunks; ++c) {
    // solve P(x) = x*(2*count - x - 1)/2 = total*c/chunks for x
    const double target = total * c / chunks;
    const double m = static_cast<double>(count);
    double x = (2 * m - 1 - std::sqrt((2 * m - 1) * (2 * m - 1) - 8 * target)) / 2;
    std::uint64_t xi = static_cast<std::uint64_t>(x);
    xi = std::min(xi, imax);
    if (xi <= bounds.back()) xi = std::min(bounds.back() + 1, imax);
    bounds.push_back(xi);
  }
  bounds.push_back(imax);
  return bounds;
}

// Pairs inspected by the canonical sequential scan: everything up to and
// including pair (ia, ib) when the distance floor fired there, else the full
// triangle. Reported instead of a thread-timing-dependent count so identical
// runs emit identical reports.
std::uint64_t canonical_pairs(std::uint64_t count, const BestPair& best,
                              bool early_exit) {
  const std::uint64_t total = count * (count - 1) / 2;
  if (!early_exit) return total;
  const std::uint64_t before = best.a * count - best.a - best.a * (best.a - 1) / 2;
  return before + (best.b - best.a);
}

struct ExhaustiveScan {
  BestPair best;
  std::uint64_t count = 0;
  bool early = false;
};

// Batched u16 path: the whole codeword matrix is in memory and symbols fit
// 16 bits (guaranteed whenever the pair budget admits the code and q fits).
ExhaustiveScan scan_pairs_u16(const std::vector<std::uint16_t>& mat,
                              std::size_t n, std::uint64_t count,
                              unsigned threads, kernels::LcsBatchFn kern) {
  auto bounds = triangle_bounds(count, resolve_threads(threads));
  OrderedStop stop;
  const int floor_d = 2;  // distinct equal-length words are at least 2 apart

  struct Partial {
    BestPair best;
    bool hit_floor = false;
  };
  auto scan = [&](std::size_t chunk, std::uint64_t lo, std::uint64_t hi) -> Partial {
    Partial out;
    std::vector<std::uint8_t> lens(static_cast<std::size_t>(count));
    for (std::uint64_t i = lo; i < hi; ++i) {
      if (stop.may_abandon(chunk)) break;
      const std::uint64_t rows = count - i - 1;
      if (rows == 0) continue;
      kern(mat.data() + i * n, n, mat.data() + (i + 1) * n, n,
           static_cast<std::size_t>(rows), lens.data());
      for (std::uint64_t r = 0; r < rows; ++r) {
        const int d = static_cast<int>(2 * n) - 2 * lens[static_cast<std::size_t>(r)];
        if (d < out.best.d) {
          out.best = {d, i, i + 1 + r};
          if (d <= floor_d) {
            out.hit_floor = true;
            stop.signal(chunk);
            return out;
          }
        }
      }
    }
    return out;
  };
  auto partials = run_partitioned<Partial>(bounds, resolve_threads(threads), scan);

  ExhaustiveScan result;
  result.count = count;
  for (const auto& p : partials) result.best.merge(p.best);
  result.early = result.best.d <= floor_d;
  return result;
}

// Generic fallback for symbols wider than 16 bits or words longer than the
// kernel cap. Only reachable for one-dimensional codes over very large
// fields; plain scalar DP is fine there.
ExhaustiveScan scan_pairs_u32(const LinearCode& code, std::uint64_t count,
                              unsigned threads) {
  const std::size_t n = code.n();
  std::vector<std::uint32_t> mat(static_cast<std::size_t>(count) * n);
  CodewordStream stream(code);
  stream.fill_u32(mat.data(), static_cast<std::size_t>(count));

  auto bounds = triangle_bounds(count, resolve_threads(threads));
  OrderedStop stop;
  const int floor_d = 2;
  struct Partial {
    BestPair best;
  };
  auto scan = [&](std::size_t chunk, std::uint64_t lo, std::uint64_t hi) -> Partial {
    Partial out;
    for (std::uint64_t i = lo; i < hi; ++i) {
      if (stop.may_abandon(chunk)) break;
      std::span<const std::uint32_t> a{mat.data() + i * n, n};
      for (std::uint64_t j = i + 1; j < count; ++j) {
        const int d =
            insdel_distance_u32(a, {mat.data() + j * n, n});
        if (d < out.best.d) {
          out.best = {d, i, j};
          if (d <= floor_d) {
            stop.signal(chunk);
            return out;
          }
        }
      }
    }
    return out;
  };
  auto partials = run_partitioned<Partial>(bounds, resolve_threads(threads), scan);
  ExhaustiveScan result;
  result.count = count;
  for (const auto& p : partials) result.best.merge(p.best);
  result.early = result.best.d <= floor_d;
  return result;
}

Codeword codeword_of_rank(const LinearCode& code, std::uint64_t rank) {
  CodewordStream stream(code);
  stream.seek(rank);
  std::vector<std::uint32_t> buf(code.n());
  stream.fill_u32(buf.data(), 1);
  return Codeword{code.field(), std::move(buf)};
}

void fill_code_identity(DistanceReport& r, const LinearCode& code) {
  r.field = code.field();
  r.n = code.n();
  r.k = code.k();
  r.generator = code.generator();
  r.bound_improved = static_cast<int>(2 * code.n() - 2 * code.k());
  r.bound_singleton = r.bound_improved + 2;
}

}  // namespace

DistanceReport min_insdel_exhaustive(const LinearCode& code, unsigned threads,
                                     kernels::Impl kernel) {
  const auto t0 = std::chrono::steady_clock::now();
  auto count_opt = code.codeword_count();
  // 92681 is the largest M with M(M-1)/2 <= 2^32; checking it first keeps the
  // pair-count product inside 64 bits.
  if (!count_opt || *count_opt > 92681 ||
      *count_opt * (*count_opt - 1) / 2 > kPairBudget)
    throw BudgetExceeded(
        "min_insdel_exhaustive: q^k(q^k-1)/2 exceeds the 2^32 pair budget; "
        "use the witness certificate or the normalized engine");
  const std::uint64_t count = *count_opt;

  ExhaustiveScan scan;
  if (code.field()->q() <= 65536 && code.n() <= kernels::kMaxLen) {
    std::vector<std::uint16_t> mat(static_cast<std::size_t>(count) * code.n());
    CodewordStream stream(code);
    stream.fill_u16(mat.data(), static_cast<std::size_t>(count));
    scan = scan_pairs_u16(mat, code.n(), count, threads, kernels::select(kernel));
  } else {
    scan = scan_pairs_u32(code, count, threads);
  }

  DistanceReport report;
  fill_code_identity(report, code);
  report.method = Method::kExhaustive;
  report.d_insdel = scan.best.d;
  report.witness_a = codeword_of_rank(code, scan.best.a);
  report.witness_b = codeword_of_rank(code, scan.best.b);
  report.pairs_examined = canonical_pairs(count, scan.best, scan.early);
  report.d_hamming = code.min_hamming_distance(threads);
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

WitnessPair witness_pair(const LinearCode& code) {
  const std::size_t n = code.n(), k = code.k();
  if (k < 2) throw std::invalid_argument("witness_pair needs k >= 2");
  if (n <= k) throw std::invalid_argument("witness_pair needs n > k");

  std::set<std::size_t> zeros_a, zeros_b;
  for (std::size_t i = 0; i + 1 < k; ++i) zeros_a.insert(i);
  for (std::size_t i = 1; i < k; ++i) zeros_b.insert(i);
  Codeword a = code.mds_support_codeword(zeros_a, k - 1);
  Codeword b = code.mds_support_codeword(zeros_b, k);

  const std::size_t l = lcs_length(a, b);
  if (l < k)
    throw std::logic_error("witness pair has LCS below k: invariant violated");
  return WitnessPair{std::move(a), std::move(b), l};
}

DistanceReport witness_report(const LinearCode& code) {
  const auto t0 = std::chrono::steady_clock::now();
  WitnessPair w = witness_pair(code);
  DistanceReport report;
  fill_code_identity(report, code);
  report.method = Method::kWitnessOnly;
  report.d_insdel = insdel_distance(w.a, w.b);
  report.witness_a = std::move(w.a);
  report.witness_b = std::move(w.b);
  report.pairs_examined = 1;
  // the witnesses exist because the code is MDS, so d_H is pinned
  report.d_hamming = static_cast<int>(code.n() - code.k() + 1);
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

}  // namespace insdel
