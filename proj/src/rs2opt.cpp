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

#include "insdel/rs2opt.hpp"

#include <algorithm>
#include <chrono>
#include <climits>
#include <set>

#include "insdel/parallel.hpp"

namespace insdel {

ExponentSet::ExponentSet(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
  if (exps_.empty()) throw std::invalid_argument("exponent set must be nonempty");
  for (std::size_t i = 1; i < exps_.size(); ++i)
    if (exps_[i - 1] >= exps_[i])
      throw std::invalid_argument("exponents must be strictly increasing");
}

std::vector<std::uint32_t> ExponentSet::difference_set() const {
  std::set<std::uint32_t> diffs;
  for (std::size_t j = 1; j < exps_.size(); ++j)
    for (std::size_t k = 0; k < j; ++k) diffs.insert(exps_[j] - exps_[k]);
  return {diffs.begin(), diffs.end()};
}

bool check_condition1(const ExponentSet& exps, std::uint32_t e) {
  const std::size_t n = exps.n();
  if (n < 2) throw std::invalid_argument("condition (1) needs n >= 2");
  return static_cast<std::uint64_t>(exps.at(n - 2)) + exps.at(n - 1) < e;
}

bool check_condition2(const ExponentSet& exps) {
  const std::size_t n = exps.n();
  if (n < 2) throw std::invalid_argument("condition (2) needs n >= 2");
  return exps.difference_set().size() == n * (n - 1) / 2;
}

CorollaryCFamily corollary_c_exponents(std::uint32_t n) {
  if (n < 3) throw std::invalid_argument("the doubling family needs n >= 3");
  if (n > 31) throw std::invalid_argument("doubling exponents overflow past n = 31");
  std::vector<std::uint32_t> exps(n);
  for (std::uint32_t j = 0; j < n; ++j) exps[j] = std::uint32_t{1} << j;
  // least e with 3 * 2^(n-2) < e
  const std::uint32_t min_e = 3 * (std::uint32_t{1} << (n - 2)) + 1;
  return CorollaryCFamily{ExponentSet(std::move(exps)), min_e};
}

void SparsePolynomial::add_term(std::uint64_t exponent, std::int64_t coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(exponent);
  if (it == terms_.end()) {
    terms_.emplace(exponent, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

std::optional<std::uint64_t> SparsePolynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

std::optional<std::pair<std::uint64_t, std::int64_t>> SparsePolynomial::min_term()
    const {
  if (terms_.empty()) return std::nullopt;
  return *terms_.begin();
}

SparsePolynomial SparsePolynomial::reduced_mod(std::uint32_t p) const {
  SparsePolynomial out;
  for (const auto& [exp, c] : terms_) {
    std::int64_t r = c % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    if (r != 0) out.terms_.emplace(exp, r);
  }
  return out;
}

std::uint32_t SparsePolynomial::evaluate(const Field& field, std::uint32_t x) const {
  std::uint32_t acc = 0;
  for (const auto& [exp, c] : terms_) {
    std::int64_t r = c % static_cast<std::int64_t>(field.p());
    if (r < 0) r += field.p();
    if (r == 0) continue;
    const std::uint32_t term =
        field.mul(static_cast<std::uint32_t>(r),
                  field.pow(x, static_cast<std::int64_t>(exp)));
    acc = field.add(acc, term);
  }
  return acc;
}

LinearCode build_rs2(FieldPtr field, std::uint32_t theta, const ExponentSet& exps) {
  if (!field) throw std::invalid_argument("code without a field");
  if (exps.n() < 3)
    throw std::invalid_argument("the power-locator code needs n >= 3");
  if (exps.at(exps.n() - 1) > field->q() - 2)
    throw std::invalid_argument("exponent out of range [0, q-2]");
  if (!field->is_primitive(theta))
    throw std::invalid_argument("theta must be a primitive element");
  std::vector<std::uint32_t> locators(exps.n());
  for (std::size_t j = 0; j < exps.n(); ++j)
    locators[j] = field->pow(theta, exps.at(j));
  return LinearCode::reed_solomon(std::move(field), locators, 2);
}

namespace {

void validate_triple(const IndexTriple& t, std::size_t n, const char* which) {
  if (!(1 <= t[0] && t[0] < t[1] && t[1] < t[2] && t[2] <= n))
    throw std::invalid_argument(std::string(which) +
                                " triple must be strictly increasing in [1, n]");
}

}  // namespace

SparsePolynomial case6_polynomial(const ExponentSet& exps, const IndexTriple& k_triple,
                                  const IndexTriple& r_triple) {
  validate_triple(k_triple, exps.n(), "k");
  validate_triple(r_triple, exps.n(), "r");
  const auto i = [&](std::uint32_t pos1) -> std::uint64_t {
    return exps.at(pos1 - 1);
  };
  SparsePolynomial f;
  f.add_term(i(k_triple[0]) + i(r_triple[1]), +1);
  f.add_term(i(k_triple[1]) + i(r_triple[2]), +1);
  f.add_term(i(k_triple[2]) + i(r_triple[0]), +1);
  f.add_term(i(k_triple[0]) + i(r_triple[2]), -1);
  f.add_term(i(k_triple[1]) + i(r_triple[0]), -1);
  f.add_term(i(k_triple[2]) + i(r_triple[1]), -1);
  return f;
}

namespace {

std::vector<IndexTriple> increasing_triples(std::size_t n) {
  std::vector<IndexTriple> out;
  for (std::uint32_t a = 1; a + 2 <= n; ++a)
    for (std::uint32_t b = a + 1; b + 1 <= n; ++b)
      for (std::uint32_t c = b + 1; c <= n; ++c) out.push_back({a, b, c});
  return out;
}

}  // namespace

Case6Report verify_case6_all(const ExponentSet& exps, const Field& field,
                             std::uint32_t theta) {
  if (exps.n() < 3)
    throw std::invalid_argument("the triple certificate needs n >= 3");
  if (!field.is_primitive(theta))
    throw std::invalid_argument("theta must be a primitive element");
  Case6Report report;
  report.cond1 = check_condition1(exps, field.e());
  report.cond2 = check_condition2(exps);
  report.preconditions_ok = report.cond1 && report.cond2;
  if (!report.preconditions_ok) return report;

  const std::size_t n = exps.n();
  const std::uint32_t e = field.e();
  const std::uint64_t deg_cap =
      static_cast<std::uint64_t>(exps.at(n - 2)) + exps.at(n - 1);

  // Locator powers must be pairwise distinct; this is what certifies every
  // coincident-triple pair (a collision theta^{i_a} = theta^{i_b} is the only
  // way such a pair could defeat the certificate).
  std::vector<std::uint32_t> powers(n);
  for (std::size_t j = 0; j < n; ++j)
    powers[j] = field.pow(theta, exps.at(j));
  std::set<std::uint32_t> distinct(powers.begin(), powers.end());
  const bool powers_distinct = distinct.size() == n;

  const auto triples = increasing_triples(n);
  for (const auto& kt : triples) {
    for (const auto& rt : triples) {
      if (kt == rt) {
        ++report.coincident_checked;
        if (!powers_distinct)
          report.failures.push_back({kt, rt, "locator powers collide"});
        continue;
      }
      ++report.distinct_pairs_checked;
      const std::uint64_t low_a = static_cast<std::uint64_t>(exps.at(kt[0] - 1)) +
                                  exps.at(rt[1] - 1);
      const std::uint64_t low_e = static_cast<std::uint64_t>(exps.at(kt[1] - 1)) +
                                  exps.at(rt[0] - 1);
      const bool heads_match = kt[0] == rt[0] && kt[1] == rt[1];

      SparsePolynomial f = case6_polynomial(exps, kt, rt);
      if (f.empty()) {
        report.failures.push_back({kt, rt, "polynomial vanished over the integers"});
        continue;
      }
      SparsePolynomial fp = f.reduced_mod(field.p());
      if (fp.empty()) {
        report.failures.push_back({kt, rt, "polynomial vanished mod p"});
        continue;
      }
      if (!heads_match) {
        // the two low-exponent candidates must differ (a collision would mean
        // two equal pairwise differences) and the smaller must survive as the
        // minimum-degree term
        if (low_a == low_e) {
          report.failures.push_back({kt, rt, "minimum-degree candidates collide"});
          continue;
        }
        const auto mt = fp.min_term();
        if (mt->first != std::min(low_a, low_e)) {
          report.failures.push_back(
              {kt, rt, "minimum-degree term is not one of the two candidates"});
          continue;
        }
      }
      const std::uint64_t deg = *fp.degree();
      if (deg > deg_cap) {
        report.failures.push_back({kt, rt, "degree exceeds i_{n-1} + i_n"});
        continue;
      }
      if (deg >= e) {
        report.failures.push_back({kt, rt, "degree not below e"});
        continue;
      }
      if (fp.evaluate(field, theta) == 0) {
        report.failures.push_back({kt, rt, "polynomial vanishes at theta"});
        continue;
      }
    }
  }
  report.certified = report.failures.empty();
  return report;
}

namespace {

struct NormalizedBest {
  int d = INT_MAX;
  std::uint64_t rep = 0;     // 0 for c(0,0), 1 for c(0,1)
  std::uint64_t b_rank = 0;  // lambda * q + mu

  void merge(const NormalizedBest& rhs) {
    if (rhs.d < d || (rhs.d == d && (rhs.rep < rep ||
                                     (rhs.rep == rep && rhs.b_rank < b_rank))))
      *this = rhs;
  }
};

// Position of pair (rep, b_rank) in the canonical scan order, skipping the
// two self pairs. Used to report a deterministic pairs_examined figure when
// the distance floor shortcut fires.
std::uint64_t normalized_canonical_pairs(std::uint64_t q2, const NormalizedBest& best,
                                         bool early) {
  if (!early) return 2 * (q2 - 1);
  std::uint64_t pos = best.rep * (q2 - 1);
  if (best.rep == 0) {
    pos += best.b_rank;  // self pair is rank 0
  } else {
    pos += best.b_rank < 1 ? best.b_rank + 1 : best.b_rank;  // self pair is rank 1
  }
  return pos;
}

}  // namespace

DistanceReport min_insdel_normalized(FieldPtr field, std::uint32_t theta,
                                     const ExponentSet& exps, unsigned threads,
                                     kernels::Impl kernel) {
  const auto t0 = std::chrono::steady_clock::now();
  LinearCode code = build_rs2(field, theta, exps);
  const Field& f = *field;
  const std::uint64_t q = f.q();
  if (q > kNormalizedMaxQ)
    throw BudgetExceeded("min_insdel_normalized: q exceeds the 2^14 budget");
  const std::size_t n = exps.n();
  if (n > kernels::kMaxLen)
    throw BudgetExceeded("min_insdel_normalized: n exceeds the kernel length cap");

  const auto kern = kernels::select(kernel);
  const std::uint64_t q2 = q * q;

  // mu-scaled locator rows, shared by all scan chunks
  std::vector<std::uint16_t> murow(static_cast<std::size_t>(q) * n);
  for (std::uint64_t mu = 0; mu < q; ++mu)
    for (std::size_t j = 0; j < n; ++j)
      murow[mu * n + j] = static_cast<std::uint16_t>(
          f.mul(static_cast<std::uint32_t>(mu), code.at(1, j)));

  // the two orbit representatives: c(0,0) and c(0,1)
  std::array<std::vector<std::uint16_t>, 2> reps;
  reps[0].assign(n, 0);
  reps[1].assign(murow.begin() + n, murow.begin() + 2 * n);

  // scan units are (rep, lambda) rows of q candidates each
  const std::uint64_t units = 2 * q;
  auto bounds = uniform_bounds(0, units, resolve_threads(threads));
  OrderedStop stop;
  const int floor_d = 2;

  struct Partial {
    NormalizedBest best;
  };
  auto scan = [&](std::size_t chunk, std::uint64_t lo, std::uint64_t hi) -> Partial {
    Partial out;
    std::vector<std::uint16_t> rows(static_cast<std::size_t>(q) * n);
    std::vector<std::uint8_t> lens(static_cast<std::size_t>(q));
    std::vector<std::uint32_t> lam_add(static_cast<std::size_t>(q));
    for (std::uint64_t unit = lo; unit < hi; ++unit) {
      if (stop.may_abandon(chunk)) break;
      const std::uint64_t rep = unit / q;
      const std::uint64_t lambda = unit % q;
      // one addition table per lambda keeps general-p symbol math O(1)
      for (std::uint64_t y = 0; y < q; ++y)
        lam_add[y] = f.add(static_cast<std::uint32_t>(lambda),
                           static_cast<std::uint32_t>(y));
      for (std::uint64_t mu = 0; mu < q; ++mu)
        for (std::size_t j = 0; j < n; ++j)
          rows[mu * n + j] =
              static_cast<std::uint16_t>(lam_add[murow[mu * n + j]]);
      kern(reps[rep].data(), n, rows.data(), n, static_cast<std::size_t>(q),
           lens.data());
      const std::uint64_t self_rank = rep == 0 ? 0 : 1;
      for (std::uint64_t mu = 0; mu < q; ++mu) {
        const std::uint64_t b_rank = lambda * q + mu;
        if (b_rank == self_rank) continue;
        const int d = static_cast<int>(2 * n) -
                      2 * lens[static_cast<std::size_t>(mu)];
        if (d < out.best.d) {
          out.best = {d, rep, b_rank};
          if (d <= floor_d) {
            stop.signal(chunk);
            return out;
          }
        }
      }
    }
    return out;
  };
  auto partials =
      run_partitioned<Partial>(bounds, resolve_threads(threads), scan);
  NormalizedBest best;
  for (const auto& p : partials) best.merge(p.best);
  const bool early = best.d <= floor_d;

  DistanceReport report;
  report.field = field;
  report.n = n;
  report.k = 2;
  report.generator = code.generator();
  report.bound_improved = static_cast<int>(2 * n - 4);
  report.bound_singleton = static_cast<int>(2 * n - 2);
  report.method = Method::kNormalized;
  report.d_insdel = best.d;
  report.pairs_examined = normalized_canonical_pairs(q2, best, early);

  auto rebuild = [&](std::uint64_t rank) {
    return code.encode(code.message_of_rank(rank));
  };
  report.witness_a = rebuild(best.rep);  // rank 0 is c(0,0), rank 1 is c(0,1)
  report.witness_b = rebuild(best.b_rank);

  if (code.codeword_count() && *code.codeword_count() <= LinearCode::kEnumBudget)
    report.d_hamming = code.min_hamming_distance(threads);
  else
    report.d_hamming = static_cast<int>(n - 1);  // MDS by construction

  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

TheoremBVerdict verify_theorem_b(FieldPtr field, const ExponentSet& exps,
                                 bool check_distance, unsigned threads,
                                 std::optional<std::uint32_t> theta,
                                 kernels::Impl kernel) {
  if (!field) throw std::invalid_argument("verdict without a field");
  if (exps.n() < 3) throw std::invalid_argument("the verdict needs n >= 3");
  if (field->e() < 2) throw std::invalid_argument("the verdict needs e > 1");
  if (exps.at(exps.n() - 1) > field->q() - 2)
    throw std::invalid_argument("exponent out of range [0, q-2]");

  TheoremBVerdict v;
  v.field = field;
  v.theta = theta.value_or(field->primitive_element());
  if (!field->is_primitive(v.theta))
    throw std::invalid_argument("theta must be a primitive element");
  v.exps = exps.exps();

  const std::size_t n = exps.n();
  v.cond1_sum = exps.at(n - 2) + exps.at(n - 1);
  v.cond1 = check_condition1(exps, field->e());
  v.cond2_count = static_cast<std::uint32_t>(exps.difference_set().size());
  v.cond2_required = static_cast<std::uint32_t>(n * (n - 1) / 2);
  v.cond2 = v.cond2_count == v.cond2_required;

  if (v.cond1 && v.cond2) {
    v.claimed_distance = static_cast<int>(2 * n - 4);
    v.case6 = verify_case6_all(exps, *field, v.theta);
  }
  if (check_distance)
    v.measured = min_insdel_normalized(field, v.theta, exps, threads, kernel);
  return v;
}

}  // namespace insdel
