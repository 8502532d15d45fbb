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

#include "insdel/report_io.hpp"

#include <cstdio>
#include <sstream>

namespace insdel {

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

Method method_from_name(const std::string& s) {
  if (s == "exhaustive") return Method::kExhaustive;
  if (s == "normalized") return Method::kNormalized;
  if (s == "witness-only") return Method::kWitnessOnly;
  throw std::invalid_argument("unknown method: " + s);
}

}  // namespace

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

Json field_to_json(const Field& field) {
  return Json{{"p", field.p()}, {"e", field.e()}, {"modulus", field.modulus()}};
}

FieldPtr field_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("e"))
    throw std::invalid_argument("field descriptor needs p and e");
  const std::uint32_t p = j.at("p").get<std::uint32_t>();
  const std::uint32_t e = j.at("e").get<std::uint32_t>();
  if (j.contains("modulus"))
    return make_field(p, e, j.at("modulus").get<std::vector<std::uint32_t>>());
  return make_field(p, e);
}

Json element_to_json(const Field& field, std::uint32_t code) {
  return Json(field.to_coeffs(code));
}

std::uint32_t element_from_json(const Field& field, const Json& j) {
  return field.from_coeffs(j.get<std::vector<std::uint32_t>>());
}

Json word_to_json(const Codeword& w) {
  Json arr = Json::array();
  for (auto s : w.symbols) arr.push_back(element_to_json(*w.field, s));
  return arr;
}

Codeword word_from_json(const FieldPtr& field, const Json& j) {
  Codeword w;
  w.field = field;
  for (const auto& el : j) w.symbols.push_back(element_from_json(*field, el));
  return w;
}

Json code_to_json(const LinearCode& code) {
  Json gen = Json::array();
  for (std::size_t t = 0; t < code.k(); ++t) {
    Json row = Json::array();
    for (std::size_t j = 0; j < code.n(); ++j)
      row.push_back(element_to_json(*code.field(), code.at(t, j)));
    gen.push_back(std::move(row));
  }
  return Json{{"schema_version", kSchemaVersion},
              {"field", field_to_json(*code.field())},
              {"n", code.n()},
              {"k", code.k()},
              {"generator", std::move(gen)}};
}

LinearCode code_from_json(const Json& j) {
  FieldPtr field = field_from_json(j.at("field"));
  const std::size_t n = j.at("n").get<std::size_t>();
  const std::size_t k = j.at("k").get<std::size_t>();
  const Json& gen = j.at("generator");
  if (!gen.is_array() || gen.size() != k)
    throw std::invalid_argument("generator must have k rows");
  std::vector<std::uint32_t> rows;
  rows.reserve(n * k);
  for (const auto& row : gen) {
    if (!row.is_array() || row.size() != n)
      throw std::invalid_argument("generator row must have n entries");
    for (const auto& el : row) rows.push_back(element_from_json(*field, el));
  }
  return LinearCode(std::move(field), n, k, std::move(rows));
}

Json report_to_json(const DistanceReport& report) {
  const BoundsVerdict v = check_bounds(report);
  Json gen = Json::array();
  for (std::size_t t = 0; t < report.k; ++t) {
    Json row = Json::array();
    for (std::size_t j = 0; j < report.n; ++j)
      row.push_back(element_to_json(*report.field, report.generator[t * report.n + j]));
    gen.push_back(std::move(row));
  }
  return Json{
      {"schema_version", kSchemaVersion},
      {"method", method_name(report.method)},
      {"code",
       {{"field", field_to_json(*report.field)},
        {"n", report.n},
        {"k", report.k},
        {"generator", std::move(gen)}}},
      {"d_hamming", report.d_hamming},
      {"d_insdel", report.d_insdel},
      {"witness",
       {{"a", word_to_json(report.witness_a)}, {"b", word_to_json(report.witness_b)}}},
      {"bound_improved", report.bound_improved},
      {"bound_singleton", report.bound_singleton},
      {"bounds",
       {{"singleton_ok", v.singleton_ok},
        {"improved_applicable", v.improved_applicable},
        {"improved_ok", v.improved_ok},
        {"meets_improved", v.meets_improved},
        {"meets_singleton", v.meets_singleton}}},
      {"pairs_examined", report.pairs_examined},
      {"elapsed_seconds", report.elapsed_seconds}};
}

DistanceReport report_from_json(const Json& j) {
  DistanceReport r;
  const Json& code = j.at("code");
  r.field = field_from_json(code.at("field"));
  r.n = code.at("n").get<std::size_t>();
  r.k = code.at("k").get<std::size_t>();
  for (const auto& row : code.at("generator"))
    for (const auto& el : row) r.generator.push_back(element_from_json(*r.field, el));
  r.method = method_from_name(j.at("method").get<std::string>());
  r.d_hamming = j.at("d_hamming").get<int>();
  r.d_insdel = j.at("d_insdel").get<int>();
  r.witness_a = word_from_json(r.field, j.at("witness").at("a"));
  r.witness_b = word_from_json(r.field, j.at("witness").at("b"));
  r.bound_improved = j.at("bound_improved").get<int>();
  r.bound_singleton = j.at("bound_singleton").get<int>();
  r.pairs_examined = j.at("pairs_examined").get<std::uint64_t>();
  r.elapsed_seconds = j.value("elapsed_seconds", 0.0);
  return r;
}

std::string report_to_csv(const DistanceReport& report) {
  std::ostringstream os;
  os << "schema_version,method,p,e,n,k,d_hamming,d_insdel,bound_improved,"
        "bound_singleton,pairs_examined,elapsed_seconds\n";
  os << kSchemaVersion << ',' << method_name(report.method) << ','
     << report.field->p() << ',' << report.field->e() << ',' << report.n << ','
     << report.k << ',' << report.d_hamming << ',' << report.d_insdel << ','
     << report.bound_improved << ',' << report.bound_singleton << ','
     << report.pairs_examined << ',' << format_double(report.elapsed_seconds)
     << '\n';
  return os.str();
}

namespace {

std::string bound_status(bool ok, bool met) {
  if (!ok) return "VIOLATED";
  return met ? "met with equality" : "satisfied";
}

}  // namespace

std::string report_to_human(const DistanceReport& report) {
  const BoundsVerdict v = check_bounds(report);
  std::ostringstream os;
  os << "linear code: [" << report.n << "," << report.k << "] over GF("
     << report.field->p();
  if (report.field->e() > 1) os << "^" << report.field->e();
  os << ")";
  if (report.field->e() > 1)
    os << ", modulus " << report.field->format_modulus();
  os << "\n";
  os << "method: " << method_name(report.method) << "\n";
  os << "pairs examined: " << report.pairs_examined << "\n";
  os << "d_H(C) = " << report.d_hamming << "\n";
  if (report.method == Method::kWitnessOnly)
    os << "certified upper bound: d(C) <= " << report.d_insdel << "\n";
  else
    os << "d(C) = " << report.d_insdel << "\n";
  if (v.improved_applicable)
    os << "bound 2n-2k = " << report.bound_improved << ": "
       << bound_status(v.improved_ok, v.meets_improved) << "\n";
  else
    os << "bound 2n-2k = " << report.bound_improved << ": not applicable (k < 2)\n";
  os << "bound 2n-2k+2 = " << report.bound_singleton << ": "
     << bound_status(v.singleton_ok, v.meets_singleton) << "\n";
  return os.str();
}

Json verdict_to_json(const TheoremBVerdict& verdict) {
  Json j{
      {"schema_version", kSchemaVersion},
      {"field", field_to_json(*verdict.field)},
      {"theta", element_to_json(*verdict.field, verdict.theta)},
      {"exps", verdict.exps},
      {"cond1",
       {{"holds", verdict.cond1},
        {"top_two_sum", verdict.cond1_sum},
        {"e", verdict.field->e()}}},
      {"cond2",
       {{"holds", verdict.cond2},
        {"distinct_differences", verdict.cond2_count},
        {"required", verdict.cond2_required}}},
  };
  if (verdict.case6) {
    Json failures = Json::array();
    for (const auto& f : verdict.case6->failures)
      failures.push_back(Json{{"k_triple", f.k_triple},
                              {"r_triple", f.r_triple},
                              {"reason", f.reason}});
    j["case6"] = Json{{"evaluated", true},
                      {"certified", verdict.case6->certified},
                      {"distinct_pairs_checked", verdict.case6->distinct_pairs_checked},
                      {"coincident_checked", verdict.case6->coincident_checked},
                      {"failures", std::move(failures)}};
  } else {
    j["case6"] = Json{{"evaluated", false}};
  }
  j["claimed_distance"] =
      verdict.claimed_distance ? Json(*verdict.claimed_distance) : Json(nullptr);
  if (verdict.measured) j["measured"] = report_to_json(*verdict.measured);
  return j;
}

std::string verdict_to_csv(const TheoremBVerdict& verdict) {
  std::ostringstream os;
  os << "schema_version,p,e,n,theta,cond1,cond2,case6_certified,claimed_distance,"
        "measured_distance\n";
  os << kSchemaVersion << ',' << verdict.field->p() << ',' << verdict.field->e()
     << ',' << verdict.exps.size() << ',' << verdict.theta << ','
     << (verdict.cond1 ? 1 : 0) << ',' << (verdict.cond2 ? 1 : 0) << ',';
  if (verdict.case6)
    os << (verdict.case6->certified ? 1 : 0);
  os << ',';
  if (verdict.claimed_distance) os << *verdict.claimed_distance;
  os << ',';
  if (verdict.measured) os << verdict.measured->d_insdel;
  os << '\n';
  return os.str();
}

std::string verdict_to_human(const TheoremBVerdict& verdict) {
  std::ostringstream os;
  os << "exponents:";
  for (auto v : verdict.exps) os << " " << v;
  os << "\n";
  os << "field: GF(" << verdict.field->p() << "^" << verdict.field->e()
     << "), modulus " << verdict.field->format_modulus() << ", theta = "
     << verdict.field->format_element(verdict.theta) << "\n";
  os << "condition 1: i_{n-1} + i_n = " << verdict.cond1_sum << " < e = "
     << verdict.field->e() << ": " << (verdict.cond1 ? "holds" : "fails") << "\n";
  os << "condition 2: " << verdict.cond2_count << " distinct differences, "
     << verdict.cond2_required << " required: " << (verdict.cond2 ? "holds" : "fails")
     << "\n";
  if (verdict.case6) {
    os << "triple certificate: "
       << (verdict.case6->certified ? "certified" : "FAILED") << " (distinct pairs: "
       << verdict.case6->distinct_pairs_checked
       << ", coincident: " << verdict.case6->coincident_checked << ")\n";
    for (const auto& f : verdict.case6->failures)
      os << "  failure at k=(" << f.k_triple[0] << "," << f.k_triple[1] << ","
         << f.k_triple[2] << ") r=(" << f.r_triple[0] << "," << f.r_triple[1] << ","
         << f.r_triple[2] << "): " << f.reason << "\n";
  } else {
    os << "triple certificate: not evaluated (conditions do not both hold)\n";
  }
  if (verdict.claimed_distance)
    os << "claimed minimum insdel distance: " << *verdict.claimed_distance << "\n";
  else
    os << "claimed minimum insdel distance: none\n";
  if (verdict.measured) {
    os << "measured minimum insdel distance: " << verdict.measured->d_insdel << "\n";
    if (verdict.claimed_distance) {
      os << "verdict: "
         << (verdict.measured->d_insdel == *verdict.claimed_distance
                 ? "measured distance matches the claim"
                 : "MEASURED DISTANCE CONTRADICTS THE CLAIM")
         << "\n";
    }
  }
  return os.str();
}

Json trace_to_json(const ChannelTrace& trace) {
  Json script = Json::array();
  for (const auto& op : trace.script) {
    if (op.kind == EditOp::Kind::kInsert)
      script.push_back(Json{{"op", "insert"},
                            {"pos", op.pos},
                            {"symbol", element_to_json(*trace.sent.field, op.symbol)}});
    else
      script.push_back(Json{{"op", "delete"}, {"pos", op.pos}});
  }
  Json j{{"sent", word_to_json(trace.sent)},
         {"script", std::move(script)},
         {"received", word_to_json(trace.received)}};
  if (trace.ambiguous)
    j["decoded"] = "ambiguous";
  else if (trace.decoded)
    j["decoded"] = word_to_json(*trace.decoded);
  else
    j["decoded"] = nullptr;
  j["success"] = trace.success;
  j["seed"] = trace.seed;
  return j;
}

Json experiment_to_json(const LinearCode& code, const ExperimentResult& result,
                        std::size_t t_ins, std::size_t t_del, std::uint64_t seed) {
  Json traces = Json::array();
  for (const auto& t : result.traces) traces.push_back(trace_to_json(t));
  return Json{{"schema_version", kSchemaVersion},
              {"code", code_to_json(code)},
              {"t_ins", t_ins},
              {"t_del", t_del},
              {"trials", result.trials},
              {"seed", seed},
              {"traces", std::move(traces)},
              {"summary",
               {{"successes", result.successes},
                {"trials", result.trials},
                {"success_rate", result.success_rate}}}};
}

std::string experiment_to_csv(const ExperimentResult& result) {
  std::ostringstream os;
  os << "trial,seed,t_ins,t_del,received_length,ambiguous,success\n";
  for (std::size_t i = 0; i < result.traces.size(); ++i) {
    const auto& t = result.traces[i];
    std::size_t ins = 0, del = 0;
    for (const auto& op : t.script)
      (op.kind == EditOp::Kind::kInsert ? ins : del)++;
    os << i << ',' << t.seed << ',' << ins << ',' << del << ','
       << t.received.size() << ',' << (t.ambiguous ? 1 : 0) << ','
       << (t.success ? 1 : 0) << '\n';
  }
  return os.str();
}

std::string experiment_to_human(const ExperimentResult& result) {
  std::ostringstream os;
  for (std::size_t i = 0; i < result.traces.size(); ++i) {
    const auto& t = result.traces[i];
    os << "trial " << i << ": received length " << t.received.size() << ", "
       << (t.ambiguous ? "ambiguous" : (t.success ? "decoded correctly" : "decoded wrong"))
       << "\n";
  }
  os << "success rate: " << result.successes << "/" << result.trials << " = "
     << format_double(result.success_rate) << "\n";
  return os.str();
}

}  // namespace insdel
