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

// Command-line frontend. Exit codes: 0 success, 1 verification failure (a
// checked claim or bound does not hold), 2 usage, budget or input errors.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "insdel/channel.hpp"
#include "insdel/report_io.hpp"
#include "insdel/rs2opt.hpp"

namespace {

using insdel::Json;

struct GlobalOpts {
  std::string format = "json";
  unsigned threads = 0;
  std::string kernel = "auto";
};

std::vector<std::uint32_t> parse_u32_list(const std::string& csv) {
  std::vector<std::uint32_t> out;
  std::string item;
  std::istringstream is(csv);
  while (std::getline(is, item, ',')) {
    if (item.empty()) continue;
    out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
  }
  if (out.empty()) throw std::invalid_argument("empty integer list: " + csv);
  return out;
}

void emit(const std::string& text) { std::cout << text << std::flush; }

void emit_json(const Json& j) { std::cout << j.dump(2) << "\n" << std::flush; }

insdel::FieldPtr field_from_args(std::uint32_t p, std::uint32_t e,
                                 const std::string& modulus_csv) {
  if (modulus_csv.empty()) return insdel::make_field(p, e);
  return insdel::make_field(p, e, parse_u32_list(modulus_csv));
}

insdel::LinearCode load_code(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open code descriptor: " + path);
  Json j = Json::parse(in);
  return insdel::code_from_json(j);
}

int cmd_field_info(const GlobalOpts& g, std::uint32_t p, std::uint32_t e,
                   const std::string& modulus_csv) {
  auto field = field_from_args(p, e, modulus_csv);
  const std::uint32_t theta = field->primitive_element();
  if (g.format == "json") {
    emit_json(Json{{"schema_version", insdel::kSchemaVersion},
                   {"field", insdel::field_to_json(*field)},
                   {"q", field->q()},
                   {"primitive", insdel::element_to_json(*field, theta)},
                   {"primitive_order", field->q() - 1}});
  } else if (g.format == "csv") {
    std::ostringstream os;
    os << "schema_version,p,e,q,modulus,primitive\n";
    os << insdel::kSchemaVersion << ',' << field->p() << ',' << field->e() << ','
       << field->q() << ',' << insdel::csv_escape(field->format_modulus()) << ','
       << insdel::csv_escape(field->format_element(theta)) << '\n';
    emit(os.str());
  } else {
    std::ostringstream os;
    os << "GF(" << field->p();
    if (field->e() > 1) os << "^" << field->e();
    os << "): " << field->q() << " elements, modulus " << field->format_modulus()
       << ", primitive element " << field->format_element(theta) << " (order "
       << field->q() - 1 << ")\n";
    emit(os.str());
  }
  return 0;
}

int cmd_construct_rs(std::uint32_t p, std::uint32_t e, const std::string& modulus_csv,
                     std::size_t k, const std::string& locators_csv,
                     const std::string& out_path) {
  auto field = field_from_args(p, e, modulus_csv);
  auto locators = parse_u32_list(locators_csv);
  auto code = insdel::LinearCode::reed_solomon(field, locators, k);
  const Json j = insdel::code_to_json(code);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write " + out_path);
    out << j.dump(2) << "\n";
  }
  emit_json(j);
  return 0;
}

int emit_report(const GlobalOpts& g, const insdel::DistanceReport& report) {
  if (g.format == "json")
    emit_json(insdel::report_to_json(report));
  else if (g.format == "csv")
    emit(insdel::report_to_csv(report));
  else
    emit(insdel::report_to_human(report));
  return insdel::check_bounds(report).violation() ? 1 : 0;
}

int cmd_analyze(const GlobalOpts& g, const std::string& code_path,
                const std::string& method) {
  auto code = load_code(code_path);
  const auto kernel = insdel::kernels::impl_from_name(g.kernel.c_str());
  insdel::DistanceReport report;
  if (method == "exhaustive")
    report = insdel::min_insdel_exhaustive(code, g.threads, kernel);
  else
    report = insdel::witness_report(code);
  return emit_report(g, report);
}

// exit 1 only when a claim that should hold fails: conditions both true but
// the certificate or the measured distance contradicts them
int verdict_exit(const insdel::TheoremBVerdict& v) {
  if (!(v.cond1 && v.cond2)) return 0;
  if (v.case6 && !v.case6->certified) return 1;
  if (v.measured && v.claimed_distance &&
      v.measured->d_insdel != *v.claimed_distance)
    return 1;
  return 0;
}

int emit_verdict(const GlobalOpts& g, const insdel::TheoremBVerdict& verdict,
                 std::optional<Json> extra = std::nullopt) {
  if (g.format == "json") {
    Json j = insdel::verdict_to_json(verdict);
    if (extra)
      for (auto& [key, value] : extra->items()) j[key] = value;
    emit_json(j);
  } else if (g.format == "csv") {
    emit(insdel::verdict_to_csv(verdict));
  } else {
    emit(insdel::verdict_to_human(verdict));
  }
  return verdict_exit(verdict);
}

int cmd_verify_theorem_b(const GlobalOpts& g, const std::string& exps_csv,
                         std::uint32_t p, std::uint32_t e,
                         const std::string& modulus_csv, bool check_distance,
                         std::optional<std::uint32_t> theta) {
  auto field = field_from_args(p, e, modulus_csv);
  insdel::ExponentSet exps(parse_u32_list(exps_csv));
  const auto kernel = insdel::kernels::impl_from_name(g.kernel.c_str());
  auto verdict = insdel::verify_theorem_b(field, exps, check_distance, g.threads,
                                          theta, kernel);
  return emit_verdict(g, verdict);
}

int cmd_corollary_c(const GlobalOpts& g, std::uint32_t n, std::uint32_t p,
                    std::optional<std::uint32_t> e_opt) {
  auto family = insdel::corollary_c_exponents(n);
  const std::uint32_t e = e_opt.value_or(family.min_e);
  if (e < family.min_e)
    throw std::invalid_argument("e must be at least 3*2^(n-2)+1 = " +
                                std::to_string(family.min_e));
  auto field = insdel::make_field(p, e);
  const auto kernel = insdel::kernels::impl_from_name(g.kernel.c_str());
  auto verdict = insdel::verify_theorem_b(field, family.exps, /*check_distance=*/true,
                                          g.threads, std::nullopt, kernel);
  Json extra{{"n", n}, {"min_e", family.min_e}};
  return emit_verdict(g, verdict, extra);
}

int cmd_simulate(const GlobalOpts& g, const std::string& code_path, std::size_t t_ins,
                 std::size_t t_del, std::size_t trials, std::uint64_t seed) {
  auto code = load_code(code_path);
  const auto kernel = insdel::kernels::impl_from_name(g.kernel.c_str());
  auto result =
      insdel::simulate_channel(code, t_ins, t_del, trials, seed, g.threads, kernel);
  if (g.format == "json")
    emit_json(insdel::experiment_to_json(code, result, t_ins, t_del, seed));
  else if (g.format == "csv")
    emit(insdel::experiment_to_csv(result));
  else
    emit(insdel::experiment_to_human(result));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"linear and Reed-Solomon insdel code toolkit"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "human"}));
  app.add_option("--threads", g.threads, "parallelism degree (0 = auto)");
  app.add_option("--kernel", g.kernel, "LCS kernel selection")
      ->check(CLI::IsMember({"auto", "scalar", "avx2", "neon"}));

  // field info
  auto* field_cmd = app.add_subcommand("field", "finite field utilities");
  field_cmd->fallthrough();
  auto* info = field_cmd->add_subcommand("info", "describe GF(p^e)");
  info->fallthrough();
  std::uint32_t fi_p = 0, fi_e = 1;
  std::string fi_modulus;
  info->add_option("--p", fi_p, "characteristic (prime)")->required();
  info->add_option("--e", fi_e, "extension degree");
  info->add_option("--modulus", fi_modulus, "modulus coefficients, constant first");

  // construct rs
  auto* construct = app.add_subcommand("construct", "build code descriptors");
  construct->fallthrough();
  auto* rs = construct->add_subcommand("rs", "Reed-Solomon code (emits JSON)");
  rs->fallthrough();
  std::uint32_t rs_p = 0, rs_e = 1;
  std::string rs_modulus, rs_locators, rs_out;
  std::size_t rs_k = 0;
  rs->add_option("--p", rs_p)->required();
  rs->add_option("--e", rs_e);
  rs->add_option("--modulus", rs_modulus);
  rs->add_option("--k", rs_k, "dimension")->required();
  rs->add_option("--locators", rs_locators,
                 "comma-separated element codes (sum c_t p^t)")
      ->required();
  rs->add_option("--out", rs_out, "also write the descriptor to this file");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "minimum insdel distance report");
  analyze->fallthrough();
  std::string an_code, an_method = "exhaustive";
  analyze->add_option("--code", an_code, "code descriptor JSON file")->required();
  analyze->add_option("--method", an_method)
      ->check(CLI::IsMember({"exhaustive", "witness"}));

  // verify-theorem-b
  auto* vtb = app.add_subcommand(
      "verify-theorem-b", "check the two sufficient conditions and certificates");
  vtb->fallthrough();
  std::string tb_exps, tb_modulus;
  std::uint32_t tb_p = 0, tb_e = 0;
  bool tb_check_distance = false;
  std::optional<std::uint32_t> tb_theta;
  vtb->add_option("--exps", tb_exps, "exponents, e.g. 1,2,4")->required();
  vtb->add_option("--p", tb_p)->required();
  vtb->add_option("--e", tb_e)->required();
  vtb->add_option("--modulus", tb_modulus);
  vtb->add_option("--theta", tb_theta, "primitive element code (default: first)");
  vtb->add_flag("--check-distance", tb_check_distance,
                "also run the normalized distance search");

  // corollary-c
  auto* cc = app.add_subcommand("corollary-c",
                                "doubling-exponent family with measured distance");
  cc->fallthrough();
  std::uint32_t cc_n = 0, cc_p = 0;
  std::optional<std::uint32_t> cc_e;
  cc->add_option("--n", cc_n, "code length >= 3")->required();
  cc->add_option("--p", cc_p, "characteristic (prime)")->required();
  cc->add_option("--e", cc_e, "extension degree (default: least admissible)");

  // simulate
  auto* sim = app.add_subcommand("simulate", "insertion/deletion channel trials");
  sim->fallthrough();
  std::string sim_code;
  std::size_t sim_tins = 0, sim_tdel = 0, sim_trials = 10;
  std::uint64_t sim_seed = 1;
  sim->add_option("--code", sim_code)->required();
  sim->add_option("--t-ins", sim_tins, "insertions per trial");
  sim->add_option("--t-del", sim_tdel, "deletions per trial");
  sim->add_option("--trials", sim_trials);
  sim->add_option("--seed", sim_seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    insdel::kernels::set_default_impl(insdel::kernels::impl_from_name(g.kernel.c_str()));
    if (info->parsed()) return cmd_field_info(g, fi_p, fi_e, fi_modulus);
    if (field_cmd->parsed()) {
      std::cerr << "field: missing subcommand (try 'field info')\n";
      return 2;
    }
    if (rs->parsed())
      return cmd_construct_rs(rs_p, rs_e, rs_modulus, rs_k, rs_locators, rs_out);
    if (construct->parsed()) {
      std::cerr << "construct: missing subcommand (try 'construct rs')\n";
      return 2;
    }
    if (analyze->parsed()) return cmd_analyze(g, an_code, an_method);
    if (vtb->parsed())
      return cmd_verify_theorem_b(g, tb_exps, tb_p, tb_e, tb_modulus,
                                  tb_check_distance, tb_theta);
    if (cc->parsed()) return cmd_corollary_c(g, cc_n, cc_p, cc_e);
    if (sim->parsed())
      return cmd_simulate(g, sim_code, sim_tins, sim_tdel, sim_trials, sim_seed);
  } catch (const insdel::BudgetExceeded& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
