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

#ifndef INSDEL_REPORT_IO_HPP
#define INSDEL_REPORT_IO_HPP

#include <json.hpp>
#include <string>

#include "insdel/channel.hpp"
#include "insdel/rs2opt.hpp"

namespace insdel {

/// All emitted documents carry {"schema_version": 1}. Keys keep insertion
/// order (ordered_json) so identical runs produce byte-identical output; the
/// elapsed_seconds field is the only value that varies between runs and is
/// excluded from determinism comparisons.
using Json = nlohmann::ordered_json;
inline constexpr int kSchemaVersion = 1;

// field: {"p": ..., "e": ..., "modulus": [c0, ...]}; elements are coefficient
// arrays of length e, constant term first.
Json field_to_json(const Field& field);
FieldPtr field_from_json(const Json& j);
Json element_to_json(const Field& field, std::uint32_t code);
std::uint32_t element_from_json(const Field& field, const Json& j);
Json word_to_json(const Codeword& w);
Codeword word_from_json(const FieldPtr& field, const Json& j);

// {"schema_version":1, "field": ..., "n": ..., "k": ..., "generator": [[...]]}
Json code_to_json(const LinearCode& code);
LinearCode code_from_json(const Json& j);

Json report_to_json(const DistanceReport& report);
DistanceReport report_from_json(const Json& j);
std::string report_to_csv(const DistanceReport& report);
std::string report_to_human(const DistanceReport& report);

Json verdict_to_json(const TheoremBVerdict& verdict);
std::string verdict_to_csv(const TheoremBVerdict& verdict);
std::string verdict_to_human(const TheoremBVerdict& verdict);

Json trace_to_json(const ChannelTrace& trace);
Json experiment_to_json(const LinearCode& code, const ExperimentResult& result,
                        std::size_t t_ins, std::size_t t_del, std::uint64_t seed);
std::string experiment_to_csv(const ExperimentResult& result);
std::string experiment_to_human(const ExperimentResult& result);

std::string csv_escape(const std::string& s);

}  // namespace insdel

#endif  // INSDEL_REPORT_IO_HPP
