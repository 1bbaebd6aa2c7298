// Copyright 2026 The forcelab Authors
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

#ifndef FORCELAB_REPORT_HPP_
#define FORCELAB_REPORT_HPP_

#include <string>

#include <json.hpp>

#include "forcelab/extendability.hpp"
#include "forcelab/forcing.hpp"
#include "forcelab/generators.hpp"
#include "forcelab/structure.hpp"
#include "forcelab/switchlab.hpp"

namespace forcelab {

// Every top-level record carries "schema": kReportSchema.
inline constexpr const char* kReportSchema = "forcelab-report/1";

nlohmann::ordered_json edge_json(const Edge& e);
nlohmann::ordered_json edges_json(std::span<const Edge> edges);

nlohmann::ordered_json to_json(const ForcingCertificate& c);
nlohmann::ordered_json to_json(const SpectrumReport& r);
nlohmann::ordered_json to_json(const ClassificationResult& r);
nlohmann::ordered_json to_json(const DeficiencyWitness& w);
nlohmann::ordered_json to_json(const Non2ExtStructure& s);
nlohmann::ordered_json to_json(const SwitchGraph& sg);
nlohmann::ordered_json to_json(const SwitchPath& p);
nlohmann::ordered_json to_json(const ContinuityResult& r);
nlohmann::ordered_json to_json(const LabeledGraph& g);

// "matching,forcing_number" header, one row per matching; a matching is its
// edges as "u-v" joined by spaces.
std::string spectrum_csv(const SpectrumReport& r);

}  // namespace forcelab

#endif  // FORCELAB_REPORT_HPP_
