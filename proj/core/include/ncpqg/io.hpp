// Copyright 2026 The ncpqg Authors
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
//
// JSON wire formats:
//   partition     {"upper": ["x","y"], "lower": [], "blocks": [[["u",1],["u",2]]]}
//   group         {"kind":"cyclic","order":4} | {"kind":"table","elements":[...],"product":[[...]]}
//   subgroup      {"generators":["g2"]}
//   generating set{"colours":[{"name":"a","inverse":"a3","maps_to":"g1"}, ...]}
//   category      {"kind":"dell","ell":2} | {"kind":"wreath","group":...,"lambda":...,"gens":...}
//   fusion term   {"kind":"square","k":1,"partition":{...},"label":"..."}

#ifndef NCPQG_IO_HPP_
#define NCPQG_IO_HPP_

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "ncpqg/category.hpp"
#include "ncpqg/fusion_engine.hpp"
#include "ncpqg/groups.hpp"
#include "ncpqg/partition.hpp"
#include "ncpqg/wreath.hpp"

namespace ncpqg {

using json = nlohmann::ordered_json;

// The alphabet supplies each symbol's inverse; unknown symbols are a
// parse_error, structural defects (double cover, gaps, bad indices) are
// reported with the offending point named.
ColouredPartition partition_from_json(const json& j, const std::vector<Colour>& alphabet);
json partition_to_json(const ColouredPartition& p);

Group group_from_json(const json& j);
json group_to_json(const Group& g);

Subgroup subgroup_from_json(const Group& g, const json& j);
GeneratingSet gens_from_json(const Group& g, const json& j);

CategoryPredicate category_from_json(const json& j);

json fusion_term_to_json(const FusionTerm& t, const std::string& label);

// ---------------------------------------------------------------------------

enum class Family { OPlusPlus, Wreath };

// Parsed CLI/file configuration for one quantum group. N is validated
// (>= 4) only by the commands that use it.
struct FamilyConfig {
  Family family = Family::OPlusPlus;
  long long ell = 0;                  // oplusplus
  std::optional<WreathContext> ctx;   // wreath
  std::optional<long long> N;
  int budget_points = kDefaultPointBudget;

  CategoryPredicate category() const;
  std::vector<Colour> alphabet() const;
};

FamilyConfig config_from_json(const json& j);

}  // namespace ncpqg

#endif  // NCPQG_IO_HPP_
