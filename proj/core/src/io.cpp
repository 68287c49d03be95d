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

#include "ncpqg/io.hpp"

#include <algorithm>
#include <map>

#include "ncpqg/errors.hpp"

namespace ncpqg {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(errc::parse_error, what); }

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) bad(std::string("missing field '") + name + "'");
  return j.at(name);
}

ColouredWord parse_word(const json& arr, const std::vector<Colour>& alphabet, const char* row) {
  if (!arr.is_array()) bad(std::string("'") + row + "' must be an array of colour names");
  ColouredWord w;
  for (const auto& item : arr) {
    if (!item.is_string()) bad(std::string("'") + row + "' must contain strings");
    const std::string sym = item.get<std::string>();
    auto it = std::find_if(alphabet.begin(), alphabet.end(),
                           [&](const Colour& c) { return c.symbol == sym; });
    if (it == alphabet.end()) bad("unknown colour '" + sym + "'");
    w.push_back(*it);
  }
  return w;
}

}  // namespace

ColouredPartition partition_from_json(const json& j, const std::vector<Colour>& alphabet) {
  ColouredWord upper = parse_word(field(j, "upper"), alphabet, "upper");
  ColouredWord lower = parse_word(field(j, "lower"), alphabet, "lower");
  const json& jblocks = field(j, "blocks");
  if (!jblocks.is_array()) bad("'blocks' must be an array");
  std::vector<Block> blocks;
  for (const auto& jb : jblocks) {
    if (!jb.is_array()) bad("each block must be an array of [row, index] pairs");
    Block b;
    for (const auto& jp : jb) {
      if (!jp.is_array() || jp.size() != 2 || !jp[0].is_string() || !jp[1].is_number_integer())
        bad("each point must be [\"u\"|\"l\", index]");
      const std::string row = jp[0].get<std::string>();
      const int index = jp[1].get<int>();
      if (row == "u")
        b.push_back(upper_point(index));
      else if (row == "l")
        b.push_back(lower_point(index));
      else
        bad("point row must be \"u\" or \"l\", got \"" + row + "\"");
    }
    blocks.push_back(std::move(b));
  }
  // The partition constructor reports structural defects naming the point.
  return ColouredPartition(std::move(upper), std::move(lower), std::move(blocks));
}

json partition_to_json(const ColouredPartition& p) {
  json j;
  j["upper"] = json::array();
  for (const Colour& c : p.upper()) j["upper"].push_back(c.symbol);
  j["lower"] = json::array();
  for (const Colour& c : p.lower()) j["lower"].push_back(c.symbol);
  j["blocks"] = json::array();
  for (const Block& b : p.blocks()) {
    json jb = json::array();
    for (const PointRef& pt : b)
      jb.push_back(json::array({pt.row == Row::Upper ? "u" : "l", pt.index}));
    j["blocks"].push_back(std::move(jb));
  }
  return j;
}

Group group_from_json(const json& j) {
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind == "cyclic") {
    const json& jo = field(j, "order");
    if (!jo.is_number_integer() || jo.get<long long>() < 0)
      bad("cyclic 'order' must be an integer >= 0 (0 = infinite cyclic)");
    return Group::cyclic(jo.get<long long>());
  }
  if (kind == "table") {
    std::vector<std::string> names = field(j, "elements").get<std::vector<std::string>>();
    std::vector<std::vector<int>> product =
        field(j, "product").get<std::vector<std::vector<int>>>();
    return Group::table(std::move(names), std::move(product));
  }
  bad("group 'kind' must be \"cyclic\" or \"table\"");
}

json group_to_json(const Group& g) {
  json j;
  if (g.is_cyclic()) {
    j["kind"] = "cyclic";
    j["order"] = g.order();
    return j;
  }
  j["kind"] = "table";
  j["elements"] = json::array();
  for (const GroupElement& e : g.elements()) j["elements"].push_back(g.name(e));
  // Reconstructing the table through the oracle keeps this loss-free.
  j["product"] = json::array();
  for (const GroupElement& a : g.elements()) {
    json row = json::array();
    for (const GroupElement& b : g.elements()) row.push_back(g.mul(a, b).value);
    j["product"].push_back(std::move(row));
  }
  return j;
}

Subgroup subgroup_from_json(const Group& g, const json& j) {
  std::vector<GroupElement> gens;
  for (const auto& name : field(j, "generators")) {
    if (!name.is_string()) bad("subgroup generators must be element names");
    gens.push_back(g.element(name.get<std::string>()));
  }
  return Subgroup::closure(g, gens);
}

GeneratingSet gens_from_json(const Group& g, const json& j) {
  std::vector<ColourMapping> mappings;
  for (const auto& jc : field(j, "colours")) {
    const std::string name = field(jc, "name").get<std::string>();
    const std::string inverse = jc.contains("inverse") ? jc.at("inverse").get<std::string>() : name;
    const std::string maps_to = field(jc, "maps_to").get<std::string>();
    mappings.push_back(ColourMapping{colour(name, inverse), maps_to});
  }
  std::map<std::string, ColouredWord> reps;
  if (j.contains("rep_words")) {
    std::vector<Colour> alphabet;
    for (const auto& m : mappings) alphabet.push_back(m.col);
    for (const auto& [element, jw] : j.at("rep_words").items())
      reps.emplace(element, parse_word(jw, alphabet, "rep_words"));
  }
  return GeneratingSet::make(g, std::move(mappings), std::move(reps));
}

CategoryPredicate category_from_json(const json& j) {
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind == "dell") return CategoryPredicate::dell(field(j, "ell").get<long long>());
  if (kind == "wreath") {
    Group g = group_from_json(field(j, "group"));
    Subgroup lambda = subgroup_from_json(g, field(j, "lambda"));
    GeneratingSet gens = gens_from_json(g, field(j, "gens"));
    return CategoryPredicate::d_gamma_lambda_s(std::move(lambda), std::move(gens));
  }
  bad("category 'kind' must be \"dell\" or \"wreath\"");
}

json fusion_term_to_json(const FusionTerm& t, const std::string& label) {
  json j;
  j["kind"] = fusion_kind_name(t.kind);
  if (t.kind != FusionTerm::Kind::Tensor) j["k"] = t.k;
  j["partition"] = partition_to_json(t.partition);
  j["label"] = label;
  return j;
}

CategoryPredicate FamilyConfig::category() const {
  if (family == Family::OPlusPlus) return CategoryPredicate::dell(ell);
  return ctx->category();
}

std::vector<Colour> FamilyConfig::alphabet() const {
  if (family == Family::OPlusPlus) return {colour("x"), colour("y")};
  return ctx->gens().colours();
}

FamilyConfig config_from_json(const json& j) {
  FamilyConfig cfg;
  const std::string fam = field(j, "family").get<std::string>();
  if (fam == "oplusplus") {
    cfg.family = Family::OPlusPlus;
    cfg.ell = field(j, "ell").get<long long>();
    if (cfg.ell < 0) bad("'ell' must be >= 0");
  } else if (fam == "wreath") {
    cfg.family = Family::Wreath;
    Group g = group_from_json(field(j, "group"));
    Subgroup lambda = subgroup_from_json(g, field(j, "lambda"));
    GeneratingSet gens = gens_from_json(g, field(j, "gens"));
    cfg.ctx.emplace(std::move(lambda), std::move(gens));
  } else {
    bad("'family' must be \"oplusplus\" or \"wreath\"");
  }
  if (j.contains("N")) {
    cfg.N = j.at("N").get<long long>();
    if (*cfg.N < 4) bad("'N' must be >= 4");
  }
  if (j.contains("budget_points")) cfg.budget_points = j.at("budget_points").get<int>();
  return cfg;
}

}  // namespace ncpqg
