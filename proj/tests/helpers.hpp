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

#ifndef NCPQG_TESTS_HELPERS_HPP_
#define NCPQG_TESTS_HELPERS_HPP_

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "ncpqg/groups.hpp"
#include "ncpqg/partition.hpp"
#include "ncpqg/wreath.hpp"

namespace ncpqg::testing {

// Word of self-inverse one-letter colours, one per character.
inline ColouredWord word(const std::string& letters) {
  ColouredWord w;
  for (char c : letters) w.push_back(colour(std::string(1, c)));
  return w;
}

inline std::vector<ColouredWord> words_over(const std::string& letters, int max_len) {
  std::vector<ColouredWord> out{ColouredWord{}};
  std::vector<ColouredWord> frontier{ColouredWord{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<ColouredWord> next;
    for (const auto& w : frontier)
      for (char c : letters) {
        ColouredWord nw = w;
        nw.push_back(colour(std::string(1, c)));
        next.push_back(nw);
        out.push_back(std::move(nw));
      }
    frontier = std::move(next);
  }
  return out;
}

template <typename T>
std::vector<T> sorted(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Z4 with the symmetric generating set {g1, g3}; colours a <-> a3.
inline WreathContext z4_context(const std::vector<std::string>& lambda_gens) {
  Group g = Group::cyclic(4);
  std::vector<GroupElement> gens;
  for (const auto& name : lambda_gens) gens.push_back(g.element(name));
  Subgroup lambda = Subgroup::closure(g, gens);
  GeneratingSet s = GeneratingSet::make(
      g, {ColourMapping{colour("a", "a3"), "g1"}, ColourMapping{colour("a3", "a"), "g3"}});
  return WreathContext(std::move(lambda), std::move(s));
}

// Z2 with the single self-inverse colour a -> g1.
inline WreathContext z2_context(const std::vector<std::string>& lambda_gens) {
  Group g = Group::cyclic(2);
  std::vector<GroupElement> gens;
  for (const auto& name : lambda_gens) gens.push_back(g.element(name));
  Subgroup lambda = Subgroup::closure(g, gens);
  GeneratingSet s = GeneratingSet::make(g, {ColourMapping{colour("a"), "g1"}});
  return WreathContext(std::move(lambda), std::move(s));
}

// The trivial group with one colour, i.e. the plain S_N^+ situation.
inline WreathContext trivial_context() {
  Group g = Group::cyclic(1);
  Subgroup lambda = Subgroup::trivial(g);
  GeneratingSet s = GeneratingSet::make(g, {ColourMapping{colour("a"), "e"}});
  return WreathContext(std::move(lambda), std::move(s));
}

// Z2 x Z2 as a multiplication table with the diagonal Z2 subgroup.
inline Group z2z2_group() {
  // e, a, b, ab
  return Group::table({"e", "a", "b", "ab"}, {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
}

inline WreathContext z2z2_diagonal_context() {
  Group g = z2z2_group();
  Subgroup lambda = Subgroup::closure(g, {g.element("ab")});
  GeneratingSet s = GeneratingSet::make(
      g, {ColourMapping{colour("a"), "a"}, ColourMapping{colour("b"), "b"}});
  return WreathContext(std::move(lambda), std::move(s));
}

}  // namespace ncpqg::testing

#endif  // NCPQG_TESTS_HELPERS_HPP_
