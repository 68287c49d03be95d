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
// Brute-force diagrammatic representation theory: enumerate projective
// partitions, decompose tensor products into tensor / square / boxvert
// terms, decide equivalence of projectives, and solve for dimensions from
// word-counting equations. This is the oracle the closed-form fusion rules
// are checked against.

#ifndef NCPQG_FUSION_ENGINE_HPP_
#define NCPQG_FUSION_ENGINE_HPP_

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ncpqg/category.hpp"
#include "ncpqg/partition.hpp"

namespace ncpqg {

inline constexpr int kDefaultPointBudget = 12;

struct ProjectiveClass {
  ColouredPartition representative;
  ColouredWord word;
};

struct FusionTerm {
  enum class Kind { Tensor, Square, Boxvert };
  Kind kind;
  int k = 0;  // contraction size; 0 for the tensor term
  ColouredPartition partition;
};

std::string fusion_kind_name(FusionTerm::Kind k);

// Every noncrossing set partition of the boundary of (upper, lower), in a
// deterministic order.
std::vector<ColouredPartition> all_noncrossing_partitions(const ColouredWord& upper,
                                                          const ColouredWord& lower);

// All noncrossing projective members of C on (w, w), sorted canonically.
// Throws budget_exceeded when 2|w| exceeds the point budget.
std::vector<ProjectiveClass> enumerate_projectives(const ColouredWord& w,
                                                   const CategoryPredicate& C,
                                                   int budget_points = kDefaultPointBudget);

// The multiset {tensor(p,q)} + {square^k, boxvert^k : 1 <= k <= min(t)},
// filtered by membership in C. Both operands must be members.
std::vector<FusionTerm> tensor_decompose(const ColouredPartition& p, const ColouredPartition& q,
                                         const CategoryPredicate& C);

enum class EquivalenceMode { Candidate, Exhaustive };

// The direct-surgery implementer candidate on (word(p), word(q)): p's
// upper-row blocks, q's upper-row blocks mirrored to the lower row, i-th
// through-blocks joined. Empty when t(p) != t(q).
std::optional<ColouredPartition> candidate_implementer(const ColouredPartition& p,
                                                       const ColouredPartition& q);

// p ~ q in C: existence of r in C with r*r = p and rr* = q. Candidate mode
// tests the surgery candidate only; Exhaustive mode searches all noncrossing
// partitions on (word(p), word(q)) and throws budget_exceeded past the
// budget. Both operands must be projective members of C.
bool equivalent(const ColouredPartition& p, const ColouredPartition& q,
                const CategoryPredicate& C, EquivalenceMode mode = EquivalenceMode::Candidate,
                int budget_points = kDefaultPointBudget);

// One equation N^{|w|} = sum of class dimensions over Proj(w) per word w up
// to max_word_len (words over the given alphabet); classes are identified
// across words by the label extractor. Solved exactly over the rationals;
// throws underdetermined when any label is left unpinned, and requires
// N >= 4.
std::map<std::string, long long> dimension_solve(
    const CategoryPredicate& C, long long N, int max_word_len,
    const std::vector<Colour>& alphabet,
    const std::function<std::string(const ColouredPartition&)>& label_of,
    int budget_points = kDefaultPointBudget);

}  // namespace ncpqg

#endif  // NCPQG_FUSION_ENGINE_HPP_
