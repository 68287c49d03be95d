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
// Decidable membership predicates for the categories of partitions used as
// ground truth, plus the full-subpartition machinery their definitions rely
// on. A full subpartition is a nonempty union of blocks occupying a
// contiguous arc of the cyclic boundary order (wrapping allowed).

#ifndef NCPQG_CATEGORY_HPP_
#define NCPQG_CATEGORY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "ncpqg/groups.hpp"
#include "ncpqg/partition.hpp"

namespace ncpqg {

// All nonempty block subsets whose point set is a cyclic boundary arc; each
// subset is a sorted list of block indices, listed once. Includes the whole
// partition whenever it has any blocks.
std::vector<std::vector<int>> full_subpartitions(const ColouredPartition& p);

struct MembershipVerdict {
  bool member = false;
  std::string witness;  // empty when member; otherwise the violated condition
};

class CategoryPredicate {
 public:
  enum class Kind { OPlusPair, DEll, CGammaS, DGammaLambdaS };

  // Monochrome noncrossing pair partitions in the given colour.
  static CategoryPredicate oplus_pair(Colour c);
  // Noncrossing pair partitions over {x, y} whose row colourings differ by
  // an element of the subgroup generated by (xy)^l in Z2*Z2.
  static CategoryPredicate dell(long long ell);
  // Noncrossing partitions with phi(upper legs) = phi(lower legs) in every
  // block.
  static CategoryPredicate c_gamma_s(GeneratingSet gens);
  // Noncrossing partitions with phi(w) = phi(w') globally and
  // phi(v)^{-1} phi(v') in Lambda for every full subpartition (v, v').
  static CategoryPredicate d_gamma_lambda_s(Subgroup lambda, GeneratingSet gens);

  Kind kind() const { return kind_; }
  long long ell() const { return ell_; }
  const GeneratingSet& gens() const { return *gens_; }
  const Subgroup& lambda() const { return *lambda_; }

  // Throws alphabet_mismatch when the partition carries colours the
  // predicate does not know.
  bool member(const ColouredPartition& p) const;

  // Like member() but reports which condition failed, naming the offending
  // block or arc.
  MembershipVerdict explain(const ColouredPartition& p) const;

 private:
  CategoryPredicate(Kind k) : kind_(k) {}
  void check_alphabet(const ColouredPartition& p) const;

  Kind kind_;
  long long ell_ = 0;
  std::optional<Colour> mono_;
  std::optional<GeneratingSet> gens_;
  std::optional<Subgroup> lambda_;
};

}  // namespace ncpqg

#endif  // NCPQG_CATEGORY_HPP_
