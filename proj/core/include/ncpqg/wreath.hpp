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
// The H_N^{++}(Gamma, Lambda) family: labels are either one-dimensional
// (an element of Lambda) or words over Gamma modulo sliding Lambda-elements
// between adjacent letters, stored in a left-coset normal form. Provides
// label extraction from projective partitions, the bullet / star word
// operations, closed-form fusion and the group of one-dimensional
// representations.

#ifndef NCPQG_WREATH_HPP_
#define NCPQG_WREATH_HPP_

#include <string>
#include <vector>

#include "ncpqg/category.hpp"
#include "ncpqg/groups.hpp"
#include "ncpqg/partition.hpp"

namespace ncpqg {

// Gamma, Lambda and the colour generating set, bundled with the derived
// membership predicate. Immutable and cheap to copy.
class WreathContext {
 public:
  WreathContext(Subgroup lambda, GeneratingSet gens);

  const Group& gamma() const { return gens_.group(); }
  const Subgroup& lambda() const { return lambda_; }
  const GeneratingSet& gens() const { return gens_; }
  const CategoryPredicate& category() const { return category_; }

  // Minimal element of the left coset g Lambda under the group's canonical
  // order; the normal form keeps every non-final letter in this transversal.
  GroupElement coset_representative(const GroupElement& g) const;

 private:
  Subgroup lambda_;
  GeneratingSet gens_;
  CategoryPredicate category_;
};

struct WLabel {
  bool one_dim = false;
  GroupElement lambda;                // one-dimensional case, element of Lambda
  std::vector<GroupElement> letters;  // word case, nonempty, in normal form

  friend bool operator==(const WLabel&, const WLabel&) = default;
  friend auto operator<=>(const WLabel&, const WLabel&) = default;
};

WLabel one_dim_label(const WreathContext& ctx, const GroupElement& lambda);

// Left-to-right sweep replacing each non-final letter by its coset
// representative and folding the residue into the next letter; idempotent.
WLabel normalize_word(const WreathContext& ctx, std::vector<GroupElement> letters);

// a bullet_c b = a_1 .. a_{n-1} (a_n c) b_1 .. b_{n'}, requiring c in
// Lambda (the fold is only well defined up to the sliding relation); with
// both sides empty the result is the one-dimensional label c.
WLabel bullet(const WreathContext& ctx, const std::vector<GroupElement>& a,
              const std::vector<GroupElement>& b, const GroupElement& c);

// a star_c b = a_1 .. a_{n-1} (a_n c b_1) b_2 .. b_{n'}; both sides must be
// nonempty (empty_operand). c may be any group element: the three factors
// merge into a single letter.
WLabel star(const WreathContext& ctx, const std::vector<GroupElement>& a,
            const std::vector<GroupElement>& b, const GroupElement& c);

// t(p) = 0 projectives map to the one-dimensional label phi(upper word);
// otherwise the upper row is cut at the leftmost legs of the through-blocks
// (first segment extended to the row start, last to the row end) and the
// segment values, normalized, form the word. Throws not_member unless p is
// a projective member of the context's category.
WLabel label_of_projective_wreath(const WreathContext& ctx, const ColouredPartition& p);

// OneDim(e) is the empty partition, OneDim(lambda) is beta(w_l, w_l), and a
// word label is the tensor product of the pi(w_g, w_g).
ColouredPartition rep_of_wlabel(const WreathContext& ctx, const WLabel& label);
int rep_points_of_wlabel(const WreathContext& ctx, const WLabel& label);

// Closed-form fusion. Word x word runs over cut sizes k = 0..min(n, n'):
// with z the last k letters of the left word and z' the first k letters of
// the right one, the cut is admissible iff every nested product
// z_{k-j+1} .. z_k z'_1 .. z'_j (j = 1..k) lies in Lambda — these are the
// colourings of the contracted diagram's inner caps. An admissible cut
// emits the bullet term and, when both remainders are nonempty, the star
// term. Multiplicity one per emitted term per k.
std::vector<WLabel> closed_fusion_wreath(const WreathContext& ctx, const WLabel& u,
                                         const WLabel& v);

// Reversed letterwise inverses (validated by the Frobenius property).
WLabel conjugate_label(const WreathContext& ctx, const WLabel& a);

std::string w_to_string(const WreathContext& ctx, const WLabel& a);  // "g1.g3" / "1d:g2"
WLabel w_parse(const WreathContext& ctx, const std::string& text);

// All normal-form labels with |letters| <= max_len whose representative
// fits the point budget, plus the one-dimensional labels; sorted.
std::vector<WLabel> realizable_wlabels(const WreathContext& ctx, int max_len, int budget_points);

struct OneDimGroupWreath {
  bool certified = false;
  std::string detail;
};

// Certifies G = Lambda: distinct beta(w_l, w_l) are inequivalent and
// one-dimensional fusion reproduces Lambda's multiplication table.
OneDimGroupWreath one_dim_group_wreath(const WreathContext& ctx);

}  // namespace ncpqg

#endif  // NCPQG_WREATH_HPP_
