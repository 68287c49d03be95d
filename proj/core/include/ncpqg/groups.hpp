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
// Group oracles: reduced words in Z2*Z2 (infinite dihedral normal form
// z^t x^eps with z = xy), finite groups given by a multiplication table,
// finite and infinite cyclic groups, subgroups by closure, and colour
// generating sets carrying the evaluation map phi.

#ifndef NCPQG_GROUPS_HPP_
#define NCPQG_GROUPS_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ncpqg/colour.hpp"

namespace ncpqg {

// ---------------------------------------------------------------------------
// Z2 * Z2

// Canonical form z^t x^eps with x = (0, 1) and z = xy = (1, 0). Every
// element of Z2*Z2 has exactly one such form.
struct DihedralElement {
  long long t = 0;
  int eps = 0;

  friend bool operator==(const DihedralElement&, const DihedralElement&) = default;
};

inline DihedralElement dihedral_identity() { return {}; }

// (t,0)(t',e') = (t+t', e');  (t,1)(t',e') = (t-t', 1 xor e').
inline DihedralElement dihedral_mul(const DihedralElement& a, const DihedralElement& b) {
  if (a.eps == 0) return DihedralElement{a.t + b.t, b.eps};
  return DihedralElement{a.t - b.t, 1 ^ b.eps};
}

inline DihedralElement dihedral_inverse(const DihedralElement& a) {
  return a.eps == 0 ? DihedralElement{-a.t, 0} : a;
}

// Evaluates a word over the two self-inverse colours x, y. Throws
// unknown_letter on anything else.
DihedralElement dihedral_eval(const ColouredWord& w);

// Membership in Gamma_l, the subgroup generated by z^l; Gamma_0 is trivial
// (the convention Z_0 = Z for the quotient side).
bool in_gamma_ell(const DihedralElement& g, long long ell);

// ---------------------------------------------------------------------------
// Finite / cyclic group oracles

class Group;

struct GroupElement {
  const void* owner = nullptr;  // identity of the owning group oracle
  long long value = 0;          // residue (cyclic) or element index (table)

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

// Immutable, cheaply copyable handle. Cyclic groups store residues
// (order 0 meaning the infinite cyclic group with integer values); table
// groups verify at construction that the table is a Latin square with an
// identity, inverses and an associative product.
class Group {
 public:
  static Group cyclic(long long order);
  static Group table(std::vector<std::string> names, std::vector<std::vector<int>> product);

  bool is_finite() const;
  long long order() const;  // 0 for the infinite cyclic group
  bool is_cyclic() const;

  GroupElement identity() const;
  GroupElement mul(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;
  bool owns(const GroupElement& a) const;

  // Canonical element naming: cyclic 0 -> "e", k -> "g<k>"; table groups use
  // their declared names.
  std::string name(const GroupElement& a) const;
  GroupElement element(const std::string& name) const;

  std::vector<GroupElement> elements() const;  // finite groups only

  bool same(const Group& other) const { return impl_.get() == other.impl_.get(); }

 private:
  struct Impl;
  explicit Group(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

// Subgroup with materialized closure (finite case) or modulus d for the
// subgroup dZ of the infinite cyclic group.
class Subgroup {
 public:
  static Subgroup closure(const Group& group, const std::vector<GroupElement>& generators);
  static Subgroup trivial(const Group& group);
  static Subgroup whole(const Group& group);

  const Group& group() const { return group_; }
  bool contains(const GroupElement& g) const;
  const std::vector<GroupElement>& elements() const;  // finite subgroups only
  long long modulus() const { return modulus_; }      // infinite cyclic case
  bool is_finite() const;
  const std::vector<GroupElement>& generators() const { return generators_; }

 private:
  Subgroup(Group g, std::vector<GroupElement> gens, std::vector<GroupElement> elems,
           long long modulus, bool infinite)
      : group_(std::move(g)),
        generators_(std::move(gens)),
        elements_(std::move(elems)),
        modulus_(modulus),
        infinite_case_(infinite) {}
  Group group_;
  std::vector<GroupElement> generators_;
  std::vector<GroupElement> elements_;  // sorted, finite case
  long long modulus_ = 0;
  bool infinite_case_ = false;
};

// ---------------------------------------------------------------------------
// Colour generating sets

struct ColourMapping {
  Colour col;
  std::string maps_to;  // group element name
};

// A symmetric generating set S of Gamma: colours with their involution and
// the assignment phi on letters. Checks that phi respects inversion and
// that the image generates the group. Representative words w_g are shortlex
// geodesics over the colour order (for the identity, the shortest nonempty
// word evaluating to it), precomputed for finite groups and searched on
// demand for the infinite cyclic group.
class GeneratingSet {
 public:
  static GeneratingSet make(const Group& group, std::vector<ColourMapping> mappings);
  // Same, but with externally supplied representative words (validated).
  static GeneratingSet make(const Group& group, std::vector<ColourMapping> mappings,
                            std::map<std::string, ColouredWord> rep_words);

  const Group& group() const { return group_; }
  const std::vector<Colour>& colours() const { return colours_; }

  bool knows(const std::string& symbol) const;
  GroupElement eval_letter(const Colour& c) const;

  // phi: left-to-right product; the empty word maps to the identity.
  GroupElement eval(const ColouredWord& w) const;

  // w_g. Nonempty for every element, including the identity.
  ColouredWord rep_word(const GroupElement& g) const;

 private:
  GeneratingSet(Group g, std::vector<Colour> cols, std::map<std::string, GroupElement> assign,
                std::map<long long, ColouredWord> reps)
      : group_(std::move(g)),
        colours_(std::move(cols)),
        assign_(std::move(assign)),
        reps_(std::move(reps)) {}
  ColouredWord search_rep(const GroupElement& g) const;

  Group group_;
  std::vector<Colour> colours_;
  std::map<std::string, GroupElement> assign_;
  std::map<long long, ColouredWord> reps_;  // by element value; finite groups
};

}  // namespace ncpqg

#endif  // NCPQG_GROUPS_HPP_
