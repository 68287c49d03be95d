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

#include "ncpqg/category.hpp"

#include <algorithm>
#include <set>

#include "ncpqg/errors.hpp"

namespace ncpqg {

std::vector<std::vector<int>> full_subpartitions(const ColouredPartition& p) {
  const int total = p.total_points();
  const int nblocks = static_cast<int>(p.blocks().size());
  if (total == 0) return {};
  // block_at[pos-1] = index of the block covering the boundary position.
  std::vector<int> block_at(total, -1);
  for (int b = 0; b < nblocks; ++b)
    for (const PointRef& pt : p.blocks()[b]) block_at[p.boundary_position(pt) - 1] = b;
  std::vector<int> block_size(nblocks, 0);
  for (int b = 0; b < nblocks; ++b) block_size[b] = static_cast<int>(p.blocks()[b].size());

  std::set<std::vector<int>> out;
  for (int start = 0; start < total; ++start) {
    std::vector<int> covered(nblocks, 0);
    std::vector<int> touched;
    for (int len = 1; len <= total; ++len) {
      int b = block_at[(start + len - 1) % total];
      if (covered[b] == 0) touched.push_back(b);
      ++covered[b];
      // The arc is a union of blocks iff every touched block is complete.
      bool full = true;
      for (int t : touched)
        if (covered[t] != block_size[t]) {
          full = false;
          break;
        }
      if (full) {
        std::vector<int> key = touched;
        std::sort(key.begin(), key.end());
        out.insert(std::move(key));
      }
    }
  }
  return std::vector<std::vector<int>>(out.begin(), out.end());
}

namespace {

// Row words of a block subset, both rows read left to right.
std::pair<ColouredWord, ColouredWord> subset_colouring(const ColouredPartition& p,
                                                       const std::vector<int>& blocks) {
  std::vector<char> in_upper(p.upper_size() + 1, 0), in_lower(p.lower_size() + 1, 0);
  for (int b : blocks)
    for (const PointRef& pt : p.blocks()[b])
      (pt.row == Row::Upper ? in_upper : in_lower)[pt.index] = 1;
  ColouredWord v, vp;
  for (int i = 1; i <= p.upper_size(); ++i)
    if (in_upper[i]) v.push_back(p.upper()[i - 1]);
  for (int j = 1; j <= p.lower_size(); ++j)
    if (in_lower[j]) vp.push_back(p.lower()[j - 1]);
  return {std::move(v), std::move(vp)};
}

bool all_pairs(const ColouredPartition& p) {
  return std::all_of(p.blocks().begin(), p.blocks().end(),
                     [](const Block& b) { return b.size() == 2; });
}

std::string arc_description(const ColouredPartition& p, const std::vector<int>& blocks) {
  auto [v, vp] = subset_colouring(p, blocks);
  return "full subpartition with colourings (" + word_str(v) + " ; " + word_str(vp) + ")";
}

}  // namespace

CategoryPredicate CategoryPredicate::oplus_pair(Colour c) {
  CategoryPredicate r(Kind::OPlusPair);
  r.mono_ = std::move(c);
  return r;
}

CategoryPredicate CategoryPredicate::dell(long long ell) {
  if (ell < 0) throw Error(errc::parse_error, "ell must be >= 0");
  CategoryPredicate r(Kind::DEll);
  r.ell_ = ell;
  return r;
}

CategoryPredicate CategoryPredicate::c_gamma_s(GeneratingSet gens) {
  CategoryPredicate r(Kind::CGammaS);
  r.gens_ = std::move(gens);
  return r;
}

CategoryPredicate CategoryPredicate::d_gamma_lambda_s(Subgroup lambda, GeneratingSet gens) {
  if (!lambda.group().same(gens.group()))
    throw Error(errc::mixed_groups, "subgroup and generating set live in different groups");
  CategoryPredicate r(Kind::DGammaLambdaS);
  r.lambda_ = std::move(lambda);
  r.gens_ = std::move(gens);
  return r;
}

void CategoryPredicate::check_alphabet(const ColouredPartition& p) const {
  auto check = [&](const ColouredWord& w) {
    for (const Colour& c : w) {
      bool ok = false;
      switch (kind_) {
        case Kind::OPlusPair:
          ok = c == *mono_;
          break;
        case Kind::DEll:
          ok = (c.symbol == "x" || c.symbol == "y") && c.self_inverse();
          break;
        case Kind::CGammaS:
        case Kind::DGammaLambdaS:
          ok = gens_->knows(c.symbol);
          break;
      }
      if (!ok)
        throw Error(errc::alphabet_mismatch, "colour '" + c.symbol + "' outside the predicate alphabet");
    }
  };
  check(p.upper());
  check(p.lower());
}

bool CategoryPredicate::member(const ColouredPartition& p) const { return explain(p).member; }

MembershipVerdict CategoryPredicate::explain(const ColouredPartition& p) const {
  check_alphabet(p);
  if (!is_noncrossing(p)) return {false, "crossing blocks"};
  switch (kind_) {
    case Kind::OPlusPair: {
      if (!all_pairs(p)) return {false, "a block is not a pair"};
      return {true, ""};
    }
    case Kind::DEll: {
      if (!all_pairs(p)) {
        for (const Block& b : p.blocks())
          if (b.size() != 2)
            return {false, "block of size " + std::to_string(b.size()) + " is not a pair"};
      }
      DihedralElement d =
          dihedral_mul(dihedral_eval(p.upper()), dihedral_inverse(dihedral_eval(p.lower())));
      if (!in_gamma_ell(d, ell_))
        return {false, "phi(w) phi(w')^{-1} = (t=" + std::to_string(d.t) + ", eps=" +
                           std::to_string(d.eps) + ") outside Gamma_" + std::to_string(ell_)};
      return {true, ""};
    }
    case Kind::CGammaS: {
      for (size_t i = 0; i < p.blocks().size(); ++i) {
        ColouredWord up, low;
        for (const PointRef& pt : p.blocks()[i])
          (pt.row == Row::Upper ? up : low).push_back(p.colour_of(pt));
        if (!(gens_->eval(up) == gens_->eval(low)))
          return {false, "block " + std::to_string(i + 1) + " has phi(" + word_str(up) +
                             ") != phi(" + word_str(low) + ")"};
      }
      return {true, ""};
    }
    case Kind::DGammaLambdaS: {
      GroupElement pw = gens_->eval(p.upper());
      GroupElement pwp = gens_->eval(p.lower());
      if (!(pw == pwp))
        return {false, "phi(" + word_str(p.upper()) + ") != phi(" + word_str(p.lower()) + ")"};
      const Group& g = gens_->group();
      for (const auto& subset : full_subpartitions(p)) {
        auto [v, vp] = subset_colouring(p, subset);
        GroupElement d = g.mul(g.inverse(gens_->eval(v)), gens_->eval(vp));
        if (!lambda_->contains(d))
          return {false, arc_description(p, subset) + " has phi(v)^{-1} phi(v') = " + g.name(d) +
                             " outside Lambda"};
      }
      return {true, ""};
    }
  }
  return {false, "unreachable"};
}

}  // namespace ncpqg
