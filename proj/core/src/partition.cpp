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

#include "ncpqg/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ncpqg/errors.hpp"

namespace ncpqg {

namespace {

std::string point_name(const PointRef& p) {
  return (p.row == Row::Upper ? "u" : "l") + std::to_string(p.index);
}

// Plain union-find over 0..n-1.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int a) {
    while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
    return a;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

}  // namespace

std::string word_str(const ColouredWord& w) {
  std::string s;
  for (const Colour& c : w) s += c.symbol;
  return s;
}

ColouredPartition::ColouredPartition(ColouredWord upper, ColouredWord lower,
                                     std::vector<Block> blocks)
    : upper_(std::move(upper)), lower_(std::move(lower)), blocks_(std::move(blocks)) {
  const int m = upper_size();
  const int n = lower_size();
  std::vector<int> seen(m + n, 0);
  for (const Block& b : blocks_) {
    if (b.empty()) throw Error(errc::invalid_partition, "empty block");
    for (const PointRef& p : b) {
      const int limit = p.row == Row::Upper ? m : n;
      if (p.index < 1 || p.index > limit)
        throw Error(errc::invalid_partition,
                    "point " + point_name(p) + " outside a row of length " + std::to_string(limit));
      const int flat = p.row == Row::Upper ? p.index - 1 : m + p.index - 1;
      if (seen[flat]++)
        throw Error(errc::invalid_partition, "point " + point_name(p) + " appears in two blocks");
    }
  }
  for (int i = 0; i < m + n; ++i) {
    if (!seen[i]) {
      PointRef p = i < m ? upper_point(i + 1) : lower_point(i - m + 1);
      throw Error(errc::invalid_partition, "point " + point_name(p) + " is not covered by any block");
    }
  }
  for (Block& b : blocks_) {
    std::sort(b.begin(), b.end(), [this](const PointRef& a, const PointRef& c) {
      return boundary_position(a) < boundary_position(c);
    });
  }
  std::sort(blocks_.begin(), blocks_.end(), [this](const Block& a, const Block& c) {
    return boundary_position(a.front()) < boundary_position(c.front());
  });
}

int ColouredPartition::boundary_position(const PointRef& p) const {
  if (p.row == Row::Upper) return p.index;
  return upper_size() + (lower_size() - p.index + 1);
}

const Colour& ColouredPartition::colour_of(const PointRef& p) const {
  return p.row == Row::Upper ? upper_[p.index - 1] : lower_[p.index - 1];
}

ColouredPartition tensor(const ColouredPartition& p, const ColouredPartition& q) {
  ColouredWord up = word_concat(p.upper(), q.upper());
  ColouredWord low = word_concat(p.lower(), q.lower());
  std::vector<Block> blocks = p.blocks();
  const int du = p.upper_size();
  const int dl = p.lower_size();
  for (const Block& b : q.blocks()) {
    Block shifted;
    shifted.reserve(b.size());
    for (const PointRef& pt : b)
      shifted.push_back(pt.row == Row::Upper ? upper_point(pt.index + du) : lower_point(pt.index + dl));
    blocks.push_back(std::move(shifted));
  }
  return ColouredPartition(std::move(up), std::move(low), std::move(blocks));
}

CompositionResult compose(const ColouredPartition& q, const ColouredPartition& p) {
  if (p.lower() != q.upper())
    throw Error(errc::row_mismatch, "cannot glue (" + word_str(p.lower()) + ") onto (" +
                                        word_str(q.upper()) + ")");
  const int m = p.upper_size();    // result upper points
  const int mid = p.lower_size();  // glued middle points
  const int n = q.lower_size();    // result lower points
  // Node ids: [0, m)  p upper, [m, m+mid)  glued middle, [m+mid, m+mid+n)  q lower.
  UnionFind uf(m + mid + n);
  auto id_p = [&](const PointRef& pt) { return pt.row == Row::Upper ? pt.index - 1 : m + pt.index - 1; };
  auto id_q = [&](const PointRef& pt) {
    return pt.row == Row::Upper ? m + pt.index - 1 : m + mid + pt.index - 1;
  };
  for (const Block& b : p.blocks())
    for (size_t i = 1; i < b.size(); ++i) uf.unite(id_p(b[0]), id_p(b[i]));
  for (const Block& b : q.blocks())
    for (size_t i = 1; i < b.size(); ++i) uf.unite(id_q(b[0]), id_q(b[i]));

  std::vector<Block> members(m + mid + n);
  for (int i = 0; i < m; ++i) members[uf.find(i)].push_back(upper_point(i + 1));
  for (int j = 0; j < n; ++j) members[uf.find(m + mid + j)].push_back(lower_point(j + 1));

  std::vector<Block> blocks;
  int loops = 0;
  for (int i = 0; i < m + mid + n; ++i)
    if (!members[i].empty()) blocks.push_back(std::move(members[i]));
  // A loop is a component made of middle points only.
  std::vector<char> root_seen(m + mid + n, 0);
  for (int i = 0; i < m; ++i) root_seen[uf.find(i)] = 1;
  for (int j = 0; j < n; ++j) root_seen[uf.find(m + mid + j)] = 1;
  for (int k = 0; k < mid; ++k) {
    int r = uf.find(m + k);
    if (!root_seen[r]) {
      ++loops;
      root_seen[r] = 1;
    }
  }
  return CompositionResult{ColouredPartition(p.upper(), q.lower(), std::move(blocks)), loops};
}

ColouredPartition involute(const ColouredPartition& p) {
  std::vector<Block> blocks;
  blocks.reserve(p.blocks().size());
  for (const Block& b : p.blocks()) {
    Block nb;
    nb.reserve(b.size());
    for (const PointRef& pt : b)
      nb.push_back(pt.row == Row::Upper ? lower_point(pt.index) : upper_point(pt.index));
    blocks.push_back(std::move(nb));
  }
  return ColouredPartition(p.lower(), p.upper(), std::move(blocks));
}

ColouredPartition rotate(const ColouredPartition& p, Corner corner) {
  const int m = p.upper_size();
  const int n = p.lower_size();
  ColouredWord up = p.upper();
  ColouredWord low = p.lower();
  std::vector<Block> blocks;

  auto rebuild = [&](auto&& map) {
    for (const Block& b : p.blocks()) {
      Block nb;
      nb.reserve(b.size());
      for (const PointRef& pt : b) nb.push_back(map(pt));
      blocks.push_back(std::move(nb));
    }
  };

  switch (corner) {
    case Corner::UpperLeftToLowerLeft: {
      if (m == 0) throw Error(errc::empty_row, "upper row is empty");
      Colour moved = up.front().inverted();
      up.erase(up.begin());
      low.insert(low.begin(), moved);
      rebuild([&](const PointRef& pt) {
        if (pt.row == Row::Upper) return pt.index == 1 ? lower_point(1) : upper_point(pt.index - 1);
        return lower_point(pt.index + 1);
      });
      break;
    }
    case Corner::LowerLeftToUpperLeft: {
      if (n == 0) throw Error(errc::empty_row, "lower row is empty");
      Colour moved = low.front().inverted();
      low.erase(low.begin());
      up.insert(up.begin(), moved);
      rebuild([&](const PointRef& pt) {
        if (pt.row == Row::Lower) return pt.index == 1 ? upper_point(1) : lower_point(pt.index - 1);
        return upper_point(pt.index + 1);
      });
      break;
    }
    case Corner::UpperRightToLowerRight: {
      if (m == 0) throw Error(errc::empty_row, "upper row is empty");
      Colour moved = up.back().inverted();
      up.pop_back();
      low.push_back(moved);
      rebuild([&](const PointRef& pt) {
        if (pt.row == Row::Upper && pt.index == m) return lower_point(n + 1);
        return pt;
      });
      break;
    }
    case Corner::LowerRightToUpperRight: {
      if (n == 0) throw Error(errc::empty_row, "lower row is empty");
      Colour moved = low.back().inverted();
      low.pop_back();
      up.push_back(moved);
      rebuild([&](const PointRef& pt) {
        if (pt.row == Row::Lower && pt.index == n) return upper_point(m + 1);
        return pt;
      });
      break;
    }
  }
  return ColouredPartition(std::move(up), std::move(low), std::move(blocks));
}

bool is_noncrossing(const ColouredPartition& p) {
  const auto& blocks = p.blocks();
  const int nb = static_cast<int>(blocks.size());
  std::vector<std::vector<int>> pos(nb);
  for (int i = 0; i < nb; ++i) {
    for (const PointRef& pt : blocks[i]) pos[i].push_back(p.boundary_position(pt));
    std::sort(pos[i].begin(), pos[i].end());
  }
  // Two blocks cross iff their merged position sequence changes label at
  // least three times. (Cyclic interleaving equals linear interleaving for
  // set partitions.)
  for (int i = 0; i < nb; ++i) {
    for (int j = i + 1; j < nb; ++j) {
      size_t a = 0, b = 0;
      int changes = 0;
      int last = -1;  // 0 = block i, 1 = block j
      while (a < pos[i].size() || b < pos[j].size()) {
        int label;
        if (b == pos[j].size() || (a < pos[i].size() && pos[i][a] < pos[j][b])) {
          label = 0;
          ++a;
        } else {
          label = 1;
          ++b;
        }
        if (label != last) {
          if (last != -1) ++changes;
          last = label;
        }
      }
      if (changes >= 3) return false;
    }
  }
  return true;
}

int through_block_count(const ColouredPartition& p) {
  return static_cast<int>(through_blocks(p).size());
}

std::vector<int> through_blocks(const ColouredPartition& p) {
  std::vector<std::pair<int, int>> found;  // (leftmost upper index, block index)
  const auto& blocks = p.blocks();
  for (int i = 0; i < static_cast<int>(blocks.size()); ++i) {
    bool has_upper = false, has_lower = false;
    int min_upper = 0;
    for (const PointRef& pt : blocks[i]) {
      if (pt.row == Row::Upper) {
        if (!has_upper || pt.index < min_upper) min_upper = pt.index;
        has_upper = true;
      } else {
        has_lower = true;
      }
    }
    if (has_upper && has_lower) found.emplace_back(min_upper, i);
  }
  std::sort(found.begin(), found.end());
  std::vector<int> order;
  order.reserve(found.size());
  for (auto& [pos, idx] : found) order.push_back(idx);
  return order;
}

bool is_projective(const ColouredPartition& p) {
  if (p.upper() != p.lower()) return false;
  if (involute(p) != p) return false;
  return compose(p, p).partition == p;
}

bool dominates(const ColouredPartition& q, const ColouredPartition& p) {
  if (p.upper() != q.upper())
    throw Error(errc::row_mismatch, "domination requires projectives on the same word");
  if (!is_projective(p) || !is_projective(q))
    throw Error(errc::not_projective, "domination is defined for projective partitions");
  return compose(q, p).partition == p;
}

namespace {

// Synthesized colour for a fresh mid point closing a through-line whose
// upper legs read w: "<w>" with inverse "<reverse of letter inverses>".
Colour mid_colour(const ColouredWord& legs) {
  std::string sym = "<";
  for (const Colour& c : legs) sym += c.symbol;
  sym += ">";
  std::string inv = "<";
  for (auto it = legs.rbegin(); it != legs.rend(); ++it) inv += it->inverse;
  inv += ">";
  return Colour{std::move(sym), std::move(inv)};
}

}  // namespace

UpperHalf upper_half(const ColouredPartition& p) {
  if (!is_projective(p)) throw Error(errc::not_projective, "upper_half requires a projective partition");
  const std::vector<int> thr = through_blocks(p);
  std::vector<Block> blocks;
  std::vector<ColouredWord> mids;
  ColouredWord mid_word;
  // Upper-only blocks survive untouched.
  for (int i = 0; i < static_cast<int>(p.blocks().size()); ++i) {
    const Block& b = p.blocks()[i];
    bool upper_only = std::all_of(b.begin(), b.end(),
                                  [](const PointRef& pt) { return pt.row == Row::Upper; });
    if (upper_only) blocks.push_back(b);
  }
  int mid_index = 0;
  for (int bi : thr) {
    Block nb;
    ColouredWord legs;
    for (const PointRef& pt : p.blocks()[bi]) {
      if (pt.row == Row::Upper) {
        nb.push_back(pt);
        legs.push_back(p.colour_of(pt));
      }
    }
    nb.push_back(lower_point(++mid_index));
    blocks.push_back(std::move(nb));
    mid_word.push_back(mid_colour(legs));
    mids.push_back(std::move(legs));
  }
  return UpperHalf{ColouredPartition(p.upper(), std::move(mid_word), std::move(blocks)),
                   std::move(mids)};
}

namespace {

struct SurgerySetup {
  ColouredPartition base;            // tensor(p, q)
  std::vector<Block> blocks;         // mutable copy of base blocks
  std::vector<int> p_through;        // indices into blocks, left to right
  std::vector<int> q_through;
  int tp = 0, tq = 0;
};

SurgerySetup surgery_setup(const ColouredPartition& p, const ColouredPartition& q, int k,
                           const char* op) {
  if (!is_projective(p) || !is_projective(q))
    throw Error(errc::not_projective, std::string(op) + " requires projective operands");
  if (!is_noncrossing(p) || !is_noncrossing(q))
    throw Error(errc::not_projective, std::string(op) + " requires noncrossing operands");
  SurgerySetup s;
  s.tp = through_block_count(p);
  s.tq = through_block_count(q);
  if (k < 1 || k > std::min(s.tp, s.tq))
    throw Error(errc::out_of_range, std::string(op) + ": k = " + std::to_string(k) +
                                        " outside 1..min(" + std::to_string(s.tp) + ", " +
                                        std::to_string(s.tq) + ")");
  s.base = tensor(p, q);
  s.blocks = s.base.blocks();
  // In the tensor, p's blocks keep identity while q's are shifted; recover
  // the through-block lists by position: through-blocks whose leftmost
  // upper leg is within p's range come from p.
  for (int bi : through_blocks(s.base)) {
    int min_upper = 0;
    bool first = true;
    for (const PointRef& pt : s.blocks[bi])
      if (pt.row == Row::Upper && (first || pt.index < min_upper)) {
        min_upper = pt.index;
        first = false;
      }
    if (min_upper <= p.upper_size())
      s.p_through.push_back(bi);
    else
      s.q_through.push_back(bi);
  }
  return s;
}

ColouredPartition finish_surgery(SurgerySetup& s, const std::vector<Block>& added,
                                 const std::vector<char>& removed) {
  std::vector<Block> out;
  for (int i = 0; i < static_cast<int>(s.blocks.size()); ++i)
    if (!removed[i]) out.push_back(s.blocks[i]);
  for (const Block& b : added)
    if (!b.empty()) out.push_back(b);
  return ColouredPartition(s.base.upper(), s.base.lower(), std::move(out));
}

}  // namespace

ColouredPartition square_contract(const ColouredPartition& p, const ColouredPartition& q, int k) {
  SurgerySetup s = surgery_setup(p, q, k, "square_contract");
  std::vector<char> removed(s.blocks.size(), 0);
  std::vector<Block> added;
  for (int i = 1; i <= k; ++i) {
    int a = s.p_through[s.tp - i];
    int b = s.q_through[i - 1];
    removed[a] = removed[b] = 1;
    Block up, low;
    for (int bi : {a, b})
      for (const PointRef& pt : s.blocks[bi])
        (pt.row == Row::Upper ? up : low).push_back(pt);
    added.push_back(std::move(up));
    added.push_back(std::move(low));
  }
  return finish_surgery(s, added, removed);
}

ColouredPartition boxvert_contract(const ColouredPartition& p, const ColouredPartition& q, int k) {
  SurgerySetup s = surgery_setup(p, q, k, "boxvert_contract");
  std::vector<char> removed(s.blocks.size(), 0);
  std::vector<Block> added;
  // Inner contractions i < k stay square caps and keep their arc conditions;
  // only the outermost pair fuses across the rows into a through-block.
  for (int i = 1; i < k; ++i) {
    int a = s.p_through[s.tp - i];
    int b = s.q_through[i - 1];
    removed[a] = removed[b] = 1;
    Block up, low;
    for (int bi : {a, b})
      for (const PointRef& pt : s.blocks[bi])
        (pt.row == Row::Upper ? up : low).push_back(pt);
    added.push_back(std::move(up));
    added.push_back(std::move(low));
  }
  {
    int a = s.p_through[s.tp - k];
    int b = s.q_through[k - 1];
    removed[a] = removed[b] = 1;
    Block merged;
    for (int bi : {a, b})
      for (const PointRef& pt : s.blocks[bi]) merged.push_back(pt);
    added.push_back(std::move(merged));
  }
  return finish_surgery(s, added, removed);
}

ColouredPartition pi(const ColouredWord& w, const ColouredWord& wp) {
  if (w.empty() && wp.empty()) throw Error(errc::empty_word, "pi requires at least one point");
  Block b;
  for (int i = 1; i <= static_cast<int>(w.size()); ++i) b.push_back(upper_point(i));
  for (int j = 1; j <= static_cast<int>(wp.size()); ++j) b.push_back(lower_point(j));
  return ColouredPartition(w, wp, {std::move(b)});
}

ColouredPartition beta(const ColouredWord& w, const ColouredWord& wp) {
  if (w.empty() || wp.empty()) throw Error(errc::empty_word, "beta requires nonempty rows");
  Block up, low;
  for (int i = 1; i <= static_cast<int>(w.size()); ++i) up.push_back(upper_point(i));
  for (int j = 1; j <= static_cast<int>(wp.size()); ++j) low.push_back(lower_point(j));
  return ColouredPartition(w, wp, {std::move(up), std::move(low)});
}

ColouredPartition identity_partition(const ColouredWord& w) {
  std::vector<Block> blocks;
  for (int i = 1; i <= static_cast<int>(w.size()); ++i)
    blocks.push_back(Block{upper_point(i), lower_point(i)});
  return ColouredPartition(w, w, std::move(blocks));
}

ColouredPartition d_xy() {
  ColouredWord w{colour("x"), colour("y")};
  return ColouredPartition(w, {}, {Block{upper_point(1), upper_point(2)}});
}

ColouredPartition h_square(int k, const ColouredWord& colours) {
  if (k < 1 || static_cast<int>(colours.size()) != 2 * k)
    throw Error(errc::out_of_range, "h_square needs a word of length 2k");
  std::vector<Block> blocks;
  for (int i = 1; i <= k; ++i) {
    blocks.push_back(Block{upper_point(i), upper_point(2 * k - i + 1)});
    blocks.push_back(Block{lower_point(i), lower_point(2 * k - i + 1)});
  }
  return ColouredPartition(colours, colours, std::move(blocks));
}

ColouredPartition h_boxvert(int k, const ColouredWord& colours) {
  if (k < 1 || static_cast<int>(colours.size()) != 2 * k)
    throw Error(errc::out_of_range, "h_boxvert needs a word of length 2k");
  // h_square with the outermost arcs of the two rows joined into one block.
  std::vector<Block> blocks;
  blocks.push_back(
      Block{upper_point(1), upper_point(2 * k), lower_point(1), lower_point(2 * k)});
  for (int i = 2; i <= k; ++i) {
    blocks.push_back(Block{upper_point(i), upper_point(2 * k - i + 1)});
    blocks.push_back(Block{lower_point(i), lower_point(2 * k - i + 1)});
  }
  return ColouredPartition(colours, colours, std::move(blocks));
}

std::string debug_string(const ColouredPartition& p) {
  std::ostringstream os;
  os << "(" << word_str(p.upper()) << " ; " << word_str(p.lower()) << ")";
  for (const Block& b : p.blocks()) {
    os << " {";
    for (size_t i = 0; i < b.size(); ++i) {
      if (i) os << " ";
      os << point_name(b[i]);
    }
    os << "}";
  }
  return os.str();
}

}  // namespace ncpqg
