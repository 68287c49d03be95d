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
// Two-row coloured set partitions and the diagram-calculus operations on
// them: horizontal and vertical concatenation, involution, rotation, the
// noncrossing test, projectivity, domination, half decompositions and the
// two through-line contractions used by tensor product decompositions.
//
// Boundary order, fixed for the whole library: upper points left to right
// as positions 1..m, then lower points right to left as positions
// m+1..m+n. All "arc" and "crossing" notions refer to this cyclic order.

#ifndef NCPQG_PARTITION_HPP_
#define NCPQG_PARTITION_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "ncpqg/colour.hpp"

namespace ncpqg {

enum class Row : std::uint8_t { Upper, Lower };

// 1-based position within its row.
struct PointRef {
  Row row;
  int index;

  friend bool operator==(const PointRef&, const PointRef&) = default;
  friend auto operator<=>(const PointRef&, const PointRef&) = default;
};

inline PointRef upper_point(int index) { return PointRef{Row::Upper, index}; }
inline PointRef lower_point(int index) { return PointRef{Row::Lower, index}; }

using Block = std::vector<PointRef>;

// Immutable value type. The constructor validates that the blocks partition
// the point set exactly and stores a canonical form: points within a block
// sorted by boundary position, blocks sorted by their minimal boundary
// position. Equality is structural equality of canonical forms.
class ColouredPartition {
 public:
  ColouredPartition() = default;  // the empty partition in P(0, 0)
  ColouredPartition(ColouredWord upper, ColouredWord lower, std::vector<Block> blocks);

  const ColouredWord& upper() const { return upper_; }
  const ColouredWord& lower() const { return lower_; }
  const std::vector<Block>& blocks() const { return blocks_; }

  int upper_size() const { return static_cast<int>(upper_.size()); }
  int lower_size() const { return static_cast<int>(lower_.size()); }
  int total_points() const { return upper_size() + lower_size(); }

  // Position of a point in the cyclic boundary order, in 1..total_points().
  int boundary_position(const PointRef& p) const;

  const Colour& colour_of(const PointRef& p) const;

  friend bool operator==(const ColouredPartition&, const ColouredPartition&) = default;
  friend auto operator<=>(const ColouredPartition&, const ColouredPartition&) = default;

 private:
  ColouredWord upper_;
  ColouredWord lower_;
  std::vector<Block> blocks_;
};

struct CompositionResult {
  ColouredPartition partition;
  int loops = 0;  // blocks removed entirely in the glued middle row
};

// Horizontal concatenation: rows are concatenated, q's blocks reindexed.
ColouredPartition tensor(const ColouredPartition& p, const ColouredPartition& q);

// Vertical concatenation. The expression "qp" stacks p above q, gluing the
// lower row of p to the upper row of q, so compose(q, p) lives in
// P(upper(p), lower(q)). Purely-middle components are counted as loops.
// Throws row_mismatch when the glued words differ.
CompositionResult compose(const ColouredPartition& q, const ColouredPartition& p);

// p -> p*: rows swapped, blocks mirrored.
ColouredPartition involute(const ColouredPartition& p);

enum class Corner {
  UpperLeftToLowerLeft,
  LowerLeftToUpperLeft,
  UpperRightToLowerRight,
  LowerRightToUpperRight,
};

// Moves one extremal point to the other row, inverting its colour and
// keeping blocks intact as point sets. Throws empty_row if the source row
// has no points.
ColouredPartition rotate(const ColouredPartition& p, Corner corner);

// True iff no two blocks interleave in the cyclic boundary order.
bool is_noncrossing(const ColouredPartition& p);

// t(p): number of blocks meeting both rows.
int through_block_count(const ColouredPartition& p);

// Indices into p.blocks() of the through-blocks, ordered left to right by
// their leftmost upper point.
std::vector<int> through_blocks(const ColouredPartition& p);

// pp = p = p*.
bool is_projective(const ColouredPartition& p);

// p is dominated by q (written p <= q) iff qp = p. Both arguments must be
// projective partitions on the same word.
bool dominates(const ColouredPartition& q, const ColouredPartition& p);

struct UpperHalf {
  // Keeps p's upper row and upper-only blocks; each through-block is
  // truncated to its upper legs plus one fresh lower point. The fresh
  // points carry synthesized colours so that halves compose; membership
  // predicates are never applied to halves.
  ColouredPartition half;
  // Per through-line, the word formed by that block's upper legs.
  std::vector<ColouredWord> mid_colours;
};

// p = compose(involute(half), half) up to loops. Throws not_projective.
UpperHalf upper_half(const ColouredPartition& p);

// p square^k q: block surgery on tensor(p, q). For i = 1..k the i-th
// innermost pair of through-blocks (p's (t(p)-i+1)-th with q's i-th) is
// replaced by an upper block and a lower block. Through-block count drops
// to t(p) + t(q) - 2k. Throws out_of_range unless 1 <= k <= min(t(p), t(q)).
ColouredPartition square_contract(const ColouredPartition& p, const ColouredPartition& q, int k);

// p boxvert^k q: square surgery for i = 1..k with the outermost (i = k)
// upper and lower surgery blocks merged into one block spanning both rows;
// the inner contractions remain caps. Through-block count becomes
// t(p) + t(q) - 2k + 1.
ColouredPartition boxvert_contract(const ColouredPartition& p, const ColouredPartition& q, int k);

// Builders. pi: the one-block partition on (w, w'); beta: all upper points
// in one block and all lower points in another; identity: |w| vertical
// strands. pi requires at least one point, beta a nonempty point set in
// each row (empty_word otherwise).
ColouredPartition pi(const ColouredWord& w, const ColouredWord& wp);
ColouredPartition beta(const ColouredWord& w, const ColouredWord& wp);
ColouredPartition identity_partition(const ColouredWord& w);

// The generator of the amalgamation relations: a single two-point block on
// the upper row, coloured x then y (both self-inverse).
ColouredPartition d_xy();

// The contraction gadgets on 2k points per row, both rows coloured by the
// given word of length 2k. h_square: nested within-row arcs {i, 2k-i+1};
// h_boxvert: the same with the two outermost arcs joined across the rows.
ColouredPartition h_square(int k, const ColouredWord& colours);
ColouredPartition h_boxvert(int k, const ColouredWord& colours);

inline ColouredPartition empty_partition() { return ColouredPartition{}; }

// One-line ASCII rendering for diagnostics.
std::string debug_string(const ColouredPartition& p);

}  // namespace ncpqg

#endif  // NCPQG_PARTITION_HPP_
