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

#include "ncpqg/fusion_engine.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "ncpqg/errors.hpp"

namespace ncpqg {

std::string fusion_kind_name(FusionTerm::Kind k) {
  switch (k) {
    case FusionTerm::Kind::Tensor:
      return "tensor";
    case FusionTerm::Kind::Square:
      return "square";
    case FusionTerm::Kind::Boxvert:
      return "boxvert";
  }
  return "?";
}

namespace {

// Noncrossing set partitions of {0..n-1} as block lists. The block of the
// first point splits the rest into independent gaps, which is both the
// counting argument for the Catalan numbers and the recursion used here.
void nc_set_partitions(const std::vector<int>& points, std::vector<std::vector<int>>& current,
                       const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
  if (points.empty()) {
    emit(current);
    return;
  }
  const int n = static_cast<int>(points.size());
  // Choose the block of points[0] as a subset of indices {0} u {1..n-1},
  // then recurse over the gaps between consecutive chosen indices.
  std::vector<int> chosen;
  std::function<void(int)> choose = [&](int from) {
    // Finish this choice: block = points[chosen], gaps partitioned.
    {
      std::vector<int> block;
      block.push_back(points[0]);
      for (int c : chosen) block.push_back(points[c]);
      // Gap boundaries: 0, chosen..., n.
      std::vector<std::vector<int>> gaps;
      int prev = 0;
      for (int c : chosen) {
        std::vector<int> gap(points.begin() + prev + 1, points.begin() + c);
        gaps.push_back(std::move(gap));
        prev = c;
      }
      gaps.emplace_back(points.begin() + prev + 1, points.end());

      std::function<void(size_t)> rec = [&](size_t gi) {
        if (gi == gaps.size()) {
          emit(current);
          return;
        }
        nc_set_partitions(gaps[gi], current,
                          [&](const std::vector<std::vector<int>>&) { rec(gi + 1); });
      };
      current.push_back(std::move(block));
      rec(0);
      current.pop_back();
    }
    for (int next = from; next < n; ++next) {
      chosen.push_back(next);
      choose(next + 1);
      chosen.pop_back();
    }
  };
  choose(1);
}

}  // namespace

std::vector<ColouredPartition> all_noncrossing_partitions(const ColouredWord& upper,
                                                          const ColouredWord& lower) {
  const int m = static_cast<int>(upper.size());
  const int n = static_cast<int>(lower.size());
  const int total = m + n;
  // Boundary position k (1-based): upper k for k <= m, lower 2.. mapped back.
  auto point_of = [&](int pos1) {
    return pos1 <= m ? upper_point(pos1) : lower_point(m + n - pos1 + 1);
  };
  std::vector<ColouredPartition> out;
  if (total == 0) {
    out.push_back(empty_partition());
    return out;
  }
  std::vector<int> points(total);
  std::iota(points.begin(), points.end(), 1);
  std::vector<std::vector<int>> current;
  nc_set_partitions(points, current, [&](const std::vector<std::vector<int>>& blocks) {
    std::vector<Block> bs;
    bs.reserve(blocks.size());
    for (const auto& b : blocks) {
      Block nb;
      nb.reserve(b.size());
      for (int pos : b) nb.push_back(point_of(pos));
      bs.push_back(std::move(nb));
    }
    out.emplace_back(upper, lower, std::move(bs));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ProjectiveClass> enumerate_projectives(const ColouredWord& w,
                                                   const CategoryPredicate& C, int budget_points) {
  if (2 * static_cast<int>(w.size()) > budget_points)
    throw Error(errc::budget_exceeded, "word needs " + std::to_string(2 * w.size()) +
                                           " boundary points, budget is " +
                                           std::to_string(budget_points));
  std::vector<ProjectiveClass> out;
  for (const ColouredPartition& p : all_noncrossing_partitions(w, w))
    if (is_projective(p) && C.member(p)) out.push_back(ProjectiveClass{p, w});
  return out;
}

std::vector<FusionTerm> tensor_decompose(const ColouredPartition& p, const ColouredPartition& q,
                                         const CategoryPredicate& C) {
  if (!C.member(p) || !C.member(q))
    throw Error(errc::not_member, "tensor_decompose operands must be members of the category");
  std::vector<FusionTerm> out;
  auto keep = [&](FusionTerm::Kind kind, int k, ColouredPartition part) {
    if (C.member(part)) out.push_back(FusionTerm{kind, k, std::move(part)});
  };
  keep(FusionTerm::Kind::Tensor, 0, tensor(p, q));
  const int kmax = std::min(through_block_count(p), through_block_count(q));
  for (int k = 1; k <= kmax; ++k) {
    keep(FusionTerm::Kind::Square, k, square_contract(p, q, k));
    keep(FusionTerm::Kind::Boxvert, k, boxvert_contract(p, q, k));
  }
  return out;
}

std::optional<ColouredPartition> candidate_implementer(const ColouredPartition& p,
                                                       const ColouredPartition& q) {
  const std::vector<int> pt = through_blocks(p);
  const std::vector<int> qt = through_blocks(q);
  if (pt.size() != qt.size()) return std::nullopt;
  std::vector<Block> blocks;
  auto upper_legs = [](const ColouredPartition& part, int bi) {
    Block legs;
    for (const PointRef& pr : part.blocks()[bi])
      if (pr.row == Row::Upper) legs.push_back(pr);
    return legs;
  };
  // p's upper-only blocks stay upper; q's upper-only blocks mirror to the
  // lower row; matching through-blocks are joined.
  for (const Block& b : p.blocks()) {
    if (std::all_of(b.begin(), b.end(), [](const PointRef& x) { return x.row == Row::Upper; }))
      blocks.push_back(b);
  }
  for (const Block& b : q.blocks()) {
    if (std::all_of(b.begin(), b.end(), [](const PointRef& x) { return x.row == Row::Upper; })) {
      Block nb;
      for (const PointRef& x : b) nb.push_back(lower_point(x.index));
      blocks.push_back(std::move(nb));
    }
  }
  for (size_t i = 0; i < pt.size(); ++i) {
    Block joined = upper_legs(p, pt[i]);
    for (const PointRef& x : upper_legs(q, qt[i])) joined.push_back(lower_point(x.index));
    blocks.push_back(std::move(joined));
  }
  return ColouredPartition(p.upper(), q.upper(), std::move(blocks));
}

bool equivalent(const ColouredPartition& p, const ColouredPartition& q, const CategoryPredicate& C,
                EquivalenceMode mode, int budget_points) {
  if (!is_projective(p) || !is_projective(q))
    throw Error(errc::not_projective, "equivalence is defined for projective partitions");
  if (!C.member(p) || !C.member(q))
    throw Error(errc::not_member, "equivalence operands must be members of the category");
  if (through_block_count(p) != through_block_count(q)) return false;

  auto implements = [&](const ColouredPartition& r) {
    if (!C.member(r)) return false;
    return compose(involute(r), r).partition == p && compose(r, involute(r)).partition == q;
  };

  if (mode == EquivalenceMode::Candidate) {
    std::optional<ColouredPartition> r = candidate_implementer(p, q);
    return r && implements(*r);
  }
  const int total = p.upper_size() + q.upper_size();
  if (total > budget_points)
    throw Error(errc::budget_exceeded, "exhaustive search needs " + std::to_string(total) +
                                           " boundary points, budget is " +
                                           std::to_string(budget_points));
  for (const ColouredPartition& r : all_noncrossing_partitions(p.upper(), q.upper()))
    if (implements(r)) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Exact rational elimination for the dimension system.

namespace {

struct Frac {
  long long num = 0;
  long long den = 1;

  static Frac of(long long v) { return Frac{v, 1}; }
  void reduce() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }
  bool zero() const { return num == 0; }
};

Frac operator*(const Frac& a, const Frac& b) {
  Frac r{a.num * b.num, a.den * b.den};
  r.reduce();
  return r;
}
Frac operator-(const Frac& a, const Frac& b) {
  Frac r{a.num * b.den - b.num * a.den, a.den * b.den};
  r.reduce();
  return r;
}
Frac operator/(const Frac& a, const Frac& b) {
  Frac r{a.num * b.den, a.den * b.num};
  r.reduce();
  return r;
}

}  // namespace

std::map<std::string, long long> dimension_solve(
    const CategoryPredicate& C, long long N, int max_word_len,
    const std::vector<Colour>& alphabet,
    const std::function<std::string(const ColouredPartition&)>& label_of, int budget_points) {
  if (N < 4) throw Error(errc::parse_error, "dimension counting requires N >= 4");
  if (2 * max_word_len > budget_points)
    throw Error(errc::budget_exceeded, "max word length exceeds the point budget");

  // Gather one equation per word, indexing variables by label string.
  std::map<std::string, int> var_index;
  std::vector<std::map<int, long long>> rows;
  std::vector<long long> rhs;

  std::vector<ColouredWord> frontier{ColouredWord{}};
  for (int len = 0; len <= max_word_len; ++len) {
    for (const ColouredWord& w : frontier) {
      std::map<int, long long> row;
      for (const ProjectiveClass& pc : enumerate_projectives(w, C, budget_points)) {
        std::string label = label_of(pc.representative);
        auto [it, fresh] = var_index.emplace(label, static_cast<int>(var_index.size()));
        (void)fresh;
        ++row[it->second];
      }
      long long value = 1;
      for (int i = 0; i < len; ++i) value *= N;
      rows.push_back(std::move(row));
      rhs.push_back(value);
    }
    if (len == max_word_len) break;
    std::vector<ColouredWord> next;
    for (const ColouredWord& w : frontier)
      for (const Colour& c : alphabet) {
        ColouredWord nw = w;
        nw.push_back(c);
        next.push_back(std::move(nw));
      }
    frontier = std::move(next);
  }

  const int nvars = static_cast<int>(var_index.size());
  const int neqs = static_cast<int>(rows.size());
  std::vector<std::vector<Frac>> a(neqs, std::vector<Frac>(nvars, Frac{}));
  std::vector<Frac> b(neqs);
  for (int i = 0; i < neqs; ++i) {
    for (auto& [v, coeff] : rows[i]) a[i][v] = Frac::of(coeff);
    b[i] = Frac::of(rhs[i]);
  }

  // Gauss-Jordan over the rationals.
  std::vector<int> pivot_of_col(nvars, -1);
  int rank = 0;
  for (int col = 0; col < nvars && rank < neqs; ++col) {
    int pivot = -1;
    for (int r = rank; r < neqs; ++r)
      if (!a[r][col].zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[pivot], a[rank]);
    std::swap(b[pivot], b[rank]);
    Frac inv = a[rank][col];
    for (int c = col; c < nvars; ++c) a[rank][c] = a[rank][c] / inv;
    b[rank] = b[rank] / inv;
    for (int r = 0; r < neqs; ++r) {
      if (r == rank || a[r][col].zero()) continue;
      Frac f = a[r][col];
      for (int c = col; c < nvars; ++c) a[r][c] = a[r][c] - f * a[rank][c];
      b[r] = b[r] - f * b[rank];
    }
    pivot_of_col[col] = rank;
    ++rank;
  }
  // Inconsistency means a broken labeler rather than user error.
  for (int r = rank; r < neqs; ++r)
    if (!b[r].zero())
      throw Error(errc::underdetermined, "dimension system is inconsistent");

  std::map<std::string, long long> result;
  for (const auto& [label, v] : var_index) {
    int piv = pivot_of_col[v];
    if (piv < 0)
      throw Error(errc::underdetermined, "dimension of '" + label + "' is not pinned by words up to length " +
                                             std::to_string(max_word_len));
    // The pivot row must involve only this variable.
    for (int c = 0; c < nvars; ++c)
      if (c != v && !a[piv][c].zero())
        throw Error(errc::underdetermined,
                    "dimension of '" + label + "' is entangled with other labels");
    if (b[piv].den != 1)
      throw Error(errc::underdetermined, "dimension of '" + label + "' is not an integer");
    result[label] = b[piv].num;
  }
  return result;
}

}  // namespace ncpqg
