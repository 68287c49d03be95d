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
// The O_N^{++}(l) family: normal forms t^k X^n in the monoid
// M_l = < X, t | t^l, X t = t^{-1} X >, label extraction from projective
// partitions, closed-form fusion, and the cyclic group of one-dimensional
// representations with diagram witnesses.

#ifndef NCPQG_OPLUSPLUS_HPP_
#define NCPQG_OPLUSPLUS_HPP_

#include <string>
#include <vector>

#include "ncpqg/category.hpp"
#include "ncpqg/partition.hpp"

namespace ncpqg {

// Normal form t^k X^n; for ell > 0 the exponent k is stored reduced into
// [0, ell), for ell = 0 it is a plain integer. n = 0, k = 0 is the trivial
// representation.
struct MLabel {
  long long ell = 0;
  long long k = 0;
  long long n = 0;

  friend bool operator==(const MLabel&, const MLabel&) = default;
  friend auto operator<=>(const MLabel&, const MLabel&) = default;
};

MLabel m_label(long long ell, long long k, long long n);
inline MLabel m_trivial(long long ell) { return m_label(ell, 0, 0); }
inline bool is_trivial(const MLabel& a) { return a.k == 0 && a.n == 0; }

// (t^k X^n)(t^k' X^n') = t^{k + (-1)^n k'} X^{n+n'}. Throws
// modulus_mismatch when the operands live in different M_l.
MLabel m_product(const MLabel& a, const MLabel& b);

// The antimultiplicative involution with X
// fixed and t conjugated: t^k X^n -> t^{(-1)^{n+1} k} X^n.
MLabel m_conjugate(const MLabel& a);

std::string m_to_string(const MLabel& a);
MLabel m_parse(long long ell, const std::string& text);  // "t^k X^n", trivial "1"

// n = t(p), k = the z-exponent of phi(upper word) reduced mod l. Requires p
// projective and a member of D_l (not_member otherwise); a parity mismatch
// between the x-exponent and t(p) throws parity_violation (a falsified
// invariant, never expected on members).
MLabel label_of_projective_oplus(const ColouredPartition& p, long long ell);

// Standard representative (D_xy* D_xy)^{tensor k} tensor pi(x,x)^{tensor n},
// with D_yx caps realizing negative k when ell = 0.
ColouredPartition rep_of_mlabel(const MLabel& a);

// Boundary points of rep_of_mlabel.
int rep_points_of_mlabel(const MLabel& a);

// t^k X^n tensor t^k' X^n' = sum over i = 0..min(n, n') of
// t^{k + (-1)^n k'} X^{n+n'-2i}, each with multiplicity one; the i with
// n + n' - 2i = 0 (present iff n = n') is the one-dimensional term.
std::vector<MLabel> closed_fusion_oplus(const MLabel& a, const MLabel& b);

// All labels whose standard representative fits within the point budget,
// sorted.
std::vector<MLabel> realizable_mlabels(long long ell, int budget_points);

struct OneDimGroupOplus {
  long long ell = 0;  // group is Z_ell, infinite cyclic when ell = 0
  bool certified = false;
  std::string detail;
};

// Certifies G(O_N^{++}(l)) = Z_l with diagram witnesses: t^l ~ trivial and
// t^j !~ trivial for 0 < j < l (for l = 0, non-triviality of t^j is
// witnessed up to the given power bound).
OneDimGroupOplus one_dim_group_oplus(long long ell, int witness_bound = 4);

}  // namespace ncpqg

#endif  // NCPQG_OPLUSPLUS_HPP_
