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

#include "ncpqg/oplusplus.hpp"

#include <algorithm>
#include <sstream>

#include "ncpqg/errors.hpp"
#include "ncpqg/fusion_engine.hpp"
#include "ncpqg/groups.hpp"

namespace ncpqg {

namespace {

long long reduce_k(long long ell, long long k) {
  if (ell == 0) return k;
  return ((k % ell) + ell) % ell;
}

void require_same_ell(const MLabel& a, const MLabel& b) {
  if (a.ell != b.ell)
    throw Error(errc::modulus_mismatch, "labels from M_" + std::to_string(a.ell) + " and M_" +
                                            std::to_string(b.ell));
}

}  // namespace

MLabel m_label(long long ell, long long k, long long n) {
  if (ell < 0 || n < 0) throw Error(errc::parse_error, "m_label needs ell >= 0 and n >= 0");
  return MLabel{ell, reduce_k(ell, k), n};
}

MLabel m_product(const MLabel& a, const MLabel& b) {
  require_same_ell(a, b);
  long long k = a.k + (a.n % 2 == 0 ? b.k : -b.k);
  return m_label(a.ell, k, a.n + b.n);
}

MLabel m_conjugate(const MLabel& a) {
  return m_label(a.ell, a.n % 2 == 0 ? -a.k : a.k, a.n);
}

std::string m_to_string(const MLabel& a) {
  if (is_trivial(a)) return "1";
  std::ostringstream os;
  if (a.k != 0) {
    os << "t";
    if (a.k != 1) os << "^" << a.k;
  }
  if (a.n != 0) {
    if (a.k != 0) os << " ";
    os << "X";
    if (a.n != 1) os << "^" << a.n;
  }
  return os.str();
}

MLabel m_parse(long long ell, const std::string& text) {
  std::istringstream is(text);
  std::vector<std::string> tokens;
  for (std::string tok; is >> tok;) tokens.push_back(tok);
  if (tokens.empty()) throw Error(errc::parse_error, "empty label");
  if (tokens.size() == 1 && tokens[0] == "1") return m_trivial(ell);
  long long k = 0, n = 0;
  size_t i = 0;
  auto exponent = [&](const std::string& tok, char head) -> long long {
    if (tok.size() == 1) return 1;
    if (tok.size() < 3 || tok[1] != '^')
      throw Error(errc::parse_error, std::string("expected '") + head + "^<int>' in '" + tok + "'");
    try {
      return std::stoll(tok.substr(2));
    } catch (const std::exception&) {
      throw Error(errc::parse_error, "bad exponent in '" + tok + "'");
    }
  };
  if (i < tokens.size() && tokens[i][0] == 't') k = exponent(tokens[i++], 't');
  if (i < tokens.size() && tokens[i][0] == 'X') n = exponent(tokens[i++], 'X');
  if (i != tokens.size() || (k == 0 && n == 0))
    throw Error(errc::parse_error, "cannot parse label '" + text + "' (expected \"t^k X^n\" or \"1\")");
  if (n < 0) throw Error(errc::parse_error, "X exponent must be >= 0");
  return m_label(ell, k, n);
}

MLabel label_of_projective_oplus(const ColouredPartition& p, long long ell) {
  CategoryPredicate C = CategoryPredicate::dell(ell);
  if (!is_projective(p) || !C.member(p))
    throw Error(errc::not_member, "not a projective member of D_" + std::to_string(ell));
  const long long n = through_block_count(p);
  const DihedralElement d = dihedral_eval(p.upper());
  if (d.eps != (n % 2))
    throw Error(errc::parity_violation, "x-parity of phi(w) disagrees with t(p) on " + debug_string(p));
  return m_label(ell, d.t, n);
}

namespace {

ColouredPartition dd_cap(bool positive) {
  // D_xy* D_xy, or its y-x mirror for negative powers of t.
  ColouredWord w = positive ? ColouredWord{colour("x"), colour("y")}
                            : ColouredWord{colour("y"), colour("x")};
  return beta(w, w);
}

}  // namespace

ColouredPartition rep_of_mlabel(const MLabel& a) {
  ColouredPartition rep = empty_partition();
  const long long copies = a.k < 0 ? -a.k : a.k;
  for (long long i = 0; i < copies; ++i) rep = tensor(rep, dd_cap(a.k > 0));
  ColouredWord x{colour("x")};
  for (long long i = 0; i < a.n; ++i) rep = tensor(rep, pi(x, x));
  return rep;
}

int rep_points_of_mlabel(const MLabel& a) {
  return static_cast<int>(4 * (a.k < 0 ? -a.k : a.k) + 2 * a.n);
}

std::vector<MLabel> closed_fusion_oplus(const MLabel& a, const MLabel& b) {
  require_same_ell(a, b);
  // Transport b through its X-power: t^kb X^n' = X^n' t^{(-1)^{n'} kb}, then
  // normalize t^{ka} X^m t^{k''} termwise.
  const long long kpp = b.n % 2 == 0 ? b.k : -b.k;
  std::vector<MLabel> out;
  for (long long i = 0; i <= std::min(a.n, b.n); ++i) {
    const long long m = a.n + b.n - 2 * i;
    const long long k = a.k + (m % 2 == 0 ? kpp : -kpp);
    out.push_back(m_label(a.ell, k, m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MLabel> realizable_mlabels(long long ell, int budget_points) {
  std::vector<MLabel> out;
  const long long kmax = budget_points / 4;
  const long long klo = ell == 0 ? -kmax : 0;
  const long long khi = ell == 0 ? kmax : std::min(ell - 1, kmax);
  for (long long k = klo; k <= khi; ++k)
    for (long long n = 0;; ++n) {
      MLabel lab = m_label(ell, k, n);
      if (rep_points_of_mlabel(lab) > budget_points) break;
      out.push_back(lab);
    }
  std::sort(out.begin(), out.end());
  return out;
}

OneDimGroupOplus one_dim_group_oplus(long long ell, int witness_bound) {
  OneDimGroupOplus info;
  info.ell = ell;
  CategoryPredicate C = CategoryPredicate::dell(ell);
  const ColouredPartition one = empty_partition();
  std::ostringstream detail;
  bool ok = true;
  auto theta_power = [&](long long j) { return rep_of_mlabel(MLabel{ell, j, 0}); };
  if (ell > 0) {
    // The candidate implementer here is D_xy^{tensor ell}, the generator
    // forcing t^ell = 1.
    ColouredPartition p = empty_partition();
    for (long long i = 0; i < ell; ++i) p = tensor(p, dd_cap(true));
    bool collapse = equivalent(p, one, C);
    ok = ok && collapse;
    detail << "t^" << ell << (collapse ? " ~ 1" : " !~ 1 (unexpected)");
    for (long long j = 1; j < ell; ++j) {
      ColouredPartition pj = empty_partition();
      for (long long i = 0; i < j; ++i) pj = tensor(pj, dd_cap(true));
      bool distinct = !equivalent(pj, one, C);
      ok = ok && distinct;
      detail << "; t^" << j << (distinct ? " !~ 1" : " ~ 1 (unexpected)");
    }
  } else {
    for (long long j = 1; j <= witness_bound; ++j) {
      bool distinct = !equivalent(theta_power(j), one, C);
      ok = ok && distinct;
      detail << (j > 1 ? "; " : "") << "t^" << j << (distinct ? " !~ 1" : " ~ 1 (unexpected)");
    }
  }
  info.certified = ok;
  info.detail = detail.str();
  return info;
}

}  // namespace ncpqg
