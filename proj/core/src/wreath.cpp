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

#include "ncpqg/wreath.hpp"

#include <algorithm>
#include <sstream>

#include "ncpqg/errors.hpp"
#include "ncpqg/fusion_engine.hpp"

namespace ncpqg {

WreathContext::WreathContext(Subgroup lambda, GeneratingSet gens)
    : lambda_(std::move(lambda)),
      gens_(std::move(gens)),
      category_(CategoryPredicate::d_gamma_lambda_s(lambda_, gens_)) {}

GroupElement WreathContext::coset_representative(const GroupElement& g) const {
  const Group& gr = gamma();
  if (!gr.is_finite()) {
    long long d = lambda_.modulus();
    if (d == 0) return g;
    long long v = ((g.value % d) + d) % d;
    GroupElement rep = g;
    rep.value = v;
    return rep;
  }
  GroupElement best = g;
  bool first = true;
  for (const GroupElement& l : lambda_.elements()) {
    GroupElement cand = gr.mul(g, l);
    if (first || cand < best) {
      best = cand;
      first = false;
    }
  }
  return best;
}

WLabel one_dim_label(const WreathContext& ctx, const GroupElement& lambda) {
  if (!ctx.lambda().contains(lambda))
    throw Error(errc::not_member,
                "one-dimensional labels live in Lambda; got " + ctx.gamma().name(lambda));
  WLabel lab;
  lab.one_dim = true;
  lab.lambda = lambda;
  return lab;
}

WLabel normalize_word(const WreathContext& ctx, std::vector<GroupElement> letters) {
  if (letters.empty()) throw Error(errc::empty_word, "word labels are nonempty");
  const Group& g = ctx.gamma();
  for (size_t i = 0; i + 1 < letters.size(); ++i) {
    GroupElement rep = ctx.coset_representative(letters[i]);
    GroupElement residue = g.mul(g.inverse(rep), letters[i]);
    letters[i] = rep;
    letters[i + 1] = g.mul(residue, letters[i + 1]);
  }
  WLabel lab;
  lab.letters = std::move(letters);
  return lab;
}

WLabel bullet(const WreathContext& ctx, const std::vector<GroupElement>& a,
              const std::vector<GroupElement>& b, const GroupElement& c) {
  if (!ctx.lambda().contains(c))
    throw Error(errc::not_member, "bullet requires c in Lambda; got " + ctx.gamma().name(c));
  const Group& g = ctx.gamma();
  if (a.empty() && b.empty()) return one_dim_label(ctx, c);
  std::vector<GroupElement> letters;
  if (a.empty()) {
    letters = b;
    letters[0] = g.mul(c, letters[0]);
  } else {
    letters = a;
    letters.back() = g.mul(letters.back(), c);
    letters.insert(letters.end(), b.begin(), b.end());
  }
  return normalize_word(ctx, std::move(letters));
}

WLabel star(const WreathContext& ctx, const std::vector<GroupElement>& a,
            const std::vector<GroupElement>& b, const GroupElement& c) {
  if (a.empty() || b.empty()) throw Error(errc::empty_operand, "star requires nonempty operands");
  const Group& g = ctx.gamma();
  std::vector<GroupElement> letters(a.begin(), a.end() - 1);
  letters.push_back(g.mul(g.mul(a.back(), c), b.front()));
  letters.insert(letters.end(), b.begin() + 1, b.end());
  return normalize_word(ctx, std::move(letters));
}

WLabel label_of_projective_wreath(const WreathContext& ctx, const ColouredPartition& p) {
  if (!is_projective(p) || !ctx.category().member(p))
    throw Error(errc::not_member, "not a projective member of D_{Gamma,Lambda,S}");
  const GeneratingSet& s = ctx.gens();
  const std::vector<int> thr = through_blocks(p);
  if (thr.empty()) return one_dim_label(ctx, s.eval(p.upper()));
  // Cut the upper row at the leftmost legs of the through-blocks.
  std::vector<int> starts;
  for (int bi : thr) {
    int leftmost = 0;
    bool first = true;
    for (const PointRef& pt : p.blocks()[bi])
      if (pt.row == Row::Upper && (first || pt.index < leftmost)) {
        leftmost = pt.index;
        first = false;
      }
    starts.push_back(leftmost);
  }
  std::vector<GroupElement> letters;
  for (size_t i = 0; i < starts.size(); ++i) {
    const int from = i == 0 ? 1 : starts[i];
    const int to = i + 1 < starts.size() ? starts[i + 1] - 1 : p.upper_size();
    ColouredWord segment(p.upper().begin() + from - 1, p.upper().begin() + to);
    letters.push_back(s.eval(segment));
  }
  return normalize_word(ctx, std::move(letters));
}

ColouredPartition rep_of_wlabel(const WreathContext& ctx, const WLabel& label) {
  const GeneratingSet& s = ctx.gens();
  if (label.one_dim) {
    if (label.lambda == ctx.gamma().identity()) return empty_partition();
    ColouredWord w = s.rep_word(label.lambda);
    return beta(w, w);
  }
  ColouredPartition rep = empty_partition();
  for (const GroupElement& g : label.letters) {
    ColouredWord w = s.rep_word(g);
    rep = tensor(rep, pi(w, w));
  }
  return rep;
}

int rep_points_of_wlabel(const WreathContext& ctx, const WLabel& label) {
  const GeneratingSet& s = ctx.gens();
  if (label.one_dim) {
    if (label.lambda == ctx.gamma().identity()) return 0;
    return 2 * static_cast<int>(s.rep_word(label.lambda).size());
  }
  int pts = 0;
  for (const GroupElement& g : label.letters) pts += 2 * static_cast<int>(s.rep_word(g).size());
  return pts;
}

std::vector<WLabel> closed_fusion_wreath(const WreathContext& ctx, const WLabel& u,
                                         const WLabel& v) {
  const Group& g = ctx.gamma();
  std::vector<WLabel> out;
  if (u.one_dim && v.one_dim) {
    out.push_back(one_dim_label(ctx, g.mul(u.lambda, v.lambda)));
    return out;
  }
  if (u.one_dim) {
    std::vector<GroupElement> letters = v.letters;
    letters.front() = g.mul(u.lambda, letters.front());
    out.push_back(normalize_word(ctx, std::move(letters)));
    return out;
  }
  if (v.one_dim) {
    std::vector<GroupElement> letters = u.letters;
    letters.back() = g.mul(letters.back(), v.lambda);
    out.push_back(normalize_word(ctx, std::move(letters)));
    return out;
  }
  const auto& w = u.letters;
  const auto& wp = v.letters;
  const int n = static_cast<int>(w.size());
  const int np = static_cast<int>(wp.size());
  for (int k = 0; k <= std::min(n, np); ++k) {
    std::vector<GroupElement> a(w.begin(), w.end() - k);
    std::vector<GroupElement> b(wp.begin() + k, wp.end());
    // Nested arc products z_{k-j+1} .. z_k z'_1 .. z'_j, grown outwards.
    // They are the colourings of the contracted diagram's inner caps, so
    // admissibility gates the bullet and the star term alike.
    GroupElement cum = g.identity();
    bool admissible = true;
    for (int j = 1; j <= k; ++j) {
      cum = g.mul(g.mul(w[n - k + (k - j)], cum), wp[j - 1]);
      if (!ctx.lambda().contains(cum)) admissible = false;
    }
    if (!admissible) continue;
    out.push_back(bullet(ctx, a, b, cum));
    if (!a.empty() && !b.empty()) out.push_back(star(ctx, a, b, cum));
  }
  std::sort(out.begin(), out.end());
  return out;
}

WLabel conjugate_label(const WreathContext& ctx, const WLabel& a) {
  const Group& g = ctx.gamma();
  if (a.one_dim) return one_dim_label(ctx, g.inverse(a.lambda));
  std::vector<GroupElement> letters;
  for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it)
    letters.push_back(g.inverse(*it));
  return normalize_word(ctx, std::move(letters));
}

std::string w_to_string(const WreathContext& ctx, const WLabel& a) {
  const Group& g = ctx.gamma();
  if (a.one_dim) return "1d:" + g.name(a.lambda);
  std::string s;
  for (size_t i = 0; i < a.letters.size(); ++i) {
    if (i) s += ".";
    s += g.name(a.letters[i]);
  }
  return s;
}

WLabel w_parse(const WreathContext& ctx, const std::string& text) {
  if (text.empty()) throw Error(errc::parse_error, "empty label");
  if (text.rfind("1d:", 0) == 0)
    return one_dim_label(ctx, ctx.gamma().element(text.substr(3)));
  std::vector<GroupElement> letters;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t dot = text.find('.', pos);
    std::string name = text.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
    if (name.empty()) throw Error(errc::parse_error, "empty letter in label '" + text + "'");
    letters.push_back(ctx.gamma().element(name));
    if (dot == std::string::npos) break;
    pos = dot + 1;
  }
  return normalize_word(ctx, std::move(letters));
}

std::vector<WLabel> realizable_wlabels(const WreathContext& ctx, int max_len, int budget_points) {
  std::vector<WLabel> out;
  for (const GroupElement& l : ctx.lambda().elements()) {
    WLabel lab = one_dim_label(ctx, l);
    if (rep_points_of_wlabel(ctx, lab) <= budget_points) out.push_back(lab);
  }
  const std::vector<GroupElement> elems = ctx.gamma().elements();
  std::vector<std::vector<GroupElement>> frontier{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<GroupElement>> next;
    for (const auto& w : frontier)
      for (const GroupElement& e : elems) {
        auto nw = w;
        nw.push_back(e);
        next.push_back(std::move(nw));
      }
    frontier = std::move(next);
    for (const auto& w : frontier) {
      WLabel lab = normalize_word(ctx, w);
      if (rep_points_of_wlabel(ctx, lab) <= budget_points) out.push_back(lab);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

OneDimGroupWreath one_dim_group_wreath(const WreathContext& ctx) {
  OneDimGroupWreath info;
  const Group& g = ctx.gamma();
  std::ostringstream detail;
  bool ok = true;
  const auto& elems = ctx.lambda().elements();
  // Distinct beta(w_l, w_l) must be inequivalent.
  for (const GroupElement& l1 : elems) {
    for (const GroupElement& l2 : elems) {
      ColouredPartition p1 = rep_of_wlabel(ctx, one_dim_label(ctx, l1));
      ColouredPartition p2 = rep_of_wlabel(ctx, one_dim_label(ctx, l2));
      bool eq = equivalent(p1, p2, ctx.category());
      if (eq != (l1 == l2)) {
        ok = false;
        detail << "beta witnesses fail at (" << g.name(l1) << ", " << g.name(l2) << "); ";
      }
    }
  }
  // One-dimensional fusion must reproduce the multiplication table.
  for (const GroupElement& l1 : elems)
    for (const GroupElement& l2 : elems) {
      auto fused = closed_fusion_wreath(ctx, one_dim_label(ctx, l1), one_dim_label(ctx, l2));
      if (fused.size() != 1 || !fused[0].one_dim || !(fused[0].lambda == g.mul(l1, l2))) {
        ok = false;
        detail << "fusion table fails at (" << g.name(l1) << ", " << g.name(l2) << "); ";
      }
    }
  if (ok) detail << "group of one-dimensional representations = Lambda, order " << elems.size();
  info.certified = ok;
  info.detail = detail.str();
  return info;
}

}  // namespace ncpqg
