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

#include "ncpqg/groups.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "ncpqg/errors.hpp"

namespace ncpqg {

DihedralElement dihedral_eval(const ColouredWord& w) {
  DihedralElement acc = dihedral_identity();
  for (const Colour& c : w) {
    DihedralElement letter;
    if (c.symbol == "x")
      letter = DihedralElement{0, 1};
    else if (c.symbol == "y")
      letter = DihedralElement{-1, 1};
    else
      throw Error(errc::unknown_letter, "dihedral evaluation on letter '" + c.symbol + "'");
    acc = dihedral_mul(acc, letter);
  }
  return acc;
}

bool in_gamma_ell(const DihedralElement& g, long long ell) {
  if (g.eps != 0) return false;
  if (ell == 0) return g.t == 0;
  return g.t % ell == 0;
}

// ---------------------------------------------------------------------------

struct Group::Impl {
  // order > 0: finite cyclic; order == 0: infinite cyclic; table groups use
  // names/product and order = names.size().
  bool cyclic = true;
  long long order = 0;
  std::vector<std::string> names;
  std::vector<std::vector<int>> product;
  std::vector<int> inverse;
  int identity_index = 0;
};

Group Group::cyclic(long long order) {
  if (order < 0) throw Error(errc::parse_error, "cyclic order must be >= 0");
  auto impl = std::make_shared<Impl>();
  impl->cyclic = true;
  impl->order = order;
  return Group(std::move(impl));
}

Group Group::table(std::vector<std::string> names, std::vector<std::vector<int>> product) {
  const int n = static_cast<int>(names.size());
  if (n == 0) throw Error(errc::parse_error, "table group needs at least one element");
  if (static_cast<int>(product.size()) != n)
    throw Error(errc::parse_error, "product table must be square");
  for (const auto& row : product) {
    if (static_cast<int>(row.size()) != n)
      throw Error(errc::parse_error, "product table must be square");
    for (int v : row)
      if (v < 0 || v >= n) throw Error(errc::parse_error, "product table entry out of range");
  }
  {
    std::set<std::string> uniq(names.begin(), names.end());
    if (static_cast<int>(uniq.size()) != n)
      throw Error(errc::parse_error, "duplicate element names");
  }
  // Latin square.
  for (int i = 0; i < n; ++i) {
    std::vector<char> rowseen(n, 0), colseen(n, 0);
    for (int j = 0; j < n; ++j) {
      if (rowseen[product[i][j]]++)
        throw Error(errc::parse_error, "product table row is not a permutation");
      if (colseen[product[j][i]]++)
        throw Error(errc::parse_error, "product table column is not a permutation");
    }
  }
  // Identity.
  int id = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int j = 0; j < n; ++j)
      if (product[e][j] != j || product[j][e] != j) {
        ok = false;
        break;
      }
    if (ok) {
      id = e;
      break;
    }
  }
  if (id < 0) throw Error(errc::parse_error, "product table has no identity");
  // Inverses.
  std::vector<int> inverse(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (product[a][b] == id && product[b][a] == id) {
        inverse[a] = b;
        break;
      }
    if (inverse[a] < 0) throw Error(errc::parse_error, "element '" + names[a] + "' has no inverse");
  }
  // Associativity.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (product[product[a][b]][c] != product[a][product[b][c]])
          throw Error(errc::parse_error, "product table is not associative");

  auto impl = std::make_shared<Impl>();
  impl->cyclic = false;
  impl->order = n;
  impl->names = std::move(names);
  impl->product = std::move(product);
  impl->inverse = std::move(inverse);
  impl->identity_index = id;
  return Group(std::move(impl));
}

bool Group::is_finite() const { return !impl_->cyclic || impl_->order > 0; }
long long Group::order() const { return impl_->order; }
bool Group::is_cyclic() const { return impl_->cyclic; }

GroupElement Group::identity() const {
  return GroupElement{impl_.get(), impl_->cyclic ? 0 : impl_->identity_index};
}

bool Group::owns(const GroupElement& a) const { return a.owner == impl_.get(); }

namespace {
void require_owned(const Group& g, const GroupElement& a) {
  if (!g.owns(a)) throw Error(errc::mixed_groups, "element from a different group oracle");
}
}  // namespace

GroupElement Group::mul(const GroupElement& a, const GroupElement& b) const {
  require_owned(*this, a);
  require_owned(*this, b);
  if (impl_->cyclic) {
    long long v = a.value + b.value;
    if (impl_->order > 0) v = ((v % impl_->order) + impl_->order) % impl_->order;
    return GroupElement{impl_.get(), v};
  }
  return GroupElement{impl_.get(), impl_->product[a.value][b.value]};
}

GroupElement Group::inverse(const GroupElement& a) const {
  require_owned(*this, a);
  if (impl_->cyclic) {
    long long v = -a.value;
    if (impl_->order > 0) v = ((v % impl_->order) + impl_->order) % impl_->order;
    return GroupElement{impl_.get(), v};
  }
  return GroupElement{impl_.get(), impl_->inverse[a.value]};
}

std::string Group::name(const GroupElement& a) const {
  require_owned(*this, a);
  if (impl_->cyclic) return a.value == 0 ? "e" : "g" + std::to_string(a.value);
  return impl_->names[a.value];
}

GroupElement Group::element(const std::string& name) const {
  if (impl_->cyclic) {
    if (name == "e") return identity();
    std::string digits;
    if (name.size() > 1 && name[0] == 'g')
      digits = name.substr(1);
    else if (name == "g")
      digits = "1";
    else
      throw Error(errc::parse_error, "unknown cyclic element '" + name + "'");
    try {
      long long v = std::stoll(digits);
      if (impl_->order > 0) v = ((v % impl_->order) + impl_->order) % impl_->order;
      return GroupElement{impl_.get(), v};
    } catch (const std::exception&) {
      throw Error(errc::parse_error, "unknown cyclic element '" + name + "'");
    }
  }
  for (int i = 0; i < static_cast<int>(impl_->names.size()); ++i)
    if (impl_->names[i] == name) return GroupElement{impl_.get(), i};
  throw Error(errc::parse_error, "unknown element '" + name + "'");
}

std::vector<GroupElement> Group::elements() const {
  if (!is_finite()) throw Error(errc::parse_error, "cannot enumerate an infinite group");
  std::vector<GroupElement> out;
  for (long long v = 0; v < impl_->order; ++v) out.push_back(GroupElement{impl_.get(), v});
  return out;
}

// ---------------------------------------------------------------------------

Subgroup Subgroup::closure(const Group& group, const std::vector<GroupElement>& generators) {
  for (const auto& g : generators) require_owned(group, g);
  if (!group.is_finite()) {
    long long d = 0;
    for (const auto& g : generators) d = std::gcd(d, g.value < 0 ? -g.value : g.value);
    return Subgroup(group, generators, {}, d, true);
  }
  std::set<GroupElement> closed;
  std::deque<GroupElement> todo;
  auto push = [&](const GroupElement& g) {
    if (closed.insert(g).second) todo.push_back(g);
  };
  push(group.identity());
  for (const auto& g : generators) {
    push(g);
    push(group.inverse(g));
  }
  while (!todo.empty()) {
    GroupElement a = todo.front();
    todo.pop_front();
    for (const auto& b : std::vector<GroupElement>(closed.begin(), closed.end())) {
      push(group.mul(a, b));
      push(group.mul(b, a));
    }
  }
  std::vector<GroupElement> elems(closed.begin(), closed.end());
  return Subgroup(group, generators, std::move(elems), 0, false);
}

Subgroup Subgroup::trivial(const Group& group) { return closure(group, {}); }

Subgroup Subgroup::whole(const Group& group) {
  if (!group.is_finite()) {
    GroupElement one{nullptr, 1};
    one = group.element("g1");
    return closure(group, {one});
  }
  return closure(group, group.elements());
}

bool Subgroup::contains(const GroupElement& g) const {
  require_owned(group_, g);
  if (infinite_case_) {
    if (modulus_ == 0) return g.value == 0;
    return g.value % modulus_ == 0;
  }
  return std::binary_search(elements_.begin(), elements_.end(), g);
}

const std::vector<GroupElement>& Subgroup::elements() const {
  if (infinite_case_ && modulus_ != 0)
    throw Error(errc::parse_error, "cannot enumerate an infinite subgroup");
  return elements_;
}

bool Subgroup::is_finite() const { return !infinite_case_ || modulus_ == 0; }

// ---------------------------------------------------------------------------

GeneratingSet GeneratingSet::make(const Group& group, std::vector<ColourMapping> mappings) {
  return make(group, std::move(mappings), {});
}

GeneratingSet GeneratingSet::make(const Group& group, std::vector<ColourMapping> mappings,
                                  std::map<std::string, ColouredWord> rep_words) {
  if (mappings.empty()) throw Error(errc::parse_error, "generating set needs at least one colour");
  std::vector<Colour> cols;
  std::map<std::string, GroupElement> assign;
  for (const auto& m : mappings) {
    if (assign.count(m.col.symbol))
      throw Error(errc::parse_error, "duplicate colour '" + m.col.symbol + "'");
    assign.emplace(m.col.symbol, group.element(m.maps_to));
    cols.push_back(m.col);
  }
  // The involution must stay inside S and phi must respect it.
  for (const Colour& c : cols) {
    auto it = assign.find(c.inverse);
    if (it == assign.end())
      throw Error(errc::parse_error,
                  "colour '" + c.symbol + "' has inverse '" + c.inverse + "' outside the set");
    if (!(group.inverse(assign.at(c.symbol)) == it->second))
      throw Error(errc::parse_error, "phi does not respect inversion on colour '" + c.symbol + "'");
  }

  std::map<long long, ColouredWord> reps;
  if (group.is_finite()) {
    // Shortlex BFS over the Cayley graph; expanding the queue in colour
    // order makes the first word reaching an element its shortlex geodesic.
    std::deque<std::pair<GroupElement, ColouredWord>> queue;
    queue.emplace_back(group.identity(), ColouredWord{});
    std::set<long long> visited{group.identity().value};
    while (!queue.empty()) {
      auto [g, w] = queue.front();
      queue.pop_front();
      for (const Colour& c : cols) {
        GroupElement next = group.mul(g, assign.at(c.symbol));
        if (visited.insert(next.value).second) {
          ColouredWord nw = w;
          nw.push_back(c);
          reps.emplace(next.value, nw);
          queue.emplace_back(next, std::move(nw));
        }
      }
    }
    if (static_cast<long long>(visited.size()) != group.order())
      throw Error(errc::parse_error, "colour assignment does not generate the group");
    // The identity needs a nonempty word: shortest return along an edge into
    // the identity from an element with a known geodesic.
    std::optional<ColouredWord> identity_rep;
    auto better = [](const ColouredWord& a, const ColouredWord& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    };
    for (const auto& g : group.elements()) {
      for (const Colour& c : cols) {
        if (!(group.mul(g, assign.at(c.symbol)) == group.identity())) continue;
        ColouredWord w = g == group.identity() ? ColouredWord{} : reps.at(g.value);
        w.push_back(c);
        if (!identity_rep || better(w, *identity_rep)) identity_rep = w;
      }
    }
    if (!identity_rep)
      throw Error(errc::parse_error, "no nonempty word evaluates to the identity");
    reps[group.identity().value] = *identity_rep;
  }

  GeneratingSet gs(group, std::move(cols), std::move(assign), std::move(reps));
  // Externally supplied representatives override the computed ones after
  // validation.
  for (auto& [name, w] : rep_words) {
    GroupElement target = group.element(name);
    if (w.empty()) throw Error(errc::parse_error, "representative words must be nonempty");
    if (!(gs.eval(w) == target))
      throw Error(errc::parse_error, "representative word for '" + name + "' evaluates elsewhere");
    gs.reps_[target.value] = w;
  }
  return gs;
}

bool GeneratingSet::knows(const std::string& symbol) const { return assign_.count(symbol) > 0; }

GroupElement GeneratingSet::eval_letter(const Colour& c) const {
  auto it = assign_.find(c.symbol);
  if (it == assign_.end()) throw Error(errc::unknown_letter, "letter '" + c.symbol + "' outside S");
  return it->second;
}

GroupElement GeneratingSet::eval(const ColouredWord& w) const {
  GroupElement acc = group_.identity();
  for (const Colour& c : w) acc = group_.mul(acc, eval_letter(c));
  return acc;
}

ColouredWord GeneratingSet::rep_word(const GroupElement& g) const {
  if (!group_.owns(g)) throw Error(errc::mixed_groups, "element from a different group oracle");
  auto it = reps_.find(g.value);
  if (it != reps_.end()) return it->second;
  if (group_.is_finite())
    throw Error(errc::parse_error, "no representative word for element " + group_.name(g));
  return search_rep(g);
}

ColouredWord GeneratingSet::search_rep(const GroupElement& g) const {
  // Infinite cyclic case: breadth-first search, expanding until the target
  // is hit. Termination: the assignment generates Z, so every integer is
  // reachable.
  std::deque<std::pair<GroupElement, ColouredWord>> queue;
  queue.emplace_back(group_.identity(), ColouredWord{});
  std::set<long long> visited{0};
  while (!queue.empty()) {
    auto [h, w] = queue.front();
    queue.pop_front();
    if (h == g && !w.empty()) return w;
    for (const Colour& c : colours_) {
      GroupElement next = group_.mul(h, eval_letter(c));
      ColouredWord nw = w;
      nw.push_back(c);
      if (next == g && !nw.empty()) return nw;
      if (visited.insert(next.value).second) queue.emplace_back(next, std::move(nw));
    }
  }
  throw Error(errc::parse_error, "unreachable element");
}

}  // namespace ncpqg
