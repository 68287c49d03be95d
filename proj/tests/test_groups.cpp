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

#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "ncpqg/errors.hpp"

using namespace ncpqg;
using ncpqg::testing::word;

TEST_SUITE("groups") {

TEST_CASE("dihedral evaluation reduces words") {
  CHECK(dihedral_eval(word("xy")) == DihedralElement{1, 0});
  CHECK(dihedral_eval(word("xx")) == DihedralElement{0, 0});
  CHECK(dihedral_eval(word("y")) == DihedralElement{-1, 1});
  CHECK(dihedral_eval(word("x")) == DihedralElement{0, 1});
  CHECK(dihedral_eval({}) == dihedral_identity());
  CHECK_THROWS_AS(dihedral_eval(word("z")), Error);
}

TEST_CASE("dihedral evaluation is a homomorphism") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> len(0, 12), bit(0, 1);
  auto random_word = [&] {
    std::string s;
    int n = len(rng);
    for (int i = 0; i < n; ++i) s += bit(rng) ? 'x' : 'y';
    return word(s);
  };
  for (int i = 0; i < 200; ++i) {
    ColouredWord v = random_word(), w = random_word();
    CHECK(dihedral_eval(word_concat(v, w)) == dihedral_mul(dihedral_eval(v), dihedral_eval(w)));
  }
}

TEST_CASE("dihedral reduction is confluent over bracketings") {
  // Any bracketing of letterwise products reduces to the same normal form.
  std::mt19937 rng(19);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int trial = 0; trial < 100; ++trial) {
    std::string s;
    int n = 2 + trial % 9;
    for (int i = 0; i < n; ++i) s += bit(rng) ? 'x' : 'y';
    ColouredWord w = word(s);
    std::vector<DihedralElement> factors;
    for (const Colour& c : w) factors.push_back(dihedral_eval({c}));
    while (factors.size() > 1) {
      std::uniform_int_distribution<size_t> at(0, factors.size() - 2);
      size_t i = at(rng);
      factors[i] = dihedral_mul(factors[i], factors[i + 1]);
      factors.erase(factors.begin() + i + 1);
    }
    CHECK(factors[0] == dihedral_eval(w));
  }
}

TEST_CASE("dihedral inverses and involutions") {
  for (long long t = -4; t <= 4; ++t) {
    CHECK(dihedral_mul(DihedralElement{t, 0}, dihedral_inverse(DihedralElement{t, 0})) ==
          dihedral_identity());
    CHECK(dihedral_mul(DihedralElement{t, 1}, DihedralElement{t, 1}) == dihedral_identity());
  }
}

TEST_CASE("gamma_ell membership") {
  CHECK(in_gamma_ell(DihedralElement{0, 0}, 0));
  CHECK(in_gamma_ell(DihedralElement{0, 0}, 3));
  CHECK(in_gamma_ell(DihedralElement{2, 0}, 2));
  CHECK_FALSE(in_gamma_ell(DihedralElement{1, 0}, 2));
  CHECK_FALSE(in_gamma_ell(DihedralElement{1, 0}, 0));
  CHECK_FALSE(in_gamma_ell(DihedralElement{0, 1}, 1));
  CHECK(in_gamma_ell(DihedralElement{-6, 0}, 3));
}

TEST_CASE("cyclic groups") {
  Group z4 = Group::cyclic(4);
  GroupElement g = z4.element("g1");
  CHECK(z4.mul(g, z4.element("g3")) == z4.identity());
  CHECK(z4.inverse(g) == z4.element("g3"));
  CHECK(z4.name(z4.mul(g, g)) == "g2");
  CHECK(z4.element("g") == g);
  CHECK(z4.element("g5") == g);
  CHECK_THROWS_AS(z4.element("h"), Error);

  Group z = Group::cyclic(0);
  CHECK_FALSE(z.is_finite());
  CHECK(z.name(z.inverse(z.element("g2"))) == "g-2");
  CHECK_THROWS_AS(z.elements(), Error);

  Group z2 = Group::cyclic(2);
  CHECK_THROWS_AS(z2.mul(z2.identity(), z4.identity()), Error);
}

TEST_CASE("table group validation") {
  CHECK_NOTHROW(ncpqg::testing::z2z2_group());
  // Not a Latin square.
  CHECK_THROWS_AS(Group::table({"e", "a"}, {{0, 0}, {1, 1}}), Error);
  // Latin square without a two-sided identity (the subtraction quasigroup).
  CHECK_THROWS_AS(Group::table({"e", "a", "b"}, {{0, 1, 2}, {2, 0, 1}, {1, 2, 0}}), Error);
  Group g = ncpqg::testing::z2z2_group();
  CHECK(g.mul(g.element("a"), g.element("b")) == g.element("ab"));
  CHECK(g.inverse(g.element("ab")) == g.element("ab"));
}

TEST_CASE("subgroup closure") {
  Group z4 = Group::cyclic(4);
  Subgroup l = Subgroup::closure(z4, {z4.element("g2")});
  CHECK(l.contains(z4.identity()));
  CHECK(l.contains(z4.element("g2")));
  CHECK_FALSE(l.contains(z4.element("g1")));
  CHECK(l.elements().size() == 2);

  Subgroup trivial = Subgroup::trivial(z4);
  CHECK(trivial.elements().size() == 1);

  Group z = Group::cyclic(0);
  Subgroup dz = Subgroup::closure(z, {z.element("g6"), z.element("g-4")});
  CHECK(dz.modulus() == 2);
  CHECK(dz.contains(z.element("g8")));
  CHECK_FALSE(dz.contains(z.element("g3")));
}

TEST_CASE("generating sets evaluate words and respect inversion") {
  auto ctx = ncpqg::testing::z4_context({"g2"});
  const GeneratingSet& s = ctx.gens();
  Group z4 = ctx.gamma();
  CHECK(s.eval({}) == z4.identity());
  CHECK(s.eval(word("a")) == z4.element("g1"));
  ColouredWord aa{colour("a", "a3"), colour("a", "a3")};
  CHECK(s.eval(aa) == z4.element("g2"));

  // phi(a^{-1}) = phi(a)^{-1} is validated at construction; a mapping that
  // breaks it is rejected.
  CHECK_THROWS_AS(GeneratingSet::make(z4, {ColourMapping{colour("a", "a3"), "g1"},
                                           ColourMapping{colour("a3", "a"), "g1"}}),
                  Error);
  // An assignment that does not generate is rejected.
  CHECK_THROWS_AS(GeneratingSet::make(z4, {ColourMapping{colour("b"), "g2"}}), Error);
}

TEST_CASE("representative words are geodesics and evaluate back") {
  auto ctx = ncpqg::testing::z4_context({});
  const GeneratingSet& s = ctx.gens();
  Group z4 = ctx.gamma();
  for (const GroupElement& g : z4.elements()) {
    ColouredWord w = s.rep_word(g);
    CHECK_FALSE(w.empty());
    CHECK(s.eval(w) == g);
  }
  CHECK(s.rep_word(z4.element("g1")).size() == 1);
  CHECK(s.rep_word(z4.element("g3")).size() == 1);
  CHECK(s.rep_word(z4.element("g2")).size() == 2);
  CHECK(s.rep_word(z4.identity()).size() == 2);  // shortest nonempty return

  // Trivial group: the identity word is the single colour.
  auto triv = ncpqg::testing::trivial_context();
  CHECK(triv.gens().rep_word(triv.gamma().identity()) == word("a"));

  // Infinite cyclic: on-demand geodesics.
  Group z = Group::cyclic(0);
  GeneratingSet zs = GeneratingSet::make(
      z, {ColourMapping{colour("u", "d"), "g1"}, ColourMapping{colour("d", "u"), "g-1"}});
  CHECK(zs.rep_word(z.element("g3")).size() == 3);
  CHECK(zs.eval(zs.rep_word(z.element("g-2"))) == z.element("g-2"));
  CHECK_FALSE(zs.rep_word(z.identity()).empty());
}

TEST_CASE("supplied representative words are validated") {
  Group z4 = Group::cyclic(4);
  std::vector<ColourMapping> maps{ColourMapping{colour("a", "a3"), "g1"},
                                  ColourMapping{colour("a3", "a"), "g3"}};
  ColouredWord a3a3{colour("a3", "a"), colour("a3", "a")};
  GeneratingSet s = GeneratingSet::make(z4, maps, {{"g2", a3a3}});
  CHECK(s.rep_word(z4.element("g2")) == a3a3);
  CHECK_THROWS_AS(GeneratingSet::make(z4, maps, {{"g1", a3a3}}), Error);
}

}  // TEST_SUITE
