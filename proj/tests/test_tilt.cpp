#include <doctest.h>

#include <set>

#include <tiltn/tilt.hpp>

using namespace tiltn;

namespace {

std::vector<std::vector<int>> all_reduced_words(const Perm &w) {
  if (w.is_identity()) return {{}};
  std::vector<std::vector<int>> res;
  for (int i : w.descents(Side::Left)) {
    Perm rest = Perm::simple(i, w.rank()) * w;
    for (auto tail : all_reduced_words(rest)) {
      tail.insert(tail.begin(), i);
      res.push_back(std::move(tail));
    }
  }
  return res;
}

Ideal ideal_along_word(const Algebra &alg, const std::vector<int> &word) {
  Ideal I = unit_ideal(alg);
  for (int i : word) I = ideal_product(I, ideal_I_i(alg, i));
  return I;
}

} // namespace

TEST_CASE("Lambda and ideal bimodules satisfy the left relations") {
  Algebra alg(4);
  CHECK(lambda_bimodule(alg).valid());
  for (const Perm &w : Perm::all(3)) {
    Algebra a3(3);
    Bimodule B = bimodule_of_ideal(ideal_I_w(a3, w));
    CHECK(B.valid());
  }
}

TEST_CASE("I_w is independent of the reduced word") {
  Algebra alg(3);
  for (const Perm &w : Perm::all(3)) {
    Ideal ref = ideal_I_w(alg, w);
    for (const auto &word : all_reduced_words(w))
      CHECK(ideal_along_word(alg, word) == ref);
  }
}

TEST_CASE("mutation chain for n = 2") {
  Algebra alg(2);
  Bimodule B = lambda_bimodule(alg);
  auto B1 = mutate(B, 1);
  REQUIRE(B1.has_value());
  CHECK(B1->rows[1].dim_vector() == std::vector<int>{0, 1}); // S_2
  CHECK(B1->rows[2].dim_vector() == std::vector<int>{1, 2}); // e_2 Lambda
  auto B2 = mutate(*B1, 1);
  REQUIRE(B2.has_value());
  CHECK(B2->rows[1].dim_vector() == std::vector<int>{1, 1});
  CHECK(is_isomorphic(B2->rows[1], injective_module(alg, 1)));
  auto B3 = mutate(*B2, 1);
  CHECK(!B3.has_value()); // s_1^3 is outside [1, w_+^2]
}

TEST_CASE("poset construction for n = 3: 19 nodes, 24 arrows, 12 per slot") {
  Algebra alg(3);
  TiltingPoset P = build_tilting_poset(alg, true);
  CHECK(P.nodes.size() == 19);
  CHECK(P.arrows.size() == 24);
  int per_slot[3] = {0, 0, 0};
  std::vector<int> indeg(19, 0), outdeg(19, 0);
  for (auto &[from, to, slot] : P.arrows) {
    ++per_slot[slot];
    ++outdeg[from];
    ++indeg[to];
  }
  CHECK(per_slot[1] == 12);
  CHECK(per_slot[2] == 12);
  int sources = 0, sinks = 0;
  for (int x = 0; x < 19; ++x) {
    if (indeg[x] == 0) ++sources;
    if (outdeg[x] == 0) ++sinks;
  }
  CHECK(sources == 1);
  CHECK(sinks == 1);
  // the unique source is Lambda, the unique sink is w_+^2
  for (int x = 0; x < 19; ++x) {
    if (indeg[x] == 0) CHECK(P.nodes[x].is_identity());
    if (outdeg[x] == 0)
      CHECK(P.nodes[x] == PositiveBraid::half_twist(3) * PositiveBraid::half_twist(3));
  }
}

TEST_CASE("mutation leaves the interval exactly when iota is non-injective") {
  Algebra alg(3);
  TiltingPoset P = build_tilting_poset(alg, true);
  for (std::size_t x = 0; x < P.nodes.size(); ++x)
    for (int i = 1; i < 3; ++i) {
      PositiveBraid y = PositiveBraid::generator(i, 3) * P.nodes[x];
      bool in_interval = P.node_index(y) >= 0;
      CHECK(mutate(*P.bimodules[x], i).has_value() == in_interval);
    }
}

TEST_CASE("tensor route agrees with the mutation route (n <= 3)") {
  for (int n = 2; n <= 3; ++n) {
    Algebra alg(n);
    TiltingPoset P = build_tilting_poset(alg, true);
    for (std::size_t x = 0; x < P.nodes.size(); ++x) {
      auto [v, w] = pair_form(P.nodes[x]);
      TiltingObject T = tilting_from_pair(alg, v, w);
      CHECK(T.index == P.nodes[x]);
      for (int i = 1; i <= n; ++i)
        CHECK(is_isomorphic(T.slot(i), P.objects[x]->slot(i)));
    }
  }
}

TEST_CASE("all nodes carry tilting modules; duplicated slots fail") {
  Algebra alg(3);
  TiltingPoset P = build_tilting_poset(alg, true);
  for (std::size_t x = 0; x < P.nodes.size(); ++x) {
    const TiltingObject &T = *P.objects[x];
    CHECK(is_tilting(T));
    // slot n is the projective-injective e_n Lambda
    CHECK(is_isomorphic(T.slot(3), RightModule::projective(alg, 3)));
    // dim End(e_i T) = i
    for (int i = 1; i <= 3; ++i) CHECK(hom_dim(T.slot(i), T.slot(i)) == i);
  }
  TiltingObject broken = *P.objects[0];
  broken.slots[1] = broken.slots[2];
  CHECK(!is_tilting(broken));
}

TEST_CASE("Ext-order coincides with right-divisibility of indices (n = 3)") {
  Algebra alg(3);
  TiltingPoset P = build_tilting_poset(alg, true);
  std::vector<std::vector<Resolution>> res;
  for (std::size_t x = 0; x < P.nodes.size(); ++x)
    res.push_back(slot_resolutions(*P.objects[x]));
  for (std::size_t x = 0; x < P.nodes.size(); ++x)
    for (std::size_t y = 0; y < P.nodes.size(); ++y) {
      bool ext_ge = ext_orthogonal(res[x], *P.objects[y]); // T_x >= T_y
      bool div = PositiveBraid::is_right_divisor(P.nodes[x], P.nodes[y]);
      CHECK(ext_ge == div);
    }
}

TEST_CASE("arrows are exactly the covering relations (n = 3)") {
  Algebra alg(3);
  TiltingPoset P = build_tilting_poset(alg, false);
  std::set<std::pair<int, int>> arrow_pairs;
  for (auto &[from, to, slot] : P.arrows) arrow_pairs.insert({from, to});
  int count = static_cast<int>(P.nodes.size());
  for (int x = 0; x < count; ++x)
    for (int y = 0; y < count; ++y) {
      if (x == y) continue;
      bool cover = P.le_L(x, y);
      if (cover)
        for (int z = 0; z < count && cover; ++z)
          if (z != x && z != y && P.le_L(x, z) && P.le_L(z, y)) cover = false;
      CHECK(arrow_pairs.count({x, y}) == (cover ? 1u : 0u));
    }
}

TEST_CASE("T at w_+^2 is D(Lambda)") {
  for (int n = 1; n <= 3; ++n) {
    Algebra alg(n);
    TiltingPoset P = build_tilting_poset(alg, true);
    PositiveBraid w2 = PositiveBraid::half_twist(n) * PositiveBraid::half_twist(n);
    int x = P.node_index(w2);
    REQUIRE(x >= 0);
    auto dl = dual_lambda_slots(alg);
    for (int i = 1; i <= n; ++i)
      CHECK(is_isomorphic(P.objects[x]->slot(i), dl[i]));
  }
}

TEST_CASE("dimension vectors follow the reflection action") {
  Algebra alg2(2);
  std::vector<std::vector<int>> dlambda = {{1, 1}, {1, 2}};
  auto d = dim_action(Perm::simple(1, 2), dlambda);
  CHECK(d[0] == std::vector<int>{0, 1});
  CHECK(d[1] == std::vector<int>{1, 2});

  for (int n = 2; n <= 3; ++n) {
    Algebra alg(n);
    TiltingPoset P = build_tilting_poset(alg, true);
    std::vector<std::vector<int>> base;
    for (int i = 1; i <= n; ++i)
      base.push_back(RightModule::projective(alg, i).dim_vector());
    for (std::size_t x = 0; x < P.nodes.size(); ++x) {
      auto expected = dim_action(perm_image(P.nodes[x]), base);
      CHECK(P.objects[x]->dim_vectors() == expected);
    }
  }
}

TEST_CASE("meets in the tilting order") {
  Algebra alg(3);
  TiltingPoset P = build_tilting_poset(alg, true);
  int top = P.node_index(PositiveBraid(3));
  int s1 = P.node_index(PositiveBraid::generator(1, 3));
  int s2 = P.node_index(PositiveBraid::generator(2, 3));
  TiltingObject m = meet(P, *P.objects[s1], *P.objects[s2]);
  CHECK(m.index == PositiveBraid::from_perm(Perm::longest(3)));
  for (std::size_t x = 0; x < P.nodes.size(); ++x) {
    CHECK(meet(P, *P.objects[x], *P.objects[top]).index == P.nodes[x]);
    CHECK(meet(P, *P.objects[x], *P.objects[x]).index == P.nodes[x]);
  }
}

TEST_CASE("descent-pair formula indexes the tensor construction (n <= 3)") {
  for (int n = 2; n <= 3; ++n) {
    Algebra alg(n);
    for (const DescentPair &p : all_descent_pairs(n)) {
      // T at descent_pair_to_interval(v,w) equals I_w (x) I_{v^-1 w_0}
      PositiveBraid x = descent_pair_to_interval(p);
      TiltingObject T = tilting_from_pair(alg, p.w, p.v.inverse() * Perm::longest(n));
      CHECK(T.index == x);
    }
  }
}

TEST_CASE("the tensor grouping matches normal forms (n = 3)") {
  Algebra alg(3);
  std::map<std::vector<int>, std::vector<TiltingObject>> groups;
  for (const Perm &v : Perm::all(3))
    for (const Perm &w : Perm::all(3)) {
      TiltingObject T = tilting_from_pair(alg, v, w);
      groups[T.index.key()].push_back(std::move(T));
    }
  CHECK(groups.size() == 19);
  for (auto &[key, list] : groups)
    for (std::size_t k = 1; k < list.size(); ++k)
      for (int i = 1; i <= 3; ++i)
        CHECK(is_isomorphic(list[0].slot(i), list[k].slot(i)));
}
