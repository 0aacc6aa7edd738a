#include <doctest.h>

#include "kaninj/saturation.hpp"

using namespace kaninj;

namespace {

MapClass bottom_class() { return {"bottom", {maps::h_bottom()}}; }
MapClass join_class() { return {"join", {maps::h_join()}}; }
MapClass both_class() { return {"both", {maps::h_bottom(), maps::h_join()}}; }

MonotoneMap bottom_of_chain(std::size_t n) { return MonotoneMap(posets::one(), posets::chain(n), {0}); }

// a < a2 beside b, and V with an extra a2 above a only.
struct RetractData {
  MonotoneMap l1, l2, s;
};

RetractData join_retract() {
  Poset a = Poset::from_pairs({"a", "b", "a2"}, {{0, 2}});
  Poset a_prime = Poset::from_pairs({"a", "b", "top", "a2"}, {{0, 2}, {1, 2}, {0, 3}});
  MonotoneMap l1(posets::antichain(2), a, {0, 1});
  MonotoneMap l2(posets::vee(), a_prime, {0, 1, 2});
  MonotoneMap s(a, a_prime, {0, 1, 3});
  return {l1, l2, s};
}

}  // namespace

TEST_CASE("sat_lari") {
  CHECK(sat_lari(MonotoneMap::identity(posets::vee())).recipe == Recipe::lari);
  CHECK(sat_lari(bottom_of_chain(2)).produced == bottom_of_chain(2));
  CHECK_THROWS_AS(sat_lari(maps::h_join()), Error);
  try {
    sat_lari(maps::h_join());
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_lari);
  }
}

TEST_CASE("sat_compose") {
  auto b = sat_member(bottom_class(), 0);
  auto id = sat_lari(MonotoneMap::identity(posets::one()));
  CHECK(sat_compose(b, id).produced == b.produced);
  auto into_chain = sat_compose(b, sat_lari(bottom_of_chain(2)));
  CHECK(into_chain.produced.dom().empty());
  CHECK(into_chain.produced.cod() == posets::chain(2));
  auto up = sat_lari(MonotoneMap(posets::chain(2), posets::chain(3), {0, 1}));
  auto both = sat_compose(sat_lari(bottom_of_chain(2)), up);
  CHECK(classify_adjoint(both.produced).is_lari);
  CHECK(both.inputs.size() == 2);
  CHECK_THROWS_AS(sat_compose(up, b), Error);
}

TEST_CASE("sat_iso") {
  auto j = sat_member(join_class(), 0);
  Poset ab = posets::antichain(2);
  MonotoneMap swap(ab, ab, {1, 0});
  Poset relabeled = posets::vee().relabeled({"x", "y", "z"});
  MonotoneMap rename(posets::vee(), relabeled, {0, 1, 2});
  auto w = sat_iso(j, swap, rename);
  CHECK(w.produced.image() == std::vector<Elem>{1, 0});
  CHECK(w.produced.cod() == relabeled);
  CHECK_THROWS_AS(sat_iso(j, MonotoneMap::constant(ab, ab, 0), rename), Error);
  for (const MapClass& hs : {join_class(), both_class()}) {
    CHECK(closure_check(w, hs, enumerate_posets_up_to(4)).ok);
  }
}

TEST_CASE("sat_pushout") {
  SUBCASE("bottom along the empty map adds an isolated point") {
    Poset x = posets::vee();
    auto w = sat_pushout(sat_member(bottom_class(), 0), MonotoneMap(posets::empty(), x, {}));
    CHECK(w.produced.dom() == x);
    CHECK(w.produced.cod().size() == 4);
    CHECK(w.produced.is_order_embedding());
  }
  SUBCASE("join along two points onto the 2-chain") {
    auto w = sat_pushout(sat_member(join_class(), 0), MonotoneMap(posets::antichain(2), posets::chain(2), {0, 1}));
    CHECK(w.produced.dom() == posets::chain(2));
    CHECK(isomorphic(w.produced.cod(), posets::chain(3)));
    CHECK(w.produced.is_order_embedding());
  }
  SUBCASE("cocomma along the identity is the cone leg") {
    auto w = sat_pushout(sat_member(join_class(), 0), MonotoneMap::identity(posets::antichain(2)), GlueMode::cocomma);
    CHECK(w.recipe == Recipe::cocomma);
    CHECK(w.produced == mapping_cone(maps::h_join()).i_h);
  }
  CHECK_THROWS_AS(sat_pushout(sat_member(join_class(), 0), MonotoneMap::identity(posets::one())), Error);
}

TEST_CASE("sat_wide_pushout") {
  auto j = sat_member(join_class(), 0);
  auto single = sat_wide_pushout({j});
  CHECK(isomorphic(single.produced.cod(), posets::vee()));
  CHECK(single.produced.is_order_embedding());

  auto b = sat_member(bottom_class(), 0);
  auto two = sat_wide_pushout({b, b});
  CHECK(two.produced.dom().empty());
  CHECK(isomorphic(two.produced.cod(), posets::antichain(2)));

  Poset ab = posets::antichain(2);
  auto swapped = sat_iso(j, MonotoneMap(ab, ab, {1, 0}), MonotoneMap::identity(posets::vee()));
  auto glued = sat_wide_pushout({j, swapped});
  CHECK(glued.produced.cod().size() == 4);
  CHECK(glued.produced.cod().strict_pairs().size() == 4);
  CHECK_THROWS_AS(sat_wide_pushout({}), Error);
  CHECK_THROWS_AS(sat_wide_pushout({j, b}), Error);
}

TEST_CASE("sat_reflection") {
  auto j = sat_member(join_class(), 0);
  SUBCASE("identities") {
    Poset ab = posets::antichain(2);
    auto w = sat_reflection(j, MonotoneMap::identity(ab), MonotoneMap::identity(posets::vee()), maps::h_join());
    CHECK(w.produced == maps::h_join());
  }
  SUBCASE("bottom with identity laris") {
    auto w = sat_reflection(sat_member(bottom_class(), 0), MonotoneMap::identity(posets::empty()),
                            MonotoneMap::identity(posets::one()), maps::h_bottom());
    CHECK(w.produced == maps::h_bottom());
  }
  SUBCASE("a retract of the join inclusion") {
    auto d = join_retract();
    auto w = sat_reflection(j, d.l1, d.l2, d.s);
    CHECK(w.recipe == Recipe::reflection);
    CHECK_FALSE(classify_adjoint(d.s).is_lari);
    for (const MapClass& hs : {join_class(), both_class()}) {
      auto r = closure_check(w, hs, enumerate_posets_up_to(4));
      CHECK(r.ok);
      CHECK(r.objects_checked > 0);
    }
  }
  SUBCASE("errors") {
    auto d = join_retract();
    MonotoneMap wrong(d.s.dom(), d.s.cod(), {0, 1, 2});
    try {
      sat_reflection(j, d.l1, d.l2, wrong);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::square_does_not_commute);
    }
    Poset v2 = Poset::from_pairs({"a", "b", "top", "c"}, {{0, 2}, {1, 2}});
    MonotoneMap not_lari(posets::vee(), v2, {0, 1, 2});
    try {
      sat_reflection(j, d.l1, not_lari, MonotoneMap(d.s.dom(), v2, {0, 1, 2}));
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::not_lari);
    }
  }
}

TEST_CASE("closure_check") {
  auto sample = enumerate_posets_up_to(4);
  SUBCASE("laris") {
    for (const MapClass& hs : {bottom_class(), join_class()}) {
      CHECK(closure_check(sat_lari(bottom_of_chain(3)), hs, sample).ok);
    }
  }
  SUBCASE("pushout of the join inclusion") {
    auto w = sat_pushout(sat_member(join_class(), 0), MonotoneMap(posets::antichain(2), posets::chain(2), {0, 1}));
    CHECK(closure_check(w, join_class(), sample).ok);
  }
  SUBCASE("negative control") {
    auto fake = sat_asserted(MonotoneMap::constant(posets::chain(2), posets::one(), 0));
    auto r = closure_check(fake, join_class(), sample);
    CHECK_FALSE(r.ok);
    REQUIRE(r.object);
    CHECK(is_injective(*r.object, join_class()).strong());
    CHECK_FALSE(r.object->strict_pairs().empty());
  }
  SUBCASE("bottom is not in the saturation of join") {
    // The empty poset has every binary join and no bottom.
    auto r = closure_check(sat_asserted(maps::h_bottom()), join_class(), sample);
    CHECK_FALSE(r.ok);
    REQUIRE(r.object);
    CHECK(r.object->empty());
  }
  SUBCASE("failure through preservation") {
    // Lattices are strong for the join inclusion, but maps keeping the bottom
    // need not keep joins.
    std::vector<Poset> lattices;
    for (const Poset& x : sample)
      if (!x.empty() && is_injective(x, both_class()).strong()) lattices.push_back(x);
    auto r = closure_check(sat_asserted(maps::h_join()), bottom_class(), lattices);
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.object);
    REQUIRE(r.map);
    CHECK(is_injective_map(*r.map, bottom_class()).strong());
    CHECK_FALSE(is_injective_map(*r.map, join_class()).weak());
  }
}

TEST_CASE("every constructed witness passes closure_check") {
  auto sample = enumerate_posets_up_to(4);
  for (const MapClass& hs : {bottom_class(), join_class(), both_class()}) {
    std::vector<SaturationWitness> ws;
    for (std::size_t i = 0; i < hs.maps.size(); ++i) ws.push_back(sat_member(hs, i));
    ws.push_back(sat_lari(bottom_of_chain(2)));
    ws.push_back(sat_lari(MonotoneMap(posets::chain(2), posets::chain(3), {0, 1})));
    std::size_t members = hs.maps.size();
    for (std::size_t i = 0; i < members; ++i) {
      const SaturationWitness m = ws[i];
      for (const Poset& x : enumerate_posets_up_to(2)) {
        for (const auto& f : enumerate_monotone(m.produced.dom(), x)) {
          ws.push_back(sat_pushout(m, f));
          ws.push_back(sat_pushout(m, f, GlueMode::cocomma));
        }
      }
      ws.push_back(sat_wide_pushout({m, m}));
      ws.push_back(sat_compose(m, sat_lari(MonotoneMap::identity(m.produced.cod()))));
    }
    if (hs.name != "bottom") {
      auto d = join_retract();
      ws.push_back(sat_reflection(sat_member(join_class(), 0), d.l1, d.l2, d.s));
    }
    for (const Poset& x : enumerate_posets_up_to(2)) {
      auto r = reflect(x, hs);
      for (std::size_t i = 1; i <= r.trace.top() && i <= 3; ++i) ws.push_back(sat_chain_connector(r, i));
    }
    for (const auto& w : ws) {
      auto r = closure_check(w, hs, sample);
      CHECK_MESSAGE(r.ok, hs.name, " ", to_string(w.recipe), " ", describe(w.produced), " ", r.reason);
    }
  }
}

TEST_CASE("lali squares keep strong maps strong") {
  auto small = enumerate_posets_up_to(3);
  std::size_t squares = 0;
  for (const MapClass& hs : {bottom_class(), join_class()}) {
    std::vector<Poset> strong;
    for (const Poset& x : small)
      if (is_injective(x, hs).strong()) strong.push_back(x);
    for (const Poset& a : strong)
      for (const Poset& b : strong)
        for (const auto& f : enumerate_monotone(a, b)) {
          if (!is_injective_map(f, hs).strong()) continue;
          for (const Poset& x : small)
            for (const auto& l1 : enumerate_monotone(a, x)) {
              if (!classify_adjoint(l1).is_lali) continue;
              for (const Poset& y : small)
                for (const auto& l2 : enumerate_monotone(b, y)) {
                  if (!classify_adjoint(l2).is_lali) continue;
                  for (const auto& g : enumerate_monotone(x, y)) {
                    if (!(compose(g, l1) == compose(l2, f))) continue;
                    ++squares;
                    CHECK(lali_square(f, l1, l2, g, hs).strong());
                  }
                }
            }
        }
  }
  CHECK(squares > 50);
  Poset c2 = posets::chain(2);
  auto collapse = MonotoneMap::constant(c2, posets::one(), 0);
  auto id = MonotoneMap::identity(c2);
  CHECK_THROWS_AS(lali_square(id, id, id, MonotoneMap::constant(c2, c2, 0), bottom_class()), Error);
  CHECK(lali_square(id, collapse, collapse, MonotoneMap::identity(posets::one()), bottom_class()).strong());
}
