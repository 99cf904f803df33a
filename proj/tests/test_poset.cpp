#include <doctest.h>

#include "superpattern/enumerate.hpp"
#include "superpattern/poset.hpp"

using namespace superpattern;

namespace {

Poset diamond() {
  return Poset::from_relations({"c", "d", "h", "s"},
                               {{"h", "d"}, {"h", "c"}, {"d", "s"}, {"c", "s"}});
}

}  // namespace

TEST_CASE("construction takes the transitive closure") {
  Poset p = Poset::from_relations({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}});
  CHECK(p.less(p.index_of("1"), p.index_of("3")));
  CHECK(p == Poset::chain(3));
  CHECK_THROWS_AS(
      Poset::from_relations({"1", "2"}, {{"1", "2"}, {"2", "1"}}), CycleError);
  CHECK_THROWS_AS(Poset::from_relations({"1"}, {{"1", "2"}}), UnknownAtomError);
  Poset d = diamond();
  CHECK(d.less(d.index_of("h"), d.index_of("s")));
  CHECK_FALSE(d.less(d.index_of("d"), d.index_of("c")));
  CHECK(d.relation_count() == 5);
}

TEST_CASE("restriction keeps induced relations") {
  Poset c4 = Poset::chain(4);
  Poset r = c4.restrict_to({"1", "3"});
  CHECK(r.size() == 2);
  CHECK(r.less(r.index_of("1"), r.index_of("3")));
  Poset two = diamond().restrict_to({"d", "c"});
  CHECK(two.relation_count() == 0);
  CHECK(c4.restrict_to({}).size() == 0);
  CHECK_THROWS_AS(c4.restrict_to({"9"}), UnknownAtomError);
}

TEST_CASE("concatenation stacks posets") {
  Poset left = Poset::from_relations({"1", "2"}, {{"1", "2"}});
  Poset right = Poset::from_relations({"3"}, {});
  CHECK(left.concatenate(right) == Poset::chain(3));

  Poset anti = Poset::from_relations({"a", "b"}, {});
  Poset c = Poset::from_relations({"c"}, {});
  Poset stacked = anti.concatenate(c);
  CHECK(stacked.less(stacked.index_of("a"), stacked.index_of("c")));
  CHECK(stacked.less(stacked.index_of("b"), stacked.index_of("c")));
  CHECK_FALSE(stacked.less(stacked.index_of("a"), stacked.index_of("b")));

  Poset hd = Poset::from_relations({"d", "h"}, {{"h", "d"}});
  Poset cs = Poset::from_relations({"c", "s"}, {{"c", "s"}});
  Poset chain = Poset::from_relations(
      {"c", "d", "h", "s"}, {{"h", "d"}, {"d", "c"}, {"c", "s"}});
  CHECK(hd.concatenate(cs) == chain);
  CHECK_THROWS_AS(hd.concatenate(hd), OverlapError);
}

TEST_CASE("restriction splits a concatenation back apart") {
  for (const auto& p : all_posets({"1", "2"}))
    for (const auto& q : all_posets({"3", "4"})) {
      Poset cat = p.concatenate(q);
      CHECK(cat.restrict_to(p.labels()) == p);
      CHECK(cat.restrict_to(q.labels()) == q);
    }
}

TEST_CASE("concatenation is associative") {
  for (const auto& p : all_posets({"1", "2"}))
    for (const auto& q : all_posets({"3"}))
      for (const auto& s : all_posets({"4", "5"}))
        CHECK(p.concatenate(q).concatenate(s) ==
              p.concatenate(q.concatenate(s)));
}

TEST_CASE("proper intervals in canonical order") {
  Poset c3 = Poset::chain(3);
  auto ivs = proper_intervals(c3);
  REQUIRE(ivs.size() == 3);
  CHECK(ivs[0] == Arc{c3.index_of("1"), c3.index_of("2")});
  CHECK(ivs[1] == Arc{c3.index_of("2"), c3.index_of("3")});
  CHECK(ivs[2] == Arc{c3.index_of("1"), c3.index_of("3")});
  CHECK(proper_intervals(Poset::antichain(4)).empty());
  CHECK(proper_intervals(diamond()).size() == 5);
}

TEST_CASE("interval containment") {
  Poset c3 = Poset::chain(3);
  auto arc = [&](const char* lo, const char* hi) {
    return Interval{c3, arc_of_labels(c3, lo, hi)};
  };
  CHECK(interval_leq(arc("2", "3"), arc("1", "3")));
  CHECK_FALSE(interval_leq(arc("1", "2"), arc("2", "3")));

  // In the chain h<c<d<s the interval [d,s] sits inside [c,s].
  Poset suit = Poset::from_relations({"c", "d", "h", "s"},
                                     {{"h", "c"}, {"c", "d"}, {"d", "s"}});
  CHECK(interval_leq(Interval{suit, arc_of_labels(suit, "d", "s")},
                     Interval{suit, arc_of_labels(suit, "c", "s")}));

  CHECK_THROWS_AS(
      interval_leq(arc("1", "2"),
                   Interval{Poset::chain(2), arc_of_labels(Poset::chain(2), "1", "2")}),
      MixedReferenceError);
  CHECK_THROWS_AS(arc_of_labels(c3, "2", "1"), NotAnIntervalError);
}

TEST_CASE("interval containment is a partial order") {
  std::vector<Poset> posets;
  for (int n = 1; n <= 4; ++n)
    for (auto& p : all_posets(numbered_atoms(n))) posets.push_back(std::move(p));
  posets.push_back(Poset::chain(5));
  posets.push_back(Poset::from_relations(
      {"1", "2", "3", "4", "5"},
      {{"1", "2"}, {"1", "3"}, {"2", "4"}, {"3", "4"}, {"4", "5"}}));
  for (const auto& p : posets) {
    auto ivs = proper_intervals(p);
    for (Arc a : ivs) CHECK(arc_leq(p, a, a));
    for (Arc a : ivs)
      for (Arc b : ivs) {
        if (arc_leq(p, a, b) && arc_leq(p, b, a)) CHECK(a == b);
        for (Arc c : ivs)
          if (arc_leq(p, a, b) && arc_leq(p, b, c)) CHECK(arc_leq(p, a, c));
      }
  }
}

TEST_CASE("width") {
  for (int n = 1; n <= 8; ++n) CHECK(Poset::chain(n).width() == 1);
  for (int n = 1; n <= 8; ++n) CHECK(Poset::antichain(n).width() == n);
  CHECK(diamond().width() == 2);
}

TEST_CASE("convexity") {
  Poset d = diamond();
  CHECK(d.convex({"h", "d"}));
  CHECK_FALSE(d.convex({"h", "s"}));
  CHECK(d.convex({"c", "d", "h", "s"}));
  CHECK(Poset::chain(4).convex({"2", "3"}));
  CHECK_FALSE(Poset::chain(4).convex({"1", "3"}));
}

TEST_CASE("structural equality and subposets") {
  Poset a = Poset::from_relations({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}});
  CHECK(a == Poset::chain(3));
  Poset sub = Poset::from_relations({"1", "2", "3"}, {{"1", "3"}});
  CHECK(sub.subposet_of(a));
  CHECK_FALSE(a.subposet_of(sub));
  CHECK(Poset::chain(2).subposet_of(a));  // atom subset counts too
}
