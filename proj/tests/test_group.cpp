#include <doctest.h>

#include <random>

#include "superpattern/enumerate.hpp"
#include "superpattern/group.hpp"

using namespace superpattern;

namespace {

Poset diamond() {
  return Poset::from_relations({"c", "d", "h", "s"},
                               {{"h", "d"}, {"h", "c"}, {"d", "s"}, {"c", "s"}});
}

int entry_at(const GroupElement& g, const char* lo, const char* hi) {
  IntervalTable t = IntervalTable::of(g.reference());
  return g.entry(static_cast<size_t>(
      t.at(g.reference().index_of(lo), g.reference().index_of(hi))));
}

}  // namespace

TEST_CASE("multiplication is interval convolution") {
  Poset c3 = Poset::chain(3);
  GroupElement u = generator(c3, "1", "2", 1, 2);
  GroupElement v = generator(c3, "2", "3", 1, 2);
  GroupElement w = multiply(u, v);
  CHECK(entry_at(w, "1", "2") == 1);
  CHECK(entry_at(w, "2", "3") == 1);
  CHECK(entry_at(w, "1", "3") == 1);
  CHECK(multiply(GroupElement(c3, 2), u) == u);
  CHECK(multiply(u, GroupElement(c3, 2)) == u);
}

TEST_CASE("the commutator identity generates long intervals") {
  Poset c3 = Poset::chain(3);
  const int p = 5;
  for (int r = 1; r < p; ++r)
    for (int s = 1; s < p; ++s) {
      GroupElement commutator = multiply(
          multiply(generator(c3, "1", "2", r, p), generator(c3, "2", "3", s, p)),
          multiply(generator(c3, "1", "2", -r, p), generator(c3, "2", "3", -s, p)));
      CHECK(commutator == generator(c3, "1", "3", r * s, p));
    }
}

TEST_CASE("inverses") {
  Poset c3 = Poset::chain(3);
  CHECK(inverse(GroupElement(c3, 3)) == GroupElement(c3, 3));
  CHECK(inverse(generator(c3, "1", "3", 2, 5)) == generator(c3, "1", "3", -2, 5));
  GroupElement g(c3, 2);
  IntervalTable t = IntervalTable::of(c3);
  g.set_entry(static_cast<size_t>(t.at(c3.index_of("1"), c3.index_of("2"))), 1);
  g.set_entry(static_cast<size_t>(t.at(c3.index_of("2"), c3.index_of("3"))), 1);
  CHECK(entry_at(inverse(g), "1", "3") == 1);
  for (const auto& u : all_elements(c3, 3))
    CHECK(multiply(u, inverse(u)).is_identity());
}

TEST_CASE("associativity") {
  Poset c3 = Poset::chain(3);
  auto elems = all_elements(c3, 2);
  for (const auto& a : elems)
    for (const auto& b : elems)
      for (const auto& c : elems)
        CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
  // Sampled triples on a wider poset.
  std::mt19937_64 rng(7);
  auto big = all_elements(diamond(), 3);
  std::uniform_int_distribution<size_t> pick(0, big.size() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    const auto& a = big[pick(rng)];
    const auto& b = big[pick(rng)];
    const auto& c = big[pick(rng)];
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
  }
}

TEST_CASE("generators") {
  Poset c2 = Poset::chain(2);
  CHECK(generator(c2, "1", "2", 0, 3).is_identity());
  CHECK(entry_at(generator(c2, "1", "2", 1, 3), "1", "2") == 1);
  CHECK_THROWS_AS(generator(c2, "2", "1", 1, 3), NotComparableError);
  CHECK_THROWS_AS(GroupElement(c2, 4), InputError);
}

TEST_CASE("enumeration sizes") {
  CHECK(all_elements(Poset::chain(2), 2).size() == 2);
  CHECK(all_elements(Poset::chain(3), 3).size() == 27);
  CHECK(all_elements(diamond(), 2).size() == 32);
  CHECK_THROWS_AS(all_elements(Poset::chain(4), 7, 100), SizeCapError);
}

TEST_CASE("superclasses read off minimal support") {
  Poset c3 = Poset::chain(3);
  CHECK(superclass_of(GroupElement(c3, 2)).empty());
  CHECK(superclass_of(generator(c3, "1", "3", 1, 2)).str() == "{[1,3]}");
  GroupElement g(c3, 2);
  IntervalTable t = IntervalTable::of(c3);
  g.set_entry(static_cast<size_t>(t.at(c3.index_of("1"), c3.index_of("2"))), 1);
  g.set_entry(static_cast<size_t>(t.at(c3.index_of("1"), c3.index_of("3"))), 1);
  CHECK(superclass_of(g).str() == "{[1,2]}");
}

TEST_CASE("superclasses are unions of conjugacy classes") {
  std::vector<Poset> posets = all_posets(numbered_atoms(3));
  posets.push_back(Poset::chain(4));
  posets.push_back(diamond());
  posets.push_back(Poset::from_relations(
      {"1", "2", "3", "4"}, {{"1", "3"}, {"2", "3"}, {"2", "4"}}));
  for (const auto& r : posets) {
    auto elems = all_elements(r, 2);
    std::vector<GroupElement> inverses;
    inverses.reserve(elems.size());
    for (const auto& h : elems) inverses.push_back(inverse(h));
    for (const auto& g : elems) {
      NNPartition cls = superclass_of(g);
      for (size_t h = 0; h < elems.size(); ++h)
        CHECK(superclass_of(multiply(multiply(elems[h], g), inverses[h])) == cls);
    }
  }
}

TEST_CASE("cover closure membership") {
  Poset c3 = Poset::chain(3);
  NNPartition lam = NNPartition::from_labels(c3, {{"1", "3"}});
  CHECK(in_cover_closure(GroupElement(c3, 2), lam));
  CHECK_FALSE(in_cover_closure(generator(c3, "1", "2", 1, 2), lam));
  CHECK(in_cover_closure(generator(c3, "1", "3", 1, 2), lam));
}

TEST_CASE("cover closure agrees with direct factorization") {
  std::vector<Poset> posets = all_posets(numbered_atoms(3));
  posets.push_back(Poset::chain(4));
  for (const auto& r : posets)
    for (int p : {2, 3})
      for (const auto& lam : enumerate_nn(r))
        for (const auto& g : all_elements(r, p))
          CHECK(in_cover_closure(g, lam) == in_cover_closure_direct(g, lam));
}

TEST_CASE("normality oracle on the linearization examples") {
  std::vector<std::string> atoms = {"c", "d", "h", "s"};
  Poset sub = Poset::from_relations(atoms, {{"h", "d"}, {"h", "c"}, {"d", "s"}});
  Poset bad = Poset::from_relations(atoms, {{"h", "c"}, {"c", "d"}, {"d", "s"}});
  Poset good = Poset::from_relations(atoms, {{"h", "d"}, {"d", "c"}, {"c", "s"}});
  CHECK_FALSE(group_normality_check(bad, sub, 2));
  CHECK(group_normality_check(good, sub, 2));
  CHECK(group_normality_check(good, good, 2));
}
