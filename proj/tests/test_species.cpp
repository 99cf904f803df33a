#include <doctest.h>

#include <set>

#include "superpattern/enumerate.hpp"
#include "superpattern/species.hpp"

using namespace superpattern;

namespace {

RationalFunction q_pow(int k) { return RationalFunction::q_power(k); }
RationalFunction qm1() {
  return RationalFunction(Polynomial::from_coeffs({BigInt(-1), BigInt(1)}));
}

Poset chain12() { return Poset::from_relations({"1", "2"}, {{"1", "2"}}); }
Poset singleton3() { return Poset::from_relations({"3"}, {}); }

std::vector<Arc> full_label_of(const Poset& p) {
  return lbl_cl(CoIdeal(p, proper_intervals(p))).arcs();
}

}  // namespace

TEST_CASE("products") {
  Poset c3 = Poset::chain(3);
  SUBCASE("chi is a single union term") {
    SpeciesElement x = SpeciesElement::term(
        chain12(), Basis::Chi,
        {arc_of_labels(chain12(), "1", "2")});
    SpeciesElement y = SpeciesElement::term(singleton3(), Basis::Chi, {});
    SpeciesElement xy = product(x, y);
    CHECK(xy.terms().size() == 1);
    CHECK(xy.coeff(c3, {arc_of_labels(c3, "1", "2")}) == RationalFunction(1));
  }
  SUBCASE("delta sums over all compatible extensions") {
    SpeciesElement x = SpeciesElement::term(
        chain12(), Basis::Delta, {arc_of_labels(chain12(), "1", "2")});
    SpeciesElement y = SpeciesElement::term(singleton3(), Basis::Delta, {});
    SpeciesElement xy = product(x, y);
    CHECK(xy.terms().size() == 2);
    CHECK(xy.coeff(c3, {arc_of_labels(c3, "1", "2")}) == RationalFunction(1));
    CHECK(xy.coeff(c3, {arc_of_labels(c3, "1", "2"), arc_of_labels(c3, "2", "3")}) ==
          RationalFunction(1));
  }
  SUBCASE("full subgroups concatenate to the full subgroup") {
    SpeciesElement x = SpeciesElement::term(chain12(), Basis::SubgroupChi, {});
    SpeciesElement y = SpeciesElement::term(singleton3(), Basis::SubgroupChi, {});
    SpeciesElement xy = product(x, y);
    CHECK(xy.terms().size() == 1);
    CHECK(xy.coeff(c3, {}) == RationalFunction(1));
  }
  SUBCASE("grounds must be disjoint") {
    SpeciesElement x = SpeciesElement::term(chain12(), Basis::Chi, {});
    CHECK_THROWS_AS(product(x, x), OverlapError);
  }
}

TEST_CASE("coproducts") {
  Poset c3 = Poset::chain(3);
  SUBCASE("delta vanishes when an arc crosses the split") {
    SpeciesElement x = SpeciesElement::term(c3, Basis::Delta,
                                            {arc_of_labels(c3, "1", "3")});
    CHECK(coproduct(x, {"1", "2"}, {"3"}).is_zero());
    SpeciesElement y = SpeciesElement::term(c3, Basis::Delta,
                                            {arc_of_labels(c3, "1", "2")});
    SpeciesTensor t = coproduct(y, {"1", "2"}, {"3"});
    CHECK(t.terms().size() == 1);
  }
  SUBCASE("chi restricts with the lattice coefficient") {
    SpeciesElement x = SpeciesElement::term(c3, Basis::Chi,
                                            {arc_of_labels(c3, "1", "3")});
    SpeciesTensor t = coproduct(x, {"1", "2"}, {"3"});
    REQUIRE(t.terms().size() == 2);
    RationalFunction expected = RationalFunction::q() * qm1();
    for (const auto& [key, c] : t.terms()) {
      CHECK(c == expected);
      CHECK(key[1].label.empty());
    }
  }
  SUBCASE("empty blocks act as units") {
    for (Basis basis : {Basis::Delta, Basis::Chi, Basis::SubgroupChi,
                        Basis::SubgroupDelta}) {
      SpeciesElement x = SpeciesElement::term(c3, basis,
                                              {arc_of_labels(c3, "2", "3")});
      SpeciesTensor t = coproduct(x, c3.labels(), {});
      REQUIRE(t.terms().size() == 1);
      const auto& [key, c] = *t.terms().begin();
      CHECK(key[0].ambient == c3);
      CHECK(key[1].ambient.size() == 0);
      CHECK(c == RationalFunction(1));
    }
  }
}

TEST_CASE("general restriction") {
  Poset c3 = Poset::chain(3);
  NNPartition lam = NNPartition::from_labels(c3, {{"1", "3"}});
  SUBCASE("restriction to the poset itself is the identity") {
    ClassFunction res = restriction_general(c3, c3, lam);
    CHECK(res.terms().size() == 1);
    CHECK(res.coeff(lam.arcs()) == RationalFunction(1));
  }
  SUBCASE("dropping relations spreads the character") {
    Poset q = Poset::from_relations({"1", "2", "3"}, {{"1", "2"}});
    ClassFunction res = restriction_general(c3, q, lam);
    RationalFunction expected = RationalFunction::q() * qm1();
    CHECK(res.terms().size() == 2);
    CHECK(res.coeff({}) == expected);
    CHECK(res.coeff({arc_of_labels(q, "1", "2")}) == expected);
  }
  SUBCASE("degree is preserved") {
    for (const auto& r : all_posets(numbered_atoms(3)))
      for (const auto& q : all_subposets(r))
        for (const auto& l : enumerate_nn(r)) {
          ClassFunction res = restriction_general(r, q, l);
          RationalFunction total;
          for (const auto& [arcs, c] : res.terms())
            total += c * chi_degree(NNPartition(q, arcs));
          CHECK(total == chi_degree(l));
        }
  }
}

TEST_CASE("coproduct degree counting on chains") {
  for (int n = 2; n <= 4; ++n) {
    Poset chain = Poset::chain(n);
    for (const auto& lam : enumerate_nn(chain)) {
      SpeciesElement x = SpeciesElement::term(chain, Basis::Chi, lam.arcs());
      for_each_ordered_split(
          chain.labels(),
          [&](const auto& a, const auto& b) {
            SpeciesTensor t = coproduct(x, a, b);
            RationalFunction total;
            for (const auto& [key, c] : t.terms())
              total += c *
                       chi_degree(NNPartition(key[0].ambient, key[0].label)) *
                       chi_degree(NNPartition(key[1].ambient, key[1].label));
            CHECK(total == chi_degree(lam));
          },
          true);
    }
  }
}

TEST_CASE("q-factorizations") {
  Poset diamond = Poset::from_relations(
      {"c", "d", "h", "s"}, {{"h", "d"}, {"h", "c"}, {"d", "s"}, {"c", "s"}});
  Poset chain = Poset::from_relations(
      {"c", "d", "h", "s"}, {{"h", "d"}, {"d", "c"}, {"c", "s"}});
  auto fs = fac(diamond, chain);
  std::set<std::vector<std::vector<std::string>>> got;
  for (const auto& f : fs) got.insert(f.blocks);
  std::set<std::vector<std::vector<std::string>>> expected = {
      {{"h"}, {"d"}, {"c"}, {"s"}},
      {{"d", "h"}, {"c"}, {"s"}},
      {{"h"}, {"d"}, {"c", "s"}},
      {{"d", "h"}, {"c", "s"}}};
  CHECK(got == expected);

  bool has_one_block = false;
  for (const auto& f : fac(diamond, diamond))
    if (f.length() == 1) has_one_block = true;
  CHECK(has_one_block);

  CHECK(fac(Poset::chain(4), Poset::chain(4)).size() == 8);
  CHECK_THROWS_AS(fac(Poset::chain(2), Poset::chain(3)), AtomMismatchError);
}

TEST_CASE("takeuchi antipode small cases") {
  SUBCASE("a single atom is fixed") {
    Poset one = Poset::from_relations({"1"}, {});
    for (Basis basis : {Basis::Chi, Basis::SubgroupDelta}) {
      SpeciesElement x = SpeciesElement::term(one, basis, {});
      CHECK(antipode_takeuchi(x) == x);
    }
  }
  SUBCASE("the two-chain reverses with a sign") {
    Poset up = chain12();
    Poset down = Poset::from_relations({"1", "2"}, {{"2", "1"}});
    SpeciesElement x =
        SpeciesElement::term(up, Basis::SubgroupDelta, full_label_of(up));
    SpeciesElement s = antipode_takeuchi(x);
    CHECK(s.terms().size() == 1);
    CHECK(s.coeff(down, full_label_of(down)) == RationalFunction(-1));
  }
  SUBCASE("the antipode squares to the identity on two atoms") {
    for (const auto& r : all_posets({"1", "2"}))
      for (const auto& lam : enumerate_nn(r))
        for (Basis basis : {Basis::Chi, Basis::Delta, Basis::SubgroupDelta}) {
          SpeciesElement x = SpeciesElement::term(r, basis, lam.arcs());
          CHECK(antipode_takeuchi(antipode_takeuchi(x)) == x);
        }
  }
  SUBCASE("the ground set cap throws") {
    SpeciesElement x = SpeciesElement::term(chain12(), Basis::Chi, {});
    CHECK_THROWS_AS(antipode_takeuchi(x, 1), SizeCapError);
  }
}

TEST_CASE("closed form subgroup antipode") {
  SUBCASE("singleton") {
    Poset one = Poset::from_relations({"1"}, {});
    SpeciesElement s = antipode_delta_subgroup(one);
    CHECK(s.terms().size() == 1);
    CHECK(s.coeff(one, {}) == RationalFunction(1));
  }
  SUBCASE("two-chain") {
    Poset down = Poset::from_relations({"1", "2"}, {{"2", "1"}});
    SpeciesElement s = antipode_delta_subgroup(chain12());
    CHECK(s.terms().size() == 1);
    CHECK(s.coeff(down, full_label_of(down)) == RationalFunction(-1));
  }
  SUBCASE("the diamond kills the chain with four factorizations") {
    Poset diamond = Poset::from_relations(
        {"c", "d", "h", "s"}, {{"h", "d"}, {"h", "c"}, {"d", "s"}, {"c", "s"}});
    Poset chain = Poset::from_relations(
        {"c", "d", "h", "s"}, {{"h", "d"}, {"d", "c"}, {"c", "s"}});
    SpeciesElement s = antipode_delta_subgroup(diamond);
    CHECK(s.coeff(chain, full_label_of(chain)).is_zero());
  }
}

TEST_CASE("lambda-atomic factorization sets") {
  Poset c3 = Poset::chain(3);
  NNPartition lam = NNPartition::from_labels(c3, {{"1", "3"}});
  CHECK(is_lambda_atomic(c3, c3, lam));
  // Splitting the top atom off the chain gives a neutral cut for the empty
  // partition, so the chain is not empty-atomic.
  CHECK_FALSE(is_lambda_atomic(c3, c3, NNPartition(c3)));
  // No factorization at all: the chain cannot rebuild an antichain.
  CHECK_FALSE(is_lambda_atomic(c3, Poset::antichain(3), lam));
}

TEST_CASE("closed form chi antipode") {
  Poset c3 = Poset::chain(3);
  NNPartition lam = NNPartition::from_labels(c3, {{"1", "3"}});
  SpeciesElement s = antipode_chi(c3, lam);
  RationalFunction coeff = s.coeff(c3, {});
  Polynomial expect = Polynomial::q() *
                      Polynomial::from_coeffs({BigInt(-1), BigInt(1)}) *
                      Polynomial::from_coeffs({BigInt(-2), BigInt(1)});
  CHECK(coeff == RationalFunction(expect));
  CHECK(coeff.eval(BigRat(2)) == 0);

  SUBCASE("matches takeuchi on every label of the four-chain") {
    Poset c4 = Poset::chain(4);
    for (const auto& l : enumerate_nn(c4)) {
      SpeciesElement closed = antipode_chi(c4, l);
      SpeciesElement tak =
          antipode_takeuchi(SpeciesElement::term(c4, Basis::Chi, l.arcs()));
      CHECK(closed == tak);
    }
  }
  SUBCASE("keeps terms whose arcs nest across blocks") {
    // For lambda = {[1,4]} the ambient 2<3<1<4 carries the label
    // {[2,3],[1,4]}, which is non-nesting there but nests in the chain.
    Poset c4 = Poset::chain(4);
    NNPartition l4 = NNPartition::from_labels(c4, {{"1", "4"}});
    Poset p = Poset::from_relations({"1", "2", "3", "4"},
                                    {{"2", "3"}, {"3", "1"}, {"1", "4"}});
    SpeciesElement closed = antipode_chi(c4, l4);
    std::vector<Arc> nu = {arc_of_labels(p, "2", "3"), arc_of_labels(p, "1", "4")};
    CHECK(closed.coeff(p, nu) == -q_pow(4));
  }
}

TEST_CASE("atomic pairs and decomposition") {
  Poset one = Poset::from_relations({"1"}, {});
  CHECK(is_atomic_pair(one, one));

  Poset up = chain12();
  Poset anti2 = Poset::from_relations({"1", "2"}, {});
  CHECK(is_atomic_pair(up, anti2));
  CHECK_FALSE(is_atomic_pair(up, up));
  SetComposition dec = decompose_atomic(up, up);
  REQUIRE(dec.blocks.size() == 2);
  CHECK(dec.blocks[0] == std::vector<std::string>{"1"});
  CHECK(dec.blocks[1] == std::vector<std::string>{"2"});

  CHECK(decompose_atomic(Poset::chain(3), Poset::chain(3)).blocks.size() == 3);
}

TEST_CASE("primitive generators") {
  SUBCASE("singleton ground set") {
    Poset one = Poset::from_relations({"1"}, {});
    SpeciesElement g = primitive_generator("1", one, one);
    CHECK(g.terms().size() == 1);
    CHECK(g.coeff(one, {}) == RationalFunction(1));
    CHECK(is_primitive(g));
  }
  SUBCASE("two-atom atomic pairs") {
    Poset down = Poset::from_relations({"1", "2"}, {{"2", "1"}});
    Poset anti2 = Poset::from_relations({"1", "2"}, {});
    Poset up = chain12();
    SpeciesElement g = primitive_generator("1", down, anti2);
    // Leading term, then the length-two correction with atom 1 first.
    CHECK(g.coeff(down, lbl_cl(coideal_of_subposet(down, anti2)).arcs()) ==
          RationalFunction(1));
    CHECK(g.coeff(up, full_label_of(up)) == RationalFunction(-1));
    CHECK(is_primitive(g));
    CHECK(is_primitive(primitive_generator("1", up, anti2)));
    CHECK(is_primitive(primitive_generator("1", anti2, anti2)));
  }
  SUBCASE("rejects non-atomic and non-normal pairs") {
    Poset up = chain12();
    CHECK_THROWS_AS(primitive_generator("1", up, up), NotAtomicError);
    Poset c3 = Poset::chain(3);
    Poset bottom = Poset::from_relations({"1", "2", "3"}, {{"1", "2"}});
    CHECK_THROWS_AS(primitive_generator("1", c3, bottom), NotNormalError);
  }
  SUBCASE("subgroup indicators of chains are not primitive") {
    Poset up = chain12();
    SpeciesElement x =
        SpeciesElement::term(up, Basis::SubgroupDelta, full_label_of(up));
    CHECK_FALSE(is_primitive(x));
  }
}

TEST_CASE("species conversion preserves the element") {
  Poset c3 = Poset::chain(3);
  for (const auto& lam : enumerate_nn(c3)) {
    SpeciesElement x = SpeciesElement::term(c3, Basis::Chi, lam.arcs());
    SpeciesElement round =
        convert_species(convert_species(x, Basis::Delta), Basis::Chi);
    CHECK(round == x);
  }
}
