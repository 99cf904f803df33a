#include <doctest.h>

#include "superpattern/classfun.hpp"
#include "superpattern/enumerate.hpp"

using namespace superpattern;

namespace {

RationalFunction q_pow(int k) { return RationalFunction::q_power(k); }
Polynomial qm1() { return Polynomial::from_coeffs({BigInt(-1), BigInt(1)}); }

}  // namespace

TEST_CASE("character values") {
  Poset c2 = Poset::chain(2);
  NNPartition full2 = NNPartition::from_labels(c2, {{"1", "2"}});
  for (const auto& mu : enumerate_nn(c2))
    CHECK(chi_value(NNPartition(c2), mu) == RationalFunction(1));
  CHECK(chi_value(full2, full2) == RationalFunction(-1));

  Poset c3 = Poset::chain(3);
  NNPartition big = NNPartition::from_labels(c3, {{"1", "3"}});
  NNPartition small = NNPartition::from_labels(c3, {{"1", "2"}});
  CHECK(chi_value(big, small).is_zero());
}

TEST_CASE("degrees") {
  Poset c2 = Poset::chain(2);
  Poset c3 = Poset::chain(3);
  CHECK(chi_degree(NNPartition(c2)) == RationalFunction(1));
  CHECK(chi_degree(NNPartition::from_labels(c2, {{"1", "2"}})) ==
        RationalFunction(qm1()));
  CHECK(chi_degree(NNPartition::from_labels(c3, {{"1", "3"}})) ==
        q_pow(2) * RationalFunction(qm1()));
}

TEST_CASE("superclass sizes with two oracles") {
  Poset c2 = Poset::chain(2);
  CHECK(superclass_size(NNPartition(c2)) == RationalFunction(1));
  CHECK(superclass_size(NNPartition::from_labels(c2, {{"1", "2"}})) ==
        RationalFunction(qm1()));
  Poset c3 = Poset::chain(3);
  NNPartition pair = NNPartition::from_labels(c3, {{"1", "2"}, {"2", "3"}});
  CHECK(superclass_size(pair) ==
        RationalFunction(Polynomial::q() * qm1() * qm1()));

  // Inclusion-exclusion over the arcs of mu reproduces the closed form.
  for (const auto& r : all_posets(numbered_atoms(3)))
    for (const auto& mu : enumerate_nn(r)) {
      int up = order_exponent(ut_upper(mu));
      RationalFunction alternating;
      const size_t k = mu.size();
      for (std::uint32_t s = 0; s < (1u << k); ++s) {
        int bits = 0;
        for (size_t i = 0; i < k; ++i)
          if ((s >> i) & 1u) ++bits;
        RationalFunction term = q_pow(up - bits);
        alternating += (bits % 2 == 0) ? term : -term;
      }
      CHECK(alternating == superclass_size(mu));
    }

  // Element counts at two primes.
  for (int p : {2, 3})
    for (const auto& r : all_posets(numbered_atoms(3)))
      for (const auto& mu : enumerate_nn(r)) {
        std::uint64_t count = 0;
        for (const auto& g : all_elements(r, p))
          if (superclass_of(g) == mu) ++count;
        CHECK(superclass_size(mu).eval(BigRat(p)) == BigRat(count));
      }
}

TEST_CASE("tables") {
  Table t2 = supercharacter_table(Poset::chain(2));
  REQUIRE(t2.labels.size() == 2);
  CHECK(t2.entries[0][0] == RationalFunction(1));
  CHECK(t2.entries[0][1] == RationalFunction(1));
  CHECK(t2.entries[1][0] == RationalFunction(qm1()));
  CHECK(t2.entries[1][1] == RationalFunction(-1));

  Table t1 = supercharacter_table(Poset::antichain(3));
  REQUIRE(t1.labels.size() == 1);
  CHECK(t1.entries[0][0] == RationalFunction(1));

  Table t3 = supercharacter_table(Poset::chain(3));
  REQUIRE(t3.labels.size() == 5);
  CHECK(t3.labels[3].str() == "{[1,3]}");
  CHECK(t3.entries[3][0] == q_pow(2) * RationalFunction(qm1()));
  CHECK(t3.entries[3][1].is_zero());
  CHECK(t3.entries[3][2].is_zero());
  CHECK(t3.entries[3][3] == -q_pow(2));
  CHECK(t3.entries[3][4].is_zero());
}

TEST_CASE("table determinants") {
  CHECK(table_determinant_formula(Poset::chain(2)) == RationalFunction::q());
  CHECK(determinant(supercharacter_table(Poset::chain(2)).entries) ==
        -RationalFunction::q());
  CHECK(table_determinant_formula(Poset::antichain(4)) == RationalFunction(1));
  for (const auto& r : all_posets(numbered_atoms(3))) {
    RationalFunction direct = determinant(supercharacter_table(r).entries);
    RationalFunction formula = table_determinant_formula(r);
    CHECK((direct == formula || direct == -formula));
  }
}

TEST_CASE("inner products") {
  Poset c3 = Poset::chain(3);
  auto labels = enumerate_nn(c3);
  for (const auto& lam : labels)
    for (const auto& nu : labels) {
      RationalFunction ip = inner_product(basis_vector(c3, Basis::Chi, lam),
                                          basis_vector(c3, Basis::Chi, nu));
      CHECK(ip == (lam == nu ? chi_degree(lam) : RationalFunction()));
      // Subgroup characters pair through the order of the product subgroup.
      RationalFunction sub = inner_product(
          basis_vector(c3, Basis::SubgroupChi, lam),
          basis_vector(c3, Basis::SubgroupChi, nu));
      CHECK(sub == q_pow(3 - order_exponent(join(ut_lower(lam), ut_lower(nu)))));
    }
  NNPartition mu = labels[1];
  CHECK(inner_product(basis_vector(c3, Basis::Delta, mu),
                      basis_vector(c3, Basis::Delta, mu)) ==
        superclass_size(mu) * q_pow(-3));
}

TEST_CASE("column orthogonality") {
  for (const auto& r : all_posets(numbered_atoms(3))) {
    auto labels = enumerate_nn(r);
    Table t = supercharacter_table(r);
    for (size_t i = 0; i < labels.size(); ++i)
      for (size_t j = 0; j < labels.size(); ++j) {
        RationalFunction sum;
        for (size_t k = 0; k < labels.size(); ++k)
          sum += t.entries[k][i] * t.entries[k][j] / chi_degree(labels[k]);
        RationalFunction expect =
            i == j ? q_pow(r.relation_count()) / superclass_size(labels[i])
                   : RationalFunction();
        CHECK(sum == expect);
      }
  }
}

TEST_CASE("basis conversions") {
  Poset c3 = Poset::chain(3);
  auto labels = enumerate_nn(c3);
  for (const auto& lam : labels)
    for (Basis from : {Basis::Delta, Basis::Chi, Basis::SubgroupChi,
                       Basis::SubgroupDelta})
      for (Basis to : {Basis::Delta, Basis::Chi, Basis::SubgroupChi,
                       Basis::SubgroupDelta}) {
        ClassFunction f = basis_vector(c3, from, lam);
        CHECK(convert(convert(f, to), from) == f);
      }

  // chi^{UT_lambda} expands as the sum of chi^nu over larger subgroups.
  NNPartition big = NNPartition::from_labels(c3, {{"1", "3"}});
  ClassFunction expanded = convert(basis_vector(c3, Basis::SubgroupChi, big),
                                   Basis::Chi);
  for (const auto& nu : labels)
    CHECK(expanded.coeff(nu.arcs()) == RationalFunction(1));

  // A trivial subgroup induces the regular character.
  ClassFunction reg = convert(basis_vector(c3, Basis::SubgroupChi, big),
                              Basis::Delta);
  CHECK(reg.terms().size() == 1);
  CHECK(reg.coeff({}) == q_pow(3));
}

TEST_CASE("evaluation against group elements") {
  Poset c2 = Poset::chain(2);
  GroupElement e12 = generator(c2, "1", "2", 1, 3);
  CHECK(evaluate_at_element(basis_vector(c2, Basis::Chi, NNPartition(c2)), e12) ==
        BigRat(1));
  CHECK(evaluate_at_element(
            basis_vector(c2, Basis::Chi,
                         NNPartition::from_labels(c2, {{"1", "2"}})),
            e12) == BigRat(-1));

  Poset c3 = Poset::chain(3);
  ClassFunction regular(c3, Basis::Chi);
  for (const auto& lam : enumerate_nn(c3))
    regular.add(lam.arcs(), RationalFunction(1));
  // The plain sum of all supercharacters is the regular character: |UT_R|
  // at the identity and zero elsewhere.
  for (const auto& g : all_elements(c3, 2))
    CHECK(evaluate_at_element(regular, g) == (g.is_identity() ? BigRat(8) : BigRat(0)));
}
