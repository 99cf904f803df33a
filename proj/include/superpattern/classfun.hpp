#pragma once

// Superclass functions of one pattern group: the supercharacter value
// formula, degrees, superclass sizes, the supercharacter table, inner
// products, and conversion between the standard bases.

#include <cstdint>
#include <map>
#include <vector>

#include "superpattern/coideal.hpp"
#include "superpattern/group.hpp"
#include "superpattern/nonnesting.hpp"
#include "superpattern/poset.hpp"
#include "superpattern/ratfunc.hpp"

namespace superpattern {

enum class Basis { Delta, Chi, SubgroupChi, SubgroupDelta };

const char* basis_name(Basis b);
Basis basis_from_name(const std::string& name);  // InputError

class ClassFunction {
 public:
  ClassFunction() = default;
  ClassFunction(Poset reference, Basis basis)
      : ref_(std::move(reference)), basis_(basis) {}

  const Poset& reference() const { return ref_; }
  Basis basis() const { return basis_; }

  void add(const std::vector<Arc>& label, const RationalFunction& c);
  RationalFunction coeff(const std::vector<Arc>& label) const;
  const std::map<std::vector<Arc>, RationalFunction>& terms() const {
    return terms_;
  }
  bool is_zero() const { return terms_.empty(); }

  bool operator==(const ClassFunction& o) const {
    return ref_ == o.ref_ && basis_ == o.basis_ && terms_ == o.terms_;
  }

 private:
  Poset ref_;
  Basis basis_ = Basis::Delta;
  std::map<std::vector<Arc>, RationalFunction> terms_;  // zero coeffs absent
};

ClassFunction basis_vector(const Poset& r, Basis basis,
                           const NNPartition& label);

// chi^lambda evaluated on the superclass mu: the closed value on the cover
// closure, zero when some arc of mu sits strictly inside an arc of lambda.
RationalFunction chi_value(const NNPartition& lambda, const NNPartition& mu);
RationalFunction chi_degree(const NNPartition& lambda);
RationalFunction superclass_size(const NNPartition& mu);

struct Table {
  Poset ref;
  std::vector<NNPartition> labels;  // canonical order, rows and columns
  std::vector<std::vector<RationalFunction>> entries;  // [row=lambda][col=mu]
};
Table supercharacter_table(const Poset& r, std::uint64_t cap = kDefaultNNCap);

// Product formula for the determinant of the table.
RationalFunction table_determinant_formula(const Poset& r,
                                           std::uint64_t cap = kDefaultNNCap);
// Exact determinant by elimination over Q(q).
RationalFunction determinant(std::vector<std::vector<RationalFunction>> m);

// <f,g> = |UT_R|^{-1} sum_mu |UT^mu_o| f(mu) g(mu); all values are rational
// functions of q so conjugation is trivial.  With this averaged
// normalization <chi^l, chi^l> equals chi^l(1) and <delta_mu, delta_mu>
// equals |UT^mu_o| / |UT_R|.
RationalFunction inner_product(const ClassFunction& f, const ClassFunction& g);

ClassFunction convert(const ClassFunction& f, Basis target,
                      std::uint64_t cap = kDefaultNNCap);

BigRat evaluate_at_element(const ClassFunction& f, const GroupElement& g);

// Solves m x = rhs over Q(q); m must be square and invertible.
std::vector<RationalFunction> solve_linear(
    std::vector<std::vector<RationalFunction>> m,
    std::vector<RationalFunction> rhs);

}  // namespace superpattern
