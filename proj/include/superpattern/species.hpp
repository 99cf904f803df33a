#pragma once

// The Hopf monoid of superclass functions of pattern groups.  Elements are
// formal combinations of (ambient poset, basis label) pairs over a fixed
// ground set; the product inflates along concatenation and the coproduct
// restricts along a split of the ground set.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "superpattern/classfun.hpp"
#include "superpattern/coideal.hpp"
#include "superpattern/nonnesting.hpp"
#include "superpattern/poset.hpp"
#include "superpattern/ratfunc.hpp"

namespace superpattern {

inline constexpr int kDefaultAntipodeAtomCap = 8;

struct TermKey {
  Poset ambient;
  std::vector<Arc> label;
  bool operator==(const TermKey& o) const {
    return ambient == o.ambient && label == o.label;
  }
  bool operator<(const TermKey& o) const {
    if (ambient != o.ambient) return ambient < o.ambient;
    return label < o.label;
  }
};

class SpeciesElement {
 public:
  SpeciesElement() = default;
  SpeciesElement(std::vector<std::string> ground, Basis basis);
  static SpeciesElement unit(Basis basis);  // over the empty ground set
  static SpeciesElement term(const Poset& ambient, Basis basis,
                             const std::vector<Arc>& label,
                             RationalFunction coeff = RationalFunction(1));

  const std::vector<std::string>& ground() const { return ground_; }
  Basis basis() const { return basis_; }
  const std::map<TermKey, RationalFunction>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Poset& ambient, const std::vector<Arc>& label,
           const RationalFunction& c);
  void add_scaled(const SpeciesElement& other, const RationalFunction& c);
  RationalFunction coeff(const Poset& ambient,
                         const std::vector<Arc>& label) const;

  SpeciesElement operator+(const SpeciesElement& o) const;
  SpeciesElement operator-(const SpeciesElement& o) const;
  SpeciesElement operator*(const RationalFunction& c) const;
  bool operator==(const SpeciesElement& o) const {
    return ground_ == o.ground_ && basis_ == o.basis_ && terms_ == o.terms_;
  }

  std::string str() const;

 private:
  std::vector<std::string> ground_;  // sorted
  Basis basis_ = Basis::Chi;
  std::map<TermKey, RationalFunction> terms_;
};

class SpeciesTensor {
 public:
  SpeciesTensor() = default;
  SpeciesTensor(std::vector<std::vector<std::string>> blocks, Basis basis)
      : blocks_(std::move(blocks)), basis_(basis) {}
  const std::vector<std::vector<std::string>>& blocks() const { return blocks_; }
  Basis basis() const { return basis_; }
  const std::map<std::vector<TermKey>, RationalFunction>& terms() const {
    return terms_;
  }
  bool is_zero() const { return terms_.empty(); }
  void add(std::vector<TermKey> key, const RationalFunction& c);

 private:
  std::vector<std::vector<std::string>> blocks_;
  Basis basis_ = Basis::Chi;
  std::map<std::vector<TermKey>, RationalFunction> terms_;
};

// Inflation product; grounds must be disjoint, bases equal.
SpeciesElement product(const SpeciesElement& x, const SpeciesElement& y);

// Restriction coproduct along an ordered split of the ground set; empty
// blocks are allowed and contribute unit components.
SpeciesTensor coproduct(const SpeciesElement& x,
                        const std::vector<std::string>& a,
                        const std::vector<std::string>& b);
SpeciesTensor coproduct_multi(const SpeciesElement& x,
                              const std::vector<std::vector<std::string>>& blocks);
// Multiply the tensor components out in block order.
SpeciesElement product_all(const SpeciesTensor& t);

// Restriction of chi^lambda from UT_r to UT_q for a subposet q on the same
// atoms, expanded in the chi basis of q.
ClassFunction restriction_general(const Poset& r, const Poset& q,
                                  const NNPartition& lambda);

// Q-factorizations of p: ordered set partitions (I_1,..,I_l) of the common
// atom set with p equal to the concatenation of the q|_{I_j}.
std::vector<SetComposition> fac(const Poset& q, const Poset& p);

// Takeuchi's alternating sum over set compositions, with the sign
// convention (-1)^(length-1); under it the antipode of the empty-ground
// unit is -1.
SpeciesElement antipode_takeuchi(const SpeciesElement& x,
                                 int max_atoms = kDefaultAntipodeAtomCap);

// Closed form for subgroup indicator functions: one term per poset with a
// unique q-factorization, ambient taken as that poset itself.
SpeciesElement antipode_delta_subgroup(const Poset& q,
                                       int max_atoms = kDefaultAntipodeAtomCap);

bool is_lambda_atomic(const Poset& r, const Poset& p, const NNPartition& lambda);

// Closed form for the antipode of chi^lambda: terms grouped by ambient
// poset p with lambda-atomic factorization set.
SpeciesElement antipode_chi(const Poset& r, const NNPartition& lambda,
                            int max_atoms = kDefaultAntipodeAtomCap,
                            std::uint64_t cap = kDefaultNNCap);

// Simultaneous concatenation splits of a pair of posets on one atom set.
bool is_atomic_pair(const Poset& p, const Poset& q);
SetComposition decompose_atomic(const Poset& p, const Poset& q);

// Signed sum over set compositions whose first block contains `atom`;
// primitive for atomic pairs, with leading term the pair itself.
SpeciesElement primitive_generator(const std::string& atom, const Poset& p,
                                   const Poset& q);

// True when every coproduct along a split with two nonempty blocks vanishes.
bool is_primitive(const SpeciesElement& x);

// sum over ordered splits of m(S(x|_A) (x) x|_B); zero on nonempty grounds.
SpeciesElement antipode_convolution(const SpeciesElement& x);

SpeciesElement convert_species(const SpeciesElement& x, Basis target,
                               std::uint64_t cap = kDefaultNNCap);

}  // namespace superpattern
