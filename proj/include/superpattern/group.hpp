#pragma once

// Concrete pattern-group elements over a prime field F_p.  This is the
// brute-force side of the verification story: multiplication is interval
// convolution, and every closed formula elsewhere in the library can be
// checked against element counts here.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "superpattern/coideal.hpp"
#include "superpattern/nonnesting.hpp"
#include "superpattern/poset.hpp"

namespace superpattern {

inline constexpr std::uint64_t kDefaultGroupCap = 1u << 20;

bool is_prime(int p);

// Proper intervals of a poset with (lo,hi) -> index lookup.
struct IntervalTable {
  Poset ref;
  std::vector<Arc> intervals;   // canonical order
  std::vector<int> index;       // n*n, -1 where not a proper interval
  static IntervalTable of(const Poset& p);
  int at(int lo, int hi) const { return index[static_cast<size_t>(lo) * n + hi]; }
  size_t count() const { return intervals.size(); }
  int n = 0;
};

class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(Poset reference, int p);  // identity
  const Poset& reference() const { return ref_; }
  int modulus() const { return p_; }
  int entry(size_t interval_idx) const { return e_[interval_idx]; }
  void set_entry(size_t interval_idx, int value);
  const std::vector<int>& entries() const { return e_; }

  bool is_identity() const;
  bool operator==(const GroupElement& o) const {
    return ref_ == o.ref_ && p_ == o.p_ && e_ == o.e_;
  }
  bool operator<(const GroupElement& o) const { return e_ < o.e_; }

  std::string str() const;

 private:
  Poset ref_;
  int p_ = 2;
  std::vector<int> e_;  // indexed by canonical proper-interval order
};

GroupElement generator(const Poset& r, const std::string& a,
                       const std::string& b, int t, int p);  // NotComparableError
GroupElement multiply(const GroupElement& u, const GroupElement& v);
GroupElement inverse(const GroupElement& u);

std::uint64_t group_order(const Poset& r, int p);  // p^|Int°|, capped at 2^63
void for_each_element(const Poset& r, int p,
                      const std::function<void(const GroupElement&)>& fn,
                      std::uint64_t cap = kDefaultGroupCap);
std::vector<GroupElement> all_elements(const Poset& r, int p,
                                       std::uint64_t cap = kDefaultGroupCap);

// Minimal intervals of the support: the superclass label of g.
NNPartition superclass_of(const GroupElement& g);

// Membership of g in the cover closure of UT_lambda, decided combinatorially:
// no arc of the superclass of g sits strictly inside an arc of lambda.
bool in_cover_closure(const GroupElement& g, const NNPartition& lambda);
// Same membership by enumerating UT_lambda times the one-parameter subgroups.
bool in_cover_closure_direct(const GroupElement& g, const NNPartition& lambda,
                             std::uint64_t cap = kDefaultGroupCap);

// Conjugation-closure of UT_q inside UT_r, checked element by element.
bool group_normality_check(const Poset& r, const Poset& q, int p,
                           std::uint64_t cap = kDefaultGroupCap);

}  // namespace superpattern
