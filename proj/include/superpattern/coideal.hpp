#pragma once

// The distributive lattice of normal pattern subgroups.  A normal subgroup
// is stored as the upward-closed set (co-ideal) of proper intervals of the
// ambient poset; lattice operations are set operations on these.

#include <cstdint>
#include <utility>
#include <vector>

#include "superpattern/nonnesting.hpp"
#include "superpattern/poset.hpp"

namespace superpattern {

class CoIdeal {
 public:
  CoIdeal() = default;
  explicit CoIdeal(Poset reference) : ref_(std::move(reference)) {}
  // Validates membership in Int° and upward closure (NotCoIdealError).
  CoIdeal(Poset reference, std::vector<Arc> members);

  const Poset& reference() const { return ref_; }
  const std::vector<Arc>& members() const { return members_; }
  bool contains(Arc a) const;
  size_t size() const { return members_.size(); }

  bool operator==(const CoIdeal& o) const {
    return ref_ == o.ref_ && members_ == o.members_;
  }
  bool operator!=(const CoIdeal& o) const { return !(*this == o); }

 private:
  Poset ref_;
  std::vector<Arc> members_;  // canonically sorted
};

// Int°(q) upward closed in Int°(r); q must be a subposet of r on the same
// atoms (NotSubposetError otherwise).
bool is_normal(const Poset& r, const Poset& q);

// Complement of the principal ideal below a.
CoIdeal meet_irreducible(const Poset& r, Arc a);
// Principal co-ideal of all intervals containing a.
CoIdeal join_irreducible(const Poset& r, Arc a);

// UT_lambda: intervals contained in no arc of lambda.
CoIdeal ut_lower(const NNPartition& lambda);
// UT^lambda: upward closure of the arcs of lambda.
CoIdeal ut_upper(const NNPartition& lambda);

// Minimal members of the co-ideal; inverse of ut_upper.
NNPartition lbl_cl(const CoIdeal& n);
// The label lambda with ut_lower(lambda) = n: maximal intervals outside n.
NNPartition lower_label(const CoIdeal& n);

CoIdeal meet(const CoIdeal& a, const CoIdeal& b);
CoIdeal join(const CoIdeal& a, const CoIdeal& b);

// For each arc of lambda, the cover ut_lower(lambda) + that arc.
std::vector<std::pair<Arc, CoIdeal>> covers(const NNPartition& lambda);

int order_exponent(const CoIdeal& n);

CoIdeal generated_coideal(const Poset& r, const std::vector<Arc>& arcs);

// The subposet q with Int°(q) equal to the member set.
Poset subgroup_poset(const CoIdeal& n);
// Co-ideal of all r-intervals that are relations of the subposet q.
CoIdeal coideal_of_subposet(const Poset& r, const Poset& q);

// Every co-ideal of Int°(r); enumeration plumbing for the verify harness.
std::vector<CoIdeal> full_lattice(const Poset& r,
                                  std::uint64_t cap = kDefaultNNCap);

}  // namespace superpattern
