#pragma once

// Non-nesting poset partitions: antichains of proper intervals under
// inclusion.  These index both the superclasses and the supercharacters of a
// pattern group.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "superpattern/poset.hpp"

namespace superpattern {

inline constexpr std::uint64_t kDefaultNNCap = 1000000;

class NNPartition {
 public:
  NNPartition() = default;
  explicit NNPartition(Poset reference) : ref_(std::move(reference)) {}
  // Validates that every arc is a proper interval (NotAnIntervalError) and
  // that the arcs form an antichain under inclusion (NotAntichainError).
  NNPartition(Poset reference, std::vector<Arc> arcs);
  static NNPartition from_labels(
      const Poset& reference,
      const std::vector<std::pair<std::string, std::string>>& arcs);

  const Poset& reference() const { return ref_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  size_t size() const { return arcs_.size(); }
  bool empty() const { return arcs_.empty(); }
  bool contains(Arc a) const;

  bool operator==(const NNPartition& o) const {
    return ref_ == o.ref_ && arcs_ == o.arcs_;
  }
  bool operator!=(const NNPartition& o) const { return !(*this == o); }

  std::string str() const;

 private:
  Poset ref_;
  std::vector<Arc> arcs_;  // canonically sorted
};

// Canonical order on partitions of one poset: (arc count, arc rank list).
bool nn_canonical_less(const NNPartition& a, const NNPartition& b);

bool is_nn(const Poset& r, const std::vector<Arc>& arcs);

std::uint64_t count_nn(const Poset& r, std::uint64_t cap = kDefaultNNCap);
std::vector<NNPartition> enumerate_nn(const Poset& r,
                                      std::uint64_t cap = kDefaultNNCap);

// Arcs of lambda whose endpoints are comparable in the subposet q,
// re-referenced to q.
NNPartition restrict_nn(const NNPartition& lambda, const Poset& q);

// The interval collection Int^lambda_mu: proper intervals of q that are not
// below any arc of mu (inclusion in q) but are below some arc of lambda
// (inclusion in r).  Ordered by inclusion in q.
struct IntervalSubposet {
  Poset q;
  std::vector<Arc> members;  // arcs of q, canonically sorted
};
IntervalSubposet int_lambda_mu(const Poset& r, const Poset& q,
                               const NNPartition& lambda, const NNPartition& mu);

// Every arc of nu - lambda is contained in some arc of lambda - nu.
bool res_compatible(const NNPartition& lambda, const NNPartition& nu);

// Antichains of an arbitrary sub-collection of proper intervals of q under
// inclusion, in generation order; the empty antichain comes first.
std::vector<std::vector<Arc>> antichains_in(const Poset& q,
                                            const std::vector<Arc>& members,
                                            std::uint64_t cap = kDefaultNNCap);

}  // namespace superpattern
