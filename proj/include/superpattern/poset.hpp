#pragma once

// Finite labeled posets and their proper intervals.  Posets are immutable
// values; equality is structural on (atom set, strict relation).  Atoms are
// ordered lexicographically by label for reproducible output; that order
// carries no mathematical meaning.

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "superpattern/errors.hpp"

namespace superpattern {

// A proper interval [lo, hi] of some poset, stored as atom indices.
struct Arc {
  int lo = -1;
  int hi = -1;
  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

class Poset {
 public:
  Poset();  // the empty poset

  // Transitive closure of the given relation; CycleError if the closure is
  // not a strict order, UnknownAtomError for pairs outside the atom set.
  static Poset from_relations(
      std::vector<std::string> atoms,
      const std::vector<std::pair<std::string, std::string>>& pairs);
  static Poset chain(int n);      // atoms "1".."n", n <= 9
  static Poset antichain(int n);

  int size() const { return static_cast<int>(d_->labels.size()); }
  const std::vector<std::string>& labels() const { return d_->labels; }
  const std::string& label(int i) const { return d_->labels[static_cast<size_t>(i)]; }
  int index_of(const std::string& label) const;  // UnknownAtomError
  bool has_atom(const std::string& label) const;

  bool less(int i, int j) const {
    return (d_->less[static_cast<size_t>(i)] >> j) & 1u;
  }
  bool leq(int i, int j) const { return i == j || less(i, j); }
  std::uint32_t row(int i) const { return d_->less[static_cast<size_t>(i)]; }
  int relation_count() const;  // |Int°|

  Poset restrict_to(const std::vector<std::string>& atoms) const;
  Poset concatenate(const Poset& other) const;  // OverlapError on shared atoms
  int width() const;
  bool convex(const std::vector<std::string>& atoms) const;

  // Subposet on the same atoms, relations contained in this poset's.
  bool same_atoms(const Poset& other) const;
  // Atom subset with every relation also a relation here.
  bool subposet_of(const Poset& other) const;

  bool operator==(const Poset& o) const {
    return d_ == o.d_ || (d_->labels == o.d_->labels && d_->less == o.d_->less);
  }
  bool operator!=(const Poset& o) const { return !(*this == o); }
  bool operator<(const Poset& o) const;

  std::string str() const;  // compact "a<b,a<c" form for messages

  // Construction from prevalidated data (already transitively closed).
  static Poset from_closed(std::vector<std::string> sorted_labels,
                           std::vector<std::uint32_t> less);

 private:
  struct Data {
    std::vector<std::string> labels;      // sorted, unique
    std::vector<std::uint32_t> less;      // less[i] bit j set  <=>  i < j
  };
  explicit Poset(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

bool arc_in(const Poset& p, Arc a);        // lo strictly below hi
// Containment of order intervals: a ⊆ b iff b.lo ⪯ a.lo and a.hi ⪯ b.hi.
bool arc_leq(const Poset& p, Arc a, Arc b);
int interval_cardinality(const Poset& p, Arc a);  // |{z : lo ⪯ z ⪯ hi}|
// Canonical order: (cardinality, lo, hi).
bool arc_rank_less(const Poset& p, Arc a, Arc b);
std::vector<Arc> proper_intervals(const Poset& p);
void sort_arcs(const Poset& p, std::vector<Arc>& arcs);
Arc arc_of_labels(const Poset& p, const std::string& lo, const std::string& hi);
// Re-express an arc of `from` as an arc of `to` (labels must exist in both).
Arc translate_arc(const Poset& from, const Poset& to, Arc a);

// Rich interval type carrying its reference poset.
struct Interval {
  Poset reference;
  Arc arc;
};
bool interval_leq(const Interval& a, const Interval& b);  // MixedReferenceError

// An ordered sequence of nonempty disjoint blocks covering a ground set.
struct SetComposition {
  std::vector<std::vector<std::string>> blocks;
  size_t length() const { return blocks.size(); }
};

}  // namespace superpattern
