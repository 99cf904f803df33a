#include "superpattern/coideal.hpp"

#include <algorithm>

namespace superpattern {

CoIdeal::CoIdeal(Poset reference, std::vector<Arc> members)
    : ref_(std::move(reference)), members_(std::move(members)) {
  for (Arc a : members_)
    if (!arc_in(ref_, a))
      throw NotAnIntervalError("member is not a proper interval");
  sort_arcs(ref_, members_);
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (Arc a : members_)
    for (Arc b : proper_intervals(ref_))
      if (arc_leq(ref_, a, b) && !std::binary_search(members_.begin(), members_.end(), b,
                                                     [&](Arc x, Arc y) {
                                                       return arc_rank_less(ref_, x, y);
                                                     }))
        throw NotCoIdealError("member set is not upward closed");
}

bool CoIdeal::contains(Arc a) const {
  return std::find(members_.begin(), members_.end(), a) != members_.end();
}

bool is_normal(const Poset& r, const Poset& q) {
  if (!q.same_atoms(r) || !q.subposet_of(r))
    throw NotSubposetError("q is not a subposet of r on the same atoms");
  for (int i = 0; i < r.size(); ++i)
    for (int j = 0; j < r.size(); ++j) {
      if (!q.less(i, j)) continue;
      // every r-superset of [i,j] must be a q-relation
      for (int k = 0; k < r.size(); ++k)
        for (int l = 0; l < r.size(); ++l)
          if (r.less(k, l) && r.leq(k, i) && r.leq(j, l) && !q.less(k, l))
            return false;
    }
  return true;
}

namespace {

CoIdeal make_unchecked(const Poset& r, std::vector<Arc> members) {
  sort_arcs(r, members);
  members.erase(std::unique(members.begin(), members.end()), members.end());
  // Members come from constructions that preserve upward closure; the
  // checked constructor revalidates anyway.
  return CoIdeal(r, std::move(members));
}

}  // namespace

CoIdeal meet_irreducible(const Poset& r, Arc a) {
  if (!arc_in(r, a)) throw NotAnIntervalError("not a proper interval");
  std::vector<Arc> members;
  for (Arc b : proper_intervals(r))
    if (!arc_leq(r, b, a)) members.push_back(b);
  return make_unchecked(r, std::move(members));
}

CoIdeal join_irreducible(const Poset& r, Arc a) {
  if (!arc_in(r, a)) throw NotAnIntervalError("not a proper interval");
  std::vector<Arc> members;
  for (Arc b : proper_intervals(r))
    if (arc_leq(r, a, b)) members.push_back(b);
  return make_unchecked(r, std::move(members));
}

CoIdeal ut_lower(const NNPartition& lambda) {
  const Poset& r = lambda.reference();
  std::vector<Arc> members;
  for (Arc b : proper_intervals(r)) {
    bool below = false;
    for (Arc a : lambda.arcs())
      if (arc_leq(r, b, a)) {
        below = true;
        break;
      }
    if (!below) members.push_back(b);
  }
  return make_unchecked(r, std::move(members));
}

CoIdeal ut_upper(const NNPartition& lambda) {
  const Poset& r = lambda.reference();
  std::vector<Arc> members;
  for (Arc b : proper_intervals(r))
    for (Arc a : lambda.arcs())
      if (arc_leq(r, a, b)) {
        members.push_back(b);
        break;
      }
  return make_unchecked(r, std::move(members));
}

NNPartition lbl_cl(const CoIdeal& n) {
  const Poset& r = n.reference();
  std::vector<Arc> minimal;
  for (Arc a : n.members()) {
    bool is_min = true;
    for (Arc b : n.members())
      if (b != a && arc_leq(r, b, a)) {
        is_min = false;
        break;
      }
    if (is_min) minimal.push_back(a);
  }
  return NNPartition(r, std::move(minimal));
}

NNPartition lower_label(const CoIdeal& n) {
  const Poset& r = n.reference();
  std::vector<Arc> outside;
  for (Arc a : proper_intervals(r))
    if (!n.contains(a)) outside.push_back(a);
  std::vector<Arc> maximal;
  for (Arc a : outside) {
    bool is_max = true;
    for (Arc b : outside)
      if (b != a && arc_leq(r, a, b)) {
        is_max = false;
        break;
      }
    if (is_max) maximal.push_back(a);
  }
  return NNPartition(r, std::move(maximal));
}

CoIdeal meet(const CoIdeal& a, const CoIdeal& b) {
  if (a.reference() != b.reference())
    throw MixedReferenceError("co-ideals over different posets");
  std::vector<Arc> members;
  for (Arc x : a.members())
    if (b.contains(x)) members.push_back(x);
  return make_unchecked(a.reference(), std::move(members));
}

CoIdeal join(const CoIdeal& a, const CoIdeal& b) {
  if (a.reference() != b.reference())
    throw MixedReferenceError("co-ideals over different posets");
  std::vector<Arc> members = a.members();
  for (Arc x : b.members()) members.push_back(x);
  return make_unchecked(a.reference(), std::move(members));
}

std::vector<std::pair<Arc, CoIdeal>> covers(const NNPartition& lambda) {
  CoIdeal base = ut_lower(lambda);
  std::vector<std::pair<Arc, CoIdeal>> out;
  for (Arc a : lambda.arcs()) {
    std::vector<Arc> members = base.members();
    members.push_back(a);
    out.emplace_back(a, make_unchecked(lambda.reference(), std::move(members)));
  }
  return out;
}

int order_exponent(const CoIdeal& n) { return static_cast<int>(n.size()); }

CoIdeal generated_coideal(const Poset& r, const std::vector<Arc>& arcs) {
  for (Arc a : arcs)
    if (!arc_in(r, a)) throw NotAnIntervalError("not a proper interval");
  std::vector<Arc> members;
  for (Arc b : proper_intervals(r))
    for (Arc a : arcs)
      if (arc_leq(r, a, b)) {
        members.push_back(b);
        break;
      }
  return make_unchecked(r, std::move(members));
}

Poset subgroup_poset(const CoIdeal& n) {
  const Poset& r = n.reference();
  std::vector<std::uint32_t> less(static_cast<size_t>(r.size()), 0u);
  for (Arc a : n.members()) less[static_cast<size_t>(a.lo)] |= 1u << a.hi;
  return Poset::from_closed(r.labels(), std::move(less));
}

CoIdeal coideal_of_subposet(const Poset& r, const Poset& q) {
  if (!q.same_atoms(r) || !q.subposet_of(r))
    throw NotSubposetError("q is not a subposet of r on the same atoms");
  std::vector<Arc> members;
  for (int i = 0; i < r.size(); ++i)
    for (int j = 0; j < r.size(); ++j)
      if (q.less(i, j)) members.push_back(Arc{i, j});
  return CoIdeal(r, std::move(members));
}

std::vector<CoIdeal> full_lattice(const Poset& r, std::uint64_t cap) {
  std::vector<CoIdeal> out;
  for (const auto& lam : enumerate_nn(r, cap)) out.push_back(ut_upper(lam));
  return out;
}

}  // namespace superpattern
