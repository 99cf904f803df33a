#include "superpattern/nonnesting.hpp"

#include <algorithm>
#include <sstream>

namespace superpattern {

NNPartition::NNPartition(Poset reference, std::vector<Arc> arcs)
    : ref_(std::move(reference)), arcs_(std::move(arcs)) {
  for (Arc a : arcs_)
    if (!arc_in(ref_, a))
      throw NotAnIntervalError("arc is not a proper interval of the reference");
  sort_arcs(ref_, arcs_);
  arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
  for (size_t i = 0; i < arcs_.size(); ++i)
    for (size_t j = 0; j < arcs_.size(); ++j)
      if (i != j && arc_leq(ref_, arcs_[i], arcs_[j]))
        throw NotAntichainError("arcs nest: partition is not an antichain");
}

NNPartition NNPartition::from_labels(
    const Poset& reference,
    const std::vector<std::pair<std::string, std::string>>& arcs) {
  std::vector<Arc> as;
  as.reserve(arcs.size());
  for (const auto& [lo, hi] : arcs) as.push_back(arc_of_labels(reference, lo, hi));
  return NNPartition(reference, std::move(as));
}

bool NNPartition::contains(Arc a) const {
  return std::find(arcs_.begin(), arcs_.end(), a) != arcs_.end();
}

std::string NNPartition::str() const {
  std::ostringstream out;
  out << "{";
  for (size_t i = 0; i < arcs_.size(); ++i) {
    if (i) out << ",";
    out << "[" << ref_.label(arcs_[i].lo) << "," << ref_.label(arcs_[i].hi) << "]";
  }
  out << "}";
  return out.str();
}

bool nn_canonical_less(const NNPartition& a, const NNPartition& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const Poset& p = a.reference();
  for (size_t i = 0; i < a.size(); ++i) {
    if (a.arcs()[i] != b.arcs()[i])
      return arc_rank_less(p, a.arcs()[i], b.arcs()[i]);
  }
  return false;
}

bool is_nn(const Poset& r, const std::vector<Arc>& arcs) {
  for (Arc a : arcs)
    if (!arc_in(r, a))
      throw NotAnIntervalError("arc is not a proper interval of the poset");
  for (size_t i = 0; i < arcs.size(); ++i)
    for (size_t j = 0; j < arcs.size(); ++j)
      if (i != j && arcs[i] != arcs[j] && arc_leq(r, arcs[i], arcs[j])) return false;
  return true;
}

namespace {

// Walks antichains of `members` (under inclusion in q) in lexicographic
// order of member index, pruning by comparability.
void walk_antichains(const Poset& q, const std::vector<Arc>& members,
                     std::uint64_t cap, std::uint64_t& count,
                     std::vector<std::vector<Arc>>* out) {
  const size_t m = members.size();
  // comparable[i] bit j: members i and j are inclusion-comparable.
  std::vector<std::uint64_t> comparable(m, 0);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      if (i != j && (arc_leq(q, members[i], members[j]) ||
                     arc_leq(q, members[j], members[i])))
        comparable[i] |= std::uint64_t{1} << j;

  std::vector<size_t> chosen;
  std::function<void(size_t)> rec = [&](size_t start) {
    if (++count > cap) throw SizeCapError("antichain enumeration exceeds cap");
    if (out) {
      std::vector<Arc> arcs;
      arcs.reserve(chosen.size());
      for (size_t k : chosen) arcs.push_back(members[k]);
      out->push_back(std::move(arcs));
    }
    for (size_t i = start; i < m; ++i) {
      bool ok = true;
      for (size_t k : chosen)
        if ((comparable[k] >> i) & 1u) {
          ok = false;
          break;
        }
      if (ok) {
        chosen.push_back(i);
        rec(i + 1);
        chosen.pop_back();
      }
    }
  };
  rec(0);
}

}  // namespace

std::vector<std::vector<Arc>> antichains_in(const Poset& q,
                                            const std::vector<Arc>& members,
                                            std::uint64_t cap) {
  if (members.size() > 63) throw SizeCapError("too many intervals to enumerate");
  std::vector<std::vector<Arc>> out;
  std::uint64_t count = 0;
  walk_antichains(q, members, cap, count, &out);
  return out;
}

std::uint64_t count_nn(const Poset& r, std::uint64_t cap) {
  auto members = proper_intervals(r);
  if (members.size() > 63) throw SizeCapError("too many intervals to enumerate");
  std::uint64_t count = 0;
  walk_antichains(r, members, cap, count, nullptr);
  return count;
}

std::vector<NNPartition> enumerate_nn(const Poset& r, std::uint64_t cap) {
  std::vector<NNPartition> out;
  for (auto& arcs : antichains_in(r, proper_intervals(r), cap))
    out.emplace_back(r, std::move(arcs));
  std::sort(out.begin(), out.end(), nn_canonical_less);
  return out;
}

NNPartition restrict_nn(const NNPartition& lambda, const Poset& q) {
  if (!q.subposet_of(lambda.reference()))
    throw NotSubposetError("restriction target is not a subposet of the reference");
  const Poset& r = lambda.reference();
  std::vector<Arc> arcs;
  for (Arc a : lambda.arcs()) {
    const std::string& lo = r.label(a.lo);
    const std::string& hi = r.label(a.hi);
    if (q.has_atom(lo) && q.has_atom(hi)) {
      Arc b{q.index_of(lo), q.index_of(hi)};
      if (q.less(b.lo, b.hi)) arcs.push_back(b);
    }
  }
  return NNPartition(q, std::move(arcs));
}

IntervalSubposet int_lambda_mu(const Poset& r, const Poset& q,
                               const NNPartition& lambda, const NNPartition& mu) {
  if (lambda.reference() != r || mu.reference() != q)
    throw MixedReferenceError("labels do not match the given posets");
  if (!q.subposet_of(r))
    throw NotSubposetError("q is not a subposet of r");
  IntervalSubposet out;
  out.q = q;
  for (Arc b : proper_intervals(q)) {
    bool below_mu = false;
    for (Arc m : mu.arcs())
      if (arc_leq(q, b, m)) {
        below_mu = true;
        break;
      }
    if (below_mu) continue;
    Arc in_r = translate_arc(q, r, b);
    bool below_lambda = false;
    for (Arc l : lambda.arcs())
      if (arc_leq(r, in_r, l)) {
        below_lambda = true;
        break;
      }
    if (below_lambda) out.members.push_back(b);
  }
  return out;
}

bool res_compatible(const NNPartition& lambda, const NNPartition& nu) {
  if (lambda.reference() != nu.reference())
    throw MixedReferenceError("partitions over different posets");
  const Poset& r = lambda.reference();
  std::vector<Arc> lam_minus_nu;
  for (Arc a : lambda.arcs())
    if (!nu.contains(a)) lam_minus_nu.push_back(a);
  for (Arc a : nu.arcs()) {
    if (lambda.contains(a)) continue;
    bool covered = false;
    for (Arc l : lam_minus_nu)
      if (arc_leq(r, a, l)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

}  // namespace superpattern
