#include "superpattern/group.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace superpattern {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

IntervalTable IntervalTable::of(const Poset& p) {
  IntervalTable t;
  t.ref = p;
  t.n = p.size();
  t.intervals = proper_intervals(p);
  t.index.assign(static_cast<size_t>(t.n) * t.n, -1);
  for (size_t k = 0; k < t.intervals.size(); ++k)
    t.index[static_cast<size_t>(t.intervals[k].lo) * t.n + t.intervals[k].hi] =
        static_cast<int>(k);
  return t;
}

GroupElement::GroupElement(Poset reference, int p)
    : ref_(std::move(reference)), p_(p) {
  if (!is_prime(p)) throw InputError("modulus must be prime");
  e_.assign(static_cast<size_t>(ref_.relation_count()), 0);
}

void GroupElement::set_entry(size_t interval_idx, int value) {
  int v = value % p_;
  if (v < 0) v += p_;
  e_[interval_idx] = v;
}

bool GroupElement::is_identity() const {
  return std::all_of(e_.begin(), e_.end(), [](int v) { return v == 0; });
}

std::string GroupElement::str() const {
  IntervalTable t = IntervalTable::of(ref_);
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (size_t k = 0; k < e_.size(); ++k) {
    if (e_[k] == 0) continue;
    if (!first) out << ",";
    out << "[" << ref_.label(t.intervals[k].lo) << ","
        << ref_.label(t.intervals[k].hi) << "]:" << e_[k];
    first = false;
  }
  out << "}";
  return out.str();
}

GroupElement generator(const Poset& r, const std::string& a,
                       const std::string& b, int t, int p) {
  int i = r.index_of(a), j = r.index_of(b);
  if (!r.less(i, j))
    throw NotComparableError(a + " is not below " + b + " in the poset");
  GroupElement g(r, p);
  IntervalTable tab = IntervalTable::of(r);
  g.set_entry(static_cast<size_t>(tab.at(i, j)), t);
  return g;
}

GroupElement multiply(const GroupElement& u, const GroupElement& v) {
  if (u.reference() != v.reference() || u.modulus() != v.modulus())
    throw MixedReferenceError("elements of different pattern groups");
  const Poset& r = u.reference();
  IntervalTable t = IntervalTable::of(r);
  GroupElement w(r, u.modulus());
  const int p = u.modulus();
  for (size_t k = 0; k < t.count(); ++k) {
    Arc ik = t.intervals[k];
    long long s = u.entry(k) + v.entry(k);
    for (int j = 0; j < r.size(); ++j) {
      if (!(r.less(ik.lo, j) && r.less(j, ik.hi))) continue;
      int a = t.at(ik.lo, j), b = t.at(j, ik.hi);
      s += static_cast<long long>(u.entry(static_cast<size_t>(a))) *
           v.entry(static_cast<size_t>(b));
    }
    w.set_entry(k, static_cast<int>(s % p));
  }
  return w;
}

GroupElement inverse(const GroupElement& u) {
  const Poset& r = u.reference();
  IntervalTable t = IntervalTable::of(r);
  const int p = u.modulus();
  GroupElement v(r, p);
  // Intervals in canonical order are sorted by cardinality, so entries of
  // shorter intervals are already known when a longer one is solved.
  for (size_t k = 0; k < t.count(); ++k) {
    Arc ik = t.intervals[k];
    long long s = u.entry(k);
    for (int j = 0; j < r.size(); ++j) {
      if (!(r.less(ik.lo, j) && r.less(j, ik.hi))) continue;
      int a = t.at(ik.lo, j), b = t.at(j, ik.hi);
      s += static_cast<long long>(u.entry(static_cast<size_t>(a))) *
           v.entry(static_cast<size_t>(b));
    }
    v.set_entry(k, static_cast<int>((-s % p + p) % p));
  }
  return v;
}

std::uint64_t group_order(const Poset& r, int p) {
  int m = r.relation_count();
  std::uint64_t order = 1;
  for (int i = 0; i < m; ++i) {
    if (order > (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(p))
      throw SizeCapError("group order overflows");
    order *= static_cast<std::uint64_t>(p);
  }
  return order;
}

void for_each_element(const Poset& r, int p,
                      const std::function<void(const GroupElement&)>& fn,
                      std::uint64_t cap) {
  if (!is_prime(p)) throw InputError("modulus must be prime");
  std::uint64_t order = group_order(r, p);
  if (order > cap) throw SizeCapError("group order exceeds cap");
  GroupElement g(r, p);
  const size_t m = static_cast<size_t>(r.relation_count());
  std::vector<int> odo(m, 0);
  while (true) {
    fn(g);
    size_t k = 0;
    while (k < m) {
      if (odo[k] + 1 < p) {
        ++odo[k];
        g.set_entry(k, odo[k]);
        break;
      }
      odo[k] = 0;
      g.set_entry(k, 0);
      ++k;
    }
    if (k == m) break;
  }
}

std::vector<GroupElement> all_elements(const Poset& r, int p, std::uint64_t cap) {
  std::vector<GroupElement> out;
  for_each_element(r, p, [&](const GroupElement& g) { out.push_back(g); }, cap);
  return out;
}

NNPartition superclass_of(const GroupElement& g) {
  const Poset& r = g.reference();
  IntervalTable t = IntervalTable::of(r);
  std::vector<Arc> support;
  for (size_t k = 0; k < t.count(); ++k)
    if (g.entry(k) != 0) support.push_back(t.intervals[k]);
  std::vector<Arc> minimal;
  for (Arc a : support) {
    bool is_min = true;
    for (Arc b : support)
      if (b != a && arc_leq(r, b, a)) {
        is_min = false;
        break;
      }
    if (is_min) minimal.push_back(a);
  }
  return NNPartition(r, std::move(minimal));
}

bool in_cover_closure(const GroupElement& g, const NNPartition& lambda) {
  if (g.reference() != lambda.reference())
    throw MixedReferenceError("element and partition over different posets");
  const Poset& r = g.reference();
  NNPartition mu = superclass_of(g);
  for (Arc m : mu.arcs())
    for (Arc l : lambda.arcs())
      if (m != l && arc_leq(r, m, l)) return false;
  return true;
}

bool in_cover_closure_direct(const GroupElement& g, const NNPartition& lambda,
                             std::uint64_t cap) {
  if (g.reference() != lambda.reference())
    throw MixedReferenceError("element and partition over different posets");
  const Poset& r = g.reference();
  const int p = g.modulus();
  IntervalTable t = IntervalTable::of(r);
  CoIdeal lower = ut_lower(lambda);
  std::vector<size_t> sub_idx;
  for (Arc a : lower.members())
    sub_idx.push_back(static_cast<size_t>(t.at(a.lo, a.hi)));
  std::vector<size_t> arc_idx;
  for (Arc a : lambda.arcs())
    arc_idx.push_back(static_cast<size_t>(t.at(a.lo, a.hi)));

  std::uint64_t total = 1;
  for (size_t i = 0; i < sub_idx.size() + arc_idx.size(); ++i) {
    total *= static_cast<std::uint64_t>(p);
    if (total > cap) throw SizeCapError("cover closure enumeration exceeds cap");
  }

  std::set<std::vector<int>> closure;
  std::vector<int> odo(sub_idx.size() + arc_idx.size(), 0);
  while (true) {
    GroupElement u(r, p);
    for (size_t i = 0; i < sub_idx.size(); ++i) u.set_entry(sub_idx[i], odo[i]);
    GroupElement prod = u;
    for (size_t i = 0; i < arc_idx.size(); ++i) {
      GroupElement e(r, p);
      e.set_entry(arc_idx[i], odo[sub_idx.size() + i]);
      prod = multiply(prod, e);
    }
    closure.insert(prod.entries());
    size_t k = 0;
    while (k < odo.size()) {
      if (odo[k] + 1 < p) {
        ++odo[k];
        break;
      }
      odo[k] = 0;
      ++k;
    }
    if (k == odo.size()) break;
  }
  return closure.count(g.entries()) > 0;
}

bool group_normality_check(const Poset& r, const Poset& q, int p,
                           std::uint64_t cap) {
  if (!q.same_atoms(r) || !q.subposet_of(r))
    throw NotSubposetError("q is not a subposet of r on the same atoms");
  IntervalTable t = IntervalTable::of(r);
  // Conjugation by every generator of UT_r suffices: conjugation by a
  // product is the composite of conjugations.
  std::vector<GroupElement> gens;
  for (size_t k = 0; k < t.count(); ++k)
    for (int v = 1; v < p; ++v) {
      GroupElement e(r, p);
      e.set_entry(k, v);
      gens.push_back(e);
    }
  std::vector<size_t> q_idx;
  for (size_t k = 0; k < t.count(); ++k) {
    Arc a = t.intervals[k];
    if (q.less(a.lo, a.hi)) q_idx.push_back(k);
  }
  std::uint64_t order = 1;
  for (size_t i = 0; i < q_idx.size(); ++i) {
    order *= static_cast<std::uint64_t>(p);
    if (order > cap) throw SizeCapError("subgroup order exceeds cap");
  }
  bool normal = true;
  std::vector<int> odo(q_idx.size(), 0);
  while (normal) {
    GroupElement x(r, p);
    for (size_t i = 0; i < q_idx.size(); ++i) x.set_entry(q_idx[i], odo[i]);
    for (const auto& g : gens) {
      GroupElement conj = multiply(multiply(g, x), inverse(g));
      for (size_t k = 0; k < t.count() && normal; ++k) {
        Arc a = t.intervals[k];
        if (conj.entry(k) != 0 && !q.less(a.lo, a.hi)) normal = false;
      }
      if (!normal) break;
    }
    size_t k = 0;
    while (k < odo.size()) {
      if (odo[k] + 1 < p) {
        ++odo[k];
        break;
      }
      odo[k] = 0;
      ++k;
    }
    if (k == odo.size()) break;
  }
  return normal;
}

}  // namespace superpattern
