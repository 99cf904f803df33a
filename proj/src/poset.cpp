#include "superpattern/poset.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace superpattern {

namespace {
constexpr int kMaxAtoms = 30;
}

Poset::Poset() : d_(std::make_shared<Data>()) {}

Poset Poset::from_closed(std::vector<std::string> sorted_labels,
                         std::vector<std::uint32_t> less) {
  auto d = std::make_shared<Data>();
  d->labels = std::move(sorted_labels);
  d->less = std::move(less);
  return Poset(std::move(d));
}

Poset Poset::from_relations(
    std::vector<std::string> atoms,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::sort(atoms.begin(), atoms.end());
  if (std::adjacent_find(atoms.begin(), atoms.end()) != atoms.end())
    throw InputError("duplicate atom label");
  if (atoms.size() > kMaxAtoms)
    throw SizeCapError("poset larger than " + std::to_string(kMaxAtoms) + " atoms");
  const int n = static_cast<int>(atoms.size());
  auto index = [&](const std::string& s) {
    auto it = std::lower_bound(atoms.begin(), atoms.end(), s);
    if (it == atoms.end() || *it != s)
      throw UnknownAtomError("unknown atom '" + s + "'");
    return static_cast<int>(it - atoms.begin());
  };
  std::vector<std::uint32_t> less(static_cast<size_t>(n), 0u);
  for (const auto& [a, b] : pairs) {
    int i = index(a), j = index(b);
    if (i == j) throw CycleError("relation " + a + " < " + a);
    less[static_cast<size_t>(i)] |= 1u << j;
  }
  // Warshall closure on bit rows.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if ((less[static_cast<size_t>(i)] >> k) & 1u)
        less[static_cast<size_t>(i)] |= less[static_cast<size_t>(k)];
  for (int i = 0; i < n; ++i)
    if ((less[static_cast<size_t>(i)] >> i) & 1u)
      throw CycleError("relation closure forces " + atoms[static_cast<size_t>(i)] +
                       " < " + atoms[static_cast<size_t>(i)]);
  return from_closed(std::move(atoms), std::move(less));
}

Poset Poset::chain(int n) {
  if (n < 0 || n > 9) throw InputError("chain size out of range");
  std::vector<std::string> atoms;
  std::vector<std::pair<std::string, std::string>> rel;
  for (int i = 1; i <= n; ++i) atoms.push_back(std::to_string(i));
  for (int i = 1; i < n; ++i)
    rel.emplace_back(std::to_string(i), std::to_string(i + 1));
  return from_relations(std::move(atoms), rel);
}

Poset Poset::antichain(int n) {
  if (n < 0 || n > 9) throw InputError("antichain size out of range");
  std::vector<std::string> atoms;
  for (int i = 1; i <= n; ++i) atoms.push_back(std::to_string(i));
  return from_relations(std::move(atoms), {});
}

int Poset::index_of(const std::string& label) const {
  const auto& ls = d_->labels;
  auto it = std::lower_bound(ls.begin(), ls.end(), label);
  if (it == ls.end() || *it != label)
    throw UnknownAtomError("unknown atom '" + label + "'");
  return static_cast<int>(it - ls.begin());
}

bool Poset::has_atom(const std::string& label) const {
  const auto& ls = d_->labels;
  return std::binary_search(ls.begin(), ls.end(), label);
}

int Poset::relation_count() const {
  int c = 0;
  for (auto r : d_->less) c += std::popcount(r);
  return c;
}

Poset Poset::restrict_to(const std::vector<std::string>& atoms) const {
  std::vector<std::string> sub = atoms;
  std::sort(sub.begin(), sub.end());
  sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
  std::vector<int> old_idx;
  old_idx.reserve(sub.size());
  for (const auto& s : sub) old_idx.push_back(index_of(s));
  const int m = static_cast<int>(sub.size());
  std::vector<std::uint32_t> less(static_cast<size_t>(m), 0u);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (this->less(old_idx[static_cast<size_t>(i)], old_idx[static_cast<size_t>(j)]))
        less[static_cast<size_t>(i)] |= 1u << j;
  return from_closed(std::move(sub), std::move(less));
}

Poset Poset::concatenate(const Poset& other) const {
  std::vector<std::string> merged = labels();
  for (const auto& s : other.labels()) {
    if (has_atom(s)) throw OverlapError("atom '" + s + "' in both posets");
    merged.push_back(s);
  }
  std::sort(merged.begin(), merged.end());
  if (merged.size() > kMaxAtoms)
    throw SizeCapError("concatenation exceeds atom cap");
  const int n = static_cast<int>(merged.size());
  std::vector<std::uint32_t> less(static_cast<size_t>(n), 0u);
  auto pos = [&](const std::string& s) {
    return static_cast<int>(
        std::lower_bound(merged.begin(), merged.end(), s) - merged.begin());
  };
  std::vector<int> left, right;
  for (const auto& s : labels()) left.push_back(pos(s));
  for (const auto& s : other.labels()) right.push_back(pos(s));
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      if (this->less(i, j))
        less[static_cast<size_t>(left[static_cast<size_t>(i)])] |=
            1u << left[static_cast<size_t>(j)];
  for (int i = 0; i < other.size(); ++i)
    for (int j = 0; j < other.size(); ++j)
      if (other.less(i, j))
        less[static_cast<size_t>(right[static_cast<size_t>(i)])] |=
            1u << right[static_cast<size_t>(j)];
  for (int a : left)
    for (int b : right) less[static_cast<size_t>(a)] |= 1u << b;
  return from_closed(std::move(merged), std::move(less));
}

int Poset::width() const {
  const int n = size();
  if (n > 20) throw SizeCapError("width computation capped at 20 atoms");
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool anti = true;
    for (int i = 0; i < n && anti; ++i) {
      if (!((s >> i) & 1u)) continue;
      if (row(i) & s) anti = false;
    }
    if (anti) best = std::max(best, std::popcount(s));
  }
  return best;
}

bool Poset::convex(const std::vector<std::string>& atoms) const {
  std::uint32_t s = 0;
  for (const auto& a : atoms) s |= 1u << index_of(a);
  const int n = size();
  for (int x = 0; x < n; ++x) {
    if (!((s >> x) & 1u)) continue;
    for (int z = 0; z < n; ++z) {
      if (!((s >> z) & 1u) || !less(x, z)) continue;
      for (int y = 0; y < n; ++y)
        if (less(x, y) && less(y, z) && !((s >> y) & 1u)) return false;
    }
  }
  return true;
}

bool Poset::same_atoms(const Poset& other) const {
  return labels() == other.labels();
}

bool Poset::subposet_of(const Poset& other) const {
  for (const auto& l : labels())
    if (!other.has_atom(l)) return false;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      if (less(i, j) && !other.less(other.index_of(label(i)), other.index_of(label(j))))
        return false;
  return true;
}

bool Poset::operator<(const Poset& o) const {
  if (d_->labels != o.d_->labels) return d_->labels < o.d_->labels;
  return d_->less < o.d_->less;
}

std::string Poset::str() const {
  std::ostringstream out;
  out << "{";
  for (int i = 0; i < size(); ++i) {
    if (i) out << ",";
    out << label(i);
  }
  out << "|";
  bool first = true;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      if (less(i, j)) {
        if (!first) out << ",";
        out << label(i) << "<" << label(j);
        first = false;
      }
  out << "}";
  return out.str();
}

bool arc_in(const Poset& p, Arc a) {
  return a.lo >= 0 && a.hi >= 0 && a.lo < p.size() && a.hi < p.size() &&
         p.less(a.lo, a.hi);
}

bool arc_leq(const Poset& p, Arc a, Arc b) {
  return p.leq(b.lo, a.lo) && p.leq(a.hi, b.hi);
}

int interval_cardinality(const Poset& p, Arc a) {
  int c = 0;
  for (int z = 0; z < p.size(); ++z)
    if (p.leq(a.lo, z) && p.leq(z, a.hi)) ++c;
  return c;
}

bool arc_rank_less(const Poset& p, Arc a, Arc b) {
  int ca = interval_cardinality(p, a), cb = interval_cardinality(p, b);
  if (ca != cb) return ca < cb;
  return a < b;
}

std::vector<Arc> proper_intervals(const Poset& p) {
  std::vector<Arc> arcs;
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < p.size(); ++j)
      if (p.less(i, j)) arcs.push_back(Arc{i, j});
  sort_arcs(p, arcs);
  return arcs;
}

void sort_arcs(const Poset& p, std::vector<Arc>& arcs) {
  std::sort(arcs.begin(), arcs.end(),
            [&](Arc a, Arc b) { return arc_rank_less(p, a, b); });
}

Arc arc_of_labels(const Poset& p, const std::string& lo, const std::string& hi) {
  Arc a{p.index_of(lo), p.index_of(hi)};
  if (!arc_in(p, a))
    throw NotAnIntervalError("[" + lo + "," + hi + "] is not a proper interval");
  return a;
}

Arc translate_arc(const Poset& from, const Poset& to, Arc a) {
  return Arc{to.index_of(from.label(a.lo)), to.index_of(from.label(a.hi))};
}

bool interval_leq(const Interval& a, const Interval& b) {
  if (a.reference != b.reference)
    throw MixedReferenceError("intervals belong to different posets");
  return arc_leq(a.reference, a.arc, b.arc);
}

}  // namespace superpattern
