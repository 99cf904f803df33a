#include "superpattern/enumerate.hpp"

#include <algorithm>

namespace superpattern {

std::vector<std::string> numbered_atoms(int n) {
  std::vector<std::string> atoms;
  for (int i = 1; i <= n; ++i) atoms.push_back(std::to_string(i));
  return atoms;
}

std::vector<Poset> all_posets(const std::vector<std::string>& atoms) {
  std::vector<std::string> sorted = atoms;
  std::sort(sorted.begin(), sorted.end());
  const int n = static_cast<int>(sorted.size());
  if (n > 5) throw SizeCapError("poset enumeration capped at 5 atoms");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<Poset> out;
  // Each unordered pair is unrelated, up, or down.
  std::vector<int> choice(pairs.size(), 0);
  while (true) {
    std::vector<std::uint32_t> less(static_cast<size_t>(n), 0u);
    for (size_t k = 0; k < pairs.size(); ++k) {
      if (choice[k] == 1)
        less[static_cast<size_t>(pairs[k].first)] |= 1u << pairs[k].second;
      else if (choice[k] == 2)
        less[static_cast<size_t>(pairs[k].second)] |= 1u << pairs[k].first;
    }
    bool transitive = true;
    for (int i = 0; i < n && transitive; ++i)
      for (int j = 0; j < n && transitive; ++j) {
        if (!((less[static_cast<size_t>(i)] >> j) & 1u)) continue;
        for (int k = 0; k < n; ++k)
          if (((less[static_cast<size_t>(j)] >> k) & 1u) &&
              !((less[static_cast<size_t>(i)] >> k) & 1u)) {
            transitive = false;
            break;
          }
      }
    if (transitive) out.push_back(Poset::from_closed(sorted, less));
    size_t k = 0;
    while (k < choice.size() && choice[k] == 2) choice[k++] = 0;
    if (k == choice.size()) break;
    ++choice[k];
  }
  return out;
}

std::vector<Poset> all_subposets(const Poset& r) {
  std::vector<Arc> rel;
  for (int i = 0; i < r.size(); ++i)
    for (int j = 0; j < r.size(); ++j)
      if (r.less(i, j)) rel.push_back(Arc{i, j});
  if (rel.size() > 20) throw SizeCapError("subposet enumeration capped at 20 relations");
  std::vector<Poset> out;
  for (std::uint32_t mask = 0; mask < (1u << rel.size()); ++mask) {
    std::vector<std::uint32_t> less(static_cast<size_t>(r.size()), 0u);
    for (size_t k = 0; k < rel.size(); ++k)
      if ((mask >> k) & 1u)
        less[static_cast<size_t>(rel[k].lo)] |= 1u << rel[k].hi;
    bool transitive = true;
    for (int i = 0; i < r.size() && transitive; ++i)
      for (int j = 0; j < r.size() && transitive; ++j) {
        if (!((less[static_cast<size_t>(i)] >> j) & 1u)) continue;
        for (int k = 0; k < r.size(); ++k)
          if (((less[static_cast<size_t>(j)] >> k) & 1u) &&
              !((less[static_cast<size_t>(i)] >> k) & 1u)) {
            transitive = false;
            break;
          }
      }
    if (transitive) out.push_back(Poset::from_closed(r.labels(), less));
  }
  return out;
}

void for_each_ordered_split(
    const std::vector<std::string>& ground,
    const std::function<void(const std::vector<std::string>&,
                             const std::vector<std::string>&)>& fn,
    bool nonempty_only) {
  const int n = static_cast<int>(ground.size());
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::string> a, b;
    for (int i = 0; i < n; ++i)
      ((mask >> i) & 1u ? a : b).push_back(ground[static_cast<size_t>(i)]);
    if (nonempty_only && (a.empty() || b.empty())) continue;
    fn(a, b);
  }
}

}  // namespace superpattern
