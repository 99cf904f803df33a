#pragma once

// Exhaustive enumeration helpers for the verify harness: all labeled posets
// on a small atom set, all subposets of a poset, set compositions.

#include <functional>
#include <vector>

#include "superpattern/poset.hpp"

namespace superpattern {

// Every partial order on the given atoms (labeled; not up to isomorphism).
std::vector<Poset> all_posets(const std::vector<std::string>& atoms);

// Every subposet on the same atoms: transitive subsets of the relation set.
std::vector<Poset> all_subposets(const Poset& r);

// Atom labels "1".."n".
std::vector<std::string> numbered_atoms(int n);

void for_each_ordered_split(
    const std::vector<std::string>& ground,
    const std::function<void(const std::vector<std::string>&,
                             const std::vector<std::string>&)>& fn,
    bool nonempty_only);

}  // namespace superpattern
