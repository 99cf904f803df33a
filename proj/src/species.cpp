#include "superpattern/species.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace superpattern {

namespace {

std::vector<std::string> sorted_union(const std::vector<std::string>& a,
                                      const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Arc> translate_arcs(const Poset& from, const Poset& to,
                                const std::vector<Arc>& arcs) {
  std::vector<Arc> out;
  out.reserve(arcs.size());
  for (Arc a : arcs) out.push_back(translate_arc(from, to, a));
  sort_arcs(to, out);
  return out;
}

// Subposet of r keeping only relations internal to one block.
Poset block_diagonal(const Poset& r,
                     const std::vector<std::vector<std::string>>& blocks) {
  std::vector<int> block_of(static_cast<size_t>(r.size()), -1);
  for (size_t b = 0; b < blocks.size(); ++b)
    for (const auto& s : blocks[b]) {
      int i = r.index_of(s);
      if (block_of[static_cast<size_t>(i)] != -1)
        throw AtomMismatchError("blocks overlap at '" + s + "'");
      block_of[static_cast<size_t>(i)] = static_cast<int>(b);
    }
  for (int i = 0; i < r.size(); ++i)
    if (block_of[static_cast<size_t>(i)] == -1)
      throw AtomMismatchError("blocks do not cover atom '" + r.label(i) + "'");
  std::vector<std::uint32_t> less(static_cast<size_t>(r.size()), 0u);
  for (int i = 0; i < r.size(); ++i)
    for (int j = 0; j < r.size(); ++j)
      if (r.less(i, j) &&
          block_of[static_cast<size_t>(i)] == block_of[static_cast<size_t>(j)])
        less[static_cast<size_t>(i)] |= 1u << j;
  return Poset::from_closed(r.labels(), std::move(less));
}

void check_same_basis(const SpeciesElement& x, const SpeciesElement& y) {
  if (x.basis() != y.basis())
    throw InputError("species elements in different bases");
}

}  // namespace

SpeciesElement::SpeciesElement(std::vector<std::string> ground, Basis basis)
    : ground_(std::move(ground)), basis_(basis) {
  std::sort(ground_.begin(), ground_.end());
}

SpeciesElement SpeciesElement::unit(Basis basis) {
  SpeciesElement e({}, basis);
  e.add(Poset(), {}, RationalFunction(1));
  return e;
}

SpeciesElement SpeciesElement::term(const Poset& ambient, Basis basis,
                                    const std::vector<Arc>& label,
                                    RationalFunction coeff) {
  SpeciesElement e(ambient.labels(), basis);
  e.add(ambient, label, coeff);
  return e;
}

void SpeciesElement::add(const Poset& ambient, const std::vector<Arc>& label,
                         const RationalFunction& c) {
  if (c.is_zero()) return;
  if (ambient.labels() != ground_)
    throw AtomMismatchError("term ambient does not match the ground set");
  std::vector<Arc> sorted = label;
  sort_arcs(ambient, sorted);
  TermKey key{ambient, std::move(sorted)};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void SpeciesElement::add_scaled(const SpeciesElement& other,
                                const RationalFunction& c) {
  if (other.ground_ != ground_ || other.basis_ != basis_)
    throw AtomMismatchError("species elements are not compatible");
  for (const auto& [key, v] : other.terms_) add(key.ambient, key.label, v * c);
}

RationalFunction SpeciesElement::coeff(const Poset& ambient,
                                       const std::vector<Arc>& label) const {
  std::vector<Arc> sorted = label;
  sort_arcs(ambient, sorted);
  auto it = terms_.find(TermKey{ambient, sorted});
  return it == terms_.end() ? RationalFunction() : it->second;
}

SpeciesElement SpeciesElement::operator+(const SpeciesElement& o) const {
  SpeciesElement r = *this;
  r.add_scaled(o, RationalFunction(1));
  return r;
}

SpeciesElement SpeciesElement::operator-(const SpeciesElement& o) const {
  SpeciesElement r = *this;
  r.add_scaled(o, RationalFunction(-1));
  return r;
}

SpeciesElement SpeciesElement::operator*(const RationalFunction& c) const {
  SpeciesElement r(ground_, basis_);
  for (const auto& [key, v] : terms_) r.add(key.ambient, key.label, v * c);
  return r;
}

std::string SpeciesElement::str() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, v] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << v.str() << ")*" << basis_name(basis_) << "[";
    for (size_t i = 0; i < key.label.size(); ++i) {
      if (i) out << ",";
      out << key.ambient.label(key.label[i].lo) << "<"
          << key.ambient.label(key.label[i].hi);
    }
    out << "]@" << key.ambient.str();
  }
  if (first) out << "0";
  return out.str();
}

void SpeciesTensor::add(std::vector<TermKey> key, const RationalFunction& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

namespace {

// Product of two single terms, accumulated into `out` with coefficient c.
void term_product(SpeciesElement& out, Basis basis, const TermKey& x,
                  const TermKey& y, const RationalFunction& c) {
  const Poset& r = x.ambient;
  const Poset& q = y.ambient;
  Poset cat = r.concatenate(q);
  switch (basis) {
    case Basis::Chi:
    case Basis::SubgroupChi: {
      std::vector<Arc> label = translate_arcs(r, cat, x.label);
      for (Arc a : translate_arcs(q, cat, y.label)) label.push_back(a);
      out.add(cat, label, c);
      break;
    }
    case Basis::SubgroupDelta: {
      Poset ox = subgroup_poset(ut_upper(NNPartition(r, x.label)));
      Poset oy = subgroup_poset(ut_upper(NNPartition(q, y.label)));
      Poset oc = ox.concatenate(oy);
      NNPartition label = lbl_cl(coideal_of_subposet(cat, oc));
      out.add(cat, label.arcs(), c);
      break;
    }
    case Basis::Delta: {
      std::vector<Arc> internal = translate_arcs(r, cat, x.label);
      for (Arc a : translate_arcs(q, cat, y.label)) internal.push_back(a);
      // Cross intervals that keep the union an antichain.
      std::vector<Arc> candidates;
      for (const auto& la : r.labels())
        for (const auto& lb : q.labels()) {
          Arc cross{cat.index_of(la), cat.index_of(lb)};
          bool swallows = false;
          for (Arc a : internal)
            if (arc_leq(cat, a, cross)) {
              swallows = true;
              break;
            }
          if (!swallows) candidates.push_back(cross);
        }
      sort_arcs(cat, candidates);
      for (const auto& extra : antichains_in(cat, candidates)) {
        std::vector<Arc> label = internal;
        label.insert(label.end(), extra.begin(), extra.end());
        out.add(cat, label, c);
      }
      break;
    }
  }
}

}  // namespace

SpeciesElement product(const SpeciesElement& x, const SpeciesElement& y) {
  check_same_basis(x, y);
  SpeciesElement out(sorted_union(x.ground(), y.ground()), x.basis());
  for (const auto& s : x.ground())
    for (const auto& t : y.ground())
      if (s == t) throw OverlapError("grounds share atom '" + s + "'");
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms())
      term_product(out, x.basis(), kx, ky, cx * cy);
  return out;
}

ClassFunction restriction_general(const Poset& r, const Poset& q,
                                  const NNPartition& lambda) {
  if (lambda.reference() != r)
    throw MixedReferenceError("label over a different poset");
  if (!q.same_atoms(r) || !q.subposet_of(r))
    throw NotSubposetError("q is not a subposet of r on the same atoms");
  NNPartition lam_q = restrict_nn(lambda, q);
  CoIdeal lower_r = ut_lower(lambda);
  int inter = 0;
  for (Arc b : proper_intervals(q))
    if (lower_r.contains(translate_arc(q, r, b))) ++inter;
  int lower_q = order_exponent(ut_lower(lam_q));
  RationalFunction c = RationalFunction::q_power(inter - lower_q) *
                       chi_degree(lambda) / chi_degree(lam_q);
  IntervalSubposet isub = int_lambda_mu(r, q, lambda, lam_q);
  ClassFunction out(q, Basis::Chi);
  for (const auto& extra : antichains_in(q, isub.members)) {
    std::vector<Arc> arcs = lam_q.arcs();
    arcs.insert(arcs.end(), extra.begin(), extra.end());
    out.add(NNPartition(q, arcs).arcs(), c);
  }
  return out;
}

namespace {

void check_blocks_partition(const std::vector<std::string>& ground,
                            const std::vector<std::vector<std::string>>& blocks) {
  std::vector<std::string> all;
  for (const auto& b : blocks) all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  if (all != ground)
    throw AtomMismatchError("blocks are not an ordered partition of the ground set");
}

// Coproduct of a single term along blocks, accumulated into `out`.
void term_coproduct(SpeciesTensor& out, Basis basis, const TermKey& term,
                    const RationalFunction& coeff,
                    const std::vector<std::vector<std::string>>& blocks) {
  const Poset& r = term.ambient;
  std::vector<Poset> parts;
  parts.reserve(blocks.size());
  for (const auto& b : blocks) parts.push_back(r.restrict_to(b));

  auto block_of_atom = [&](int i) {
    const std::string& s = r.label(i);
    for (size_t b = 0; b < blocks.size(); ++b)
      if (std::find(blocks[b].begin(), blocks[b].end(), s) != blocks[b].end())
        return static_cast<int>(b);
    return -1;
  };

  switch (basis) {
    case Basis::Delta: {
      std::vector<std::vector<Arc>> labels(blocks.size());
      for (Arc a : term.label) {
        int ba = block_of_atom(a.lo), bb = block_of_atom(a.hi);
        if (ba != bb) return;  // an arc crosses blocks: restriction is zero
        labels[static_cast<size_t>(ba)].push_back(
            translate_arc(r, parts[static_cast<size_t>(ba)], a));
      }
      std::vector<TermKey> key;
      for (size_t b = 0; b < blocks.size(); ++b) {
        sort_arcs(parts[b], labels[b]);
        key.push_back(TermKey{parts[b], labels[b]});
      }
      out.add(std::move(key), coeff);
      break;
    }
    case Basis::SubgroupDelta:
    case Basis::SubgroupChi: {
      bool chi = basis == Basis::SubgroupChi;
      CoIdeal n = chi ? ut_lower(NNPartition(r, term.label))
                      : ut_upper(NNPartition(r, term.label));
      Poset o = subgroup_poset(n);
      RationalFunction scale(1);
      if (chi)
        scale = RationalFunction::q_power(r.relation_count() -
                                          order_exponent(n));
      std::vector<TermKey> key;
      for (size_t b = 0; b < blocks.size(); ++b) {
        Poset ob = o.restrict_to(blocks[b]);
        CoIdeal nb = coideal_of_subposet(parts[b], ob);
        if (chi) {
          scale *= RationalFunction::q_power(order_exponent(nb) -
                                             parts[b].relation_count());
          key.push_back(TermKey{parts[b], lower_label(nb).arcs()});
        } else {
          key.push_back(TermKey{parts[b], lbl_cl(nb).arcs()});
        }
      }
      out.add(std::move(key), coeff * scale);
      break;
    }
    case Basis::Chi: {
      Poset q = block_diagonal(r, blocks);
      ClassFunction res = restriction_general(r, q, NNPartition(r, term.label));
      for (const auto& [arcs, c] : res.terms()) {
        std::vector<std::vector<Arc>> labels(blocks.size());
        for (Arc a : arcs) {
          int b = block_of_atom(q.index_of(q.label(a.lo)));
          labels[static_cast<size_t>(b)].push_back(
              translate_arc(q, parts[static_cast<size_t>(b)], a));
        }
        std::vector<TermKey> key;
        for (size_t b = 0; b < blocks.size(); ++b) {
          sort_arcs(parts[b], labels[b]);
          key.push_back(TermKey{parts[b], labels[b]});
        }
        out.add(std::move(key), coeff * c);
      }
      break;
    }
  }
}

}  // namespace

SpeciesTensor coproduct_multi(const SpeciesElement& x,
                              const std::vector<std::vector<std::string>>& blocks) {
  check_blocks_partition(x.ground(), blocks);
  SpeciesTensor out(blocks, x.basis());
  for (const auto& [key, c] : x.terms()) term_coproduct(out, x.basis(), key, c, blocks);
  return out;
}

SpeciesTensor coproduct(const SpeciesElement& x, const std::vector<std::string>& a,
                        const std::vector<std::string>& b) {
  return coproduct_multi(x, {a, b});
}

SpeciesElement product_all(const SpeciesTensor& t) {
  std::vector<std::string> ground;
  for (const auto& b : t.blocks()) ground.insert(ground.end(), b.begin(), b.end());
  std::sort(ground.begin(), ground.end());
  SpeciesElement out(ground, t.basis());
  for (const auto& [key, c] : t.terms()) {
    SpeciesElement acc = SpeciesElement::unit(t.basis());
    for (const auto& part : key)
      acc = product(acc, SpeciesElement::term(part.ambient, t.basis(), part.label));
    out.add_scaled(acc, c);
  }
  return out;
}

std::vector<SetComposition> fac(const Poset& q, const Poset& p) {
  if (!q.same_atoms(p))
    throw AtomMismatchError("q-factorization requires a common atom set");
  std::vector<SetComposition> out;
  std::vector<std::string> rest = p.labels();
  SetComposition current;
  std::function<void(const std::vector<std::string>&)> rec =
      [&](const std::vector<std::string>& remaining) {
        if (remaining.empty()) {
          out.push_back(current);
          return;
        }
        const int m = static_cast<int>(remaining.size());
        for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
          std::vector<std::string> first, others;
          for (int i = 0; i < m; ++i)
            ((mask >> i) & 1u ? first : others)
                .push_back(remaining[static_cast<size_t>(i)]);
          if (p.restrict_to(first) != q.restrict_to(first)) continue;
          bool below = true;
          for (const auto& s : first)
            for (const auto& t : others)
              if (!p.less(p.index_of(s), p.index_of(t))) {
                below = false;
                break;
              }
          if (!below) continue;
          current.blocks.push_back(first);
          rec(others);
          current.blocks.pop_back();
        }
      };
  rec(rest);
  return out;
}

SpeciesElement antipode_takeuchi(const SpeciesElement& x, int max_atoms) {
  const int n = static_cast<int>(x.ground().size());
  if (n == 0) return SpeciesElement::unit(x.basis()) * RationalFunction(-1);
  if (n > max_atoms)
    throw SizeCapError("antipode ground set larger than the configured cap");
  SpeciesElement out(x.ground(), x.basis());
  // Unordered partitions first; the per-block coproduct data does not
  // depend on the block order, only the product does.
  std::vector<int> assignment(static_cast<size_t>(n), -1);
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (i == n) {
      std::vector<std::vector<std::string>> blocks(static_cast<size_t>(used));
      for (int k = 0; k < n; ++k)
        blocks[static_cast<size_t>(assignment[static_cast<size_t>(k)])].push_back(
            x.ground()[static_cast<size_t>(k)]);
      SpeciesTensor t = coproduct_multi(x, blocks);
      std::vector<int> order(static_cast<size_t>(used));
      for (int k = 0; k < used; ++k) order[static_cast<size_t>(k)] = k;
      RationalFunction sign((used - 1) % 2 == 0 ? 1 : -1);
      do {
        SpeciesTensor perm(
            [&] {
              std::vector<std::vector<std::string>> bs;
              for (int k : order) bs.push_back(blocks[static_cast<size_t>(k)]);
              return bs;
            }(),
            x.basis());
        for (const auto& [key, c] : t.terms()) {
          std::vector<TermKey> pkey;
          for (int k : order) pkey.push_back(key[static_cast<size_t>(k)]);
          perm.add(std::move(pkey), c);
        }
        out.add_scaled(product_all(perm), sign);
      } while (std::next_permutation(order.begin(), order.end()));
      return;
    }
    for (int b = 0; b < used; ++b) {
      assignment[static_cast<size_t>(i)] = b;
      rec(i + 1, used);
    }
    assignment[static_cast<size_t>(i)] = used;
    rec(i + 1, used + 1);
    assignment[static_cast<size_t>(i)] = -1;
  };
  rec(0, 0);
  return out;
}

namespace {

void for_each_composition(const std::vector<std::string>& atoms,
                          const std::function<void(
                              const std::vector<std::vector<std::string>>&)>& fn) {
  std::vector<std::vector<std::string>> current;
  std::function<void(const std::vector<std::string>&)> rec =
      [&](const std::vector<std::string>& remaining) {
        if (remaining.empty()) {
          fn(current);
          return;
        }
        const int m = static_cast<int>(remaining.size());
        for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
          std::vector<std::string> first, others;
          for (int i = 0; i < m; ++i)
            ((mask >> i) & 1u ? first : others)
                .push_back(remaining[static_cast<size_t>(i)]);
          current.push_back(first);
          rec(others);
          current.pop_back();
        }
      };
  rec(atoms);
}

Poset concat_blocks(const Poset& base,
                    const std::vector<std::vector<std::string>>& blocks) {
  Poset acc;
  for (const auto& b : blocks) acc = acc.concatenate(base.restrict_to(b));
  return acc;
}

std::vector<Arc> full_group_label(const Poset& p) {
  return lbl_cl(CoIdeal(p, proper_intervals(p))).arcs();
}

}  // namespace

SpeciesElement antipode_delta_subgroup(const Poset& q, int max_atoms) {
  if (q.size() == 0)
    return SpeciesElement::unit(Basis::SubgroupDelta) * RationalFunction(-1);
  if (q.size() > max_atoms)
    throw SizeCapError("antipode ground set larger than the configured cap");
  std::map<Poset, std::pair<int, int>> seen;  // poset -> (count, length)
  for_each_composition(q.labels(), [&](const auto& blocks) {
    Poset p = concat_blocks(q, blocks);
    auto [it, fresh] = seen.emplace(p, std::make_pair(0, 0));
    it->second.first += 1;
    it->second.second = static_cast<int>(blocks.size());
  });
  SpeciesElement out(q.labels(), Basis::SubgroupDelta);
  for (const auto& [p, info] : seen) {
    if (info.first != 1) continue;
    RationalFunction sign((info.second - 1) % 2 == 0 ? 1 : -1);
    out.add(p, full_group_label(p), sign);
  }
  return out;
}

namespace {

// Longest factorization in a nonempty fac set; unique by the refinement
// structure of factorizations.
const SetComposition& longest_factorization(const std::vector<SetComposition>& fs) {
  const SetComposition* best = &fs.front();
  int ties = 0;
  for (const auto& f : fs) {
    if (f.length() > best->length()) {
      best = &f;
      ties = 0;
    } else if (&f != best && f.length() == best->length()) {
      ++ties;
    }
  }
  if (best->length() > 1 && ties > 0)
    throw Error("factorization set has no unique longest element");
  return *best;
}

}  // namespace

bool is_lambda_atomic(const Poset& r, const Poset& p, const NNPartition& lambda) {
  if (lambda.reference() != r)
    throw MixedReferenceError("label over a different poset");
  auto fs = fac(r, p);
  if (fs.empty()) return false;
  const SetComposition& longest = longest_factorization(fs);
  CoIdeal lower = ut_lower(lambda);
  for (size_t j = 0; j + 1 < longest.length(); ++j) {
    Poset left = p.restrict_to(longest.blocks[j]);
    Poset right = p.restrict_to(longest.blocks[j + 1]);
    bool neutral = true;
    for (int a = 0; a < left.size() && neutral; ++a) {
      bool maximal = true;
      for (int z = 0; z < left.size(); ++z)
        if (left.less(a, z)) maximal = false;
      if (!maximal) continue;
      for (int b = 0; b < right.size() && neutral; ++b) {
        bool minimal = true;
        for (int z = 0; z < right.size(); ++z)
          if (right.less(z, b)) minimal = false;
        if (!minimal) continue;
        int ra = r.index_of(left.label(a));
        int rb = r.index_of(right.label(b));
        if (!r.less(ra, rb) || !lower.contains(Arc{ra, rb})) neutral = false;
      }
    }
    if (neutral) return false;
  }
  return true;
}

SpeciesElement antipode_chi(const Poset& r, const NNPartition& lambda,
                            int max_atoms, std::uint64_t cap) {
  if (lambda.reference() != r)
    throw MixedReferenceError("label over a different poset");
  if (r.size() == 0)
    return SpeciesElement::unit(Basis::Chi) * RationalFunction(-1);
  if (r.size() > max_atoms)
    throw SizeCapError("antipode ground set larger than the configured cap");

  std::map<Poset, std::vector<std::vector<std::vector<std::string>>>> by_poset;
  for_each_composition(r.labels(), [&](const auto& blocks) {
    by_poset[concat_blocks(r, blocks)].push_back(blocks);
  });

  RationalFunction deg = chi_degree(lambda);
  Polynomial qm1 = Polynomial::from_coeffs({BigInt(-1), BigInt(1)});
  SpeciesElement out(r.labels(), Basis::Chi);

  for (const auto& [p, comps] : by_poset) {
    if (!is_lambda_atomic(r, p, lambda)) continue;
    std::map<std::vector<Arc>, RationalFunction> inner;  // nu over p -> sum
    for (const auto& blocks : comps) {
      Poset q = block_diagonal(r, blocks);
      NNPartition lam_q = restrict_nn(lambda, q);
      CoIdeal lower_r = ut_lower(lambda);
      int inter = 0;
      for (Arc b : proper_intervals(q))
        if (lower_r.contains(translate_arc(q, r, b))) ++inter;
      RationalFunction weight =
          RationalFunction::q_power(inter - q.relation_count());
      if ((blocks.size() - 1) % 2 != 0) weight = -weight;
      IntervalSubposet isub = int_lambda_mu(r, q, lambda, lam_q);
      for (const auto& extra : antichains_in(q, isub.members, cap)) {
        std::vector<Arc> arcs = lam_q.arcs();
        arcs.insert(arcs.end(), extra.begin(), extra.end());
        NNPartition nu_q(q, arcs);
        std::vector<Arc> nu_p = translate_arcs(q, p, nu_q.arcs());
        auto [it, fresh] = inner.emplace(nu_p, RationalFunction());
        it->second += weight;
      }
    }
    for (const auto& [nu_arcs, s] : inner) {
      if (s.is_zero()) continue;
      size_t common = 0;
      for (Arc a : nu_arcs) {
        const std::string& lo = p.label(a.lo);
        const std::string& hi = p.label(a.hi);
        for (Arc l : lambda.arcs())
          if (r.label(l.lo) == lo && r.label(l.hi) == hi) ++common;
      }
      RationalFunction pref = deg * RationalFunction::q_power(static_cast<int>(common)) /
                              RationalFunction(qm1).pow(static_cast<int>(common));
      out.add(p, nu_arcs, pref * s);
    }
  }
  return out;
}

bool is_atomic_pair(const Poset& p, const Poset& q) {
  if (!q.same_atoms(p) || !q.subposet_of(p))
    throw NotSubposetError("q is not a subposet of p on the same atoms");
  const int n = p.size();
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    bool split = true;
    for (int i = 0; i < n && split; ++i) {
      if (!((mask >> i) & 1u)) continue;
      for (int j = 0; j < n; ++j) {
        if ((mask >> j) & 1u) continue;
        if (!p.less(i, j) || !q.less(i, j)) {
          split = false;
          break;
        }
      }
    }
    if (split) return false;
  }
  return n > 0;
}

SetComposition decompose_atomic(const Poset& p, const Poset& q) {
  if (!q.same_atoms(p) || !q.subposet_of(p))
    throw NotSubposetError("q is not a subposet of p on the same atoms");
  const int n = p.size();
  std::vector<std::uint32_t> cuts;  // proper down-splits, nested by size
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    bool split = true;
    for (int i = 0; i < n && split; ++i) {
      if (!((mask >> i) & 1u)) continue;
      for (int j = 0; j < n; ++j) {
        if ((mask >> j) & 1u) continue;
        if (!p.less(i, j) || !q.less(i, j)) {
          split = false;
          break;
        }
      }
    }
    if (split) cuts.push_back(mask);
  }
  std::sort(cuts.begin(), cuts.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) < std::popcount(b);
  });
  cuts.push_back((1u << n) - 1u);
  SetComposition out;
  std::uint32_t prev = 0;
  for (std::uint32_t c : cuts) {
    if ((c & prev) != prev) throw Error("concatenation splits fail to nest");
    std::vector<std::string> block;
    for (int i = 0; i < n; ++i)
      if (((c >> i) & 1u) && !((prev >> i) & 1u)) block.push_back(p.label(i));
    out.blocks.push_back(std::move(block));
    prev = c;
  }
  return out;
}

SpeciesElement primitive_generator(const std::string& atom, const Poset& p,
                                   const Poset& q) {
  if (!is_normal(p, q)) throw NotNormalError("the pair is not a normal pattern pair");
  if (!is_atomic_pair(p, q)) throw NotAtomicError("the pair factors");
  p.index_of(atom);  // UnknownAtomError when absent
  SpeciesElement out(p.labels(), Basis::SubgroupDelta);
  for_each_composition(p.labels(), [&](const auto& blocks) {
    const auto& first = blocks.front();
    if (std::find(first.begin(), first.end(), atom) == first.end()) return;
    Poset amb = concat_blocks(p, blocks);
    Poset sub = concat_blocks(q, blocks);
    NNPartition label = lbl_cl(coideal_of_subposet(amb, sub));
    RationalFunction sign((blocks.size() - 1) % 2 == 0 ? 1 : -1);
    out.add(amb, label.arcs(), sign);
  });
  return out;
}

bool is_primitive(const SpeciesElement& x) {
  const auto& g = x.ground();
  const int n = static_cast<int>(g.size());
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    std::vector<std::string> a, b;
    for (int i = 0; i < n; ++i)
      ((mask >> i) & 1u ? a : b).push_back(g[static_cast<size_t>(i)]);
    if (!coproduct(x, a, b).is_zero()) return false;
  }
  return true;
}

SpeciesElement antipode_convolution(const SpeciesElement& x) {
  const auto& g = x.ground();
  const int n = static_cast<int>(g.size());
  SpeciesElement sum(g, x.basis());
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::string> a, b;
    for (int i = 0; i < n; ++i)
      ((mask >> i) & 1u ? a : b).push_back(g[static_cast<size_t>(i)]);
    SpeciesTensor t = coproduct(x, a, b);
    for (const auto& [key, c] : t.terms()) {
      SpeciesElement left = SpeciesElement::term(key[0].ambient, x.basis(), key[0].label);
      SpeciesElement s_left = antipode_takeuchi(left);
      SpeciesElement right = SpeciesElement::term(key[1].ambient, x.basis(), key[1].label);
      for (const auto& [lk, lc] : s_left.terms()) {
        SpeciesElement piece =
            product(SpeciesElement::term(lk.ambient, x.basis(), lk.label), right);
        sum.add_scaled(piece, c * lc);
      }
    }
  }
  return sum;
}

SpeciesElement convert_species(const SpeciesElement& x, Basis target,
                               std::uint64_t cap) {
  if (x.basis() == target) return x;
  SpeciesElement out(x.ground(), target);
  std::map<Poset, ClassFunction> grouped;
  for (const auto& [key, c] : x.terms()) {
    auto [it, fresh] = grouped.emplace(key.ambient,
                                       ClassFunction(key.ambient, x.basis()));
    it->second.add(key.label, c);
  }
  for (auto& [ambient, f] : grouped) {
    ClassFunction conv = convert(f, target, cap);
    for (const auto& [arcs, c] : conv.terms()) out.add(ambient, arcs, c);
  }
  return out;
}

}  // namespace superpattern
