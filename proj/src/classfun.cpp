#include "superpattern/classfun.hpp"

#include <algorithm>

namespace superpattern {

const char* basis_name(Basis b) {
  switch (b) {
    case Basis::Delta: return "delta";
    case Basis::Chi: return "chi";
    case Basis::SubgroupChi: return "subgroup-chi";
    case Basis::SubgroupDelta: return "subgroup-delta";
  }
  return "?";
}

Basis basis_from_name(const std::string& name) {
  if (name == "delta") return Basis::Delta;
  if (name == "chi") return Basis::Chi;
  if (name == "subgroup-chi") return Basis::SubgroupChi;
  if (name == "subgroup-delta") return Basis::SubgroupDelta;
  throw InputError("unknown basis '" + name + "'");
}

void ClassFunction::add(const std::vector<Arc>& label,
                        const RationalFunction& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(label);
  if (it == terms_.end()) {
    terms_.emplace(label, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

RationalFunction ClassFunction::coeff(const std::vector<Arc>& label) const {
  auto it = terms_.find(label);
  return it == terms_.end() ? RationalFunction() : it->second;
}

ClassFunction basis_vector(const Poset& r, Basis basis,
                           const NNPartition& label) {
  if (label.reference() != r)
    throw MixedReferenceError("label over a different poset");
  ClassFunction f(r, basis);
  f.add(label.arcs(), RationalFunction(1));
  return f;
}

namespace {

size_t intersection_size(const NNPartition& a, const NNPartition& b) {
  size_t c = 0;
  for (Arc x : a.arcs())
    if (b.contains(x)) ++c;
  return c;
}

bool some_arc_strictly_inside(const NNPartition& mu, const NNPartition& lambda) {
  const Poset& r = mu.reference();
  for (Arc m : mu.arcs())
    for (Arc l : lambda.arcs())
      if (m != l && arc_leq(r, m, l)) return true;
  return false;
}

}  // namespace

RationalFunction chi_value(const NNPartition& lambda, const NNPartition& mu) {
  if (lambda.reference() != mu.reference())
    throw MixedReferenceError("partitions over different posets");
  if (some_arc_strictly_inside(mu, lambda)) return RationalFunction();
  const Poset& r = lambda.reference();
  int big = r.relation_count();
  int small = order_exponent(ut_lower(lambda));
  RationalFunction v = RationalFunction::q_power(big - small);
  v *= RationalFunction::one_minus_inv_q().pow(static_cast<int>(lambda.size()));
  v *= RationalFunction::inv_one_minus_q().pow(
      static_cast<int>(intersection_size(lambda, mu)));
  return v;
}

RationalFunction chi_degree(const NNPartition& lambda) {
  const Poset& r = lambda.reference();
  int big = r.relation_count();
  int small = order_exponent(ut_lower(lambda));
  RationalFunction v = RationalFunction::q_power(big - small);
  v *= RationalFunction::one_minus_inv_q().pow(static_cast<int>(lambda.size()));
  return v;
}

RationalFunction superclass_size(const NNPartition& mu) {
  int up = order_exponent(ut_upper(mu));
  int k = static_cast<int>(mu.size());
  RationalFunction v = RationalFunction::q_power(up - k);
  Polynomial qm1 = Polynomial::from_coeffs({BigInt(-1), BigInt(1)});
  v *= RationalFunction(qm1).pow(k);
  return v;
}

Table supercharacter_table(const Poset& r, std::uint64_t cap) {
  Table t;
  t.ref = r;
  t.labels = enumerate_nn(r, cap);
  t.entries.resize(t.labels.size());
  for (size_t i = 0; i < t.labels.size(); ++i) {
    t.entries[i].reserve(t.labels.size());
    for (size_t j = 0; j < t.labels.size(); ++j)
      t.entries[i].push_back(chi_value(t.labels[i], t.labels[j]));
  }
  return t;
}

RationalFunction table_determinant_formula(const Poset& r, std::uint64_t cap) {
  RationalFunction prod(1);
  int big = r.relation_count();
  for (const auto& lam : enumerate_nn(r, cap))
    prod *= RationalFunction::q_power(big - order_exponent(ut_lower(lam)));
  return prod;
}

RationalFunction determinant(std::vector<std::vector<RationalFunction>> m) {
  const size_t n = m.size();
  RationalFunction det(1);
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return RationalFunction();
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    RationalFunction inv = RationalFunction(1) / m[col][col];
    for (size_t row = col + 1; row < n; ++row) {
      if (m[row][col].is_zero()) continue;
      RationalFunction f = m[row][col] * inv;
      for (size_t j = col; j < n; ++j) m[row][j] = m[row][j] - f * m[col][j];
    }
  }
  return det;
}

std::vector<RationalFunction> solve_linear(
    std::vector<std::vector<RationalFunction>> m,
    std::vector<RationalFunction> rhs) {
  const size_t n = m.size();
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw Error("singular linear system");
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    RationalFunction inv = RationalFunction(1) / m[col][col];
    for (size_t j = col; j < n; ++j) m[col][j] *= inv;
    rhs[col] *= inv;
    for (size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col].is_zero()) continue;
      RationalFunction f = m[row][col];
      for (size_t j = col; j < n; ++j) m[row][j] = m[row][j] - f * m[col][j];
      rhs[row] = rhs[row] - f * rhs[col];
    }
  }
  return rhs;
}

namespace {

// Expansion of one basis vector in the Delta basis.
void add_delta_expansion(ClassFunction& out, Basis basis,
                         const NNPartition& label, const RationalFunction& c,
                         const std::vector<NNPartition>& all) {
  const Poset& r = label.reference();
  switch (basis) {
    case Basis::Delta:
      out.add(label.arcs(), c);
      break;
    case Basis::Chi:
      for (const auto& mu : all) out.add(mu.arcs(), c * chi_value(label, mu));
      break;
    case Basis::SubgroupChi: {
      CoIdeal n = ut_lower(label);
      RationalFunction scale = RationalFunction::q_power(
          r.relation_count() - order_exponent(n));
      for (const auto& nu : all) {
        CoIdeal up = ut_upper(nu);
        bool inside = true;
        for (Arc a : up.members())
          if (!n.contains(a)) {
            inside = false;
            break;
          }
        if (inside) out.add(nu.arcs(), c * scale);
      }
      break;
    }
    case Basis::SubgroupDelta: {
      CoIdeal n = ut_upper(label);
      for (const auto& nu : all) {
        CoIdeal up = ut_upper(nu);
        bool inside = true;
        for (Arc a : up.members())
          if (!n.contains(a)) {
            inside = false;
            break;
          }
        if (inside) out.add(nu.arcs(), c);
      }
      break;
    }
  }
}

ClassFunction to_delta(const ClassFunction& f, std::uint64_t cap) {
  if (f.basis() == Basis::Delta) return f;
  const Poset& r = f.reference();
  auto all = enumerate_nn(r, cap);
  ClassFunction out(r, Basis::Delta);
  for (const auto& [arcs, c] : f.terms())
    add_delta_expansion(out, f.basis(), NNPartition(r, arcs), c, all);
  return out;
}

}  // namespace

RationalFunction inner_product(const ClassFunction& f, const ClassFunction& g) {
  if (f.reference() != g.reference())
    throw MixedReferenceError("class functions over different posets");
  const Poset& r = f.reference();
  ClassFunction fd = to_delta(f, kDefaultNNCap);
  ClassFunction gd = to_delta(g, kDefaultNNCap);
  RationalFunction sum;
  for (const auto& [arcs, c] : fd.terms()) {
    RationalFunction other = gd.coeff(arcs);
    if (other.is_zero()) continue;
    sum += superclass_size(NNPartition(r, arcs)) * c * other;
  }
  return sum * RationalFunction::q_power(-r.relation_count());
}

ClassFunction convert(const ClassFunction& f, Basis target, std::uint64_t cap) {
  if (f.basis() == target) return f;
  const Poset& r = f.reference();
  ClassFunction fd = to_delta(f, cap);
  if (target == Basis::Delta) return fd;
  auto all = enumerate_nn(r, cap);
  const size_t n = all.size();
  // Column j of m is the Delta expansion of the j-th target basis vector.
  std::vector<std::vector<RationalFunction>> m(
      n, std::vector<RationalFunction>(n));
  for (size_t j = 0; j < n; ++j) {
    ClassFunction col(r, Basis::Delta);
    add_delta_expansion(col, target, all[j], RationalFunction(1), all);
    for (size_t i = 0; i < n; ++i) m[i][j] = col.coeff(all[i].arcs());
  }
  std::vector<RationalFunction> rhs(n);
  for (size_t i = 0; i < n; ++i) rhs[i] = fd.coeff(all[i].arcs());
  auto sol = solve_linear(std::move(m), std::move(rhs));
  ClassFunction out(r, target);
  for (size_t j = 0; j < n; ++j) out.add(all[j].arcs(), sol[j]);
  return out;
}

BigRat evaluate_at_element(const ClassFunction& f, const GroupElement& g) {
  if (f.reference() != g.reference())
    throw MixedReferenceError("class function and element over different posets");
  ClassFunction fd = to_delta(f, kDefaultNNCap);
  NNPartition mu = superclass_of(g);
  return fd.coeff(mu.arcs()).eval(BigRat(g.modulus()));
}

}  // namespace superpattern
