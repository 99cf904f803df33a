#include "superpattern/capi.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "superpattern/classfun.hpp"
#include "superpattern/json_io.hpp"
#include "superpattern/species.hpp"
#include "superpattern/verify.hpp"

using namespace superpattern;
using nlohmann::json;

struct sp_poset {
  Poset value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
sp_status guarded(Fn&& fn) {
  try {
    fn();
    return SP_OK;
  } catch (const CycleError& e) {
    g_last_error = e.what();
    return SP_ERR_CYCLE;
  } catch (const SizeCapError& e) {
    g_last_error = e.what();
    return SP_ERR_CAP;
  } catch (const DivideByZeroError& e) {
    g_last_error = e.what();
    return SP_ERR_MATH;
  } catch (const PoleError& e) {
    g_last_error = e.what();
    return SP_ERR_MATH;
  } catch (const UnknownAtomError& e) {
    g_last_error = e.what();
    return SP_ERR_INPUT;
  } catch (const InputError& e) {
    g_last_error = e.what();
    return SP_ERR_INPUT;
  } catch (const Error& e) {
    g_last_error = e.what();
    return SP_ERR_DOMAIN;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SP_ERR_INTERNAL;
  }
}

sp_caps effective(const sp_caps* caps) {
  return caps ? *caps : sp_caps_default();
}

std::vector<std::string> atoms_from_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_array())
    throw InputError("atom list must be a json array");
  std::vector<std::string> out;
  for (const auto& v : j)
    out.push_back(v.is_string() ? v.get<std::string>()
                                : std::to_string(v.get<long>()));
  return out;
}

}  // namespace

extern "C" {

sp_caps sp_caps_default(void) {
  sp_caps c;
  c.max_nn = kDefaultNNCap;
  c.max_group_order = kDefaultGroupCap;
  c.max_antipode_atoms = kDefaultAntipodeAtomCap;
  return c;
}

const char* sp_last_error(void) { return g_last_error.c_str(); }

void sp_string_free(char* s) { std::free(s); }

sp_status sp_poset_from_json(const char* json_text, sp_poset** out) {
  return guarded([&] {
    if (!json_text || !out) throw InputError("null argument");
    *out = new sp_poset{poset_from_json_text(json_text)};
  });
}

void sp_poset_free(sp_poset* p) { delete p; }

sp_status sp_poset_to_json(const sp_poset* p, char** json_out) {
  return guarded([&] {
    if (!p || !json_out) throw InputError("null argument");
    *json_out = dup_string(json_dump(poset_to_json(p->value)));
  });
}

int sp_poset_atom_count(const sp_poset* p) { return p ? p->value.size() : -1; }

sp_status sp_nn_count(const sp_poset* p, const sp_caps* caps, uint64_t* out) {
  return guarded([&] {
    if (!p || !out) throw InputError("null argument");
    *out = count_nn(p->value, effective(caps).max_nn);
  });
}

sp_status sp_nn_enumerate(const sp_poset* p, const sp_caps* caps, char** json_out) {
  return guarded([&] {
    if (!p || !json_out) throw InputError("null argument");
    json j = json::array();
    for (const auto& lam : enumerate_nn(p->value, effective(caps).max_nn))
      j.push_back(nn_to_json(lam));
    *json_out = dup_string(json_dump(j));
  });
}

sp_status sp_lattice(const sp_poset* p, const sp_caps* caps, char** json_out) {
  return guarded([&] {
    if (!p || !json_out) throw InputError("null argument");
    const Poset& r = p->value;
    json j;
    json elements = json::array();
    for (const auto& n : full_lattice(r, effective(caps).max_nn)) {
      json e;
      e["coideal"] = coideal_to_json(n);
      e["minimal_label"] = nn_to_json(lbl_cl(n));
      e["lower_label"] = nn_to_json(lower_label(n));
      e["order_exponent"] = order_exponent(n);
      elements.push_back(e);
    }
    j["coideals"] = elements;
    json irr = json::array();
    for (Arc a : proper_intervals(r)) {
      json m;
      m["interval"] = {r.label(a.lo), r.label(a.hi)};
      m["meet_irreducible"] = coideal_to_json(meet_irreducible(r, a));
      m["join_irreducible"] = coideal_to_json(join_irreducible(r, a));
      irr.push_back(m);
    }
    j["irreducibles"] = irr;
    *json_out = dup_string(json_dump(j));
  });
}

sp_status sp_table(const sp_poset* p, const sp_caps* caps, const char* q_value,
                   int as_csv, char** out) {
  return guarded([&] {
    if (!p || !out) throw InputError("null argument");
    Table t = supercharacter_table(p->value, effective(caps).max_nn);
    RationalFunction formula = table_determinant_formula(p->value);
    RationalFunction direct = determinant(t.entries);
    BigRat q0;
    bool concrete = q_value != nullptr;
    if (concrete) q0 = BigRat(std::string(q_value));
    auto cell = [&](const RationalFunction& v) {
      return concrete ? v.eval(q0).str() : v.str();
    };
    if (as_csv) {
      std::ostringstream csv;
      csv << "lambda\\mu";
      for (const auto& mu : t.labels) csv << "," << '"' << mu.str() << '"';
      csv << "\n";
      for (size_t i = 0; i < t.labels.size(); ++i) {
        csv << '"' << t.labels[i].str() << '"';
        for (size_t j = 0; j < t.labels.size(); ++j)
          csv << "," << cell(t.entries[i][j]);
        csv << "\n";
      }
      csv << "determinant_formula," << formula.str() << "\n";
      csv << "determinant_direct," << direct.str() << "\n";
      *out = dup_string(csv.str());
      return;
    }
    json j;
    json labels = json::array();
    for (const auto& l : t.labels) labels.push_back(nn_to_json(l));
    j["labels"] = labels;
    json rows = json::array();
    for (const auto& row : t.entries) {
      json r = json::array();
      for (const auto& v : row) r.push_back(cell(v));
      rows.push_back(r);
    }
    j["entries"] = rows;
    j["determinant_formula"] = formula.str();
    j["determinant_direct"] = direct.str();
    j["determinant_sign"] = (direct == formula) ? 1 : -1;
    *out = dup_string(json_dump(j));
  });
}

sp_status sp_restrict(const sp_poset* r, const sp_poset* q,
                      const char* label_json, char** json_out) {
  return guarded([&] {
    if (!r || !q || !label_json || !json_out) throw InputError("null argument");
    NNPartition lam = nn_from_json_text(r->value, label_json);
    ClassFunction res = restriction_general(r->value, q->value, lam);
    *json_out = dup_string(json_dump(classfun_to_json(res)));
  });
}

sp_status sp_product(const sp_poset* left, const char* left_label_json,
                     const sp_poset* right, const char* right_label_json,
                     const char* basis, char** json_out) {
  return guarded([&] {
    if (!left || !right || !left_label_json || !right_label_json || !basis ||
        !json_out)
      throw InputError("null argument");
    Basis b = basis_from_name(basis);
    SpeciesElement x = SpeciesElement::term(
        left->value, b, nn_from_json_text(left->value, left_label_json).arcs());
    SpeciesElement y = SpeciesElement::term(
        right->value, b, nn_from_json_text(right->value, right_label_json).arcs());
    *json_out = dup_string(json_dump(species_to_json(product(x, y))));
  });
}

sp_status sp_coproduct(const sp_poset* p, const char* label_json,
                       const char* left_atoms_json, const char* right_atoms_json,
                       const char* basis, char** json_out) {
  return guarded([&] {
    if (!p || !label_json || !left_atoms_json || !right_atoms_json || !basis ||
        !json_out)
      throw InputError("null argument");
    Basis b = basis_from_name(basis);
    SpeciesElement x = SpeciesElement::term(
        p->value, b, nn_from_json_text(p->value, label_json).arcs());
    SpeciesTensor t = coproduct(x, atoms_from_json(left_atoms_json),
                                atoms_from_json(right_atoms_json));
    json terms = json::array();
    for (const auto& [key, c] : t.terms()) {
      json item;
      item["left"] = {
          {"ambient", poset_to_json(key[0].ambient)},
          {"label", nn_to_json(NNPartition(key[0].ambient, key[0].label))}};
      item["right"] = {
          {"ambient", poset_to_json(key[1].ambient)},
          {"label", nn_to_json(NNPartition(key[1].ambient, key[1].label))}};
      item["coeff"] = c.str();
      terms.push_back(item);
    }
    json j;
    j["basis"] = basis_name(b);
    j["terms"] = terms;
    *json_out = dup_string(json_dump(j));
  });
}

sp_status sp_antipode(const sp_poset* p, const char* basis, const char* label_json,
                      const char* method, const sp_caps* caps, char** json_out) {
  return guarded([&] {
    if (!p || !basis || !method || !json_out) throw InputError("null argument");
    Basis b = basis_from_name(basis);
    if (b != Basis::Chi && b != Basis::SubgroupDelta)
      throw InputError("antipode basis must be chi or subgroup-delta");
    sp_caps c = effective(caps);
    const Poset& r = p->value;
    std::vector<Arc> label;
    if (label_json) {
      label = nn_from_json_text(r, label_json).arcs();
    } else if (b == Basis::SubgroupDelta) {
      label = lbl_cl(CoIdeal(r, proper_intervals(r))).arcs();
    }
    SpeciesElement result;
    std::string m(method);
    if (m == "takeuchi") {
      result = antipode_takeuchi(SpeciesElement::term(r, b, label),
                                 c.max_antipode_atoms);
    } else if (m == "closed-form") {
      if (b == Basis::Chi) {
        result = antipode_chi(r, NNPartition(r, label), c.max_antipode_atoms,
                              c.max_nn);
      } else {
        Poset sub = subgroup_poset(ut_upper(NNPartition(r, label)));
        result = antipode_delta_subgroup(sub, c.max_antipode_atoms);
      }
    } else {
      throw InputError("method must be takeuchi or closed-form");
    }
    *json_out = dup_string(json_dump(species_to_json(result)));
  });
}

sp_status sp_primitive(const sp_poset* ambient, const sp_poset* subgroup,
                       const char* atom, char** json_out) {
  return guarded([&] {
    if (!ambient || !subgroup || !atom || !json_out)
      throw InputError("null argument");
    SpeciesElement g = primitive_generator(atom, ambient->value, subgroup->value);
    *json_out = dup_string(json_dump(species_to_json(g)));
  });
}

namespace {

std::string render_report(const std::vector<CheckResult>& results,
                          int* failures) {
  std::ostringstream out;
  int bad = 0;
  for (const auto& r : results) {
    out << (r.pass ? "PASS" : "FAIL") << ": " << r.name;
    if (!r.detail.empty()) out << " -- " << r.detail;
    out << "\n";
    if (!r.pass) ++bad;
  }
  if (failures) *failures = bad;
  return out.str();
}

}  // namespace

sp_status sp_verify(const char* suites_csv, int max_atoms, const char* primes_csv,
                    uint64_t seed, const sp_caps* caps, char** report_out,
                    int* failures_out) {
  return guarded([&] {
    if (!report_out) throw InputError("null argument");
    VerifyOptions opt;
    if (max_atoms > 0) opt.max_atoms = max_atoms;
    opt.seed = seed;
    sp_caps c = effective(caps);
    opt.nn_cap = c.max_nn;
    opt.group_cap = c.max_group_order;
    if (primes_csv && *primes_csv) {
      opt.primes.clear();
      std::istringstream in(primes_csv);
      std::string tok;
      while (std::getline(in, tok, ',')) {
        int p = std::stoi(tok);
        if (!is_prime(p)) throw InputError("verify primes must be prime");
        opt.primes.push_back(p);
      }
    }
    std::vector<std::string> suites;
    if (suites_csv && *suites_csv) {
      std::istringstream in(suites_csv);
      std::string tok;
      while (std::getline(in, tok, ',')) suites.push_back(tok);
    } else {
      suites = suite_names();
    }
    std::vector<CheckResult> all;
    for (const auto& s : suites)
      for (auto& r : run_suite(s, opt)) all.push_back(std::move(r));
    *report_out = dup_string(render_report(all, failures_out));
  });
}

sp_status sp_acceptance(char** report_out, int* failures_out) {
  return guarded([&] {
    if (!report_out) throw InputError("null argument");
    auto results = run_acceptance();
    std::ostringstream out;
    int bad = 0;
    for (size_t i = 0; i < results.size(); ++i) {
      out << "criterion " << (i + 1) << ": "
          << (results[i].pass ? "PASS" : "FAIL") << " -- " << results[i].name;
      if (!results[i].detail.empty()) out << " (" << results[i].detail << ")";
      out << "\n";
      if (!results[i].pass) ++bad;
    }
    if (failures_out) *failures_out = bad;
    *report_out = dup_string(out.str());
  });
}

}  // extern "C"
