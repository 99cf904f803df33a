// Command-line front end.  All mathematics happens behind the C API of the
// shared library; this binary only parses flags, moves JSON around and sets
// exit codes: 0 success, 1 verification failure, 2 input error.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "superpattern/capi.h"

namespace {

struct PosetHandle {
  sp_poset* p = nullptr;
  ~PosetHandle() { sp_poset_free(p); }
};

struct OwnedString {
  char* s = nullptr;
  ~OwnedString() { sp_string_free(s); }
};

[[noreturn]] void die_input(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  std::exit(2);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) die_input("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void load_poset(const std::string& path, PosetHandle& h) {
  std::string text = read_file(path);
  if (sp_poset_from_json(text.c_str(), &h.p) != SP_OK)
    die_input(std::string(sp_last_error()) + " in '" + path + "'");
}

std::string json_atom_array(const std::string& csv) {
  std::string out = "[";
  std::istringstream in(csv);
  std::string tok;
  bool first = true;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    if (!first) out += ",";
    out += "\"";
    for (char c : tok) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    out += "\"";
    first = false;
  }
  return out + "]";
}

sp_caps caps_from_env() {
  sp_caps caps = sp_caps_default();
  const char* env = std::getenv("SUPERPATTERN_CAPS");
  if (!env) return caps;
  std::istringstream in(env);
  std::string pair;
  while (std::getline(in, pair, ',')) {
    auto eq = pair.find('=');
    if (eq == std::string::npos) die_input("SUPERPATTERN_CAPS entries are key=value");
    std::string key = pair.substr(0, eq);
    std::uint64_t value = std::stoull(pair.substr(eq + 1));
    if (key == "max_nn")
      caps.max_nn = value;
    else if (key == "max_group")
      caps.max_group_order = value;
    else if (key == "max_antipode_atoms")
      caps.max_antipode_atoms = static_cast<int>(value);
    else
      die_input("unknown cap '" + key + "' in SUPERPATTERN_CAPS");
  }
  return caps;
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(output_path);
  if (!out) die_input("cannot write '" + output_path + "'");
  out << text;
}

int check(sp_status st) {
  if (st == SP_OK) return 0;
  std::cerr << "error: " << sp_last_error() << "\n";
  std::exit(st == SP_ERR_INTERNAL ? 1 : 2);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact supercharacter theory and Hopf structure of pattern groups"};
  app.require_subcommand(1);
  sp_caps caps = caps_from_env();
  std::string output;
  app.add_option("--output", output, "write results to a file instead of stdout");

  // enumerate
  auto* cmd_enum = app.add_subcommand("enumerate", "non-nesting poset partitions");
  std::string enum_poset;
  bool count_only = false;
  cmd_enum->add_option("--poset", enum_poset, "poset json file")->required();
  cmd_enum->add_flag("--count-only", count_only, "print only the count");

  // lattice
  auto* cmd_lattice = app.add_subcommand("lattice", "normal subgroup lattice");
  std::string lattice_poset;
  cmd_lattice->add_option("--poset", lattice_poset, "poset json file")->required();

  // table
  auto* cmd_table = app.add_subcommand("table", "supercharacter table");
  std::string table_poset, table_q, table_format = "json";
  cmd_table->add_option("--poset", table_poset, "poset json file")->required();
  cmd_table->add_option("--q", table_q, "evaluate at a concrete field size");
  cmd_table->add_option("--format", table_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  // restrict
  auto* cmd_restrict = app.add_subcommand("restrict", "restriction of a supercharacter");
  std::string res_poset, res_sub, res_label;
  cmd_restrict->add_option("--poset", res_poset, "ambient poset json file")->required();
  cmd_restrict->add_option("--subposet", res_sub, "subposet json file (same atoms)")
      ->required();
  cmd_restrict->add_option("--label", res_label, "partition json, e.g. [[\"1\",\"3\"]]")
      ->required();

  // product
  auto* cmd_product = app.add_subcommand("product", "inflation product");
  std::string pr_left, pr_right, pr_left_label = "[]", pr_right_label = "[]",
              pr_basis = "chi";
  cmd_product->add_option("--left-poset", pr_left, "left poset json file")->required();
  cmd_product->add_option("--right-poset", pr_right, "right poset json file")->required();
  cmd_product->add_option("--left-label", pr_left_label, "left partition json");
  cmd_product->add_option("--right-label", pr_right_label, "right partition json");
  cmd_product->add_option("--basis", pr_basis, "delta | chi | subgroup-chi | subgroup-delta");

  // coproduct
  auto* cmd_coproduct = app.add_subcommand("coproduct", "restriction coproduct");
  std::string cp_poset, cp_label = "[]", cp_left, cp_right, cp_basis = "chi";
  cmd_coproduct->add_option("--poset", cp_poset, "poset json file")->required();
  cmd_coproduct->add_option("--label", cp_label, "partition json");
  cmd_coproduct->add_option("--left", cp_left, "comma-separated atoms of the left block")
      ->required();
  cmd_coproduct->add_option("--right", cp_right, "comma-separated atoms of the right block")
      ->required();
  cmd_coproduct->add_option("--basis", cp_basis, "delta | chi | subgroup-chi | subgroup-delta");

  // antipode
  auto* cmd_antipode = app.add_subcommand("antipode", "Hopf monoid antipode");
  std::string an_poset, an_label, an_basis = "chi", an_method = "closed-form";
  cmd_antipode->add_option("--poset", an_poset, "poset json file")->required();
  cmd_antipode->add_option("--label", an_label, "partition json");
  cmd_antipode->add_option("--basis", an_basis, "chi or delta-subgroup")
      ->check(CLI::IsMember({"chi", "delta-subgroup", "subgroup-delta"}));
  cmd_antipode->add_option("--method", an_method, "takeuchi or closed-form")
      ->check(CLI::IsMember({"takeuchi", "closed-form"}));

  // primitives
  auto* cmd_prim = app.add_subcommand("primitives", "primitive generator of an atomic pair");
  std::string prim_poset, prim_sub, prim_atom;
  cmd_prim->add_option("--poset", prim_poset, "ambient poset json file")->required();
  cmd_prim->add_option("--subgroup", prim_sub, "subgroup poset json file (same atoms)")
      ->required();
  cmd_prim->add_option("--atom", prim_atom, "marked atom")->required();

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "run verification suites");
  std::string vf_suites, vf_primes = "2,3";
  int vf_max_atoms = 3;
  std::uint64_t vf_seed = 12345;
  bool vf_acceptance = false;
  cmd_verify->add_option("--suite", vf_suites,
                         "comma list of axioms,bases,restriction,hopf,antipode,catalan");
  cmd_verify->add_option("--max-atoms", vf_max_atoms, "exhaustive bound on atoms");
  cmd_verify->add_option("--primes", vf_primes, "comma list of oracle primes");
  cmd_verify->add_option("--seed", vf_seed, "seed for sampled checks");
  cmd_verify->add_flag("--acceptance", vf_acceptance,
                       "run the acceptance criteria at their stated bounds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (cmd_enum->parsed()) {
    PosetHandle p;
    load_poset(enum_poset, p);
    if (count_only) {
      uint64_t n = 0;
      check(sp_nn_count(p.p, &caps, &n));
      emit(std::to_string(n), output);
    } else {
      OwnedString s;
      check(sp_nn_enumerate(p.p, &caps, &s.s));
      emit(s.s, output);
    }
  } else if (cmd_lattice->parsed()) {
    PosetHandle p;
    load_poset(lattice_poset, p);
    OwnedString s;
    check(sp_lattice(p.p, &caps, &s.s));
    emit(s.s, output);
  } else if (cmd_table->parsed()) {
    PosetHandle p;
    load_poset(table_poset, p);
    OwnedString s;
    check(sp_table(p.p, &caps, table_q.empty() ? nullptr : table_q.c_str(),
                   table_format == "csv" ? 1 : 0, &s.s));
    emit(s.s, output);
  } else if (cmd_restrict->parsed()) {
    PosetHandle r, q;
    load_poset(res_poset, r);
    load_poset(res_sub, q);
    OwnedString s;
    check(sp_restrict(r.p, q.p, res_label.c_str(), &s.s));
    emit(s.s, output);
  } else if (cmd_product->parsed()) {
    PosetHandle l, r;
    load_poset(pr_left, l);
    load_poset(pr_right, r);
    OwnedString s;
    check(sp_product(l.p, pr_left_label.c_str(), r.p, pr_right_label.c_str(),
                     pr_basis.c_str(), &s.s));
    emit(s.s, output);
  } else if (cmd_coproduct->parsed()) {
    PosetHandle p;
    load_poset(cp_poset, p);
    OwnedString s;
    std::string left = json_atom_array(cp_left);
    std::string right = json_atom_array(cp_right);
    check(sp_coproduct(p.p, cp_label.c_str(), left.c_str(), right.c_str(),
                       cp_basis.c_str(), &s.s));
    emit(s.s, output);
  } else if (cmd_antipode->parsed()) {
    PosetHandle p;
    load_poset(an_poset, p);
    OwnedString s;
    std::string basis = an_basis == "delta-subgroup" ? "subgroup-delta" : an_basis;
    check(sp_antipode(p.p, basis.c_str(),
                      an_label.empty() ? nullptr : an_label.c_str(),
                      an_method.c_str(), &caps, &s.s));
    emit(s.s, output);
  } else if (cmd_prim->parsed()) {
    PosetHandle p, q;
    load_poset(prim_poset, p);
    load_poset(prim_sub, q);
    OwnedString s;
    check(sp_primitive(p.p, q.p, prim_atom.c_str(), &s.s));
    emit(s.s, output);
  } else if (cmd_verify->parsed()) {
    OwnedString report;
    int failures = 0;
    if (vf_acceptance) {
      check(sp_acceptance(&report.s, &failures));
    } else {
      check(sp_verify(vf_suites.empty() ? nullptr : vf_suites.c_str(),
                      vf_max_atoms, vf_primes.c_str(), vf_seed, &caps,
                      &report.s, &failures));
    }
    emit(report.s, output);
    return failures == 0 ? 0 : 1;
  }
  return 0;
}
