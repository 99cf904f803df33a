#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "superpattern/capi.h"

namespace {

const char* kChain3 =
    R"({"elements": ["1", "2", "3"], "relations": [["1", "2"], ["2", "3"]]})";

struct Handle {
  sp_poset* p = nullptr;
  ~Handle() { sp_poset_free(p); }
};

struct Owned {
  char* s = nullptr;
  ~Owned() { sp_string_free(s); }
  std::string str() const { return s ? std::string(s) : std::string(); }
};

}  // namespace

TEST_CASE("poset round trip") {
  Handle h;
  REQUIRE(sp_poset_from_json(kChain3, &h.p) == SP_OK);
  CHECK(sp_poset_atom_count(h.p) == 3);
  Owned out;
  REQUIRE(sp_poset_to_json(h.p, &out.s) == SP_OK);
  CHECK(out.str().find("\"relations\"") != std::string::npos);
}

TEST_CASE("error reporting") {
  sp_poset* p = nullptr;
  CHECK(sp_poset_from_json("not json", &p) == SP_ERR_INPUT);
  CHECK(sp_poset_from_json(
            R"({"elements": ["1","2"], "relations": [["1","2"],["2","1"]]})",
            &p) == SP_ERR_CYCLE);
  CHECK(std::strlen(sp_last_error()) > 0);
  CHECK(sp_poset_from_json(nullptr, &p) == SP_ERR_INPUT);
}

TEST_CASE("enumeration and caps") {
  Handle h;
  REQUIRE(sp_poset_from_json(kChain3, &h.p) == SP_OK);
  uint64_t n = 0;
  CHECK(sp_nn_count(h.p, nullptr, &n) == SP_OK);
  CHECK(n == 5);
  sp_caps tiny = sp_caps_default();
  tiny.max_nn = 2;
  CHECK(sp_nn_count(h.p, &tiny, &n) == SP_ERR_CAP);
  Owned list;
  CHECK(sp_nn_enumerate(h.p, nullptr, &list.s) == SP_OK);
  CHECK(list.str().find("[") != std::string::npos);
}

TEST_CASE("table output") {
  Handle h;
  REQUIRE(sp_poset_from_json(kChain3, &h.p) == SP_OK);
  Owned csv;
  REQUIRE(sp_table(h.p, nullptr, nullptr, 1, &csv.s) == SP_OK);
  CHECK(csv.str().find("q^2*(q-1)") != std::string::npos);
  CHECK(csv.str().find("determinant_formula,q^7") != std::string::npos);
  Owned at2;
  REQUIRE(sp_table(h.p, nullptr, "2", 0, &at2.s) == SP_OK);
  CHECK(at2.str().find("\"4\"") != std::string::npos);  // q^2*(q-1) at q=2
}

TEST_CASE("lattice dump") {
  Handle h;
  REQUIRE(sp_poset_from_json(kChain3, &h.p) == SP_OK);
  Owned out;
  REQUIRE(sp_lattice(h.p, nullptr, &out.s) == SP_OK);
  CHECK(out.str().find("coideals") != std::string::npos);
  CHECK(out.str().find("irreducibles") != std::string::npos);
}

TEST_CASE("restriction through the c api") {
  Handle r, q;
  REQUIRE(sp_poset_from_json(kChain3, &r.p) == SP_OK);
  REQUIRE(sp_poset_from_json(
              R"({"elements": ["1","2","3"], "relations": [["1","2"]]})",
              &q.p) == SP_OK);
  Owned out;
  REQUIRE(sp_restrict(r.p, q.p, R"([["1","3"]])", &out.s) == SP_OK);
  CHECK(out.str().find("q*(q-1)") != std::string::npos);
  // Not a subposet: relations run the other way.
  Handle bad;
  REQUIRE(sp_poset_from_json(
              R"({"elements": ["1","2","3"], "relations": [["2","1"]]})",
              &bad.p) == SP_OK);
  CHECK(sp_restrict(r.p, bad.p, R"([["1","3"]])", &out.s) == SP_ERR_DOMAIN);
}

TEST_CASE("hopf operations through the c api") {
  Handle left, right;
  REQUIRE(sp_poset_from_json(
              R"({"elements": ["1","2"], "relations": [["1","2"]]})",
              &left.p) == SP_OK);
  REQUIRE(sp_poset_from_json(R"({"elements": ["3"], "relations": []})",
                             &right.p) == SP_OK);
  Owned prod;
  REQUIRE(sp_product(left.p, R"([["1","2"]])", right.p, "[]", "delta",
                     &prod.s) == SP_OK);
  CHECK(prod.str().find("terms") != std::string::npos);

  Handle chain;
  REQUIRE(sp_poset_from_json(kChain3, &chain.p) == SP_OK);
  Owned cop;
  REQUIRE(sp_coproduct(chain.p, R"([["1","3"]])", R"(["1","2"])", R"(["3"])",
                       "chi", &cop.s) == SP_OK);
  CHECK(cop.str().find("q*(q-1)") != std::string::npos);

  Owned tak, closed;
  REQUIRE(sp_antipode(chain.p, "chi", R"([["1","3"]])", "takeuchi", nullptr,
                      &tak.s) == SP_OK);
  REQUIRE(sp_antipode(chain.p, "chi", R"([["1","3"]])", "closed-form", nullptr,
                      &closed.s) == SP_OK);
  CHECK(tak.str() == closed.str());
  CHECK(closed.str().find("q*(q-1)*(q-2)") != std::string::npos);

  Owned sub;
  REQUIRE(sp_antipode(chain.p, "subgroup-delta", nullptr, "closed-form",
                      nullptr, &sub.s) == SP_OK);
  CHECK(sub.str().find("terms") != std::string::npos);
}

TEST_CASE("primitive generator through the c api") {
  Handle ambient, subgroup;
  REQUIRE(sp_poset_from_json(
              R"({"elements": ["1","2"], "relations": [["2","1"]]})",
              &ambient.p) == SP_OK);
  REQUIRE(sp_poset_from_json(R"({"elements": ["1","2"], "relations": []})",
                             &subgroup.p) == SP_OK);
  Owned out;
  REQUIRE(sp_primitive(ambient.p, subgroup.p, "1", &out.s) == SP_OK);
  CHECK(out.str().find("-1") != std::string::npos);
  // The pair (chain, chain) factors.
  CHECK(sp_primitive(ambient.p, ambient.p, "1", &out.s) == SP_ERR_DOMAIN);
}

TEST_CASE("verify through the c api") {
  Owned report;
  int failures = -1;
  REQUIRE(sp_verify("catalan", 3, "2,3", 1, nullptr, &report.s, &failures) ==
          SP_OK);
  CHECK(failures == 0);
  CHECK(report.str().find("PASS") != std::string::npos);
  CHECK(sp_verify("no-such-suite", 3, "2,3", 1, nullptr, &report.s, &failures) ==
        SP_ERR_INPUT);
}
