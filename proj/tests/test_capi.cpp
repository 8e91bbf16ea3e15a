#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bigcell/bigcell.h"

#include <string>

namespace {

struct Snat {
  bc_snat* ptr = nullptr;
  explicit Snat(const char* text) {
    REQUIRE(bc_snat_parse(text, &ptr) == BC_OK);
  }
  ~Snat() { bc_snat_free(ptr); }
};

struct Patch {
  bc_patch* ptr = nullptr;
  explicit Patch(const char* text) {
    REQUIRE(bc_patch_parse(text, &ptr) == BC_OK);
  }
  ~Patch() { bc_patch_free(ptr); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  bc_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("supernatural handles") {
  Snat a("2^inf*3"), b("2^2*3^2*5");
  char* text = nullptr;
  REQUIRE(bc_snat_format(a.ptr, &text) == BC_OK);
  CHECK(take(text) == "2^inf*3");

  bc_snat* g = nullptr;
  REQUIRE(bc_snat_gcd(a.ptr, b.ptr, &g) == BC_OK);
  REQUIRE(bc_snat_format(g, &text) == BC_OK);
  CHECK(take(text) == "2^2*3");
  bc_snat_free(g);

  bc_snat* l = nullptr;
  REQUIRE(bc_snat_lcm(a.ptr, b.ptr, &l) == BC_OK);
  REQUIRE(bc_snat_format(l, &text) == BC_OK);
  CHECK(take(text) == "2^inf*3^2*5");
  bc_snat_free(l);

  int flag = -1;
  REQUIRE(bc_snat_divides(b.ptr, a.ptr, &flag) == BC_OK);
  CHECK(flag == 0);
  REQUIRE(bc_snat_is_completely_infinite(a.ptr, &flag) == BC_OK);
  CHECK(flag == 0);

  REQUIRE(bc_snat_valuation(a.ptr, "2", &text) == BC_OK);
  CHECK(take(text) == "inf");
  REQUIRE(bc_snat_valuation(a.ptr, "7", &text) == BC_OK);
  CHECK(take(text) == "0");
  CHECK(bc_snat_valuation(a.ptr, "4", &text) == BC_ERR_DOMAIN);
  CHECK(std::string(bc_last_error()).find("prime") != std::string::npos);

  bc_snat* bad = nullptr;
  CHECK(bc_snat_parse("2^^3", &bad) == BC_ERR_PARSE);
  CHECK(std::string(bc_last_error()).size() > 0);
}

TEST_CASE("patch handles and membership") {
  Patch S("union(fgopen(2,3),divclosure(2^inf*3))");
  char* text = nullptr;
  REQUIRE(bc_patch_format(S.ptr, &text) == BC_OK);
  CHECK(take(text) == "union(fgopen(2,3),divclosure(2^inf*3))");

  Snat s("2^4");
  int flag = 0;
  REQUIRE(bc_patch_member(s.ptr, S.ptr, &flag) == BC_OK);
  CHECK(flag == 1);

  bc_patch* bad = nullptr;
  CHECK(bc_patch_parse("unknown(1)", &bad) == BC_ERR_PARSE);
}

TEST_CASE("witnesses, covers, certificates") {
  Patch SZ("specz");
  char* w = reinterpret_cast<char*>(1);
  REQUIRE(bc_trace_witness("1", SZ.ptr, "6", &w) == BC_OK);
  CHECK(take(w) == "2^0;default=inf");

  Patch M("multiples:2^inf*3^inf");
  w = reinterpret_cast<char*>(1);
  REQUIRE(bc_trace_witness("2", M.ptr, "12", &w) == BC_OK);
  CHECK(w == nullptr);

  CHECK(bc_trace_witness("4", SZ.ptr, "6", &w) == BC_ERR_DOMAIN);

  int flag = 0;
  REQUIRE(bc_cover_check("1", "2,3", SZ.ptr, &flag) == BC_OK);
  CHECK(flag == 1);
  REQUIRE(bc_cover_check("1", "2", SZ.ptr, &flag) == BC_OK);
  CHECK(flag == 0);
  REQUIRE(bc_cover_check("2", "", Patch("empty").ptr, &flag) == BC_OK);
  CHECK(flag == 1);

  char* sub = nullptr;
  REQUIRE(bc_cover_subcover("1", "2,3,5,7,11", SZ.ptr, &sub) == BC_OK);
  CHECK(take(sub) == "2,3");
  CHECK(bc_cover_subcover("1", "2", SZ.ptr, &sub) == BC_ERR_DOMAIN);

  char* cert = nullptr;
  Snat p("2^inf");
  REQUIRE(bc_point_certificate(p.ptr, SZ.ptr, &cert) == BC_OK);
  CHECK(take(cert) == "nonpoint base:1 family:3,5");
  Snat top(";default=inf");
  REQUIRE(bc_point_certificate(top.ptr, SZ.ptr, &cert) == BC_OK);
  CHECK(take(cert) == "member");

  REQUIRE(bc_triv_zariski(SZ.ptr, &flag) == BC_OK);
  CHECK(flag == 1);
  Patch M2("multiples:2^inf");
  REQUIRE(bc_triv_zariski(M2.ptr, &flag) == BC_OK);
  CHECK(flag == 0);
}

TEST_CASE("poset embedding") {
  const char* chain = "elements: a b c\ncover: a b\ncover: b c\n";
  char* out = nullptr;
  REQUIRE(bc_poset_embed(chain, &out) == BC_OK);
  CHECK(take(out) == "a 2\nb 6\nc 30\n");

  int flag = 0;
  REQUIRE(bc_poset_verify(chain, "a 2\nb 6\nc 30\n", &flag) == BC_OK);
  CHECK(flag == 1);
  REQUIRE(bc_poset_verify(chain, "a 2\nb 3\nc 30\n", &flag) == BC_OK);
  CHECK(flag == 0);
  CHECK(bc_poset_embed("cover: a b\n", &out) == BC_ERR_PARSE);
  CHECK(bc_poset_verify(chain, "a 2\n", &flag) == BC_ERR_DOMAIN);
}

TEST_CASE("towers and limits") {
  char* out = nullptr;
  REQUIRE(bc_tower_snat("2,6", "6,5", &out) == BC_OK);
  CHECK(take(out) == "2*3*5^inf");
  REQUIRE(bc_tower_snat("2,6", "", &out) == BC_OK);
  CHECK(take(out) == "2*3");
  CHECK(bc_tower_snat("2,5", "", &out) == BC_ERR_DOMAIN);
  CHECK(bc_tower_snat("2,x", "", &out) == BC_ERR_PARSE);

  REQUIRE(bc_pcfb_limit("", "3,2", &out) == BC_OK);
  CHECK(take(out) == "2^inf*3");
  CHECK(bc_pcfb_limit("9", "3,2", &out) == BC_ERR_NONCONVERGENT);
  CHECK(bc_pcfb_limit("", "", &out) == BC_ERR_DOMAIN);

  Snat s("2^inf*3");
  char* csv = nullptr;
  REQUIRE(bc_cofinal_chain(s.ptr, "3", &csv) == BC_OK);
  CHECK(take(csv) == "2,12,24");
}

TEST_CASE("matrix tower over the C boundary") {
  char* out = nullptr;
  REQUIRE(bc_mat_embed("0 1 0 0", "4", &out) == BC_OK);
  std::string dense = take(out);
  CHECK(dense.find("1") != std::string::npos);
  CHECK(bc_mat_embed("0 1 0 0", "6", &out) == BC_OK);
  CHECK(bc_mat_embed("0 1 0 0", "5", &out) == BC_ERR_DOMAIN);
  bc_string_free(out);

  REQUIRE(bc_mat_trace("1 0 0 1", &out) == BC_OK);
  CHECK(take(out) == "1");
  REQUIRE(bc_mat_trace("0 1 0 0 0 0 0 0 1", &out) == BC_OK);
  CHECK(take(out) == "1/3");

  int flag = -1;
  REQUIRE(bc_mat_equivn("1 2 0 1", "3 6 0 3", "2", &flag) == BC_OK);
  CHECK(flag == 1);
  REQUIRE(bc_mat_equivn("1 2 0 1", "1 0 0 1", "2", &flag) == BC_OK);
  CHECK(flag == 0);
  CHECK(bc_mat_equivn("1 0 0 1", "1 0 0 1", "3", &flag) == BC_ERR_DOMAIN);

  // Unit images of the standard embedding M_2 -> M_4, built via bc_mat_embed.
  std::string units[4];
  const char* base[4] = {"1 0 0 0", "0 1 0 0", "0 0 1 0", "0 0 0 1"};
  std::string all;
  for (int k = 0; k < 4; ++k) {
    REQUIRE(bc_mat_embed(base[k], "4", &out) == BC_OK);
    units[k] = take(out);
    all += units[k];
  }
  REQUIRE(bc_mat_conj(all.c_str(), all.c_str(), "2", "4", &out) == BC_OK);
  bc_string_free(out);
  CHECK(bc_mat_conj(all.c_str(), all.c_str(), "2", "x", &out) ==
        BC_ERR_PARSE);
  // Identity images are not an embedding of M_2.
  std::string ident4 = "1 0 0 0 0 1 0 0 0 0 1 0 0 0 0 1\n";
  std::string bad = ident4 + ident4 + ident4 + ident4;
  CHECK(bc_mat_conj(bad.c_str(), bad.c_str(), "2", "4", &out) ==
        BC_ERR_DOMAIN);

  REQUIRE(bc_mat_rep("generators: x\nrelation: x^2\n", "0 1 0 0", &flag) ==
          BC_OK);
  CHECK(flag == 1);
  REQUIRE(bc_mat_rep("generators: x y\nrelation: x*y - y*x - 1\n",
                     "0 1 0 0 0 0 1 0", &flag) == BC_OK);
  CHECK(flag == 0);
  CHECK(bc_mat_rep("generators: x\nrelation: z\n", "0 1 0 0", &flag) ==
        BC_ERR_PARSE);
}

TEST_CASE("oracle and truncation") {
  Patch SZ("specz");
  int flag = -1;
  REQUIRE(bc_naive_cover("1", "2,3", SZ.ptr, "2,3,5", "2", &flag) == BC_OK);
  CHECK(flag == 1);
  Patch full("full");
  REQUIRE(bc_naive_cover("1", "2", full.ptr, "2,3", "1", &flag) == BC_OK);
  CHECK(flag == 0);
  CHECK(bc_naive_cover("1", "2", full.ptr, "4", "1", &flag) == BC_ERR_DOMAIN);

  Snat s("2*3");
  char* out = nullptr;
  REQUIRE(bc_truncate("1,2,3,4,6", s.ptr, &out) == BC_OK);
  CHECK(take(out) == "1,2,3,6");
  REQUIRE(bc_truncate("", s.ptr, &out) == BC_OK);
  CHECK(take(out) == "");
  CHECK(bc_truncate("2,2", s.ptr, &out) == BC_ERR_DOMAIN);
}

TEST_CASE("budget errors surface with their own code") {
  // 17 coupled leaves push the solver past its candidate budget.
  std::string expr = "intersection(";
  bool first = true;
  int count = 0;
  for (int p = 2; count < 17; ++p) {
    bool prime = p > 1;
    for (int d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (!prime) continue;
    long p4 = 1L * p * p * p * p;
    if (!first) expr += ",";
    expr += "fgopen(" + std::to_string(p4) + ")";
    first = false;
    ++count;
  }
  expr += ")";
  Patch S(expr.c_str());
  char* w = nullptr;
  CHECK(bc_trace_witness("1", S.ptr, "", &w) == BC_ERR_BUDGET);
}
