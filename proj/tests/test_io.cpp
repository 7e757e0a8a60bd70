#include "doctest.h"
#include "ko/suites.hpp"

using namespace ko;

TEST_CASE("export and import round-trip") {
  for (auto g : {build_m({1, 5, 0}), build_m({2, 5, 0}), build_sm({1, 7, 1}), build_sm({2, 5, 3})}) {
    const auto doc = export_lsa(g.lsa);
    for (const char* key : {"basis", "parity", "degree", "sc", "pmap", "p", "labels"}) CHECK(doc.contains(key));
    CHECK(doc["basis"][0][0][0].is_array());
    auto back = import_lsa(Json::parse(doc.dump()));
    CHECK(back.dim == g.lsa.dim);
    CHECK(back.parity == g.lsa.parity);
    CHECK(back.degree == g.lsa.degree);
    CHECK(back.labels == g.lsa.labels);
    CHECK(back.pmap == g.lsa.pmap);
    CHECK(back.basis_terms == g.lsa.basis_terms);
    for (std::size_t i = 0; i < back.dim; ++i)
      for (std::size_t j = 0; j < back.dim; ++j) CHECK(back.bracket_basis(i, j) == g.lsa.bracket_basis(i, j));
    CHECK(export_lsa(back).dump() == doc.dump());
    CHECK(verify_jacobi(back).passed());
  }
}

TEST_CASE("import rejects malformed documents") {
  auto g = build_m({1, 5, 0});
  const auto doc = export_lsa(g.lsa);
  CHECK_THROWS_AS(import_lsa(Json::parse("{}")), Error);

  auto bad_degree = doc;
  bad_degree["degree"][0] = 7;
  CHECK_THROWS_AS(import_lsa(bad_degree), Error);

  auto bad_parity = doc;
  bad_parity["parity"][0] = 1 - bad_parity["parity"][0].get<int>();
  CHECK_THROWS_AS(import_lsa(bad_parity), Error);

  auto bad_index = doc;
  bad_index["sc"][0][2] = 999;
  CHECK_THROWS_AS(import_lsa(bad_index), Error);

  auto short_parity = doc;
  short_parity["parity"].erase(short_parity["parity"].size() - 1);
  CHECK_THROWS_AS(import_lsa(short_parity), Error);
}

TEST_CASE("p-characters from JSON") {
  auto g = build_m({1, 5, 0});
  const auto& L = g.lsa;
  PChar chi = zero_pchar(L);
  chi.values[g.monomial_index(MultiIndex({2, 1, 0}))] = 3;
  chi.values[g.monomial_index(MultiIndex({1, 0, 1}))] = 1;
  CHECK(pchar_from_json(L, pchar_to_json(L, chi)).values == chi.values);
  CHECK(pchar_from_json(L, Json::parse(R"({"2,1,0": 3, "1,0,1": 6})")).values == chi.values);
  Json arr = Json::array();
  for (auto v : chi.values) arr.push_back(v);
  CHECK(pchar_from_json(L, arr).values == chi.values);
  CHECK_THROWS_AS(pchar_from_json(L, Json::parse("[1, 2]")), Error);
  CHECK_THROWS_AS(pchar_from_json(L, Json::parse(R"({"nope": 1})")), Error);
  CHECK_THROWS_AS(pchar_from_json(L, Json::parse("3")), Error);
}

TEST_CASE("reports: exit codes, seed record and determinism") {
  RunConfig c;
  auto r = run_suite("algebra", "dims", c);
  CHECK(r.exit_code() == 0);
  CHECK(r.to_json()["config"]["seed"] == 0);
  CHECK(r.to_csv().rfind("suite,check,status,detail\n", 0) == 0);

  Report mixed;
  mixed.add("a", Status::Pass);
  mixed.add("b", Status::Inconclusive);
  CHECK(mixed.exit_code() == 2);
  mixed.add("c", Status::Fail);
  CHECK(mixed.exit_code() == 1);

  c.seed = 9;
  c.target = SearchTarget::Nonsingular;
  const auto a = run_suite("char", "search", c).to_json();
  CHECK(a["config"]["seed"] == 9);
  CHECK(a.dump() == run_suite("char", "search", c).to_json().dump());

  CHECK_THROWS_AS(run_suite("verify", "nope", c), UsageError);
  c.p = 7;
  CHECK_THROWS_AS(run_suite("verify", "golden15", c), UsageError);
}

TEST_CASE("a malformed p-character is a usage error") {
  RunConfig c;
  c.chi = Json::parse("[1, 2]");
  CHECK_THROWS_AS(run_suite("kac", "build", c), UsageError);
}
