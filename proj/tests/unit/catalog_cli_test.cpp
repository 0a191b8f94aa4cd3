#include <gtest/gtest.h>

#include <set>

#include "polydual/catalog.hpp"
#include "polydual/json_io.hpp"
#include "polydual/k3_invariants.hpp"
#include "polydual/verify.hpp"

using namespace polydual;

namespace {

const CatalogEntry& entry(const std::string& table, const std::string& label) {
  for (const auto& e : catalog_table(table))
    if (e.label == label) return e;
  throw std::runtime_error("no row " + label);
}

}  // namespace

TEST(Catalog, TablesPresent) {
  const std::vector<std::string> want{"arnold14",           "ade",       "simple-elliptic",
                                      "min-elliptic-a0-1",  "min-elliptic-a0-gt1", "reid-a0-1",
                                      "thm439-polytopes",   "example-441",         "example-442"};
  EXPECT_EQ(table_ids(), want);
  EXPECT_EQ(catalog_table("arnold14").size(), 14u);
  EXPECT_EQ(catalog_table("thm439-polytopes").size(), 14u);
  EXPECT_EQ(catalog_table("example-442").size(), 6u);
  EXPECT_THROW(catalog_table("nope"), InputError);
  EXPECT_THROW(verify_table("nope"), InputError);
}

TEST(Catalog, RowsAreWellFormed) {
  for (const auto& id : table_ids()) {
    std::set<std::pair<std::string, WeightSystem>> labels;  // A rows repeat a label
    for (const auto& e : catalog_table(id)) {
      EXPECT_TRUE(labels.insert({e.label, canonical_form(e.weights)}).second) << id << " " << e.label;
      EXPECT_NO_THROW(validate(e.weights)) << e.label;
      if (e.polytope.empty()) continue;
      const auto p = entry_polytope(e);
      ASSERT_TRUE(p.has_value());
      EXPECT_TRUE(p->is_full_dimensional()) << e.label;
    }
  }
}

TEST(Catalog, ParseErrorsNameTheLine) {
  try {
    parse_catalog("t", "# c\nA\t2,3\t6\t-\t-\t-\t-\t-\nB\t2,x\t6\t-\t-\t-\t-\t-\n");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("3"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_catalog("t", "A\t2,3\n"), InputError);
  const auto rows = parse_catalog("t", "A\t2,3\t6\t1,1|2,3\tX^3,Y^2\tstrong\t-\tk=v;q=w\n");
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].duals.size(), 2u);
  EXPECT_TRUE(rows[0].has_flag("strong"));
  EXPECT_EQ(rows[0].extra_value("q"), "w");
  EXPECT_FALSE(rows[0].extra_value("z").has_value());
  EXPECT_EQ(rows[0].variables(), (std::vector<std::string>{"W", "X", "Y"}));
}

TEST(Catalog, SquaresReconstructForTheirRows) {
  std::size_t checked = 0;
  for (const auto& id : table_ids())
    for (const auto& e : catalog_table(id)) {
      if (e.c_rows.empty() || e.duals.empty()) continue;
      const auto c = entry_square(e);
      ASSERT_TRUE(c.has_value()) << e.label;
      const auto wb = weights_from_square(*c);
      ASSERT_TRUE(wb.has_value()) << e.label;
      EXPECT_TRUE(is_weighted_magic_square(*c, e.weights, *wb)) << e.label;
      bool listed = false;
      for (const auto& d : e.duals) listed = listed || equivalent(d, *wb);
      EXPECT_TRUE(listed) << e.label << " " << wb->to_string();
      ++checked;
    }
  EXPECT_GT(checked, 50u);
}

TEST(Verify, EveryTablePasses) {
  for (const auto& id : table_ids()) {
    const auto r = verify_table(id);
    EXPECT_TRUE(r.passed()) << r.to_text();
    EXPECT_EQ(r.rows.size(), catalog_table(id).size());
  }
}

TEST(Verify, Deterministic) {
  for (const auto& id : table_ids()) EXPECT_EQ(verify_table(id).to_text(), verify_table(id).to_text()) << id;
}

TEST(Verify, ObservedRows) {
  const auto r = verify_table("thm439-polytopes");
  std::size_t observed = 0;
  for (const auto& row : r.rows)
    if (row.status == RowStatus::observed) {
      ++observed;
      EXPECT_EQ(row.label, "S_12");
    }
  EXPECT_EQ(observed, 1u);
}

TEST(Frozen, S12DualTradesOneMonomial) {
  const auto& e = entry("thm439-polytopes", "S_12");
  const auto p = *entry_polytope(e);
  const auto expected = polytope_from_monomials("W^13,W^4X^3,W^3Z^2,W^9Y,X^3Y,XZ^2,Y^2Z", e.weights, e.variables());
  EXPECT_TRUE(are_lattice_equivalent(polar_dual(p), expected).has_value());
  EXPECT_FALSE(are_lattice_equivalent(polar_dual(p), p).has_value());
  EXPECT_EQ(rank_triple(p), (RankTriple{10, 10, 0}));
}

TEST(Frozen, W13PrintedListRanks) {
  const auto& e = entry("thm439-polytopes", "W_13");
  const auto printed = polytope_from_monomials(*e.extra_value("printed"), e.weights, e.variables());
  EXPECT_TRUE(is_reflexive(printed));
  EXPECT_EQ(rank_triple(printed), (RankTriple{11, 6, 3}));
  EXPECT_EQ(rank_triple(*entry_polytope(e)), (RankTriple{11, 9, 0}));
}

TEST(Json, WeightSystemRoundTrip) {
  const WeightSystem w = parse_weight_system("2,3,6;12");
  EXPECT_EQ(to_json(w).dump(), R"({"weights":[2,3,6],"degree":12})");
  EXPECT_EQ(weight_system_from_json(to_json(w)), w);
  EXPECT_EQ(weight_system_from_json(Json("2,3,6;12")), w);
  EXPECT_THROW(weight_system_from_json(Json::parse(R"({"weights":[2,3]})")), InputError);
}

TEST(Json, PolytopeRoundTrip) {
  for (const auto& id : {"thm439-polytopes", "example-442"})
    for (const auto& e : catalog_table(id)) {
      const auto p = *entry_polytope(e);
      EXPECT_EQ(polytope_from_json(to_json(p)), p) << e.label;
      EXPECT_EQ(polytope_from_json(Json::parse(to_json(p).dump())), p) << e.label;
      EXPECT_EQ(polytope_from_json(to_json(polar_dual(p))), polar_dual(p)) << e.label;
    }
}

TEST(Json, MonomialForm) {
  const auto j = Json::parse(R"({"weight_system":"6,14,21;42","monomials":["W^42","X^7","Y^3","Z^2"]})");
  const auto p = polytope_from_json(j);
  EXPECT_EQ(p, *entry_polytope(entry("thm439-polytopes", "E_12")));
  EXPECT_THROW(polytope_from_json(Json::parse(R"({"vertices":[["1/0"]]})")), std::exception);
  EXPECT_THROW(polytope_from_json(Json::parse("[1]")), InputError);
  EXPECT_THROW(load_json_file("/nonexistent/x.json"), InputError);
}

TEST(Json, ReportsAreStructured) {
  const auto j = to_json(verify_table("arnold14"));
  EXPECT_EQ(j.dump(), to_json(verify_table("arnold14")).dump());
  EXPECT_EQ(to_json(RankTriple{13, 4, 3}).at("lg"), 13);
}
