#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "generators.hpp"
#include "repair_oracle.hpp"
#include "repairaf/error.hpp"
#include "repairaf/io.hpp"
#include "repairaf/reasoning.hpp"
#include "repairaf/reductions.hpp"

using namespace repairaf;

namespace {

using Ids = std::vector<TupleId>;
using IdSets = std::vector<Ids>;

// Every cell of the relation against a golden CSV fixture.
void check_table(const Instance& inst, const std::string& golden) {
  Relation expect = io::parse_csv_relation(testsupport::fixture(golden), kEncodedRelation);
  const Relation& got = inst.database().relation(kEncodedRelation);
  CHECK(got.schema == expect.schema);
  REQUIRE(got.tuples.size() == expect.tuples.size());
  for (std::size_t r = 0; r < got.tuples.size(); ++r) {
    CAPTURE(expect.tuples[r].id);
    CHECK(got.tuples[r].id == expect.tuples[r].id);
    CHECK(got.tuples[r].values == expect.tuples[r].values);
  }
}

CnfFormula example4() { return CnfFormula{2, {{1, 2}, {-1, -2}, {-1, 2}}, {"x", "y"}}; }

Qbf2Formula example5() {
  Qbf2Formula phi;
  phi.universal = {1, 2};
  phi.existential = {3, 4};
  phi.matrix = CnfFormula{4, {{1, 2, 3}, {2, -3, -4}, {2, 3, 4}}, {"y1", "y2", "z3", "z4"}};
  return phi;
}

Qbf2Formula qbf(std::vector<std::vector<int>> clauses) {
  Qbf2Formula phi;
  phi.universal = {1};
  phi.existential = {2};
  phi.matrix = CnfFormula{2, std::move(clauses), {"y", "z"}};
  return phi;
}

}  // namespace

TEST_SUITE("reductions") {
  TEST_CASE("somerepair encoding matches the golden table") {
    EncodedInstance enc = encode_sat_somerepair(example4());
    check_table(enc.instance, "example4/table2.csv");
    CHECK(enc.distinguished == "s_phi");
    CHECK(enc.variable_tuples.at("x") == std::make_pair(TupleId("s_x"), TupleId("ns_x")));
    CHECK(enc.instance.dependencies().size() == 4);
    CHECK(enc.instance.dependencies()[0].to_string() == "fd T: t0 -> u0");
    CHECK(enc.instance.dependencies()[3].to_string() == "id T[t3] <= T[u3]");
    CHECK(enumerate_repairs(enc.instance).repairs ==
          IdSets{{"ns_x", "ns_y"}, {"ns_x", "s_phi", "s_y"}, {"ns_y", "s_x"}, {"s_x", "s_y"}});
  }

  TEST_CASE("rep encoding adds the t4/u4 column") {
    EncodedInstance enc = encode_sat_rep(example4());
    check_table(enc.instance, "example4/table2_rep.csv");
    CHECK(enumerate_repairs(enc.instance).repairs == IdSets{{"ns_x", "s_phi", "s_y"}});
  }

  TEST_CASE("qbf encoding matches the golden table") {
    EncodedInstance enc = encode_qbf_allrepair(example5());
    check_table(enc.instance, "example5/table3.csv");
    CHECK(enc.instance.dependencies().size() == 5);
    CHECK(all_repair(enc.instance, "s_phi"));
    CHECK(eval_qbf2(example5()));
  }

  TEST_CASE("small SAT encodings") {
    CnfFormula unit{1, {{1}}, {"x"}};
    EncodedInstance a = encode_sat_somerepair(unit);
    CHECK(a.instance.database().size() == 3);
    CHECK(some_repair(a.instance, "s_phi"));
    CHECK(rep_exists(encode_sat_rep(unit).instance));
    CHECK(enumerate_repairs(encode_sat_rep(unit).instance).repairs == IdSets{{"s_phi", "s_x"}});

    CnfFormula contra{1, {{1}, {-1}}, {"x"}};
    CHECK_FALSE(some_repair(encode_sat_somerepair(contra).instance, "s_phi"));
    CHECK_FALSE(rep_exists(encode_sat_rep(contra).instance));
  }

  TEST_CASE("small QBF encodings") {
    CHECK(eval_qbf2(qbf({{1, 2}})));
    CHECK(all_repair(encode_qbf_allrepair(qbf({{1, 2}})).instance, "s_phi"));
    CHECK_FALSE(eval_qbf2(qbf({{1}})));
    CHECK_FALSE(all_repair(encode_qbf_allrepair(qbf({{1}})).instance, "s_phi"));
    CHECK(eval_qbf2(qbf({{2, -2}})));
    CHECK_FALSE(eval_qbf2(qbf({{1}, {-1}})));
  }

  TEST_CASE("duplicate literals collapse, tautologies are harmless") {
    CnfFormula dup{1, {{1, 1}}, {}};
    EncodedInstance enc = encode_sat_somerepair(dup);
    CHECK(enc.instance.database().tuple("s_x1").at("t1") == "c1");
    CnfFormula taut{1, {{1, -1}}, {}};
    EncodedInstance t = encode_sat_somerepair(taut);
    CHECK(t.instance.database().tuple("s_x1").at("t1") == "c1");
    CHECK(t.instance.database().tuple("ns_x1").at("t1") == "c1");
    CHECK(some_repair(t.instance, "s_phi"));
  }

  TEST_CASE("variables outside every clause still get tuples") {
    CnfFormula phi{3, {{1}}, {}};
    EncodedInstance enc = encode_sat_somerepair(phi);
    CHECK(enc.instance.database().contains("s_x3"));
    CHECK(enc.instance.database().contains("ns_x3"));
    CHECK(enc.variable_tuples.size() == 3);
  }

  TEST_CASE("formula validation") {
    CHECK_THROWS_AS(encode_sat_somerepair(CnfFormula{1, {{}}, {}}), DomainError);
    CHECK_THROWS_AS(encode_sat_somerepair(CnfFormula{1, {{2}}, {}}), DomainError);
    CHECK_THROWS_AS(encode_sat_somerepair(CnfFormula{1, {{0}}, {}}), DomainError);
    CHECK_THROWS_AS(encode_sat_somerepair(CnfFormula{1, {{1}}, {"c1"}}), DomainError);
    CHECK_THROWS_AS(encode_sat_somerepair(CnfFormula{2, {{1}}, {"a", "a"}}), DomainError);
    CHECK_THROWS_AS(encode_sat_somerepair(CnfFormula{1, {{1}}, {"phi"}}), DomainError);
    Qbf2Formula overlap = example5();
    overlap.existential = {2, 3, 4};
    CHECK_THROWS_AS(encode_qbf_allrepair(overlap), DomainError);
    Qbf2Formula free_var = example5();
    free_var.existential = {3};
    CHECK_THROWS_AS(eval_qbf2(free_var), DomainError);
  }

  TEST_CASE("evaluators") {
    CHECK(eval_cnf(example4(), {{1, false}, {2, true}}));
    CHECK_FALSE(eval_cnf(example4(), {{1, true}, {2, true}}));
    CHECK(eval_cnf(CnfFormula{2, {}, {}}, {{1, false}, {2, false}}));
    CHECK_FALSE(eval_cnf(CnfFormula{2, {{1, 2}}, {}}, {{1, false}, {2, false}}));
    CHECK_THROWS_AS(eval_cnf(example4(), {{1, true}}), DomainError);
    CHECK(cnf_satisfiable(example4()));
    CHECK_THROWS_AS(cnf_satisfiable(CnfFormula{25, {{1}}, {}}), ResourceError);
    Qbf2Formula big;
    for (int v = 1; v <= 17; ++v) (v <= 9 ? big.universal : big.existential).push_back(v);
    big.matrix = CnfFormula{17, {{1}}, {}};
    CHECK_THROWS_AS(eval_qbf2(big), ResourceError);
  }

  TEST_CASE("repairs containing s_phi are satisfying assignments") {
    testsupport::Rng rng(6006);
    for (int trial = 0; trial < 150; ++trial) {
      CnfFormula phi = testsupport::random_cnf(rng, 5, 5);
      EncodedInstance enc = encode_sat_somerepair(phi);
      auto repairs = testsupport::repairs_by_definition(enc.instance);
      std::size_t with_phi = 0;
      for (const auto& r : repairs) {
        if (!std::binary_search(r.begin(), r.end(), enc.distinguished)) continue;
        ++with_phi;
        Assignment a;
        for (const auto& [name, pair] : enc.variable_tuples) {
          bool pos = std::binary_search(r.begin(), r.end(), pair.first);
          bool neg = std::binary_search(r.begin(), r.end(), pair.second);
          CHECK(pos != neg);
          int v = std::stoi(name.substr(1));
          a[v] = pos;
        }
        CHECK(eval_cnf(phi, a));
      }
      CHECK((with_phi > 0) == cnf_satisfiable(phi));
    }
  }

  TEST_CASE("universal block alone is consistent") {
    testsupport::Rng rng(4711);
    for (int trial = 0; trial < 100; ++trial) {
      Qbf2Formula phi = testsupport::random_qbf(rng);
      EncodedInstance enc = encode_qbf_allrepair(phi);
      const std::size_t ny = phi.universal.size();
      for (std::uint32_t bits = 0; bits < (1u << ny); ++bits) {
        Ids p;
        for (std::size_t k = 0; k < ny; ++k) {
          const auto& pair = enc.variable_tuples.at(phi.matrix.variable_name(phi.universal[k]));
          p.push_back((bits >> k) & 1u ? pair.first : pair.second);
        }
        std::sort(p.begin(), p.end());
        CHECK(is_consistent(p, enc.instance));
        CHECK(testsupport::consistent_by_definition(enc.instance, p));
      }
    }
  }
}
