#include "logmc/arrangement.hpp"
#include "logmc/errors.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <numeric>
#include <random>
#include <sstream>

using namespace logmc;
using namespace logmc::testing;

namespace {

IntersectionLattice corpus_lattice(const std::string& name) {
  return build_lattice(read_arrangement_file(arrangement_path(name)));
}

Arrangement parse(const std::string& text) {
  std::istringstream in(text);
  return parse_arrangement(in);
}

}  // namespace

TEST_CASE("characteristic polynomials of the corpus") {
  // (t-1)(t-2)(t-3), (t-1)^3, (t-1)(t^2-3t+3), t(t-1)(t-2), (t-1)^2(t-2)
  CHECK(characteristic_polynomial(corpus_lattice("braid")) == int_poly({-6, 11, -6, 1}));
  CHECK(characteristic_polynomial(corpus_lattice("boolean3")) == int_poly({-1, 3, -3, 1}));
  CHECK(characteristic_polynomial(corpus_lattice("generic4")) == int_poly({-3, 6, -4, 1}));
  CHECK(characteristic_polynomial(corpus_lattice("concurrent3")) == int_poly({0, 2, -3, 1}));
  CHECK(characteristic_polynomial(corpus_lattice("concurrent3_cone")) == int_poly({-2, 5, -4, 1}));
  CHECK(characteristic_polynomial(corpus_lattice("empty")) == int_poly({0, 0, 0, 1}));
}

TEST_CASE("lattice sizes and top node") {
  const auto braid = corpus_lattice("braid");
  // V, 6 hyperplanes, 4 triple lines + 3 double lines, origin
  CHECK(braid.size() == 15);
  CHECK(braid[0].subspace.dim() == 3);
  CHECK(braid[0].mobius == 1);
  CHECK(braid.nodes().back().subspace.dim() == 0);

  const auto empty = corpus_lattice("empty");
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].hyperplanes.empty());
}

TEST_CASE("nodes are sorted by descending dimension then equations") {
  for (const auto& name : corpus_arrangements()) {
    const auto lattice = corpus_lattice(name);
    for (std::size_t i = 1; i < lattice.size(); ++i)
      CHECK(lattice_order_less(lattice[i - 1].subspace, lattice[i].subspace));
  }
}

TEST_CASE("Moebius function satisfies its defining recursion") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const auto arr = random_arrangement(rng, 2 + trial % 3, 3 + trial % 5, 2);
    const auto lattice = build_lattice(arr);
    for (std::size_t x = 0; x < lattice.size(); ++x) {
      if (lattice[x].hyperplanes.size() == 1) CHECK(lattice[x].mobius == -1);
      if (x == 0) continue;
      Integer sum = 0;
      for (std::size_t z = 0; z < lattice.size(); ++z)
        if (lattice.contains(z, x)) sum += lattice[z].mobius;
      CHECK(sum == 0);
    }
  }
}

TEST_CASE("lattice agrees with the brute-force Whitney oracle") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t dim = 2 + trial % 3;
    const auto arr = random_arrangement(rng, dim, 2 + trial % 7, 2);
    const auto lattice = build_lattice(arr);
    const auto oracle = whitney_oracle(arr);
    CHECK(characteristic_polynomial(lattice) == oracle.chi);
    std::map<std::vector<std::size_t>, Integer> mobius;
    for (const auto& node : lattice.nodes()) mobius[node.hyperplanes] = node.mobius;
    std::erase_if(mobius, [](const auto& kv) { return kv.second == 0; });
    CHECK(mobius == oracle.mobius);
  }
  for (const auto& name : corpus_arrangements()) {
    const auto arr = read_arrangement_file(arrangement_path(name));
    CHECK(characteristic_polynomial(build_lattice(arr)) == whitney_oracle(arr).chi);
  }
}

TEST_CASE("lattice is independent of form order and scaling") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    const auto arr = random_arrangement(rng, 3, 6, 3);
    IntegerMatrix forms = arr.forms();
    std::shuffle(forms.begin(), forms.end(), rng);
    for (auto& f : forms)
      for (auto& v : f) v *= -(trial % 4 + 1);
    const auto a = build_lattice(arr);
    const auto b = build_lattice(Arrangement(3, forms));
    REQUIRE(a.size() == b.size());
    CHECK(characteristic_polynomial(a) == characteristic_polynomial(b));
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].subspace == b[i].subspace);
      CHECK(a[i].mobius == b[i].mobius);
    }
  }
}

TEST_CASE("deleting a hyperplane never enlarges the lattice") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto arr = random_arrangement(rng, 3, 7, 2);
    if (arr.size() < 2) continue;
    IntegerMatrix forms = arr.forms();
    forms.pop_back();
    CHECK(build_lattice(Arrangement(3, forms)).size() <= build_lattice(arr).size());
  }
}

TEST_CASE("characteristic polynomial invariants") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t dim = 2 + trial % 3;
    const auto arr = random_arrangement(rng, dim, 1 + trial % 6, 2);
    const auto chi = characteristic_polynomial(build_lattice(arr));
    CHECK(chi.is_monic());
    CHECK(chi.degree() == static_cast<long>(dim));
    CHECK(chi.coeff(dim - 1) == -static_cast<long>(arr.size()));
    if (!arr.empty()) CHECK(chi.evaluate(1) == 0);
  }
}

TEST_CASE("RREF matches a naive rational Gauss-Jordan") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + trial % 4;
    const std::size_t cols = 1 + (trial / 4) % 5;
    IntegerMatrix m(rows, std::vector<Integer>(cols));
    for (auto& r : m)
      for (auto& v : r) v = trial % 3 == 0 ? entry(rng) % 2 : entry(rng);
    CHECK(reduced_row_echelon(m) == naive_rref(m));
  }
  CHECK(reduced_row_echelon({}).empty());
  CHECK(reduced_row_echelon({{0, 0}, {0, 0}}).empty());
}

TEST_CASE("subspace membership") {
  const auto s = Subspace::cut_out_by(3, {{1, 0, 0}, {0, 1, -1}});
  CHECK(s.dim() == 1);
  CHECK(s.annihilated_by(std::vector<Integer>{2, 3, -3}));
  CHECK_FALSE(s.annihilated_by(std::vector<Integer>{0, 0, 1}));
  CHECK(s.intersect(std::vector<Integer>{0, 0, 1}).dim() == 0);
  CHECK(s.intersect(std::vector<Integer>{1, 1, -1}) == s);
}

TEST_CASE("Terao factorization") {
  SUBCASE("braid") {
    const auto r = exponents_via_terao(int_poly({-6, 11, -6, 1}));
    CHECK(r.splits);
    CHECK(r.roots == Exponents{1, 2, 3});
  }
  SUBCASE("boolean") {
    const auto r = exponents_via_terao(int_poly({-1, 3, -3, 1}));
    CHECK(r.splits);
    CHECK(r.roots == Exponents{1, 1, 1});
  }
  SUBCASE("generic four lines does not split") {
    const auto r = exponents_via_terao(int_poly({-3, 6, -4, 1}));
    CHECK_FALSE(r.splits);
    CHECK(r.roots == Exponents{1});
    CHECK(r.remaining == int_poly({3, -3, 1}));
  }
  SUBCASE("non-essential arrangement has root 0") {
    const auto r = exponents_via_terao(int_poly({0, 2, -3, 1}));
    CHECK(r.splits);
    CHECK(r.roots == Exponents{0, 1, 2});
  }
  SUBCASE("empty arrangement") {
    const auto r = exponents_via_terao(int_poly({0, 0, 0, 1}));
    CHECK(r.splits);
    CHECK(r.roots == Exponents{0, 0, 0});
  }
  SUBCASE("bad input") {
    CHECK_THROWS_AS(exponents_via_terao(int_poly({1, 2})), ValidationError);
    CHECK_THROWS_AS(exponents_via_terao(int_poly({1, -3, 1})), InconsistencyError);
  }
}

TEST_CASE("exponent formatting") {
  CHECK(format_exponents({1, 2, 3}) == "{1,2,3}");
  CHECK(parse_exponents("{3,1,2}") == Exponents{1, 2, 3});
  CHECK(parse_exponents(" 1, 1 ,1") == Exponents{1, 1, 1});
  CHECK_THROWS_AS(parse_exponents("1,,2"), ParseError);
  CHECK_THROWS_AS(parse_exponents("a"), ParseError);
  CHECK_THROWS_AS(parse_exponents(""), ParseError);
}

TEST_CASE("arrangement validation") {
  CHECK_THROWS_AS(Arrangement(3, {{0, 0, 0}}), ValidationError);
  CHECK_THROWS_AS(Arrangement(3, {{1, 0}}), ValidationError);
  CHECK_THROWS_AS(Arrangement(3, {{1, 2, 0}, {-2, -4, 0}}), ValidationError);
  const Arrangement a(2, {{-2, 4}});
  CHECK(a.forms() == IntegerMatrix{{1, -2}});
}

TEST_CASE("arrangement parsing") {
  const auto a = parse("# comment\n3\n1 0 0  # x\n\n0 1 0\n");
  CHECK(a.ambient_dim() == 3);
  CHECK(a.size() == 2);
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("3\n1 0\n"), ValidationError);
  CHECK_THROWS_AS(parse("3\n1 0 x\n"), ParseError);
  CHECK_THROWS_AS(parse("0\n"), ParseError);
  CHECK_THROWS_AS(read_arrangement_file("/nonexistent/file.arr"), ParseError);
  try {
    parse("2\n1 0\n1 q\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("node cap") {
  const auto braid = read_arrangement_file(arrangement_path("braid"));
  CHECK_THROWS_AS(build_lattice(braid, 5), ValidationError);
  CHECK(build_lattice(braid, 15).size() == 15);
}
