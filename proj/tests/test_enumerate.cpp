#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "inv321/enumerate.hpp"
#include "oracles.hpp"

using inv321::Permutation;

namespace {
Permutation perm(std::vector<int> v) { return Permutation(std::move(v)); }

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}
}  // namespace

TEST_CASE("generation basics") {
  const auto n1 = inv321::involutions_avoiding_321(1);
  REQUIRE(n1.size() == 1);
  CHECK(n1[0] == perm({1}));

  const auto n3 = inv321::involutions_avoiding_321(3);
  REQUIRE(n3.size() == 3);
  CHECK(n3[0] == perm({1, 2, 3}));
  CHECK(n3[1] == perm({1, 3, 2}));
  CHECK(n3[2] == perm({2, 1, 3}));

  CHECK(inv321::involutions_avoiding_321(6).size() == 20);
  CHECK_THROWS_AS(inv321::involutions_avoiding_321(0), std::invalid_argument);
}

TEST_CASE("counts follow the central binomial law, n <= 16") {
  for (int n = 1; n <= 16; ++n) {
    long long count = 0;
    inv321::for_each_involution_avoiding_321(n, [&](const Permutation&) { ++count; });
    CHECK(count == binom(n, n / 2));
  }
}

TEST_CASE("generator matches filtering all involutions, n <= 10") {
  for (int n = 1; n <= 10; ++n) {
    std::set<std::vector<int>> filtered;
    oracles::for_each_involution(n, [&](const Permutation& p) {
      if (!oracles::has_descending_triple(p)) filtered.insert(p.values());
    });
    std::set<std::vector<int>> generated;
    inv321::for_each_involution_avoiding_321(n, [&](const Permutation& p) {
      REQUIRE(generated.insert(p.values()).second);  // no duplicates
    });
    REQUIRE(generated == filtered);
  }
}

TEST_CASE("class tallies") {
  const auto t10 = inv321::count_classes(10);
  CHECK(t10.simple == 3);
  CHECK(t10.total == 252);

  const auto t8 = inv321::count_classes(8);
  CHECK(t8.inflation_of_simple == 3);

  const auto t12 = inv321::count_classes(12);
  CHECK(t12.simple == 6);

  for (int n = 1; n <= 12; ++n) {
    const auto t = inv321::count_classes(n);
    CHECK(t.total == t.singleton + t.type12 + t.type21 + t.simple + t.inflation_of_simple);
    CHECK(t.singleton == (n == 1 ? 1 : 0));
    CHECK(t.type21 == (n >= 2 && n % 2 == 0 ? 1 : 0));
  }
}

TEST_CASE("only skew-type element is the block transposition") {
  for (int m = 1; m <= 7; ++m) {
    const int n = 2 * m;
    std::vector<int> expect;
    for (int v = m + 1; v <= n; ++v) expect.push_back(v);
    for (int v = 1; v <= m; ++v) expect.push_back(v);
    int found = 0;
    inv321::for_each_involution_avoiding_321(n, [&](const Permutation& p) {
      if (inv321::classify(p).kind == inv321::NodeKind::Skew) {
        ++found;
        REQUIRE(p == perm(expect));
      }
    });
    REQUIRE(found == 1);
  }
}

TEST_CASE("separable intersection counts") {
  CHECK(inv321::count_separable_intersection(1) == 1);
  CHECK(inv321::count_separable_intersection(4) == 6);
  // diverges from the full count at n = 7: two involutions nest a simple block
  CHECK(inv321::count_separable_intersection(6) == 19);
  CHECK(inv321::count_separable_intersection(7) == 33);
}

TEST_CASE("golden fixtures match the enumeration") {
  const std::string dir = INV321_FIXTURE_DIR;
  for (int n : {6, 8, 10, 12, 14}) {
    const auto cmp = inv321::golden_fixture_check(
        n, dir + "/simple_involutions_n" + std::to_string(n) + ".txt");
    INFO("n = " << n << "\nexpected:\n" << cmp.expected << "actual:\n" << cmp.actual);
    CHECK(cmp.matches);
  }
  const auto entries =
      inv321::load_fixture_file(dir + "/simple_involutions_n14.txt");
  CHECK(entries.size() == 15);
}
