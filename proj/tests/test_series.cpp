#include <catch2/catch_amalgamated.hpp>

#include "inv321/enumerate.hpp"
#include "inv321/series.hpp"
#include "oracles.hpp"

using inv321::Integer;
using inv321::PowerSeries;
using inv321::Rational;
using inv321::SeriesName;

namespace {

PowerSeries poly(std::vector<Rational> cs, int order) {
  return PowerSeries(order, std::move(cs));
}

Integer coeff_int(const PowerSeries& s, int i) {
  const Rational& c = s.coeff(i);
  REQUIRE(boost::multiprecision::denominator(c) == 1);
  return boost::multiprecision::numerator(c);
}

// even part of a series in x, reindexed as a series in t = x^2
PowerSeries even_part(const PowerSeries& s) {
  PowerSeries out(s.order() / 2);
  for (int k = 0; 2 * k <= s.order(); ++k) out.set_coeff(k, s.coeff(2 * k));
  return out;
}

}  // namespace

TEST_CASE("ring arithmetic basics") {
  const int N = 12;
  const PowerSeries beta = inv321::ps_div(poly({0, 0, 1}, N), poly({1, 0, -1}, N));
  for (int i = 0; i <= N; ++i)
    CHECK(beta.coeff(i) == ((i >= 2 && i % 2 == 0) ? 1 : 0));

  const PowerSeries a = poly({2, -1, 3}, N);
  CHECK(a * PowerSeries::constant(1, N) == a);
  CHECK(poly({0, 1, 1}, N) * PowerSeries::monomial(1, 1, N) == poly({0, 0, 1, 1}, N));
}

TEST_CASE("division handles shared valuation and rejects the rest") {
  const int N = 10;
  // (x^2 + x^3) / (x + x^2) = x
  CHECK(inv321::ps_div(poly({0, 0, 1, 1}, N), poly({0, 1, 1}, N)) ==
        PowerSeries::monomial(1, 1, N - 1));
  CHECK_THROWS_AS(inv321::ps_div(poly({0, 1}, N), poly({0, 0, 1}, N)),
                  std::invalid_argument);
  CHECK_THROWS_AS(inv321::ps_div(poly({1}, N), PowerSeries(N)), std::invalid_argument);
}

TEST_CASE("square root") {
  const int N = 16;
  const PowerSeries s = inv321::ps_sqrt(poly({1, 0, -4}, N));
  CHECK(s.coeff(0) == 1);
  CHECK(s.coeff(2) == -2);
  CHECK(s.coeff(4) == -2);
  CHECK(s.coeff(6) == -4);
  CHECK(s * s == poly({1, 0, -4}, N));

  CHECK(inv321::ps_sqrt(PowerSeries::constant(1, N)) == PowerSeries::constant(1, N));
  CHECK(inv321::ps_sqrt(poly({1, 2, 1}, N)) == poly({1, 1}, N));
  CHECK_THROWS_AS(inv321::ps_sqrt(poly({2}, N)), std::invalid_argument);
}

TEST_CASE("square root squares back on random polynomials") {
  oracles::Rng rng(7);
  for (int iter = 0; iter < 60; ++iter) {
    const int N = rng.uniform(4, 24);
    PowerSeries a(N);
    a.set_coeff(0, 1);
    for (int i = 1; i <= N; ++i)
      a.set_coeff(i, Rational(rng.uniform(-9, 9), 1 + rng.uniform(0, 3)));
    const PowerSeries s = inv321::ps_sqrt(a);
    REQUIRE(s * s == a);
  }
}

TEST_CASE("composition") {
  const int N = 12;
  const PowerSeries geom = inv321::ps_div(poly({1}, N), poly({1, -1}, N));
  const PowerSeries composed = inv321::ps_compose(geom, poly({0, 0, 1}, N));
  for (int i = 0; i <= N; ++i)
    CHECK(composed.coeff(i) == (i % 2 == 0 ? 1 : 0));

  const PowerSeries any = poly({3, -2, 5, 7}, N);
  CHECK(inv321::ps_compose(any, PowerSeries::monomial(1, 1, N)) == any);
  CHECK_THROWS_AS(inv321::ps_compose(any, poly({1, 1}, N)), std::invalid_argument);
}

TEST_CASE("composition with the identity and products, randomized") {
  oracles::Rng rng(11);
  for (int iter = 0; iter < 40; ++iter) {
    const int N = rng.uniform(4, 16);
    PowerSeries a(N), b(N), inner(N);
    for (int i = 0; i <= N; ++i) {
      a.set_coeff(i, rng.uniform(-6, 6));
      b.set_coeff(i, rng.uniform(-6, 6));
      if (i > 0) inner.set_coeff(i, rng.uniform(-6, 6));
    }
    // (a*b) o inner == (a o inner) * (b o inner)
    REQUIRE(inv321::ps_compose(a * b, inner) ==
            inv321::ps_compose(a, inner) * inv321::ps_compose(b, inner));
  }
}

TEST_CASE("expansion of f") {
  const PowerSeries f = inv321::expand_series(SeriesName::F, 17);
  const std::vector<long long> want{1,    2,    3,    6,    10,   20,
                                    35,   70,   126,  252,  462,  924,
                                    1716, 3432, 6435, 12870, 24310};
  CHECK(f.coeff(0) == 0);
  for (int n = 1; n <= 17; ++n)
    CHECK(coeff_int(f, n) == want[static_cast<std::size_t>(n - 1)]);

  const PowerSeries f40 = inv321::expand_series(SeriesName::F, 40);
  for (int n = 1; n <= 40; ++n)
    CHECK(coeff_int(f40, n) == inv321::binomial(n, n / 2));
}

TEST_CASE("expansion of phi and its recurrence") {
  const PowerSeries phi = inv321::expand_series(SeriesName::Phi, 17);
  const std::vector<long long> want{1,   2,    3,    6,    10,   19,
                                    33,  61,   108,  197,  352,  638,
                                    1145, 2069, 3721, 6714, 12087};
  for (int n = 1; n <= 17; ++n)
    CHECK(coeff_int(phi, n) == want[static_cast<std::size_t>(n - 1)]);

  const auto rec = inv321::phi_recurrence(40);
  CHECK(rec[3] == 6);  // 3 + 2*2 - 1
  const PowerSeries phi40 = inv321::expand_series(SeriesName::Phi, 40);
  for (int n = 1; n <= 40; ++n)
    CHECK(coeff_int(phi40, n) == rec[static_cast<std::size_t>(n - 1)]);
}

TEST_CASE("expansion of alpha") {
  const PowerSeries alpha = inv321::expand_series(SeriesName::Alpha, 20);
  const std::vector<long long> want{1,    3,    5,     10,    18,    35,
                                    65,   126,  238,   462,   882,   1716,
                                    3300, 6435, 12441, 24310, 47190, 92378,
                                    179894};
  CHECK(alpha.coeff(1) == 0);
  for (int n = 2; n <= 20; ++n)
    CHECK(coeff_int(alpha, n) == want[static_cast<std::size_t>(n - 2)]);
}

TEST_CASE("expansions of zeta, gamma, delta") {
  const PowerSeries zeta = inv321::expand_series(SeriesName::Zeta, 20);
  const std::vector<long long> zs{1, 4, 13, 41, 131, 428, 1429, 4861};
  for (int n = 1; n <= 20; ++n) {
    if (n < 6 || n % 2 == 1)
      CHECK(zeta.coeff(n) == 0);
    else
      CHECK(coeff_int(zeta, n) == zs[static_cast<std::size_t>((n - 6) / 2)]);
  }

  const PowerSeries gamma = inv321::expand_series(SeriesName::Gamma, 24);
  const std::vector<long long> gs{1, 1, 3, 6, 15, 36, 91, 232, 603, 1585};
  for (int n = 1; n <= 24; ++n) {
    if (n < 6 || n % 2 == 1)
      CHECK(gamma.coeff(n) == 0);
    else
      CHECK(coeff_int(gamma, n) == gs[static_cast<std::size_t>((n - 6) / 2)]);
  }

  const PowerSeries delta = inv321::expand_series(SeriesName::Delta, 40);
  const std::vector<long long> ds{3,       10,      35,       116,      392,
                                  1338,    4629,    16192,    57200,    203798,
                                  731601,  2643902, 9611747,  35130194, 129018797,
                                  475907912, 1762457594};
  for (int n = 1; n <= 40; ++n) {
    if (n < 8 || n % 2 == 1)
      CHECK(delta.coeff(n) == 0);
    else
      CHECK(coeff_int(delta, n) == ds[static_cast<std::size_t>((n - 8) / 2)]);
  }
}

TEST_CASE("f - gamma expansion") {
  const PowerSeries fg = inv321::expand_series(SeriesName::FMinusGamma, 20);
  const std::vector<long long> want{1,    2,    3,    6,    10,    19,   35,
                                    69,   126,  249,  462,  918,   1716, 3417,
                                    6435, 12834, 24310, 48529, 92378, 184524};
  for (int n = 1; n <= 20; ++n)
    CHECK(coeff_int(fg, n) == want[static_cast<std::size_t>(n - 1)]);
}

TEST_CASE("epsilon and omega") {
  const PowerSeries f = inv321::expand_series(SeriesName::F, 40);
  const PowerSeries eps = inv321::expand_series(SeriesName::Epsilon, 40);
  const PowerSeries omega = inv321::expand_series(SeriesName::Omega, 40);
  const PowerSeries x2 = PowerSeries::monomial(2, 1, 40);

  CHECK((eps + omega - f).is_zero());
  CHECK((eps - x2 * omega).is_zero());
  for (int m = 1; m <= 20; ++m) {
    CHECK(coeff_int(eps, 2 * m) == inv321::binomial(2 * m, m));
    CHECK(eps.coeff(2 * m - 1) == 0);
    if (2 * m + 1 <= 40)
      CHECK(coeff_int(omega, 2 * m + 1) == inv321::binomial(2 * m + 1, m));
    CHECK(omega.coeff(2 * m) == 0);
  }

  // the printed radical for epsilon has constant term 2 and is not the series
  const PowerSeries printed = inv321::epsilon_as_printed(20);
  CHECK(printed.coeff(0) == 2);
  CHECK_FALSE((printed - eps.truncated(20)).is_zero());
}

TEST_CASE("first nonzero coefficient indices") {
  const std::vector<std::pair<SeriesName, int>> expect{
      {SeriesName::F, 1},       {SeriesName::Alpha, 2}, {SeriesName::Beta, 2},
      {SeriesName::Zeta, 6},    {SeriesName::Gamma, 6}, {SeriesName::Delta, 8},
      {SeriesName::Epsilon, 2}, {SeriesName::Omega, 1}, {SeriesName::Phi, 1},
      {SeriesName::FMinusGamma, 1}};
  for (auto [name, val] : expect)
    CHECK(inv321::expand_series(name, 12).valuation() == val);
}

TEST_CASE("all named coefficients are integers through order 40") {
  for (SeriesName name :
       {SeriesName::Phi, SeriesName::F, SeriesName::Alpha, SeriesName::Beta,
        SeriesName::Gamma, SeriesName::Delta, SeriesName::Zeta,
        SeriesName::Epsilon, SeriesName::Omega, SeriesName::FMinusGamma}) {
    const PowerSeries s = inv321::expand_series(name, 40);
    for (int n = 0; n <= 40; ++n)
      CHECK(boost::multiprecision::denominator(s.coeff(n)) == 1);
  }
}

TEST_CASE("gamma arises from zeta by the rational substitution") {
  // gamma(x^2) = zeta(x^2 / (1 + x^2)), as series in t = x^2
  const int K = 15;
  const PowerSeries zeta_t = even_part(inv321::expand_series(SeriesName::Zeta, 2 * K));
  const PowerSeries gamma_t = even_part(inv321::expand_series(SeriesName::Gamma, 2 * K));
  const PowerSeries inner =
      inv321::ps_div(PowerSeries::monomial(1, 1, K), poly({1, 1}, K));
  CHECK(inv321::ps_compose(zeta_t, inner) == gamma_t);

  // and the substituted polynomial (1+x^2) g^2 + (-1+x^2+2x^4) g + x^6 vanishes
  const int N = 40;
  const PowerSeries g = inv321::expand_series(SeriesName::Gamma, N);
  const PowerSeries res = poly({1, 0, 1}, N) * (g * g) +
                          poly({-1, 0, 1, 0, 2}, N) * g +
                          PowerSeries::monomial(1, 6, N);
  CHECK(res.is_zero());
}

TEST_CASE("residuals of every relation vanish through order 40") {
  using inv321::RelationSystem;
  for (RelationSystem sys :
       {RelationSystem::Sys1, RelationSystem::Sys2, RelationSystem::Sys3,
        RelationSystem::Sys4, RelationSystem::Rel5, RelationSystem::FPoly,
        RelationSystem::AlphaPoly}) {
    const auto residuals = inv321::relation_residuals(sys, 40);
    CHECK_FALSE(residuals.empty());
    for (const auto& r : residuals) {
      INFO(inv321::to_string(sys));
      CHECK(r.is_zero());
    }
  }
}

TEST_CASE("double-sum formula for the inflation coefficients") {
  const PowerSeries gamma = inv321::expand_series(SeriesName::Gamma, 40);
  CHECK(inv321::theorem51_delta(4, gamma) == 3);
  CHECK(inv321::theorem51_delta(5, gamma) == 10);
  CHECK(inv321::theorem51_delta(6, gamma) == 35);

  const PowerSeries zeta = inv321::expand_series(SeriesName::Zeta, 40);
  for (int n = 4; n <= 20; ++n) {
    const Integer lhs = inv321::theorem51_delta(n, gamma);
    const Integer rhs = coeff_int(zeta, 2 * n) - coeff_int(gamma, 2 * n);
    REQUIRE(lhs == rhs);
  }
  CHECK_THROWS_AS(inv321::theorem51_delta(3, gamma), std::invalid_argument);
  CHECK_THROWS_AS(inv321::theorem51_delta(25, gamma), std::invalid_argument);
}

TEST_CASE("tallies agree with the series coefficients, n <= 12") {
  const int N = 12;
  const PowerSeries alpha = inv321::expand_series(SeriesName::Alpha, N);
  const PowerSeries beta = inv321::expand_series(SeriesName::Beta, N);
  const PowerSeries gamma = inv321::expand_series(SeriesName::Gamma, N);
  const PowerSeries delta = inv321::expand_series(SeriesName::Delta, N);
  const PowerSeries eps = inv321::expand_series(SeriesName::Epsilon, N);
  const PowerSeries omega = inv321::expand_series(SeriesName::Omega, N);
  const PowerSeries f = inv321::expand_series(SeriesName::F, N);

  for (int n = 1; n <= N; ++n) {
    const auto t = inv321::count_classes(n);
    CHECK(coeff_int(f, n) == t.total);
    CHECK(coeff_int(alpha, n) == t.type12);
    CHECK(coeff_int(beta, n) == t.type21);
    CHECK(coeff_int(gamma, n) == t.simple);
    CHECK(coeff_int(delta, n) == t.inflation_of_simple);
    CHECK(coeff_int(n % 2 == 0 ? eps : omega, n) == t.total);
  }
}

TEST_CASE("series exports") {
  const PowerSeries f = inv321::expand_series(SeriesName::F, 5);
  CHECK(inv321::series_to_json(f) == R"(["1","2","3","6","10"])");
  CHECK(inv321::series_to_csv(f) == "n,coefficient\n1,1\n2,2\n3,3\n4,6\n5,10\n");
}
