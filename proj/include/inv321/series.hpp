#pragma once

// Exact truncated power series over big rationals, the closed-form
// expansions of every named generating function, the double-sum formula for
// the inflation coefficients, and residual checks of the polynomial systems
// relating the named series. No floating point anywhere in this module.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace inv321 {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact at every step
  }
  return r;
}

/// Dense power series c_0 + c_1 x + ... + c_N x^N with exact rational
/// coefficients; N is the truncation order. Binary operations truncate to
/// the smaller operand order and never silently extend.
class PowerSeries {
public:
  explicit PowerSeries(int order)
      : coeffs_(static_cast<std::size_t>(check_order(order)) + 1) {}

  PowerSeries(int order, std::vector<Rational> low_coeffs) : PowerSeries(order) {
    if (low_coeffs.size() > coeffs_.size())
      throw std::invalid_argument("series: more coefficients than the order allows");
    std::copy(low_coeffs.begin(), low_coeffs.end(), coeffs_.begin());
  }

  static PowerSeries constant(const Rational& c, int order) {
    PowerSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }

  static PowerSeries monomial(const Rational& c, int degree, int order) {
    PowerSeries s(order);
    if (degree <= order) s.coeffs_[static_cast<std::size_t>(degree)] = c;
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  const Rational& coeff(int i) const {
    if (i < 0 || i > order())
      throw std::out_of_range("series: coefficient index outside truncation order");
    return coeffs_[static_cast<std::size_t>(i)];
  }

  void set_coeff(int i, const Rational& c) {
    if (i < 0 || i > order())
      throw std::out_of_range("series: coefficient index outside truncation order");
    coeffs_[static_cast<std::size_t>(i)] = c;
  }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  /// Index of the first nonzero coefficient; order() + 1 when identically zero.
  int valuation() const {
    for (int i = 0; i <= order(); ++i)
      if (coeffs_[static_cast<std::size_t>(i)] != 0) return i;
    return order() + 1;
  }

  PowerSeries truncated(int new_order) const {
    if (new_order > order())
      throw std::invalid_argument("series: cannot extend truncation order");
    PowerSeries s(new_order);
    for (int i = 0; i <= new_order; ++i) s.coeffs_[static_cast<std::size_t>(i)] = coeff(i);
    return s;
  }

  /// Divide by x^k; requires the low-order coefficients to vanish.
  PowerSeries shifted_down(int k) const {
    if (k < 0 || k > order())
      throw std::invalid_argument("series: bad shift");
    for (int i = 0; i < k; ++i)
      if (coeff(i) != 0)
        throw std::invalid_argument("series: shifting away a nonzero coefficient");
    PowerSeries s(order() - k);
    for (int i = 0; i + k <= order(); ++i)
      s.coeffs_[static_cast<std::size_t>(i)] = coeff(i + k);
    return s;
  }

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order(), b.order());
    PowerSeries s(n);
    for (int i = 0; i <= n; ++i) s.coeffs_[static_cast<std::size_t>(i)] = a.coeff(i) + b.coeff(i);
    return s;
  }

  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order(), b.order());
    PowerSeries s(n);
    for (int i = 0; i <= n; ++i) s.coeffs_[static_cast<std::size_t>(i)] = a.coeff(i) - b.coeff(i);
    return s;
  }

  friend PowerSeries operator-(const PowerSeries& a) {
    PowerSeries s(a.order());
    for (int i = 0; i <= a.order(); ++i) s.coeffs_[static_cast<std::size_t>(i)] = -a.coeff(i);
    return s;
  }

  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order(), b.order());
    PowerSeries s(n);
    for (int i = 0; i <= n; ++i) {
      if (a.coeff(i) == 0) continue;
      for (int j = 0; i + j <= n; ++j) {
        if (b.coeff(j) == 0) continue;
        s.coeffs_[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
      }
    }
    return s;
  }

  friend PowerSeries operator*(const Rational& c, const PowerSeries& a) {
    PowerSeries s(a.order());
    for (int i = 0; i <= a.order(); ++i) s.coeffs_[static_cast<std::size_t>(i)] = c * a.coeff(i);
    return s;
  }

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

private:
  static int check_order(int order) {
    if (order < 0) throw std::invalid_argument("series: negative order");
    return order;
  }
  std::vector<Rational> coeffs_;
};

/// Quotient to the common truncation order. A zero constant term in the
/// divisor is allowed only when the dividend shares (at least) the same
/// valuation: the common power of x is cancelled explicitly first, and the
/// result order shrinks by that valuation.
inline PowerSeries ps_div(const PowerSeries& a, const PowerSeries& b) {
  const int vb = b.valuation();
  if (vb > b.order())
    throw std::invalid_argument("ps_div: division by the zero series");
  PowerSeries num = a, den = b;
  if (vb > 0) {
    if (a.valuation() < vb)
      throw std::invalid_argument("ps_div: divisor valuation exceeds dividend valuation");
    num = a.shifted_down(vb);
    den = b.shifted_down(vb);
  }
  const int n = std::min(num.order(), den.order());
  PowerSeries q(n);
  const Rational b0 = den.coeff(0);
  for (int k = 0; k <= n; ++k) {
    Rational acc = num.coeff(k);
    for (int j = 1; j <= k; ++j) acc -= den.coeff(j) * q.coeff(k - j);
    q.set_coeff(k, acc / b0);
  }
  return q;
}

/// Square root with constant term 1, by coefficient recursion:
/// 2 s_k = a_k - sum_{j=1}^{k-1} s_j s_{k-j}.
inline PowerSeries ps_sqrt(const PowerSeries& a) {
  if (a.coeff(0) != 1)
    throw std::invalid_argument("ps_sqrt: constant term must be 1");
  const int n = a.order();
  PowerSeries s(n);
  s.set_coeff(0, 1);
  for (int k = 1; k <= n; ++k) {
    Rational acc = a.coeff(k);
    for (int j = 1; j < k; ++j) acc -= s.coeff(j) * s.coeff(k - j);
    s.set_coeff(k, acc / 2);
  }
  return s;
}

/// outer(inner) for inner with zero constant term, by Horner evaluation.
inline PowerSeries ps_compose(const PowerSeries& outer, const PowerSeries& inner) {
  if (inner.coeff(0) != 0)
    throw std::invalid_argument("ps_compose: inner constant term must be 0");
  const int n = std::min(outer.order(), inner.order());
  PowerSeries acc = PowerSeries::constant(outer.coeff(n), n);
  for (int k = n - 1; k >= 0; --k)
    acc = acc * inner.truncated(n) + PowerSeries::constant(outer.coeff(k), n);
  return acc;
}

// ---------------------------------------------------------------------------
// Named series

enum class SeriesName {
  Phi,        // involutions whose simple quotients are only 1, 12, 21
  F,          // all involutions avoiding 321
  Alpha,      // type 12
  Beta,       // type 21
  Gamma,      // simple, length > 2
  Delta,      // inflations of simple, length > 2
  Zeta,       // gamma + delta
  Epsilon,    // even length
  Omega,      // odd length
  FMinusGamma
};

inline const char* to_string(SeriesName n) {
  switch (n) {
    case SeriesName::Phi: return "phi";
    case SeriesName::F: return "f";
    case SeriesName::Alpha: return "alpha";
    case SeriesName::Beta: return "beta";
    case SeriesName::Gamma: return "gamma";
    case SeriesName::Delta: return "delta";
    case SeriesName::Zeta: return "zeta";
    case SeriesName::Epsilon: return "epsilon";
    case SeriesName::Omega: return "omega";
    case SeriesName::FMinusGamma: return "f_minus_gamma";
  }
  return "?";
}

inline SeriesName series_name_from_string(const std::string& s) {
  for (SeriesName n : {SeriesName::Phi, SeriesName::F, SeriesName::Alpha,
                       SeriesName::Beta, SeriesName::Gamma, SeriesName::Delta,
                       SeriesName::Zeta, SeriesName::Epsilon, SeriesName::Omega,
                       SeriesName::FMinusGamma})
    if (s == to_string(n)) return n;
  throw std::invalid_argument("unknown series name: " + s);
}

struct NamedSeries {
  SeriesName name;
  PowerSeries series;
};

namespace detail {

// polynomial helper: c_0 + c_1 x + ... at a given order
inline PowerSeries poly(std::vector<Rational> cs, int order) {
  return PowerSeries(order, std::move(cs));
}

inline PowerSeries one_minus_4x2(int order) { return poly({1, 0, -4}, order); }

}  // namespace detail

/// Closed-form expansion. Internally a few orders of slack absorb the
/// valuation-cancelling divisions, so the returned series carries exactly
/// the requested order.
inline PowerSeries expand_series(SeriesName name, int order) {
  if (order < 1) throw std::invalid_argument("expand_series: order must be >= 1");
  const int N = order + 4;  // slack for shifts
  using detail::poly;

  auto result = [&](const PowerSeries& s) { return s.truncated(order); };

  switch (name) {
    case SeriesName::Beta:
      // 1/(1-x^2) - 1
      return result(ps_div(poly({0, 0, 1}, N), poly({1, 0, -1}, N)));
    case SeriesName::Phi:
      return result(ps_div(poly({0, 1, 1, -1}, N), poly({1, -1, -2, 1}, N)));
    case SeriesName::F: {
      const PowerSeries num =
          poly({1, 0, -4}, N) - ps_sqrt(detail::one_minus_4x2(N));
      return result(ps_div(num, poly({0, -2, 4}, N)));
    }
    case SeriesName::Alpha: {
      const PowerSeries num =
          poly({1, 1, -4, -4}, N) -
          ps_sqrt(poly({1, 2, -7, -12, 16, 16, -16}, N));
      return result(ps_div(num, poly({0, -2, 4}, N)));
    }
    case SeriesName::Zeta: {
      const PowerSeries num =
          poly({1, 0, -4, 0, 3}, N) -
          ps_sqrt(poly({1, 0, -8, 0, 22, 0, -28, 0, 17, 0, -4}, N));
      return result(ps_div(num, poly({2, 0, -4, 0, 2}, N)));
    }
    case SeriesName::Gamma: {
      const PowerSeries num =
          poly({1, 0, -1, 0, -2}, N) - ps_sqrt(poly({1, 0, -2, 0, -3}, N));
      return result(ps_div(num, poly({2, 0, 2}, N)));
    }
    case SeriesName::Delta:
      return expand_series(SeriesName::Zeta, order) -
             expand_series(SeriesName::Gamma, order);
    case SeriesName::Omega:
      return result(ps_div(expand_series(SeriesName::F, N), poly({1, 2}, N)));
    case SeriesName::Epsilon:
      return result(poly({0, 2}, N) *
                    ps_div(expand_series(SeriesName::F, N), poly({1, 2}, N)));
    case SeriesName::FMinusGamma:
      return expand_series(SeriesName::F, order) -
             expand_series(SeriesName::Gamma, order);
  }
  throw std::logic_error("unreachable");
}

inline NamedSeries expand_named(SeriesName name, int order) {
  return {name, expand_series(name, order)};
}

/// The printed closed form for the even-length series, reproduced verbatim
/// for the discrepancy report: (-1 - 4x^2 - sqrt(1-4x^2)) / (-1 + 4x^2).
/// Its constant term is 2, so it cannot equal the even-length generating
/// function; expand_series(Epsilon) uses 2x f / (1 + 2x) instead.
inline PowerSeries epsilon_as_printed(int order) {
  using detail::poly;
  const int N = order + 4;
  const PowerSeries num =
      poly({-1, 0, -4}, N) - ps_sqrt(detail::one_minus_4x2(N));
  return ps_div(num, poly({-1, 0, 4}, N)).truncated(order);
}

/// c_{n+3} = c_{n+2} + 2 c_{n+1} - c_n with seeds 1, 2, 3 as the
/// coefficients of x^1..x^3; returns coefficients for n = 1..N.
inline std::vector<Integer> phi_recurrence(int N) {
  if (N < 3) throw std::invalid_argument("phi_recurrence: need N >= 3");
  std::vector<Integer> c{1, 2, 3};
  while (static_cast<int>(c.size()) < N) {
    const std::size_t k = c.size();
    c.push_back(c[k - 1] + 2 * c[k - 2] - c[k - 3]);
  }
  return c;
}

/// delta_{2n} = sum_{i=1}^{n-3} gamma_{2(n-i)} sum_{j=0}^{i-1} C(i-1,j) C(n-i,j+1),
/// with C(h,k) = 0 for h < k. gamma coefficients must reach index 2(n-1).
inline Integer theorem51_delta(int n, const PowerSeries& gamma) {
  if (n < 4) throw std::invalid_argument("theorem51_delta: need n >= 4");
  if (gamma.order() < 2 * (n - 1))
    throw std::invalid_argument("theorem51_delta: gamma expansion too short");
  Integer total = 0;
  for (int i = 1; i <= n - 3; ++i) {
    const Rational& g = gamma.coeff(2 * (n - i));
    if (g == 0) continue;
    Integer inner = 0;
    for (int j = 0; j <= i - 1; ++j)
      inner += binomial(i - 1, j) * binomial(n - i, j + 1);
    total += boost::multiprecision::numerator(g) * inner;  // gamma is integral
  }
  return total;
}

// ---------------------------------------------------------------------------
// Residuals of the polynomial systems; each must vanish identically.

enum class RelationSystem { Sys1, Sys2, Sys3, Sys4, Rel5, FPoly, AlphaPoly };

inline const char* to_string(RelationSystem s) {
  switch (s) {
    case RelationSystem::Sys1: return "system(1)";
    case RelationSystem::Sys2: return "system(2)";
    case RelationSystem::Sys3: return "system(3)";
    case RelationSystem::Sys4: return "system(4)";
    case RelationSystem::Rel5: return "relation(5)";
    case RelationSystem::FPoly: return "f_polynomial";
    case RelationSystem::AlphaPoly: return "alpha_polynomial";
  }
  return "?";
}

/// One residual series per equation of the chosen system, all expanded to
/// the given order.
inline std::vector<PowerSeries> relation_residuals(RelationSystem system, int order) {
  using detail::poly;
  const int N = order;
  const PowerSeries x = PowerSeries::monomial(1, 1, N);

  const PowerSeries f = expand_series(SeriesName::F, N);
  const PowerSeries alpha = expand_series(SeriesName::Alpha, N);
  const PowerSeries beta = expand_series(SeriesName::Beta, N);
  const PowerSeries gamma = expand_series(SeriesName::Gamma, N);
  const PowerSeries delta = expand_series(SeriesName::Delta, N);
  const PowerSeries zeta = expand_series(SeriesName::Zeta, N);
  const PowerSeries eps = expand_series(SeriesName::Epsilon, N);
  const PowerSeries omega = expand_series(SeriesName::Omega, N);

  auto sys1 = [&]() {
    std::vector<PowerSeries> r;
    r.push_back(f - (x + alpha + beta + gamma + delta));
    r.push_back(beta - ps_div(poly({0, 0, 1}, N + 2), poly({1, 0, -1}, N + 2)).truncated(N));
    r.push_back(alpha - (x + beta + gamma + delta) * (x + alpha + beta + gamma + delta));
    return r;
  };
  auto sys3 = [&]() {
    const PowerSeries bgd = beta + gamma + delta;
    std::vector<PowerSeries> r;
    r.push_back(omega - (x + x * eps + bgd * omega));
    r.push_back(eps - (bgd + bgd * eps + x * omega));
    return r;
  };

  switch (system) {
    case RelationSystem::Sys1:
      return sys1();
    case RelationSystem::Sys2: {
      // the restricted class: alpha' = (x+beta)^2 / (1-x-beta), phi = x+alpha'+beta
      const PowerSeries phi = expand_series(SeriesName::Phi, N);
      const PowerSeries xb = x + beta;
      const PowerSeries alpha2 =
          ps_div(xb * xb, PowerSeries::constant(1, N) - xb);
      std::vector<PowerSeries> r;
      r.push_back(phi - (x + alpha2 + beta));
      r.push_back(alpha2 - xb * (x + alpha2 + beta));
      return r;
    }
    case RelationSystem::Sys3:
      return sys3();
    case RelationSystem::Sys4: {
      std::vector<PowerSeries> r = sys1();
      r.push_back(f - (omega + eps));
      for (auto& e : sys3()) r.push_back(e);
      r.push_back(eps - poly({0, 2}, N) * omega);
      return r;
    }
    case RelationSystem::Rel5:
      return {poly({-1, 0, 4, 0, -3}, N) * zeta +
              poly({1, 0, -2, 0, 1}, N) * (zeta * zeta) +
              PowerSeries::monomial(1, 6, N)};
    case RelationSystem::FPoly:
      // -f + x - f^2 x + 2x^2 + 4 f x^2 + 2 f^2 x^2
      return {-f + x - (f * f) * x + poly({0, 0, 2}, N) +
              poly({0, 0, 4}, N) * f + poly({0, 0, 2}, N) * (f * f)};
    case RelationSystem::AlphaPoly:
      // alpha + alpha x + alpha^2 x - x^2 - 4 alpha x^2 - 2 alpha^2 x^2
      //   - 4x^3 - 4 alpha x^3 - 4x^4
      return {alpha + alpha * x + (alpha * alpha) * x - poly({0, 0, 1}, N) -
              poly({0, 0, 4}, N) * alpha - poly({0, 0, 2}, N) * (alpha * alpha) -
              poly({0, 0, 0, 4}, N) - poly({0, 0, 0, 4}, N) * alpha -
              poly({0, 0, 0, 0, 4}, N)};
  }
  throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// Exports

/// All named coefficients are integers; this asserts so and returns them as
/// exact decimal strings for n = 1..order.
inline std::vector<std::string> coefficient_strings(const PowerSeries& s) {
  std::vector<std::string> out;
  for (int i = 1; i <= s.order(); ++i) {
    const Rational& c = s.coeff(i);
    if (boost::multiprecision::denominator(c) != 1)
      throw std::logic_error("coefficient_strings: non-integral coefficient");
    out.push_back(boost::multiprecision::numerator(c).str());
  }
  return out;
}

/// JSON array of decimal integer strings: ["1","2","3",...]
inline std::string series_to_json(const PowerSeries& s) {
  std::string out = "[";
  const auto cs = coefficient_strings(s);
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i) out += ',';
    out += '"';
    out += cs[i];
    out += '"';
  }
  out += ']';
  return out;
}

/// CSV with an n,coefficient header.
inline std::string series_to_csv(const PowerSeries& s) {
  std::string out = "n,coefficient\n";
  const auto cs = coefficient_strings(s);
  for (std::size_t i = 0; i < cs.size(); ++i)
    out += std::to_string(i + 1) + "," + cs[i] + "\n";
  return out;
}

}  // namespace inv321
