#include "durfee/qseries.hpp"

#include <cctype>
#include <string>

#include "durfee/error.hpp"
#include "durfee/marked.hpp"

namespace durfee {

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  auto integer_ok = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string num(text.substr(0, slash));
  std::string den = slash == std::string_view::npos ? "1" : std::string(text.substr(slash + 1));
  if (!integer_ok(num) || !integer_ok(den) || den.front() == '-' || den.front() == '+')
    throw Error("malformed rational '" + std::string(text) + "'");
  if (num.front() == '+') num.erase(0, 1);
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

QSeries::QSeries(int order) : order_(order), coeffs_(static_cast<std::size_t>(order) + 1) {
  if (order < 0) throw Error("series order must be nonnegative");
}

QSeries::QSeries(int order, std::vector<Rational> coeffs) : QSeries(order) {
  if (coeffs.size() > coeffs_.size()) coeffs.resize(coeffs_.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs_[i] = coeffs[i];
}

QSeries QSeries::one(int order) { return monomial(order, Rational(1), 0); }

QSeries QSeries::monomial(int order, const Rational& c, int exponent) {
  QSeries s(order);
  if (exponent >= 0 && exponent <= order) s.coeffs_[static_cast<std::size_t>(exponent)] = c;
  return s;
}

QSeries QSeries::geometric(int order, const Rational& c, int step) {
  if (step < 1) throw Error("geometric step must be positive");
  QSeries s(order);
  Rational power(1);
  for (int e = 0; e <= order; e += step) {
    s.coeffs_[static_cast<std::size_t>(e)] = power;
    power *= c;
  }
  return s;
}

QSeries& QSeries::operator+=(const QSeries& o) {
  if (o.order_ != order_) throw Error("series order mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
  if (o.order_ != order_) throw Error("series order mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

QSeries& QSeries::operator*=(const QSeries& o) {
  if (o.order_ != order_) throw Error("series order mismatch");
  std::vector<Rational> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < coeffs_.size(); ++j)
      if (o.coeffs_[j] != 0) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  return *this;
}

QSeries& QSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

QSeries QSeries::reciprocal() const {
  if (coeffs_[0] == 0) throw Error("reciprocal of a series with zero constant term");
  QSeries r(order_);
  const Rational inv0 = 1 / coeffs_[0];
  r.coeffs_[0] = inv0;
  for (std::size_t n = 1; n < coeffs_.size(); ++n) {
    Rational acc;
    for (std::size_t i = 1; i <= n; ++i) acc += coeffs_[i] * r.coeffs_[n - i];
    r.coeffs_[n] = -acc * inv0;
  }
  return r;
}

EvalPoint EvalPoint::parse(std::string_view text) {
  EvalPoint p;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto end = comma == std::string_view::npos ? text.size() : comma;
    Rational r = parse_rational(text.substr(start, end - start));
    if (r == 0) throw Error("evaluation point entries must be nonzero");
    p.x.push_back(r);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return p;
}

QSeries euler_product(int order, int step) {
  QSeries s = QSeries::one(order);
  for (int j = step; j <= order; j += step) s *= QSeries::one(order) - QSeries::monomial(order, Rational(1), j);
  return s;
}

QSeries partition_gf(int order) { return euler_product(order).reciprocal(); }

QSeries rank_gf(int m, int order) {
  const int am = std::abs(m);
  QSeries sum(order);
  for (int n = 1; n * (3 * n - 1) / 2 + am * n <= order; ++n) {
    const int e = n * (3 * n - 1) / 2 + am * n;
    const Rational sign(n % 2 == 1 ? 1 : -1);
    sum += QSeries::monomial(order, sign, e) - QSeries::monomial(order, sign, e + n);
  }
  return sum * partition_gf(order);
}

QSeries odd_rank_gf(int m, int order) {
  const int am = std::abs(m);
  QSeries sum(order);
  for (int n = 0; 3 * n * n + 3 * n + 1 + am * (2 * n + 1) <= order; ++n)
    sum += QSeries::monomial(order, Rational(n % 2 == 0 ? 1 : -1), 3 * n * n + 3 * n + 1 + am * (2 * n + 1));
  return sum * euler_product(order, 2).reciprocal();
}

namespace {

Rational ipow(const Rational& x, int e) {
  Rational r(1);
  const Rational base = e < 0 ? Rational(1 / x) : x;
  for (int i = 0; i < std::abs(e); ++i) r *= base;
  return r;
}

void require_point(const EvalPoint& x, int k) {
  if (k < 1) throw Error("k must be at least 1");
  if (x.size() != static_cast<std::size_t>(k))
    throw Error("evaluation point has " + std::to_string(x.size()) + " entries, expected " + std::to_string(k));
  for (const auto& v : x.x)
    if (v == 0) throw Error("evaluation point entries must be nonzero");
}

// prod_j 1 / ((1 - x_j q^step)(1 - q^step / x_j))
QSeries denominators(const EvalPoint& x, int order, int step) {
  QSeries s = QSeries::one(order);
  for (const auto& v : x.x) {
    s *= QSeries::geometric(order, v, step);
    s *= QSeries::geometric(order, Rational(1 / v), step);
  }
  return s;
}

}  // namespace

QSeries rk_lhs(const EvalPoint& x, int k, int order, Flavor flavor) {
  require_point(x, k);
  QSeries s(order);
  for (int n = 0; n <= order; ++n) {
    Rational c;
    for (const auto& [m, count] : rank_distribution(n, k, flavor)) {
      Rational term(static_cast<long>(count));
      for (std::size_t i = 0; i < m.size(); ++i) term *= ipow(x.x[i], m[i]);
      c += term;
    }
    s[static_cast<std::size_t>(n)] = c;
  }
  return s;
}

QSeries rk_rhs_corollary11(const EvalPoint& x, int k, int order, Flavor flavor) {
  require_point(x, k);
  const QSeries one = QSeries::one(order);
  QSeries sum(order);
  if (flavor == Flavor::Ordinary) {
    for (int n = 1; 3 * n * (n - 1) / 2 + k * n <= order; ++n) {
      const QSeries qn = QSeries::monomial(order, Rational(1), n);
      QSeries term = QSeries::monomial(order, Rational(n % 2 == 1 ? 1 : -1), 3 * n * (n - 1) / 2 + k * n);
      term *= one + qn;
      term *= one - qn;
      term *= one - qn;
      term *= denominators(x, order, n);
      sum += term;
    }
    return sum * partition_gf(order);
  }
  for (int n = 0; 3 * n * n + (2 * k + 1) * n + k <= order; ++n) {
    QSeries term = QSeries::monomial(order, Rational(n % 2 == 0 ? 1 : -1), 3 * n * n + (2 * k + 1) * n + k);
    term *= one - QSeries::monomial(order, Rational(1), 4 * n + 2);
    term *= denominators(x, order, 2 * n + 1);
    sum += term;
  }
  return sum * euler_product(order, 2).reciprocal();
}

QSeries rk_rhs_partialfraction(const EvalPoint& x, int k, int order, Flavor flavor) {
  require_point(x, k);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (i != j && (x.x[i] == x.x[j] || x.x[i] * x.x[j] == 1)) throw Error("pole at evaluation point");

  QSeries sum(order);
  for (std::size_t i = 0; i < x.size(); ++i) {
    Rational scale(1);
    for (std::size_t j = 0; j < x.size(); ++j)
      if (j != i) scale *= (x.x[i] - x.x[j]) * (1 - 1 / (x.x[i] * x.x[j]));
    sum += rk_lhs(EvalPoint{{x.x[i]}}, 1, order, flavor) * Rational(1 / scale);
  }
  return sum;
}

}  // namespace durfee
