#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "durfee/durfee_symbol.hpp"

namespace durfee {

using Rational = mpq_class;

// "p/q" or "p"; throws durfee::Error on malformed text or zero denominator.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

/// Power series in q truncated after q^order, exact rational coefficients.
class QSeries {
 public:
  explicit QSeries(int order);
  QSeries(int order, std::vector<Rational> coeffs);

  static QSeries one(int order);
  // c * q^exponent, zero if exponent > order.
  static QSeries monomial(int order, const Rational& c, int exponent);
  // 1 / (1 - c q^step) expanded as sum_t c^t q^{step t}. step >= 1.
  static QSeries geometric(int order, const Rational& c, int step);

  int order() const noexcept { return order_; }
  const Rational& operator[](std::size_t n) const { return coeffs_.at(n); }
  Rational& operator[](std::size_t n) { return coeffs_.at(n); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  QSeries& operator*=(const QSeries& o);
  QSeries& operator*=(const Rational& c);

  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(QSeries a, const QSeries& b) { return a *= b; }
  friend QSeries operator*(QSeries a, const Rational& c) { return a *= c; }

  // Requires a nonzero constant term.
  QSeries reciprocal() const;

  friend bool operator==(const QSeries& a, const QSeries& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

 private:
  int order_;
  std::vector<Rational> coeffs_;
};

/// Specialization point for the x-variables of a multivariate generating
/// function. Entries are nonzero.
struct EvalPoint {
  std::vector<Rational> x;

  std::size_t size() const noexcept { return x.size(); }
  // Comma separated rationals, e.g. "2,3,5" or "1/2,3".
  static EvalPoint parse(std::string_view text);
};

// prod_{j>=1} (1 - q^{step j}) truncated.
QSeries euler_product(int order, int step = 1);

// 1/(q;q)_inf.
QSeries partition_gf(int order);

// Dyson's generating function for N(m;n).
QSeries rank_gf(int m, int order);

// Generating function for odd Durfee symbols of odd rank m.
QSeries odd_rank_gf(int m, int order);

// sum_n sum_m D_k(m;n) x^m q^n from the exhaustive corpus.
QSeries rk_lhs(const EvalPoint& x, int k, int order, Flavor flavor);

// Product formula for R_k (ordinary) or R^0_k (odd).
QSeries rk_rhs_corollary11(const EvalPoint& x, int k, int order, Flavor flavor);

// Partial fraction form sum_i R_1(x_i) / prod_{j != i} (x_i - x_j)(1 - 1/(x_i x_j)).
// Throws durfee::Error("pole at evaluation point") when x_i = x_j or x_i x_j = 1.
QSeries rk_rhs_partialfraction(const EvalPoint& x, int k, int order, Flavor flavor);

}  // namespace durfee
