#pragma once

// Rational cohomology of P^n, Q[h]/(h^(n+1)), and the transformations that
// carry K-theory classes there: Chern character, Todd class, the
// Grothendieck-Riemann-Roch map, the (1+y)-normalization and the
// specialization y = -1 that yields Chern-Schwartz-MacPherson classes.

#include "logmc/errors.hpp"
#include "logmc/kring.hpp"
#include "logmc/numeric.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace logmc {

/// Element of Q[h]/(h^(n+1)); coefficient j sits in dimension n - j.
class CohClass {
 public:
  explicit CohClass(std::size_t n) : n_(n), coeffs_(n + 1, 0) {}
  CohClass(std::size_t n, std::vector<Rational> coeffs);

  static CohClass constant(std::size_t n, const Rational& c);
  /// Truncation of exp(a*h).
  static CohClass exponential(std::size_t n, const Rational& a);
  /// prod_i (1 + (1 - e_i) h), the Chern class of the split logarithmic
  /// derivation bundle.
  static CohClass split_chern_product(const Exponents& exps, std::size_t n);

  std::size_t n() const noexcept { return n_; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  const Rational& operator[](std::size_t j) const { return coeffs_[j]; }
  bool is_zero() const;

  CohClass pow(unsigned e) const;
  /// Multiplicative inverse; requires a nonzero constant term.
  CohClass inverse() const;

  CohClass& operator+=(const CohClass& o);
  CohClass& operator-=(const CohClass& o);
  CohClass& operator*=(const Rational& c);
  friend CohClass operator+(CohClass a, const CohClass& b) { return a += b; }
  friend CohClass operator-(CohClass a, const CohClass& b) { return a -= b; }
  friend CohClass operator*(CohClass a, const Rational& c) { return a *= c; }
  friend CohClass operator*(const CohClass& a, const CohClass& b);
  friend bool operator==(const CohClass&, const CohClass&) = default;

  std::string to_string() const;

 private:
  std::size_t n_;
  std::vector<Rational> coeffs_;
};

/// A polynomial in y with CohClass coefficients, divided by (1+y)^delta.
/// table()[k][j] is the coefficient of y^k h^j in the numerator.
class CohPoly {
 public:
  explicit CohPoly(std::size_t n, std::size_t denominator_power = 0)
      : n_(n), denominator_power_(denominator_power) {}
  CohPoly(std::size_t n, std::vector<CohClass> coeffs, std::size_t denominator_power = 0);

  std::size_t n() const noexcept { return n_; }
  std::size_t denominator_power() const noexcept { return denominator_power_; }
  const std::vector<CohClass>& coeffs() const noexcept { return coeffs_; }
  CohClass coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : CohClass(n_); }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Value at y = -1; only meaningful once the denominator is cleared.
  CohClass at_minus_one() const;
  /// Substitutes a rational value for y (requires denominator_power == 0).
  CohClass evaluate(const Rational& y) const;

  friend bool operator==(const CohPoly&, const CohPoly&) = default;

  std::string to_string() const;

 private:
  void trim();

  std::size_t n_;
  std::size_t denominator_power_;
  std::vector<CohClass> coeffs_;
};

/// Ring homomorphism G_0(P^n) -> Q[h]/(h^(n+1)), s |-> exp(-h).
CohClass chern_character(const KClass& c);

/// td(T P^n) = (h / (1 - exp(-h)))^(n+1).
CohClass todd_class(std::size_t n);

/// ch(-) td(T P^n), applied coefficientwise in y.
CohPoly grr_transform(const KPoly& p);

/// Rescales the dimension-i part by (1+y)^(-i). Kept as a numerator with
/// denominator (1+y)^n: the h^j part is multiplied by (1+y)^j.
CohPoly normalize(const CohPoly& p);

/// Divides every h^j component by (1+y)^delta exactly.
/// Throws CohomologyDivisionError if some component is not divisible.
CohPoly clear_denominator(const CohPoly& p);

class CohomologyDivisionError : public InconsistencyError {
 public:
  using InconsistencyError::InconsistencyError;
};

/// The normalized Hirzebruch class of `p` at y = -1.
CohClass csm_at_minus_one(const KPoly& p);

/// Degree of the dimension-0 part (the h^n coefficient).
Rational euler_characteristic(const CohClass& c);

}  // namespace logmc
