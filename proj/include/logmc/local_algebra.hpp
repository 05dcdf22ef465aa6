#pragma once

// Bivariate polynomials as local equations of plane curve germs, and the
// colengths of their Jacobian and Tjurina ideals in the local ring at 0.

#include "logmc/errors.hpp"
#include "logmc/numeric.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace logmc {

/// Exponent pair (x-degree, y-degree).
using Monomial2 = std::pair<unsigned, unsigned>;

class LocalPolynomial {
 public:
  LocalPolynomial() = default;
  explicit LocalPolynomial(std::map<Monomial2, Rational> terms);

  static LocalPolynomial constant(const Rational& c);
  static LocalPolynomial x();
  static LocalPolynomial y();

  const std::map<Monomial2, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coeff(unsigned i, unsigned j) const;
  /// -1 for zero.
  long total_degree() const;
  /// Lowest total degree of a nonzero term; -1 for zero.
  long order() const;
  bool is_homogeneous() const;

  LocalPolynomial dx() const;
  LocalPolynomial dy() const;
  LocalPolynomial pow(unsigned e) const;
  /// f(a x + b y, c x + d y).
  LocalPolynomial substitute_linear(const Rational& a, const Rational& b, const Rational& c,
                                    const Rational& d) const;

  LocalPolynomial& operator+=(const LocalPolynomial& o);
  LocalPolynomial& operator-=(const LocalPolynomial& o);
  friend LocalPolynomial operator+(LocalPolynomial a, const LocalPolynomial& b) { return a += b; }
  friend LocalPolynomial operator-(LocalPolynomial a, const LocalPolynomial& b) { return a -= b; }
  friend LocalPolynomial operator-(const LocalPolynomial& a);
  friend LocalPolynomial operator*(const LocalPolynomial& a, const LocalPolynomial& b);
  friend bool operator==(const LocalPolynomial&, const LocalPolynomial&) = default;

  std::string to_string() const;

 private:
  void prune();
  std::map<Monomial2, Rational> terms_;
};

/// Grammar: integers, variables x and y, + - * ^ and parentheses.
/// Throws ParseError with the offending column.
LocalPolynomial parse_local_polynomial(std::string_view text);

/// The germ at 0 is not an isolated singularity (colength did not stabilize
/// below the truncation cap).
class NonIsolatedSingularityError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// dim_Q O_0 / (generators), O_0 the local ring of the plane at the origin.
/// Computes dim of Q[x,y] / (I + m^B) for B = 1, 2, ... by linear algebra on
/// monomials of degree < B; two equal consecutive values certify m^B in I.
std::size_t local_colength(const std::vector<LocalPolynomial>& generators, std::size_t degree_cap);

struct LocalInvariants {
  long mu = 0;
  long tau = 0;
};

/// Milnor number dim O/(f_x, f_y) and Tjurina number dim O/(f, f_x, f_y).
/// The truncation cap is 2 (deg f)^2.
LocalInvariants local_invariants(const LocalPolynomial& f);

}  // namespace logmc
