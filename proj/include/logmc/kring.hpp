#pragma once

// G_0(P^n) = Z[s]/((1-s)^(n+1)), s = [O(-1)], and polynomials in y over it.
// Hosts the three routes to the motivic Chern class of an arrangement
// complement, the logarithmic-form class and their difference.

#include "logmc/arrangement.hpp"
#include "logmc/errors.hpp"
#include "logmc/numeric.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace logmc {

enum class KBasis { s, one_minus_s };

std::string to_string(KBasis basis);
KBasis parse_kbasis(const std::string& text);

/// Element of G_0(P^n), stored in the s-power basis with degree <= n.
class KClass {
 public:
  explicit KClass(std::size_t n) : n_(n), coeffs_(n + 1, 0) {}

  /// Reduces an arbitrary polynomial in s modulo (1-s)^(n+1).
  static KClass from_s_coeffs(std::size_t n, std::vector<Integer> coeffs);
  static KClass from_one_minus_s_coeffs(std::size_t n, const std::vector<Integer>& coeffs);
  static KClass constant(std::size_t n, const Integer& c);
  static KClass s(std::size_t n);
  /// 1 - s, the class of a hyperplane section.
  static KClass one_minus_s(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  std::vector<Integer> one_minus_s_coeffs() const;
  std::vector<Integer> coeffs_in(KBasis basis) const;
  bool is_zero() const;

  KClass pow(unsigned e) const;

  KClass& operator+=(const KClass& o);
  KClass& operator-=(const KClass& o);
  KClass& operator*=(const Integer& c);
  friend KClass operator+(KClass a, const KClass& b) { return a += b; }
  friend KClass operator-(KClass a, const KClass& b) { return a -= b; }
  friend KClass operator*(KClass a, const Integer& c) { return a *= c; }
  friend KClass operator*(const KClass& a, const KClass& b);
  friend KClass operator-(KClass a) { return a *= -1; }
  friend bool operator==(const KClass&, const KClass&) = default;

 private:
  std::size_t n_;
  std::vector<Integer> coeffs_;
};

/// Polynomial in y with KClass coefficients; trailing zeros trimmed.
class KPoly {
 public:
  explicit KPoly(std::size_t n) : n_(n) {}
  KPoly(std::size_t n, std::vector<KClass> coeffs);
  explicit KPoly(const KClass& c);

  /// The polynomial a + b*y.
  static KPoly linear(const KClass& a, const KClass& b);

  std::size_t n() const noexcept { return n_; }
  const std::vector<KClass>& coeffs() const noexcept { return coeffs_; }
  /// -1 for zero.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  KClass coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : KClass(n_); }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  KClass at_minus_one() const;

  KPoly pow(unsigned e) const;

  KPoly& operator+=(const KPoly& o);
  KPoly& operator-=(const KPoly& o);
  KPoly& operator*=(const KClass& c);
  friend KPoly operator+(KPoly a, const KPoly& b) { return a += b; }
  friend KPoly operator-(KPoly a, const KPoly& b) { return a -= b; }
  friend KPoly operator*(KPoly a, const KClass& c) { return a *= c; }
  friend KPoly operator*(const KPoly& a, const KPoly& b);
  friend bool operator==(const KPoly&, const KPoly&) = default;

 private:
  void trim();

  std::size_t n_;
  std::vector<KClass> coeffs_;
};

std::string render(const KClass& c, KBasis basis);
std::string render(const KPoly& p, KBasis basis);

/// Thrown when a division by (1+y) leaves a remainder.
class NonDivisibleError : public InconsistencyError {
 public:
  NonDivisibleError(const std::string& what, KClass remainder);
  const KClass& remainder() const noexcept { return remainder_; }

 private:
  KClass remainder_;
};

/// [O(k)] = s^(-k); for k > 0 through s^(-1) = sum_{j<=n} (1-s)^j.
KClass kclass_O(long k, std::size_t n);

/// i_* O_{P^m}(k) = (1-s)^(n-m) * s^(-k) for a linear P^m in P^n.
KClass kclass_linear_subspace(long m, long k, std::size_t n);

/// Synthetic division by (1+y); throws NonDivisibleError on a remainder.
KPoly exact_div_one_plus_y(const KPoly& num);

/// sum_p [Omega^p_{P^n}] y^p = (1+sy)^(n+1) / (1+y).
KPoly omega_log_trivial(std::size_t n);

/// mC_y of the complement as a sum over the lattice: each node x of
/// dimension >= 1 contributes mu(x) (1-s)^(n+1-dim x) (1+sy)^(dim x).
KPoly mc_complement_lattice_sum(const IntersectionLattice& lattice);

/// mC_y of the complement from chi alone: chi((1+sy)/(1-s)) homogenized,
/// sum_j chi_j (1+sy)^j (1-s)^(n+1-j), divided by (1+y).
KPoly mc_complement_charpoly(const IntPolynomial& chi, std::size_t n);

/// prod_i (1 - e_i + (e_i + y) s) / (1+y) for a free cone with exponents e_i.
KPoly mc_free_exponents(const Exponents& exps, std::size_t n);

/// (sum_p Omega^p(log A) y^p) (x) O(-A) = prod_i (s^(e_i) + s y) / (1+y).
KPoly log_class_free(const Exponents& exps, std::size_t n);

/// mC route minus log route. `exps` empty/nullopt means the arrangement has
/// no usable exponent data and is rejected.
KPoly difference_class_arrangement(const std::optional<Exponents>& exps, const IntersectionLattice& lattice);
KPoly difference_class_arrangement(const std::optional<Exponents>& exps, const IntPolynomial& chi,
                                   std::size_t n);

/// Checks |exps| = n+1, e_i >= 0 and 1 in exps; throws ValidationError.
void validate_exponents(const Exponents& exps, std::size_t n);

}  // namespace logmc
