#include "logmc/kring.hpp"

#include <algorithm>
#include <sstream>

namespace logmc {

namespace {

using boost::multiprecision::abs;

// Coefficients of (s-1)^(n+1), monic of degree n+1.
std::vector<Integer> relation(std::size_t n) {
  std::vector<Integer> r(n + 2);
  for (std::size_t k = 0; k <= n + 1; ++k) {
    Integer b = binomial(static_cast<long>(n + 1), static_cast<long>(k));
    r[k] = ((n + 1 - k) % 2 == 0) ? b : Integer(-b);
  }
  return r;
}

std::string render_coeffs(const std::vector<Integer>& coeffs, const std::string& atom) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const Integer& c = coeffs[k];
    if (c == 0) continue;
    const Integer mag = abs(c);
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    if (k == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag << "*";
    out << atom;
    if (k > 1) out << "^" << k;
  }
  return first ? "0" : out.str();
}

}  // namespace

std::string to_string(KBasis basis) { return basis == KBasis::s ? "s" : "one_minus_s"; }

KBasis parse_kbasis(const std::string& text) {
  if (text == "s") return KBasis::s;
  if (text == "one_minus_s" || text == "1-s") return KBasis::one_minus_s;
  throw ParseError("unknown K-theory basis '" + text + "' (expected s or one_minus_s)");
}

// ---------------------------------------------------------------------------
// KClass

KClass KClass::from_s_coeffs(std::size_t n, std::vector<Integer> coeffs) {
  if (coeffs.size() > n + 1) {
    const auto rel = relation(n);
    for (std::size_t d = coeffs.size() - 1; d >= n + 1; --d) {
      const Integer lead = coeffs[d];
      if (lead == 0) continue;
      for (std::size_t k = 0; k <= n + 1; ++k) coeffs[d - (n + 1) + k] -= lead * rel[k];
    }
  }
  coeffs.resize(n + 1, 0);
  KClass out(n);
  out.coeffs_ = std::move(coeffs);
  return out;
}

KClass KClass::from_one_minus_s_coeffs(std::size_t n, const std::vector<Integer>& coeffs) {
  // sum_k b_k (1-s)^k
  KClass out(n);
  const KClass u = one_minus_s(n);
  KClass power = constant(n, 1);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (k > 0) power = power * u;
    out += power * coeffs[k];
  }
  return out;
}

KClass KClass::constant(std::size_t n, const Integer& c) {
  KClass out(n);
  out.coeffs_[0] = c;
  return out;
}

KClass KClass::s(std::size_t n) { return from_s_coeffs(n, {0, 1}); }

KClass KClass::one_minus_s(std::size_t n) { return from_s_coeffs(n, {1, -1}); }

std::vector<Integer> KClass::one_minus_s_coeffs() const {
  // s^k = (1-u)^k with u = 1-s; degree stays <= n.
  std::vector<Integer> out(n_ + 1, 0);
  for (std::size_t k = 0; k <= n_; ++k) {
    if (coeffs_[k] == 0) continue;
    for (std::size_t j = 0; j <= k; ++j) {
      Integer term = coeffs_[k] * binomial(static_cast<long>(k), static_cast<long>(j));
      out[j] += (j % 2 == 0) ? term : Integer(-term);
    }
  }
  return out;
}

std::vector<Integer> KClass::coeffs_in(KBasis basis) const {
  return basis == KBasis::s ? coeffs_ : one_minus_s_coeffs();
}

bool KClass::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c == 0; });
}

KClass KClass::pow(unsigned e) const {
  KClass result = constant(n_, 1);
  KClass base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

KClass& KClass::operator+=(const KClass& o) {
  for (std::size_t k = 0; k <= n_; ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

KClass& KClass::operator-=(const KClass& o) {
  for (std::size_t k = 0; k <= n_; ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

KClass& KClass::operator*=(const Integer& c) {
  for (auto& v : coeffs_) v *= c;
  return *this;
}

KClass operator*(const KClass& a, const KClass& b) {
  std::vector<Integer> prod(2 * a.n_ + 1, 0);
  for (std::size_t i = 0; i <= a.n_; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j <= a.n_; ++j) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return KClass::from_s_coeffs(a.n_, std::move(prod));
}

// ---------------------------------------------------------------------------
// KPoly

KPoly::KPoly(std::size_t n, std::vector<KClass> coeffs) : n_(n), coeffs_(std::move(coeffs)) { trim(); }

KPoly::KPoly(const KClass& c) : n_(c.n()), coeffs_{c} { trim(); }

KPoly KPoly::linear(const KClass& a, const KClass& b) { return KPoly(a.n(), {a, b}); }

void KPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

KClass KPoly::at_minus_one() const {
  KClass acc(n_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k % 2 == 0)
      acc += coeffs_[k];
    else
      acc -= coeffs_[k];
  }
  return acc;
}

KPoly KPoly::pow(unsigned e) const {
  KPoly result(KClass::constant(n_, 1));
  for (unsigned i = 0; i < e; ++i) result = result * *this;
  return result;
}

KPoly& KPoly::operator+=(const KPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), KClass(n_));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

KPoly& KPoly::operator-=(const KPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), KClass(n_));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

KPoly& KPoly::operator*=(const KClass& c) {
  for (auto& v : coeffs_) v = v * c;
  trim();
  return *this;
}

KPoly operator*(const KPoly& a, const KPoly& b) {
  if (a.is_zero() || b.is_zero()) return KPoly(a.n_);
  std::vector<KClass> prod(a.coeffs_.size() + b.coeffs_.size() - 1, KClass(a.n_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return KPoly(a.n_, std::move(prod));
}

std::string render(const KClass& c, KBasis basis) {
  return render_coeffs(c.coeffs_in(basis), basis == KBasis::s ? "s" : "(1-s)");
}

std::string render(const KPoly& p, KBasis basis) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (p.coeffs()[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "[" + render(p.coeffs()[k], basis) + "]";
    if (k >= 1) out += "*y";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Classes on P^n

NonDivisibleError::NonDivisibleError(const std::string& what, KClass remainder)
    : InconsistencyError(what, "remainder = " + render(remainder, KBasis::s)), remainder_(std::move(remainder)) {}

KClass kclass_O(long k, std::size_t n) {
  if (k <= 0) return KClass::s(n).pow(static_cast<unsigned>(-k));
  KClass inverse(n);
  const KClass u = KClass::one_minus_s(n);
  for (std::size_t j = 0; j <= n; ++j) inverse += u.pow(static_cast<unsigned>(j));
  return inverse.pow(static_cast<unsigned>(k));
}

KClass kclass_linear_subspace(long m, long k, std::size_t n) {
  if (m < 0 || m > static_cast<long>(n)) {
    throw ValidationError("linear subspace dimension " + std::to_string(m) + " outside [0, " +
                          std::to_string(n) + "]");
  }
  return KClass::one_minus_s(n).pow(static_cast<unsigned>(static_cast<long>(n) - m)) * kclass_O(k, n);
}

KPoly exact_div_one_plus_y(const KPoly& num) {
  const std::size_t n = num.n();
  if (num.is_zero()) return KPoly(n);
  const auto& a = num.coeffs();
  std::vector<KClass> q(a.size() - 1, KClass(n));
  KClass carry(n);
  for (std::size_t k = a.size(); k-- > 1;) {
    carry = a[k] - carry;
    q[k - 1] = carry;
  }
  KClass remainder = a[0] - carry;
  if (!remainder.is_zero()) throw NonDivisibleError("polynomial is not divisible by (1+y)", std::move(remainder));
  return KPoly(n, std::move(q));
}

KPoly omega_log_trivial(std::size_t n) {
  const KPoly one_plus_sy = KPoly::linear(KClass::constant(n, 1), KClass::s(n));
  return exact_div_one_plus_y(one_plus_sy.pow(static_cast<unsigned>(n + 1)));
}

namespace {

// sum_j c_j (1+sy)^j (1-s)^(n+1-j) for j in [0, n+1].
KPoly homogenized_substitution(const std::vector<Integer>& c, std::size_t n) {
  const KPoly one_plus_sy = KPoly::linear(KClass::constant(n, 1), KClass::s(n));
  const KClass u = KClass::one_minus_s(n);
  KPoly sum(n);
  KPoly power(KClass::constant(n, 1));
  for (std::size_t j = 0; j <= n + 1; ++j) {
    if (j > 0) power = power * one_plus_sy;
    if (j < c.size() && c[j] != 0) sum += power * (u.pow(static_cast<unsigned>(n + 1 - j)) * c[j]);
  }
  return sum;
}

}  // namespace

KPoly mc_complement_lattice_sum(const IntersectionLattice& lattice) {
  const std::size_t n = lattice.projective_dim();
  const KPoly one_plus_sy = KPoly::linear(KClass::constant(n, 1), KClass::s(n));
  const KClass u = KClass::one_minus_s(n);

  std::vector<KPoly> powers{KPoly(KClass::constant(n, 1))};
  for (std::size_t d = 1; d <= n + 1; ++d) powers.push_back(powers.back() * one_plus_sy);

  KPoly sum(n);
  for (const auto& node : lattice.nodes()) {
    const std::size_t d = node.subspace.dim();
    if (d == 0) continue;  // the origin projectivizes to the empty set
    sum += powers[d] * (u.pow(static_cast<unsigned>(n + 1 - d)) * node.mobius);
  }
  return exact_div_one_plus_y(sum);
}

KPoly mc_complement_charpoly(const IntPolynomial& chi, std::size_t n) {
  if (chi.degree() != static_cast<long>(n + 1)) {
    throw ValidationError("characteristic polynomial has degree " + std::to_string(chi.degree()) +
                          ", expected " + std::to_string(n + 1));
  }
  return exact_div_one_plus_y(homogenized_substitution(chi.coeffs(), n));
}

void validate_exponents(const Exponents& exps, std::size_t n) {
  if (exps.size() != n + 1) {
    throw ValidationError("expected " + std::to_string(n + 1) + " exponents, got " + std::to_string(exps.size()) +
                          " " + format_exponents(exps));
  }
  if (std::any_of(exps.begin(), exps.end(), [](long e) { return e < 0; }))
    throw ValidationError("exponents must be nonnegative: " + format_exponents(exps));
  if (std::find(exps.begin(), exps.end(), 1L) == exps.end())
    throw ValidationError("exponents " + format_exponents(exps) + " do not contain 1 (the Euler derivation)");
}

KPoly mc_free_exponents(const Exponents& exps, std::size_t n) {
  validate_exponents(exps, n);
  KPoly prod(KClass::constant(n, 1));
  for (long e : exps) {
    const KClass constant = KClass::constant(n, 1 - e) + KClass::s(n) * Integer(e);
    prod = prod * KPoly::linear(constant, KClass::s(n));
  }
  return exact_div_one_plus_y(prod);
}

KPoly log_class_free(const Exponents& exps, std::size_t n) {
  validate_exponents(exps, n);
  KPoly prod(KClass::constant(n, 1));
  for (long e : exps) prod = prod * KPoly::linear(kclass_O(-e, n), KClass::s(n));
  return exact_div_one_plus_y(prod);
}

namespace {

const Exponents& require_exponents(const std::optional<Exponents>& exps) {
  if (!exps || exps->empty()) throw ValidationError("no exponent data: the difference class needs exponents");
  return *exps;
}

}  // namespace

KPoly difference_class_arrangement(const std::optional<Exponents>& exps, const IntersectionLattice& lattice) {
  const auto& e = require_exponents(exps);
  const std::size_t n = lattice.projective_dim();
  validate_exponents(e, n);
  return mc_complement_lattice_sum(lattice) - log_class_free(e, n);
}

KPoly difference_class_arrangement(const std::optional<Exponents>& exps, const IntPolynomial& chi, std::size_t n) {
  const auto& e = require_exponents(exps);
  validate_exponents(e, n);
  return mc_complement_charpoly(chi, n) - log_class_free(e, n);
}

}  // namespace logmc
