#include "logmc/hirzebruch.hpp"

#include <algorithm>
#include <sstream>

namespace logmc {

// ---------------------------------------------------------------------------
// CohClass

CohClass::CohClass(std::size_t n, std::vector<Rational> coeffs) : n_(n), coeffs_(std::move(coeffs)) {
  coeffs_.resize(n_ + 1, 0);
}

CohClass CohClass::constant(std::size_t n, const Rational& c) {
  CohClass out(n);
  out.coeffs_[0] = c;
  return out;
}

CohClass CohClass::exponential(std::size_t n, const Rational& a) {
  CohClass out(n);
  Rational term = 1;
  for (std::size_t j = 0; j <= n; ++j) {
    out.coeffs_[j] = term;
    term = term * a / Rational(static_cast<long>(j + 1));
  }
  return out;
}

CohClass CohClass::split_chern_product(const Exponents& exps, std::size_t n) {
  CohClass out = constant(n, 1);
  for (long e : exps) out = out * CohClass(n, {Rational(1), Rational(1 - e)});
  return out;
}

bool CohClass::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q == 0; });
}

CohClass CohClass::pow(unsigned e) const {
  CohClass result = constant(n_, 1);
  for (unsigned i = 0; i < e; ++i) result = result * *this;
  return result;
}

CohClass CohClass::inverse() const {
  if (coeffs_[0] == 0) throw ValidationError("cohomology class with zero constant term is not invertible");
  CohClass out(n_);
  for (std::size_t j = 0; j <= n_; ++j) {
    Rational acc = j == 0 ? Rational(1) : Rational(0);
    for (std::size_t i = 1; i <= j; ++i) acc -= coeffs_[i] * out.coeffs_[j - i];
    out.coeffs_[j] = acc / coeffs_[0];
  }
  return out;
}

CohClass& CohClass::operator+=(const CohClass& o) {
  for (std::size_t j = 0; j <= n_; ++j) coeffs_[j] += o.coeffs_[j];
  return *this;
}

CohClass& CohClass::operator-=(const CohClass& o) {
  for (std::size_t j = 0; j <= n_; ++j) coeffs_[j] -= o.coeffs_[j];
  return *this;
}

CohClass& CohClass::operator*=(const Rational& c) {
  for (auto& q : coeffs_) q *= c;
  return *this;
}

CohClass operator*(const CohClass& a, const CohClass& b) {
  CohClass out(a.n_);
  for (std::size_t i = 0; i <= a.n_; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= a.n_; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

std::string CohClass::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t j = 0; j <= n_; ++j) {
    const Rational& c = coeffs_[j];
    if (c == 0) continue;
    const Rational mag = c < 0 ? Rational(-c) : c;
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    if (j == 0) {
      out << to_display_string(mag);
      continue;
    }
    if (mag != 1) out << to_display_string(mag) << "*";
    out << "h";
    if (j > 1) out << "^" << j;
  }
  return first ? "0" : out.str();
}

// ---------------------------------------------------------------------------
// CohPoly

CohPoly::CohPoly(std::size_t n, std::vector<CohClass> coeffs, std::size_t denominator_power)
    : n_(n), denominator_power_(denominator_power), coeffs_(std::move(coeffs)) {
  trim();
}

void CohPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

CohClass CohPoly::at_minus_one() const {
  CohClass acc(n_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k % 2 == 0)
      acc += coeffs_[k];
    else
      acc -= coeffs_[k];
  }
  return acc;
}

CohClass CohPoly::evaluate(const Rational& y) const {
  if (denominator_power_ != 0) throw ValidationError("evaluate requires a cleared denominator");
  CohClass acc(n_);
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * y + coeffs_[k];
  return acc;
}

std::string CohPoly::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "[" + coeffs_[k].to_string() + "]";
    if (k >= 1) out += "*y";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  if (out.empty()) out = "0";
  if (denominator_power_ > 0) out = "(" + out + ") / (1+y)^" + std::to_string(denominator_power_);
  return out;
}

// ---------------------------------------------------------------------------
// Transformations

CohClass chern_character(const KClass& c) {
  const std::size_t n = c.n();
  CohClass out(n);
  for (std::size_t k = 0; k <= n; ++k) {
    if (c.coeffs()[k] == 0) continue;
    out += CohClass::exponential(n, Rational(-static_cast<long>(k))) * Rational(c.coeffs()[k]);
  }
  return out;
}

CohClass todd_class(std::size_t n) {
  // (1 - exp(-h)) / h = sum_k (-1)^k h^k / (k+1)!
  std::vector<Rational> coeffs(n + 1);
  Rational factorial = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    factorial *= Rational(static_cast<long>(k + 1));
    coeffs[k] = Rational(k % 2 == 0 ? 1 : -1) / factorial;
  }
  return CohClass(n, std::move(coeffs)).inverse().pow(static_cast<unsigned>(n + 1));
}

CohPoly grr_transform(const KPoly& p) {
  const CohClass td = todd_class(p.n());
  std::vector<CohClass> coeffs;
  coeffs.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) coeffs.push_back(chern_character(c) * td);
  return CohPoly(p.n(), std::move(coeffs));
}

namespace {

// Column j of the y-by-h table, as a polynomial in y.
std::vector<Rational> h_component(const CohPoly& p, std::size_t j) {
  std::vector<Rational> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c[j]);
  return out;
}

CohPoly from_components(std::size_t n, const std::vector<std::vector<Rational>>& components,
                        std::size_t denominator_power) {
  std::size_t length = 0;
  for (const auto& comp : components) length = std::max(length, comp.size());
  std::vector<CohClass> coeffs(length, CohClass(n));
  for (std::size_t k = 0; k < length; ++k) {
    std::vector<Rational> row(n + 1, 0);
    for (std::size_t j = 0; j <= n; ++j)
      if (k < components[j].size()) row[j] = components[j][k];
    coeffs[k] = CohClass(n, std::move(row));
  }
  return CohPoly(n, std::move(coeffs), denominator_power);
}

std::vector<Rational> times_one_plus_y(const std::vector<Rational>& a) {
  std::vector<Rational> out(a.size() + 1, 0);
  for (std::size_t k = 0; k < a.size(); ++k) {
    out[k] += a[k];
    out[k + 1] += a[k];
  }
  return out;
}

}  // namespace

CohPoly normalize(const CohPoly& p) {
  if (p.denominator_power() != 0) throw ValidationError("normalize expects an unnormalized class (delta = 0)");
  const std::size_t n = p.n();
  std::vector<std::vector<Rational>> components(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    components[j] = h_component(p, j);
    for (std::size_t i = 0; i < j; ++i) components[j] = times_one_plus_y(components[j]);
  }
  return from_components(n, components, n);
}

CohPoly clear_denominator(const CohPoly& p) {
  const std::size_t n = p.n();
  std::vector<std::vector<Rational>> components(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    auto a = h_component(p, j);
    for (std::size_t round = 0; round < p.denominator_power(); ++round) {
      while (!a.empty() && a.back() == 0) a.pop_back();
      if (a.empty()) break;
      std::vector<Rational> q(a.size() - 1, 0);
      Rational carry = 0;
      for (std::size_t k = a.size(); k-- > 1;) {
        carry = a[k] - carry;
        q[k - 1] = carry;
      }
      const Rational remainder = a[0] - carry;
      if (remainder != 0) {
        throw CohomologyDivisionError("h^" + std::to_string(j) + " component is not divisible by (1+y)^" +
                                          std::to_string(p.denominator_power()),
                                      "remainder " + to_fraction_string(remainder) + " after " +
                                          std::to_string(round) + " divisions");
      }
      a = std::move(q);
    }
    components[j] = std::move(a);
  }
  return from_components(n, components, 0);
}

CohClass csm_at_minus_one(const KPoly& p) { return clear_denominator(normalize(grr_transform(p))).at_minus_one(); }

Rational euler_characteristic(const CohClass& c) { return c[c.n()]; }

}  // namespace logmc
