#include "logmc/local_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace logmc {

// ---------------------------------------------------------------------------
// LocalPolynomial

LocalPolynomial::LocalPolynomial(std::map<Monomial2, Rational> terms) : terms_(std::move(terms)) { prune(); }

LocalPolynomial LocalPolynomial::constant(const Rational& c) { return LocalPolynomial(std::map<Monomial2, Rational>{{{0, 0}, c}}); }
LocalPolynomial LocalPolynomial::x() { return LocalPolynomial(std::map<Monomial2, Rational>{{{1, 0}, Rational(1)}}); }
LocalPolynomial LocalPolynomial::y() { return LocalPolynomial(std::map<Monomial2, Rational>{{{0, 1}, Rational(1)}}); }

void LocalPolynomial::prune() { std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; }); }

Rational LocalPolynomial::coeff(unsigned i, unsigned j) const {
  const auto it = terms_.find({i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

long LocalPolynomial::total_degree() const {
  long d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long>(m.first + m.second));
  return d;
}

long LocalPolynomial::order() const {
  if (terms_.empty()) return -1;
  long d = total_degree();
  for (const auto& [m, c] : terms_) d = std::min(d, static_cast<long>(m.first + m.second));
  return d;
}

bool LocalPolynomial::is_homogeneous() const { return !terms_.empty() && order() == total_degree(); }

LocalPolynomial LocalPolynomial::dx() const {
  std::map<Monomial2, Rational> out;
  for (const auto& [m, c] : terms_)
    if (m.first > 0) out[{m.first - 1, m.second}] += c * Rational(static_cast<long>(m.first));
  return LocalPolynomial(std::move(out));
}

LocalPolynomial LocalPolynomial::dy() const {
  std::map<Monomial2, Rational> out;
  for (const auto& [m, c] : terms_)
    if (m.second > 0) out[{m.first, m.second - 1}] += c * Rational(static_cast<long>(m.second));
  return LocalPolynomial(std::move(out));
}

LocalPolynomial LocalPolynomial::pow(unsigned e) const {
  LocalPolynomial result = constant(1);
  for (unsigned i = 0; i < e; ++i) result = result * *this;
  return result;
}

LocalPolynomial LocalPolynomial::substitute_linear(const Rational& a, const Rational& b, const Rational& c,
                                                   const Rational& d) const {
  const LocalPolynomial new_x({{{1, 0}, a}, {{0, 1}, b}});
  const LocalPolynomial new_y({{{1, 0}, c}, {{0, 1}, d}});
  LocalPolynomial out;
  for (const auto& [m, coeff] : terms_) out += constant(coeff) * new_x.pow(m.first) * new_y.pow(m.second);
  return out;
}

LocalPolynomial& LocalPolynomial::operator+=(const LocalPolynomial& o) {
  for (const auto& [m, c] : o.terms_) terms_[m] += c;
  prune();
  return *this;
}

LocalPolynomial& LocalPolynomial::operator-=(const LocalPolynomial& o) {
  for (const auto& [m, c] : o.terms_) terms_[m] -= c;
  prune();
  return *this;
}

LocalPolynomial operator-(const LocalPolynomial& a) {
  LocalPolynomial out = a;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

LocalPolynomial operator*(const LocalPolynomial& a, const LocalPolynomial& b) {
  std::map<Monomial2, Rational> out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out[{ma.first + mb.first, ma.second + mb.second}] += ca * cb;
  return LocalPolynomial(std::move(out));
}

std::string LocalPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  // Highest total degree first, x-heavy first within a degree.
  std::vector<std::pair<Monomial2, Rational>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& l, const auto& r) {
    const auto dl = l.first.first + l.first.second;
    const auto dr = r.first.first + r.first.second;
    if (dl != dr) return dl > dr;
    return l.first.first > r.first.first;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : sorted) {
    const Rational mag = c < 0 ? Rational(-c) : c;
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    const bool unit = m.first == 0 && m.second == 0;
    if (unit || mag != 1) out << to_display_string(mag);
    bool need_star = !unit && mag != 1;
    auto var = [&](const char* name, unsigned e) {
      if (e == 0) return;
      if (need_star) out << "*";
      out << name;
      if (e > 1) out << "^" << e;
      need_star = true;
    };
    var("x", m.first);
    var("y", m.second);
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class PolynomialParser {
 public:
  explicit PolynomialParser(std::string_view text) : text_(text) {}

  LocalPolynomial parse() {
    LocalPolynomial result = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("polynomial '" + std::string(text_) + "': " + why + " at column " + std::to_string(pos_ + 1));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Integer number() {
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected a number");
    Integer value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      value = value * 10 + (text_[pos_++] - '0');
    return value;
  }

  LocalPolynomial expression() {
    LocalPolynomial acc = term();
    while (true) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  LocalPolynomial term() {
    LocalPolynomial acc = unary();
    while (accept('*')) acc = acc * unary();
    return acc;
  }

  LocalPolynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  LocalPolynomial power() {
    LocalPolynomial base = primary();
    if (!accept('^')) return base;
    const Integer e = number();
    if (e > 1000) fail("exponent too large");
    return base.pow(e.convert_to<unsigned>());
  }

  LocalPolynomial primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      LocalPolynomial inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'x') {
      ++pos_;
      return LocalPolynomial::x();
    }
    if (c == 'y') {
      ++pos_;
      return LocalPolynomial::y();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return LocalPolynomial::constant(Rational(number()));
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LocalPolynomial parse_local_polynomial(std::string_view text) { return PolynomialParser(text).parse(); }

// ---------------------------------------------------------------------------
// Colength

namespace {

using SparseRow = std::map<std::size_t, Rational>;

// Incremental row echelon basis over Q; returns the rank.
class EchelonBasis {
 public:
  void insert(SparseRow row) {
    while (!row.empty()) {
      const auto [lead, value] = *row.begin();
      const auto it = pivots_.find(lead);
      if (it == pivots_.end()) {
        const Rational inv = 1 / value;
        for (auto& [col, v] : row) v *= inv;
        pivots_.emplace(lead, std::move(row));
        return;
      }
      const Rational factor = value;
      for (const auto& [col, v] : it->second) {
        auto& slot = row[col];
        slot -= factor * v;
        if (slot == 0) row.erase(col);
      }
    }
  }

  std::size_t rank() const { return pivots_.size(); }

 private:
  std::map<std::size_t, SparseRow> pivots_;
};

// Monomials x^i y^j with i + j < bound, indexed by degree then x-exponent.
std::size_t monomial_index(unsigned i, unsigned j) {
  const std::size_t d = i + j;
  return d * (d + 1) / 2 + i;
}

std::size_t truncated_colength(const std::vector<LocalPolynomial>& generators, unsigned bound) {
  EchelonBasis basis;
  for (const auto& g : generators) {
    for (unsigned d = 0; d < bound; ++d) {
      for (unsigned a = 0; a <= d; ++a) {
        const unsigned b = d - a;
        SparseRow row;
        for (const auto& [m, c] : g.terms()) {
          const unsigned i = m.first + a;
          const unsigned j = m.second + b;
          if (i + j >= bound) continue;
          row.emplace(monomial_index(i, j), c);
        }
        if (!row.empty()) basis.insert(std::move(row));
      }
    }
  }
  const std::size_t monomials = static_cast<std::size_t>(bound) * (bound + 1) / 2;
  return monomials - basis.rank();
}

}  // namespace

std::size_t local_colength(const std::vector<LocalPolynomial>& generators, std::size_t degree_cap) {
  std::size_t previous = truncated_colength(generators, 1);
  for (unsigned bound = 2; bound <= degree_cap + 1; ++bound) {
    const std::size_t current = truncated_colength(generators, bound);
    if (current == previous) return current;
    previous = current;
  }
  throw NonIsolatedSingularityError("local colength did not stabilize below truncation degree " +
                                    std::to_string(degree_cap) + " (singularity is not isolated)");
}

LocalInvariants local_invariants(const LocalPolynomial& f) {
  if (f.is_zero()) throw ValidationError("the zero polynomial does not define a curve");
  if (f.coeff(0, 0) != 0) throw ValidationError("local equation must vanish at the origin: " + f.to_string());
  const long d = f.total_degree();
  const std::size_t cap = static_cast<std::size_t>(std::max(2L, 2 * d * d));
  const LocalPolynomial fx = f.dx();
  const LocalPolynomial fy = f.dy();
  LocalInvariants out;
  out.mu = static_cast<long>(local_colength({fx, fy}, cap));
  out.tau = static_cast<long>(local_colength({f, fx, fy}, cap));
  return out;
}

}  // namespace logmc
