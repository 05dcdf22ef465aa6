#include "logmc/arrangement.hpp"

#include "logmc/errors.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

namespace logmc {

namespace {

using boost::multiprecision::abs;

void make_primitive(std::vector<Integer>& row) {
  Integer content = 0;
  for (const auto& v : row) content = gcd(content, v);
  if (content <= 1) return;
  for (auto& v : row) v /= content;
}

std::vector<Integer> to_integer_row(const std::vector<Rational>& row) {
  Integer common = 1;
  for (const auto& q : row) common = lcm(common, denominator(q));
  std::vector<Integer> out;
  out.reserve(row.size());
  for (const auto& q : row) out.push_back(numerator(q) * (common / denominator(q)));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Arrangement

Arrangement::Arrangement(std::size_t ambient_dim, IntegerMatrix forms)
    : ambient_dim_(ambient_dim), forms_(std::move(forms)) {
  if (ambient_dim_ == 0) throw ValidationError("ambient dimension must be positive");
  for (std::size_t i = 0; i < forms_.size(); ++i) {
    auto& form = forms_[i];
    if (form.size() != ambient_dim_) {
      throw ValidationError("form " + std::to_string(i) + " has " + std::to_string(form.size()) +
                            " coefficients, expected " + std::to_string(ambient_dim_));
    }
    const auto lead = std::find_if(form.begin(), form.end(), [](const Integer& v) { return v != 0; });
    if (lead == form.end()) throw ValidationError("form " + std::to_string(i) + " is zero");
    make_primitive(form);
    if (*lead < 0)
      for (auto& v : form) v = -v;
  }
  for (std::size_t i = 0; i < forms_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (forms_[i] == forms_[j]) {
        throw ValidationError("form " + std::to_string(i) + " is proportional to form " +
                              std::to_string(j) + " (repeated hyperplane)");
      }
    }
  }
}

Arrangement parse_arrangement(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t ambient_dim = 0;
  bool have_dim = false;
  IntegerMatrix forms;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<Integer> row;
    std::string token;
    while (fields >> token) {
      try {
        const Rational q = parse_fraction(token);
        if (denominator(q) != 1) throw ParseError("");
        row.push_back(numerator(q));
      } catch (const ParseError&) {
        throw ParseError("line " + std::to_string(line_no) + ": expected an integer, got '" + token + "'");
      }
    }
    if (row.empty()) continue;
    if (!have_dim) {
      if (row.size() != 1 || row[0] <= 0)
        throw ParseError("line " + std::to_string(line_no) + ": first line must be a positive ambient dimension");
      ambient_dim = row[0].convert_to<std::size_t>();
      have_dim = true;
      continue;
    }
    if (row.size() != ambient_dim) {
      throw ParseError("line " + std::to_string(line_no) + ": form " + std::to_string(forms.size()) + " has " +
                       std::to_string(row.size()) + " coefficients, expected " + std::to_string(ambient_dim));
    }
    forms.push_back(std::move(row));
  }
  if (!have_dim) throw ParseError("arrangement file has no ambient dimension line");
  return Arrangement(ambient_dim, std::move(forms));
}

Arrangement read_arrangement_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open arrangement file '" + path.string() + "'");
  return parse_arrangement(in);
}

// ---------------------------------------------------------------------------
// Linear algebra

RationalMatrix reduced_row_echelon(IntegerMatrix m) {
  const std::size_t rows = m.size();
  if (rows == 0) return {};
  const std::size_t cols = m.front().size();

  // Bareiss: after step k every live entry is a (k+1)-minor, so the division
  // by the previous pivot is exact.
  std::vector<std::size_t> pivot_cols;
  Integer previous = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / previous;
      m[i][c] = 0;
    }
    previous = m[r][c];
    pivot_cols.push_back(c);
    ++r;
  }
  m.resize(r);

  for (std::size_t k = 0; k < r; ++k) {
    const std::size_t c = pivot_cols[k];
    for (std::size_t i = 0; i < k; ++i) {
      if (m[i][c] == 0) continue;
      const Integer factor = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = m[k][c] * m[i][j] - factor * m[k][j];
      make_primitive(m[i]);
    }
  }

  RationalMatrix out(r, std::vector<Rational>(cols));
  for (std::size_t k = 0; k < r; ++k) {
    const Integer& pivot = m[k][pivot_cols[k]];
    for (std::size_t j = 0; j < cols; ++j) out[k][j] = Rational(m[k][j]) / pivot;
  }
  return out;
}

Subspace Subspace::whole(std::size_t ambient_dim) { return Subspace(ambient_dim, {}); }

Subspace Subspace::cut_out_by(std::size_t ambient_dim, IntegerMatrix forms) {
  return Subspace(ambient_dim, reduced_row_echelon(std::move(forms)));
}

bool Subspace::annihilated_by(std::span<const Integer> form) const {
  std::vector<Rational> v(form.begin(), form.end());
  for (const auto& row : equations_) {
    const auto pivot = std::find_if(row.begin(), row.end(), [](const Rational& q) { return q != 0; });
    const auto c = static_cast<std::size_t>(pivot - row.begin());
    if (v[c] == 0) continue;
    const Rational factor = v[c];
    for (std::size_t j = c; j < v.size(); ++j) v[j] -= factor * row[j];
  }
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

Subspace Subspace::intersect(std::span<const Integer> form) const {
  if (annihilated_by(form)) return *this;
  IntegerMatrix rows;
  rows.reserve(equations_.size() + 1);
  for (const auto& row : equations_) rows.push_back(to_integer_row(row));
  rows.emplace_back(form.begin(), form.end());
  return cut_out_by(ambient_dim_, std::move(rows));
}

bool lattice_order_less(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return a.dim() > b.dim();
  return a.equations() < b.equations();
}

// ---------------------------------------------------------------------------
// Lattice

IntersectionLattice::IntersectionLattice(std::size_t ambient_dim, std::size_t num_hyperplanes,
                                         std::vector<LatticeNode> nodes)
    : ambient_dim_(ambient_dim), num_hyperplanes_(num_hyperplanes), nodes_(std::move(nodes)) {}

bool IntersectionLattice::contains(std::size_t outer, std::size_t inner) const {
  const auto& a = nodes_[outer].hyperplanes;
  const auto& b = nodes_[inner].hyperplanes;
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

IntersectionLattice build_lattice(const Arrangement& arrangement, std::size_t max_nodes) {
  const std::size_t dim = arrangement.ambient_dim();
  const auto& forms = arrangement.forms();

  std::map<RationalMatrix, std::size_t> seen;
  std::vector<Subspace> found;
  std::deque<std::size_t> frontier;

  auto admit = [&](Subspace s) {
    auto [it, inserted] = seen.emplace(s.equations(), found.size());
    if (!inserted) return;
    if (found.size() >= max_nodes)
      throw ValidationError("intersection lattice exceeds " + std::to_string(max_nodes) + " nodes");
    frontier.push_back(found.size());
    found.push_back(std::move(s));
  };

  admit(Subspace::whole(dim));
  while (!frontier.empty()) {
    const std::size_t idx = frontier.front();
    frontier.pop_front();
    for (const auto& form : forms) {
      if (found[idx].annihilated_by(form)) continue;
      admit(found[idx].intersect(form));
    }
  }

  std::sort(found.begin(), found.end(), lattice_order_less);

  std::vector<LatticeNode> nodes;
  nodes.reserve(found.size());
  for (auto& s : found) {
    LatticeNode node{std::move(s), 0, {}};
    for (std::size_t h = 0; h < forms.size(); ++h)
      if (node.subspace.annihilated_by(forms[h])) node.hyperplanes.push_back(h);
    nodes.push_back(std::move(node));
  }

  // Moebius top-down; every strictly larger node precedes x in the order.
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    if (j == 0) {
      nodes[j].mobius = 1;
      continue;
    }
    Integer sum = 0;
    const auto& below = nodes[j].hyperplanes;
    for (std::size_t i = 0; i < j; ++i) {
      if (nodes[i].subspace.dim() <= nodes[j].subspace.dim()) break;
      const auto& above = nodes[i].hyperplanes;
      if (std::includes(below.begin(), below.end(), above.begin(), above.end())) sum += nodes[i].mobius;
    }
    nodes[j].mobius = -sum;
  }
  return IntersectionLattice(dim, forms.size(), std::move(nodes));
}

// ---------------------------------------------------------------------------
// Characteristic polynomial

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPolynomial::evaluate(const Integer& t) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    const Integer mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) out << mag;
    if (k > 0) {
      out << var;
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

IntPolynomial characteristic_polynomial(const IntersectionLattice& lattice) {
  std::vector<Integer> coeffs(lattice.ambient_dim() + 1, 0);
  for (const auto& node : lattice.nodes()) coeffs[node.subspace.dim()] += node.mobius;
  return IntPolynomial(std::move(coeffs));
}

TeraoResult exponents_via_terao(const IntPolynomial& chi) {
  if (!chi.is_monic()) throw ValidationError("characteristic polynomial must be monic, got " + chi.to_string());

  const long degree = chi.degree();
  // Exponents are nonnegative and sum to the number of hyperplanes, which is
  // minus the subleading coefficient.
  long hyperplanes = 0;
  if (degree >= 1) hyperplanes = static_cast<long>(-chi.coeff(static_cast<std::size_t>(degree - 1)));

  TeraoResult result;
  std::vector<Integer> rem = chi.coeffs();
  for (long r = 0; r <= hyperplanes && rem.size() > 1; ++r) {
    while (rem.size() > 1) {
      // Synthetic division by (t - r).
      std::vector<Integer> quotient(rem.size() - 1);
      Integer carry = 0;
      for (std::size_t k = rem.size(); k-- > 1;) {
        carry = carry * r + rem[k];
        quotient[k - 1] = carry;
      }
      if (carry * r + rem[0] != 0) break;
      rem = std::move(quotient);
      result.roots.push_back(r);
    }
  }
  result.remaining = IntPolynomial(std::move(rem));
  result.splits = result.remaining.degree() == 0;

  if (hyperplanes > 0 && chi.evaluate(1) != 0) {
    throw InconsistencyError("characteristic polynomial of a nonempty central arrangement must vanish at 1",
                             chi.to_string());
  }
  return result;
}

std::string format_exponents(const Exponents& exps) {
  std::string out = "{";
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(exps[i]);
  }
  return out + "}";
}

Exponents parse_exponents(const std::string& text) {
  std::string body = text;
  std::erase_if(body, [](char c) { return c == '{' || c == '}' || c == ' '; });
  Exponents out;
  std::istringstream in(body);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw ParseError("empty entry in exponent list '" + text + "'");
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(item, &used);
    } catch (const std::exception&) {
      throw ParseError("malformed exponent '" + item + "'");
    }
    if (used != item.size()) throw ParseError("malformed exponent '" + item + "'");
    out.push_back(value);
  }
  if (out.empty()) throw ParseError("empty exponent list");
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace logmc
