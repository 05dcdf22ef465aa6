#pragma once

// Central hyperplane arrangements in affine (n+1)-space: the intersection
// lattice, its Moebius function, the characteristic polynomial and the
// integer-root (Terao) factorization of that polynomial.

#include "logmc/numeric.hpp"

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace logmc {

using IntegerMatrix = std::vector<std::vector<Integer>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

inline constexpr std::size_t kDefaultMaxLatticeNodes = 100000;

/// A central arrangement given by integer linear forms in `ambient_dim`
/// variables. Forms are stored primitive (content 1) with a positive first
/// nonzero coefficient; zero forms and proportional pairs are rejected.
class Arrangement {
 public:
  Arrangement(std::size_t ambient_dim, IntegerMatrix forms);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  /// n, the dimension of the projective space the arrangement lives in.
  std::size_t projective_dim() const noexcept { return ambient_dim_ - 1; }
  std::size_t size() const noexcept { return forms_.size(); }
  bool empty() const noexcept { return forms_.empty(); }
  const IntegerMatrix& forms() const noexcept { return forms_; }

 private:
  std::size_t ambient_dim_;
  IntegerMatrix forms_;
};

/// Reads the text format: first line the ambient dimension, then one form per
/// line as whitespace-separated integers. `#` starts a comment.
Arrangement parse_arrangement(std::istream& in);
Arrangement read_arrangement_file(const std::filesystem::path& path);

/// Canonical reduced row echelon form of the row space of `rows`.
/// Fraction-free (Bareiss) forward elimination followed by fraction-free
/// back substitution; only the final pivot scaling introduces fractions.
/// Zero rows are dropped, so the result has exactly rank-many rows.
RationalMatrix reduced_row_echelon(IntegerMatrix rows);

/// A linear subspace of the ambient space, stored as the canonical RREF of
/// the linear forms vanishing on it.
class Subspace {
 public:
  static Subspace whole(std::size_t ambient_dim);
  static Subspace cut_out_by(std::size_t ambient_dim, IntegerMatrix forms);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t codim() const noexcept { return equations_.size(); }
  std::size_t dim() const noexcept { return ambient_dim_ - equations_.size(); }
  const RationalMatrix& equations() const noexcept { return equations_; }

  /// True if `form` vanishes on this subspace, i.e. lies in the row space.
  bool annihilated_by(std::span<const Integer> form) const;
  Subspace intersect(std::span<const Integer> form) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  Subspace(std::size_t ambient_dim, RationalMatrix equations)
      : ambient_dim_(ambient_dim), equations_(std::move(equations)) {}

  std::size_t ambient_dim_;
  RationalMatrix equations_;
};

/// Node order of the lattice: descending dimension, then lexicographic on the
/// RREF matrix.
bool lattice_order_less(const Subspace& a, const Subspace& b);

struct LatticeNode {
  Subspace subspace;
  Integer mobius;
  /// Indices (into Arrangement::forms) of the hyperplanes containing the node.
  std::vector<std::size_t> hyperplanes;
};

class IntersectionLattice {
 public:
  IntersectionLattice(std::size_t ambient_dim, std::size_t num_hyperplanes,
                      std::vector<LatticeNode> nodes);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t projective_dim() const noexcept { return ambient_dim_ - 1; }
  std::size_t num_hyperplanes() const noexcept { return num_hyperplanes_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  const std::vector<LatticeNode>& nodes() const noexcept { return nodes_; }
  const LatticeNode& operator[](std::size_t i) const { return nodes_[i]; }

  /// Node `outer` contains node `inner` as point sets (non-strict).
  bool contains(std::size_t outer, std::size_t inner) const;

 private:
  std::size_t ambient_dim_;
  std::size_t num_hyperplanes_;
  std::vector<LatticeNode> nodes_;
};

/// Breadth-first closure of {ambient space} under intersection with the
/// hyperplanes, followed by the top-down Moebius recursion. Throws
/// ValidationError if more than `max_nodes` nodes appear.
IntersectionLattice build_lattice(const Arrangement& arrangement,
                                  std::size_t max_nodes = kDefaultMaxLatticeNodes);

/// Dense integer polynomial in t, index = degree, trailing zeros trimmed.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);

  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  Integer coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }
  Integer evaluate(const Integer& t) const;
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  std::string to_string(const std::string& var = "t") const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<Integer> coeffs_;
};

IntPolynomial characteristic_polynomial(const IntersectionLattice& lattice);

using Exponents = std::vector<long>;

/// Outcome of the integer-root search. When `splits` is false, `roots` holds
/// the integer roots found and `remaining` the factor without integer roots;
/// the arrangement is then certainly not free. A split polynomial only yields
/// candidate exponents.
struct TeraoResult {
  bool splits = false;
  Exponents roots;
  IntPolynomial remaining;
};

TeraoResult exponents_via_terao(const IntPolynomial& chi);

std::string format_exponents(const Exponents& exps);
/// Parses "1,2,3" (braces optional). Throws ParseError.
Exponents parse_exponents(const std::string& text);

}  // namespace logmc
