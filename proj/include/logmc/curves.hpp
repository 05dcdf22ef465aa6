#pragma once

// Reduced curves on a nonsingular surface: the difference between the
// motivic Chern class of the complement and the logarithmic-form class is
// supported on the singular points, with coefficient (-delta + r - 1) in
// y^0 and (-tau + delta) in y^1 at each point.

#include "logmc/errors.hpp"
#include "logmc/local_algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace logmc {

/// Invariants (mu, tau, r, delta) of an isolated plane curve singularity.
/// Construction enforces mu = 2 delta - r + 1, tau <= mu, delta >= r - 1 >= 0.
class CurveSingularity {
 public:
  CurveSingularity(long mu, long tau, long r, long delta);
  /// delta derived through Milnor's formula.
  static CurveSingularity from_milnor(long mu, long tau, long r);

  long mu() const noexcept { return mu_; }
  long tau() const noexcept { return tau_; }
  long r() const noexcept { return r_; }
  long delta() const noexcept { return delta_; }

  friend bool operator==(const CurveSingularity&, const CurveSingularity&) = default;

 private:
  long mu_, tau_, r_, delta_;
};

/// a [O_x] + b [O_x] y.
struct PointTerm {
  long a = 0;
  long b = 0;
  friend bool operator==(const PointTerm&, const PointTerm&) = default;
};

struct CurveDifferenceClass {
  std::vector<PointTerm> points;

  PointTerm total() const;
  bool is_zero() const;
};

/// Thrown by branch_count for polynomials outside the families where the
/// number of branches is determined by elementary means.
class BranchCountRequiredError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// delta = (mu + r - 1) / 2; rejects odd numerators and out-of-range input.
long delta_from_milnor(long mu, long r);

/// Number of local branches at 0 for: smooth germs (r = 1), reduced
/// homogeneous f (a union of deg f distinct lines), and binomials
/// c1 x^a + c2 y^b (r = gcd(a, b)). Otherwise BranchCountRequiredError.
long branch_count(const LocalPolynomial& f);

/// Full invariant tuple of the germ f; `r_override` replaces branch_count.
CurveSingularity analyze_singularity(const LocalPolynomial& f, std::optional<long> r_override = std::nullopt);

CurveDifferenceClass difference_class_curve(const std::vector<CurveSingularity>& sings);

/// Per point tau - mu, after checking (tau - delta) - delta + r - 1 = tau - mu.
std::vector<long> csm_minus_chern_curve(const std::vector<CurveSingularity>& sings);

/// -delta + r - 1, the local geometric-minus-arithmetic genus.
long genus_defect(const CurveSingularity& sing);

/// Pushes (a + b y)[O_x] through ch * td (a point class), the (trivial)
/// dimension-0 normalization and y = -1; returns the degree a - b.
long point_term_at_minus_one(const PointTerm& term);

}  // namespace logmc
