#include "logmc/curves.hpp"

#include "logmc/hirzebruch.hpp"
#include "logmc/kring.hpp"

#include <algorithm>
#include <numeric>

namespace logmc {

namespace {

std::string tuple_string(long mu, long tau, long r, long delta) {
  return "(mu=" + std::to_string(mu) + ", tau=" + std::to_string(tau) + ", r=" + std::to_string(r) +
         ", delta=" + std::to_string(delta) + ")";
}

}  // namespace

CurveSingularity::CurveSingularity(long mu, long tau, long r, long delta) : mu_(mu), tau_(tau), r_(r), delta_(delta) {
  const std::string where = tuple_string(mu, tau, r, delta);
  if (mu < 0 || tau < 0 || delta < 0) throw ValidationError("negative invariant in " + where);
  if (r < 1) throw ValidationError("branch count must be positive in " + where);
  if (mu != 2 * delta - r + 1) throw ValidationError("Milnor's formula mu = 2 delta - r + 1 fails for " + where);
  if (tau > mu) throw ValidationError("Tjurina number exceeds Milnor number in " + where);
  if (delta < r - 1) throw ValidationError("delta < r - 1 in " + where);
}

CurveSingularity CurveSingularity::from_milnor(long mu, long tau, long r) {
  return CurveSingularity(mu, tau, r, delta_from_milnor(mu, r));
}

PointTerm CurveDifferenceClass::total() const {
  PointTerm sum;
  for (const auto& p : points) {
    sum.a += p.a;
    sum.b += p.b;
  }
  return sum;
}

bool CurveDifferenceClass::is_zero() const {
  return std::all_of(points.begin(), points.end(), [](const PointTerm& p) { return p.a == 0 && p.b == 0; });
}

long delta_from_milnor(long mu, long r) {
  if (mu < 0 || r < 1) {
    throw ValidationError("invalid invariants mu=" + std::to_string(mu) + ", r=" + std::to_string(r));
  }
  if ((mu + r - 1) % 2 != 0) {
    throw ValidationError("mu + r - 1 must be even (mu=" + std::to_string(mu) + ", r=" + std::to_string(r) + ")");
  }
  return (mu + r - 1) / 2;
}

long branch_count(const LocalPolynomial& f) {
  if (f.is_zero() || f.coeff(0, 0) != 0) throw ValidationError("local equation must vanish at the origin");
  if (f.order() == 1) return 1;

  if (f.is_homogeneous()) {
    // A homogeneous binary form with an isolated singularity is squarefree,
    // hence a product of deg f distinct lines over an algebraically closed field.
    (void)local_invariants(f);
    return f.total_degree();
  }

  if (f.terms().size() == 2) {
    const auto& [m1, c1] = *f.terms().begin();
    const auto& [m2, c2] = *std::next(f.terms().begin());
    // Ordered map: (0, b) precedes (a, 0).
    if (m1.first == 0 && m1.second > 0 && m2.second == 0 && m2.first > 0)
      return std::gcd(static_cast<long>(m2.first), static_cast<long>(m1.second));
  }
  throw BranchCountRequiredError("branch count required: cannot determine the number of branches of '" +
                                 f.to_string() + "'; supply \"r\" explicitly");
}

CurveSingularity analyze_singularity(const LocalPolynomial& f, std::optional<long> r_override) {
  const LocalInvariants inv = local_invariants(f);
  const long r = r_override ? *r_override : branch_count(f);
  const CurveSingularity sing = CurveSingularity::from_milnor(inv.mu, inv.tau, r);
  if (sing.mu() != 2 * sing.delta() - sing.r() + 1)
    throw InconsistencyError("Milnor's formula fails after construction", f.to_string());
  return sing;
}

CurveDifferenceClass difference_class_curve(const std::vector<CurveSingularity>& sings) {
  CurveDifferenceClass out;
  out.points.reserve(sings.size());
  for (const auto& s : sings) out.points.push_back({-s.delta() + s.r() - 1, -s.tau() + s.delta()});
  return out;
}

std::vector<long> csm_minus_chern_curve(const std::vector<CurveSingularity>& sings) {
  std::vector<long> out;
  out.reserve(sings.size());
  const CurveDifferenceClass diff = difference_class_curve(sings);
  for (std::size_t i = 0; i < sings.size(); ++i) {
    const auto& s = sings[i];
    const long via_difference = point_term_at_minus_one(diff.points[i]);
    const long expected = s.tau() - s.mu();
    if (via_difference != expected) {
      throw InconsistencyError("point term at y=-1 disagrees with tau - mu",
                               tuple_string(s.mu(), s.tau(), s.r(), s.delta()));
    }
    out.push_back(expected);
  }
  return out;
}

long genus_defect(const CurveSingularity& sing) { return -sing.delta() + sing.r() - 1; }

long point_term_at_minus_one(const PointTerm& term) {
  // A point is P^0: ch(O_x) td = [x] and the dimension-0 rescaling is trivial.
  const KPoly cls = KPoly::linear(KClass::constant(0, term.a), KClass::constant(0, term.b));
  const CohClass value = csm_at_minus_one(cls);
  return numerator(value[0]).convert_to<long>();
}

}  // namespace logmc
