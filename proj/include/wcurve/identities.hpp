#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "wcurve/point.hpp"
#include "wcurve/zpoly.hpp"

namespace wcurve {

enum class IdentityStatus { holds, holds_up_to_sign, fails };
const char* status_name(IdentityStatus s);

struct IdentityReport {
  std::string id;
  IdentityStatus status = IdentityStatus::fails;
  /// Residual of the certified equation; the zero polynomial when it holds.
  ZPoly residual;
  std::string note;
};

/// Exact certification of the unconditional polynomial identities behind the
/// group law, by expansion over the integers. One of them (the partial-X
/// decomposition) only holds after a sign flip; its report carries the
/// realized sign and status holds_up_to_sign.
std::vector<IdentityReport> check_exact_suite();

/// Randomized certification of the point-dependent identities over GF(p),
/// p an odd prime: line interpolation through the added points, the cubic
/// factorization of W along the line (secant and tangent cases), and the
/// derivative form it implies. Each trial draws a fresh curve and points
/// from a PRNG stream derived from (seed, trial index), then checks exact
/// polynomial equalities in GF(p)[X].
std::vector<IdentityReport> check_randomized_suite(std::uint64_t p,
                                                   std::uint32_t trials,
                                                   std::uint64_t seed);

/// The same point-dependent identities checked over a small finite field by
/// direct enumeration: every curve (or a seeded sample of curve_limit
/// curves) and every pair of on-curve points in a non-vertical slope case.
/// This exercises characteristic 2 and 3, where square-root sampling does
/// not apply.
std::vector<IdentityReport> check_conditional_suite_small(
    const Field& f, std::uint64_t curve_limit = 0, std::uint64_t seed = 0);

/// Draws an affine point on the curve, solving the y-quadratic by
/// completing the square when the field is GF(p) with p odd, and by direct
/// y-enumeration over small fields otherwise. Gives up after 64 x-values.
std::pair<FieldElement, FieldElement> sample_affine_point(
    const WeierstrassCurve& w, std::mt19937_64& rng);

}  // namespace wcurve
