#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coxfar/invariants.hpp"

namespace coxfar {

// Core I and support J of the parabolic W_X, as bitmasks over simple indices.
struct CoreSupport {
  uint32_t core;
  uint32_t support;
  bool geometric_checked;  // method B (exact feasibility) ran on this flat
};

// Root-combinatorial method: I = simples among root_set(X), J = union of the
// coefficient supports. The geometric method runs as a cross-check on every
// flat for rank <= 3 and on a deterministic 1-in-16 digest subsample above;
// any disagreement is a hard error.
CoreSupport core_and_support(const RootSystem& rs, const Flat& x,
                             bool force_geometric = false);

// Geometric method alone (linear/cone feasibility; no root saturation facts):
// s in I iff the form of alpha_s vanishes on X; s in J iff it vanishes on the
// whole of X meet the closed fundamental chamber.
CoreSupport core_and_support_geometric(const RootSystem& rs, const Flat& x);

// Hyperplane flats among `candidates` (lattice ids) meeting the closed
// chamber w*C0 only at the origin; returned in canonical (ascending id) order.
std::vector<int> faraway_planes(const IntersectionLattice& lat,
                                const GroupElement& w,
                                const std::vector<int>& candidates);

// Nearest faraway flats for chamber w*C0 with associated face w*C0^core,
// among `candidates`, via the restriction correspondence: Z inside the span
// of the face, of codimension |core|+1, meeting the closed face only at 0.
// The origin flat is rejected (it is faraway but never *nearest* faraway).
std::vector<int> nearest_faraway_flats(const IntersectionLattice& lat,
                                       const GroupElement& w, uint32_t core,
                                       const std::vector<int>& candidates);

// Direct-definition oracle: Z far from the chamber and the minimal face of
// the chamber whose span contains Z is w*C0^core of dimension dim(Z)+1.
// Asserts associated-face uniqueness for every flat it accepts.
std::vector<int> nearest_faraway_flats_oracle(const IntersectionLattice& lat,
                                              const GroupElement& w,
                                              uint32_t core,
                                              const std::vector<int>& candidates);

// Enumeration-versus-formula comparison for one identity.
struct CountReport {
  std::string identity;
  long long lhs = 0;           // enumerated
  long long rhs = 0;           // formula (meaningful iff has_formula)
  bool has_formula = true;     // false: enumeration-only regime
  bool match = false;          // lhs == rhs when a formula exists
  bool bundled_exponents = false;
  std::string notes;
};

// Sum over all chambers of |faraway_planes(C, P)| against 2*|P|*beta(A).
CountReport double_counting_check(const IntersectionLattice& lat,
                                  const std::vector<GroupElement>& chambers,
                                  const std::vector<int>& hyperplanes,
                                  long long beta_value, int workers = 1);

// Flats of orbit [Y], full support, whose core is exactly the given subset
// (fundamental chamber throughout); canonical id order.
std::vector<int> g_set(const IntersectionLattice& lat, const Orbits& orb,
                       uint32_t core, int orbit_y);

// Flats of orbit [Y], full support, whose core I spans a flat of orbit [X].
std::vector<int> g_set_by_core_type(const IntersectionLattice& lat,
                                    const Orbits& orb, int orbit_x, int orbit_y);

// |G([X])_[Y]| against 2*u_{[X],[Y]} / [N(X):W_X] * prod_{i>=2}(b_i - 1).
// Only the simple-extension regime codim(Y) = codim(X)+1 carries a formula;
// otherwise the report is enumeration-only.
CountReport g_set_report(const IntersectionLattice& lat, const Orbits& orb,
                         int orbit_x, int orbit_y, const OSData& os_x,
                         long long group_order);

// Simple extensions of the core type: union of G([X])_[Y] over all [Y] one
// codimension deeper, against 2*|A^X| / [N(X):W_X] * prod_{i>=2}(b_i - 1).
CountReport nfw_se_report(const IntersectionLattice& lat, const Orbits& orb,
                          int orbit_x, const OSData& os_x, long long group_order);

// Full-support reflection count against (n*h/|W|) * prod_{i>=2}(e_i - 1).
CountReport chapoton(const IntersectionLattice& lat);

// Per-hyperplane-orbit refinement: full-support reflections of orbit [H]
// against prod_{i<n}(h - 1 - e_i) / [N(H):W_H]; also verifies exponent
// duality e_i = h - e_{n+1-i}.
CountReport chapoton_refined(const IntersectionLattice& lat, const Orbits& orb,
                             int orbit_h, long long group_order);

// Average number of faraway planes over all chambers, exactly.
struct AverageReport {
  Rational lhs;  // sum of per-chamber counts / number of chambers
  Rational rhs;  // |A| * prod_{i>=2} (e_i - 1)/(e_i + 1)
  bool match = false;
};

AverageReport average_faraway(const IntersectionLattice& lat,
                              const std::vector<GroupElement>& chambers,
                              int workers = 1);

// Coincidental-type closed form: |G(I)_[Y]| against
// u_{[V^I],[Y]} * prod_{i=2}^{n-|I|} (e_i - 1)/(e_i + 1).
// Rejects non-coincidental types and non-simple-extension queries.
CountReport coincidental_check(const IntersectionLattice& lat, const Orbits& orb,
                               uint32_t core, int orbit_y);

// Reducible groups: the number of full-support simple extensions of a core
// decomposes as a sum over the factor carrying the extra rank; compared
// against direct enumeration on the product lattice.
CountReport reduce_reducible_check(const IntersectionLattice& lat,
                                   uint32_t core);

// Positive-root indices of the simple roots (identity coordinate vectors).
std::vector<int> simple_root_indices(const RootSystem& rs);

}  // namespace coxfar
