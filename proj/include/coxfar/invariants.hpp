#pragma once

#include <string>
#include <vector>

#include "coxfar/arrangement.hpp"

namespace coxfar {

// Integer polynomial, coefficients in increasing degree order.
struct IntPolynomial {
  std::vector<long long> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  long long eval(long long x) const;
  IntPolynomial derivative() const;
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
};

// Mobius values mu(V, X) for every flat of the lattice (indexed by flat id).
std::vector<long long> mobius(const IntersectionLattice& lat);

// Mobius values mu(X, Z) inside the interval of a restriction, indexed by
// position: per level, per entry of RestrictionView::levels.
std::vector<std::vector<long long>> mobius(const IntersectionLattice& lat,
                                           const RestrictionView& view);

struct CharPolyResult {
  IntPolynomial chi;
  long long region_count;  // (-1)^rank chi(-1)
};

CharPolyResult characteristic_polynomial(const IntersectionLattice& lat);
CharPolyResult characteristic_polynomial(const IntersectionLattice& lat,
                                         const RestrictionView& view);

// Crapo's beta invariant (-1)^{rank-1} chi'(1).
long long beta(const IntPolynomial& chi, int arrangement_rank);

// Half the number of chambers meeting H only at the origin; throws on an odd
// count (invariant violation).
long long beta_via_chambers(const RootSystem& rs,
                            const std::vector<GroupElement>& elements,
                            const Flat& hyperplane);

// W-orbits of flats with isomorphism-type labels.
struct OrbitInfo {
  int representative;        // flat id (smallest in the orbit)
  long long size;            // orbit length = [W : N(X)]
  int codim;
  std::string label;         // e.g. "A1^2", "A2", "I2(5)'", disambiguated
  long long parabolic_order; // |W_X|

  friend bool operator==(const OrbitInfo&, const OrbitInfo&) = default;
};

struct Orbits {
  std::vector<int> orbit_of;      // per flat id
  std::vector<OrbitInfo> orbits;  // indexed by orbit id

  // [N(X) : W_X] = |W| / (orbit size * |W_X|).
  long long stabilizer_quotient(int orbit_id, long long group_order) const {
    const OrbitInfo& o = orbits[orbit_id];
    return group_order / (o.size * o.parabolic_order);
  }
};

Orbits orbits(const IntersectionLattice& lat);

// Coxeter-graph isomorphism type of the reflection subgroup generated by the
// reflections of a flat's root set ("A0" for the empty set).
std::string subsystem_label(const RootSystem& rs, const std::vector<int>& roots);

struct OSData {
  std::vector<int> exponents;  // b_1 <= ... <= b_k, k = dim X
  bool bundled;                // false: computed from the restriction lattice

  friend bool operator==(const OSData&, const OSData&) = default;
};

// Computed route: factor chi(A^X) into positive integer roots by trial
// division; a factorization failure is a hard error, never a fallback.
OSData os_exponents(const IntersectionLattice& lat, int flat_id);

// Bundled route for restrictions whose interval is deeper than the built
// lattice (E8-scale runs). Throws if the type is not in the shipped table.
OSData os_exponents_bundled(const CoxeterType& t, const std::string& orbit_label,
                            int codim);

// Orlik-Solomon numbers u_{[X],[Y]} for a representative of orbit x: flats of
// orbit y contained in it. Requires the lattice built to codim of [Y].
long long os_count(const IntersectionLattice& lat, const Orbits& orb, int orbit_x,
                   int orbit_y);

// Number of subsets J of S whose standard parabolic flat lies in the orbit.
long long nu(const IntersectionLattice& lat, const Orbits& orb, int orbit_id);

}  // namespace coxfar
