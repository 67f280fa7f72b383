#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "coxfar/coxeter.hpp"

namespace coxfar {

// A flat of the reflection arrangement, canonically represented by the
// saturated, sorted set of positive-root indices vanishing on it.
struct Flat {
  std::vector<int> roots;
  int dim;

  friend bool operator==(const Flat&, const Flat&) = default;
};

// Saturates an arbitrary set of positive-root indices into a canonical flat.
Flat flat_from_roots(const RootSystem& rs, const std::vector<int>& roots);

// Image of a flat under a group element (a pure index relabeling).
std::vector<int> map_root_set(const GroupElement& g, const std::vector<int>& roots);

// Intersection lattice graded by codimension 0..max_codim. Flat ids are
// stable: level by level, root sets in lexicographic order.
class IntersectionLattice {
 public:
  IntersectionLattice(const RootSystem& rs, int max_codim, int workers = 1);

  // Rehydrates a lattice from flats previously produced by the building
  // constructor (canonical id order); validates the grading.
  IntersectionLattice(const RootSystem& rs, std::vector<Flat> flats,
                      int max_codim);

  const RootSystem& roots() const { return *rs_; }
  int max_codim() const { return max_codim_; }
  int num_flats() const { return static_cast<int>(flats_.size()); }
  const Flat& flat(int id) const { return flats_[id]; }
  int codim(int id) const { return rs_->rank() - flats_[id].dim; }

  // Flat ids of one codimension level.
  const std::vector<int>& level(int codim) const { return levels_[codim]; }

  // Id of a canonical flat, -1 if absent (e.g. deeper than max_codim).
  int find(const std::vector<int>& root_set) const;
  // Id of the flat spanned by the given roots; throws if deeper than built.
  int flat_id(const std::vector<int>& roots_of_span) const;

  // Subspace containment: flat a inside flat b (root set of b inside a's).
  bool contained_in(int a, int b) const;

 private:
  const RootSystem* rs_;
  int max_codim_;
  std::vector<Flat> flats_;
  std::vector<std::vector<int>> levels_;
  std::map<std::vector<int>, int> index_;
};

// --- Chambers and faces -------------------------------------------------
//
// Chambers of a reflection arrangement are w*C0 for group elements w; faces
// are pairs (w, J) with face = w*C0^J. No chamber geometry is ever stored.

// Does flat X meet the closed chamber w*C0 only at the origin? Decided by
// reducing to the fundamental chamber and exact Fourier-Motzkin feasibility.
bool cone_trivial(const RootSystem& rs, const Flat& x, const GroupElement& w);

// Same question for the closed face w*C0^J (J a bitmask of wall indices).
bool cone_trivial_face(const RootSystem& rs, const Flat& x,
                       const GroupElement& w, uint32_t walls);

// Independent oracle: tests whether X meets the simplicial cone spanned by
// the chamber's extreme rays, by exact enumeration of basic solutions.
bool cone_trivial_rays_oracle(const RootSystem& rs, const Flat& x,
                              const GroupElement& w);

// Exact feasibility of { A v >= 0 (rows ineq), B v = 0 (rows eq), c v = 1 }
// over the field, by substitution of equalities then Fourier-Motzkin.
// Affine forms: coefficients 0..n-1, constant at position n.
bool fm_feasible(std::vector<FieldVector> eqs, std::vector<FieldVector> ineqs,
                 int nvars);

// The restriction A^X as a view into the lattice: flats contained in X,
// re-graded so X itself has relative codimension 0.
struct RestrictionView {
  int top;                              // flat id of X
  std::vector<std::vector<int>> levels; // by relative codim, flat ids
  int rank() const { return static_cast<int>(levels.size()) - 1; }
  int num_hyperplanes() const {
    return levels.size() > 1 ? static_cast<int>(levels[1].size()) : 0;
  }
};

// rel_depth = -1 builds the full interval under X (needed for characteristic
// polynomials). Throws std::runtime_error naming the needed depth when the
// lattice was not built deep enough.
RestrictionView restriction(const IntersectionLattice& lat, int flat_id,
                            int rel_depth = -1);

}  // namespace coxfar
