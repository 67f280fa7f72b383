#include "coxfar/faraway.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "coxfar/parallel.hpp"

namespace coxfar {

namespace {

// Affine form v -> B(root_r, v), coefficients 0..n-1, constant 0 at slot n.
FieldVector root_form(const RootSystem& rs, int r) {
  const int n = rs.rank();
  FieldVector f = FieldVector::Constant(n + 1, AlgebraicNumber(0));
  for (int j = 0; j < n; ++j) {
    AlgebraicNumber c(0);
    for (int i = 0; i < n; ++i) {
      if (rs.root(r)(i).is_zero()) continue;
      c += rs.root(r)(i) * rs.gram()(i, j);
    }
    f(j) = c;
  }
  return f;
}

uint32_t full_mask(int n) { return (n == 32) ? ~0u : ((1u << n) - 1); }

// Deterministic digest of a canonical root set (FNV-1a).
uint64_t flat_digest(const std::vector<int>& roots) {
  uint64_t h = 1469598103934665603ull;
  for (int r : roots) {
    h ^= static_cast<uint64_t>(r) + 1;
    h *= 1099511628211ull;
  }
  return h;
}

std::string mask_str(uint32_t m, int n) {
  std::string s = "{";
  for (int i = 0; i < n; ++i)
    if (m & (1u << i)) s += (s.size() > 1 ? "," : "") + std::to_string(i + 1);
  return s + "}";
}

}  // namespace

std::vector<int> simple_root_indices(const RootSystem& rs) {
  const int n = rs.rank();
  std::vector<int> out(n);
  for (int s = 0; s < n; ++s) {
    FieldVector e = FieldVector::Constant(n, AlgebraicNumber(0));
    e(s) = AlgebraicNumber(1);
    auto hit = rs.find_root(e);
    if (!hit || hit->second < 0)
      throw std::logic_error("simple root missing from the root system");
    out[s] = hit->first;
  }
  return out;
}

CoreSupport core_and_support_geometric(const RootSystem& rs, const Flat& x) {
  const int n = rs.rank();
  std::vector<int> simple = simple_root_indices(rs);
  std::vector<FieldVector> base_eqs;
  for (int r : x.roots) base_eqs.push_back(root_form(rs, r));

  CoreSupport cs{0, 0, true};
  for (int s = 0; s < n; ++s) {
    // s is in the core iff the wall form vanishes on all of X, i.e. the
    // system { forms of X = 0, B(alpha_s, v) = 1 } is infeasible.
    std::vector<FieldVector> eqs = base_eqs;
    FieldVector slice = root_form(rs, simple[s]);
    slice(n) -= AlgebraicNumber(1);
    eqs.push_back(std::move(slice));
    if (!fm_feasible(std::move(eqs), {}, n)) cs.core |= 1u << s;
  }
  for (int s = 0; s < n; ++s) {
    // s is in the support iff the wall form vanishes on all of the cone
    // X meet closed(C0), i.e. no point of it has B(alpha_s, v) = 1.
    std::vector<FieldVector> eqs = base_eqs;
    FieldVector slice = root_form(rs, simple[s]);
    slice(n) -= AlgebraicNumber(1);
    eqs.push_back(std::move(slice));
    std::vector<FieldVector> ineqs;
    for (int t = 0; t < n; ++t) ineqs.push_back(root_form(rs, simple[t]));
    if (!fm_feasible(std::move(eqs), std::move(ineqs), n)) cs.support |= 1u << s;
  }
  return cs;
}

CoreSupport core_and_support(const RootSystem& rs, const Flat& x,
                             bool force_geometric) {
  const int n = rs.rank();
  std::vector<int> simple = simple_root_indices(rs);
  CoreSupport cs{0, 0, false};
  for (int s = 0; s < n; ++s)
    if (std::binary_search(x.roots.begin(), x.roots.end(), simple[s]))
      cs.core |= 1u << s;
  for (int r : x.roots) cs.support |= rs.root_support(r);

  bool check = force_geometric || n <= 3 || (flat_digest(x.roots) % 16 == 0);
  if (check) {
    CoreSupport geo = core_and_support_geometric(rs, x);
    if (geo.core != cs.core || geo.support != cs.support) {
      std::ostringstream os;
      os << "core/support methods disagree: combinatorial core "
         << mask_str(cs.core, n) << " support " << mask_str(cs.support, n)
         << ", geometric core " << mask_str(geo.core, n) << " support "
         << mask_str(geo.support, n);
      throw std::logic_error(os.str());
    }
    cs.geometric_checked = true;
  }
  return cs;
}

std::vector<int> faraway_planes(const IntersectionLattice& lat,
                                const GroupElement& w,
                                const std::vector<int>& candidates) {
  std::vector<int> out;
  for (int id : candidates) {
    if (lat.codim(id) != 1)
      throw std::invalid_argument("faraway_planes expects hyperplane flats");
    if (cone_trivial(lat.roots(), lat.flat(id), w)) out.push_back(id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> nearest_faraway_flats(const IntersectionLattice& lat,
                                       const GroupElement& w, uint32_t core,
                                       const std::vector<int>& candidates) {
  const RootSystem& rs = lat.roots();
  const int want_codim = std::popcount(core) + 1;
  std::vector<int> span_simples;
  for (int s = 0; s < rs.rank(); ++s)
    if (core & (1u << s)) span_simples.push_back(simple_root_indices(rs)[s]);
  Flat face_span = flat_from_roots(rs, span_simples);
  GroupElement winv = w.inverse();

  std::vector<int> out;
  for (int id : candidates) {
    const Flat& z = lat.flat(id);
    if (z.dim == 0)
      throw std::invalid_argument(
          "the origin is excluded: it is faraway but never nearest faraway");
    if (lat.codim(id) != want_codim) continue;
    std::vector<int> in_c0 =
        w.is_identity() ? z.roots : map_root_set(winv, z.roots);
    if (!std::includes(in_c0.begin(), in_c0.end(), face_span.roots.begin(),
                       face_span.roots.end()))
      continue;  // Z not inside the span of the face
    if (cone_trivial_face(rs, z, w, core)) out.push_back(id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> nearest_faraway_flats_oracle(const IntersectionLattice& lat,
                                              const GroupElement& w,
                                              uint32_t core,
                                              const std::vector<int>& candidates) {
  const RootSystem& rs = lat.roots();
  const int n = rs.rank();
  std::vector<int> simple = simple_root_indices(rs);
  GroupElement winv = w.inverse();

  std::vector<int> out;
  for (int id : candidates) {
    const Flat& z = lat.flat(id);
    if (z.dim == 0)
      throw std::invalid_argument(
          "the origin is excluded: it is faraway but never nearest faraway");
    if (!cone_trivial(rs, z, w)) continue;
    std::vector<int> in_c0 =
        w.is_identity() ? z.roots : map_root_set(winv, z.roots);
    uint32_t min_face = 0;  // walls of the minimal covering face
    for (int s = 0; s < n; ++s)
      if (std::binary_search(in_c0.begin(), in_c0.end(), simple[s]))
        min_face |= 1u << s;
    int c = lat.codim(id);
    if (std::popcount(min_face) != c - 1) continue;  // faraway, not nearest
    // Simpliciality: the covering face of that dimension must be unique.
    int covers = 0;
    for (uint32_t k = 0; k < (1u << n); ++k) {
      if (std::popcount(k) != c - 1) continue;
      bool inside = true;
      for (int s = 0; s < n && inside; ++s)
        if ((k & (1u << s)) &&
            !std::binary_search(in_c0.begin(), in_c0.end(), simple[s]))
          inside = false;
      if (inside) ++covers;
    }
    if (covers != 1)
      throw std::logic_error("associated face is not unique for a flat");
    if (min_face == core) out.push_back(id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

CountReport double_counting_check(const IntersectionLattice& lat,
                                  const std::vector<GroupElement>& chambers,
                                  const std::vector<int>& hyperplanes,
                                  long long beta_value, int workers) {
  const RootSystem& rs = lat.roots();
  const int n = static_cast<int>(chambers.size());
  int parts = std::max(1, std::min(workers, n));
  int chunk = (n + parts - 1) / parts;
  std::vector<long long> partial(parts, 0);
  parallel_chunks(n, parts, [&](int b, int e) {
    long long acc = 0;
    for (int i = b; i < e; ++i)
      for (int h : hyperplanes)
        if (cone_trivial(rs, lat.flat(h), chambers[i])) ++acc;
    partial[b / chunk] = acc;
  });
  CountReport rep;
  rep.identity = "double-counting";
  for (long long p : partial) rep.lhs += p;
  rep.rhs = 2 * static_cast<long long>(hyperplanes.size()) * beta_value;
  rep.match = rep.lhs == rep.rhs;
  return rep;
}

std::vector<int> g_set(const IntersectionLattice& lat, const Orbits& orb,
                       uint32_t core, int orbit_y) {
  const RootSystem& rs = lat.roots();
  uint32_t full = full_mask(rs.rank());
  std::vector<int> out;
  for (int id : lat.level(orb.orbits[orbit_y].codim)) {
    if (orb.orbit_of[id] != orbit_y) continue;
    CoreSupport cs = core_and_support(rs, lat.flat(id));
    if (cs.support == full && cs.core == core) out.push_back(id);
  }
  return out;
}

std::vector<int> g_set_by_core_type(const IntersectionLattice& lat,
                                    const Orbits& orb, int orbit_x,
                                    int orbit_y) {
  const RootSystem& rs = lat.roots();
  uint32_t full = full_mask(rs.rank());
  std::vector<int> simple = simple_root_indices(rs);
  std::vector<int> out;
  for (int id : lat.level(orb.orbits[orbit_y].codim)) {
    if (orb.orbit_of[id] != orbit_y) continue;
    CoreSupport cs = core_and_support(rs, lat.flat(id));
    if (cs.support != full) continue;
    std::vector<int> gens;
    for (int s = 0; s < rs.rank(); ++s)
      if (cs.core & (1u << s)) gens.push_back(simple[s]);
    int span_id = lat.find(flat_from_roots(rs, gens).roots);
    if (span_id < 0) throw std::logic_error("core span missing from lattice");
    if (orb.orbit_of[span_id] == orbit_x) out.push_back(id);
  }
  return out;
}

CountReport g_set_report(const IntersectionLattice& lat, const Orbits& orb,
                         int orbit_x, int orbit_y, const OSData& os_x,
                         long long group_order) {
  CountReport rep;
  rep.identity = "simple-extension count, core type " +
                 orb.orbits[orbit_x].label + ", target type " +
                 orb.orbits[orbit_y].label;
  rep.lhs = static_cast<long long>(
      g_set_by_core_type(lat, orb, orbit_x, orbit_y).size());
  rep.bundled_exponents = os_x.bundled;
  if (orb.orbits[orbit_y].codim != orb.orbits[orbit_x].codim + 1) {
    rep.has_formula = false;
    rep.match = true;
    rep.notes = "enumeration only (not a simple-extension pair)";
    return rep;
  }
  if (orb.orbits[orbit_y].codim == lat.roots().rank()) {
    // The origin is faraway but never a *nearest* faraway flat, so the
    // counting formula does not apply when [Y] is the origin orbit.
    rep.has_formula = false;
    rep.match = true;
    rep.notes = "enumeration only (target is the origin orbit)";
    return rep;
  }
  long long u = os_count(lat, orb, orbit_x, orbit_y);
  long long nq = orb.stabilizer_quotient(orbit_x, group_order);
  long long prod = 1;
  for (size_t i = 1; i < os_x.exponents.size(); ++i)
    prod *= os_x.exponents[i] - 1;
  long long num = 2 * u * prod;
  if (num % nq != 0) {
    rep.match = false;
    rep.notes = "formula value is not an integer";
    return rep;
  }
  rep.rhs = num / nq;
  rep.match = rep.lhs == rep.rhs;
  return rep;
}

CountReport nfw_se_report(const IntersectionLattice& lat, const Orbits& orb,
                          int orbit_x, const OSData& os_x,
                          long long group_order) {
  CountReport rep;
  rep.identity = "simple extensions of core type " + orb.orbits[orbit_x].label;
  rep.bundled_exponents = os_x.bundled;
  int deeper = orb.orbits[orbit_x].codim + 1;
  if (deeper == lat.roots().rank()) {
    // Simple extensions would land on the origin orbit, which is excluded
    // from the nearest-faraway correspondence; no formula applies.
    rep.has_formula = false;
  }
  for (size_t y = 0; y < orb.orbits.size(); ++y) {
    if (orb.orbits[y].codim != deeper) continue;
    rep.lhs += static_cast<long long>(
        g_set_by_core_type(lat, orb, orbit_x, static_cast<int>(y)).size());
  }
  if (!rep.has_formula) {
    rep.match = true;
    rep.notes = "enumeration only (extensions land on the origin orbit)";
    return rep;
  }
  int rep_flat = orb.orbits[orbit_x].representative;
  long long restricted_hyperplanes = 0;
  for (int id : lat.level(deeper))
    if (lat.contained_in(id, rep_flat)) ++restricted_hyperplanes;
  long long nq = orb.stabilizer_quotient(orbit_x, group_order);
  long long prod = 1;
  for (size_t i = 1; i < os_x.exponents.size(); ++i)
    prod *= os_x.exponents[i] - 1;
  long long num = 2 * restricted_hyperplanes * prod;
  if (num % nq != 0) {
    rep.match = false;
    rep.notes = "formula value is not an integer";
    return rep;
  }
  rep.rhs = num / nq;
  rep.match = rep.lhs == rep.rhs;
  return rep;
}

CountReport chapoton(const IntersectionLattice& lat) {
  const RootSystem& rs = lat.roots();
  const DegreeTable& dt = rs.degrees();
  uint32_t full = full_mask(rs.rank());
  CountReport rep;
  rep.identity = "full-support reflection count";
  for (int id : lat.level(1)) {
    CoreSupport cs = core_and_support(rs, lat.flat(id));
    if (cs.support == full) ++rep.lhs;
  }
  Rational rhs = Rational(rs.rank()) * Rational(dt.coxeter_number) /
                 Rational(static_cast<long>(dt.order));
  for (size_t i = 1; i < dt.exponents.size(); ++i)
    rhs *= Rational(dt.exponents[i] - 1);
  if (rhs.get_den() != 1) {
    rep.match = false;
    rep.notes = "formula value is not an integer";
    return rep;
  }
  rep.rhs = rhs.get_num().get_si();
  rep.match = rep.lhs == rep.rhs;
  return rep;
}

CountReport chapoton_refined(const IntersectionLattice& lat, const Orbits& orb,
                             int orbit_h, long long group_order) {
  const RootSystem& rs = lat.roots();
  const DegreeTable& dt = rs.degrees();
  const int n = rs.rank();
  CountReport rep;
  rep.identity =
      "full-support reflections of orbit " + orb.orbits[orbit_h].label;
  if (orb.orbits[orbit_h].codim != 1)
    throw std::invalid_argument("refined count needs a hyperplane orbit");
  uint32_t full = full_mask(n);
  for (int id : lat.level(1)) {
    if (orb.orbit_of[id] != orbit_h) continue;
    CoreSupport cs = core_and_support(rs, lat.flat(id));
    if (cs.support == full) ++rep.lhs;
  }
  for (int i = 0; i < n; ++i) {
    if (dt.exponents[i] != dt.coxeter_number - dt.exponents[n - 1 - i]) {
      rep.match = false;
      rep.notes = "exponent duality fails";
      return rep;
    }
  }
  long long num = 1;
  for (int i = 0; i < n - 1; ++i)
    num *= dt.coxeter_number - 1 - dt.exponents[i];
  long long nq = orb.stabilizer_quotient(orbit_h, group_order);
  if (num % nq != 0) {
    rep.match = false;
    rep.notes = "formula value is not an integer";
    return rep;
  }
  rep.rhs = num / nq;
  rep.match = rep.lhs == rep.rhs;
  return rep;
}

AverageReport average_faraway(const IntersectionLattice& lat,
                              const std::vector<GroupElement>& chambers,
                              int workers) {
  const RootSystem& rs = lat.roots();
  const DegreeTable& dt = rs.degrees();
  const int n = static_cast<int>(chambers.size());
  int parts = std::max(1, std::min(workers, n));
  int chunk = (n + parts - 1) / parts;
  std::vector<long long> partial(parts, 0);
  parallel_chunks(n, parts, [&](int b, int e) {
    long long acc = 0;
    for (int i = b; i < e; ++i)
      for (int h : lat.level(1))
        if (cone_trivial(rs, lat.flat(h), chambers[i])) ++acc;
    partial[b / chunk] = acc;
  });
  long long total = 0;
  for (long long p : partial) total += p;

  AverageReport rep;
  rep.lhs = Rational(static_cast<long>(total)) / Rational(static_cast<long>(chambers.size()));
  rep.rhs = Rational(rs.num_roots());
  for (size_t i = 1; i < dt.exponents.size(); ++i) {
    Rational f(dt.exponents[i] - 1, dt.exponents[i] + 1);
    f.canonicalize();
    rep.rhs *= f;
  }
  rep.match = rep.lhs == rep.rhs;
  return rep;
}

CountReport coincidental_check(const IntersectionLattice& lat, const Orbits& orb,
                               uint32_t core, int orbit_y) {
  const RootSystem& rs = lat.roots();
  const CoxeterType& t = rs.type();
  if (!t.irreducible())
    throw std::invalid_argument("coincidental check needs an irreducible type");
  Family fam = t.factors[0].family;
  bool coincidental = fam == Family::A || fam == Family::B ||
                      fam == Family::I2 ||
                      (fam == Family::H && t.factors[0].rank == 3);
  if (!coincidental)
    throw std::invalid_argument("type " + t.symbol() + " is not coincidental");
  const int k = std::popcount(core);
  if (orb.orbits[orbit_y].codim != k + 1)
    throw std::invalid_argument("target rank must be core size + 1");

  if (orb.orbits[orbit_y].codim == rs.rank())
    throw std::invalid_argument("the origin orbit is excluded as a target");

  // The remark's per-core value is an average: counts for individual cores
  // of the same type differ already in A3 (cores {1},{2},{3} give 1,0,1 for
  // target [A2]). The formula holds exactly at the core-type level, i.e.
  // summed over the nu-many cores of the given type, which is what we check.
  std::vector<int> simple = simple_root_indices(rs);
  std::vector<int> gens;
  for (int s = 0; s < rs.rank(); ++s)
    if (core & (1u << s)) gens.push_back(simple[s]);
  int span_id = lat.flat_id(gens);
  int orbit_x = orb.orbit_of[span_id];

  CountReport rep;
  rep.identity = "coincidental-type count, core type " +
                 orb.orbits[orbit_x].label + ", target type " +
                 orb.orbits[orbit_y].label;
  rep.lhs = static_cast<long long>(
      g_set_by_core_type(lat, orb, orbit_x, orbit_y).size());

  long long u = os_count(lat, orb, orbit_x, orbit_y);
  long long cores_of_type = nu(lat, orb, orbit_x);
  Rational rhs(static_cast<long>(u * cores_of_type));
  const DegreeTable& dt = rs.degrees();
  for (int i = 1; i < rs.rank() - k; ++i) {
    Rational f(dt.exponents[i] - 1, dt.exponents[i] + 1);
    f.canonicalize();
    rhs *= f;
  }
  if (rhs.get_den() != 1) {
    rep.match = false;
    rep.notes = "formula value is not an integer";
    return rep;
  }
  rep.rhs = rhs.get_num().get_si();
  rep.match = rep.lhs == rep.rhs;
  return rep;
}

namespace {

// Full-support flats of a given codimension and exact core, for one group.
long long count_full_support(const IntersectionLattice& lat, uint32_t core,
                             int codim) {
  const RootSystem& rs = lat.roots();
  uint32_t full = full_mask(rs.rank());
  long long acc = 0;
  for (int id : lat.level(codim)) {
    CoreSupport cs = core_and_support(rs, lat.flat(id));
    if (cs.support == full && cs.core == core) ++acc;
  }
  return acc;
}

}  // namespace

CountReport reduce_reducible_check(const IntersectionLattice& lat,
                                   uint32_t core) {
  const RootSystem& rs = lat.roots();
  const CoxeterType& t = rs.type();
  const int k = std::popcount(core);
  CountReport rep;
  rep.identity = "factorwise simple-extension count, core " +
                 mask_str(core, rs.rank()) + " in " + t.symbol();
  rep.lhs = count_full_support(lat, core, k + 1);
  if (t.irreducible()) {
    rep.rhs = rep.lhs;
    rep.match = true;
    rep.notes = "irreducible pass-through";
    return rep;
  }

  // A full-support simple extension of the core in a product exceeds the
  // core's rank in exactly one factor; elsewhere it equals a full-support
  // standard parabolic, which pins it to the core's own span.
  auto spans = t.factor_spans();
  std::vector<long long> ext(spans.size(), 0);  // extension inside factor j
  std::vector<long long> fixed(spans.size(), 0);  // core span full support
  for (size_t j = 0; j < spans.size(); ++j) {
    auto [b, e] = spans[j];
    CoxeterType sub{{t.factors[j]}};
    RootSystem frs(sub);
    uint32_t fcore = 0;
    for (int s = b; s < e; ++s)
      if (core & (1u << s)) fcore |= 1u << (s - b);
    int fk = std::popcount(fcore);
    if (fk + 1 <= frs.rank()) {
      IntersectionLattice flat_lat(frs, fk + 1);
      ext[j] = count_full_support(flat_lat, fcore, fk + 1);
    }
    IntersectionLattice span_lat(frs, fk);
    std::vector<int> simple = simple_root_indices(frs);
    std::vector<int> gens;
    for (int s = 0; s < frs.rank(); ++s)
      if (fcore & (1u << s)) gens.push_back(simple[s]);
    Flat span = flat_from_roots(frs, gens);
    if (frs.rank() - span.dim == fk) {
      CoreSupport cs = core_and_support(frs, span);
      fixed[j] = (cs.support == full_mask(frs.rank()) && cs.core == fcore) ? 1 : 0;
    }
  }
  rep.rhs = 0;
  for (size_t j = 0; j < spans.size(); ++j) {
    long long term = ext[j];
    for (size_t i = 0; i < spans.size(); ++i)
      if (i != j) term *= fixed[i];
    rep.rhs += term;
  }
  rep.match = rep.lhs == rep.rhs;
  return rep;
}

}  // namespace coxfar
