#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "coxfar/invariants.hpp"

using namespace coxfar;

namespace {

std::map<std::string, long long> orbit_sizes_at(const Orbits& orb, int codim) {
  std::map<std::string, long long> out;
  for (const OrbitInfo& o : orb.orbits)
    if (o.codim == codim) out[o.label] += o.size;
  return out;
}

}  // namespace

TEST_CASE("orbit labels and sizes, A3") {
  RootSystem rs(parse_type("A3"));
  IntersectionLattice lat(rs, 3);
  Orbits orb = orbits(lat);
  CHECK(orbit_sizes_at(orb, 1) ==
        std::map<std::string, long long>{{"A1", 6}});
  CHECK(orbit_sizes_at(orb, 2) ==
        std::map<std::string, long long>{{"A1^2", 3}, {"A2", 4}});
  CHECK(orbit_sizes_at(orb, 3) ==
        std::map<std::string, long long>{{"A3", 1}});
}

TEST_CASE("orbit labels disambiguate same-type orbits with primes") {
  RootSystem rs(parse_type("B3"));
  IntersectionLattice lat(rs, 3);
  Orbits orb = orbits(lat);
  // Two reflection classes: 6 short-type and 3 long-type hyperplanes.
  CHECK(orbit_sizes_at(orb, 1) ==
        std::map<std::string, long long>{{"A1'", 6}, {"A1''", 3}});

  RootSystem d4(parse_type("D4"));
  IntersectionLattice dl(d4, 4);
  Orbits dorb = orbits(dl);
  CHECK(orbit_sizes_at(dorb, 1) ==
        std::map<std::string, long long>{{"A1", 12}});
  // Triality splits the rank-2 and rank-3 chain types into three classes
  // each (verified against brute-force conjugation by the full group).
  CHECK(orbit_sizes_at(dorb, 2) ==
        std::map<std::string, long long>{
            {"A2", 16}, {"A1^2'", 6}, {"A1^2''", 6}, {"A1^2'''", 6}});
  CHECK(orbit_sizes_at(dorb, 3) ==
        std::map<std::string, long long>{
            {"A3'", 4}, {"A3''", 4}, {"A3'''", 4}, {"A1^3", 12}});
}

TEST_CASE("orbit-stabilizer products") {
  for (const char* s : {"A3", "B3", "F4", "H3"}) {
    CAPTURE(s);
    RootSystem rs(parse_type(s));
    IntersectionLattice lat(rs, rs.rank());
    Orbits orb = orbits(lat);
    long long W = rs.degrees().order;
    long long total = 0;
    for (size_t i = 0; i < orb.orbits.size(); ++i) {
      const OrbitInfo& o = orb.orbits[i];
      long long q = orb.stabilizer_quotient(static_cast<int>(i), W);
      CHECK(q >= 1);
      CHECK(o.size * o.parabolic_order * q == W);
      total += o.size;
    }
    CHECK(total == lat.num_flats());
  }
}

TEST_CASE("beta via chambers equals beta via the polynomial") {
  for (const char* s : {"A3", "B3", "H3"}) {
    CAPTURE(s);
    RootSystem rs(parse_type(s));
    IntersectionLattice lat(rs, rs.rank());
    auto chambers = enumerate_group(rs, 1000);
    auto cp = characteristic_polynomial(lat);
    long long b = beta(cp.chi, rs.rank());
    for (int id : lat.level(1))
      CHECK(beta_via_chambers(rs, chambers, lat.flat(id)) == b);
  }
}

TEST_CASE("restriction exponents") {
  RootSystem a3(parse_type("A3"));
  IntersectionLattice al(a3, 3);
  Orbits aorb = orbits(al);
  OSData os = os_exponents(al, al.level(1)[0]);
  CHECK(os.exponents == std::vector<int>{1, 2});
  CHECK(!os.bundled);

  // Internal consistency on every orbit of B3 and H3: the exponents start
  // at 1, there are dim(X) of them, and they sum to |A^X|.
  for (const char* s : {"B3", "H3"}) {
    CAPTURE(s);
    RootSystem rs(parse_type(s));
    IntersectionLattice lat(rs, rs.rank());
    Orbits orb = orbits(lat);
    for (const OrbitInfo& o : orb.orbits) {
      if (o.codim == rs.rank()) continue;
      OSData d = os_exponents(lat, o.representative);
      CHECK(static_cast<int>(d.exponents.size()) == rs.rank() - o.codim);
      if (o.codim < rs.rank()) CHECK(d.exponents[0] == 1);
      long long sum = 0;
      for (int e : d.exponents) sum += e;
      long long planes = 0;
      for (int id : lat.level(o.codim + 1))
        if (lat.contained_in(id, o.representative)) ++planes;
      CHECK(sum == planes);
    }
  }
}

TEST_CASE("bundled exponents exist exactly where advertised") {
  CoxeterType e8 = parse_type("E8");
  RootSystem rs(e8);
  IntersectionLattice lat(rs, 1);
  Orbits orb = orbits(lat);
  OSData d = os_exponents_bundled(e8, orb.orbits[1].label, 1);
  CHECK(d.exponents == std::vector<int>{1, 7, 11, 13, 17, 19, 23});
  CHECK(d.bundled);
  CHECK_THROWS_AS(os_exponents_bundled(parse_type("H4"), "A1", 1),
                  std::runtime_error);
}

TEST_CASE("flat counts inside a representative") {
  RootSystem rs(parse_type("A3"));
  IntersectionLattice lat(rs, 3);
  Orbits orb = orbits(lat);
  auto find = [&](const std::string& label) {
    for (size_t i = 0; i < orb.orbits.size(); ++i)
      if (orb.orbits[i].label == label) return static_cast<int>(i);
    REQUIRE_MESSAGE(false, "missing orbit " << label);
    return -1;
  };
  CHECK(os_count(lat, orb, find("A1"), find("A2")) == 2);
  CHECK(os_count(lat, orb, find("A1"), find("A1^2")) == 1);
  CHECK(os_count(lat, orb, find("A0"), find("A1")) == 6);
  CHECK(os_count(lat, orb, find("A0"), find("A3")) == 1);

  CHECK(nu(lat, orb, find("A1")) == 3);
  CHECK(nu(lat, orb, find("A2")) == 2);
  CHECK(nu(lat, orb, find("A1^2")) == 1);
  CHECK(nu(lat, orb, find("A3")) == 1);
}

TEST_CASE("subsystem labels classify mixed products") {
  RootSystem rs(parse_type("F4"));
  IntersectionLattice lat(rs, 4);
  Orbits orb = orbits(lat);
  bool saw_b2 = false;
  for (const OrbitInfo& o : orb.orbits) saw_b2 |= o.label == "B2";
  CHECK(saw_b2);
  CHECK(subsystem_label(rs, {}) == "A0");
  CHECK(subsystem_label(rs, {0}) == "A1");
}
