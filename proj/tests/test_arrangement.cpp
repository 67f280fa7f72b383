#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "coxfar/invariants.hpp"

using namespace coxfar;

namespace {

// Brute-force flat census: canonical flats of every subset of at most `rank`
// positive roots. Independent of the lattice's level-by-level construction.
std::set<std::vector<int>> brute_force_flats(const RootSystem& rs) {
  std::set<std::vector<int>> flats;
  int n = rs.num_roots();
  flats.insert(flat_from_roots(rs, {}).roots);
  std::vector<int> pick;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(pick.size()) == rs.rank()) return;
    for (int i = from; i < n; ++i) {
      pick.push_back(i);
      flats.insert(flat_from_roots(rs, pick).roots);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return flats;
}

// Recursive Mobius oracle: mu(V) = 1, mu(X) = -sum over flats strictly
// containing X.
std::vector<long long> brute_force_mobius(const IntersectionLattice& lat) {
  std::vector<long long> mu(lat.num_flats(), 0);
  mu[0] = 1;
  for (int c = 1; c <= lat.max_codim(); ++c)
    for (int x : lat.level(c)) {
      long long acc = 0;
      for (int z = 0; z < lat.num_flats(); ++z)
        if (z != x && lat.contained_in(x, z)) acc += mu[z];
      mu[x] = -acc;
    }
  return mu;
}

}  // namespace

TEST_CASE("lattice matches the brute-force flat census") {
  for (const char* s : {"A3", "B3", "I2(5)", "A1xA2"}) {
    CAPTURE(s);
    RootSystem rs(parse_type(s));
    IntersectionLattice lat(rs, rs.rank());
    auto brute = brute_force_flats(rs);
    CHECK(lat.num_flats() == static_cast<int>(brute.size()));
    for (int id = 0; id < lat.num_flats(); ++id)
      CHECK(brute.count(lat.flat(id).roots) == 1);
  }
}

TEST_CASE("known level sizes") {
  RootSystem a3(parse_type("A3"));
  IntersectionLattice lat(a3, 3);
  CHECK(lat.level(0).size() == 1);
  CHECK(lat.level(1).size() == 6);
  CHECK(lat.level(2).size() == 7);
  CHECK(lat.level(3).size() == 1);

  RootSystem i7(parse_type("I2(7)"));
  IntersectionLattice dl(i7, 2);
  CHECK(dl.level(1).size() == 7);
  CHECK(dl.level(2).size() == 1);
}

TEST_CASE("flat ids are stable across worker counts") {
  RootSystem rs(parse_type("B3"));
  IntersectionLattice one(rs, 3, 1);
  IntersectionLattice four(rs, 3, 4);
  REQUIRE(one.num_flats() == four.num_flats());
  for (int id = 0; id < one.num_flats(); ++id)
    CHECK(one.flat(id) == four.flat(id));
}

TEST_CASE("mobius values match the recursive oracle") {
  for (const char* s : {"A3", "B3", "I2(5)"}) {
    CAPTURE(s);
    RootSystem rs(parse_type(s));
    IntersectionLattice lat(rs, rs.rank());
    CHECK(mobius(lat) == brute_force_mobius(lat));
  }
}

TEST_CASE("characteristic polynomials factor over the exponents") {
  RootSystem a3(parse_type("A3"));
  IntersectionLattice lat(a3, 3);
  auto cp = characteristic_polynomial(lat);
  // (t-1)(t-2)(t-3) = t^3 - 6t^2 + 11t - 6.
  CHECK(cp.chi.c == std::vector<long long>{-6, 11, -6, 1});
  CHECK(cp.region_count == 24);

  RootSystem b3(parse_type("B3"));
  IntersectionLattice bl(b3, 3);
  auto bp = characteristic_polynomial(bl);
  CHECK(bp.chi.c == std::vector<long long>{-15, 23, -9, 1});
  CHECK(bp.region_count == 48);
  CHECK(beta(bp.chi, 3) == 8);
  CHECK(beta(cp.chi, 3) == 2);
}

TEST_CASE("cone triviality agrees with the extreme-ray oracle") {
  for (const char* s : {"A3", "B3"}) {
    CAPTURE(s);
    RootSystem rs(parse_type(s));
    IntersectionLattice lat(rs, rs.rank());
    auto group = enumerate_group(rs, 1000);
    for (const GroupElement& w : group)
      for (int c = 1; c < rs.rank(); ++c)
        for (int id : lat.level(c)) {
          bool fm = cone_trivial(rs, lat.flat(id), w);
          bool rays = cone_trivial_rays_oracle(rs, lat.flat(id), w);
          CHECK(fm == rays);
        }
  }
}

TEST_CASE("restriction regrades the interval under a flat") {
  RootSystem rs(parse_type("B3"));
  IntersectionLattice lat(rs, 3);
  int h = lat.level(1)[0];
  RestrictionView view = restriction(lat, h);
  CHECK(view.rank() == 2);
  CHECK(view.top == h);
  for (int rel = 0; rel <= view.rank(); ++rel)
    for (int id : view.levels[rel]) {
      CHECK(lat.codim(id) == rel + 1);
      CHECK(lat.contained_in(id, h));
    }
}

TEST_CASE("restriction refuses when the lattice is too shallow") {
  RootSystem rs(parse_type("B3"));
  IntersectionLattice lat(rs, 2);
  CHECK_THROWS_AS(restriction(lat, lat.level(1)[0]), std::runtime_error);
  // Bounded depth within the built range still works.
  CHECK_NOTHROW(restriction(lat, lat.level(1)[0], 1));
}

TEST_CASE("rehydrating constructor reproduces the built lattice") {
  RootSystem rs(parse_type("B3"));
  IntersectionLattice built(rs, 3);
  std::vector<Flat> flats;
  for (int id = 0; id < built.num_flats(); ++id) flats.push_back(built.flat(id));
  IntersectionLattice loaded(rs, flats, 3);
  REQUIRE(loaded.num_flats() == built.num_flats());
  for (int c = 0; c <= 3; ++c) CHECK(loaded.level(c) == built.level(c));
  CHECK(loaded.find(built.flat(5).roots) == 5);

  std::swap(flats.front(), flats.back());
  CHECK_THROWS_AS(IntersectionLattice(rs, flats, 3), std::invalid_argument);
}
