#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "coxfar/cache.hpp"

using namespace coxfar;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / "coxfar-cache-test") {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

CachePayload build_payload(const RootSystem& rs) {
  IntersectionLattice lat(rs, rs.rank());
  Orbits orb = orbits(lat);
  CachePayload p;
  p.type_symbol = rs.type().symbol();
  p.root_digest = root_order_digest(rs);
  p.max_codim = rs.rank();
  for (int id = 0; id < lat.num_flats(); ++id) p.flats.push_back(lat.flat(id));
  p.mobius = mobius(lat);
  p.orbit_of = orb.orbit_of;
  p.orbit_info = orb.orbits;
  for (const OrbitInfo& o : orb.orbits)
    p.os.push_back(o.codim == rs.rank() ? OSData{}
                                        : os_exponents(lat, o.representative));
  return p;
}

}  // namespace

TEST_CASE("round trip is the identity") {
  TempDir dir;
  RootSystem rs(parse_type("B3"));
  CachePayload p = build_payload(rs);
  fs::path file = dir.path / cache_file_name(p.type_symbol, p.max_codim);
  save_cache(file, p);
  CachePayload q = load_cache(file, p.type_symbol, p.root_digest);
  CHECK(p == q);

  // A lattice rehydrated from the payload behaves like the built one.
  IntersectionLattice loaded(rs, q.flats, q.max_codim);
  IntersectionLattice built(rs, rs.rank());
  REQUIRE(loaded.num_flats() == built.num_flats());
  for (int c = 0; c <= 3; ++c) CHECK(loaded.level(c) == built.level(c));
}

TEST_CASE("stale digests are rejected") {
  TempDir dir;
  RootSystem rs(parse_type("A3"));
  CachePayload p = build_payload(rs);
  fs::path file = dir.path / "a3.json";
  save_cache(file, p);
  CHECK_THROWS_WITH_AS(load_cache(file, "A3", p.root_digest + 1),
                       doctest::Contains("stale"), std::runtime_error);
  CHECK_THROWS_AS(load_cache(file, "B3", p.root_digest), std::runtime_error);
  CHECK_THROWS_AS(load_cache(dir.path / "missing.json", "A3", p.root_digest),
                  std::runtime_error);
}

TEST_CASE("unknown format markers are rejected") {
  TempDir dir;
  fs::path file = dir.path / "bad.json";
  {
    std::ofstream out(file);
    out << "{\"magic\": \"ZZZZ9\", \"type\": \"A3\"}\n";
  }
  CHECK_THROWS_WITH_AS(load_cache(file, "A3", 0),
                       doctest::Contains("format marker"),
                       std::runtime_error);
}

TEST_CASE("file names stay filesystem-safe") {
  std::string name = cache_file_name("I2(7)", 2);
  CHECK(name.find('(') == std::string::npos);
  CHECK(name.find(')') == std::string::npos);
  std::string power = cache_file_name("A1^2", 2);
  CHECK(power.find('^') == std::string::npos);
}
