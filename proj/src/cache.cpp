#include "coxfar/cache.hpp"

#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace coxfar {

using nlohmann::json;

uint64_t root_order_digest(const RootSystem& rs) {
  uint64_t h = 1469598103934665603ull;
  auto mix = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    h ^= '|';
    h *= 1099511628211ull;
  };
  mix(rs.type().symbol());
  for (int i = 0; i < rs.num_roots(); ++i)
    for (int j = 0; j < rs.rank(); ++j) mix(rs.root(i)(j).str());
  return h;
}

void save_cache(const std::filesystem::path& path, const CachePayload& p) {
  json doc;
  doc["magic"] = kCacheMagic;
  doc["type"] = p.type_symbol;
  doc["root_digest"] = p.root_digest;
  doc["max_codim"] = p.max_codim;
  json flats = json::array();
  for (const Flat& f : p.flats)
    flats.push_back({{"roots", f.roots}, {"dim", f.dim}});
  doc["flats"] = std::move(flats);
  doc["mobius"] = p.mobius;
  doc["orbit_of"] = p.orbit_of;
  json orbits = json::array();
  for (const OrbitInfo& o : p.orbit_info)
    orbits.push_back({{"representative", o.representative},
                      {"size", o.size},
                      {"codim", o.codim},
                      {"label", o.label},
                      {"parabolic_order", o.parabolic_order}});
  doc["orbits"] = std::move(orbits);
  json os = json::array();
  for (const OSData& d : p.os)
    os.push_back({{"exponents", d.exponents}, {"bundled", d.bundled}});
  doc["os"] = std::move(os);

  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << doc.dump(1, '\t') << '\n';
  }
  std::filesystem::rename(tmp, path);
}

CachePayload load_cache(const std::filesystem::path& path,
                        const std::string& type_symbol, uint64_t digest) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cache file not found: " + path.string());
  json doc = json::parse(in);
  if (doc.value("magic", std::string()) != kCacheMagic)
    throw std::runtime_error("cache file " + path.string() +
                             " has an unknown format marker");
  CachePayload p;
  p.type_symbol = doc.at("type").get<std::string>();
  p.root_digest = doc.at("root_digest").get<uint64_t>();
  p.max_codim = doc.at("max_codim").get<int>();
  if (p.type_symbol != type_symbol)
    throw std::runtime_error("cache file is for type " + p.type_symbol +
                             ", expected " + type_symbol);
  if (p.root_digest != digest)
    throw std::runtime_error(
        "stale cache: root enumeration digest mismatch in " + path.string());
  for (const json& jf : doc.at("flats")) {
    Flat f;
    f.roots = jf.at("roots").get<std::vector<int>>();
    f.dim = jf.at("dim").get<int>();
    p.flats.push_back(std::move(f));
  }
  p.mobius = doc.at("mobius").get<std::vector<long long>>();
  p.orbit_of = doc.at("orbit_of").get<std::vector<int>>();
  for (const json& jo : doc.at("orbits")) {
    OrbitInfo o;
    o.representative = jo.at("representative").get<int>();
    o.size = jo.at("size").get<long long>();
    o.codim = jo.at("codim").get<int>();
    o.label = jo.at("label").get<std::string>();
    o.parabolic_order = jo.at("parabolic_order").get<long long>();
    p.orbit_info.push_back(std::move(o));
  }
  for (const json& jd : doc.at("os")) {
    OSData d;
    d.exponents = jd.at("exponents").get<std::vector<int>>();
    d.bundled = jd.at("bundled").get<bool>();
    p.os.push_back(std::move(d));
  }
  return p;
}

std::string cache_file_name(const std::string& type_symbol, int max_codim) {
  std::string name = type_symbol;
  for (char& c : name)
    if (c == '(' || c == ')' || c == '^') c = '_';
  return name + ".codim" + std::to_string(max_codim) + ".fflt1.json";
}

}  // namespace coxfar
