#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "coxfar/invariants.hpp"

namespace coxfar {

// On-disk snapshot of a built lattice with its derived invariants. The magic
// string versions the layout; the root-order digest ties the flat ids to the
// exact deterministic root enumeration that produced them.
struct CachePayload {
  std::string type_symbol;
  uint64_t root_digest = 0;
  int max_codim = 0;
  std::vector<Flat> flats;            // canonical id order
  std::vector<long long> mobius;      // per flat id (empty if not computed)
  std::vector<int> orbit_of;          // per flat id
  std::vector<OrbitInfo> orbit_info;  // per orbit id
  std::vector<OSData> os;             // per orbit id (may be empty)

  friend bool operator==(const CachePayload&, const CachePayload&) = default;
};

inline constexpr const char* kCacheMagic = "FFLT1";

// Digest of the ordered positive-root coordinate list.
uint64_t root_order_digest(const RootSystem& rs);

// Atomic write (temp file + rename) of the JSON cache document.
void save_cache(const std::filesystem::path& path, const CachePayload& payload);

// Throws std::runtime_error on missing file, wrong magic, wrong type symbol,
// or digest mismatch (stale cache).
CachePayload load_cache(const std::filesystem::path& path,
                        const std::string& type_symbol, uint64_t digest);

// Default cache file name for one (type, depth) build.
std::string cache_file_name(const std::string& type_symbol, int max_codim);

}  // namespace coxfar
