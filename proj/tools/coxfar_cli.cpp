// Command-line surface: build/cache intersection lattices, emit the counting
// tables, and run the verification suites.
//
// Exit codes: 0 all checks pass, 1 identity mismatch, 2 resource refusal,
// 3 usage error.

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "coxfar/cache.hpp"
#include "coxfar/faraway.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace coxfar;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitResource = 2;
constexpr int kExitUsage = 3;

// Thrown when a run would exceed a stated limit; reported as exit code 2
// with the named limit and the actual requirement.
struct ResourceRefusal : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string type_symbol;
  int max_codim = -1;  // -1: full rank
  long long limit = 1000000;
  int workers = 0;  // 0: hardware concurrency
  std::string format = "markdown";
  std::string cache_dir;
};

int effective_workers(const RunConfig& cfg) {
  if (cfg.workers > 0) return cfg.workers;
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

// Everything the commands operate on, built fresh or rehydrated from cache.
struct Session {
  CoxeterType type;
  std::unique_ptr<RootSystem> rs;
  std::unique_ptr<IntersectionLattice> lat;
  Orbits orb;
  std::vector<long long> mobius_values;
  std::vector<std::optional<OSData>> os;  // per orbit id, lazily filled
  bool from_cache = false;
};

// Restriction exponents of an orbit representative: computed from the
// interval when the lattice is deep enough, bundled data otherwise.
const OSData& orbit_os(Session& s, int orbit_id) {
  auto& slot = s.os[orbit_id];
  if (slot) return *slot;
  const OrbitInfo& o = s.orb.orbits[orbit_id];
  try {
    slot = os_exponents(*s.lat, o.representative);
  } catch (const std::runtime_error&) {
    slot = os_exponents_bundled(s.type, o.label, o.codim);
  }
  return *slot;
}

Session open_session(const RunConfig& cfg) {
  Session s;
  s.type = parse_type(cfg.type_symbol);
  int depth = cfg.max_codim < 0 ? s.type.rank() : cfg.max_codim;
  if (depth > s.type.rank())
    throw CLI::ValidationError("--max-codim exceeds the rank " +
                               std::to_string(s.type.rank()));
  s.rs = std::make_unique<RootSystem>(s.type);

  fs::path cache_path;
  if (!cfg.cache_dir.empty())
    cache_path = fs::path(cfg.cache_dir) /
                 cache_file_name(s.type.symbol(), depth);

  uint64_t digest = root_order_digest(*s.rs);
  if (!cache_path.empty() && fs::exists(cache_path)) {
    CachePayload p = load_cache(cache_path, s.type.symbol(), digest);
    s.lat = std::make_unique<IntersectionLattice>(*s.rs, std::move(p.flats),
                                                  p.max_codim);
    s.orb.orbit_of = std::move(p.orbit_of);
    s.orb.orbits = std::move(p.orbit_info);
    s.mobius_values = std::move(p.mobius);
    s.os.assign(s.orb.orbits.size(), std::nullopt);
    for (size_t i = 0; i < p.os.size() && i < s.os.size(); ++i)
      if (!p.os[i].exponents.empty()) s.os[i] = p.os[i];
    s.from_cache = true;
    return s;
  }

  s.lat = std::make_unique<IntersectionLattice>(*s.rs, depth,
                                                effective_workers(cfg));
  s.orb = orbits(*s.lat);
  s.mobius_values = mobius(*s.lat);
  s.os.assign(s.orb.orbits.size(), std::nullopt);

  if (!cache_path.empty()) {
    CachePayload p;
    p.type_symbol = s.type.symbol();
    p.root_digest = digest;
    p.max_codim = depth;
    for (int id = 0; id < s.lat->num_flats(); ++id)
      p.flats.push_back(s.lat->flat(id));
    p.mobius = s.mobius_values;
    p.orbit_of = s.orb.orbit_of;
    p.orbit_info = s.orb.orbits;
    for (size_t x = 0; x < s.orb.orbits.size(); ++x) {
      try {
        p.os.push_back(orbit_os(s, static_cast<int>(x)));
      } catch (const std::runtime_error&) {
        p.os.push_back(OSData{});  // neither computable nor bundled
      }
    }
    fs::create_directories(cache_path.parent_path());
    save_cache(cache_path, p);
  }
  return s;
}

std::vector<GroupElement> chambers_within_limit(const Session& s,
                                                const RunConfig& cfg) {
  long long order = s.rs->degrees().order;
  if (order > cfg.limit)
    throw ResourceRefusal("chamber enumeration needs " +
                          std::to_string(order) + " elements, limit is " +
                          std::to_string(cfg.limit) +
                          " (raise with --limit)");
  return enumerate_group(*s.rs, cfg.limit);
}

std::string core_name(uint32_t core) {
  if (core == 0) return "{}";
  std::string out = "{";
  for (int i = 0; i < 32; ++i)
    if (core & (1u << i)) {
      if (out.size() > 1) out += ',';
      out += std::to_string(i + 1);
    }
  return out + "}";
}

// --- table rendering ------------------------------------------------------

struct Table {
  std::string title;
  std::vector<std::string> header;          // first entry names the row key
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> footnotes;
};

void emit_markdown(const Table& t, std::ostream& out) {
  out << "## " << t.title << "\n\n";
  out << "|";
  for (const auto& h : t.header) out << " " << h << " |";
  out << "\n|";
  for (size_t i = 0; i < t.header.size(); ++i)
    out << (i == 0 ? " --- |" : " ---: |");
  out << "\n";
  for (const auto& r : t.rows) {
    out << "|";
    for (const auto& c : r) out << " " << c << " |";
    out << "\n";
  }
  out << "\n";
  for (const auto& f : t.footnotes) out << "- " << f << "\n";
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void emit_csv(const Table& t, std::ostream& out) {
  auto line = [&out](const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i)
      out << (i ? "," : "") << csv_quote(cells[i]);
    out << "\n";
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
}

void emit_json_table(const Table& t, std::ostream& out) {
  json doc;
  doc["title"] = t.title;
  doc["header"] = t.header;
  doc["rows"] = t.rows;
  doc["notes"] = t.footnotes;
  doc["route"] = "exact enumeration over the intersection lattice";
  out << doc.dump(1, '\t') << "\n";
}

void emit(const Table& t, const std::string& format, std::ostream& out) {
  if (format == "markdown")
    emit_markdown(t, out);
  else if (format == "csv")
    emit_csv(t, out);
  else
    emit_json_table(t, out);
}

// --- describe -------------------------------------------------------------

int cmd_describe(const RunConfig& cfg) {
  CoxeterType t = parse_type(cfg.type_symbol);
  RootSystem rs(t);
  const DegreeTable& dt = rs.degrees();

  long long sum_exp = 0;
  for (int e : dt.exponents) sum_exp += e;
  bool refl_ok = sum_exp == dt.num_reflections &&
                 dt.num_reflections == rs.num_roots();
  // 2N = hn holds per irreducible factor; check it factorwise.
  bool hn_ok = true;
  for (const Factor& f : t.factors) {
    DegreeTable fd = degree_table(CoxeterType{{f}});
    if (2 * fd.num_reflections != fd.coxeter_number * f.rank) hn_ok = false;
  }

  json doc;
  doc["type"] = t.symbol();
  doc["rank"] = t.rank();
  doc["positive_roots"] = rs.num_roots();
  doc["degrees"] = dt.degrees;
  doc["exponents"] = dt.exponents;
  doc["coxeter_number"] = dt.coxeter_number;
  doc["group_order"] = dt.order;
  doc["identity_2N_eq_hn"] = hn_ok;
  doc["identity_sum_exponents_eq_N"] = refl_ok;

  if (cfg.format == "json") {
    std::cout << doc.dump(1, '\t') << "\n";
  } else {
    std::cout << "type:            " << t.symbol() << "\n"
              << "rank:            " << t.rank() << "\n"
              << "positive roots:  " << rs.num_roots() << "\n"
              << "degrees:        ";
    for (int d : dt.degrees) std::cout << " " << d;
    std::cout << "\nexponents:      ";
    for (int e : dt.exponents) std::cout << " " << e;
    std::cout << "\ncoxeter number:  " << dt.coxeter_number << "\n"
              << "group order:     " << dt.order << "\n"
              << "2N = hn:         " << (hn_ok ? "ok" : "FAILED") << "\n"
              << "sum e_i = N:     " << (refl_ok ? "ok" : "FAILED") << "\n";
  }
  return (hn_ok && refl_ok) ? kExitPass : kExitMismatch;
}

// --- table ----------------------------------------------------------------

// Orbit ids at one codimension, in stable (orbit id) order.
std::vector<int> orbit_ids_at(const Orbits& orb, int codim) {
  std::vector<int> ids;
  for (size_t i = 0; i < orb.orbits.size(); ++i)
    if (orb.orbits[i].codim == codim) ids.push_back(static_cast<int>(i));
  return ids;
}

// Counts of full-support flats grouped by (core mask, orbit), computed in a
// single sweep over the lattice levels.
std::map<uint32_t, std::map<int, long long>> full_support_census(
    const Session& s, int min_codim, int max_codim) {
  std::map<uint32_t, std::map<int, long long>> census;
  uint32_t full = (s.rs->rank() >= 32)
                      ? ~0u
                      : ((1u << s.rs->rank()) - 1);
  for (int c = min_codim; c <= max_codim; ++c)
    for (int id : s.lat->level(c)) {
      CoreSupport cs = core_and_support(*s.rs, s.lat->flat(id));
      if (cs.support != full) continue;
      census[cs.core][s.orb.orbit_of[id]]++;
    }
  return census;
}

// Rows: orbit types one rank above the core; columns: the rank-r cores;
// margins: row totals with the flat-count column, per-core totals, and the
// restriction summary of the aggregated core type.
int cmd_table_core_rank(Session& s, const RunConfig& cfg, int core_rank) {
  int rank = s.rs->rank();
  int codim_y = core_rank + 1;
  if (codim_y > s.lat->max_codim())
    throw ResourceRefusal("table needs the lattice to codimension " +
                          std::to_string(codim_y) + ", built to " +
                          std::to_string(s.lat->max_codim()) +
                          " (raise --max-codim)");

  auto census = full_support_census(s, codim_y, codim_y);

  // Every subset of the requested rank is a column, in subset order.
  std::vector<uint32_t> cores;
  for (uint32_t c = 0; c < (1u << rank); ++c)
    if (std::popcount(c) == core_rank) cores.push_back(c);

  std::vector<int> targets = orbit_ids_at(s.orb, codim_y);
  long long group_order = s.rs->degrees().order;

  Table t;
  t.title = s.type.symbol() + ": nearest faraway flats by rank-" +
            std::to_string(core_rank) + " core";
  t.header.push_back("target type");
  for (uint32_t c : cores) t.header.push_back("core " + core_name(c));
  t.header.push_back("total");
  t.header.push_back("flats u");

  std::map<uint32_t, long long> col_totals;
  long long grand = 0;
  for (int y : targets) {
    std::vector<std::string> row{s.orb.orbits[y].label};
    long long row_total = 0;
    for (uint32_t c : cores) {
      long long v = 0;
      auto it = census.find(c);
      if (it != census.end()) {
        auto jt = it->second.find(y);
        if (jt != it->second.end()) v = jt->second;
      }
      row.push_back(std::to_string(v));
      row_total += v;
      col_totals[c] += v;
    }
    grand += row_total;
    row.push_back(std::to_string(row_total));
    // u_{[X],[Y]} for the (single) orbit type of the rank-r cores below.
    row.push_back("");
    t.rows.push_back(std::move(row));
  }

  std::vector<std::string> totals{"total"};
  for (uint32_t c : cores) totals.push_back(std::to_string(col_totals[c]));
  totals.push_back(std::to_string(grand));
  totals.push_back("");
  t.rows.push_back(std::move(totals));

  // Summary of the aggregated core orbit type(s): u-column, restriction
  // size, and the product-formula cross-check.
  std::map<int, std::vector<uint32_t>> cores_by_orbit;
  for (uint32_t c : cores) {
    std::vector<int> idx;
    for (int i = 0; i < rank; ++i)
      if (c & (1u << i)) idx.push_back(simple_root_indices(*s.rs)[i]);
    int fid = s.lat->flat_id(idx);
    cores_by_orbit[s.orb.orbit_of[fid]].push_back(c);
  }
  bool all_match = true;
  for (const auto& [x, cs] : cores_by_orbit) {
    const OrbitInfo& ox = s.orb.orbits[x];
    const OSData& os = orbit_os(s, x);
    // The u-column is per core type; with several types it moves to notes.
    std::string u_note;
    for (size_t r = 0; r < targets.size(); ++r) {
      long long u = os_count(*s.lat, s.orb, x, targets[r]);
      if (cores_by_orbit.size() == 1)
        t.rows[r].back() = std::to_string(u);
      else
        u_note += " u[" + s.orb.orbits[targets[r]].label + "]=" +
                  std::to_string(u);
    }
    long long a_x = 0;
    for (int id : s.lat->level(codim_y))
      if (s.lat->contained_in(id, ox.representative)) ++a_x;
    CountReport nf = nfw_se_report(*s.lat, s.orb, x, os, group_order);
    all_match = all_match && nf.match;
    std::ostringstream note;
    note << "core type [" << ox.label << "]: |A^X| = " << a_x
         << ", [N(X):W_X] = " << s.orb.stabilizer_quotient(x, group_order)
         << ", simple extensions over these cores = " << nf.lhs
         << " vs formula "
         << nf.rhs << (nf.match ? " (ok" : " (MISMATCH");
    if (nf.bundled_exponents) note << "; bundled restriction exponents";
    note << ")" << u_note;
    t.footnotes.push_back(note.str());
  }
  t.footnotes.push_back(
      "cells: exact enumeration (root-support with geometric cross-check)");

  emit(t, cfg.format, std::cout);
  return all_match ? kExitPass : kExitMismatch;
}

// Rows: full-support parabolic types; columns: every core that occurs, plus
// the total and the flat count of the type.
int cmd_table_all_cores(Session& s, const RunConfig& cfg) {
  int rank = s.rs->rank();
  int deepest = std::min(s.lat->max_codim(), rank - 1);
  auto census = full_support_census(s, 1, deepest);

  std::vector<uint32_t> cores;
  for (const auto& [core, _] : census) cores.push_back(core);
  std::sort(cores.begin(), cores.end(), [](uint32_t a, uint32_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });

  Table t;
  t.title = s.type.symbol() + ": full-support parabolic types by core";
  t.header.push_back("type");
  for (uint32_t c : cores) t.header.push_back(core_name(c));
  t.header.push_back("total");
  t.header.push_back("flats u");
  t.header.push_back("sanity");

  bool sanity_ok = true;
  for (int codim = 1; codim <= deepest; ++codim)
    for (int y : orbit_ids_at(s.orb, codim)) {
      std::vector<std::string> row{s.orb.orbits[y].label};
      long long total = 0;
      for (uint32_t c : cores) {
        long long v = 0;
        auto it = census.find(c);
        if (it != census.end()) {
          auto jt = it->second.find(y);
          if (jt != it->second.end()) v = jt->second;
        }
        row.push_back(std::to_string(v));
        total += v;
      }
      row.push_back(std::to_string(total));
      row.push_back(std::to_string(s.orb.orbits[y].size));
      if (codim == rank - 1) {
        // At this codimension a flat without full support is the standard
        // flat of a proper subset, so the full-support count is the orbit
        // length minus the number of subsets landing in the orbit.
        long long expected = s.orb.orbits[y].size - nu(*s.lat, s.orb, y);
        bool ok = total == expected;
        sanity_ok = sanity_ok && ok;
        row.push_back(ok ? "ok" : "FAILED (expected " +
                                      std::to_string(expected) + ")");
      } else {
        row.push_back("-");
      }
      t.rows.push_back(std::move(row));
    }
  t.footnotes.push_back(
      "cells: exact enumeration (root-support with geometric cross-check)");
  t.footnotes.push_back(
      "'flats u' is the orbit length; 'sanity' cross-checks the deepest "
      "level, where the total must be the orbit length minus the number of "
      "standard subsets of that type");

  emit(t, cfg.format, std::cout);
  return sanity_ok ? kExitPass : kExitMismatch;
}

// --- verify ---------------------------------------------------------------

struct SuiteResult {
  json checks = json::array();
  bool all_match = true;

  void add(const std::string& suite, const CountReport& r) {
    json c;
    c["suite"] = suite;
    c["identity"] = r.identity;
    c["lhs"] = r.lhs;
    if (r.has_formula) c["rhs"] = r.rhs;
    c["has_formula"] = r.has_formula;
    c["match"] = r.match;
    if (r.bundled_exponents) c["bundled_exponents"] = true;
    if (!r.notes.empty()) c["notes"] = r.notes;
    checks.push_back(std::move(c));
    all_match = all_match && r.match;
  }
  void add_plain(const std::string& suite, const std::string& identity,
                 long long lhs, long long rhs) {
    CountReport r;
    r.identity = identity;
    r.lhs = lhs;
    r.rhs = rhs;
    r.match = lhs == rhs;
    add(suite, r);
  }
};

void suite_beta(Session& s, const RunConfig& cfg, SuiteResult& out) {
  auto chambers = chambers_within_limit(s, cfg);
  auto cp = characteristic_polynomial(*s.lat);
  long long global = beta(cp.chi, s.rs->rank());
  // Half the chambers meeting H only at the origin equals beta of the whole
  // arrangement, for every choice of H; check one H per orbit.
  for (int h : orbit_ids_at(s.orb, 1)) {
    const OrbitInfo& o = s.orb.orbits[h];
    long long via_chambers =
        beta_via_chambers(*s.rs, chambers, s.lat->flat(o.representative));
    out.add_plain("beta",
                  "beta via characteristic polynomial vs via chambers, "
                  "hyperplane orbit [" + o.label + "]",
                  global, via_chambers);
  }
}

void suite_double_counting(Session& s, const RunConfig& cfg, SuiteResult& out) {
  auto chambers = chambers_within_limit(s, cfg);
  auto cp = characteristic_polynomial(*s.lat);
  long long b = beta(cp.chi, s.rs->rank());
  int workers = effective_workers(cfg);

  // Per hyperplane orbit, then the whole arrangement at once.
  std::map<int, std::vector<int>> by_orbit;
  for (int id : s.lat->level(1)) by_orbit[s.orb.orbit_of[id]].push_back(id);
  for (const auto& [h, planes] : by_orbit) {
    CountReport r = double_counting_check(*s.lat, chambers, planes, b, workers);
    r.identity += " (orbit [" + s.orb.orbits[h].label + "])";
    out.add("double-counting", r);
  }
  if (by_orbit.size() > 1) {
    std::vector<int> all(s.lat->level(1));
    out.add("double-counting",
            double_counting_check(*s.lat, chambers, all, b, workers));
  }
}

void suite_main_theorem(Session& s, const RunConfig& cfg, SuiteResult& out) {
  (void)cfg;
  long long group_order = s.rs->degrees().order;
  int deepest = s.lat->max_codim();
  for (int cx = 0; cx + 1 <= deepest; ++cx)
    for (int x : orbit_ids_at(s.orb, cx)) {
      const OSData& os = orbit_os(s, x);
      for (int y : orbit_ids_at(s.orb, cx + 1))
        out.add("main-theorem",
                g_set_report(*s.lat, s.orb, x, y, os, group_order));
      out.add("main-theorem",
              nfw_se_report(*s.lat, s.orb, x, os, group_order));
    }
}

void suite_chapoton(Session& s, const RunConfig& cfg, SuiteResult& out) {
  (void)cfg;
  out.add("chapoton", chapoton(*s.lat));
  long long group_order = s.rs->degrees().order;
  for (int h : orbit_ids_at(s.orb, 1))
    out.add("chapoton", chapoton_refined(*s.lat, s.orb, h, group_order));
}

bool is_coincidental(const CoxeterType& t) {
  if (!t.irreducible()) return false;
  const Factor& f = t.factors[0];
  return f.family == Family::A || f.family == Family::B ||
         f.family == Family::I2 || (f.family == Family::H && f.rank == 3);
}

void suite_coincidental(Session& s, const RunConfig& cfg, SuiteResult& out) {
  (void)cfg;
  if (!is_coincidental(s.type))
    throw ResourceRefusal("type " + s.type.symbol() +
                          " is outside the closed-form family (series A, B, "
                          "dihedral, and rank-3 pentagonal)");
  int rank = s.rs->rank();
  for (uint32_t core = 0; core < (1u << rank); ++core) {
    int codim_y = std::popcount(core) + 1;
    if (codim_y > s.lat->max_codim()) continue;
    for (int y : orbit_ids_at(s.orb, codim_y)) {
      if (codim_y == rank) continue;  // origin target: no closed form
      CountReport r = coincidental_check(*s.lat, s.orb, core, y);
      r.identity += " (core " + core_name(core) + ")";
      out.add("coincidental", r);
    }
  }
}

int cmd_verify(const RunConfig& cfg, const std::string& suite) {
  Session s = open_session(cfg);
  SuiteResult out;

  bool all = suite == "all";
  if (all || suite == "beta") suite_beta(s, cfg, out);
  if (all || suite == "double-counting") suite_double_counting(s, cfg, out);
  if (all || suite == "main-theorem") suite_main_theorem(s, cfg, out);
  if (all || suite == "chapoton") suite_chapoton(s, cfg, out);
  if (suite == "coincidental" || (all && is_coincidental(s.type)))
    suite_coincidental(s, cfg, out);

  if (cfg.format == "json") {
    json doc;
    doc["type"] = s.type.symbol();
    doc["suite"] = suite;
    doc["from_cache"] = s.from_cache;
    doc["checks"] = out.checks;
    doc["pass"] = out.all_match;
    std::cout << doc.dump(1, '\t') << "\n";
  } else {
    for (const json& c : out.checks) {
      std::cout << (c["match"].get<bool>() ? "pass" : "FAIL") << "  ["
                << c["suite"].get<std::string>() << "] "
                << c["identity"].get<std::string>() << ": "
                << c["lhs"].get<long long>();
      if (c["has_formula"].get<bool>())
        std::cout << " vs " << c["rhs"].get<long long>();
      else
        std::cout << " (enumeration only)";
      if (c.contains("notes"))
        std::cout << "  -- " << c["notes"].get<std::string>();
      std::cout << "\n";
    }
    std::cout << (out.all_match ? "ALL PASS" : "MISMATCHES FOUND") << " ("
              << out.checks.size() << " checks)\n";
  }
  return out.all_match ? kExitPass : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counting engine for reflection arrangements: chambers, "
               "faraway flats, and full-support parabolic subgroups"};
  app.require_subcommand(1);

  RunConfig cfg;
  auto add_common = [&cfg](CLI::App* sub, bool with_compute) {
    sub->add_option("--type", cfg.type_symbol,
                    "Coxeter type symbol, e.g. A3, B4, H4, I2(7), A1xA2")
        ->required();
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"markdown", "csv", "json"}))
        ->capture_default_str();
    if (with_compute) {
      sub->add_option("--max-codim", cfg.max_codim,
                      "Lattice depth (default: the full rank)");
      sub->add_option("--limit", cfg.limit,
                      "Group-enumeration element limit")
          ->capture_default_str();
      sub->add_option("--workers", cfg.workers,
                      "Worker threads (0 = hardware concurrency)");
      sub->add_option("--cache-dir", cfg.cache_dir,
                      "Directory for lattice/orbit cache files")
          ->envname("COXFAR_CACHE_DIR");
    }
  };

  CLI::App* describe = app.add_subcommand(
      "describe", "Print rank, degrees, exponents, and order identities");
  add_common(describe, false);

  CLI::App* table = app.add_subcommand(
      "table", "Emit counting tables of full-support parabolic types");
  add_common(table, true);
  int core_rank = -1;
  table->add_option("--core-rank", core_rank,
                    "Restrict to cores of this rank (default: all cores)");

  CLI::App* verify =
      app.add_subcommand("verify", "Run exact verification suites");
  add_common(verify, true);
  std::string suite = "all";
  verify->add_option("--suite", suite, "Which identity suite to run")
      ->check(CLI::IsMember({"beta", "double-counting", "main-theorem",
                             "chapoton", "coincidental", "all"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (describe->parsed()) return cmd_describe(cfg);
    if (table->parsed()) {
      Session s = open_session(cfg);
      return core_rank >= 0 ? cmd_table_core_rank(s, cfg, core_rank)
                            : cmd_table_all_cores(s, cfg);
    }
    return cmd_verify(cfg, suite);
  } catch (const ResourceRefusal& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kExitResource;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
}
