#include "tvlab/report.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "tvlab/bounds.hpp"
#include "tvlab/deleted_product.hpp"
#include "tvlab/fundamental_group.hpp"
#include "tvlab/homology.hpp"
#include "tvlab/isomorphism.hpp"
#include "tvlab/mr_shelling.hpp"
#include "tvlab/random_complex.hpp"
#include "tvlab/shelling.hpp"
#include "tvlab/vertex_decomposable.hpp"

namespace tvlab {

std::string_view to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass: return "pass";
    case ClaimStatus::Fail: return "fail";
    case ClaimStatus::Skipped: return "skipped";
  }
  return "?";
}

bool VerificationReport::all_passed() const { return count(ClaimStatus::Fail) == 0; }

std::size_t VerificationReport::count(ClaimStatus s) const {
  std::size_t n = 0;
  for (const ClaimRecord& c : claims) n += c.status == s ? 1 : 0;
  return n;
}

Json VerificationReport::to_json(bool with_timing) const {
  Json out;
  out["rmax"] = rmax;
  out["summary"] = Json{{"pass", count(ClaimStatus::Pass)},
                        {"fail", count(ClaimStatus::Fail)},
                        {"skipped", count(ClaimStatus::Skipped)}};
  Json cs = Json::array();
  for (const ClaimRecord& c : claims) {
    Json e;
    e["id"] = c.id;
    e["location"] = c.location;
    e["parameters"] = c.parameters;
    e["expected"] = c.expected;
    e["computed"] = c.computed;
    e["status"] = std::string(to_string(c.status));
    if (!c.reason.empty()) e["reason"] = c.reason;
    cs.push_back(std::move(e));
  }
  out["claims"] = std::move(cs);
  if (with_timing) {
    Json t = Json::object();
    for (const ClaimRecord& c : claims) t[c.id] = c.runtime_seconds;
    out["timing"] = std::move(t);
  }
  return out;
}

namespace {

std::string cell(std::string s) {
  for (char& ch : s) {
    if (ch == '|') ch = '/';
    if (ch == '\n') ch = ' ';
  }
  return s;
}

}  // namespace

std::string VerificationReport::to_markdown(bool with_timing) const {
  std::ostringstream md;
  md << "# Verification report (rmax " << rmax << ")\n\n";
  md << count(ClaimStatus::Pass) << " pass, " << count(ClaimStatus::Fail) << " fail, "
     << count(ClaimStatus::Skipped) << " skipped\n\n";
  md << "| claim | statement | expected | computed | status |\n|---|---|---|---|---|\n";
  for (const ClaimRecord& c : claims) {
    std::string status(to_string(c.status));
    if (!c.reason.empty()) status += " (" + c.reason + ")";
    md << "| " << c.id << " | " << cell(c.location) << " | " << cell(c.expected) << " | " << cell(c.computed.dump())
       << " | " << cell(status) << " |\n";
  }
  if (with_timing) {
    md << "\n## Timing\n\n| claim | seconds |\n|---|---|\n";
    for (const ClaimRecord& c : claims) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", c.runtime_seconds);
      md << "| " << c.id << " | " << buf << " |\n";
    }
  }
  return md.str();
}

std::string ResultCache::content_hash(std::string_view data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string ResultCache::path_for(std::string_view kind, std::string_view content) const {
  return (std::filesystem::path(*dir_) / (std::string(kind) + "-" + content_hash(content) + ".json")).string();
}

std::optional<Json> ResultCache::get(std::string_view kind, std::string_view content) const {
  if (!dir_) return std::nullopt;
  const std::string path = path_for(kind, content);
  if (!std::filesystem::exists(path)) return std::nullopt;
  try {
    Json j = read_json_file(path);
    // Guard against hash collisions and truncated files.
    if (!j.is_object() || j.value("length", std::size_t{0}) != content.size() || !j.contains("value")) {
      return std::nullopt;
    }
    return j["value"];
  } catch (const Error&) {
    return std::nullopt;
  }
}

void ResultCache::put(std::string_view kind, std::string_view content, const Json& value) const {
  if (!dir_) return;
  Json j;
  j["kind"] = std::string(kind);
  j["length"] = content.size();
  j["value"] = value;
  write_file_atomic(path_for(kind, content), dump(j));
}

std::optional<std::string> resolve_cache_dir(std::optional<std::string> flag) {
  if (const char* env = std::getenv("TVLAB_CACHE"); env != nullptr && *env != '\0') return std::string(env);
  return flag;
}

BettiVector betti_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "Betti vector is not an array");
  BettiVector b;
  for (const Json& e : j) {
    if (e.is_object()) {
      b.minus_one = e.at("minus_one").get<std::int64_t>();
    } else {
      b.values.push_back(e.get<std::int64_t>());
    }
  }
  return b;
}

std::vector<CorpusEntry> connectivity_corpus() {
  std::vector<CorpusEntry> c;
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {2, 6}, {2, 8}, {3, 6}, {3, 9}, {3, 12},
                                                      {4, 8}, {4, 12}, {4, 16}}) {
    c.push_back({"U" + std::to_string(m) + "_" + std::to_string(n), uniform_matroid(m, n)});
  }
  for (int r = 2; r <= 4; ++r) c.push_back({"M" + std::to_string(r), build_mr(r)});
  for (int r = 2; r <= 3; ++r) c.push_back({"Mprime" + std::to_string(r), build_mr_prime(r)});
  auto sum = [](std::vector<Matroid> parts) { return direct_sum(parts); };
  c.push_back({"U1_2+U1_2", sum({uniform_matroid(1, 2), uniform_matroid(1, 2)})});
  c.push_back({"U1_3+U1_3", sum({uniform_matroid(1, 3), uniform_matroid(1, 3)})});
  c.push_back({"U1_2+U2_4", sum({uniform_matroid(1, 2), uniform_matroid(2, 4)})});
  c.push_back({"U1_3+U2_6", sum({uniform_matroid(1, 3), uniform_matroid(2, 6)})});
  c.push_back({"U2_4+U2_4", sum({uniform_matroid(2, 4), uniform_matroid(2, 4)})});
  return c;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  ClaimStatus status = ClaimStatus::Fail;
  Json computed;
  std::string reason;
};

Outcome verdict(bool ok, Json computed, std::string reason_if_failed = {}) {
  return Outcome{ok ? ClaimStatus::Pass : ClaimStatus::Fail, std::move(computed), ok ? "" : std::move(reason_if_failed)};
}

struct Context {
  const VerifyOptions& options;
  ResultCache cache;
};

struct ClaimSpec {
  std::string id;
  std::string location;
  Json parameters;
  std::string expected;
  int min_rmax = 2;
  std::function<Outcome(Context&)> run;
};

BettiVector cached_betti(Context& ctx, const SimplicialComplex& sigma) {
  const std::string key = complex_to_json(sigma).dump();
  if (auto hit = ctx.cache.get("betti", key)) return betti_from_json(*hit);
  BettiVector b = betti_f2(sigma);
  ctx.cache.put("betti", key, betti_to_json(b));
  return b;
}

DeletedProductReport cached_product(Context& ctx, const Matroid& m, int k) {
  const std::string key = std::to_string(k) + ":" + complex_to_json(m.complex).dump();
  if (auto hit = ctx.cache.get("delprod", key)) {
    DeletedProductReport rep;
    rep.r = m.rank;
    rep.b = static_cast<int>(m.disjoint_bases.size());
    rep.k = k;
    rep.cell_counts = hit->at("cells").get<std::vector<std::size_t>>();
    rep.betti = betti_from_json(hit->at("betti"));
    rep.connectivity = rep.cell_counts.empty() ? -2 : homological_connectivity(rep.betti, false);
    rep.hypotheses_hold = rep.b >= 2 && k >= 2 && rep.r >= 2 && rep.r >= k && rep.b >= k;
    rep.lower_bound = deleted_product_lower_bound(rep.r, rep.b, k);
    rep.bound_respected = rep.connectivity >= rep.lower_bound;
    rep.b_at_least_r_k_minus_1_plus_1 = rep.b >= rep.r * (k - 1) + 1;
    rep.b_at_least_r_minus_1_k_minus_1_plus_1 = rep.b >= (rep.r - 1) * (k - 1) + 1;
    return rep;
  }
  DeletedProductReport rep = analyze_deleted_product(m, k);
  ctx.cache.put("delprod", key, Json{{"cells", rep.cell_counts}, {"betti", betti_to_json(rep.betti)}});
  return rep;
}

// Certificate from the cache when present; always re-verified by the caller.
ShellingOrder cached_shelling(Context& ctx, const std::string& name, const SimplicialComplex& sigma,
                              const std::function<ShellingOrder()>& produce) {
  const std::string key = name + ":" + complex_to_json(sigma).dump();
  if (auto hit = ctx.cache.get("shelling", key)) return shelling_from_json(*hit);
  ShellingOrder s = produce();
  ctx.cache.put("shelling", key, shelling_to_json(s));
  return s;
}

SimplicialComplex relabel(const SimplicialComplex& sigma, std::uint64_t seed) {
  if (seed == 0) return sigma;
  std::mt19937_64 rng(seed);
  std::vector<Vertex> perm(sigma.vertex_count());
  for (Vertex v = 0; v < perm.size(); ++v) perm[v] = v;
  std::shuffle(perm.begin(), perm.end(), rng);
  return permute_vertices(sigma, perm);
}

// Sphere counts (h_1, h_2, ...) against (β̃_0, β̃_1, ...), with β̃_{-1} = 0.
bool h_matches_betti(const std::vector<std::int64_t>& spheres, const BettiVector& b) {
  if (b.minus_one != 0) return false;
  const std::size_t top = std::max(spheres.size(), b.values.size());
  for (std::size_t i = 0; i < top; ++i) {
    const std::int64_t h = i < spheres.size() ? spheres[i] : 0;
    if (h != b.at(static_cast<int>(i))) return false;
  }
  return true;
}

std::int64_t ipow(std::int64_t a, int e) {
  std::int64_t out = 1;
  while (e-- > 0) out *= a;
  return out;
}

void add_deleted_join_claims(std::vector<ClaimSpec>& reg) {
  for (int r = 3; r <= 4; ++r) {
    reg.push_back({"mrjoin.betti.r" + std::to_string(r), "Betti numbers of the 2-fold deleted join of M_r",
                   Json{{"r", r}},
                   "b~_i = 0 for i <= 2r-3, b~_{2r-2} = 2(r-1)^(r-1) = " + std::to_string(2 * ipow(r - 1, r - 1)) +
                       ", b~_{2r-1} >= (r^2-3r+1)^r = " + std::to_string(ipow(r * r - 3 * r + 1, r)),
                   r, [r](Context& ctx) {
                     const SimplicialComplex dj = deleted_join(build_mr(r).complex, 2);
                     const BettiVector b = cached_betti(ctx, dj);
                     bool ok = b.minus_one == 0;
                     for (int i = 0; i <= 2 * r - 3; ++i) ok = ok && b.at(i) == 0;
                     ok = ok && b.at(2 * r - 2) == 2 * ipow(r - 1, r - 1) && b.at(2 * r - 1) >= ipow(r * r - 3 * r + 1, r);
                     return verdict(ok, Json{{"betti", betti_to_json(b)}}, "Betti numbers differ");
                   }});
  }
  auto shelling_claim = [](std::string id, std::string location, int r, int min_rmax, bool prime) {
    return ClaimSpec{std::move(id), std::move(location), Json{{"r", r}},
                     "order passes both verifiers and its h-diagonal equals the Betti numbers", min_rmax,
                     [r, prime](Context& ctx) {
                       const SimplicialComplex dj =
                           deleted_join((prime ? build_mr_prime(r) : build_mr(r)).complex, 2);
                       const ShellingOrder s = cached_shelling(ctx, prime ? "mprime" : "mr", dj, [&] {
                         return (prime ? shelling_mr2_prime(r) : shelling_mr2(r)).shelling;
                       });
                       const bool pairwise = verify_shelling_pairwise(dj, s.order).ok;
                       const bool intersection = verify_shelling_intersection(dj, s.order).ok;
                       const bool certificate = check_certificate(dj, s);
                       const std::vector<std::int64_t> h =
                           pairwise ? homotopy_from_shelling(dj, s) : std::vector<std::int64_t>{};
                       const BettiVector b = cached_betti(ctx, dj);
                       const bool match = pairwise && h_matches_betti(h, b);
                       return verdict(pairwise && intersection && certificate && match,
                                      Json{{"facets", dj.facet_count()},
                                           {"pairwise", pairwise},
                                           {"intersection", intersection},
                                           {"certificate", certificate},
                                           {"h", h},
                                           {"betti", betti_to_json(b)}},
                                      "shelling or h-diagonal check failed");
                     }};
  };
  reg.push_back(shelling_claim("mrjoin.shelling.r3", "explicit shelling of the 2-fold deleted join of M_r", 3, 3, false));
  reg.push_back(shelling_claim("mrjoin.shelling.r4", "explicit shelling of the 2-fold deleted join of M_r", 4, 4, false));

  reg.push_back({"mrjoin2.euler.r2", "Euler characteristic of the 2-fold deleted join of M_2", Json{{"r", 2}},
                 "chi = 2", 2, [](Context&) {
                   const std::int64_t chi = euler_characteristic(deleted_join(build_mr(2).complex, 2));
                   return verdict(chi == 2, Json{{"euler_characteristic", chi}}, "chi != 2");
                 }});
  reg.push_back({"mrjoin2.betti.r2", "2-fold deleted join of M_2 is not 2-connected", Json{{"r", 2}},
                 "b~_0 = b~_1 = 0, b~_2 != 0", 2, [](Context& ctx) {
                   const BettiVector b = cached_betti(ctx, deleted_join(build_mr(2).complex, 2));
                   return verdict(b.at(0) == 0 && b.at(1) == 0 && b.at(2) != 0, Json{{"betti", betti_to_json(b)}},
                                  "unexpected Betti numbers");
                 }});
  reg.push_back({"mrjoin2.pi1.r2", "2-fold deleted join of M_2 is simply connected", Json{{"r", 2}},
                 "presentation simplifies to the trivial group", 2, [](Context&) {
                   const GroupPresentation p = pi1_presentation(deleted_join(build_mr(2).complex, 2));
                   const Pi1Simplification s = try_trivialize(p);
                   return verdict(s.outcome == Pi1Outcome::Trivial,
                                  Json{{"generators", p.generators.size()},
                                       {"relators", p.relators.size()},
                                       {"outcome", to_string(s.outcome)},
                                       {"steps", s.steps}},
                                  "not shown trivial");
                 }});
  for (int r = 2; r <= 3; ++r) {
    reg.push_back({"mprimejoin.betti.r" + std::to_string(r), "2-fold deleted join of M'_r is (2r-2)-connected",
                   Json{{"r", r}}, "b~_i = 0 for i <= 2r-2", r, [r](Context& ctx) {
                     const BettiVector b = cached_betti(ctx, deleted_join(build_mr_prime(r).complex, 2));
                     bool ok = b.minus_one == 0;
                     for (int i = 0; i <= 2 * r - 2; ++i) ok = ok && b.at(i) == 0;
                     return verdict(ok, Json{{"betti", betti_to_json(b)}}, "non-zero Betti number in range");
                   }});
    reg.push_back(shelling_claim("mprimejoin.shelling.r" + std::to_string(r),
                                 "shelling of the 2-fold deleted join of M'_r", r, r, true));
  }
}

void add_covering_claims(std::vector<ClaimSpec>& reg) {
  const int r = 3;
  reg.push_back({"covering.lower.r3", "the two lower parts of the deleted join of M_r are acyclic", Json{{"r", r}},
                 "all b~ = 0 on both components", 3, [](Context& ctx) {
                   const MrCovering c = covering_subcomplexes(3);
                   const BettiVector b1 = cached_betti(ctx, c.lower1);
                   const BettiVector b2 = cached_betti(ctx, c.lower2);
                   return verdict(b1.all_zero() && b2.all_zero(),
                                  Json{{"betti1", betti_to_json(b1)}, {"betti2", betti_to_json(b2)}}, "not acyclic");
                 }});
  reg.push_back({"covering.swap.r3", "the row swap exchanges the two lower parts and their meets with the top",
                 Json{{"r", r}}, "facet sets equal after relabelling", 3, [](Context&) {
                   const MrCovering c = covering_subcomplexes(3);
                   return verdict(c.swap_exchanges_components, Json{{"exchanged", c.swap_exchanges_components}},
                                  "row swap does not exchange the components");
                 }});
  reg.push_back({"covering.meet.r3", "each meet of the top part with a lower part is a wedge of (2r-3)-spheres",
                 Json{{"r", r}}, "b~_{2r-3} = (r-1)^(r-1) = 4, all other b~ = 0", 3, [](Context& ctx) {
                   const MrCovering c = covering_subcomplexes(3);
                   Json computed;
                   bool ok = true;
                   int idx = 1;
                   for (const SimplicialComplex* m : {&c.meet1, &c.meet2}) {
                     const BettiVector b = cached_betti(ctx, *m);
                     computed["betti" + std::to_string(idx++)] = betti_to_json(b);
                     ok = ok && b.minus_one == 0;
                     for (int i = 0; i < static_cast<int>(b.values.size()); ++i) ok = ok && b.at(i) == (i == 3 ? 4 : 0);
                     ok = ok && b.at(3) == 4;
                   }
                   return verdict(ok, computed, "unexpected Betti numbers");
                 }});
  reg.push_back({"covering.top.r3", "the top-dimensional part has homology only in degree 2r-1", Json{{"r", r}},
                 "b~_i = 0 for i != 5, b~_5 != 0", 3, [](Context& ctx) {
                   const BettiVector b = cached_betti(ctx, covering_subcomplexes(3).top);
                   bool ok = b.minus_one == 0 && b.at(5) != 0;
                   for (int i = 0; i < static_cast<int>(b.values.size()); ++i) ok = ok && (i == 5 || b.at(i) == 0);
                   return verdict(ok, Json{{"betti", betti_to_json(b)}}, "homology outside degree 5");
                 }});
  reg.push_back({"rowswap.free.r3", "the row swap acts freely on H_{2r-2} of the deleted join of M_r", Json{{"r", r}},
                 "rank(1 + t) = 4 on F2^8", 3, [](Context&) {
                   const SimplicialComplex dj = deleted_join(build_mr(3).complex, 2);
                   const InducedMap t = induced_involution(dj, row_swap(9), 4);
                   const std::size_t rk = rank_one_plus(t);
                   const bool free = is_free_f2z2(t);
                   return verdict(free && t.homology_rank() == 8 && rk == 4,
                                  Json{{"homology_rank", t.homology_rank()}, {"rank_one_plus", rk}, {"free", free}},
                                  "not a free module");
                 }});
}

void add_obstruction_claims(std::vector<ClaimSpec>& reg) {
  for (int n : {2, 3}) {
    const std::string nm = std::to_string(n);
    reg.push_back({"chessboard.unshellable." + nm + "x" + nm, "the square chessboard complex is not shellable",
                   Json{{"k", n}, {"r", n}}, "exhaustive search: not shellable", 2, [n](Context& ctx) {
                     const SearchResult s = search_shelling(relabel(chessboard(n, n), ctx.options.seed), ctx.options.budget);
                     const char* st = s.status == SearchStatus::Found           ? "found"
                                      : s.status == SearchStatus::NotShellable ? "not_shellable"
                                                                               : "exhausted";
                     Json computed{{"status", st}, {"nodes", s.nodes}};
                     if (s.status == SearchStatus::Exhausted) return Outcome{ClaimStatus::Skipped, computed, "exhausted"};
                     return verdict(s.status == SearchStatus::NotShellable, computed, "a shelling was found");
                   }});
  }
  reg.push_back({"chessboard.link.r5k3", "a link in the 3-fold deleted join of M_5 is the 2x2 chessboard complex",
                 Json{{"r", 5}, {"k", 3}}, "link isomorphic to chessboard(2,2)", 2, [](Context&) {
                   const int r = 5;
                   const int k = 3;
                   auto base = [&](int block, int elem) { return static_cast<Vertex>((block - 1) * r + (elem - 1)); };
                   Face a;
                   for (int i = 1; i <= k - 1; ++i) {
                     for (int b = 1; b <= r - 1; ++b) a = a.with(deleted_join_vertex(base(b, i), i, k));
                   }
                   for (int b = 1; b <= k - 1; ++b) a = a.with(deleted_join_vertex(base(b, r), k, k));
                   for (int j = k; j <= r; ++j) a = a.with(deleted_join_vertex(base(r, j), k, k));
                   const SimplicialComplex lk = compact(deleted_join_link(build_mr(r).complex, k, a));
                   const auto iso = find_isomorphism(lk, chessboard(2, 2));
                   Json computed{{"face_size", a.size()}, {"link_facets", lk.facet_count()}, {"isomorphic", iso.has_value()}};
                   if (iso) computed["map"] = *iso;
                   return verdict(iso.has_value(), computed, "not isomorphic");
                 }});
  reg.push_back({"mrjoin.not_vd.r3", "the 2-fold deleted join of M_r is not vertex-decomposable", Json{{"r", 3}},
                 "symmetry-reduced search: No (or Exhausted with the deletion-chain refutation)", 3,
                 [](Context& ctx) {
                   const SimplicialComplex dj = deleted_join(build_mr(3).complex, 2);
                   const VdResult v = is_vertex_decomposable(dj, ctx.options.budget, block_join_symmetries(3, 3));
                   const char* st = v.status == VdStatus::Yes ? "yes" : v.status == VdStatus::No ? "no" : "exhausted";
                   Face guarded;
                   for (Vertex x = 12; x < 18; ++x) guarded = guarded.with(x);
                   const ChainRefutation c = refute_by_deletion_chain(dj, guarded, ctx.options.budget);
                   Json computed{{"search", st}, {"nodes", v.nodes}, {"chain_refuted", c.refuted}, {"chain_states", c.states}};
                   const bool ok = v.status == VdStatus::No || (v.status == VdStatus::Exhausted && c.refuted);
                   return verdict(ok, computed, "a decomposition was found or the refutation failed");
                 }});
}

void add_product_claims(std::vector<ClaimSpec>& reg) {
  for (int r = 2; r <= 5; ++r) {
    for (int k = 2; k <= std::min(3, r); ++k) {
      reg.push_back({"simplexproduct.connectivity.r" + std::to_string(r) + ".k" + std::to_string(k),
                     "deleted product of the simplex is (r-k-1)-connected and not (r-k)-connected",
                     Json{{"r", r}, {"k", k}}, "b~_i = 0 for i < r-k, b~_{r-k} != 0", 2, [r, k](Context&) {
                       const CWProductComplex p = deleted_product(simplex(static_cast<std::size_t>(r)), k);
                       const BettiVector b = betti_f2(product_chain_complex(p));
                       bool ok = b.minus_one == 0 && b.at(r - k) != 0;
                       for (int i = 0; i < r - k; ++i) ok = ok && b.at(i) == 0;
                       bool single = b.at(r - k) == 1;
                       for (int i = 0; i < static_cast<int>(b.values.size()); ++i) single = single && (i == r - k || b.at(i) == 0);
                       return verdict(ok, Json{{"betti", betti_to_json(b)}, {"single_sphere", single}},
                                      "connectivity differs");
                     }});
    }
  }
  for (const CorpusEntry& e : connectivity_corpus()) {
    const int r = e.matroid.rank;
    const int b = static_cast<int>(e.matroid.disjoint_bases.size());
    for (int k = 2; k <= 4; ++k) {
      if (k > r || k > b) continue;
      const Json params{{"matroid", e.name}, {"r", r}, {"b", b}, {"k", k}};
      const Matroid m = e.matroid;
      const std::string suffix = e.name + ".k" + std::to_string(k);
      reg.push_back({"product.bound." + suffix, "lower bound on the connectivity of the deleted product", params,
                     "homological connectivity >= r-2-floor(r(k-1)/b) = " +
                         std::to_string(deleted_product_lower_bound(r, b, k)),
                     std::max(2, r), [m, k](Context& ctx) {
                       const DeletedProductReport rep = cached_product(ctx, m, k);
                       return verdict(rep.bound_respected,
                                      Json{{"betti", betti_to_json(rep.betti)},
                                           {"connectivity", rep.connectivity},
                                           {"bound", rep.lower_bound},
                                           {"b>=r(k-1)+1", rep.b_at_least_r_k_minus_1_plus_1},
                                           {"b>=(r-1)(k-1)+1", rep.b_at_least_r_minus_1_k_minus_1_plus_1}},
                                      "bound violated");
                     }});
      if (b >= r * (k - 1) + 1) {
        reg.push_back({"product.exact." + suffix, "exact connectivity when b >= r(k-1)+1", params,
                       "homological connectivity = r-2 and b~_{r-1} != 0", std::max(2, r), [m, k, r](Context& ctx) {
                         const DeletedProductReport rep = cached_product(ctx, m, k);
                         return verdict(rep.connectivity == r - 2 && rep.betti.at(r - 1) != 0,
                                        Json{{"betti", betti_to_json(rep.betti)}, {"connectivity", rep.connectivity}},
                                        "connectivity is not r-2");
                       }});
      }
    }
  }
  reg.push_back({"conf2.mprime3", "configuration space of two points in M'_3", Json{{"r", 3}, {"b", 4}},
                 "homological connectivity = r-2 = 1 and b~_2 != 0", 3, [](Context& ctx) {
                   const DeletedProductReport rep = cached_product(ctx, build_mr_prime(3), 2);
                   return verdict(rep.connectivity == 1 && rep.betti.at(2) != 0,
                                  Json{{"betti", betti_to_json(rep.betti)}, {"connectivity", rep.connectivity}},
                                  "unexpected connectivity");
                 }});
}

// Distinct prime factors by trial division, independent of is_prime_power.
int distinct_prime_factors(std::int64_t n) {
  int count = 0;
  for (std::int64_t q = 2; q <= n; ++q) {
    if (n % q != 0) continue;
    ++count;
    while (n % q == 0) n /= q;
  }
  return count;
}

void add_bound_claims(std::vector<ClaimSpec>& reg) {
  reg.push_back({"bounds.quadratic.grid", "prime powers p <= 2 ell satisfy the quadratic inequality",
                 Json{{"b", "1..50"}, {"r", "1..50"}, {"d", "1..50"}}, "zero violations", 2, [](Context&) {
                   std::int64_t checked = 0;
                   std::int64_t violations = 0;
                   std::int64_t not_tight = 0;
                   std::int64_t non_monotone = 0;
                   for (int r = 1; r <= 50; ++r) {
                     for (int d = 1; d <= 50; ++d) {
                       std::int64_t previous = 0;
                       for (int b = 1; b <= 50; ++b) {
                         const int x = d + 1;
                         const std::int64_t top = floor_two_ell(b, r, x);
                         if (within_two_ell(top + 1, b, r, x)) ++not_tight;
                         for (std::int64_t p = 2; p <= top; ++p) {
                           if (!is_prime_power(static_cast<std::uint64_t>(p))) continue;
                           ++checked;
                           if (eq2_value(p, b, r, x) < 0) ++violations;
                         }
                         const std::int64_t best = tt_lower_bound({b, r, d}).value_or(0);
                         if (best < previous) ++non_monotone;
                         previous = best;
                       }
                     }
                   }
                   return verdict(violations == 0 && not_tight == 0 && non_monotone == 0,
                                  Json{{"checked", checked},
                                       {"violations", violations},
                                       {"floor_errors", not_tight},
                                       {"monotonicity_breaks", non_monotone}},
                                  "violations found");
                 }});
  reg.push_back({"bounds.npp.oracle", "npp-ceiling against trial division", Json{{"max", 10000}},
                 "agreement for all integer arguments 0..10000", 2, [](Context&) {
                   std::int64_t mismatches = 0;
                   for (std::int64_t x = 0; x <= 10000; ++x) {
                     std::int64_t k = std::max<std::int64_t>(x, 2);
                     while (distinct_prime_factors(k) == 1) ++k;
                     if (npp_ceiling(static_cast<long double>(x)) != k || npp_ceiling(x, 1) != k) ++mismatches;
                   }
                   return verdict(mismatches == 0, Json{{"mismatches", mismatches}}, "mismatches found");
                 }});
}

void add_cross_claims(std::vector<ClaimSpec>& reg) {
  reg.push_back({"cross.hdiag.random", "h-diagonal of a shelling equals the Betti numbers",
                 Json{{"complexes", 200}, {"max_vertices", 10}}, "agreement on every complex", 2, [](Context& ctx) {
                   std::mt19937_64 rng(ctx.options.seed ^ 0x68646961ULL);
                   int mismatches = 0;
                   for (int i = 0; i < 200; ++i) {
                     const int n = 3 + static_cast<int>(rng() % 8);
                     const ShelledComplex s = random_shellable_complex(rng, n, 2 + static_cast<int>(rng() % 12));
                     if (!h_matches_betti(homotopy_from_shelling(s.complex, s.shelling), betti_f2(s.complex))) ++mismatches;
                   }
                   return verdict(mismatches == 0, Json{{"mismatches", mismatches}}, "mismatches found");
                 }});
  reg.push_back({"cross.verifiers.random", "pairwise and intersection verifiers agree",
                 Json{{"complexes", 200}, {"max_vertices", 10}}, "agreement on every random order", 2,
                 [](Context& ctx) {
                   std::mt19937_64 rng(ctx.options.seed ^ 0x76657269ULL);
                   int disagreements = 0;
                   int shellings = 0;
                   for (int i = 0; i < 200; ++i) {
                     const int n = 3 + static_cast<int>(rng() % 8);
                     const SimplicialComplex sigma = random_complex(rng, n, 2 + static_cast<int>(rng() % 8), 4);
                     const std::vector<std::size_t> order = random_order(rng, sigma.facet_count());
                     const bool a = verify_shelling_pairwise(sigma, order).ok;
                     const bool b = verify_shelling_intersection(sigma, order).ok;
                     if (a != b) ++disagreements;
                     if (a) ++shellings;
                   }
                   return verdict(disagreements == 0, Json{{"disagreements", disagreements}, {"shellings", shellings}},
                                  "verifiers disagree");
                 }});
}

std::vector<ClaimSpec> registry(int rmax) {
  if (rmax < 2 || rmax > 4) throw Error(ErrorCode::BadParameter, "rmax must be 2, 3 or 4");
  std::vector<ClaimSpec> all;
  add_deleted_join_claims(all);
  add_covering_claims(all);
  add_obstruction_claims(all);
  add_product_claims(all);
  add_bound_claims(all);
  add_cross_claims(all);
  std::vector<ClaimSpec> out;
  for (ClaimSpec& c : all) {
    if (c.min_rmax <= rmax) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

std::vector<std::string> registry_ids(int rmax) {
  std::vector<std::string> ids;
  for (const ClaimSpec& c : registry(rmax)) ids.push_back(c.id);
  return ids;
}

VerificationReport verify_paper(const VerifyOptions& options) {
  const std::vector<ClaimSpec> reg = registry(options.rmax);
  Context ctx{options, ResultCache(resolve_cache_dir(options.cache_dir))};
  VerificationReport report;
  report.rmax = options.rmax;
  report.claims.resize(reg.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < reg.size(); i = next++) {
      const ClaimSpec& spec = reg[i];
      ClaimRecord& rec = report.claims[i];
      rec.id = spec.id;
      rec.location = spec.location;
      rec.parameters = spec.parameters;
      rec.expected = spec.expected;
      const auto start = Clock::now();
      try {
        Outcome o = spec.run(ctx);
        rec.status = o.status;
        rec.computed = std::move(o.computed);
        rec.reason = std::move(o.reason);
      } catch (const Error& e) {
        rec.status = e.code() == ErrorCode::BudgetExceeded ? ClaimStatus::Skipped : ClaimStatus::Fail;
        rec.reason = e.what();
      } catch (const std::exception& e) {
        rec.status = ClaimStatus::Fail;
        rec.reason = e.what();
      }
      rec.runtime_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    }
  };
  unsigned jobs = options.jobs != 0 ? options.jobs : std::max(1U, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(reg.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  return report;
}

}  // namespace tvlab
