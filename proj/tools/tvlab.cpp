// Command-line front end: build complexes, compute homology, check shellings,
// analyse deleted products, evaluate bounds and run the claim registry.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tvlab/bounds.hpp"
#include "tvlab/deleted_product.hpp"
#include "tvlab/homology.hpp"
#include "tvlab/matroid.hpp"
#include "tvlab/mr_shelling.hpp"
#include "tvlab/report.hpp"
#include "tvlab/serialization.hpp"
#include "tvlab/shelling.hpp"

using namespace tvlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFailed = 2;

struct Globals {
  std::string ring = "f2";
  std::optional<std::string> cache_dir;
  std::size_t budget = 1'000'000;
  std::string format = "json";
  std::uint64_t seed = 0;
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_file_atomic(path, text);
  }
}

SimplicialComplex load_complex(const std::string& path) { return complex_from_json(read_json_file(path)); }

std::string betti_table(const BettiVector& b) {
  std::ostringstream md;
  md << "| i | betti |\n|---|---|\n";
  if (b.minus_one != 0) md << "| -1 | " << b.minus_one << " |\n";
  for (std::size_t i = 0; i < b.values.size(); ++i) md << "| " << i << " | " << b.values[i] << " |\n";
  return md.str();
}

Json bound_json(const BoundReport& r) {
  Json j;
  j["b"] = r.query.b;
  j["r"] = r.query.r;
  j["d"] = r.query.d;
  j["x"] = r.query.x();
  j["ell"] = static_cast<double>(r.ell);
  j["best_prime_power"] = r.best_prime_power ? Json(*r.best_prime_power) : Json(nullptr);
  j["connectivity_lower"] = r.connectivity_lower ? Json(*r.connectivity_lower) : Json(nullptr);
  j["upper_npp"] = r.upper_npp ? Json(*r.upper_npp) : Json(nullptr);
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matroid deleted joins and products: homology, shellings and Tverberg-type bounds"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--ring", g.ring, "Coefficient ring (only f2)")->check(CLI::IsMember({"f2"}));
  app.add_option("--cache-dir", g.cache_dir, "Result cache directory (TVLAB_CACHE overrides)");
  app.add_option("--budget", g.budget, "Node budget for exhaustive searches")->capture_default_str();
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "md"}))->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for tie-shuffling and random corpora")->capture_default_str();

  // build
  auto* build = app.add_subcommand("build", "Write a complex in the JSON format");
  std::string kind;
  int br = 3, bm = 2, bn = 4, bk = 2, bdj = 0;
  std::string build_out;
  build->add_option("kind", kind, "mr | mr-prime | uniform | chessboard | simplex")
      ->required()
      ->check(CLI::IsMember({"mr", "mr-prime", "uniform", "chessboard", "simplex"}));
  build->add_option("--r", br, "Rank / columns / simplex vertices");
  build->add_option("--m", bm, "Uniform rank");
  build->add_option("--n", bn, "Uniform ground set size");
  build->add_option("--k", bk, "Chessboard rows");
  build->add_option("--deleted-join", bdj, "Write the k-fold deleted join instead");
  build->add_option("-o,--output", build_out, "Output file (default stdout)");

  // homology
  auto* hom = app.add_subcommand("homology", "Reduced Betti numbers over F2");
  std::string hom_in;
  int hom_dj = 0;
  bool hom_dense = false;
  hom->add_option("complex", hom_in, "Complex JSON file")->required()->check(CLI::ExistingFile);
  hom->add_option("--deleted-join", hom_dj, "Use the k-fold deleted join of the input");
  hom->add_flag("--dense", hom_dense, "Use dense elimination");

  // shell
  auto* shell = app.add_subcommand("shell", "Shelling certificates");
  shell->require_subcommand(1);
  shell->fallthrough();
  auto* sverify = shell->add_subcommand("verify", "Verify a certificate with both verifiers");
  std::string sv_complex, sv_cert;
  sverify->add_option("complex", sv_complex)->required()->check(CLI::ExistingFile);
  sverify->add_option("certificate", sv_cert)->required()->check(CLI::ExistingFile);
  auto* ssearch = shell->add_subcommand("search", "Exhaustive shelling search");
  std::string ss_complex, ss_out;
  ssearch->add_option("complex", ss_complex)->required()->check(CLI::ExistingFile);
  ssearch->add_option("-o,--output", ss_out, "Certificate output file");
  auto* sbuild = shell->add_subcommand("mr", "Construct the shelling of the 2-fold deleted join of M_r or M'_r");
  int sb_r = 3;
  bool sb_prime = false;
  std::string sb_out, sb_complex_out;
  sbuild->add_option("--r", sb_r)->required();
  sbuild->add_flag("--prime", sb_prime, "Use M'_r");
  sbuild->add_option("-o,--output", sb_out, "Certificate output file");
  sbuild->add_option("--complex-out", sb_complex_out, "Also write the deleted join");

  // delprod
  auto* dp = app.add_subcommand("delprod", "Homology of the k-fold deleted product of a matroid");
  std::string dp_in;
  int dp_k = 2;
  std::size_t dp_cap = kDefaultCellBudget;
  dp->add_option("matroid", dp_in, "Independence complex JSON file")->required()->check(CLI::ExistingFile);
  dp->add_option("--k", dp_k, "Number of factors")->required();
  dp->add_option("--max-dim-cap", dp_cap, "Refuse instances with more cells than this")->capture_default_str();

  // bounds
  auto* bd = app.add_subcommand("bounds", "Tverberg-number bounds");
  BoundQuery q;
  bd->add_option("--b", q.b, "Disjoint bases")->required()->check(CLI::PositiveNumber);
  bd->add_option("--r", q.r, "Rank")->required()->check(CLI::PositiveNumber);
  bd->add_option("--d", q.d, "Dimension")->required()->check(CLI::PositiveNumber);

  // verify-paper
  auto* vp = app.add_subcommand("verify-paper", "Run the claim registry");
  VerifyOptions vo;
  std::string vp_out;
  vp->add_option("--rmax", vo.rmax, "Largest rank")->check(CLI::IsMember({2, 3, 4}))->capture_default_str();
  vp->add_option("--jobs", vo.jobs, "Worker threads (0 = hardware)");
  vp->add_option("-o,--output", vp_out, "Report output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  const bool md = g.format == "md";
  try {
    if (*build) {
      SimplicialComplex sigma;
      if (kind == "mr") sigma = build_mr(br).complex;
      if (kind == "mr-prime") sigma = build_mr_prime(br).complex;
      if (kind == "uniform") sigma = uniform_matroid(bm, bn).complex;
      if (kind == "chessboard") sigma = chessboard(bk, br);
      if (kind == "simplex") sigma = simplex(static_cast<std::size_t>(br));
      if (bdj > 0) sigma = deleted_join(sigma, bdj);
      emit(dump(complex_to_json(sigma)), build_out);
      return kExitOk;
    }
    if (*hom) {
      SimplicialComplex sigma = load_complex(hom_in);
      if (hom_dj > 0) sigma = deleted_join(sigma, hom_dj);
      const ChainComplexF2 c = chain_complex(sigma);
      const BettiVector b = hom_dense ? betti_f2_dense(c) : betti_f2(c);
      if (md) {
        std::cout << betti_table(b);
      } else {
        Json j;
        j["betti"] = betti_to_json(b);
        j["reduced_euler_characteristic"] = reduced_euler_characteristic(c);
        j["homological_connectivity"] = homological_connectivity(b, sigma.is_void());
        std::cout << dump(j);
      }
      return kExitOk;
    }
    if (*sverify) {
      const SimplicialComplex sigma = load_complex(sv_complex);
      const ShellingOrder s = shelling_from_json(read_json_file(sv_cert));
      const ShellingVerdict p = verify_shelling_pairwise(sigma, s.order);
      const ShellingVerdict i = verify_shelling_intersection(sigma, s.order);
      const bool cert = s.witnesses.empty() || check_certificate(sigma, s);
      Json j{{"pairwise", p.ok}, {"intersection", i.ok}, {"certificate", cert}};
      if (!p.ok && p.failed_position) j["failed_position"] = *p.failed_position;
      const bool ok = p.ok && i.ok && cert;
      j["result"] = ok ? "pass" : "fail";
      std::cout << dump(j);
      return ok ? kExitOk : kExitFailed;
    }
    if (*ssearch) {
      const SimplicialComplex sigma = load_complex(ss_complex);
      const SearchResult r = search_shelling(sigma, g.budget);
      const char* st = r.status == SearchStatus::Found ? "found" : r.status == SearchStatus::NotShellable ? "not_shellable" : "exhausted";
      std::cerr << "search: " << st << " after " << r.nodes << " nodes\n";
      if (r.shelling) emit(dump(shelling_to_json(*r.shelling)), ss_out);
      return r.status == SearchStatus::Found ? kExitOk : kExitFailed;
    }
    if (*sbuild) {
      const BlockJoinShelling s = sb_prime ? shelling_mr2_prime(sb_r) : shelling_mr2(sb_r);
      if (!sb_complex_out.empty()) emit(dump(complex_to_json(s.complex)), sb_complex_out);
      emit(dump(shelling_to_json(s.shelling)), sb_out);
      return kExitOk;
    }
    if (*dp) {
      const SimplicialComplex sigma = load_complex(dp_in);
      Matroid m;
      m.complex = sigma;
      m.rank = sigma.dimension() + 1;
      m.disjoint_bases = disjoint_bases(m);
      const DeletedProductReport rep = analyze_deleted_product(m, dp_k, dp_cap);
      Json j;
      j["r"] = rep.r;
      j["b"] = rep.b;
      j["k"] = rep.k;
      j["cells"] = rep.cell_counts;
      j["betti"] = betti_to_json(rep.betti);
      j["homological_connectivity"] = rep.connectivity;
      j["hypotheses_hold"] = rep.hypotheses_hold;
      j["lower_bound"] = rep.lower_bound;
      j["bound_respected"] = rep.bound_respected;
      j["b>=r(k-1)+1"] = rep.b_at_least_r_k_minus_1_plus_1;
      j["b>=(r-1)(k-1)+1"] = rep.b_at_least_r_minus_1_k_minus_1_plus_1;
      if (md) {
        std::cout << betti_table(rep.betti);
      } else {
        std::cout << dump(j);
      }
      return rep.hypotheses_hold && !rep.bound_respected ? kExitFailed : kExitOk;
    }
    if (*bd) {
      const Json j = bound_json(bound_report(q));
      if (md) {
        std::cout << "| field | value |\n|---|---|\n";
        for (const auto& [key, value] : j.items()) std::cout << "| " << key << " | " << value.dump() << " |\n";
      } else {
        std::cout << dump(j);
      }
      return kExitOk;
    }
    if (*vp) {
      vo.budget = g.budget;
      vo.cache_dir = g.cache_dir;
      vo.seed = g.seed;
      const VerificationReport rep = verify_paper(vo);
      emit(md ? rep.to_markdown() : dump(rep.to_json()), vp_out);
      return rep.all_passed() ? kExitOk : kExitFailed;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
