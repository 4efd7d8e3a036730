#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tvlab/matroid.hpp"
#include "tvlab/serialization.hpp"

namespace tvlab {

enum class ClaimStatus { Pass, Fail, Skipped };
std::string_view to_string(ClaimStatus s);

/// One registry entry after running it. `reason` explains skips and failures.
struct ClaimRecord {
  std::string id;
  std::string location;
  Json parameters;
  std::string expected;
  Json computed;
  ClaimStatus status = ClaimStatus::Skipped;
  std::string reason;
  double runtime_seconds = 0;
};

struct VerificationReport {
  int rmax = 3;
  std::vector<ClaimRecord> claims;

  bool all_passed() const;
  std::size_t count(ClaimStatus s) const;
  /// Canonical JSON. Runtimes live only under "timing", so the rest is
  /// byte-identical between runs.
  Json to_json(bool with_timing = true) const;
  /// Markdown table followed by a separate timing section.
  std::string to_markdown(bool with_timing = true) const;
};

/// Results keyed by a content hash under a directory; disabled without one.
/// Writes go through a temporary file and a rename.
class ResultCache {
 public:
  explicit ResultCache(std::optional<std::string> dir = std::nullopt) : dir_(std::move(dir)) {}

  bool enabled() const { return dir_.has_value(); }
  std::optional<Json> get(std::string_view kind, std::string_view content) const;
  void put(std::string_view kind, std::string_view content, const Json& value) const;

  /// 64-bit FNV-1a as 16 hex digits.
  static std::string content_hash(std::string_view data);

 private:
  std::string path_for(std::string_view kind, std::string_view content) const;
  std::optional<std::string> dir_;
};

/// TVLAB_CACHE, when set and non-empty, overrides `flag`.
std::optional<std::string> resolve_cache_dir(std::optional<std::string> flag);

struct VerifyOptions {
  int rmax = 3;
  std::size_t budget = 1'000'000;
  std::optional<std::string> cache_dir;
  std::uint64_t seed = 0;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned jobs = 0;
};

/// Claim ids of the registry for `rmax`, in report order. Throws
/// BadParameter unless rmax is 2, 3 or 4.
std::vector<std::string> registry_ids(int rmax);

/// Runs every registry claim; failures and budget overruns become entries.
VerificationReport verify_paper(const VerifyOptions& options);

/// Matroids used by the deleted-product connectivity claims.
struct CorpusEntry {
  std::string name;
  Matroid matroid;
};
std::vector<CorpusEntry> connectivity_corpus();

BettiVector betti_from_json(const Json& j);

}  // namespace tvlab
