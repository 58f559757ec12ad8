#pragma once

#include <nlohmann/json_fwd.hpp>

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace accentmask {

/// One manifest row. Unknown JSON fields are preserved opaquely in `extra`
/// so load -> save round-trips keep them.
struct UtteranceRecord {
  std::string id;
  std::string audio_path;  // relative to the manifest's directory
  std::string accent;
  std::string transcript;
  std::string split;  // train | dev | test
  std::optional<double> duration_s;
  std::shared_ptr<nlohmann::json> extra;  // unrecognized fields, may be null
};

struct Manifest {
  std::vector<UtteranceRecord> records;
  std::vector<std::string> warnings;  // e.g. durations outside [3, 30] s
  std::filesystem::path source_path;

  std::filesystem::path base_dir() const { return source_path.parent_path(); }
};

/// Parse a JSONL manifest. Throws ValidationError with the line number on
/// malformed lines, missing required fields or duplicate ids.
Manifest load_manifest(const std::filesystem::path& path);

/// Serialize records as JSONL (atomically: temp file + rename).
void save_manifest(std::span<const UtteranceRecord> records,
                   const std::filesystem::path& path);

nlohmann::json record_to_json(const UtteranceRecord& rec);

struct CorpusStats {
  struct AccentStat {
    std::int64_t samples = 0;
    double hours = 0.0;
  };
  std::vector<std::pair<std::string, AccentStat>> per_accent;  // sorted by name
  std::map<std::string, std::int64_t> per_split;
  std::int64_t total_samples = 0;
  double total_hours = 0.0;
};

CorpusStats stats(std::span<const UtteranceRecord> records);

/// Plain-text table (Accent / Samples / Hours, then per-split totals).
std::string render_stats_table(const CorpusStats& s);

/// Force every record whose accent is in `holdout_accents` into the test
/// split and return (train-eligible records, held-out records). The
/// partitions are disjoint and exhaustive. Throws ValidationError when the
/// holdout covers every accent present.
std::pair<std::vector<UtteranceRecord>, std::vector<UtteranceRecord>>
split_holdout(std::span<const UtteranceRecord> records,
              const std::set<std::string>& holdout_accents);

}  // namespace accentmask
