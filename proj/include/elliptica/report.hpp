#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "elliptica/harmonic_map.hpp"
#include "elliptica/oracles.hpp"

namespace elliptica {

inline constexpr const char* kVersion = "elliptica 0.1.0";

/// Status strings used in reports: the oracle statuses plus "holds" for a
/// sampled check that passed and "excluded" for a map failing the hypotheses.
struct Verdict {
  std::string check;
  std::string status;
  double margin = 0.0;
  std::vector<Complex> witness;
  std::optional<Resolution> resolution;
  std::string note;
};

Verdict verdict_from(std::string check, const OracleVerdict& v);

struct Slack {
  std::string quantity;
  int n = 0;  ///< coefficient index, 0 when not applicable
  double value = 0.0;
};

struct MapRecord {
  std::string id;
  std::string source;
  std::vector<Verdict> verdicts;
  std::vector<Slack> slacks;
};

struct WorstCase {
  std::string map_id;
  std::string quantity;
  int n = 0;
  double value = 0.0;
};

struct Report {
  std::string theorem;
  nlohmann::json params = nlohmann::json::object();
  std::vector<MapRecord> maps;
  std::optional<double> runtime_ms;

  /// Smallest slack over all maps, first occurrence on ties.
  std::optional<WorstCase> worst_case() const;
  std::size_t refutations() const;
};

nlohmann::json to_json(const Resolution& r);
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const Report& report);

/// Writes the report as indented JSON. Throws std::runtime_error naming the path.
void write_report(const std::filesystem::path& path, const Report& report);

struct ReportSummary {
  std::string theorem;
  std::size_t maps = 0;
  std::map<std::string, std::size_t> status_counts;
  std::size_t refutations = 0;
  nlohmann::json worst_case;
};

/// Reads back a report written by write_report.
ReportSummary summarize(const nlohmann::json& report);

}  // namespace elliptica
