#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "anum/engine.hpp"
#include "anum/json_io.hpp"
#include "anum/recomplement.hpp"

namespace anum {

enum class Check { Unimodal, TailPeaked, LogConcave, Decomposition, Monotonicity };

std::string_view to_string(Check c) noexcept;
std::optional<Check> parse_check(std::string_view name);

enum class ScanMode { Exhaustive, Random };

inline constexpr int kMaxExhaustiveScanOrder = kMaxCanonicalOrder;

struct ScanConfig {
  int n = 0;
  ScanMode mode = ScanMode::Exhaustive;
  std::size_t sample_count = 0;
  std::uint64_t seed = 0;
  std::optional<ClosureClass> class_filter;
  std::vector<Check> checks;
  /// Stop after this many graphs in one invocation; a checkpoint resumes the rest.
  std::optional<std::size_t> max_graphs;
  EngineOptions engine;
};

/// Throws BadParams for an inconsistent configuration.
void validate(const ScanConfig& config);

/// A check that failed on one graph. `detail` carries check-specific fields.
struct Finding {
  std::size_t index = 0;
  Check check = Check::Unimodal;
  Graph graph;
  ASequence sequence;
  Json detail = Json::object();
};

Json finding_json(const Finding& f);

/// All checks of `config` applied to one graph, in check order.
std::vector<Finding> evaluate_graph(const Graph& g, std::size_t index, const ScanConfig& config);

/// True when a violation of `check` contradicts a proven statement (as opposed
/// to the open unimodality question or plain observations).
bool is_theorem_check(Check check, const std::optional<ClosureClass>& class_filter);

struct ScanSummary {
  std::size_t total = 0;      // size of the work list
  std::size_t processed = 0;  // graphs processed so far, across resumes
  std::size_t in_class = 0;   // processed graphs that passed the class filter
  std::map<Check, std::size_t> violations;
  bool complete = false;

  bool theorem_violation(const ScanConfig& config) const;
};

Json summary_json(const ScanSummary& summary, const ScanConfig& config);

/// The deterministic work list: canonical representatives (exhaustive) or
/// seeded random labeled graphs (random).
std::vector<Graph> scan_work_list(const ScanConfig& config);

/// Runs the scan, writing one JSON line per finding to `out` followed by a
/// summary line. With a checkpoint path, progress is persisted after every
/// batch and an existing compatible checkpoint is resumed.
ScanSummary run_scan(const ScanConfig& config, std::ostream& out,
                     const std::optional<std::filesystem::path>& checkpoint = std::nullopt);

}  // namespace anum
