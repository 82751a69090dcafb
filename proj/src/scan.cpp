#include "anum/scan.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <fstream>
#include <random>
#include <sstream>

#include "anum/decomposition.hpp"
#include "anum/enumerate.hpp"
#include "anum/error.hpp"
#include "anum/graph_io.hpp"
#include "anum/sequence_shape.hpp"

namespace anum {

namespace {

constexpr std::size_t kBatch = 64;

constexpr Check kAllChecks[] = {Check::Unimodal, Check::TailPeaked, Check::LogConcave, Check::Decomposition,
                                Check::Monotonicity};

}  // namespace

std::string_view to_string(Check c) noexcept {
  switch (c) {
    case Check::Unimodal: return "unimodal";
    case Check::TailPeaked: return "tail_peaked";
    case Check::LogConcave: return "log_concave";
    case Check::Decomposition: return "decomposition";
    case Check::Monotonicity: return "monotonicity";
  }
  return "unknown";
}

std::optional<Check> parse_check(std::string_view name) {
  for (Check c : kAllChecks) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

void validate(const ScanConfig& config) {
  if (config.n < 0) throw Error(ErrorKind::BadParams, "scan needs n >= 0");
  if (config.checks.empty()) throw Error(ErrorKind::BadParams, "scan needs at least one check");
  if (config.n > config.engine.max_order) {
    throw Error(ErrorKind::TooLarge, "scan order exceeds the engine cap");
  }
  if (config.mode == ScanMode::Exhaustive && config.n > kMaxExhaustiveScanOrder) {
    throw Error(ErrorKind::TooLarge,
                "exhaustive scans are limited to " + std::to_string(kMaxExhaustiveScanOrder) + " vertices");
  }
  if (config.mode == ScanMode::Random && config.sample_count == 0) {
    throw Error(ErrorKind::BadParams, "random scans need a positive sample count");
  }
  if (config.max_graphs && *config.max_graphs == 0) throw Error(ErrorKind::BadParams, "max graphs must be positive");
}

Json finding_json(const Finding& f) {
  Json out;
  out["format"] = kJsonFormat;
  out["type"] = "finding";
  out["check"] = std::string(to_string(f.check));
  out["index"] = f.index;
  out["graph6"] = emit_graph6(f.graph);
  out["a_sequence"] = to_json(f.sequence);
  for (const auto& [key, value] : f.detail.items()) out[key] = value;
  return out;
}

bool is_theorem_check(Check check, const std::optional<ClosureClass>& class_filter) {
  switch (check) {
    case Check::Decomposition:
    case Check::Monotonicity: return true;
    case Check::TailPeaked:
      return class_filter == ClosureClass::HamiltonianPlusSmall || class_filter == ClosureClass::UniversalVertex;
    case Check::Unimodal:
    case Check::LogConcave: return false;
  }
  return false;
}

std::vector<Finding> evaluate_graph(const Graph& g, std::size_t index, const ScanConfig& config) {
  std::vector<Finding> out;
  const ASequence seq = a_sequence(g, config.engine);
  const SequenceShape shape = analyze(seq);
  auto report = [&](Check c, Json detail) { out.push_back(Finding{index, c, g, seq, std::move(detail)}); };

  std::vector<Check> checks = config.checks;
  std::sort(checks.begin(), checks.end());
  checks.erase(std::unique(checks.begin(), checks.end()), checks.end());

  for (Check c : checks) {
    switch (c) {
      case Check::Unimodal:
        if (!shape.unimodal) report(c, Json::object());
        break;
      case Check::TailPeaked:
        if (!shape.tail_peaked) report(c, Json::object());
        break;
      case Check::LogConcave:
        if (!shape.log_concave) report(c, Json{{"first_violation", *shape.first_violation}});
        break;
      case Check::Decomposition:
        for (int b = 1; b < g.order(); ++b) {
          for (int a = 0; a < b; ++a) {
            if (g.has_edge(a, b)) continue;
            const auto r = verify_decomposition(g, EdgePair{a, b}, config.engine);
            if (!r.rhs_check) report(c, Json{{"edge", to_json(r.edge)}, {"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}});
          }
        }
        break;
      case Check::Monotonicity:
        for (const auto& e : g.edges()) {
          const ASequence smaller = a_sequence(remove_edge(g, e), config.engine);
          if (!termwise_le(smaller, seq)) report(c, Json{{"removed_edge", to_json(e)}, {"subgraph_sequence", to_json(smaller)}});
        }
        break;
    }
  }
  return out;
}

bool ScanSummary::theorem_violation(const ScanConfig& config) const {
  for (const auto& [check, count] : violations) {
    if (count > 0 && is_theorem_check(check, config.class_filter)) return true;
  }
  return false;
}

namespace {

Json config_json(const ScanConfig& config) {
  Json checks = Json::array();
  std::vector<Check> sorted = config.checks;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (Check c : sorted) checks.push_back(std::string(to_string(c)));
  Json out;
  out["n"] = config.n;
  out["mode"] = config.mode == ScanMode::Exhaustive ? "exhaustive" : "random";
  out["sample_count"] = config.sample_count;
  out["seed"] = config.seed;
  out["class"] = config.class_filter ? Json(std::string(to_string(*config.class_filter))) : Json(nullptr);
  out["checks"] = std::move(checks);
  return out;
}

Json violations_json(const ScanSummary& summary, const ScanConfig& config) {
  Json out = Json::object();
  const Json cfg = config_json(config);
  for (const auto& entry : cfg["checks"]) {
    const auto check = *parse_check(entry.get<std::string>());
    const auto it = summary.violations.find(check);
    out[entry.get<std::string>()] = it == summary.violations.end() ? 0 : it->second;
  }
  return out;
}

void write_checkpoint(const std::filesystem::path& path, const ScanConfig& config, const ScanSummary& summary,
                      const std::string& last_graph6) {
  Json doc;
  doc["format"] = kJsonFormat;
  doc["config"] = config_json(config);
  doc["next_index"] = summary.processed;
  doc["last_graph6"] = last_graph6;
  doc["in_class"] = summary.in_class;
  doc["violations"] = violations_json(summary, config);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::trunc);
    if (!f) throw Error(ErrorKind::BadParams, "cannot write checkpoint " + tmp.string());
    f << doc.dump() << '\n';
  }
  std::filesystem::rename(tmp, path);
}

void load_checkpoint(const std::filesystem::path& path, const ScanConfig& config, const std::vector<Graph>& work,
                     ScanSummary& summary) {
  std::ifstream f(path);
  Json doc;
  try {
    doc = Json::parse(f);
  } catch (const Json::parse_error& e) {
    throw ParseError(0, "checkpoint " + path.string() + " is not valid JSON");
  }
  if (doc.value("format", 0) != kJsonFormat || doc["config"] != config_json(config)) {
    throw Error(ErrorKind::BadParams, "checkpoint " + path.string() + " belongs to a different scan");
  }
  summary.processed = doc["next_index"].get<std::size_t>();
  summary.in_class = doc["in_class"].get<std::size_t>();
  if (summary.processed > work.size()) throw Error(ErrorKind::BadParams, "checkpoint is ahead of the work list");
  if (summary.processed > 0 && emit_graph6(work[summary.processed - 1]) != doc["last_graph6"].get<std::string>()) {
    throw Error(ErrorKind::BadParams, "checkpoint does not match the work list");
  }
  for (const auto& [name, count] : doc["violations"].items()) {
    summary.violations[*parse_check(name)] = count.get<std::size_t>();
  }
}

}  // namespace

Json summary_json(const ScanSummary& summary, const ScanConfig& config) {
  Json out;
  out["format"] = kJsonFormat;
  out["type"] = "summary";
  out["config"] = config_json(config);
  out["total"] = summary.total;
  out["processed"] = summary.processed;
  out["in_class"] = summary.in_class;
  out["violations"] = violations_json(summary, config);
  out["complete"] = summary.complete;
  out["theorem_violation"] = summary.theorem_violation(config);
  return out;
}

std::vector<Graph> scan_work_list(const ScanConfig& config) {
  validate(config);
  if (config.mode == ScanMode::Exhaustive) return isomorphism_classes(config.n);
  std::mt19937_64 rng(config.seed);
  std::vector<Graph> out;
  out.reserve(config.sample_count);
  for (std::size_t i = 0; i < config.sample_count; ++i) out.push_back(random_graph(config.n, rng));
  return out;
}

ScanSummary run_scan(const ScanConfig& config, std::ostream& out,
                     const std::optional<std::filesystem::path>& checkpoint) {
  const std::vector<Graph> work = scan_work_list(config);
  ScanSummary summary;
  summary.total = work.size();
  for (Check c : config.checks) summary.violations[c];
  if (checkpoint && std::filesystem::exists(*checkpoint)) load_checkpoint(*checkpoint, config, work, summary);

  const std::size_t stop =
      config.max_graphs ? std::min(work.size(), summary.processed + *config.max_graphs) : work.size();

  while (summary.processed < stop) {
    const std::size_t begin = summary.processed;
    const std::size_t end = std::min(stop, begin + kBatch);
    const auto count = static_cast<std::int64_t>(end - begin);
    std::vector<std::vector<Finding>> found(static_cast<std::size_t>(count));
    std::vector<char> member(static_cast<std::size_t>(count), 0);
    std::exception_ptr failure;

    // Workers own disjoint slots; the loop below is the single writer.
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < count; ++i) {
      try {
        const auto slot = static_cast<std::size_t>(i);
        const Graph& g = work[begin + slot];
        if (config.class_filter && !in_closure_class(g, *config.class_filter)) continue;
        member[slot] = 1;
        found[slot] = evaluate_graph(g, begin + slot, config);
      } catch (...) {
#pragma omp critical
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);

    for (std::size_t slot = 0; slot < found.size(); ++slot) {
      summary.in_class += static_cast<std::size_t>(member[slot]);
      for (const auto& f : found[slot]) {
        ++summary.violations[f.check];
        out << finding_json(f).dump() << '\n';
      }
    }
    out.flush();
    summary.processed = end;
    if (checkpoint) write_checkpoint(*checkpoint, config, summary, emit_graph6(work[end - 1]));
  }

  summary.complete = summary.processed == work.size();
  out << summary_json(summary, config).dump() << '\n';
  out.flush();
  return summary;
}

}  // namespace anum
