#include "elliptica/report.hpp"

#include <fstream>
#include <stdexcept>

namespace elliptica {

namespace {

nlohmann::json complex_json(Complex z) { return nlohmann::json::array({z.real(), z.imag()}); }

}  // namespace

Verdict verdict_from(std::string check, const OracleVerdict& v) {
  return {std::move(check), to_string(v.status), v.margin, v.witness, v.resolution, v.note};
}

std::optional<WorstCase> Report::worst_case() const {
  std::optional<WorstCase> worst;
  for (const auto& m : maps) {
    for (const auto& s : m.slacks) {
      if (!worst || s.value < worst->value) worst = WorstCase{m.id, s.quantity, s.n, s.value};
    }
  }
  return worst;
}

std::size_t Report::refutations() const {
  std::size_t count = 0;
  for (const auto& m : maps) {
    for (const auto& v : m.verdicts) count += v.status == "refuted";
  }
  return count;
}

nlohmann::json to_json(const Resolution& r) {
  return {{"n_r", r.n_r},
          {"n_theta", r.n_theta},
          {"rounds_used", r.rounds_used},
          {"mesh", r.mesh},
          {"delta_sep", r.delta_sep},
          {"eps_img", r.eps_img},
          {"lipschitz", r.lipschitz},
          {"hessian_bound", r.hessian_bound},
          {"samples", r.samples},
          {"majorant", r.majorant}};
}

nlohmann::json to_json(const Verdict& v) {
  nlohmann::json j = {{"check", v.check}, {"status", v.status}, {"margin", v.margin}};
  auto w = nlohmann::json::array();
  for (const auto& z : v.witness) w.push_back(complex_json(z));
  j["witness"] = w;
  j["resolution"] = v.resolution ? to_json(*v.resolution) : nlohmann::json(nullptr);
  j["note"] = v.note;
  return j;
}

nlohmann::json to_json(const Report& report) {
  nlohmann::json maps = nlohmann::json::array();
  for (const auto& m : report.maps) {
    auto verdicts = nlohmann::json::array();
    for (const auto& v : m.verdicts) verdicts.push_back(to_json(v));
    auto slacks = nlohmann::json::array();
    for (const auto& s : m.slacks) slacks.push_back({{"quantity", s.quantity}, {"n", s.n}, {"value", s.value}});
    maps.push_back({{"id", m.id}, {"source", m.source}, {"verdicts", verdicts}, {"slacks", slacks}});
  }
  nlohmann::json worst = nullptr;
  if (const auto w = report.worst_case()) {
    worst = {{"map_id", w->map_id}, {"quantity", w->quantity}, {"n", w->n}, {"value", w->value}};
  }
  return {{"theorem", report.theorem},
          {"params", report.params},
          {"maps", maps},
          {"worst_case", worst},
          {"runtime_ms", report.runtime_ms ? nlohmann::json(*report.runtime_ms) : nlohmann::json(nullptr)},
          {"version", kVersion}};
}

void write_report(const std::filesystem::path& path, const Report& report) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write report " + path.string());
  out << to_json(report).dump(2) << '\n';
  if (!out) throw std::runtime_error("error while writing report " + path.string());
}

ReportSummary summarize(const nlohmann::json& report) {
  if (!report.is_object() || !report.contains("maps") || !report["maps"].is_array()) {
    throw std::runtime_error("not a verification report: missing 'maps' array");
  }
  ReportSummary s;
  s.theorem = report.value("theorem", "");
  s.maps = report["maps"].size();
  for (const auto& m : report["maps"]) {
    if (!m.contains("verdicts")) continue;
    for (const auto& v : m["verdicts"]) {
      const auto status = v.value("status", "");
      ++s.status_counts[status];
      s.refutations += status == "refuted";
    }
  }
  s.worst_case = report.value("worst_case", nlohmann::json(nullptr));
  return s;
}

}  // namespace elliptica
