#include "elliptica/mapping_io.hpp"

#include <fstream>
#include <stdexcept>
#include <string>

namespace elliptica {

namespace {

nlohmann::json coeffs_to_json(const std::vector<Complex>& c) {
  auto arr = nlohmann::json::array();
  for (const auto& x : c) arr.push_back({x.real(), x.imag()});
  return arr;
}

std::vector<Complex> coeffs_from_json(const nlohmann::json& j, const char* field) {
  if (!j.is_array()) throw std::runtime_error(std::string("mapping field '") + field + "' must be an array");
  std::vector<Complex> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& pair = j[i];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw std::runtime_error(std::string("mapping field '") + field + "' entry " + std::to_string(i) +
                               " must be [re, im]");
    }
    out.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return out;
}

}  // namespace

nlohmann::json map_to_json(const HarmonicMap& f) {
  return {{"a", coeffs_to_json(f.analytic())},
          {"b", coeffs_to_json(f.antianalytic())},
          {"tail_bound", f.tail_bound()},
          {"r_ref", f.reference_radius()}};
}

HarmonicMap map_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::runtime_error("mapping document must be a JSON object");
  if (!j.contains("a")) throw std::runtime_error("mapping document lacks field 'a'");
  auto a = coeffs_from_json(j.at("a"), "a");
  auto b = j.contains("b") ? coeffs_from_json(j.at("b"), "b") : std::vector<Complex>{};
  const double tail = j.value("tail_bound", 0.0);
  const double r_ref = j.value("r_ref", 0.5);
  try {
    return HarmonicMap(std::move(a), std::move(b), tail, r_ref);
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("invalid mapping: ") + e.what());
  }
}

HarmonicMap read_map_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open mapping file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("cannot parse mapping file " + path.string() + ": " + e.what());
  }
  try {
    return map_from_json(j);
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

void write_map_file(const std::filesystem::path& path, const HarmonicMap& f) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write mapping file " + path.string());
  out << map_to_json(f).dump(2) << '\n';
  if (!out) throw std::runtime_error("write failed for mapping file " + path.string());
}

}  // namespace elliptica
