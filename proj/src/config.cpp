// config.cpp -- strict JSON in, canonical JSON out.

#include "conlab/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "conlab/errors.hpp"
#include "json.hpp"

namespace conlab {

namespace {

using nlohmann::json;

void reject_unknown(const json& j, std::initializer_list<const char*> known,
                    const std::string& where) {
  for (const auto& item : j.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || item.key() == k;
    if (!ok)
      throw ConfigError("unknown key \"" + item.key() + "\" in " + where);
  }
}

ConormalTarget parse_target(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "whole") return ConormalTarget::whole();
    throw ConfigError("target string must be \"whole\"");
  }
  if (!j.is_object()) throw ConfigError("target must be \"whole\" or an object");
  if (j.contains("point")) {
    reject_unknown(j, {"point"}, "target");
    return ConormalTarget::point(j.at("point").get<double>());
  }
  if (j.contains("arc")) {
    reject_unknown(j, {"arc", "sign"}, "target");
    const json& ends = j.at("arc");
    if (!ends.is_array() || ends.size() != 2)
      throw ConfigError("target arc must be [a, b]");
    const std::string sign = j.at("sign").get<std::string>();
    if (sign != "plus" && sign != "minus")
      throw ConfigError("arc sign must be \"plus\" or \"minus\"");
    return ConormalTarget::arc(ends[0].get<double>(), ends[1].get<double>(),
                               sign == "plus" ? ArcSign::Plus : ArcSign::Minus);
  }
  throw ConfigError("target object needs \"point\" or \"arc\"");
}

json dump_target(const ConormalTarget& t) {
  if (t.is_whole()) return "whole";
  if (t.is_point()) return json{{"point", t.as_point().x.q}};
  const auto& arc = t.as_arc();
  return json{{"arc", {arc.a.q, arc.b.q}},
              {"sign", arc.sign == ArcSign::Plus ? "plus" : "minus"}};
}

}  // namespace

ExperimentConfig ExperimentConfig::parse(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config root must be an object");

  ExperimentConfig c;
  try {
    reject_unknown(j,
                   {"hamiltonian", "target", "n_max", "seed", "tol", "grid",
                    "trials", "out"},
                   "config");
    if (j.contains("hamiltonian")) {
      const json& h = j.at("hamiltonian");
      if (!h.is_object()) throw ConfigError("hamiltonian must be an object");
      reject_unknown(h, {"cos", "sin", "horizon"}, "hamiltonian");
      if (h.contains("cos"))
        c.cos_coeffs = h.at("cos").get<std::vector<double>>();
      if (h.contains("sin"))
        c.sin_coeffs = h.at("sin").get<std::vector<double>>();
      if (h.contains("horizon")) c.horizon = h.at("horizon").get<double>();
    }
    if (j.contains("target")) c.target = parse_target(j.at("target"));
    if (j.contains("n_max")) c.n_max = j.at("n_max").get<int>();
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("tol")) c.tol = j.at("tol").get<double>();
    if (j.contains("grid")) c.grid = j.at("grid").get<int>();
    if (j.contains("trials")) c.trials = j.at("trials").get<int>();
    if (j.contains("out")) c.out_dir = j.at("out").get<std::string>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config field has the wrong type: ") +
                      e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  c.validate();
  return c;
}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse(text.str());
}

std::string ExperimentConfig::serialize() const {
  json j;
  j["hamiltonian"] = {{"cos", cos_coeffs}, {"sin", sin_coeffs},
                      {"horizon", horizon}};
  j["target"] = dump_target(target);
  j["n_max"] = n_max;
  j["seed"] = seed;
  j["tol"] = tol;
  j["grid"] = grid;
  j["trials"] = trials;
  j["out"] = out_dir;
  return j.dump(2) + "\n";
}

void ExperimentConfig::validate() const {
  if (grid <= 0) throw ConfigError("grid must be positive");
  if (n_max < 1) throw ConfigError("n_max must be at least 1");
  if (!(tol > 0.0)) throw ConfigError("tol must be positive");
  if (trials < 1) throw ConfigError("trials must be at least 1");
  if (!(horizon >= 0.0)) throw ConfigError("horizon must be nonnegative");
  if ((int)cos_coeffs.size() > kMaxTrigDegree + 1 ||
      (int)sin_coeffs.size() > kMaxTrigDegree)
    throw ConfigError("generator degree exceeds the supported maximum");
  for (double v : cos_coeffs)
    if (!std::isfinite(v)) throw ConfigError("cos coefficients must be finite");
  for (double v : sin_coeffs)
    if (!std::isfinite(v)) throw ConfigError("sin coefficients must be finite");
  if (out_dir.empty()) throw ConfigError("out directory must be nonempty");
}

TrigPoly ExperimentConfig::poly() const {
  TrigPoly f =
      TrigPoly::constant(cos_coeffs.empty() ? 0.0 : cos_coeffs[0]);
  for (std::size_t k = 1; k < cos_coeffs.size(); ++k)
    f = f + TrigPoly::cosine((int)k, cos_coeffs[k]);
  for (std::size_t k = 0; k < sin_coeffs.size(); ++k)
    f = f + TrigPoly::sine((int)k + 1, sin_coeffs[k]);
  return f;
}

HamRef ExperimentConfig::hamiltonian() const {
  return lifted_auto(poly(), horizon > 0.0 ? horizon : n_max + 1.0);
}

}  // namespace conlab
