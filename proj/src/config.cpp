#include "genco/config.hpp"

#include "genco/errors.hpp"

namespace genco {

namespace {

using namespace schema;

template <class Spec, class Parse>
std::vector<Spec> parse_list(const json& j, const std::string& path, Parse parse) {
  if (!j.is_array()) throw config_error(path, "expected an array");
  std::vector<Spec> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(parse(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

}  // namespace

run_config parse_config(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw config_error("", "JSON syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  require_object(j, "");

  run_config config;
  const std::string poset = as_string(field(j, "poset", ""), "poset");
  if (poset == "hechler") {
    config.poset = poset_kind::hechler;
    reject_unknown_keys(j, "", {"poset", "help", "target", "dense", "steps", "seed"});
    config.help = help_set_from_json(field(j, "help", ""), "help");
    config.dense = parse_list<dense_spec>(field(j, "dense", ""), "dense", dense_spec_from_json);
    config.steps = as_natural(field(j, "steps", ""), "steps");
  } else if (poset == "cohen") {
    config.poset = poset_kind::cohen;
    reject_unknown_keys(j, "", {"poset", "target", "dense", "dense2", "stages", "seed"});
    config.cohen_dense = parse_list<cohen_spec>(field(j, "dense", ""), "dense", cohen_spec_from_json);
    config.cohen_dense2 =
        parse_list<cohen_spec>(field(j, "dense2", ""), "dense2", cohen_spec_from_json);
    config.steps = as_natural(field(j, "stages", ""), "stages");
  } else {
    throw config_error("poset", "expected \"hechler\" or \"cohen\"");
  }
  config.target = sequence_from_json(field(j, "target", ""), "target");
  if (config.poset == poset_kind::cohen) {
    auto binary = [](const std::vector<std::uint64_t>& v) {
      return std::all_of(v.begin(), v.end(), [](auto b) { return b <= 1; });
    };
    if (!binary(config.target.prefix) || !binary(config.target.cycle)) {
      throw config_error("target", "Cohen targets must be binary");
    }
  }
  if (j.contains("seed")) config.seed = as_natural(j["seed"], "seed");
  return config;
}

json to_json(const run_config& config) {
  json out;
  out["target"] = to_json(config.target);
  if (config.seed) out["seed"] = *config.seed;
  if (config.poset == poset_kind::hechler) {
    out["poset"] = "hechler";
    out["help"] = to_json(*config.help);
    out["dense"] = roster_json(config.dense);
    out["steps"] = config.steps;
  } else {
    out["poset"] = "cohen";
    json d1 = json::array();
    for (const auto& s : config.cohen_dense) d1.push_back(to_json(s));
    json d2 = json::array();
    for (const auto& s : config.cohen_dense2) d2.push_back(to_json(s));
    out["dense"] = std::move(d1);
    out["dense2"] = std::move(d2);
    out["stages"] = config.steps;
  }
  return out;
}

std::string canonical_config(const run_config& config) { return canonical(to_json(config)); }

}  // namespace genco
