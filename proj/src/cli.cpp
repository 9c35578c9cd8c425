#include "genco/cli.hpp"

#include "genco/coding.hpp"
#include "genco/cohen.hpp"
#include "genco/config.hpp"
#include "genco/errors.hpp"
#include "genco/generic.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace genco::cli {

namespace {

class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_payload(const std::string& path, const std::string& payload, std::ostream& out) {
  if (path == "-") {
    out << payload;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw io_error("cannot write " + path);
  file << payload;
  if (!file) throw io_error("write to " + path + " failed");
}

std::uint64_t default_fuel() {
  const char* env = std::getenv("GENCO_FUEL");
  if (env == nullptr || *env == '\0') return kDefaultFuel;
  try {
    natural value = parse_natural(env);
    if (value == 0 || value > std::numeric_limits<std::uint64_t>::max()) {
      throw malformed_input("out of range");
    }
    return static_cast<std::uint64_t>(value);
  } catch (const malformed_input&) {
    throw config_error("GENCO_FUEL", "expected a positive natural number");
  }
}

run_config load_config(const std::string& path, poset_kind want) {
  run_config config = parse_config(read_file(path));
  if (config.poset != want) {
    throw config_error("poset", want == poset_kind::hechler ? "this command needs a hechler config"
                                                            : "this command needs a cohen config");
  }
  return config;
}

int verify_hechler(const run_config& config, const std::string& text, std::ostream& out,
                   std::ostream& err) {
  run_transcript transcript;
  try {
    transcript = parse_transcript(text);
  } catch (const malformed_input& e) {
    err << "verification failed: " << e.what() << "\n";
    return verification_failed;
  }
  const bool plain = transcript.header.target_json == kNullTarget;
  const help_set a = plain ? help_set::empty() : *config.help;
  const std::optional<eventually_periodic> x =
      plain ? std::nullopt : std::optional<eventually_periodic>(config.target);
  const auto report = verify_transcript(config.dense, a, x, transcript);
  out << report.render();
  if (!report.all_passed()) {
    err << "verification failed: " << report.failures() << " check(s)\n";
    return verification_failed;
  }
  return ok;
}

int verify_cohen(const run_config& config, const std::string& text, std::ostream& out,
                 std::ostream& err) {
  pair_transcript transcript;
  try {
    transcript = parse_pair_transcript(text);
  } catch (const malformed_input& e) {
    err << "verification failed: " << e.what() << "\n";
    return verification_failed;
  }
  const auto report = verify_pair(make_cohen_roster(config.cohen_dense),
                                  make_cohen_roster(config.cohen_dense2), config.target, transcript);
  out << report.render();
  if (!report.all_passed()) {
    err << "verification failed: " << report.failures() << " check(s)\n";
    return verification_failed;
  }
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generic coding over Tree-Hechler and Cohen forcing, with verifiable transcripts",
               "genco"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::string transcript_path;
  std::string help_path;
  std::string g_text;
  std::string dense_text;
  std::string node_text;
  std::uint64_t max_rank = 16;
  std::uint64_t width = 64;

  auto* build = app.add_subcommand("build", "coded Tree-Hechler build; writes a transcript");
  build->add_option("--config", config_path, "run config (JSON)")->required();
  build->add_option("--out", out_path, "transcript path, '-' for stdout")->required();

  auto* plain = app.add_subcommand("plain", "plain Tree-Hechler build (no coding)");
  plain->add_option("--config", config_path, "run config (JSON)")->required();
  plain->add_option("--out", out_path, "transcript path, '-' for stdout")->required();

  auto* decode_cmd = app.add_subcommand("decode", "print the A-encoded prefix of g");
  decode_cmd->add_option("--help-config", help_path, "help set (JSON)")->required();
  decode_cmd->add_option("--g", g_text, "generic prefix, e.g. [5,2,7,6]")->required();

  auto* verify = app.add_subcommand("verify", "independently check a transcript");
  verify->add_option("--config", config_path, "run config (JSON)")->required();
  verify->add_option("--transcript", transcript_path, "transcript path")->required();

  auto* cohen = app.add_subcommand("cohen", "Cohen-pair build; writes a pair transcript");
  cohen->add_option("--config", config_path, "run config (JSON)")->required();
  cohen->add_option("--out", out_path, "transcript path, '-' for stdout")->required();

  auto* rank = app.add_subcommand("rank", "truncated reachability rank of a node");
  rank->add_option("--dense", dense_text, "stem-based dense set spec (JSON)")->required();
  rank->add_option("--node", node_text, "node, e.g. [1,2]")->required();
  rank->add_option("--max-rank", max_rank, "largest rank searched");
  rank->add_option("--width", width, "successors sampled per node");

  std::vector<const char*> argv{"genco"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return config_failure;
  }

  try {
    if (build->parsed() || plain->parsed()) {
      const auto config = load_config(config_path, poset_kind::hechler);
      const auto fuel = default_fuel();
      const auto transcript =
          build->parsed()
              ? build_coded_generic(config.dense, *config.help, config.target, config.steps, fuel)
              : build_plain_generic(config.dense, config.steps, fuel);
      write_payload(out_path, render_transcript(transcript), out);
      return ok;
    }
    if (cohen->parsed()) {
      const auto config = load_config(config_path, poset_kind::cohen);
      const auto transcript =
          build_pair(make_cohen_roster(config.cohen_dense), make_cohen_roster(config.cohen_dense2),
                     config.target, config.steps);
      write_payload(out_path, render_pair_transcript(transcript), out);
      return ok;
    }
    if (decode_cmd->parsed()) {
      json j;
      try {
        j = json::parse(read_file(help_path));
      } catch (const json::parse_error& e) {
        throw config_error("", "JSON syntax error at byte " + std::to_string(e.byte));
      }
      const help_set a = help_set_from_json(j, "");
      node g;
      try {
        g = parse_sequence(g_text);
      } catch (const malformed_input& e) {
        throw config_error("--g", e.what());
      }
      out << render_sequence(decode(a, g)) << "\n";
      return ok;
    }
    if (verify->parsed()) {
      const auto config = parse_config(read_file(config_path));
      const auto text = read_file(transcript_path);
      return config.poset == poset_kind::hechler ? verify_hechler(config, text, out, err)
                                                 : verify_cohen(config, text, out, err);
    }
    if (rank->parsed()) {
      json j;
      try {
        j = json::parse(dense_text);
      } catch (const json::parse_error& e) {
        throw config_error("--dense", "JSON syntax error at byte " + std::to_string(e.byte));
      }
      const auto spec = dense_spec_from_json(j, "dense");
      const auto dense = make_dense_set(spec);
      const auto* stems = dynamic_cast<const stem_dense_set*>(dense.get());
      if (stems == nullptr) throw config_error("--dense", "rank needs a stem-based dense set");
      node t;
      try {
        t = parse_sequence(node_text);
      } catch (const malformed_input& e) {
        throw config_error("--node", e.what());
      }
      const auto r = rank_bounded(*stems, t, max_rank, width);
      out << (r ? std::to_string(*r) : std::string("none")) << "\n";
      return ok;
    }
  } catch (const config_error& e) {
    err << "config error: " << e.what() << "\n";
    return config_failure;
  } catch (const fuel_exhausted& e) {
    err << "fuel exhausted: " << e.what() << "\n";
    return fuel_failure;
  } catch (const io_error& e) {
    err << "I/O error: " << e.what() << "\n";
    return io_failure;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << "\n";
    return config_failure;
  } catch (const std::exception& e) {
    // Overflowing labels, oracle contract violations: the input cannot be run as given.
    err << "error: " << e.what() << "\n";
    return config_failure;
  }
  return config_failure;
}

}  // namespace genco::cli
