// Command-line front end. Every report is one JSON object per line.
// Exit codes: 0 success or property true, 1 property false, precondition
// failure or counterexample, 2 input or usage error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <birack/birack.hpp>
#include <birack/census.hpp>
#include <birack/constructors.hpp>
#include <birack/error.hpp>
#include <birack/groups.hpp>
#include <birack/io.hpp>
#include <birack/perm_group.hpp>
#include <birack/retracts.hpp>
#include <birack/theorems.hpp>

#include "CLI11.hpp"
#include "json.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace birack;

constexpr int exit_ok = 0;
constexpr int exit_false = 1;
constexpr int exit_usage = 2;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput:
    case ErrorKind::SizeTooLarge:
    case ErrorKind::DegreeMismatch:
      return exit_usage;
    default:
      return exit_false;
  }
}

void emit(std::string const& line) { std::cout << line << '\n'; }

json error_json(Error const& e) {
  json j{{"error", to_string(e.kind())}, {"message", e.what()}};
  if (auto const* v = dynamic_cast<AxiomViolation const*>(&e)) {
    j["equation"] = v->equation();
    j["witness"] = v->witness();
  }
  return j;
}

json group_json(PermGroup const& g) {
  auto const cls = nilpotency_class(g);
  json orbit_blocks = orbits(g).blocks();
  return json{{"order", g.order()},
              {"abelian", g.is_abelian()},
              {"class", cls ? json(*cls) : json(nullptr)},
              {"center_order", center(g).order()},
              {"orbits", orbit_blocks}};
}

int cmd_check(std::string const& path) {
  Birack const b = read_birack(path);
  json j{{"valid", true}};
  j["report"] = json::parse(to_json(classify(b)));
  emit(j.dump());
  return exit_ok;
}

int cmd_props(std::string const& path) {
  emit(to_json(classify(read_birack(path))));
  return exit_ok;
}

int cmd_retract(std::string const& path, std::string const& kind,
                std::optional<std::size_t> steps) {
  RetractKind k = kind == "left" ? RetractKind::left
                  : kind == "right" ? RetractKind::right
                                    : RetractKind::full;
  emit(to_json(tower(read_birack(path), k, steps)));
  return exit_ok;
}

int cmd_mpl(std::string const& path) {
  auto const level = multipermutation_level(read_birack(path));
  if (!level) {
    emit("null");
    return exit_false;
  }
  emit(std::to_string(*level));
  return exit_ok;
}

int cmd_groups(std::string const& path) {
  Birack const b = read_birack(path);
  auto const l = lmlt(b);
  auto const r = rmlt(b);
  emit(json{{"lmlt", group_json(l)},
            {"rmlt", group_json(r)},
            {"mlt", group_json(mlt(b))},
            {"commute", groups_commute(l, r)}}
           .dump());
  return exit_ok;
}

int cmd_wada(std::string const& name) {
  emit(to_json(wada(parse_group(name))));
  return exit_ok;
}

int cmd_enumerate(std::size_t n, bool distributive, bool deduplicate,
                  std::optional<std::string> const& out) {
  auto const entries =
      distributive ? enumerate_distributive(n, deduplicate) : enumerate_biracks(n, deduplicate);
  if (out) {
    std::filesystem::create_directories(*out);
  }
  std::size_t index = 0;
  for (auto const& e : entries) {
    if (out) {
      auto const file = std::filesystem::path(*out) /
                        ("birack_n" + std::to_string(n) + "_" + std::to_string(index) + ".json");
      std::ofstream(file) << to_json(e.birack) << '\n';
    } else {
      emit(to_json(e));
    }
    ++index;
  }
  emit(json{{"n", n}, {"distributive", distributive}, {"deduplicated", deduplicate},
            {"count", entries.size()}}
           .dump());
  return exit_ok;
}

int cmd_verify(std::string const& name, std::size_t n, std::size_t k_max) {
  auto const suite = parse_suite(name);
  if (!suite) {
    std::cerr << "unknown suite '" << name << "'\n";
    return exit_usage;
  }
  VerifyOptions options;
  options.k_max = k_max;
  auto const result = run_suite(*suite, n, options);
  emit(to_json(result));
  return result.passed() ? exit_ok : exit_false;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite biracks: validation, retracts, multiplication groups, census"};
  app.require_subcommand(1);

  std::string file;
  auto* check = app.add_subcommand("check", "validate and classify a birack file");
  check->add_option("file", file)->required();
  auto* props = app.add_subcommand("props", "property report as JSON");
  props->add_option("file", file)->required();

  std::string kind = "full";
  std::optional<std::size_t> steps;
  auto* retract = app.add_subcommand("retract", "iterated retract tower");
  retract->add_option("file", file)->required();
  retract->add_option("--kind", kind)->check(CLI::IsMember({"left", "right", "full"}));
  retract->add_option("--steps", steps)->check(CLI::PositiveNumber);

  auto* mpl = app.add_subcommand("mpl", "multipermutation level");
  mpl->add_option("file", file)->required();
  auto* groups = app.add_subcommand("groups", "multiplication groups");
  groups->add_option("file", file)->required();

  std::string group;
  auto* wada_cmd = app.add_subcommand("wada", "Wada birack of a catalog group");
  wada_cmd->add_option("--group", group, "Z<n>, E<2^k>, D<2m>, Q8, products with x")
      ->required();

  std::size_t n = 0;
  bool distributive = false;
  bool deduplicate = false;
  std::optional<std::string> out;
  auto* enumerate = app.add_subcommand("enumerate", "all biracks on n points");
  enumerate->add_option("--n", n)->required();
  enumerate->add_flag("--distributive", distributive, "distributive biracks only (n <= 4)");
  enumerate->add_flag("--dedupe", deduplicate, "one representative per isomorphism class");
  enumerate->add_option("--out", out, "write one file per birack into this directory");

  std::string suite;
  std::size_t suite_n = max_distributive_census;
  std::size_t k_max = VerifyOptions{}.k_max;
  auto* verify = app.add_subcommand("verify", "run a verification suite over the census");
  verify->add_option("--suite", suite, "ld-nilp, main, rack, bridge or congruence")->required();
  verify->add_option("--n", suite_n);
  verify->add_option("--k-max", k_max)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*check) return cmd_check(file);
    if (*props) return cmd_props(file);
    if (*retract) return cmd_retract(file, kind, steps);
    if (*mpl) return cmd_mpl(file);
    if (*groups) return cmd_groups(file);
    if (*wada_cmd) return cmd_wada(group);
    if (*enumerate) return cmd_enumerate(n, distributive, deduplicate, out);
    if (*verify) return cmd_verify(suite, suite_n, k_max);
  } catch (Error const& e) {
    if (*check) {
      json j{{"valid", false}};
      j.update(error_json(e));
      emit(j.dump());
    } else {
      std::cerr << error_json(e).dump() << '\n';
    }
    return exit_code_for(e.kind());
  } catch (std::exception const& e) {
    std::cerr << json{{"error", "internal"}, {"message", e.what()}}.dump() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
