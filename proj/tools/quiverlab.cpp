// Command-line front end. Exit codes:
//   0 success, 1 internal error, 2 usage error, 3 invalid input,
//   4 truncated or inconclusive result, 5 a checked property failed.
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quiverlab/error.hpp"
#include "quiverlab/orthogonality.hpp"
#include "quiverlab/presets.hpp"
#include "quiverlab/report.hpp"
#include "quiverlab/serialize.hpp"
#include "quiverlab/service.hpp"

namespace {

using namespace qlab;
using nlohmann::json;

enum Exit : int { kOk = 0, kInternal = 1, kUsage = 2, kInput = 3, kIncomplete = 4, kViolation = 5 };

struct Common {
  std::string source;
  std::string format = "text";
  bool structured() const { return format == "structured"; }
};

void add_common(CLI::App* cmd, Common& c, bool file_required = true) {
  auto* opt = cmd->add_option("FILE", c.source, "problem file, or preset:NAME");
  if (file_required) opt->required();
  cmd->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
}

void emit(const Common& c, const json& structured, const std::string& text) {
  if (c.structured()) {
    std::cout << structured.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

void print_warnings(const ProblemFile& p) {
  for (const auto& w : p.warnings) std::cerr << "warning: " << w << "\n";
}

ModuleCatalog catalog_for(const BoundQuiver& bq, int max_entry, int field_size, std::int64_t budget) {
  CatalogOptions options;
  options.max_entry = max_entry;
  options.field_size = field_size;
  options.budget = budget;
  return build_catalog(bq, options);
}

int run_mutate(const Common& c, const std::vector<int>& vertices, bool green_only) {
  const auto problem = load_problem_source(c.source);
  print_warnings(problem);
  auto state = SearchState::initial(problem.quiver.count_quiver());
  for (int v : vertices) state = green_only ? step(state, v) : explore_step(state, v);
  json out = {{"schema", "quiverlab.state"},
              {"schema_version", json_io::kSchemaVersion},
              {"state", json_io::search_state(state)}};
  emit(c, out, report::state_text(state));
  return kOk;
}

int run_mgs(const Common& c, bool spectrum, const SearchBounds& bounds, std::size_t limit) {
  const auto problem = load_problem_source(c.source);
  print_warnings(problem);
  MgsOptions options;
  options.bounds = bounds;
  options.max_results = limit;
  const auto result = enumerate_mgs(problem.quiver.count_quiver(), options);
  if (spectrum) {
    const auto s = spectrum_of(result);
    emit(c, json_io::spectrum(s), report::spectrum_text(s));
  } else {
    emit(c, json_io::mgs_result(result), report::mgs_text(result));
  }
  return result.truncated ? kIncomplete : kOk;
}

int run_modules(const Common& c, int max_entry, int field_size, std::int64_t budget) {
  const auto problem = load_problem_source(c.source);
  print_warnings(problem);
  const auto catalog = catalog_for(problem.algebra(), max_entry, field_size, budget);
  emit(c, json_io::catalog(catalog), report::catalog_text(catalog));
  return catalog.truncated ? kIncomplete : kOk;
}

int run_mfho(const Common& c, int max_entry, int field_size, std::int64_t budget) {
  const auto problem = load_problem_source(c.source);
  print_warnings(problem);
  const auto catalog = catalog_for(problem.algebra(), max_entry, field_size, budget);
  const auto hm = hom_matrix(catalog);
  const auto result = enumerate_mfho(catalog, hm, budget);
  emit(c, json_io::mfho_result(result), report::mfho_text(result));
  return result.truncated || catalog.truncated ? kIncomplete : kOk;
}

int run_verify(const Common& c, const std::optional<std::string>& b_name, int max_entry, int field_size,
               const SearchBounds& bounds, std::int64_t budget) {
  const auto problem = load_problem_source(c.source);
  print_warnings(problem);
  const auto bq = problem.algebra();
  const auto catalog = catalog_for(bq, max_entry, field_size, budget);
  const auto hm = hom_matrix(catalog);

  MgsOptions options;
  options.bounds = bounds;
  const auto mgs = enumerate_mgs(bq.quiver().count_quiver(), options);
  const auto mfho = enumerate_mfho(catalog, hm, budget);
  auto corr = compare_sequence_sets(mgs, mfho);
  corr.inconclusive = corr.inconclusive || catalog.truncated;

  std::vector<BSpec> specs;
  if (b_name) {
    const auto* spec = problem.find_b_spec(*b_name);
    if (!spec) throw Error(ErrorCode::InvalidBSpec, "no b_spec named '" + *b_name + "'");
    specs.push_back(*spec);
  } else {
    specs = problem.b_specs;
  }

  bool violation = !corr.inconclusive && !corr.equal;
  bool incomplete = corr.inconclusive;
  json theorem = json::array();
  std::string text;
  for (const auto& spec : specs) {
    const auto r = verify_theorem(catalog, hm, spec, mgs.sequences);
    theorem.push_back(json_io::verification_report(r));
    text += report::verification_text(r);
    if (!r.holds) {
      if (mgs.truncated || catalog.truncated) {
        incomplete = true;
      } else {
        violation = true;
      }
    }
  }
  text += report::correspondence_text(corr);
  json out = {{"schema", "quiverlab.verify"},
              {"schema_version", json_io::kSchemaVersion},
              {"catalog_size", catalog.size()},
              {"catalog_complete_thin", catalog.complete_thin},
              {"mgs_truncated", mgs.truncated},
              {"theorem", std::move(theorem)},
              {"correspondence", json_io::correspondence_report(corr)}};
  if (!problem.b_specs.empty()) {
    const auto conj = conjecture_report(catalog, problem.b_specs, mgs);
    out["conjecture"] = json_io::conjecture_report(conj);
    text += report::conjecture_text(conj);
  }
  emit(c, out, text);
  if (violation) return kViolation;
  return incomplete ? kIncomplete : kOk;
}

int run_serve(const Common& c, const std::string& host, int port, int idle_minutes, const std::string& static_dir,
              bool debug_replay) {
  ServiceConfig config;
  config.idle_timeout = std::chrono::minutes(idle_minutes);
  config.static_dir = static_dir;
  config.debug_replay = debug_replay;
  if (!c.source.empty()) {
    config.default_problem = load_problem_source(c.source);
    print_warnings(*config.default_problem);
  }
  SessionService service(std::move(config));
  std::cerr << "serving on http://" << host << ':' << port << "\n";
  if (!serve_http(service, host, port)) {
    std::cerr << "error: cannot listen on " << host << ':' << port << "\n";
    return kInput;
  }
  return kOk;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::SignCoherenceViolation:
      return kViolation;
    case ErrorCode::CatalogTooLarge:
      return kIncomplete;
    default:
      return kInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quiver mutation, maximal green sequences and hom-orthogonal module sequences"};
  app.require_subcommand(1);

  Common common;
  std::vector<int> vertices;
  bool green_only = false;
  auto* mutate_cmd = app.add_subcommand("mutate", "mutate the framed quiver and print the resulting state");
  add_common(mutate_cmd, common);
  mutate_cmd->add_option("VERTICES", vertices, "vertices to mutate at, in order");
  mutate_cmd->add_flag("--green-only", green_only, "reject mutations at red vertices");

  bool spectrum = false;
  bool all = false;
  SearchBounds bounds;
  std::size_t limit = 0;
  auto* mgs_cmd = app.add_subcommand("mgs", "enumerate maximal green sequences");
  add_common(mgs_cmd, common);
  auto* spectrum_flag = mgs_cmd->add_flag("--spectrum", spectrum, "print count, shortest and longest length");
  mgs_cmd->add_flag("--all", all, "print every sequence with its c-vectors (default)")->excludes(spectrum_flag);
  mgs_cmd->add_option("--max-len", bounds.max_len, "depth cap (default 4n)");
  mgs_cmd->add_option("--max-states", bounds.max_states, "state budget")->capture_default_str();
  mgs_cmd->add_option("--limit", limit, "stop after this many sequences");

  int max_entry = 2;
  int field_size = 3;
  std::int64_t budget = CatalogOptions{}.budget;
  bool thin = false;
  auto add_catalog_options = [&](CLI::App* cmd) {
    auto* thin_flag = cmd->add_flag("--thin", thin, "thin modules only");
    cmd->add_option("--max-entry", max_entry, "largest dimension-vector entry (default 2)")
        ->check(CLI::Range(1, 4))
        ->excludes(thin_flag);
    cmd->add_option("--field-size", field_size, "coefficients are sampled from 0..P-1")
        ->check(CLI::Range(2, 7))
        ->capture_default_str();
    cmd->add_option("--budget", budget, "search node budget")->capture_default_str();
  };
  auto* modules_cmd = app.add_subcommand("modules", "list Schurian modules with dimension vectors");
  add_common(modules_cmd, common);
  add_catalog_options(modules_cmd);

  auto* mfho_cmd = app.add_subcommand("mfho", "enumerate maximal forward hom-orthogonal sequences");
  add_common(mfho_cmd, common);
  add_catalog_options(mfho_cmd);

  std::optional<std::string> b_name;
  auto* verify_cmd = app.add_subcommand("verify", "check B-module orderings against maximal green sequences");
  add_common(verify_cmd, common);
  add_catalog_options(verify_cmd);
  verify_cmd->add_option("--b", b_name, "only this b_spec");
  verify_cmd->add_option("--max-len", bounds.max_len, "depth cap for the green search (default 4n)");
  verify_cmd->add_option("--max-states", bounds.max_states, "state budget for the green search");

  std::string host = "127.0.0.1";
  int port = 8080;
  int idle_minutes = 30;
  std::string static_dir;
  bool debug_replay = false;
  auto* serve_cmd = app.add_subcommand("serve", "start the session HTTP API");
  add_common(serve_cmd, common, false);
  serve_cmd->add_option("--host", host)->capture_default_str();
  serve_cmd->add_option("--port", port)->envname("QUIVERLAB_PORT")->capture_default_str();
  serve_cmd->add_option("--idle-timeout", idle_minutes, "minutes before an idle session is dropped")
      ->envname("QUIVERLAB_IDLE_TIMEOUT")
      ->capture_default_str();
  serve_cmd->add_option("--static-dir", static_dir, "directory served under /");
  serve_cmd->add_flag("--debug-replay", debug_replay, "re-check every state against its history");

  auto* presets_cmd = app.add_subcommand("presets", "list built-in problems");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (thin) max_entry = 1;

  try {
    if (*mutate_cmd) return run_mutate(common, vertices, green_only);
    if (*mgs_cmd) return run_mgs(common, spectrum, bounds, limit);
    if (*modules_cmd) return run_modules(common, max_entry, field_size, budget);
    if (*mfho_cmd) return run_mfho(common, max_entry, field_size, budget);
    if (*verify_cmd) return run_verify(common, b_name, max_entry, field_size, bounds, budget);
    if (*serve_cmd) return run_serve(common, host, port, idle_minutes, static_dir, debug_replay);
    if (*presets_cmd) {
      for (const auto& name : list_presets()) std::cout << name << "\n";
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
