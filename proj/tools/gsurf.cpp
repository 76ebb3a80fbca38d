#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gsurf/census.hpp"
#include "gsurf/checks.hpp"
#include "gsurf/enumerate.hpp"
#include "gsurf/errors.hpp"
#include "gsurf/oracles.hpp"
#include "gsurf/report.hpp"

namespace {

using gsurf::Error;
using gsurf::ErrorKind;

constexpr int kExitInput = 2;
constexpr int kExitMath = 3;

struct GroupChoice {
  std::string builtin;
  std::string table;
  std::string generators;
};

void add_group_options(CLI::App* cmd, GroupChoice& gc) {
  auto* builtin = cmd->add_option(
      "--builtin", gc.builtin,
      "builtin group spec: symmetric:N, alternating:N, dihedral:ORDER, "
      "quaternion8, extraspecial:P, product:<spec>,<spec>");
  auto* table = cmd->add_option("--table", gc.table,
                                "JSON multiplication-table file");
  auto* gens = cmd->add_option("--generators", gc.generators,
                               "permutation generators file (cycle notation)");
  builtin->excludes(table)->excludes(gens);
  table->excludes(gens);
}

gsurf::Group build_group(const GroupChoice& gc) {
  if (!gc.builtin.empty()) return gsurf::builtin_group(gc.builtin);
  if (!gc.table.empty()) return gsurf::from_cayley_table_file(gc.table);
  if (!gc.generators.empty()) return gsurf::from_generator_file(gc.generators);
  gsurf::fail(ErrorKind::InvalidParameter,
              "one of --builtin/--table/--generators is required");
}

struct CensusFlags {
  gsurf::CensusOptions opts;
  std::string json_path;
  bool as_json = false;
};

void add_census_options(CLI::App* cmd, CensusFlags& cf) {
  cmd->add_option("--threads", cf.opts.threads,
                  "worker threads (0: GSURF_THREADS env, then hardware)");
  cmd->add_option("--automorphism-cap", cf.opts.automorphism_search_cap,
                  "max group order for polytope-flag automorphism searches");
  cmd->add_flag("--no-flags", [&cf](int64_t) { cf.opts.with_flags = false; },
                "skip the polytope-flag automorphism searches");
  cmd->add_flag("--allow-large", cf.opts.allow_large,
                "proceed past the face-count guard");
  cmd->add_option("--large-face-guard", cf.opts.large_face_guard,
                  "face-count guard (triangles)");
}

int cmd_census(const GroupChoice& gc, const CensusFlags& cf,
               const std::string& expect) {
  gsurf::Group g = build_group(gc);
  gsurf::Census census = gsurf::build_census(g, cf.opts);
  if (cf.as_json || !cf.json_path.empty()) {
    const std::string text = gsurf::census_json(census);
    if (cf.json_path.empty() || cf.json_path == "-") {
      std::cout << text;
    } else {
      std::ofstream out(cf.json_path, std::ios::binary);
      if (!out) gsurf::fail(ErrorKind::Io, "cannot open " + cf.json_path);
      out << text;
    }
  } else {
    std::cout << gsurf::census_text(census);
  }
  if (!expect.empty()) {
    gsurf::ExpectedCensus want;
    const auto colon = expect.find(':');
    const std::string kind = expect.substr(0, colon);
    const int param = colon == std::string::npos
                          ? 0
                          : std::stoi(expect.substr(colon + 1));
    if (kind == "dihedral")
      want = gsurf::dihedral_expected(param);
    else if (kind == "extraspecial")
      want = gsurf::extraspecial_expected(param);
    else
      gsurf::fail(ErrorKind::InvalidParameter,
                  "--expect takes dihedral:N or extraspecial:P");
    gsurf::OracleComparison cmp = gsurf::census_matches_expected(census, want);
    if (!cmp.pass) {
      std::cerr << "expectation failed: " << cmp.detail << "\n";
      return kExitMath;
    }
    std::cout << "expectation " << want.family << " matched\n";
  }
  return census.identities_pass ? 0 : kExitMath;
}

int cmd_check(const GroupChoice& gc, const CensusFlags& cf,
              bool continue_on_error) {
  gsurf::Group g = build_group(gc);
  std::vector<gsurf::CheckResult> results = gsurf::run_check_suite(g, cf.opts);
  bool ok = true;
  for (const gsurf::CheckResult& r : results) {
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.name;
    if (!r.detail.empty()) std::cout << ": " << r.detail;
    std::cout << "\n";
    if (!r.pass) {
      ok = false;
      if (!continue_on_error) break;
    }
  }
  std::cout << (ok ? "all checks passed" : "checks FAILED") << "\n";
  return ok ? 0 : kExitMath;
}

int cmd_enumerate(long long genus, bool as_json) {
  auto data = gsurf::enumerate_tesselations(genus);
  if (as_json) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& d : data) {
      nlohmann::ordered_json r;
      r["faces"] = d.parametric || d.counts_unbounded
                       ? nlohmann::ordered_json(nullptr)
                       : nlohmann::ordered_json(d.F);
      r["schlafli"] = d.symbol();
      r["vertices"] = d.parametric || d.counts_unbounded
                          ? nlohmann::ordered_json(nullptr)
                          : nlohmann::ordered_json(d.V);
      r["edges"] = d.parametric || d.counts_unbounded
                       ? nlohmann::ordered_json(nullptr)
                       : nlohmann::ordered_json(d.E);
      r["solid_type"] = d.label;
      if (d.counts_unbounded) r["counts_unbounded"] = true;
      rows.push_back(r);
    }
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["genus"] = genus;
    j["rows"] = rows;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "genus " << genus << ": " << data.size() << " rows\n";
    std::cout << "faces  schlafli      vertices  edges  solid type\n";
    for (const auto& d : data) {
      auto cell = [&](long long v) {
        return d.parametric || d.counts_unbounded ? std::string("-")
                                                  : std::to_string(v);
      };
      std::printf("%-6s %-13s %-9s %-6s %s%s\n", cell(d.F).c_str(),
                  d.symbol().c_str(), cell(d.V).c_str(), cell(d.E).c_str(),
                  d.label.c_str(), d.counts_unbounded ? " (unbounded)" : "");
    }
  }
  return 0;
}

int cmd_export(const GroupChoice& gc, const CensusFlags& cf,
               const std::string& off_dir) {
  gsurf::Group g = build_group(gc);
  gsurf::Pipeline p = gsurf::run_pipeline(g, cf.opts);
  if (!off_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(off_dir, ec);
    if (ec)
      gsurf::fail(ErrorKind::Io, "cannot create " + off_dir + ": " + ec.message());
  }
  const int written = gsurf::export_census(
      p, cf.json_path.empty() ? "-" : cf.json_path, off_dir);
  std::cerr << "wrote " << written << " files\n";
  return p.census.identities_pass ? 0 : kExitMath;
}

int cmd_group_info(const GroupChoice& gc) {
  gsurf::Group g = build_group(gc);
  gsurf::ComplexStats st = gsurf::build_stats(g);
  gsurf::CommutingProbability cp = gsurf::commuting_probability(g);
  std::cout << "group " << g.name << "\n";
  std::cout << "order " << g.n << ", classes " << g.class_count()
            << ", center " << g.center_size() << "\n";
  std::cout << "commuting probability " << cp.by_classes.str() << "\n";
  std::cout << "complex: " << st.vertices << " vertices, " << st.e1_edges
            << " type1-type1 edges, " << st.faces << " triangles, euler "
            << st.euler << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"census of tesselated surfaces built from a finite group"};
  app.require_subcommand(1);

  GroupChoice gc;
  CensusFlags cf;
  std::string expect;
  bool continue_on_error = false;
  long long genus = 0;
  bool as_json = false;
  std::string off_dir;

  CLI::App* census = app.add_subcommand("census", "full component census");
  add_group_options(census, gc);
  add_census_options(census, cf);
  census->add_flag("--json", cf.as_json, "emit JSON to stdout");
  census->add_option("--json-file", cf.json_path, "write JSON to a file");
  census->add_option("--expect", expect,
                     "compare against a closed-form family census "
                     "(dihedral:N or extraspecial:P)");

  CLI::App* check = app.add_subcommand("check", "named invariant suite");
  add_group_options(check, gc);
  add_census_options(check, cf);
  check->add_flag("--continue-on-error", continue_on_error,
                  "report every failing check instead of stopping");

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "admissible tesselation data per genus");
  enumerate->add_option("--genus", genus, "surface genus")->required();
  enumerate->add_flag("--json", as_json, "emit JSON");

  CLI::App* exp = app.add_subcommand("export", "census JSON and OFF meshes");
  add_group_options(exp, gc);
  add_census_options(exp, cf);
  exp->add_option("--json-file", cf.json_path,
                  "census JSON path (default stdout)");
  exp->add_option("--off-dir", off_dir, "directory for per-component meshes");

  CLI::App* info = app.add_subcommand("group-info", "group and complex stats");
  add_group_options(info, gc);

  CLI11_PARSE(app, argc, argv);

  try {
    if (census->parsed()) return cmd_census(gc, cf, expect);
    if (check->parsed()) return cmd_check(gc, cf, continue_on_error);
    if (enumerate->parsed()) return cmd_enumerate(genus, as_json);
    if (exp->parsed()) return cmd_export(gc, cf, off_dir);
    if (info->parsed()) return cmd_group_info(gc);
  } catch (const Error& e) {
    nlohmann::ordered_json err;
    err["error"] = gsurf::error_kind_name(e.kind());
    err["message"] = e.what();
    std::cerr << err.dump() << "\n";
    return gsurf::is_input_error(e.kind()) ? kExitInput : kExitMath;
  } catch (const std::exception& e) {
    nlohmann::ordered_json err;
    err["error"] = "Unexpected";
    err["message"] = e.what();
    std::cerr << err.dump() << "\n";
    return kExitMath;
  }
  return 0;
}
