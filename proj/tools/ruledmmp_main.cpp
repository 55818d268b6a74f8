// Command-line front end: instance generation, staged contraction runs with
// traces, verification batches, and DOT export of fiber dual graphs.
//
// Exit codes: 0 success (flags included), 1 failed check, 2 usage error,
// 3 invalid instance, 4 I/O error.

#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "ruledmmp/dot.hpp"
#include "ruledmmp/generator.hpp"
#include "ruledmmp/io.hpp"
#include "ruledmmp/verify.hpp"

namespace {

using namespace ruledmmp;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case errc::invalid_parameter:
    case errc::unknown_check:
      return 2;
    case errc::parse_error:
    case errc::validation_failed:
    case errc::plan_mismatch:
      return 3;
    case errc::io_error:
      return 4;
    default:
      return 1;
  }
}

SurfacePair load_valid_instance(const std::string& path) {
  SurfacePair sp = parse_instance(read_file(path));
  VerificationReport vr = validate(sp);
  if (!vr.overall()) {
    std::string what = path + " is not a valid instance:";
    for (const CheckResult& c : vr.checks)
      if (c.status == CheckStatus::Fail) what += "\n  [" + c.name + "] " + c.witness;
    fail(errc::validation_failed, what);
  }
  return sp;
}

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

// One status line per selected check, worst entry wins.
std::string format_check_lines(const VerificationReport& rep,
                               const std::vector<std::string>& selected) {
  std::map<std::string, CheckStatus> agg;
  std::vector<std::string> order = selected.empty() ? all_check_names() : selected;
  for (const CheckResult& c : rep.checks) {
    auto [it, fresh] = agg.emplace(c.name, c.status);
    if (fresh) continue;
    auto rank = [](CheckStatus s) {
      switch (s) {
        case CheckStatus::Fail: return 3;
        case CheckStatus::Flag: return 2;
        case CheckStatus::Pass: return 1;
        case CheckStatus::Vacuous: return 0;
      }
      return 0;
    };
    if (rank(c.status) > rank(it->second)) it->second = c.status;
  }
  std::string out;
  for (const std::string& name : order) {
    auto it = agg.find(name);
    if (it == agg.end()) continue;
    out += name + ": " + to_string(it->second) + "\n";
  }
  return out;
}

int cmd_generate(std::uint64_t seed, const GeneratorParams& params, const std::string& out_path) {
  SurfacePair sp = random_instance(seed, params);
  write_file(out_path, serialize_instance(sp));
  return 0;
}

int cmd_run(const std::string& in_path, const std::string& trace_out) {
  SurfacePair sp = load_valid_instance(in_path);
  GoodModelPlan plan = run(sp);
  std::printf("k1=%lld k2=%lld m=%lld gamma=%lld\n", static_cast<long long>(plan.k1),
              static_cast<long long>(plan.k2), static_cast<long long>(plan.m),
              static_cast<long long>(plan.gamma_value));
  if (!trace_out.empty()) write_file(trace_out, serialize_trace(sp, plan));
  return 0;
}

int cmd_verify(const std::vector<std::string>& paths, const std::string& checks_csv,
               unsigned jobs) {
  std::vector<std::string> selected = split_csv(checks_csv);
  for (const std::string& name : selected) {
    const auto& all = all_check_names();
    if (std::find(all.begin(), all.end(), name) == all.end())
      fail(errc::unknown_check, "no check named " + name);
  }

  struct Slot {
    std::string text;
    int code = 0;
    std::string error;
  };
  std::vector<Slot> slots(paths.size());
  auto work = [&](std::size_t i) {
    try {
      SurfacePair sp = load_valid_instance(paths[i]);
      GoodModelPlan plan = run(sp);
      VerificationReport rep = run_checks(sp, plan, selected);
      slots[i].text = format_check_lines(rep, selected);
      slots[i].code = rep.overall() ? 0 : 1;
    } catch (const Error& e) {
      slots[i].code = exit_code_for(e);
      slots[i].error = e.what();
    }
  };

  if (jobs <= 1 || paths.size() <= 1) {
    for (std::size_t i = 0; i < paths.size(); ++i) work(i);
  } else {
    std::vector<std::thread> pool;
    std::size_t stride = std::min<std::size_t>(jobs, paths.size());
    for (std::size_t t = 0; t < stride; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < paths.size(); i += stride) work(i);
      });
    for (std::thread& th : pool) th.join();
  }

  int code = 0;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (paths.size() > 1) std::printf("# %s\n", paths[i].c_str());
    std::fputs(slots[i].text.c_str(), stdout);
    if (!slots[i].error.empty()) std::fprintf(stderr, "%s\n", slots[i].error.c_str());
    code = std::max(code, slots[i].code);
  }
  return code;
}

int cmd_export_dot(const std::string& in_path, const std::string& out_path) {
  std::string text = read_file(in_path);
  std::string dot;
  if (looks_like_trace(text)) {
    TraceData trace = parse_trace(text);
    VerificationReport vr = validate(trace.instance);
    if (!vr.overall()) fail(errc::validation_failed, in_path + " embeds an invalid instance");
    dot = export_dot(trace.instance, trace.steps);
  } else {
    dot = export_dot(load_valid_instance(in_path));
  }
  if (out_path.empty())
    std::fputs(dot.c_str(), stdout);
  else
    write_file(out_path, dot);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact staged contraction of boundary-decorated ruled surfaces"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  GeneratorParams params;
  std::string out_path;
  std::string in_path;
  std::string checks_csv;
  std::vector<std::string> in_paths;
  unsigned jobs = 1;

  CLI::App* generate = app.add_subcommand("generate", "write a seeded random instance");
  generate->add_option("--seed", seed, "generator seed");
  generate->add_option("--g", params.genus, "base curve genus (0..3)");
  generate->add_option("--e", params.e_invariant, "ruled invariant e (0..4)");
  generate->add_option("--blowups", params.max_blowups, "number of blow-ups (0..12)");
  generate->add_option("--dv-density", params.dv_density,
                       "probability that a fiber component joins the vertical boundary");
  generate->add_option("--whole-dv", params.whole_fiber_dv_count,
                       "smooth fibers wholly in the vertical boundary (0..4)");
  generate->add_option("--out", out_path, "output path")->required();

  CLI::App* run_cmd = app.add_subcommand("run", "run the staged contraction");
  run_cmd->add_option("instance", in_path, "instance file")->required();
  run_cmd->add_option("--out", out_path, "trace output path");

  CLI::App* verify_cmd = app.add_subcommand("verify", "verify the numeric identities");
  verify_cmd->add_option("instances", in_paths, "instance files")->required();
  verify_cmd->add_option("--checks", checks_csv, "comma-separated check names (default: all)");
  verify_cmd->add_option("--jobs", jobs, "verify instances concurrently");

  CLI::App* export_cmd = app.add_subcommand("export-dot", "emit fiber dual graphs as DOT");
  export_cmd->add_option("input", in_path, "instance or trace file")->required();
  export_cmd->add_option("--out", out_path, "output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (generate->parsed()) return cmd_generate(seed, params, out_path);
    if (run_cmd->parsed()) return cmd_run(in_path, out_path);
    if (verify_cmd->parsed()) return cmd_verify(in_paths, checks_csv, jobs);
    if (export_cmd->parsed()) return cmd_export_dot(in_path, out_path);
  } catch (const ruledmmp::Error& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 1;
  }
  return 2;
}
