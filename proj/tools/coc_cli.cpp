// coc: kernelize, solve and verify l-COC instances.
//
// Exit codes: 0 success / yes, 1 no (solve) or failed check (verify),
// 2 bad input, bad parameters or a refused (oversized) instance.

#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "coc/generators.hpp"
#include "coc/io.hpp"
#include "coc/kernel.hpp"
#include "coc/lp.hpp"
#include "coc/solvers.hpp"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

struct Params {
  std::string path;
  std::optional<int> ell;
  std::optional<int> k;
};

// Flags win over the file's "l" / "k" lines.
coc::COCInstance load(const Params& p, bool need_k) {
  coc::InstanceFile file = coc::read_instance_file(p.path);
  coc::COCInstance inst;
  inst.graph = std::move(file.graph);
  std::optional<int> ell = p.ell ? p.ell : file.ell;
  std::optional<int> k = p.k ? p.k : file.k;
  if (!ell) throw coc::InputError("ell not given (use --ell or an 'l' line)");
  if (*ell < 1) throw coc::InputError("ell must be positive");
  if (need_k && !k) throw coc::InputError("k not given (use --k or a 'k' line)");
  if (k && *k < 0) throw coc::InputError("k must be non-negative");
  inst.ell = *ell;
  inst.k = k.value_or(0);
  return inst;
}

void write_to(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw coc::InputError("cannot write " + path);
  out << text;
}

std::string one_based(const coc::VertexSet& s) {
  std::string out;
  for (coc::Vertex v : s) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v + 1);
  }
  return out;
}

int cmd_kernelize(const Params& p, const std::string& output,
                  const std::string& json_path) {
  const coc::COCInstance inst = load(p, true);
  const coc::KernelResult result = coc::kernelize(inst);
  write_to(output.empty() ? "-" : output, coc::format_instance(result.instance));
  if (!json_path.empty()) {
    write_to(json_path, coc::kernel_report(inst, result).dump(2) + "\n");
  }
  std::cerr << "kernel: " << result.instance.graph.num_vertices()
            << " vertices, k=" << result.instance.k << " ("
            << (result.verdict == coc::Verdict::kReduced ? "reduced" : "trivial-no")
            << ", " << result.trace.size() << " reductions)\n";
  return kExitYes;
}

int cmd_solve(const Params& p, const std::string& engine, std::size_t cap) {
  const coc::COCInstance inst = load(p, true);
  coc::SolveOutcome out;
  if (engine == "brute") {
    out = coc::brute_force_solve(inst, cap);
  } else {
    out = coc::branching_solve(inst);
  }
  if (!out.yes) {
    std::cout << "no\n";
    return kExitNo;
  }
  std::cout << "yes\n" << "witness: " << one_based(*out.witness) << '\n';
  return kExitYes;
}

int verify_one(const coc::COCInstance& inst, std::size_t cap) {
  const coc::KernelResult result = coc::kernelize(inst);
  const bool original = coc::brute_force_solve(inst, cap).yes;
  const bool kernel = coc::brute_force_solve(result.instance, cap).yes;
  const bool size_ok = coc::verify_kernel(inst, result, cap);
  std::cout << "original: " << (original ? "yes" : "no") << '\n'
            << "kernel: " << (kernel ? "yes" : "no") << " ("
            << result.instance.graph.num_vertices() << " vertices, k="
            << result.instance.k << ")\n"
            << "equivalent: " << (original == kernel ? "pass" : "FAIL") << '\n'
            << "checks: " << (size_ok ? "pass" : "FAIL") << '\n';
  return size_ok ? kExitYes : kExitNo;
}

int verify_batch(std::size_t count, std::uint64_t seed, std::size_t cap) {
  const std::size_t max_n = std::min<std::size_t>(cap, 14);
  std::vector<coc::COCInstance> instances;
  coc::Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    instances.push_back(coc::random_instance(max_n, 3, 1, 4, rng));
  }
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> passed{0};
  std::mutex log;
  auto work = [&] {
    for (std::size_t i; (i = next++) < instances.size();) {
      bool ok = false;
      try {
        ok = coc::verify_kernel(instances[i], coc::kernelize(instances[i]), cap);
      } catch (const std::exception& e) {
        std::lock_guard lock(log);
        std::cerr << "instance " << i << ": " << e.what() << '\n';
      }
      if (ok) {
        ++passed;
      } else {
        std::lock_guard lock(log);
        std::cerr << "instance " << i << " failed\n"
                  << coc::format_instance(instances[i]);
      }
    }
  };
  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  const std::size_t failed = count - passed;
  std::cout << "verified " << count << " instances (seed " << seed
            << "): " << passed << " passed, " << failed << " failed\n";
  return failed == 0 ? kExitYes : kExitNo;
}

int cmd_dump_lp(const Params& p) {
  const coc::COCInstance inst = load(p, false);
  const coc::LPInstance lp = coc::build_coc_lp(inst.graph, inst.ell);
  std::cout << "c " << lp.variables.size() << " variables, "
            << lp.constraints.size() << " constraints\n"
            << coc::format_lp(lp, 1);
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"l-Component Order Connectivity kernelization"};
  app.require_subcommand(1);

  Params params;
  std::string output;
  std::string json_path;
  std::string engine = "branch";
  std::size_t cap = coc::kDefaultBruteForceCap;
  std::optional<std::size_t> count;
  std::uint64_t seed = 1;

  auto add_common = [&](CLI::App* sub, bool file_required) {
    auto* opt = sub->add_option("file", params.path, "instance file");
    if (file_required) opt->required();
    sub->add_option("--ell", params.ell, "component size bound (overrides 'l')");
    sub->add_option("--k", params.k, "deletion budget (overrides 'k')");
  };

  auto* kernelize = app.add_subcommand("kernelize", "reduce to at most 2*ell*k vertices");
  add_common(kernelize, true);
  kernelize->add_option("--output", output, "kernel instance file (default stdout)");
  kernelize->add_option("--json", json_path, "JSON report file ('-' for stdout)");

  auto* solve = app.add_subcommand("solve", "decide the instance exactly");
  add_common(solve, true);
  solve->add_option("--engine", engine, "brute or branch")
      ->check(CLI::IsMember({"brute", "branch"}));
  solve->add_option("--cap", cap, "largest vertex count for brute force");

  auto* verify = app.add_subcommand("verify", "check a kernel against brute force");
  add_common(verify, false);
  verify->add_option("--cap", cap, "largest vertex count for brute force");
  verify->add_option("--count", count, "verify this many random instances");
  verify->add_option("--seed", seed, "seed for --count");

  auto* dump_lp = app.add_subcommand("dump-lp", "print the LP constraints, 1-based");
  add_common(dump_lp, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*kernelize) return cmd_kernelize(params, output, json_path);
    if (*solve) return cmd_solve(params, engine, cap);
    if (*verify) {
      if (count) return verify_batch(*count, seed, cap);
      if (params.path.empty()) throw coc::InputError("verify needs a file or --count");
      return verify_one(load(params, true), cap);
    }
    if (*dump_lp) return cmd_dump_lp(params);
  } catch (const coc::SolverCapExceeded& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kExitError;
  } catch (const coc::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
