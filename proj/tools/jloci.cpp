// jloci: command line front end. Every command prints (or writes) one JSON
// report; see schemas/verification_report.schema.json.
#include "jloci/reports.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>

using namespace jloci;

namespace {

int emit(CommandResult result, double seconds, const std::string& output)
{
  finish_report(result.report, seconds);
  std::string text = result.report.dump(2) + "\n";
  if (output.empty())
    std::cout << text;
  else
    write_atomically(output, text);
  return result.exit_code;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Resonance, Alexander invariant and torus experiments for Torelli groups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(library_version));

  std::string output;
  std::uint64_t seed = 1;
  std::function<CommandResult()> run;

  auto* vr = app.add_subcommand("verify-resonance", "Decide the resonance variety of the Torelli Lie algebra");
  int genus = 0;
  std::size_t samples = 50;
  int max_genus = default_max_genus;
  vr->add_option("--genus", genus, "genus g >= 3")->required();
  vr->add_option("--seed", seed, "seed for the random points")->capture_default_str();
  vr->add_option("--samples", samples, "random points tested")->capture_default_str();
  vr->add_option("--max-genus", max_genus, "largest genus accepted")->capture_default_str();
  vr->add_option("--output", output, "write the report here instead of stdout");
  vr->callback([&] { run = [&] { return cmd_verify_resonance(genus, seed, samples, max_genus); }; });

  auto* al = app.add_subcommand("alexander", "Hilbert profile of the infinitesimal Alexander invariant");
  std::string input, preset;
  int torelli = 0;
  std::size_t qmax = 3;
  std::size_t max_nnz = default_max_nnz();
  auto* in_opt = al->add_option("--input", input, "group algebra JSON file")->check(CLI::ExistingFile);
  auto* tor_opt = al->add_option("--torelli", torelli, "use the Torelli data of this genus");
  auto* pre_opt = al->add_option("--preset", preset, "free2, free3, free4, surface2, surface3, heisenberg, "
                                                     "free-product, indecomposable-form");
  in_opt->excludes(tor_opt, pre_opt);
  tor_opt->excludes(pre_opt);
  al->add_option("--qmax", qmax, "largest degree q")->capture_default_str();
  al->add_option("--max-nnz", max_nnz, "per-degree size guard (also JLOCI_MAX_NNZ)")->capture_default_str();
  al->add_option("--output", output, "write the report here instead of stdout");
  al->callback([&] {
    run = [&] {
      if (!input.empty())
        return cmd_alexander(load_algebra_input(input), Json{{"input", input}}, qmax, max_nnz);
      if (!preset.empty())
        return cmd_alexander(preset_data(preset), Json{{"preset", preset}}, qmax, max_nnz);
      if (torelli != 0) {
        if (torelli < 3 || torelli > default_max_genus)
          throw UsageError("--torelli needs 3 <= g <= " + std::to_string(default_max_genus));
        return cmd_alexander(torelli_data(torelli), Json{{"torelli", torelli}}, qmax, max_nnz);
      }
      throw UsageError("one of --input, --torelli or --preset is required");
    };
  });

  auto* ob = app.add_subcommand("orbit", "Orbit of a random torsion character");
  std::int64_t torsion = 2;
  std::size_t cap = default_orbit_cap;
  ob->add_option("--genus", genus, "genus g >= 3")->required();
  ob->add_option("--torsion", torsion, "order of the starting point")->capture_default_str();
  ob->add_option("--seed", seed)->capture_default_str();
  ob->add_option("--cap", cap, "maximal orbit size")->capture_default_str();
  ob->add_option("--output", output, "write the report here instead of stdout");
  ob->callback([&] { run = [&] { return cmd_orbit(genus, torsion, seed, cap); }; });

  auto* iv = app.add_subcommand("invariance", "Check that a finite set of torsion characters is invariant");
  std::string set;
  iv->add_option("--genus", genus, "genus g >= 3")->required();
  iv->add_option("--set", set, "zero, full-M-torsion, full-2-torsion-sample, orbit-M or point-M")->required();
  iv->add_option("--seed", seed)->capture_default_str();
  iv->add_option("--output", output, "write the report here instead of stdout");
  iv->callback([&] { run = [&] { return cmd_invariance(genus, set, seed); }; });

  auto* cc = app.add_subcommand("crosscheck", "Compare determinantal and resonance loci on random data");
  std::size_t datasets = 20, points = 20, kmax = 3;
  cc->add_option("--random", datasets, "number of random data sets")->capture_default_str();
  cc->add_option("--points", points, "points per data set")->capture_default_str();
  cc->add_option("--kmax", kmax, "largest depth")->capture_default_str();
  cc->add_option("--seed", seed)->capture_default_str();
  cc->add_option("--output", output, "write the report here instead of stdout");
  cc->callback([&] { run = [&] { return cmd_crosscheck(datasets, seed, points, kmax); }; });

  auto* ln = app.add_subcommand("nonvanishing", "Vanishing of v0 ^ u0 and the value of T1 on e");
  ln->add_option("--genus", genus, "genus g >= 3")->required();
  ln->add_option("--output", output, "write the report here instead of stdout");
  ln->callback([&] { run = [&] { return cmd_nonvanishing(genus); }; });

  auto* ir = app.add_subcommand("irreducibility", "Irreducibility certificate for L (x) Q");
  std::size_t trials = 3;
  ir->add_option("--genus", genus, "genus g >= 3")->required();
  ir->add_option("--trials", trials)->capture_default_str();
  ir->add_option("--seed", seed)->capture_default_str();
  ir->add_option("--output", output, "write the report here instead of stdout");
  ir->callback([&] { run = [&] { return cmd_irreducibility(genus, trials, seed); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    auto start = std::chrono::steady_clock::now();
    CommandResult result = run();
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return emit(std::move(result), seconds, output);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return exit_usage;
  } catch (const InputError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return exit_parse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_mismatch;
  }
}
