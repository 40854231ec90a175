// cubelink: build, inspect and verify the cube complexes derived from the
// parameterized bipartite graph family.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "cubelink/cube_complex.hpp"
#include "cubelink/gamma.hpp"
#include "cubelink/verifier.hpp"

namespace {

cubelink::OffsetScheme parse_scheme(const std::vector<int>& e1, const std::vector<int>& e2,
                                    const std::vector<int>& e3) {
  cubelink::OffsetScheme s;
  if (!e1.empty()) s.e1 = {e1[0], e1[1]};
  if (!e2.empty()) s.e2 = {e2[0], e2[1]};
  if (!e3.empty()) s.e3 = {e3[0], e3[1]};
  return s;
}

void add_scheme_options(CLI::App* cmd, std::vector<int>& e1, std::vector<int>& e2,
                        std::vector<int>& e3) {
  cmd->add_option("--e1", e1, "first same-sign offset pair, e.g. 0,1")
      ->delimiter(',')
      ->expected(2);
  cmd->add_option("--e2", e2, "plus-to-minus offset pair, e.g. 3,5")
      ->delimiter(',')
      ->expected(2);
  cmd->add_option("--e3", e3, "minus-to-plus offset pair, e.g. 0,2")
      ->delimiter(',')
      ->expected(2);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::invalid_argument("cannot open output file: " + path);
  os << text;
  if (!os) throw std::invalid_argument("write failed: " + path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cube complex construction and verification"};
  app.require_subcommand(1);

  int p = 11;
  std::vector<int> e1, e2, e3;
  std::string target = "delta";
  std::string out_path;
  int parallelism = 1;
  long sample_homology = 64;
  unsigned long long seed = 0;
  int p_min = 5, p_max = 19;
  bool all_schemes = false;

  CLI::App* gamma_cmd = app.add_subcommand("gamma", "print the graph as an edge list");
  gamma_cmd->add_option("--p", p, "half the size of one vertex class")->required();
  add_scheme_options(gamma_cmd, e1, e2, e3);

  CLI::App* verify_cmd = app.add_subcommand("verify", "run the verification suite");
  verify_cmd->add_option("--target", target, "gamma, x or delta")
      ->check(CLI::IsMember({"gamma", "x", "delta"}));
  verify_cmd->add_option("--p", p, "half the size of one vertex class")->required();
  add_scheme_options(verify_cmd, e1, e2, e3);
  verify_cmd->add_option("--parallel", parallelism, "worker threads");
  verify_cmd->add_option("--sample-homology", sample_homology,
                         "number of vertex links to cross-check homologically");
  verify_cmd->add_option("--seed", seed, "seed for the link sample");
  verify_cmd->add_option("--out", out_path, "report file path")->required();

  CLI::App* export_cmd = app.add_subcommand("export", "write a complex to a file");
  export_cmd->add_option("--target", target, "x or delta")
      ->check(CLI::IsMember({"x", "delta"}));
  export_cmd->add_option("--p", p, "half the size of one vertex class")->required();
  add_scheme_options(export_cmd, e1, e2, e3);
  export_cmd->add_option("--out", out_path, "output file path")->required();

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "tabulate graph checks over a range");
  sweep_cmd->add_option("--p-min", p_min, "smallest parameter")->required();
  sweep_cmd->add_option("--p-max", p_max, "largest parameter")->required();
  sweep_cmd->add_flag("--all-schemes", all_schemes, "try every offset scheme");
  sweep_cmd->add_option("--parallel", parallelism, "worker threads");

  try {
    app.parse(argc, argv);

    if (gamma_cmd->parsed()) {
      cubelink::Gamma g = cubelink::build_gamma(p, parse_scheme(e1, e2, e3));
      std::cout << cubelink::serialize_gamma(g);
      return 0;
    }

    if (verify_cmd->parsed()) {
      cubelink::VerificationConfig cfg;
      cfg.p = p;
      cfg.scheme = parse_scheme(e1, e2, e3);
      cfg.parallelism = parallelism;
      cfg.sample_homology = sample_homology;
      cfg.seed = seed;
      cfg.target = target == "gamma" ? cubelink::Target::Gamma
                   : target == "x"   ? cubelink::Target::X
                                     : cubelink::Target::Delta;
      cubelink::VerificationReport rep = cubelink::run_verification(cfg);
      write_file(out_path, rep.to_text());
      long failed = 0;
      for (const auto& c : rep.checks) {
        if (!c.pass) ++failed;
        std::cout << c.id << ": " << (c.pass ? "pass" : "fail") << '\n';
      }
      std::cout << (failed ? "FAIL" : "OK") << " (" << rep.checks.size() - failed << '/'
                << rep.checks.size() << " checks), report written to " << out_path << '\n';
      return failed ? 1 : 0;
    }

    if (export_cmd->parsed()) {
      cubelink::Gamma g = cubelink::build_gamma(p, parse_scheme(e1, e2, e3));
      cubelink::CubeComplex cc =
          target == "x" ? cubelink::build_x(g) : cubelink::build_delta(g);
      write_file(out_path, cubelink::export_complex_string(cc));
      long cells = 0;
      for (int d = 0; d <= cc.dim(); ++d) cells += static_cast<long>(cc.cells[d].size());
      std::cout << "wrote " << cells << " cells to " << out_path << '\n';
      return 0;
    }

    // sweep
    cubelink::SweepResult res = cubelink::sweep(
        p_min, p_max,
        all_schemes ? cubelink::SchemeMode::AllSchemes : cubelink::SchemeMode::DefaultOnly,
        parallelism);
    std::cout << res.to_text();
    return 0;
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
