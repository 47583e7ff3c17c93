#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "relhilb/commands.hpp"
#include "relhilb/corpus.hpp"
#include "relhilb/errors.hpp"
#include "relhilb/local_ideal.hpp"
#include "relhilb/problem.hpp"

#ifndef RELHILB_CORPUS_DIR
#define RELHILB_CORPUS_DIR "corpus"
#endif

using namespace relhilb;

namespace {

bool has_violation(const nlohmann::ordered_json& j) {
  auto it = j.find("verdict");
  return it != j.end() && *it == "VIOLATION";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relative Hilbert coefficients of m-primary ideals in local rings"};
  app.require_subcommand(0, 1);

  Options opt;
  std::string format = "text";
  std::string problem_path;
  std::string range;
  unsigned length_cap = local_settings().length_cap;
  std::vector<std::string> words;

  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("-p,--problem", problem_path, "problem file");
  app.add_option("--nmax", opt.n_max, "initial Hilbert table length");
  app.add_option("--window", opt.window, "required zero tail of the h-polynomial");
  app.add_option("--seed", opt.seed, "seed for random superficial elements");
  app.add_option("--chain-cap", opt.chain_cap, "Ratliff-Rush chain cap");
  app.add_option("--length-cap", length_cap, "truncation cap for local lengths");
  app.add_option("--range", range, "explore range a..b");
  app.add_option("command", words, "length|hilbert|coeffs|relcoeffs|wseries|reduction|rr|rrseries|cmtest|hmsums|link|explore|verify|run");

  auto* corpus = app.add_subcommand("corpus", "regression corpus");
  auto* corpus_run = corpus->add_subcommand("run", "run every entry and diff against its manifest");
  corpus->require_subcommand(1);
  std::string filter;
  std::string dir = RELHILB_CORPUS_DIR;
  corpus_run->add_option("--filter", filter, "label or category substring");
  corpus_run->add_option("--dir", dir, "corpus directory");

  CLI11_PARSE(app, argc, argv);
  local_settings().length_cap = length_cap;
  const bool json = format == "json";

  try {
    if (*corpus_run) {
      CorpusReport rep = run_corpus(dir, filter, opt);
      if (json)
        std::cout << rep.to_json().dump(2) << "\n";
      else
        std::cout << rep.to_text();
      return rep.exit_code();
    }
    if (words.empty()) {
      std::cerr << app.help();
      return 2;
    }
    if (problem_path.empty()) throw UsageError("a problem file is required (-p)");
    Problem pb = load_problem(problem_path);

    std::vector<std::vector<std::string>> runs;
    if (words[0] == "run") {
      for (const std::string& t : pb.tasks) runs.push_back(split_args(t));
    } else {
      if (!range.empty()) {
        words.push_back("--range");
        words.push_back(range);
      }
      runs.push_back(words);
    }
    bool violation = false;
    nlohmann::ordered_json all = nlohmann::ordered_json::array();
    for (const auto& args : runs) {
      CommandResult r = run_command(pb, args, opt);
      violation = violation || has_violation(r.json);
      if (json)
        all.push_back(r.json);
      else
        std::cout << r.text << (r.text.empty() || r.text.back() == '\n' ? "" : "\n");
    }
    if (json) std::cout << (all.size() == 1 && words[0] != "run" ? all[0] : all).dump(2) << "\n";
    return violation ? 1 : 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.kind() << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
