#include "pcaf/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pcaf/apx.hpp"
#include "pcaf/enumerate.hpp"
#include "pcaf/hardness.hpp"
#include "pcaf/images.hpp"
#include "pcaf/imax.hpp"
#include "pcaf/realize.hpp"

namespace pcaf {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw InputError("cannot open input file: " + path);
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

SemanticsId need_semantics(const std::string& name) {
  if (name.empty()) throw InputError("this task needs --semantics");
  auto s = semantics_from_string(lower(name));
  if (!s) throw InputError("unknown semantics: " + name);
  return *s;
}

struct ClassProbe {
  ReductionId reduction;
  bool transitive;
};

ClassProbe probe_of(ImageClassId cls) {
  switch (cls) {
    case ImageClassId::IM1: return {ReductionId::R1, false};
    case ImageClassId::IM2: return {ReductionId::R2, false};
    case ImageClassId::IM3: return {ReductionId::R3, false};
    case ImageClassId::IM4: return {ReductionId::R4, false};
    case ImageClassId::IM1_TR: return {ReductionId::R1, true};
  }
  return {ReductionId::R1, false};
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"solver for preference-based claim-augmented argumentation frameworks"};

  std::string task, semantics_name, claims_text, claim_name;
  std::string input_path = "-";
  int reduction_num = 1;
  int jobs = 1;
  int max_args = 0, max_claims = 0;  // 0 keeps the per-task default
  std::uint64_t seed = 0, trials = 1000, budget = 0;
  bool require_transitive = false, strict_exit = false, r3_prf_pruning = false;
  bool implicit_claims = false;

  app.add_option("--task", task,
                 "enum | ver | cred | skep | classify | reduce | imax | gen")
      ->required();
  app.add_option("--semantics", semantics_name, "cf adm com naive stb prf sem stg");
  app.add_option("--reduction", reduction_num, "preference reduction 1..4")
      ->check(CLI::Range(1, 4));
  app.add_option("--claims", claims_text, "claim set for ver, e.g. alpha,beta");
  app.add_option("--claim", claim_name, "single claim for cred and skep");
  app.add_option("--input", input_path, "input file, - for stdin");
  app.add_option("--jobs", jobs, "worker threads for the claim-subset loop")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-args", max_args, "argument-count guard (0 = task default)");
  app.add_option("--max-claims", max_claims, "claim-count guard (0 = task default)");
  app.add_option("--seed", seed, "seed for the imax falsification harness");
  app.add_option("--trials", trials, "trials for the imax falsification harness");
  app.add_option("--budget", budget,
                 "work-unit budget for the preimage-search cross-check in classify "
                 "(0 = structural test only)");
  app.add_flag("--require-transitive", require_transitive,
               "demand transitive preferences (inputs and sampled instances)");
  app.add_flag("--strict-exit", strict_exit, "exit 1 on a NO answer");
  app.add_flag("--r3-prf-pruning", r3_prf_pruning,
               "antichain pruning for enum under reduction 3, preferred semantics");
  app.add_flag("--implicit-claims", implicit_claims,
               "arguments without claim facts use their own name as claim");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const auto started = std::chrono::steady_clock::now();
  std::uint64_t candidates = 0;
  int exit_code = 0;

  try {
    const std::string task_name = lower(task);
    const ReductionId reduction = *reduction_from_string(std::to_string(reduction_num));

    auto load_pcaf = [&]() {
      PrefFramework pf = parse_pcaf(read_input(input_path, in), implicit_claims);
      if (require_transitive && !pf.has_transitive_prefs())
        throw InputError("preferences are not transitive");
      return pf;
    };
    auto enum_options = [&]() {
      EnumOptions opts;
      if (max_args > 0) opts.max_args = static_cast<std::size_t>(max_args);
      if (max_claims > 0) opts.max_claims = static_cast<std::size_t>(max_claims);
      opts.jobs = jobs;
      opts.r3_prf_pruning = r3_prf_pruning;
      return opts;
    };
    auto answer = [&](bool yes) {
      out << (yes ? "YES" : "NO") << "\n";
      if (!yes && strict_exit) exit_code = 1;
    };

    if (task_name == "enum") {
      const SemanticsId s = need_semantics(semantics_name);
      PrefFramework pf = load_pcaf();
      EnumStats stats;
      for (const ClaimSet& c : enumerate_claim_extensions(pf, reduction, s, enum_options(), &stats))
        out << to_string(c) << "\n";
      candidates = stats.candidates;
    } else if (task_name == "ver") {
      const SemanticsId s = need_semantics(semantics_name);
      if (!app.count("--claims")) throw InputError("ver needs --claims");
      const ClaimSet c = parse_claim_set(claims_text);
      PrefFramework pf = load_pcaf();
      VerifyStats stats;
      answer(verify(pf, reduction, s, c, &stats));
      candidates = stats.nodes;
    } else if (task_name == "cred" || task_name == "skep") {
      const SemanticsId s = need_semantics(semantics_name);
      if (claim_name.empty()) throw InputError(task_name + " needs --claim");
      PrefFramework pf = load_pcaf();
      EnumStats stats;
      answer(task_name == "cred"
                 ? credulous(pf, reduction, s, claim_name, enum_options(), &stats)
                 : skeptical(pf, reduction, s, claim_name, enum_options(), &stats));
      candidates = stats.candidates;
    } else if (task_name == "classify") {
      ClaimFramework caf = parse_caf(read_input(input_path, in), implicit_claims);
      for (ImageClassId cls : kAllImageClasses) {
        const bool structural = in_image(caf, cls);
        if (budget > 0) {
          const ClassProbe probe = probe_of(cls);
          PreimageResult search =
              preimage_search(caf, probe.reduction, probe.transitive, budget);
          candidates += search.candidates;
          if (search.status != PreimageResult::Status::Inconclusive &&
              (search.status == PreimageResult::Status::Found) != structural)
            throw InputError(std::string("internal disagreement on ") +
                             std::string(to_string(cls)) +
                             ": structural test and preimage search differ");
        }
        out << to_string(cls) << " " << (structural ? "YES" : "NO") << "\n";
      }
    } else if (task_name == "reduce") {
      PrefFramework pf = load_pcaf();
      out << render_apx(pf.reduce(reduction));
    } else if (task_name == "imax") {
      const SemanticsId s = need_semantics(semantics_name);
      if (app.count("--input")) {
        PrefFramework pf = load_pcaf();
        EnumStats stats;
        auto family = enumerate_claim_extensions(pf, reduction, s, enum_options(), &stats);
        candidates = stats.candidates;
        auto violation = check_imaximality(family);
        answer(!violation.has_value());
        if (violation)
          out << to_string(violation->first) << " " << to_string(violation->second) << "\n";
      } else {
        FalsifyOptions opts;
        opts.trials = trials;
        opts.seed = seed;
        if (max_args > 0) opts.max_args = max_args;
        if (max_claims > 0) opts.max_claims = max_claims;
        opts.transitive_only = require_transitive;
        FalsifyResult result = falsify_imaximality(reduction, s, opts);
        candidates = result.trials_run;
        answer(!result.violation.has_value());
        if (result.violation) {
          out << to_string(result.violation->first) << " " << to_string(result.violation->second)
              << "\n";
          out << render_apx(*result.counterexample);
        }
      }
    } else if (task_name == "gen") {
      const SemanticsId s = need_semantics(semantics_name);
      const std::string text = read_input(input_path, in);
      HardInstance inst = [&] {
        switch (s) {
          case SemanticsId::CF:
          case SemanticsId::NAIVE: return gen_cf_naive(parse_dimacs(text));
          case SemanticsId::STB:
          case SemanticsId::ADM: return gen_stb_adm_com(parse_dimacs(text));
          case SemanticsId::COM:
            if (reduction == ReductionId::R2 || reduction == ReductionId::R4)
              return gen_com_pref(parse_dimacs(text), reduction);
            if (reduction == ReductionId::R1) return gen_stb_adm_com(parse_dimacs(text));
            throw InputError("no complete-semantics construction for reduction 3");
          case SemanticsId::PRF:
          case SemanticsId::SEM:
          case SemanticsId::STG: return gen_qbf(parse_qdimacs(text), s);
        }
        throw InputError("unknown semantics");
      }();
      inst.semantics = s;
      out << render_apx(inst.pf);
      out << "# task: gen\n";
      out << "# reduction: " << to_string(inst.reduction) << "\n";
      out << "# semantics: " << to_string(inst.semantics) << "\n";
      out << "# covers:";
      for (SemanticsId cov : inst.covers) out << " " << to_string(cov);
      out << "\n";
      out << "# target: " << to_string(inst.target) << "\n";
      out << "# polarity: " << to_string(inst.polarity) << "\n";
      out << "# notes: " << inst.notes << "\n";
    } else {
      throw InputError("unknown task: " + task);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  err << "candidates=" << candidates << " elapsed=" << elapsed << "\n";
  return exit_code;
}

}  // namespace pcaf
