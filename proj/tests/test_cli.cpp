#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct Result {
  int code;
  std::string out;
};

// Runs the installed binary with `args`, feeding `input` on stdin. stderr is
// dropped unless merge_err is set.
Result run(const std::string& args, const std::string& input, bool merge_err = false) {
  static int counter = 0;
  const std::string path = "cli_stdin_" + std::to_string(counter++) + ".txt";
  {
    std::ofstream f(path);
    f << input;
  }
  const std::string cmd = std::string(PCAF_CLI_PATH) + " " + args + " < " + path +
                          (merge_err ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, n);
  const int status = pclose(pipe);
  std::remove(path.c_str());
  REQUIRE(WIFEXITED(status));
  return {WEXITSTATUS(status), out};
}

const char* kExample =
    "arg(a).\n"
    "arg(ap).\n"
    "arg(b).\n"
    "claim(a,alpha).\n"
    "claim(ap,alpha).\n"
    "claim(b,beta).\n"
    "att(a,b).\n"
    "att(ap,b).\n"
    "att(b,a).\n"
    "pref(b,ap).\n";

const char* kSelfOnly =
    "arg(a). arg(b).\n"
    "claim(a,alpha). claim(b,alpha).\n"
    "att(b,b).\n";

std::string line_after(const std::string& text, const std::string& prefix) {
  std::size_t pos = text.find(prefix);
  REQUIRE(pos != std::string::npos);
  pos += prefix.size();
  return text.substr(pos, text.find('\n', pos) - pos);
}

}  // namespace

TEST_CASE("enumerating claim families") {
  Result r1 = run("--task enum --semantics stb --reduction 1", kExample);
  CHECK(r1.code == 0);
  CHECK(r1.out == "[alpha]\n[alpha,beta]\n");

  Result r2 = run("--task enum --semantics stb --reduction 2", kExample);
  CHECK(r2.code == 0);
  CHECK(r2.out == "[alpha]\n[beta]\n");

  Result task_case = run("--task ENUM --semantics STB --reduction 2", kExample);
  CHECK(task_case.out == r2.out);
}

TEST_CASE("verifying a claim set") {
  Result yes = run("--task ver --semantics adm --reduction 1 --claims alpha,beta", kExample);
  CHECK(yes.code == 0);
  CHECK(yes.out == "YES\n");

  Result no = run("--task ver --semantics stb --reduction 2 --claims '[alpha,beta]'", kExample);
  CHECK(no.code == 0);
  CHECK(no.out == "NO\n");

  Result strict = run("--task ver --semantics stb --reduction 2 --claims alpha,beta --strict-exit",
                      kExample);
  CHECK(strict.code == 1);
  CHECK(strict.out == "NO\n");

  Result empty = run("--task ver --semantics adm --reduction 2 --claims '[]'", kExample);
  CHECK(empty.code == 0);
  CHECK(empty.out == "YES\n");
}

TEST_CASE("credulous and skeptical acceptance") {
  Result cred = run("--task cred --semantics stb --reduction 1 --claim alpha", kExample);
  CHECK(cred.code == 0);
  CHECK(cred.out == "YES\n");

  Result skep = run("--task skep --semantics stb --reduction 1 --claim beta --strict-exit",
                    kExample);
  CHECK(skep.code == 1);
  CHECK(skep.out == "NO\n");

  Result skep2 = run("--task skep --semantics stb --reduction 1 --claim alpha", kExample);
  CHECK(skep2.out == "YES\n");
}

TEST_CASE("rewriting attacks produces canonical output") {
  Result r = run("--task reduce --reduction 2", kExample);
  CHECK(r.code == 0);
  CHECK(r.out ==
        "arg(a).\n"
        "arg(ap).\n"
        "arg(b).\n"
        "claim(a,alpha).\n"
        "claim(ap,alpha).\n"
        "claim(b,beta).\n"
        "att(a,b).\n"
        "att(b,a).\n"
        "att(b,ap).\n");
}

TEST_CASE("classifying a framework against the five image classes") {
  const std::string expected =
      "IM1 YES\n"
      "IM2 NO\n"
      "IM3 NO\n"
      "IM4 NO\n"
      "IM1_TR YES\n";
  Result structural = run("--task classify", kSelfOnly);
  CHECK(structural.code == 0);
  CHECK(structural.out == expected);

  // A positive budget cross-checks each verdict with a preimage search.
  Result checked = run("--task classify --budget 100000", kSelfOnly);
  CHECK(checked.code == 0);
  CHECK(checked.out == expected);
}

TEST_CASE("antichain checking of an enumerated family") {
  Result ok = run("--task imax --semantics stb --reduction 2 --input -", kExample);
  CHECK(ok.code == 0);
  CHECK(ok.out == "YES\n");

  Result bad = run("--task imax --semantics stb --reduction 1 --input - --strict-exit", kExample);
  CHECK(bad.code == 1);
  CHECK(bad.out == "NO\n[alpha] [alpha,beta]\n");
}

TEST_CASE("antichain search without input samples random frameworks") {
  Result r = run("--task imax --semantics naive --reduction 1 --seed 1 --trials 600", "");
  CHECK(r.code == 0);
  REQUIRE(r.out.substr(0, 3) == "NO\n");
  // The counterexample is included in parseable form.
  CHECK(r.out.find("arg(") != std::string::npos);

  Result clean = run("--task imax --semantics stb --reduction 3 --seed 5 --trials 50", "");
  CHECK(clean.code == 0);
  CHECK(clean.out == "YES\n");
}

TEST_CASE("generated instances round-trip through the verifier") {
  const std::string sat_cnf = "p cnf 2 2\n1 2 0\n-1 0\n";
  Result gen = run("--task gen --semantics cf --reduction 1", sat_cnf);
  CHECK(gen.code == 0);
  CHECK(gen.out.find("# polarity: sat-iff-member") != std::string::npos);
  CHECK(gen.out.find("# covers: cf naive") != std::string::npos);

  const std::string target = line_after(gen.out, "# target: ");
  Result ver = run("--task ver --semantics cf --reduction 1 --claims '" + target + "'", gen.out);
  CHECK(ver.out == "YES\n");

  const std::string unsat_cnf = "p cnf 1 2\n1 0\n-1 0\n";
  Result gen2 = run("--task gen --semantics naive --reduction 1", unsat_cnf);
  CHECK(gen2.code == 0);
  const std::string target2 = line_after(gen2.out, "# target: ");
  Result ver2 = run("--task ver --semantics naive --reduction 1 --claims '" + target2 + "'", gen2.out);
  CHECK(ver2.out == "NO\n");

  const std::string qbf = "p cnf 2 2\na 1 0\ne 2 0\n1 2 0\n-1 -2 0\n";
  Result gen3 = run("--task gen --semantics prf --reduction 1", qbf);
  CHECK(gen3.code == 0);
  CHECK(gen3.out.find("# polarity: valid-iff-nonmember") != std::string::npos);
  const std::string target3 = line_after(gen3.out, "# target: ");
  Result ver3 = run("--task ver --semantics prf --reduction 1 --claims '" + target3 + "'", gen3.out);
  CHECK(ver3.out == "NO\n");  // the formula is valid
}

TEST_CASE("implicit claims") {
  const std::string text = "arg(a). arg(b). att(a,b).\n";
  Result with_flag = run("--task enum --semantics stb --reduction 1 --implicit-claims", text);
  CHECK(with_flag.code == 0);
  CHECK(with_flag.out == "[a]\n");
  Result without = run("--task enum --semantics stb --reduction 1", text);
  CHECK(without.code == 2);
}

TEST_CASE("transitivity can be required at the boundary") {
  const std::string chain =
      "arg(a). arg(b). arg(c).\n"
      "claim(a,x). claim(b,y). claim(c,z).\n"
      "pref(a,b). pref(b,c).\n";
  Result rejected = run("--task enum --semantics cf --reduction 1 --require-transitive", chain,
                        true);
  CHECK(rejected.code == 2);
  CHECK(rejected.out.find("error:") != std::string::npos);
  Result accepted = run("--task enum --semantics cf --reduction 1", chain);
  CHECK(accepted.code == 0);
}

TEST_CASE("failure modes exit with status 2") {
  CHECK(run("--task bogus", kExample).code == 2);
  CHECK(run("--task ver --semantics stb --reduction 1", kExample).code == 2);
  CHECK(run("--task enum --reduction 1", kExample).code == 2);
  CHECK(run("--task enum --semantics stb --reduction 7", kExample).code == 2);
  CHECK(run("--task enum --semantics stb --reduction 1", "arg(a").code == 2);
  CHECK(run("--task gen --semantics com --reduction 3", "p cnf 1 1\n1 0\n").code == 2);
  CHECK(run("--task enum --semantics cf --reduction 1 --max-args 2", kExample).code == 2);
  CHECK(run("--task enum --semantics stb --reduction 1 --input /nonexistent.apx", "").code == 2);

  Result message = run("--task bogus", kExample, true);
  CHECK(message.out.find("error:") != std::string::npos);
}

TEST_CASE("help and diagnostics") {
  Result help = run("--help", "");
  CHECK(help.code == 0);
  CHECK(help.out.find("--task") != std::string::npos);

  Result diag = run("--task enum --semantics stb --reduction 1", kExample, true);
  CHECK(diag.out.find("candidates=") != std::string::npos);
  CHECK(diag.out.find("elapsed=") != std::string::npos);
}
