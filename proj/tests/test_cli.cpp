#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

const std::string kCli = DCFL_CLI_PATH;
const std::string kData = DCFL_DATA_DIR;

struct CmdResult {
  int exit_code = -1;
  std::string output;
};

CmdResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  CmdResult r;
  const std::string cmd = env_prefix + kCli + " " + args + " > test_cli_out.txt 2>&1";
  const int status = std::system(cmd.c_str());
  if (status >= 0 && WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  std::ifstream in("test_cli_out.txt");
  std::ostringstream buf;
  buf << in.rdbuf();
  r.output = buf.str();
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

std::string without_timing(const std::string& text) {
  std::istringstream in(text);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("wall-time-ms:", 0) == 0) continue;
    out << line << '\n';
  }
  return out.str();
}

std::string anbn() { return kData + "/anbn.json"; }
std::string zigzag() { return kData + "/anbn_zigzag.json"; }

}  // namespace

TEST_SUITE("command line") {
  TEST_CASE("run reports accept and reject with matching exit codes") {
    CmdResult accept = run_cli("run " + anbn() + " aabb");
    CHECK(accept.exit_code == 0);
    CHECK(contains(accept.output, "verdict: accept"));
    CHECK(contains(accept.output, "command: run"));

    CmdResult reject = run_cli("run " + anbn() + " aab");
    CHECK(reject.exit_code == 1);
    CHECK(contains(reject.output, "verdict: reject"));

    CmdResult empty = run_cli("run " + anbn() + " ε");
    CHECK(empty.exit_code == 0);
  }

  TEST_CASE("malformed machine files exit 2") {
    {
      std::ofstream bad("test_cli_bad.json");
      bad << "{\"states\": []}";
    }
    CmdResult r = run_cli("run test_cli_bad.json ab");
    CHECK(r.exit_code == 2);

    CmdResult missing = run_cli("run test_cli_nowhere.json ab");
    CHECK(missing.exit_code == 2);
  }

  TEST_CASE("analyze prints the stack profile with hills and turns") {
    CmdResult r = run_cli("analyze " + anbn() + " aabb");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "height profile: 1 1 2 3 2 1 1"));
    CHECK(contains(r.output, "hills = 1"));
    CHECK(contains(r.output, "turns = 1"));

    CmdResult empty = run_cli("analyze " + anbn() + " ε");
    CHECK(empty.exit_code == 0);
    CHECK(contains(empty.output, "height profile: 1 1 1"));
  }

  TEST_CASE("pump certifies the classic factorization") {
    CmdResult r = run_cli("pump " + anbn() + " 'ε,a,ab,b,ε' --imax 5");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "passes"));
    CHECK(contains(r.output, "strings-checked = 6"));

    CmdResult fail = run_cli("pump " + anbn() + " 'ε,a,ε,bb,ε' --imax 5");
    CHECK(fail.exit_code == 1);
    CHECK(contains(fail.output, "fails at i = 1: abb is not a member"));

    CmdResult bad = run_cli("pump " + anbn() + " 'a,b' --imax 5");
    CHECK(bad.exit_code == 2);
  }

  TEST_CASE("refute exhausts the pinned searches") {
    CmdResult r = run_cli("refute L2-union-1 --c 4 --imax 3");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "no witness found; search exhausted 1045 factorizations"));

    CmdResult again = run_cli("refute L2-union-1 --c 4 --imax 3");
    CHECK(without_timing(again.output) == without_timing(r.output));
  }

  TEST_CASE("refute finds the guaranteed witness at the catalogued arity") {
    CmdResult r = run_cli("refute L2-union-2 --c 4 --imax 3");
    CHECK(r.exit_code == 1);
    CHECK(contains(r.output, "witness found on suffix pair (1, 2)"));
    CHECK(contains(r.output, "y-parts: ε | b | bbbb"));
    CHECK(contains(r.output, "z-parts: ε | bb | bbbbbbbb"));

    CmdResult unknown = run_cli("refute pal --c 4");
    CHECK(unknown.exit_code == 2);
  }

  TEST_CASE("zoo subcommands list, validate and emit witnesses") {
    CmdResult list = run_cli("zoo list");
    CHECK(list.exit_code == 0);
    CHECK(contains(list.output, "catalogue holds 22 entries"));
    CHECK(contains(list.output, "pal-complement"));

    CmdResult validate = run_cli("zoo validate ld-2 --max-len 4");
    CHECK(validate.exit_code == 0);
    CHECK(contains(validate.output, "all checked entries agree"));

    CmdResult witness = run_cli("zoo witness l-union --d 2 --n 5");
    CHECK(witness.exit_code == 0);
    CHECK(contains(witness.output, "w3 = bbbbbbbbbb"));

    CmdResult unknown = run_cli("zoo validate no-such-entry");
    CHECK(unknown.exit_code == 2);
  }

  TEST_CASE("lda subcommands run and validate the two-way machine") {
    CmdResult accept = run_cli("lda run " + zigzag() + " aabb");
    CHECK(accept.exit_code == 0);
    CHECK(contains(accept.output, "verdict: accept"));
    CHECK(contains(accept.output, "visit-discipline: respected"));

    CmdResult reject = run_cli("lda run " + zigzag() + " abba");
    CHECK(reject.exit_code == 1);

    CmdResult valid = run_cli("lda validate " + zigzag());
    CHECK(valid.exit_code == 0);
    CHECK(contains(valid.output, "well formed"));

    {
      std::ofstream bad("test_cli_bad_lda.json");
      bad << "{\"states\": [\"go\"], \"layers\": [\"a\", \"a¢$\"], \"initial_state\": \"go\","
          << " \"accept_states\": [], \"reject_states\": [], \"transitions\": []}";
    }
    CmdResult invalid = run_cli("lda validate test_cli_bad_lda.json");
    CHECK(invalid.exit_code == 1);
    CHECK(contains(invalid.output, "malformed"));
  }

  TEST_CASE("family subcommands answer membership and tabulate sizes") {
    CmdResult member = run_cli("family member --name pal --input 0110");
    CHECK(member.exit_code == 0);
    CHECK(contains(member.output, "verdict: member"));

    CmdResult non = run_cli("family member --name pal --input 0100");
    CHECK(non.exit_code == 1);

    CmdResult size = run_cli("family size --name pal --n-max 4");
    CHECK(size.exit_code == 0);
    CHECK(contains(size.output, "within the declared bound"));
    CHECK(contains(size.output, "des =      208"));

    CmdResult unknown = run_cli("family member --name nopal --input 0110");
    CHECK(unknown.exit_code == 2);
  }

  TEST_CASE("json mode emits the same verdicts structurally") {
    CmdResult r = run_cli("--json run " + anbn() + " aabb");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "\"verdict\": \"accept\""));
    CHECK(contains(r.output, "\"parameters\""));
    CHECK(contains(r.output, "\"wall_ms\""));
  }

  TEST_CASE("budget override from the environment") {
    CmdResult starved = run_cli("run " + anbn() + " aabb", "DCFL_LAB_BUDGET=2 ");
    CHECK(starved.exit_code == 2);
    CHECK(contains(starved.output, "budget exhausted"));

    CmdResult junk = run_cli("run " + anbn() + " aabb", "DCFL_LAB_BUDGET=soon ");
    CHECK(junk.exit_code == 2);

    CmdResult generous = run_cli("run " + anbn() + " aabb", "DCFL_LAB_BUDGET=100000 ");
    CHECK(generous.exit_code == 0);
  }

  TEST_CASE("usage errors exit 2") {
    CmdResult none = run_cli("");
    CHECK(none.exit_code == 2);

    CmdResult unknown = run_cli("frobnicate");
    CHECK(unknown.exit_code == 2);

    CmdResult help = run_cli("--help");
    CHECK(help.exit_code == 0);
    CHECK(contains(help.output, "run"));
  }
}
