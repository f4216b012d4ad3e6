#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

#ifndef FLAGBOUND_BIN
#error "FLAGBOUND_BIN must point at the CLI binary"
#endif

namespace {

namespace fs = std::filesystem;

struct CmdResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Per-process scratch directory; every run_cli call executes in it, so
// relative output paths land here and not in the repository.
const fs::path& workdir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("flagbound_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

CmdResult run_cli(const std::string& args) {
  static int counter = 0;
  fs::path base = workdir() / ("cmd_" + std::to_string(counter++));
  std::string out = base.string() + ".out";
  std::string err = base.string() + ".err";
  std::string cmd = "cd '" + workdir().string() + "' && '" + FLAGBOUND_BIN +
                    "' " + args + " >'" + out + "' 2>'" + err + "'";
  int rc = std::system(cmd.c_str());
  CmdResult r;
  r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  std::remove(out.c_str());
  std::remove(err.c_str());
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

std::string wpath(const std::string& name) { return (workdir() / name).string(); }

void write_file(const std::string& path, const std::string& content) {
  std::ofstream(path, std::ios::binary) << content;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("enumerate graphs") {
  CmdResult r = run_cli("enumerate graphs --size 3 --forbid K3 --format g6");
  CHECK(r.code == 0);
  CHECK(r.out == "0: B?\n1: BG\n2: BW\ncount: 3\n");

  CmdResult tsv =
      run_cli("enumerate graphs --size 3 --forbid K3 --format g6 --output tsv");
  CHECK(tsv.code == 0);
  CHECK(tsv.out == "0\tB?\n1\tBG\n2\tBW\ncount\t3\n");

  CmdResult edges = run_cli("enumerate graphs --size 3 --forbid K3");
  CHECK(contains(edges.out, "0: 3;\n"));
  CHECK(contains(edges.out, "2: 3; 0-2, 1-2\n"));

  CmdResult four = run_cli("enumerate graphs --size 4 --forbid K3");
  CHECK(contains(four.out, "count: 7\n"));

  CmdResult all = run_cli("enumerate graphs --size 4");
  CHECK(contains(all.out, "count: 11\n"));
}

TEST_CASE("enumerate types and flags") {
  CmdResult types = run_cli("enumerate types --size 2");
  CHECK(types.code == 0);
  CHECK(types.out == "0: 2;\n1: 2; 0-1\ncount: 2\n");

  CmdResult flags = run_cli("enumerate flags --type K1 --size 3 --forbid K3");
  CHECK(flags.code == 0);
  CHECK(flags.out ==
        "0: 3; | embedding: 0\n"
        "1: 3; 1-2 | embedding: 0\n"
        "2: 3; 0-2 | embedding: 0\n"
        "3: 3; 0-2, 1-2 | embedding: 0\n"
        "4: 3; 0-1, 0-2 | embedding: 0\n"
        "count: 5\n");
}

TEST_CASE("density") {
  CmdResult r = run_cli("density --F K2 --G C5");
  CHECK(r.code == 0);
  CHECK(r.out == "1/2\n");

  CmdResult path = run_cli("density --F edge --G '3; 0-1, 1-2'");
  CHECK(path.code == 0);
  CHECK(path.out == "2/3\n");

  CmdResult tsv = run_cli("density --F K2 --G C5 --output tsv");
  CHECK(tsv.out == "density\t1/2\n");

  CmdResult rooted =
      run_cli("density --F '2; 0-1 | embedding: 0' --G '3; 0-1, 0-2 | embedding: 0'");
  CHECK(rooted.code == 0);
  CHECK(rooted.out == "1/1\n");

  CmdResult bad = run_cli("density --F '3; 0-0' --G C5");  // self-loop
  CHECK(bad.code == 2);
  CHECK(contains(bad.err, "error:"));
}

TEST_CASE("product") {
  CmdResult r = run_cli("product --type K1 --a K2 --b K2 --forbid K3");
  CHECK(r.code == 0);
  CHECK(r.out == "1/1  3; 0-1, 0-2 | embedding: 0\n");

  CmdResult tsv = run_cli("product --type K1 --a '2;' --b K2 --forbid K3 --output tsv");
  CHECK(tsv.code == 0);
  CHECK(tsv.out ==
        "1/2\t3; 0-2 | embedding: 0\n"
        "1/2\t3; 0-2, 1-2 | embedding: 0\n");
}

TEST_CASE("build-sdp and solve") {
  std::string out = wpath("mantel.dat-s");
  CmdResult b = run_cli("build-sdp --preset mantel --out '" + out + "'");
  CHECK(b.code == 0);
  CHECK(contains(b.out, "fingerprint: df9526ceea59eb4e"));
  CHECK(fs::exists(out));
  CHECK(fs::exists(out + ".manifest"));

  // The same problem spelled out by hand matches the preset byte for byte.
  std::string custom = wpath("custom.dat-s");
  CmdResult c = run_cli("build-sdp --forbid K3 --target K2 -N 3 --block K1:2 --out '" +
                        custom + "'");
  CHECK(c.code == 0);
  CHECK(slurp(custom) == slurp(out));
  CHECK(contains(c.out, "constraints: 3, blocks: 1"));

  CmdResult s = run_cli("solve --problem '" + out + ".manifest'");
  CHECK(s.code == 0);
  CHECK(contains(s.out, "lambda: 0.500"));
  CHECK(contains(s.out, "iterations:"));

  CmdResult dq = run_cli("solve --problem '" + out + ".manifest' --dump-q");
  CHECK(contains(dq.out, "Q 0 2\n"));

  CmdResult missing = run_cli("solve --problem '" + wpath("nope.manifest") + "'");
  CHECK(missing.code == 2);
}

TEST_CASE("degenerate block warning") {
  std::string out = wpath("degen.dat-s");
  CmdResult r = run_cli(
      "build-sdp --forbid '4; 0-1, 0-2, 1-2' --forbid '4; 0-1, 0-2, 1-2, 0-3' "
      "--forbid '4; 0-1, 0-2, 1-2, 0-3, 1-3' --forbid K4 "
      "--target K2 -N 4 --block K3:3 --out '" + out + "'");
  CHECK(r.code == 0);
  CHECK(contains(r.err, "warning: block 0"));
}

TEST_CASE("run produces a verifiable certificate") {
  std::string sdpa = wpath("run_mantel.dat-s");
  CmdResult r = run_cli("run --preset mantel --sdpa-out '" + sdpa + "'");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "certified: ex(edge,{K3}) <= 1/2"));
  CHECK(contains(r.out, "certificate written to mantel.cert"));
  CHECK(fs::exists(workdir() / "mantel.cert"));

  CmdResult v = run_cli("certify --problem '" + sdpa + ".manifest' --cert mantel.cert");
  CHECK(v.code == 0);
  CHECK(contains(v.out, "valid: yes"));
  CHECK(contains(v.out, "bound: 1/2"));

  CmdResult vt = run_cli("certify --problem '" + sdpa +
                         ".manifest' --cert mantel.cert --output tsv");
  CHECK(contains(vt.out, "valid\t1\n"));
  CHECK(contains(vt.out, "bound\t1/2\n"));
  CHECK(contains(vt.out, "slack\t0\t0/1\n"));
  CHECK(contains(vt.out, "slack\t1\t1/3\n"));
  CHECK(contains(vt.out, "slack\t2\t0/1\n"));

  // A certificate claiming a smaller bound fails with the dedicated exit code.
  std::string cert = slurp((workdir() / "mantel.cert").string());
  std::size_t at = cert.find("lambda 1/2");
  REQUIRE(at != std::string::npos);
  cert.replace(at, 10, "lambda 49/100");
  write_file(wpath("low.cert"), cert);
  CmdResult bad = run_cli("certify --problem '" + sdpa + ".manifest' --cert low.cert");
  CHECK(bad.code == 4);
  CHECK(contains(bad.out, "valid: no"));
  CHECK(contains(bad.out, "constraint 0 violated by 1/100"));
}

TEST_CASE("run on the k4 presets") {
  CmdResult r = run_cli("run --preset k4-n3 --cert-out k4.cert");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "certified: ex(edge,{K4}) <= 1/1"));
  CHECK(fs::exists(workdir() / "k4.cert"));

  CmdResult tsv = run_cli("run --preset k4-n3 --output tsv");
  CHECK(contains(tsv.out, "valid\t1\n"));
  CHECK(contains(tsv.out, "bound\t1/1\n"));
  CHECK(contains(tsv.out, "statement\tex(edge,{K4})\n"));
}

TEST_CASE("run with an external solver result") {
  std::string result = wpath("external.result");
  write_file(result, "xVec = {0.5, 0.5, -0.5, 0.5}\n");
  CmdResult r = run_cli("run --preset mantel --solver 'external:" + result +
                        "' --cert-out ext.cert");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "certified: ex(edge,{K3}) <= 1/2"));

  CmdResult gone = run_cli("run --preset mantel --solver 'external:" +
                           wpath("absent.result") + "' --cert-out gone.cert");
  CHECK(gone.code == 2);
  CHECK_FALSE(fs::exists(workdir() / "gone.cert"));

  CmdResult unknown = run_cli("run --preset mantel --solver sorcery");
  CHECK(unknown.code == 2);
}

TEST_CASE("usage and capacity errors") {
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("enumerate graphs").code == 2);           // missing --size
  CHECK(run_cli("frobnicate").code == 2);                 // unknown command
  CHECK(run_cli("density --F K2").code == 2);             // missing --G
  CHECK(run_cli("run --preset nosuch").code == 2);
  CHECK(run_cli("run --forbid K3 --block K1:2").code == 2);  // no expansion
  CHECK(run_cli("build-sdp --preset mantel").code == 2);     // missing --out
  CHECK(run_cli("enumerate graphs --size 3 --output yaml").code == 2);

  CmdResult cap = run_cli("enumerate graphs --size 13");
  CHECK(cap.code == 3);
  CHECK(contains(cap.err, "error:"));
}

}  // TEST_SUITE
