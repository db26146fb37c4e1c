// Scripted end-to-end scenarios against the built binary: flag grammar, exit
// codes, file round-trips, and byte-level determinism. The binary path comes
// from RAMSEY_FORGE_BIN (set by ctest).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Sandbox {
  fs::path dir;
  std::string bin;

  Sandbox() {
    const char* env = std::getenv("RAMSEY_FORGE_BIN");
    REQUIRE_MESSAGE(env != nullptr, "RAMSEY_FORGE_BIN must point at the binary");
    bin = env;
    dir = fs::temp_directory_path() / "rforge_cli_test";
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  ~Sandbox() { fs::remove_all(dir); }

  CliResult run(const std::string& args, const std::string& env = "") const {
    const fs::path out = dir / "stdout.txt", err = dir / "stderr.txt";
    const std::string cmd = "cd " + dir.string() + " && " + (env.empty() ? "" : env + " ") + bin +
                            " " + args + " >stdout.txt 2>stderr.txt";
    const int status = std::system(cmd.c_str());
    CliResult r;
    r.code = WEXITSTATUS(status);
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
  }

  std::string file(const std::string& name) const { return slurp(dir / name); }
  void put(const std::string& name, const std::string& content) const {
    std::ofstream f(dir / name, std::ios::binary);
    f << content;
  }
};

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("scenario matrix") {
  Sandbox sb;

  SUBCASE("matrix generation, checking, deletion") {
    CHECK(sb.run("hadamard gen --kind sylvester --order 8 -o h8.pm").code == 0);
    CHECK(sb.file("h8.pm").substr(0, 11) == "8\n++++++++\n");

    CHECK(sb.run("hadamard check h8.pm --alpha 0 --mode exact").code == 0);
    CHECK(sb.run("hadamard check h8.pm --alpha 1 --mode exact").code == 1);
    CHECK(sb.run("hadamard check h8.pm --alpha 1 --mode upper").code == 0);

    CHECK(sb.run("hadamard gen --kind sylvester --order 6 -o bad.pm").code == 2);

    CHECK(sb.run("hadamard gen --kind paley-one --q 7 -o h7.pm").code == 0);
    CHECK(sb.run("hadamard check h7.pm --alpha 1 --mode exact").code == 0);
    CHECK(sb.run("hadamard gen --kind paley-one --q 5 -o h5.pm").code == 2);  // wrong residue

    const auto dbl = sb.run("hadamard gen --kind paley-double --q 5 -o h10.pm --json");
    CHECK(dbl.code == 0);
    CHECK(dbl.out.find("\"alpha\": 2") != std::string::npos);
    CHECK(dbl.out.find("\"symmetric\": true") != std::string::npos);

    CHECK(sb.run("hadamard delete --in h8.pm --rows 6,8 --cols 6,8 -o h6.pm").code == 0);
    CHECK(sb.run("hadamard check h6.pm --alpha 2 --mode exact").code == 0);
    CHECK(sb.run("hadamard delete --in h8.pm --symmetric --alpha 2 -o h6s.pm").code == 0);
    CHECK(sb.run("hadamard check h6s.pm --alpha 2 --mode exact").code == 0);
    CHECK(sb.run("hadamard delete --in h8.pm --rows 1,2,3,4,5 --cols 1,2,3,4,5 -o x.pm").code == 2);
    // with no explicit sets the smallest indices are deleted
    CHECK(sb.run("hadamard delete --in h8.pm --alpha 2 -o d2.pm").code == 0);
    CHECK(sb.run("hadamard check d2.pm --alpha 2 --mode upper").code == 0);
  }

  SUBCASE("srg generation and verification") {
    CHECK(sb.run("srg gen --kind paley --q 13 -o g13.adj").code == 0);
    const auto chk = sb.run("srg check g13.adj");
    CHECK(chk.code == 0);
    CHECK(chk.out.find("(13,6,2,3)") != std::string::npos);

    CHECK(sb.run("srg gen --kind paley --q 7 -o g7.adj").code == 2);
    CHECK(sb.run("srg gen --kind rook --n 4 -o rook.adj").code == 0);
    const auto rook = sb.run("srg check rook.adj --json");
    CHECK(rook.code == 0);
    CHECK(rook.out.find("\"is_srg\": true") != std::string::npos);
    CHECK(rook.out.find("\"theta\": 6") != std::string::npos);

    sb.put("p4.adj", "4\n1 2\n2 3\n3 4\n");
    const auto notsrg = sb.run("srg check p4.adj");
    CHECK(notsrg.code == 1);
    CHECK(notsrg.out.find("not-srg") != std::string::npos);

    sb.put("corrupt.adj", "4\n2 1\n");
    CHECK(sb.run("srg check corrupt.adj").code == 2);

    const auto th = sb.run("srg theta --params 15,8,4,4");
    CHECK(th.code == 0);
    CHECK(th.out.find("theta 4") != std::string::npos);
  }

  SUBCASE("coloring pipeline and certificate tamper detection") {
    REQUIRE(sb.run("srg gen --kind paley --q 13 -o g13.adj").code == 0);
    REQUIRE(sb.run("hadamard gen --kind sylvester --order 4 -o h4.pm").code == 0);
    const auto build = sb.run("color build --srg g13.adj --matrix h4.pm -o cert.json");
    CHECK(build.code == 0);
    CHECK(build.out.find("max delta 12") != std::string::npos);

    CHECK(sb.run("color verify cert.json --target 2,13").code == 0);
    CHECK(sb.run("verify cert.json --target 2,13").code == 0);  // top-level alias
    CHECK(sb.run("verify cert.json").code == 0);
    CHECK(sb.run("verify cert.json --target 2,12").code == 1);  // max delta hits 12
    CHECK(sb.run("verify cert.json --target 2,1").code == 1);

    // flip one color character in the body and keep everything else
    std::string cert = sb.file("cert.json");
    const auto pos = cert.find("\"colors\": [");
    REQUIRE(pos != std::string::npos);
    const auto digit = cert.find_first_of("12", pos + 11);
    REQUIRE(digit != std::string::npos);
    cert[digit] = cert[digit] == '1' ? '2' : '1';
    sb.put("tampered.json", cert);
    const auto tampered = sb.run("color verify tampered.json --target 2,13");
    CHECK(tampered.code == 1);
    CHECK(tampered.out.find("MISMATCH") != std::string::npos);

    sb.put("garbage.json", "{]");
    CHECK(sb.run("verify garbage.json").code == 2);

    // an asymmetric matrix cannot drive the coloring
    REQUIRE(sb.run("hadamard gen --kind paley-one --q 7 -o h7.pm").code == 0);
    CHECK(sb.run("color build --srg g13.adj --matrix h7.pm -o nope.json").code == 2);

    // forcing a target below the measured delta builds a violated certificate
    const auto tight = sb.run("color build --srg g13.adj --matrix h4.pm -o v.json --target-m 5");
    CHECK(tight.code == 1);
    CHECK(tight.out.find("violated") != std::string::npos);
    CHECK(sb.run("verify v.json").code == 1);  // consistent file, but the property fails
  }

  SUBCASE("exhaustive search verdicts and budget") {
    const auto avoid = sb.run("ramsey exhaustive --c 2 --s 4 --target 2,2 --colors 2 -o w.json");
    CHECK(avoid.code == 0);
    CHECK(avoid.out.find("avoiding-coloring") != std::string::npos);
    CHECK(sb.run("verify w.json").code == 0);  // the found coloring certifies

    const auto forced = sb.run("ramsey exhaustive --c 2 --s 5 --target 2,2 --colors 2");
    CHECK(forced.code == 0);
    CHECK(forced.out.find("forced") != std::string::npos);

    CHECK(sb.run("ramsey exhaustive --c 2 --s 5 --target 2,2 --colors 2 --budget 40").code == 2);
    CHECK(sb.run("ramsey exhaustive --c 2 --s 5 --target 3,2 --colors 2").code == 2);
    // the environment variable overrides the default budget
    CHECK(sb.run("ramsey exhaustive --c 2 --s 5 --target 2,2 --colors 2",
                 "RAMSEY_FORGE_BUDGET=40").code == 2);
    CHECK(sb.run("ramsey exhaustive --c 2 --s 5 --target 2,2 --colors 2",
                 "RAMSEY_FORGE_BUDGET=100000000").code == 0);
  }

  SUBCASE("bound reports") {
    const auto sc = sb.run("bounds scenario --params 13,6,2,3 --zeta 4 --alpha 0 --json");
    CHECK(sc.code == 0);
    CHECK(sc.out.find("\"exact\": 5") != std::string::npos);

    CHECK(sb.run("bounds set-upper --m 4 --width 13 --colors 2").code == 0);
    CHECK(sb.run("bounds set-upper --m 3 --width 2 --colors 2").code == 1);  // divisibility fails
    CHECK(sb.run("bounds size-upper --c 13 --widths 13,13").out.find("upper 5") == 0);
    CHECK(sb.run("bounds gate --s 20 --widths 61,61 --c 14").code == 0);
    CHECK(sb.run("bounds gate --s 20 --widths 61,61 --c 13").code == 1);
    CHECK(sb.run("bounds exact --n 4 --zeta 20 --alpha 0").code == 0);
    CHECK(sb.run("bounds exact --n 4 --zeta 16 --alpha 0").code == 1);
    CHECK(sb.run("bounds exact --n 6 --zeta 100 --alpha 0").code == 1);
    CHECK(sb.run("bounds exact --n 6 --zeta 100 --alpha 0 --assume-srg").code == 0);
    CHECK(sb.run("bounds example --family conference --n 4 --zeta 4 --alpha 0").code == 0);
    const auto quartic = sb.run("bounds example --family quartic --r 1 --alpha 0 --prime-power 13");
    CHECK(quartic.code == 1);
    CHECK(quartic.out.find("hypothesis-failed") != std::string::npos);
    CHECK(sb.run("bounds example --family quartic --r 3 --alpha 0 --prime-power 13").code == 0);
  }

  SUBCASE("flag grammar and exit codes") {
    const auto bad_flag = sb.run("hadamard gen --kind sylvester --wat 8 -o x.pm");
    CHECK(bad_flag.code == 2);
    CHECK_FALSE(bad_flag.err.empty());

    CHECK(sb.run("nonsense").code == 2);
    CHECK(sb.run("hadamard").code == 2);           // missing subcommand
    CHECK(sb.run("hadamard check").code == 2);     // missing file
    CHECK(sb.run("--help").code == 0);
    CHECK(sb.run("ramsey exhaustive --c 2 --s 2 --target 2,2 --colors 2 --threads 2").code == 2);
    CHECK(sb.run("--threads 2 ramsey exhaustive --c 2 --s 2 --target 2,2 --colors 2").code == 0);
  }

  SUBCASE("identical invocations produce identical bytes") {
    const auto a = sb.run("bounds scenario --params 13,6,2,3 --zeta 4 --alpha 0 --json");
    const auto b = sb.run("bounds scenario --params 13,6,2,3 --zeta 4 --alpha 0 --json");
    CHECK(a.out == b.out);

    REQUIRE(sb.run("srg gen --kind paley --q 13 -o g.adj").code == 0);
    REQUIRE(sb.run("hadamard gen --kind sylvester --order 4 -o h.pm").code == 0);
    REQUIRE(sb.run("color build --srg g.adj --matrix h.pm -o c1.json").code == 0);
    REQUIRE(sb.run("color build --srg g.adj --matrix h.pm -o c2.json").code == 0);
    CHECK(sb.file("c1.json") == sb.file("c2.json"));

    const auto r1 = sb.run("ramsey exhaustive --c 2 --s 4 --target 2,2 --colors 2 -o s1.json");
    const auto r2 =
        sb.run("ramsey exhaustive --c 2 --s 4 --target 2,2 --colors 2 --serial -o s2.json");
    CHECK(r1.code == 0);
    CHECK(r2.code == 0);
    CHECK(sb.file("s1.json") == sb.file("s2.json"));  // parallel result is schedule-independent
  }
}

}  // TEST_SUITE
