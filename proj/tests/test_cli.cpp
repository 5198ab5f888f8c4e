// End-to-end tests that drive the installed command-line binary as a
// subprocess: pipelines from generated instances through reduction, solving,
// verification, lifting, and extraction, plus exit codes and exact output for
// the smaller informational commands.
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::filesystem::path scratch_dir() {
    std::filesystem::path dir = std::filesystem::current_path() / "cli_scratch";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string write_input(const std::string& name, const std::string& content) {
    std::filesystem::path path = scratch_dir() / name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    REQUIRE(out.good());
    return path.string();
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    ++counter;
    std::filesystem::path out_path = scratch_dir() / ("stdout." + std::to_string(counter));
    std::filesystem::path err_path = scratch_dir() / ("stderr." + std::to_string(counter));
    std::string command = std::string("\"") + DIRCUTS_CLI_PATH + "\" " + args + " >\"" +
                          out_path.string() + "\" 2>\"" + err_path.string() + "\"";
    int status = std::system(command.c_str());
    RunResult result;
    REQUIRE(status != -1);
    REQUIRE(WIFEXITED(status));
    result.exit_code = WEXITSTATUS(status);
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    return result;
}

bool starts_with(const std::string& text, const std::string& prefix) {
    return text.rfind(prefix, 0) == 0;
}

const char* kDiamond =
    "dirmc 4 1 2\n"
    "term 0 3\n"
    "w 1 1\n"
    "w 2 1\n"
    "arc 0 1\n"
    "arc 0 2\n"
    "arc 1 3\n"
    "arc 2 3\n";

const char* kChordedPath =
    "dirmc 3 1 1\n"
    "term 0 2\n"
    "w 1 1\n"
    "arc 0 1\n"
    "arc 0 2\n"
    "arc 1 2\n";

const char* kTwoArcPath =
    "dirmc 3 1 1\n"
    "term 0 2\n"
    "w 1 1\n"
    "arc 0 1\n"
    "arc 1 2\n";

}  // namespace

TEST_CASE("cli: bound values print exactly") {
    RunResult r = run_cli("bounds --k 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "g=32\nh=133120\n");
    CHECK(r.err.empty());
    RunResult zero = run_cli("bounds --k 0");
    CHECK(zero.exit_code == 0);
    CHECK(zero.out == "g=4\nh=0\n");
}

TEST_CASE("cli: exit codes for bad usage, bad input, and limits") {
    RunResult unknown = run_cli("bounds --k 1 --bogus");
    CHECK(unknown.exit_code == 2);
    CHECK_FALSE(unknown.err.empty());

    RunResult no_sub = run_cli("");
    CHECK(no_sub.exit_code == 2);
    CHECK_FALSE(no_sub.err.empty());

    RunResult missing = run_cli("solve-psi /no/such/file.psi");
    CHECK(missing.exit_code == 2);
    CHECK(starts_with(missing.err, "input error:"));

    RunResult negative = run_cli("bounds --k -1");
    CHECK(negative.exit_code == 2);
    CHECK(starts_with(negative.err, "input error:"));

    RunResult help = run_cli("--help");
    CHECK(help.exit_code == 0);
    CHECK(help.out.find("gen-psi") != std::string::npos);

    // A 21-vertex chain exceeds the enumeration's interior-vertex budget.
    std::ostringstream chain;
    chain << "dirmc 21 1 1\nterm 0 20\n";
    for (int v = 1; v < 20; ++v) chain << "w " << v << " 1\n";
    for (int v = 0; v < 20; ++v) chain << "arc " << v << ' ' << v + 1 << '\n';
    std::string big = write_input("chain21.dirmc", chain.str());
    RunResult limited = run_cli("enum-minimal-cuts \"" + big + "\" --k 1");
    CHECK(limited.exit_code == 3);
    CHECK(starts_with(limited.err, "resource limit:"));
}

TEST_CASE("cli: unsatisfiable assignment search reports failure") {
    std::string psi = write_input("unsat.psi",
                                  "psi 2 2 1\n"
                                  "hclass 1 0 1\n"
                                  "hclass 2 2 3\n"
                                  "hedge 1 2\n");
    RunResult r = run_cli("solve-psi \"" + psi + "\"");
    CHECK(r.exit_code == 1);
    CHECK(r.err == "no assignment\n");
    CHECK(r.out.empty());
}

TEST_CASE("cli: multicut pipeline from a planted instance") {
    RunResult gen = run_cli("gen-psi --n 2 --pattern 1-2,1-3 --seed 7");
    REQUIRE(gen.exit_code == 0);
    REQUIRE(starts_with(gen.out, "psi 2 3 2\n"));
    std::string psi = write_input("pipeline.psi", gen.out);

    RunResult hom = run_cli("solve-psi \"" + psi + "\"");
    REQUIRE(hom.exit_code == 0);
    REQUIRE(starts_with(hom.out, "hom "));
    std::string hom_file = write_input("pipeline.hom", hom.out);

    RunResult red = run_cli("reduce-dirmc \"" + psi + "\"");
    REQUIRE(red.exit_code == 0);
    REQUIRE(starts_with(red.out, "dirmc "));
    std::string inst = write_input("pipeline.dirmc", red.out);

    RunResult solved = run_cli("solve-dirmc \"" + inst + "\"");
    REQUIRE(solved.exit_code == 0);
    REQUIRE(starts_with(solved.out, "cut "));
    std::string cut = write_input("pipeline.cut", solved.out);

    RunResult verify = run_cli("verify-cut \"" + inst + "\" \"" + cut + "\"");
    CHECK(verify.exit_code == 0);
    CHECK(starts_with(verify.out, "valid multicut, weight "));

    RunResult extracted = run_cli("extract-dirmc \"" + inst + "\" \"" + cut + "\" \"" + psi + "\"");
    CHECK(extracted.exit_code == 0);
    CHECK(starts_with(extracted.out, "hom "));

    // The canonical witness cut meets the budget exactly: (6*2+1)*2 = 26.
    RunResult lifted = run_cli("lift-dirmc \"" + psi + "\" \"" + hom_file + "\" \"" + inst + "\"");
    REQUIRE(lifted.exit_code == 0);
    std::string lifted_cut = write_input("pipeline.lifted.cut", lifted.out);
    RunResult lifted_check = run_cli("verify-cut \"" + inst + "\" \"" + lifted_cut + "\"");
    CHECK(lifted_check.exit_code == 0);
    CHECK(lifted_check.out == "valid multicut, weight 26\n");

    RunResult dpw = run_cli("dpw-build \"" + inst + "\"");
    REQUIRE(dpw.exit_code == 0);
    std::string dpw_file = write_input("pipeline.dpw", dpw.out);
    RunResult width = run_cli("dpw-check \"" + inst + "\" \"" + dpw_file + "\"");
    CHECK(width.exit_code == 0);
    CHECK(width.out == "width 2\n");
}

TEST_CASE("cli: orientation pipeline from a planted instance") {
    RunResult gen = run_cli("gen-psi --n 2 --pattern 1-2 --seed 3");
    REQUIRE(gen.exit_code == 0);
    std::string psi = write_input("orient.psi", gen.out);

    RunResult hom = run_cli("solve-psi \"" + psi + "\"");
    REQUIRE(hom.exit_code == 0);
    std::string hom_file = write_input("orient.hom", hom.out);

    RunResult red = run_cli("reduce-stor \"" + psi + "\"");
    REQUIRE(red.exit_code == 0);
    REQUIRE(starts_with(red.out, "stor "));
    std::string inst = write_input("orient.stor", red.out);

    RunResult solved = run_cli("solve-stor \"" + inst + "\"");
    REQUIRE(solved.exit_code == 0);
    REQUIRE(starts_with(solved.out, "orient "));
    std::string orientation = write_input("orient.witness", solved.out);

    RunResult verify = run_cli("verify-orientation \"" + inst + "\" \"" + orientation + "\"");
    CHECK(verify.exit_code == 0);
    CHECK(verify.out == "valid orientation\n");

    RunResult extracted =
        run_cli("extract-stor \"" + inst + "\" \"" + orientation + "\" \"" + psi + "\"");
    CHECK(extracted.exit_code == 0);
    CHECK(starts_with(extracted.out, "hom "));

    RunResult lifted = run_cli("lift-stor \"" + psi + "\" \"" + hom_file + "\" \"" + inst + "\"");
    REQUIRE(lifted.exit_code == 0);
    std::string lifted_file = write_input("orient.lifted", lifted.out);
    RunResult lifted_check = run_cli("verify-orientation \"" + inst + "\" \"" + lifted_file + "\"");
    CHECK(lifted_check.exit_code == 0);
    CHECK(lifted_check.out == "valid orientation\n");
}

TEST_CASE("cli: round-trip comparisons agree on seeded samples") {
    RunResult dirmc = run_cli("roundtrip --problem dirmc --n 2 --kmax 1 --samples 5 --seed 11");
    CHECK(dirmc.exit_code == 0);
    CHECK(dirmc.out == "5/5 agree\n");
    RunResult stor = run_cli("roundtrip --problem stor --n 2 --kmax 1 --samples 3 --seed 4");
    CHECK(stor.exit_code == 0);
    CHECK(stor.out == "3/3 agree\n");
}

TEST_CASE("cli: cut witnesses are judged against instance and budget") {
    std::string inst = write_input("judge.dirmc", kTwoArcPath);
    std::string good = write_input("judge.good.cut", "cut 1\n");
    std::string bad = write_input("judge.bad.cut", "cut\n");
    RunResult ok = run_cli("verify-cut \"" + inst + "\" \"" + good + "\"");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out == "valid multicut, weight 1\n");
    RunResult rejected = run_cli("verify-cut \"" + inst + "\" \"" + bad + "\"");
    CHECK(rejected.exit_code == 1);
    CHECK(rejected.err == "not a multicut within the budget\n");
}

TEST_CASE("cli: separator commands on hand-written carriers") {
    std::string diamond = write_input("diamond.dirmc", kDiamond);
    RunResult minimal = run_cli("enum-minimal-cuts \"" + diamond + "\" --k 2");
    CHECK(minimal.exit_code == 0);
    CHECK(minimal.out ==
          "arcset 0:1 0:2\n"
          "arcset 0:1 2:3\n"
          "arcset 0:2 1:3\n"
          "arcset 1:3 2:3\n");

    RunResult important = run_cli("enum-impsep \"" + diamond + "\" --k 2");
    CHECK(important.exit_code == 0);
    CHECK(important.out == "arcset 1:3 2:3\n");

    RunResult stable = run_cli("audit-cutminimal \"" + diamond + "\" --k 2");
    CHECK(stable.exit_code == 0);
    CHECK(stable.out == "vertices 4 -> 4\nkept 0 1 2 3\n");

    std::string chorded = write_input("chorded.dirmc", kChordedPath);
    RunResult shrunk = run_cli("audit-cutminimal \"" + chorded + "\" --k 1");
    CHECK(shrunk.exit_code == 1);
    CHECK(shrunk.out == "vertices 3 -> 2\nkept 0 2\n");

    std::string path = write_input("path.dirmc", kTwoArcPath);
    RunResult violated = run_cli("wellinked-check \"" + path + "\" --terminals 0,1,2");
    CHECK(violated.exit_code == 1);
    CHECK(violated.out == "violation X=0 Y=2\n");
    RunResult linked = run_cli("wellinked-check \"" + path + "\" --terminals 0");
    CHECK(linked.exit_code == 0);
    CHECK(linked.out == "well-linked\n");
}

TEST_CASE("cli: sunflower families from a set file") {
    std::string family = write_input("family.sets",
                                     "# three sets sharing element 1\n"
                                     "set 1 2\n"
                                     "set 1 3\n"
                                     "set 1 4\n");
    RunResult found = run_cli("sunflower \"" + family + "\" --target 2");
    CHECK(found.exit_code == 0);
    CHECK(found.out ==
          "core 1\n"
          "petal 1 2\n"
          "petal 1 3\n"
          "petal 1 4\n");
    RunResult missing = run_cli("sunflower \"" + family + "\" --target 3");
    CHECK(missing.exit_code == 1);
    CHECK(missing.err == "no sunflower with more than 3 petals found\n");
}

TEST_CASE("cli: expanded instances remain parseable and solvable") {
    std::string inst = write_input("weighted.dirmc",
                                   "dirmc 3 1 3\n"
                                   "term 0 2\n"
                                   "w 1 3\n"
                                   "arc 0 1\n"
                                   "arc 1 2\n");
    RunResult expanded = run_cli("expand-weights \"" + inst + "\"");
    REQUIRE(expanded.exit_code == 0);
    REQUIRE(starts_with(expanded.out, "dirmc 5 1 3\n"));
    CHECK(expanded.out.find("# origin") != std::string::npos);
    std::string expanded_file = write_input("weighted.expanded.dirmc", expanded.out);

    RunResult solved = run_cli("solve-dirmc \"" + expanded_file + "\"");
    REQUIRE(solved.exit_code == 0);
    std::string cut = write_input("weighted.expanded.cut", solved.out);
    RunResult verify = run_cli("verify-cut \"" + expanded_file + "\" \"" + cut + "\"");
    CHECK(verify.exit_code == 0);
    CHECK(verify.out == "valid multicut, weight 3\n");
}
