#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

const std::string kCli = FOLIACOH_CLI;
const std::string kData = FOLIACOH_TEST_DATA;

fs::path scratch() {
  fs::path dir(FOLIACOH_SCRATCH);
  fs::create_directories(dir);
  return dir;
}

int run(const std::string& args, const fs::path& out = {}) {
  std::string cmd = "\"" + kCli + "\" " + args;
  cmd += out.empty() ? " > /dev/null" : " > \"" + out.string() + "\"";
  cmd += " 2> /dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("cohomology of a product model") {
  const fs::path out = scratch() / "circle3.json";
  REQUIRE(run("cohomology \"" + kData + "/circle3.json\" --out \"" + out.string() + "\"") == 0);
  const std::string text = slurp(out);
  CHECK(text.find("\"verdict\": \"pass\"") != std::string::npos);
  CHECK(run("cohomology \"" + kData + "/circle3.json\" --cover \"0,1;1,2\"") == 0);
}

TEST_CASE("input errors exit with 1") {
  CHECK(run("cohomology \"" + kData + "/malformed.json\"") == 1);
  CHECK(run("cohomology \"" + kData + "/missing_subtuple.json\"") == 1);
  CHECK(run("cohomology \"" + kData + "/no_such_file.json\"") == 1);
  CHECK(run("cohomology \"" + kData + "/circle3.json\" --cover \"0;7\"") == 1);
  CHECK(run("les --map \"" + kData + "/bad_map.json\"") == 1);
  CHECK(run("pendulum molecule --energy 1") == 1);
  CHECK(run("pendulum critical") == 1);
  CHECK(run("no-such-command") == 1);
}

TEST_CASE("random leaf maps are reproducible") {
  const fs::path a = scratch() / "les_a.json";
  const fs::path b = scratch() / "les_b.json";
  REQUIRE(run("les --seed 7 --out \"" + a.string() + "\"") == 0);
  REQUIRE(run("les --seed 7 --out \"" + b.string() + "\"") == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a).find("\"verdict\": \"pass\"") != std::string::npos);
  CHECK(run("les --map \"" + kData + "/rotation_map.json\"") == 0);
}

TEST_CASE("pendulum subcommands") {
  const fs::path dir = scratch();
  REQUIRE(run("pendulum bifurcation --alpha-range 1:3:100", dir / "bif.csv") == 0);
  const std::string csv = slurp(dir / "bif.csv");
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "alpha,E,I");
  std::getline(lines, line);
  CHECK(line == "1,-1,0");
  std::size_t rows = 2;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 101);

  REQUIRE(run("pendulum critical --energy 0.5", dir / "crit.json") == 0);
  CHECK(slurp(dir / "crit.json").find("2.02001132315") != std::string::npos);

  REQUIRE(run("pendulum molecule --energy 0.5", dir / "mol.dot") == 0);
  const std::string dot = slurp(dir / "mol.dot");
  CHECK(dot.rfind("graph", 0) == 0);
  CHECK(dot.find("r=0") != std::string::npos);
  REQUIRE(run("pendulum molecule --energy 2", dir / "mol2.dot") == 0);
  CHECK(slurp(dir / "mol2.dot").find("r=1/2") != std::string::npos);

  REQUIRE(run("pendulum h0 --energy 0.5 --grid 5", dir / "h0.json") == 0);
  CHECK(slurp(dir / "h0.json").find("\"h0_dimension\": 7") != std::string::npos);

  REQUIRE(run("pendulum discrepancy", dir / "disc.csv") == 0);
  CHECK(slurp(dir / "disc.csv").rfind("e,oracle_phi0", 0) == 0);
}
