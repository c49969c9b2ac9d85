#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "aqw/angles.hpp"
#include "aqw/cli.hpp"
#include "aqw/reproduce.hpp"

using namespace aqw;
namespace fs = std::filesystem;

namespace {

int run(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"aqw"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) out.push_back(line);
  return out;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("aqw_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { std::error_code ec; fs::remove_all(path, ec); }
};

}  // namespace

TEST_CASE("angle literals") {
  SUBCASE("round-trip for rational multiples of pi") {
    for (const char* lit : {"0", "pi", "2pi", "pi/2", "5pi/16", "19pi/16", "-3pi/4", "11pi/8"}) {
      const Angle a = parse_angle(lit);
      const Angle b = parse_angle(format_angle(a));
      CHECK(b.rational == a.rational);
      CHECK(b.num == a.num);
      CHECK(b.den == a.den);
      CHECK(b.value == a.value);
    }
    CHECK(format_angle(parse_angle("5pi/16")) == "5pi/16");
    CHECK(format_angle(parse_angle("2pi/4")) == "pi/2");  // reduced form
  }
  SUBCASE("decimals parse as plain radians") {
    CHECK(parse_angle("1.5").value == doctest::Approx(1.5));
    CHECK(parse_angle("-0.25").value == doctest::Approx(-0.25));
    CHECK(parse_angle("3").value == doctest::Approx(3.0));
    CHECK_FALSE(parse_angle("1.5").rational);
  }
  SUBCASE("values match the pi arithmetic") {
    CHECK(parse_angle("5pi/16").value == doctest::Approx(5 * M_PI / 16).epsilon(1e-16));
    CHECK(parse_angle("2pi").value == doctest::Approx(2 * M_PI).epsilon(1e-16));
  }
  SUBCASE("malformed literals throw") {
    for (const char* bad : {"pie", "pi/", "/4", "", "pi/0", "2x", "1.2.3", "pi2", "--"})
      CHECK_THROWS_AS(parse_angle(bad), std::invalid_argument);
  }
}

TEST_CASE("evolve command") {
  TempDir tmp;
  const std::string out = (tmp.path / "state.csv").string();

  SUBCASE("two steps of the first 3-way coin: 12 nonzero amplitudes") {
    CHECK(run({"evolve", "--coin", "5pi/16,pi/2,pi/2", "--theta", "pi/2", "--phi", "pi",
               "--steps", "2", "--out", out}) == 0);
    const auto lines = lines_of(slurp(out));
    REQUIRE(!lines.empty());
    CHECK(lines[0] == "x,y,c,re,im");
    // sites on the y=-t edge hold only coin 0 and on y=+t only coin 1,
    // so 12 of the 18 parity slots are populated
    CHECK(lines.size() == 1 + 12);
  }
  SUBCASE("steps 0 keeps the localized state") {
    CHECK(run({"evolve", "--coin", "H", "--theta", "pi/2", "--phi", "0", "--steps", "0", "--out",
               out}) == 0);
    CHECK(lines_of(slurp(out)).size() == 1 + 2);
    CHECK(run({"evolve", "--coin", "H", "--theta", "0", "--phi", "0", "--steps", "0", "--out",
               out}) == 0);
    CHECK(lines_of(slurp(out)).size() == 1 + 1);
  }
  SUBCASE("malformed angle exits with the usage code") {
    CHECK(run({"evolve", "--theta", "pie", "--out", out}) == 2);
  }
  SUBCASE("unknown flag exits with the usage code") {
    CHECK(run({"evolve", "--bogus", "1"}) == 2);
  }
}

TEST_CASE("measure command") {
  TempDir tmp;
  const std::string out = (tmp.path / "measure.csv").string();

  SUBCASE("averaged 3-way measure over ten steps") {
    CHECK(run({"measure", "--measure", "piav", "--coin", "M1", "--phi", "pi", "--steps", "10",
               "--out", out}) == 0);
    const auto lines = lines_of(slurp(out));
    REQUIRE(lines.size() == 1 + 10);
    CHECK(lines[0] == "t,theta,phi,measure,value");
    // last row: t=10 value
    double value = 0.0;
    int t = 0;
    std::sscanf(lines.back().c_str(), "%d,,%*[^,],piav,%lf", &t, &value);
    CHECK(t == 10);
    CHECK(value == doctest::Approx(30.6639).epsilon(0.01));
  }
  SUBCASE("averaged 2-way measure over ten steps") {
    CHECK(run({"measure", "--measure", "Nav", "--coin", "G1", "--phi", "pi", "--steps", "10",
               "--out", out}) == 0);
    const auto lines = lines_of(slurp(out));
    REQUIRE(lines.size() == 1 + 10);
    double value = 0.0;
    int t = 0;
    std::sscanf(lines.back().c_str(), "%d,,%*[^,],Nav,%lf", &t, &value);
    CHECK(t == 10);
    CHECK(value == doctest::Approx(2.7089).epsilon(0.01));
  }
  SUBCASE("steps 0 emits only the header") {
    CHECK(run({"measure", "--measure", "N", "--coin", "H", "--steps", "0", "--out", out}) == 0);
    CHECK(lines_of(slurp(out)).size() == 1);
  }
  SUBCASE("unknown measure exits with the usage code") {
    CHECK(run({"measure", "--measure", "entropy", "--out", out}) == 2);
  }
}

TEST_CASE("sweep command") {
  TempDir tmp;
  const std::string out = (tmp.path / "sweep.csv").string();

  SUBCASE("the documented 33x33 3-way sweep finds the plateau") {
    CHECK(run({"sweep", "--vary", "phi:33,alpha:33", "--fix", "beta=pi/2,gamma=pi/2",
               "--measure", "piav", "--steps", "2", "--out", out, "--workers", "2"}) == 0);
    const auto lines = lines_of(slurp(out));
    REQUIRE(lines.size() == 1 + 33 * 33);
    double best = 0.0;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      double v = 0.0;
      const auto pos = lines[i].rfind(',');
      v = std::stod(lines[i].substr(pos + 1));
      best = std::max(best, v);
    }
    CHECK(best == doctest::Approx(2.0656).epsilon(0.01));
  }
  SUBCASE("zero-size grids are rejected") {
    CHECK(run({"sweep", "--vary", "phi:0,alpha:4", "--fix", "beta=0,gamma=0", "--measure",
               "Nav"}) == 2);
    CHECK(run({"sweep", "--vary", "", "--measure", "Nav"}) == 2);
  }
  SUBCASE("bad measure is rejected") {
    CHECK(run({"sweep", "--vary", "phi:4,alpha:4", "--fix", "beta=0,gamma=0", "--measure",
               "pi"}) == 2);
  }
}

TEST_CASE("verify command") {
  TempDir tmp;
  const std::string out = (tmp.path / "report.csv").string();

  SUBCASE("gme suite passes and writes the report") {
    CHECK(run({"verify", "--suite", "gme", "--out", out}) == 0);
    const auto lines = lines_of(slurp(out));
    CHECK(lines[0] == "check,case,expected,actual,pass");
    bool c4 = false;
    for (const auto& l : lines)
      if (l.rfind("C4", 0) == 0) c4 = true;
    CHECK(c4);
  }
  SUBCASE("ckw suite passes") {
    CHECK(run({"verify", "--suite", "ckw", "--samples", "10", "--tmax", "3", "--seed", "7"}) == 0);
  }
  SUBCASE("oracle suite passes") {
    CHECK(run({"verify", "--suite", "oracle", "--samples", "10", "--tmax", "4"}) == 0);
  }
  SUBCASE("unknown suite exits with the usage code") {
    CHECK(run({"verify", "--suite", "nope"}) == 2);
  }
}

TEST_CASE("reproduce command") {
  TempDir tmp;

  SUBCASE("figure target emits csv and plot data") {
    CHECK(run({"reproduce", "figS6", "--max-t", "3", "--out-dir", tmp.path.string()}) == 0);
    const auto csv = lines_of(slurp(tmp.path / "figS6.csv"));
    CHECK(csv[0] == "series,x,y");
    CHECK(csv.size() == 1 + 3 * 3);  // three series, t = 1..3
    const std::string dat = slurp(tmp.path / "figS6.dat");
    CHECK(dat.find("\n\n") != std::string::npos);  // blank-line separated blocks
  }
  SUBCASE("unknown target lists the available names") {
    CHECK(run({"reproduce", "figZZ", "--out-dir", tmp.path.string()}) == 2);
  }
  SUBCASE("target listing") { CHECK(run({"reproduce", "--list"}) == 0); }
}

TEST_CASE("config file supplies defaults and flags override") {
  TempDir tmp;
  const std::string cfg = (tmp.path / "run.cfg").string();
  const std::string out = (tmp.path / "out.csv").string();
  {
    std::ofstream os(cfg);
    os << "[evolve]\n";
    os << "coin=H\n";
    os << "theta=pi/2\n";
    os << "steps=0\n";
    os << "out=" << out << "\n";
  }
  CHECK(run({"--config", cfg, "evolve"}) == 0);
  CHECK(lines_of(slurp(out)).size() == 1 + 2);
  // --theta 0 overrides the config's pi/2: only one nonzero amplitude remains
  CHECK(run({"--config", cfg, "evolve", "--theta", "0"}) == 0);
  CHECK(lines_of(slurp(out)).size() == 1 + 1);
}

TEST_CASE("reference 2-way series peaks where expected") {
  // full theta scan at t=15
  const FigureData fig = reproduce_figure("fig3b", -1, 33);
  REQUIRE(fig.series.size() == 2);
  const auto& g1 = fig.series[0];
  REQUIRE(g1.x.size() == 33);
  std::size_t peak = 0;
  for (std::size_t i = 0; i < g1.y.size(); ++i)
    if (g1.y[i] > g1.y[peak]) peak = i;
  CHECK(peak == 16);  // theta = pi/2
  CHECK(g1.y[peak] == doctest::Approx(4.4429).epsilon(0.001));
}

TEST_CASE("averaged 3-way figure starts on the documented values") {
  const FigureData fig = reproduce_figure("fig2a", 2, 33);
  REQUIRE(fig.series.size() == 2);
  REQUIRE(fig.series[0].y.size() == 2);
  CHECK(fig.series[0].y[1] == doctest::Approx(2.0656).epsilon(0.01));
}
