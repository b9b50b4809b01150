// Runs the rfg executable and checks its output and exit codes.
#include <doctest.h>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run rfg(const std::string& args) {
  const std::string cmd = std::string(RFG_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::size_t lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

} // namespace

TEST_CASE("sample") {
  const Run a = rfg("sample mobius --n 3 --seed 1");
  const Run b = rfg("sample mobius --n 3 --seed 1");
  CHECK(a.code == 0);
  CHECK(lines(a.out) == 3);
  CHECK(a.out == b.out);
  std::istringstream in(a.out);
  std::string line;
  while (std::getline(in, line)) CHECK(nlohmann::json::parse(line).contains("a_re"));

  CHECK(rfg("sample mobius --n 3 --seed 2").out != a.out);
  CHECK(lines(rfg("sample arc --n 4 --format csv").out) == 5);
  CHECK(nlohmann::json::parse(rfg("sample hyperbolic --n 2 --format json").out).size() == 2);
  CHECK(rfg("sample nothing --n 2").code == 2);
}

TEST_CASE("pdf table matches the mass of its range") {
  const Run r = rfg("pdf beta --from -3.9 --to 10 --step 0.01");
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "x,density");
  double last_x = 0, last_y = 0, area = 0;
  bool first = true;
  while (std::getline(in, line)) {
    const auto comma = line.find(',');
    const double x = std::stod(line.substr(0, comma));
    const double y = std::stod(line.substr(comma + 1));
    if (!first) area += (x - last_x) * (y + last_y) / 2;
    first = false;
    last_x = x;
    last_y = y;
  }
  // the table omits (-4, -3.9) and the heavy tail beyond 10, so compare with
  // the mass of [-3.9, 10] from the closed form
  auto g = [](double b) {
    const double v = std::sqrt(b + 4);
    // (v + 2) / (v - 2) = (v + 2)^2 / b
    return std::log((v + 2) * (v + 2) / std::abs(b)) / (9.869604401089358 * (b + 4));
  };
  boost::math::quadrature::tanh_sinh<double> q;
  const double mass = q.integrate(g, -3.9, 0.0) + q.integrate(g, 0.0, 10.0);
  CHECK(mass == doctest::Approx(0.68).epsilon(0.05));
  CHECK(std::abs(area - mass) < 0.01);
  CHECK(rfg("pdf nope --from 0 --to 1 --step 0.1").code == 2);
}

TEST_CASE("experiment run") {
  const Run r = rfg("experiment run axes-cross --n 200000 --seed 7");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  const double p = j["results"][0]["p_hat"];
  CHECK(p == doctest::Approx(0.4296).epsilon(0.01));
  CHECK(j["seed"] == 7);

  CHECK(rfg("experiment run nope").code == 2);
  CHECK(rfg("experiment run chords-cross --n 10").code == 2);
  CHECK(rfg("experiment list").code == 0);
  // an asserted target that misses exits 1
  CHECK(rfg("experiment run equal-length-pairs-3 --n 1000000 --seed 1").code == 1);
}

TEST_CASE("verdict") {
  const std::string path = "cli_test_generators.jsonl";
  {
    std::ofstream out(path);
    out << rfg("sample hyperbolic --n 2 --seed 5").out;
  }
  const Run r = rfg("verdict --in " + path);
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).contains("status"));
  {
    std::ofstream out(path);
    out << "{broken\n";
  }
  CHECK(rfg("verdict --in " + path).code == 2);
  std::remove(path.c_str());
}

TEST_CASE("usage errors") {
  CHECK(rfg("").code == 2);
  CHECK(rfg("bogus").code == 2);
  CHECK(rfg("verify --level sideways").code == 2);
  CHECK(rfg("verify --level quick --criterion 4").code == 0);
}
