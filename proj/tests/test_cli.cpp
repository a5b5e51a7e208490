#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "fixtures.hpp"
#include "maps.hpp"
#include "tgk/io.hpp"

using namespace tgk;
using namespace tgk::testing;
using tgk::io::Json;

namespace {

namespace fs = std::filesystem;

struct Run {
  int status = -1;
  std::string out;
};

fs::path workdir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("tgk_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write(const std::string& name, const Json& j) {
  const fs::path p = workdir() / name;
  std::ofstream(p) << j.dump();
  return p.string();
}

std::string write_text(const std::string& name, const std::string& text) {
  const fs::path p = workdir() / name;
  std::ofstream(p) << text;
  return p.string();
}

Run run(const std::string& args) {
  const fs::path out = workdir() / "stdout.txt";
  const std::string cmd = std::string(TGK_CLI_PATH) + " " + args + " > " + out.string() + " 2>/dev/null";
  const int raw = std::system(cmd.c_str());
  Run r;
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::stringstream ss;
  ss << std::ifstream(out).rdbuf();
  r.out = ss.str();
  return r;
}

}  // namespace

TEST_CASE("validate") {
  const auto good = write("simplex.json", io::to_json(simplex()));
  Run r = run("validate -i " + good);
  CHECK(r.status == 0);
  CHECK(Json::parse(r.out)["valid"] == true);

  const auto bad = write("degenerate.json", io::to_json(gamma_sp(cov(1, 0, 0), cov(0, 1, 0), cov(1, 1, 0))));
  r = run("validate -i " + bad);
  CHECK(r.status == 1);
  CHECK(Json::parse(r.out)["valid"] == false);

  CHECK(run("validate -i " + write_text("broken.json", "{\"vertices\": ")).status == 2);
  CHECK(run("validate").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("validate -i " + (workdir() / "missing.json").string()).status == 2);
}

TEST_CASE("build produces the simplex torus graph") {
  const auto g = write("k4.json", io::to_json(k4()));
  const auto lam = write("lambda.json", io::to_json(simplex_characteristic()));
  const Run r = run("build -i " + g + " --lambda " + lam);
  REQUIRE(r.status == 0);
  const TorusGraph built = io::torus_graph_from_json(Json::parse(r.out));
  CHECK(is_equivalent(built, simplex()).has_value());

  const auto bad_lam = write("bad_lambda.json", Json::parse("[[1,0,0],[0,1,0],[0,0,1],[1,1,0]]"));
  CHECK(run("build -i " + g + " --lambda " + bad_lam).status == 1);
}

TEST_CASE("classify the three-piece example") {
  const auto f = write("fig4.json", io::to_json(figure4()));
  Run r = run("classify -i " + f);
  REQUIRE(r.status == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["summary"] == "QT×2 SB×1");
  CHECK(io::tree_from_json(j["tree"]).leaf_count() == 3);
  r = run("classify -i " + f + " --format dot");
  CHECK(r.status == 0);
  CHECK(r.out.find("digraph") != std::string::npos);
}

TEST_CASE("sum, split and iso") {
  const auto x = write("x.json", io::to_json(simplex()));
  std::vector<int> s = *simplex().sigma_map();
  for (int& v : s) v = -v;
  const auto y = write("y.json", io::to_json(simplex().with_sigma(s)));
  Run r = run("sum -i " + x + " -i " + y);
  REQUIRE(r.status == 0);
  const Json sum = Json::parse(r.out);
  const auto g = write("sum.json", sum["graph"]);
  CHECK(io::torus_graph_from_json(sum["graph"]).vertex_count() == 6);

  r = run("split -i " + g);
  REQUIRE(r.status == 0);
  const Json cuts = Json::parse(r.out)["cuts"];
  REQUIRE(cuts.size() >= 1);
  const auto& c = cuts[0];
  r = run("split -i " + g + " --cut " + std::to_string(c[0].get<int>()) + "," + std::to_string(c[1].get<int>()) + "," +
          std::to_string(c[2].get<int>()));
  REQUIRE(r.status == 0);
  const Json parts = Json::parse(r.out);
  CHECK(io::torus_graph_from_json(parts["left"]).vertex_count() == 4);

  CHECK(run("sum -i " + x + " -i " + x).status == 1);
  r = run("iso -i " + g + " -i " + g);
  CHECK(r.status == 0);
  CHECK(Json::parse(r.out)["equivalent"] == true);
  r = run("iso -i " + x + " -i " + g);
  CHECK(Json::parse(r.out)["equivalent"] == false);
}

TEST_CASE("enumerate") {
  const auto t = write("theta.json", io::to_json(theta()));
  Run r = run("enumerate -i " + t + " --bound 0");
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  r = run("enumerate -i " + t + " --bound 1 --dedup none");
  CHECK(r.status == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') > 0);
}
