// tgk: validate, build, classify and operate on torus graphs stored as JSON.
//
// Exit codes: 0 success, 1 validation failure, 2 parse error, 3 internal
// invariant violation. JSON goes to stdout (or -o), diagnostics to stderr.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "tgk/classifier.hpp"
#include "tgk/error.hpp"
#include "tgk/io.hpp"

namespace {

using tgk::Error;
using tgk::ErrorKind;
using tgk::io::Json;

enum Exit { kOk = 0, kValidation = 1, kParse = 2, kInternal = 3 };

struct Options {
  std::vector<std::string> inputs;
  std::string output;
  std::string format = "json";
  std::string dedup = "exact";
  std::string lambda;
  std::int64_t bound = 1;
  int shards = 1;
  int shard = 0;
  std::vector<int> cut;
  int p = -1;
  int q = -1;
  bool twisted = false;
  bool no_verify = false;
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
}

const std::string& input(const Options& o, std::size_t i) {
  if (o.inputs.size() <= i) throw Error(ErrorKind::InvalidInput, "expected " + std::to_string(i + 1) + " input file(s)");
  return o.inputs[i];
}

tgk::EquivalenceMode mode_of(const Options& o) {
  return o.dedup == "lifts" ? tgk::EquivalenceMode::sign_lifts : tgk::EquivalenceMode::exact;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Error(ErrorKind::InvalidInput, "cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

void emit(Output& out, const Json& j) { out.stream() << j.dump(2) << '\n'; }

int run_validate(const Options& o, Output& out) {
  const Json j = read_json(input(o, 0));
  Json report;
  bool ok = true;
  std::vector<std::string> messages;
  if (j.contains("axial")) {
    const tgk::TorusGraph tg = tgk::io::torus_graph_from_json(j);
    auto diag = tgk::validate_torus_graph(tg);
    auto nice = tgk::validate_nice(tg.graph());
    ok = diag.ok && nice.ok;
    messages = diag.messages;
    messages.insert(messages.end(), nice.messages.begin(), nice.messages.end());
    report["kind"] = "torus graph";
    report["vertices"] = tg.vertex_count();
    report["oriented"] = tg.oriented();
  } else {
    const tgk::RotationGraph g = tgk::io::graph_from_json(j);
    auto nice = tgk::validate_nice(g);
    ok = nice.ok;
    messages = nice.messages;
    report["kind"] = "rotation graph";
    report["vertices"] = g.vertex_count();
    report["facets"] = g.facet_count();
  }
  const std::string summary = std::string(ok ? "valid " : "invalid ") + report["kind"].get<std::string>() + ", " +
                              std::to_string(report["vertices"].get<int>()) + " vertices";
  report["valid"] = ok;
  report["message"] = summary;
  report["diagnostics"] = messages;
  for (const auto& m : messages) spdlog::warn("{}", m);
  std::cerr << summary << '\n';
  emit(out, report);
  return ok ? kOk : kValidation;
}

int run_build(const Options& o, Output& out) {
  const tgk::RotationGraph g = tgk::io::graph_from_json(read_json(input(o, 0)));
  if (o.lambda.empty()) throw Error(ErrorKind::InvalidInput, "build needs --lambda");
  const auto lam = tgk::io::characteristic_from_json(read_json(o.lambda));
  tgk::TorusGraph tg = tgk::from_characteristic(g, lam);
  try {
    tg = tgk::synthesize_orientation(tg);
  } catch (const Error& e) {
    spdlog::warn("no orientation: {}", e.what());
  }
  tgk::require_valid(tg);
  if (o.format == "dot") {
    out.stream() << tgk::to_dot(tg);
  } else {
    emit(out, tgk::io::to_json(tg));
  }
  return kOk;
}

int run_classify(const Options& o, Output& out) {
  const tgk::TorusGraph tg = tgk::io::torus_graph_from_json(read_json(input(o, 0)));
  tgk::ClassifyOptions options;
  options.mode = mode_of(o);
  options.verify = !o.no_verify;
  const tgk::DecompositionTree tree = tgk::classify(tg, options);
  std::cerr << tree.summary() << '\n';
  if (o.format == "dot") {
    out.stream() << tgk::io::tree_to_dot(tree);
  } else {
    emit(out, Json{{"summary", tree.summary()}, {"tree", tgk::io::to_json(tree)}});
  }
  return kOk;
}

int run_sum(const Options& o, Output& out) {
  const tgk::TorusGraph a = tgk::io::torus_graph_from_json(read_json(input(o, 0)));
  const tgk::TorusGraph b = tgk::io::torus_graph_from_json(read_json(input(o, 1)));
  const auto sites = tgk::find_sum_sites(a, b);
  std::optional<tgk::SumSite> site;
  for (const auto& s : sites) {
    if ((o.p < 0 || s.p == o.p) && (o.q < 0 || s.q == o.q)) {
      site = s;
      break;
    }
  }
  if (!site) throw Error(ErrorKind::InadmissibleSite, "no admissible site with the requested vertices");
  const auto result = tgk::connected_sum(a, b, *site);
  if (o.format == "dot") {
    out.stream() << tgk::to_dot(result.graph);
  } else {
    emit(out, Json{{"graph", tgk::io::to_json(result.graph)}, {"record", tgk::io::to_json(result.record)}});
  }
  return kOk;
}

int run_split(const Options& o, Output& out) {
  const tgk::TorusGraph tg = tgk::io::torus_graph_from_json(read_json(input(o, 0)));
  const tgk::TorusGraph oriented = tg.oriented() ? tg : tgk::synthesize_orientation(tg);
  if (o.cut.empty()) {
    emit(out, Json{{"cuts", tgk::find_splits(oriented)}});
    return kOk;
  }
  if (o.cut.size() != 3) throw Error(ErrorKind::InvalidInput, "--cut takes three edge ids");
  const auto result = tgk::split(oriented, {o.cut[0], o.cut[1], o.cut[2]});
  if (o.format == "dot") {
    out.stream() << tgk::to_dot(result.left) << tgk::to_dot(result.right);
  } else {
    emit(out, Json{{"left", tgk::io::to_json(result.left)},
                   {"right", tgk::io::to_json(result.right)},
                   {"record", tgk::io::to_json(result.record)}});
  }
  return kOk;
}

int run_iso(const Options& o, Output& out) {
  const tgk::TorusGraph a = tgk::io::torus_graph_from_json(read_json(input(o, 0)));
  const tgk::TorusGraph b = tgk::io::torus_graph_from_json(read_json(input(o, 1)));
  Json j;
  if (o.twisted) {
    const auto iso = tgk::is_equivalent_twisted(a, b);
    j["equivalent"] = iso.has_value();
    if (iso) {
      j.update(tgk::io::to_json(iso->map));
      Json rows = Json::array();
      for (std::size_t r = 0; r < 3; ++r) {
        rows.push_back(Json::array({tgk::io::to_json(iso->basis_change(r, 0)), tgk::io::to_json(iso->basis_change(r, 1)),
                                    tgk::io::to_json(iso->basis_change(r, 2))}));
      }
      j["basis_change"] = rows;
    }
  } else {
    const auto iso = tgk::is_equivalent(a, b, mode_of(o));
    j["equivalent"] = iso.has_value();
    if (iso) j.update(tgk::io::to_json(*iso));
  }
  emit(out, j);
  return kOk;
}

int run_enumerate(const Options& o, Output& out) {
  const tgk::RotationGraph g = tgk::io::graph_from_json(read_json(input(o, 0)));
  tgk::EnumerateOptions options;
  options.bound = o.bound;
  options.shards = o.shards;
  options.shard = o.shard;
  if (o.dedup == "lifts" || o.dedup == "exact") options.dedup = mode_of(o);
  std::size_t count = 0;
  tgk::enumerate_characteristic(g, options, [&](const tgk::CharacteristicData& lam) {
    out.stream() << tgk::io::to_json(lam).dump() << '\n';
    ++count;
    return true;
  });
  spdlog::info("{} characteristic functions", count);
  return kOk;
}

void configure_logging() {
  auto logger = spdlog::stderr_color_mt("tgk");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  if (const char* level = std::getenv("TGK_LOG")) spdlog::set_level(spdlog::level::from_str(level));
}

}  // namespace

int main(int argc, char** argv) {
  configure_logging();
  CLI::App app{"Torus graph toolkit"};
  app.require_subcommand(1);
  Options o;

  auto add_io = [&](CLI::App* cmd, bool formats) {
    cmd->add_option("-i,--input", o.inputs, "Input JSON file(s)")->required();
    cmd->add_option("-o,--output", o.output, "Write output here instead of stdout");
    if (formats) cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "dot"}));
  };
  auto* validate = app.add_subcommand("validate", "Check a rotation graph or torus graph");
  add_io(validate, false);
  auto* build = app.add_subcommand("build", "Torus graph from a rotation graph and facet vectors");
  add_io(build, true);
  build->add_option("-l,--lambda", o.lambda, "Facet vectors, in facet order")->required();
  auto* classify = app.add_subcommand("classify", "Decompose into basic torus graphs");
  add_io(classify, true);
  classify->add_option("--dedup", o.dedup, "Equivalence used for verification")->check(CLI::IsMember({"exact", "lifts"}));
  classify->add_flag("--no-verify", o.no_verify, "Skip folding the tree back");
  auto* sum = app.add_subcommand("sum", "Connected sum of two oriented torus graphs");
  add_io(sum, true);
  sum->add_option("--p", o.p, "Vertex of the first graph");
  sum->add_option("--q", o.q, "Vertex of the second graph");
  auto* split = app.add_subcommand("split", "Split along a 3-edge cut, or list admissible cuts");
  add_io(split, true);
  split->add_option("--cut", o.cut, "Three edge ids")->delimiter(',');
  auto* iso = app.add_subcommand("iso", "Equivalence of two torus graphs");
  add_io(iso, false);
  iso->add_option("--dedup", o.dedup, "exact or lifts")->check(CLI::IsMember({"exact", "lifts"}));
  iso->add_flag("--twisted", o.twisted, "Allow a change of lattice basis");
  auto* enumerate = app.add_subcommand("enumerate", "Stream characteristic functions as JSON lines");
  add_io(enumerate, false);
  enumerate->add_option("--bound", o.bound, "Coordinate bound")->check(CLI::NonNegativeNumber);
  enumerate->add_option("--dedup", o.dedup, "none, exact or lifts")->check(CLI::IsMember({"none", "exact", "lifts"}));
  enumerate->add_option("--shards", o.shards, "Number of shards")->check(CLI::PositiveNumber);
  enumerate->add_option("--shard", o.shard, "Shard index")->check(CLI::NonNegativeNumber);

  bool dedup_given = false;
  try {
    app.parse(argc, argv);
    dedup_given = enumerate->count("--dedup") > 0;
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kParse;
  }
  if (enumerate->parsed() && !dedup_given) o.dedup = "none";

  try {
    Output out(o.output);
    if (validate->parsed()) return run_validate(o, out);
    if (build->parsed()) return run_build(o, out);
    if (classify->parsed()) return run_classify(o, out);
    if (sum->parsed()) return run_sum(o, out);
    if (split->parsed()) return run_split(o, out);
    if (iso->parsed()) return run_iso(o, out);
    if (enumerate->parsed()) return run_enumerate(o, out);
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::ParseError: return kParse;
      case ErrorKind::InternalInvariantViolation: return kInternal;
      default: return kValidation;
    }
  } catch (const std::exception& e) {
    std::cerr << "unexpected failure: " << e.what() << '\n';
    return kInternal;
  }
  return kOk;
}
