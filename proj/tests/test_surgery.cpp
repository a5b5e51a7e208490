#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "maps.hpp"
#include "tgk/error.hpp"
#include "tgk/surgery.hpp"

using namespace tgk;
using namespace tgk::testing;

namespace {

const LatticeCovector e1s = cov(1, 0, 0), e2s = cov(0, 1, 0), e3s = cov(0, 0, 1);

ErrorKind error_of(auto&& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InternalInvariantViolation;
}

TorusGraph flipped(const TorusGraph& tg) {
  std::vector<int> s = *tg.sigma_map();
  for (int& x : s) x = -x;
  return tg.with_sigma(s);
}

void check_sum(const TorusGraph& a, const TorusGraph& b, const SumResult& r) {
  const RotationGraph& g = r.graph.graph();
  CHECK(r.graph.vertex_count() == a.vertex_count() + b.vertex_count() - 2);
  CHECK(g.edge_count() == a.graph().edge_count() + b.graph().edge_count() - 3);
  CHECK(g.facet_count() == a.graph().facet_count() + b.graph().facet_count() - 3);
  CHECK(validate_torus_graph(r.graph).ok);
  for (DartId d : r.record.joins) {
    const LatticeCovector s = Integer(r.graph.sigma(g.origin(d))) * r.graph.axial(d) +
                              Integer(r.graph.sigma(g.head(d))) * r.graph.axial(g.reverse(d));
    CHECK(s.is_zero());
  }
  for (VertexId v = 0; v < a.vertex_count(); ++v) {
    const VertexId w = r.record.left_map[v];
    CHECK((v == r.record.site.p) == (w == -1));
    if (w >= 0) CHECK(r.graph.sigma(w) == a.sigma(v));
  }
  for (VertexId v = 0; v < b.vertex_count(); ++v) {
    const VertexId w = r.record.right_map[v];
    CHECK((v == r.record.site.q) == (w == -1));
    if (w >= 0) CHECK(r.graph.sigma(w) == b.sigma(v));
  }
}

}  // namespace

TEST_CASE("sum sites") {
  const TorusGraph sp = gamma_sp(e1s, e2s, e3s);
  const auto sites = find_sum_sites(sp, sp);
  CHECK(sites.size() == 2);
  for (const auto& s : sites) CHECK(sp.sigma(s.p) != sp.sigma(s.q));
  CHECK(find_sum_sites(sp, gamma_sp(e1s, e2s, e1s + e2s + e3s)).empty());
  const TorusGraph x = simplex();
  CHECK(find_sum_sites(x, x).empty());
  CHECK_FALSE(find_sum_sites(x, flipped(x)).empty());
  for (const auto& s : find_sum_sites(x, flipped(x))) {
    for (int i = 0; i < 3; ++i) CHECK(x.axial(x.graph().darts_at(s.p)[i]) == x.axial(s.matching[i]));
  }
}

TEST_CASE("sum of two product-of-spheres graphs") {
  const TorusGraph sp = gamma_sp(e1s, e2s, e3s);
  const auto sites = find_sum_sites(sp, sp);
  REQUIRE_FALSE(sites.empty());
  const SumResult r = connected_sum(sp, sp, sites[0]);
  check_sum(sp, sp, r);
  CHECK(is_equivalent(r.graph, sp).has_value());
}

TEST_CASE("inadmissible sites are rejected") {
  const TorusGraph x = simplex();
  const SumSite same{0, 0, x.graph().darts_at(0)};
  CHECK(error_of([&] { connected_sum(x, x, same); }) == ErrorKind::InadmissibleSite);
  const TorusGraph y = flipped(x);
  const auto& d = x.graph().darts_at(0);
  const SumSite wrong{0, 0, {d[1], d[0], d[2]}};
  CHECK(error_of([&] { connected_sum(x, y, wrong); }) == ErrorKind::InadmissibleSite);
  CHECK(error_of([&] { connected_sum(x.with_sigma(std::nullopt), y, SumSite{0, 0, d}); }) ==
        ErrorKind::InadmissibleSite);
}

TEST_CASE("random sums keep the bookkeeping and validate") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    const RandomSum s = random_sum(rng, 2 + i % 3);
    REQUIRE(s.last.has_value());
    CHECK(validate_torus_graph(s.graph).ok);
    CHECK(validate_nice(s.graph.graph()).ok);
    CHECK(s.graph.vertex_count() == s.last_left->vertex_count() + s.last_right->vertex_count() - 2);
  }
}

TEST_CASE("split inverts the recorded sum") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 200; ++i) {
    const RandomSum s = random_sum(rng, 2 + i % 3);
    const auto cut = s.last->cut(s.graph.graph());
    const SplitResult parts = split(s.graph, cut);
    CHECK(validate_torus_graph(parts.left).ok);
    CHECK(validate_torus_graph(parts.right).ok);
    CHECK(is_equivalent(parts.left, *s.last_left).has_value());
    CHECK(is_equivalent_twisted(parts.right, *s.last_right).has_value());
    const SumResult again = connected_sum(parts.left, parts.right, parts.record.site);
    CHECK(is_equivalent(again.graph, s.graph).has_value());
  }
}

TEST_CASE("splits of the three-piece example") {
  const TorusGraph g = figure4();
  const auto cuts = find_splits(g);
  CHECK(cuts.size() == 4);
  int simplex_splits = 0;
  for (const auto& cut : cuts) {
    const SplitResult parts = split(g, cut);
    CHECK(parts.left.vertex_count() + parts.right.vertex_count() == 10);
    if (std::min(parts.left.vertex_count(), parts.right.vertex_count()) == 4 &&
        std::max(parts.left.vertex_count(), parts.right.vertex_count()) == 6) {
      const TorusGraph& small = parts.left.vertex_count() == 4 ? parts.left : parts.right;
      if (!small.graph().has_multiple_edges()) ++simplex_splits;
    }
    const SumResult again = connected_sum(parts.left, parts.right, parts.record.site);
    CHECK(is_equivalent(again.graph, g).has_value());
  }
  CHECK(simplex_splits >= 2);
}

TEST_CASE("degenerate self-split of the product of spheres") {
  const TorusGraph sp = gamma_sp(e1s, e2s, e3s);
  const SplitResult parts = split(sp, {0, 1, 2});
  CHECK(parts.left.vertex_count() == 2);
  CHECK(parts.right.vertex_count() == 2);
  CHECK(is_equivalent(parts.left, sp, EquivalenceMode::sign_lifts).has_value());
  CHECK(is_equivalent(parts.right, sp, EquivalenceMode::sign_lifts).has_value());
}

TEST_CASE("irreducible graphs have no proper splits") {
  CHECK(find_splits(simplex()).empty());
  CHECK(find_splits(sb_graph(1, 2, -1)).empty());
  CHECK(find_splits(cube_product()).empty());
}

TEST_CASE("split errors") {
  const TorusGraph x = cube_product();
  CHECK(error_of([&] { split(x, {0, 1, 2}); }) == ErrorKind::NotACut);
  CHECK(error_of([&] { split(x, {0, 0, 1}); }) == ErrorKind::NotACut);
  CHECK(error_of([&] { split(x.with_sigma(std::nullopt), {0, 1, 2}); }) == ErrorKind::InvalidInput);
}
