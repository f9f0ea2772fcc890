#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "snc/dual_complex.hpp"
#include "snc/nerve.hpp"

using snc::NerveMap;
using snc::Rational;
using snc::TriangulatedCover;

namespace {

/// Fibers at every target vertex and at every cell barycenter.
void expect_connected_fibers(const NerveMap& map) {
  for (size_t d = 0; d < map.target.cells().size(); ++d) {
    for (size_t i = 0; i < map.target.cells()[d].size(); ++i) {
      snc::CellRef r{static_cast<int>(d), static_cast<int>(i)};
      const size_t arity = map.target.cell(r).vertices.size();
      std::vector<Rational> center(arity, Rational(1, static_cast<long>(arity)));
      CHECK(fiber_components(map, r, center) == 1);
      if (arity > 1) {
        std::vector<Rational> corner(arity, 0);
        corner[0] = 1;
        CHECK(fiber_components(map, r, corner) == 1);
      }
    }
  }
}

}  // namespace

TEST_CASE("path cover: the smallest two-component cover") {
  TriangulatedCover cover = snc::path_cover();
  CHECK(cover.model.components == std::vector<std::string>{"Z1", "Z2"});
  REQUIRE(cover.model.strata.size() == 3);

  NerveMap map = build_nerve_map(cover);
  CHECK(map.subdivisions == 1);
  CHECK(check_surjective(map));
  expect_connected_fibers(map);

  // a and the edge ab land on the Z1 vertex, b on the barycenter of the
  // intersection edge.
  const auto& tl = map.target.vertex_labels();
  auto target_id = [&](const std::string& label) {
    return static_cast<int>(std::find(tl.begin(), tl.end(), label) - tl.begin());
  };
  CHECK(map.vertex_image[0] == target_id("Z1"));  // vertex a
  CHECK(map.vertex_image[1] == target_id("b(Z1&Z2)"));  // vertex b
  CHECK(map.vertex_image[2] == target_id("Z2"));  // vertex c
}

TEST_CASE("restriction to a sub-cover is not surjective") {
  TriangulatedCover cover = snc::path_cover();
  NerveMap full = build_nerve_map(cover);

  // Domain cut down to Sd of the Z1 edge only; images computed by the same
  // vertex rule.
  const auto& tl = full.target.vertex_labels();
  auto target_id = [&](const std::string& label) {
    return static_cast<int>(std::find(tl.begin(), tl.end(), label) - tl.begin());
  };
  NerveMap restricted;
  restricted.target = full.target;
  restricted.domain = snc::DualComplex::from_simplices({"a", "ab", "b"}, {{0, 1}, {1, 2}});
  restricted.vertex_image = {target_id("Z1"), target_id("Z1"), target_id("b(Z1&Z2)")};
  CHECK_FALSE(check_surjective(restricted));  // the Z2 vertex is never hit
}

TEST_CASE("cycle cover: three arcs around a hexagon") {
  TriangulatedCover cover = snc::cycle_cover();
  // The nerve is the triangle boundary: three vertices, three edges.
  CHECK(build_dual_complex(cover.model).f_vector() == std::vector<int>{3, 3});

  NerveMap map = build_nerve_map(cover);
  CHECK(check_surjective(map));
  expect_connected_fibers(map);
}

TEST_CASE("theta cover is rejected") {
  // Three arcs between the same two endpoints: every pairwise intersection
  // is two points, which would need two pieces over one index pair.
  CHECK_THROWS_AS((void)snc::make_cover({"a", "x", "y", "z", "b"},
                                        {{0, 1}, {1, 4}, {0, 2}, {2, 4}, {0, 3}, {3, 4}},
                                        {"Z1", "Z2", "Z3"},
                                        {{0, 1, 4}, {0, 2, 4}, {0, 3, 4}}),
                  snc::NerveError);
}

TEST_CASE("a cover missing a component is rejected") {
  // The edge xy lies in no cover component at all.
  CHECK_THROWS_AS((void)build_nerve_map(snc::make_cover(
                      {"x", "y"}, {{0, 1}}, {"Z1", "Z2"}, {{0}, {1}})),
                  snc::NerveError);
}

TEST_CASE("fiber sampling validates coordinates") {
  NerveMap map = build_nerve_map(snc::path_cover());
  snc::CellRef edge{1, 0};
  CHECK_THROWS_AS((void)fiber_components(map, edge, {Rational(1, 2), Rational(1, 3)}),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)fiber_components(map, edge, {Rational(1, 2)}),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)fiber_components(map, edge, {Rational(3, 2), Rational(-1, 2)}),
                  std::invalid_argument);
}

TEST_CASE("cover documents round-trip") {
  TriangulatedCover cover = snc::cycle_cover();
  std::string doc = serialize_cover(cover);
  TriangulatedCover back = snc::load_cover(doc);
  CHECK(serialize_cover(back) == doc);
  CHECK(back.vertices == cover.vertices);
  CHECK(back.membership == cover.membership);

  CHECK_THROWS_AS((void)snc::load_cover("{}"), snc::NerveError);
  CHECK_THROWS_AS((void)snc::load_cover("]["), snc::NerveError);
}

TEST_CASE("randomized covers are surjective with connected fibers") {
  for (unsigned seed = 1; seed <= 12; ++seed) {
    CAPTURE(seed);
    TriangulatedCover cover = snc::random_cover(seed);
    NerveMap map = build_nerve_map(cover);
    CHECK(check_surjective(map));
    expect_connected_fibers(map);
  }
}
