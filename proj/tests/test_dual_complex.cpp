#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "snc/dual_complex.hpp"
#include "snc/families.hpp"
#include "snc/model.hpp"

using snc::DualComplex;

namespace {

DualComplex boundary_delta2() {
  return DualComplex::from_simplices({"0", "1", "2"}, {{0, 1}, {0, 2}, {1, 2}});
}

DualComplex boundary_delta3() {
  return DualComplex::from_simplices({"0", "1", "2", "3"},
                                     {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

}  // namespace

TEST_CASE("dual complex of the hyperplane families") {
  DualComplex g3 = build_dual_complex(snc::gordon_family(3));
  CHECK(g3.f_vector() == std::vector<int>{3, 3});
  CHECK(g3.euler_characteristic() == 0);
  CHECK(g3.is_simplicial());
  CHECK(g3.connected_components() == 1);

  DualComplex g4 = build_dual_complex(snc::gordon_family(4));
  CHECK(g4.f_vector() == std::vector<int>{4, 6, 4});
  CHECK(g4.euler_characteristic() == 2);

  // f_k = C(n, k+1) in general, full set excluded.
  DualComplex g6 = build_dual_complex(snc::gordon_family(6));
  CHECK(g6.f_vector() == std::vector<int>{6, 15, 20, 15, 6});
}

TEST_CASE("parallel pieces give a Delta-complex circle") {
  snc::SNCModel m = snc::load_model(R"({
    "components": ["A", "B"],
    "strata": [
      {"indices": ["A", "B"], "pieces": [
        {"name": "P", "faces": {"A": "B", "B": "A"}},
        {"name": "Q", "faces": {"A": "B", "B": "A"}}]}
    ]})");
  DualComplex d = build_dual_complex(m);
  CHECK(d.f_vector() == std::vector<int>{2, 2});
  CHECK(d.euler_characteristic() == 0);
  CHECK_FALSE(d.is_simplicial());
  CHECK(d.connected_components() == 1);
}

TEST_CASE("face maps drop the matching vertex") {
  DualComplex g4 = build_dual_complex(snc::gordon_family(4));
  for (size_t dim = 1; dim < g4.cells().size(); ++dim) {
    for (const snc::Cell& c : g4.cells()[dim]) {
      REQUIRE(c.faces.size() == c.vertices.size());
      for (size_t j = 0; j < c.faces.size(); ++j) {
        const snc::Cell& f = g4.cells()[dim - 1][static_cast<size_t>(c.faces[j])];
        std::vector<int> expect = c.vertices;
        expect.erase(expect.begin() + static_cast<long>(j));
        CHECK(f.vertices == expect);
      }
    }
  }
}

TEST_CASE("barycentric subdivision") {
  DualComplex sd2 = boundary_delta2().barycentric_subdivision();
  CHECK(sd2.f_vector() == std::vector<int>{6, 6});
  CHECK(sd2.is_simplicial());
  CHECK(sd2.euler_characteristic() == 0);

  DualComplex sd3 = boundary_delta3().barycentric_subdivision();
  CHECK(sd3.f_vector() == std::vector<int>{14, 36, 24});
  CHECK(sd3.euler_characteristic() == 2);

  // Subdividing the Delta-complex circle yields an honest simplicial circle.
  snc::SNCModel m = snc::load_model(R"({
    "components": ["A", "B"],
    "strata": [
      {"indices": ["A", "B"], "pieces": [
        {"name": "P", "faces": {"A": "B", "B": "A"}},
        {"name": "Q", "faces": {"A": "B", "B": "A"}}]}
    ]})");
  DualComplex sd_circle = build_dual_complex(m).barycentric_subdivision();
  CHECK(sd_circle.f_vector() == std::vector<int>{4, 4});
  CHECK(sd_circle.is_simplicial());
}

TEST_CASE("star subdivision") {
  // Blowing up an edge of the triangle boundary gives a 4-gon.
  DualComplex tri = boundary_delta2();
  snc::CellRef edge = tri.find_cell_by_labels({"1", "2"});
  REQUIRE(edge.valid());
  DualComplex blown = tri.star_subdivision(edge);
  CHECK(blown.f_vector() == std::vector<int>{4, 4});
  CHECK(blown.euler_characteristic() == 0);

  // Blowing up a 2-cell of the tetrahedron boundary cones it off.
  DualComplex tet = boundary_delta3();
  snc::CellRef face = tet.find_cell_by_labels({"0", "1", "2"});
  REQUIRE(face.valid());
  DualComplex star = tet.star_subdivision(face);
  CHECK(star.f_vector() == std::vector<int>{5, 9, 6});
  CHECK(star.euler_characteristic() == 2);

  // Vertex star subdivision is a no-op on the f-vector.
  DualComplex at_vertex = tri.star_subdivision(tri.find_cell_by_labels({"0"}));
  CHECK(at_vertex.f_vector() == tri.f_vector());

  CHECK_THROWS_AS((void)tri.star_subdivision("xyz"), std::invalid_argument);
}

TEST_CASE("star subdivision preserves the Euler characteristic") {
  DualComplex d = build_dual_complex(snc::random_snc_model(6, 3, 0.7, 5));
  const long long chi = d.euler_characteristic();
  for (int dim = d.dim(); dim >= 0; --dim) {
    if (d.cells()[static_cast<size_t>(dim)].empty()) continue;
    snc::CellRef r{dim, 0};
    DualComplex sub = d.star_subdivision(r);
    CHECK(sub.euler_characteristic() == chi);
    d = sub;
  }
}

TEST_CASE("lookups") {
  DualComplex g3 = build_dual_complex(snc::gordon_family(3));
  CHECK(g3.find_cell("Z1").valid());
  CHECK(g3.find_cell("Z1&Z2").valid());
  CHECK_FALSE(g3.find_cell("nope").valid());
  snc::CellRef e = g3.find_cell_by_labels({"Z1", "Z2"});
  REQUIRE(e.valid());
  CHECK(g3.cell(e).name == "Z1&Z2");
}

TEST_CASE("serialization lists cells layer by layer") {
  std::string doc = boundary_delta2().serialize();
  CHECK(doc.find("\"vertices\"") != std::string::npos);
  CHECK(doc.find("\"cells\"") != std::string::npos);
  CHECK(doc.find("{0,1}") != std::string::npos);
}

TEST_CASE("disconnected complexes") {
  DualComplex two = build_dual_complex(snc::gordon_family(2));
  CHECK(two.f_vector() == std::vector<int>{2});
  CHECK(two.connected_components() == 2);
}
