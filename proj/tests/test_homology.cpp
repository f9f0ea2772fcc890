#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "snc/families.hpp"
#include "snc/homology.hpp"
#include "snc/model.hpp"

using snc::BigInt;
using snc::DualComplex;
using snc::HomologyGroup;

namespace {

DualComplex projective_plane() {
  // Minimal 6-vertex triangulation: every edge lies in two triangles, Euler
  // characteristic 1.
  return DualComplex::from_simplices(
      {"1", "2", "3", "4", "5", "6"},
      {{0, 1, 4}, {0, 1, 5}, {0, 2, 3}, {0, 2, 5}, {0, 3, 4},
       {1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {2, 4, 5}, {3, 4, 5}});
}

std::vector<HomologyGroup> homology_of(const DualComplex& d) {
  return all_homology(chain_complex(d));
}

long long euler_poincare(const std::vector<HomologyGroup>& h) {
  long long chi = 0;
  int sign = 1;
  for (const HomologyGroup& g : h) {
    chi += sign * g.rank;
    sign = -sign;
  }
  return chi;
}

}  // namespace

TEST_CASE("boundary of boundary vanishes") {
  for (const DualComplex& d :
       {build_dual_complex(snc::gordon_family(5)), projective_plane(),
        build_dual_complex(snc::random_snc_model(7, 3, 0.6, 3, true))}) {
    snc::ChainComplex cc = chain_complex(d);
    for (size_t k = 2; k < cc.boundary.size(); ++k)
      CHECK(snc::is_zero_matrix(cc.boundary[k - 1] * cc.boundary[k]));
    snc::CochainComplexDelta dd = cochain_complex_delta(d);
    for (size_t p = 1; p < dd.delta.size(); ++p)
      CHECK(snc::is_zero_matrix(dd.delta[p] * dd.delta[p - 1]));
  }
}

TEST_CASE("spheres from the hyperplane families") {
  // Gamma of the n-hyperplane model is the boundary of the (n-1)-simplex.
  for (int n = 3; n <= 6; ++n) {
    auto h = homology_of(build_dual_complex(snc::gordon_family(n)));
    REQUIRE(static_cast<int>(h.size()) == n - 1);
    for (int k = 0; k <= n - 2; ++k) {
      const int expect = (k == 0 || k == n - 2) ? 1 : 0;
      CHECK(h[static_cast<size_t>(k)].rank == expect);
      CHECK(h[static_cast<size_t>(k)].torsion.empty());
    }
  }
  // n = 2: two points.
  auto h2 = homology_of(build_dual_complex(snc::gordon_family(2)));
  CHECK(h2[0].rank == 2);
}

TEST_CASE("torsion of the projective plane") {
  auto h = homology_of(projective_plane());
  REQUIRE(h.size() == 3);
  CHECK(h[0] == HomologyGroup{1, {}});
  CHECK(h[1].rank == 0);
  REQUIRE(h[1].torsion.size() == 1);
  CHECK(h[1].torsion[0] == BigInt(2));
  CHECK(h[2] == HomologyGroup{0, {}});
}

TEST_CASE("Delta-complex circle") {
  snc::SNCModel m = snc::load_model(R"({
    "components": ["A", "B"],
    "strata": [
      {"indices": ["A", "B"], "pieces": [
        {"name": "P", "faces": {"A": "B", "B": "A"}},
        {"name": "Q", "faces": {"A": "B", "B": "A"}}]}
    ]})");
  auto h = homology_of(build_dual_complex(m));
  CHECK(h[0] == HomologyGroup{1, {}});
  CHECK(h[1] == HomologyGroup{1, {}});
}

TEST_CASE("homology bounds checking") {
  snc::ChainComplex cc = chain_complex(build_dual_complex(snc::gordon_family(3)));
  CHECK_THROWS_AS((void)homology(cc, -1), std::out_of_range);
  CHECK_THROWS_AS((void)homology(cc, 2), std::out_of_range);
}

TEST_CASE("Euler-Poincare identity on random models") {
  for (unsigned seed : {1u, 2u, 3u, 4u, 5u}) {
    DualComplex d = build_dual_complex(snc::random_snc_model(6, 3, 0.7, seed));
    CHECK(euler_poincare(homology_of(d)) == d.euler_characteristic());
  }
}

TEST_CASE("delta-cochain ranks match homology ranks") {
  for (const DualComplex& d :
       {build_dual_complex(snc::gordon_family(5)), projective_plane(),
        build_dual_complex(snc::random_snc_model(6, 3, 0.8, 9, true)),
        build_dual_complex(snc::tree_family({0, 0, 1, 2, 2}))}) {
    auto h = homology_of(d);
    snc::CochainComplexDelta dd = cochain_complex_delta(d);
    for (int p = 0; p <= d.dim(); ++p)
      CHECK(delta_cohomology_rank(dd, p) == h[static_cast<size_t>(p)].rank);
  }
}

TEST_CASE("homology is invariant under subdivision") {
  DualComplex d = build_dual_complex(snc::gordon_family(4));
  auto before = homology_of(d);
  CHECK(homology_of(d.barycentric_subdivision()) == before);
  CHECK(homology_of(d.star_subdivision(snc::CellRef{2, 1})) == before);
}

TEST_CASE("rational vanishing checker") {
  // Trees of rational curves are fine.
  snc::VanishingResult tree = verify_rational_vanishing(snc::tree_family({0, 1, 1}));
  CHECK(tree.verdict == snc::VanishingVerdict::consistent);
  CHECK(tree.top_rank == 0);

  // The curated sphere model contradicts the vanishing statement.
  snc::VanishingResult s2 = verify_rational_vanishing(snc::s2_counterexample_model());
  CHECK(s2.verdict == snc::VanishingVerdict::violates);
  CHECK(s2.top_rank == 1);

  // Models not declared rational only get the rank reported.
  snc::SNCModel undeclared = snc::s2_counterexample_model();
  undeclared.declared_rational = false;
  snc::VanishingResult na = verify_rational_vanishing(undeclared);
  CHECK(na.verdict == snc::VanishingVerdict::not_applicable);
  CHECK(na.top_rank == 1);

  CHECK(snc::to_string(snc::VanishingVerdict::consistent) == "consistent");
  CHECK(snc::to_string(snc::VanishingVerdict::violates) == "violates");
  CHECK(snc::to_string(snc::VanishingVerdict::not_applicable) == "not-applicable");
}
