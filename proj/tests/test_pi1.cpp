#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "snc/families.hpp"
#include "snc/homology.hpp"
#include "snc/pi1.hpp"

using snc::DualComplex;
using snc::GroupPresentation;
using snc::HomologyGroup;

namespace {

constexpr int kBudget = 10000;

DualComplex projective_plane() {
  return DualComplex::from_simplices(
      {"1", "2", "3", "4", "5", "6"},
      {{0, 1, 4}, {0, 1, 5}, {0, 2, 3}, {0, 2, 5}, {0, 3, 4},
       {1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {2, 4, 5}, {3, 4, 5}});
}

HomologyGroup h1_of(const DualComplex& d) { return homology(chain_complex(d), 1); }

}  // namespace

TEST_CASE("edge-path presentation of a circle") {
  DualComplex circle = build_dual_complex(snc::gordon_family(3));
  GroupPresentation pres = edge_path_presentation(circle);
  // Spanning tree uses 2 of the 3 edges; no 2-cells, so no relators.
  CHECK(pres.generators.size() == 1);
  CHECK(pres.relators.empty());
  GroupPresentation simp = tietze_simplify(pres, kBudget);
  CHECK(simp.generators.size() == 1);
  CHECK(abelianization(simp) == HomologyGroup{1, {}});
  CHECK(simple_connectivity_verdict(circle, kBudget) == snc::Pi1Verdict::no);
}

TEST_CASE("edge-path presentation of the 2-sphere") {
  DualComplex sphere = build_dual_complex(snc::gordon_family(4));
  GroupPresentation pres = edge_path_presentation(sphere);
  CHECK(pres.generators.size() == 3);  // 6 edges - 3 tree edges
  CHECK(pres.relators.size() == 4);
  GroupPresentation simp = tietze_simplify(pres, kBudget);
  CHECK(simp.empty());
  CHECK(simple_connectivity_verdict(sphere, kBudget) == snc::Pi1Verdict::yes);
}

TEST_CASE("projective plane is not simply connected") {
  DualComplex rp2 = projective_plane();
  GroupPresentation simp = tietze_simplify(edge_path_presentation(rp2), kBudget);
  CHECK(abelianization(simp) == h1_of(rp2));
  CHECK(simple_connectivity_verdict(rp2, kBudget) == snc::Pi1Verdict::no);
}

TEST_CASE("abelianization equals first homology") {
  for (const DualComplex& d :
       {build_dual_complex(snc::tree_family({0, 0, 1, 2})), projective_plane(),
        build_dual_complex(snc::random_snc_model(6, 3, 0.7, 17)),
        build_dual_complex(snc::random_snc_model(6, 2, 0.5, 18, true)),
        build_dual_complex(snc::gordon_family(5))}) {
    GroupPresentation pres = edge_path_presentation(d);
    CHECK(abelianization(pres) == h1_of(d));
    CHECK(abelianization(tietze_simplify(pres, kBudget)) == h1_of(d));
  }
}

TEST_CASE("verdicts are invariant under subdivision") {
  DualComplex circle = build_dual_complex(snc::gordon_family(3));
  CHECK(simple_connectivity_verdict(circle.barycentric_subdivision(), kBudget) ==
        snc::Pi1Verdict::no);
  DualComplex sphere = build_dual_complex(snc::gordon_family(4));
  CHECK(simple_connectivity_verdict(sphere.barycentric_subdivision(), kBudget) ==
        snc::Pi1Verdict::yes);
}

TEST_CASE("budget exhaustion stays honest") {
  GroupPresentation pres = edge_path_presentation(build_dual_complex(snc::gordon_family(4)));
  GroupPresentation cheap = tietze_simplify(pres, 0);
  CHECK(cheap.history.empty());
  CHECK(cheap.generators.size() == pres.generators.size());
  GroupPresentation one = tietze_simplify(pres, 1);
  CHECK(one.history.size() <= 1);
}

TEST_CASE("disconnected complexes are rejected") {
  DualComplex two_points = build_dual_complex(snc::gordon_family(2));
  CHECK_THROWS_WITH_AS((void)edge_path_presentation(two_points),
                       doctest::Contains("2"), std::runtime_error);
}

TEST_CASE("greedy collapse") {
  // A solid simplex collapses to a point.
  DualComplex solid = DualComplex::from_simplices({"0", "1", "2", "3"}, {{0, 1, 2, 3}});
  snc::CollapseResult r = greedy_collapse(solid);
  CHECK(r.collapsed_to_point);
  CHECK(r.reduced.f_vector() == std::vector<int>{1});
  // The certificate pairs account for all removed cells.
  int removed = 0;
  for (int f : solid.f_vector()) removed += f;
  CHECK(static_cast<int>(r.certificate.size()) * 2 == removed - 1);

  // The sphere has no free faces at all.
  DualComplex sphere = build_dual_complex(snc::gordon_family(4));
  snc::CollapseResult rs = greedy_collapse(sphere);
  CHECK_FALSE(rs.collapsed_to_point);
  CHECK(rs.certificate.empty());
  CHECK(rs.reduced.f_vector() == sphere.f_vector());

  // Cones always collapse.
  for (unsigned seed : {4u, 9u}) {
    DualComplex base = build_dual_complex(snc::random_snc_model(5, 2, 0.5, seed));
    DualComplex cone =
        build_dual_complex(snc::cone_family(base.is_simplicial() ? base
                                                                 : base.barycentric_subdivision()));
    CHECK(greedy_collapse(cone).collapsed_to_point);
  }
}

TEST_CASE("contractibility verdicts in low dimension") {
  DualComplex disk = DualComplex::from_simplices({"0", "1", "2"}, {{0, 1, 2}});
  CHECK(contractibility_verdict_dim2(disk, kBudget) == snc::ContractibilityVerdict::point);

  DualComplex circle = build_dual_complex(snc::gordon_family(3));
  CHECK(contractibility_verdict_dim2(circle, kBudget) ==
        snc::ContractibilityVerdict::not_point);

  DualComplex sphere2 = build_dual_complex(snc::gordon_family(4));
  CHECK(contractibility_verdict_dim2(sphere2, kBudget) ==
        snc::ContractibilityVerdict::not_point);

  CHECK(contractibility_verdict_dim2(projective_plane(), kBudget) ==
        snc::ContractibilityVerdict::not_point);

  DualComplex dim3 = build_dual_complex(snc::gordon_family(5));
  CHECK_THROWS_AS((void)contractibility_verdict_dim2(dim3, kBudget), std::invalid_argument);
}

TEST_CASE("verdict strings") {
  CHECK(snc::to_string(snc::Pi1Verdict::yes) == "yes");
  CHECK(snc::to_string(snc::Pi1Verdict::no) == "no");
  CHECK(snc::to_string(snc::Pi1Verdict::unknown) == "unknown");
  CHECK(snc::to_string(snc::ContractibilityVerdict::point) == "point");
  CHECK(snc::to_string(snc::ContractibilityVerdict::not_point) == "not-point");
  CHECK(snc::to_string(snc::ContractibilityVerdict::unknown) == "unknown");
}
