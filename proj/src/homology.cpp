#include "snc/homology.hpp"

#include <stdexcept>

namespace snc {

ChainComplex chain_complex(const DualComplex& dual) {
  ChainComplex cc;
  for (const auto& layer : dual.cells()) cc.cell_counts.push_back(static_cast<int>(layer.size()));
  cc.boundary.resize(dual.cells().size());
  if (!cc.cell_counts.empty()) cc.boundary[0] = IntMatrix::Zero(0, cc.cell_counts[0]);
  for (size_t k = 1; k < dual.cells().size(); ++k) {
    IntMatrix b = IntMatrix::Zero(cc.cell_counts[k - 1], cc.cell_counts[k]);
    const auto& layer = dual.cells()[k];
    for (size_t c = 0; c < layer.size(); ++c) {
      int sign = 1;
      for (size_t j = 0; j < layer[c].faces.size(); ++j) {
        b(layer[c].faces[j], static_cast<Eigen::Index>(c)) += BigInt(sign);
        sign = -sign;
      }
    }
    cc.boundary[k] = std::move(b);
  }
  return cc;
}

HomologyGroup homology(const ChainComplex& chain, int k) {
  if (k < 0 || k > chain.dim()) throw std::out_of_range("homology dimension out of range");
  const int n_k = chain.cell_counts[static_cast<size_t>(k)];
  const int rank_dk = (k >= 1) ? rank_of(chain.boundary[static_cast<size_t>(k)]) : 0;

  HomologyGroup h;
  if (k + 1 <= chain.dim()) {
    SmithResult snf = smith_normal_form(chain.boundary[static_cast<size_t>(k + 1)]);
    h.rank = n_k - rank_dk - snf.rank;
    for (const BigInt& d : snf.diagonal)
      if (d > BigInt(1)) h.torsion.push_back(d);
  } else {
    h.rank = n_k - rank_dk;
  }
  return h;
}

std::vector<HomologyGroup> all_homology(const ChainComplex& chain) {
  std::vector<HomologyGroup> out;
  for (int k = 0; k <= chain.dim(); ++k) out.push_back(homology(chain, k));
  return out;
}

CochainComplexDelta cochain_complex_delta(const DualComplex& dual) {
  // One coordinate per piece; the matrix entry for dropping the j-th index
  // of a (p+1)-cell carries the sign (-1)^j.
  CochainComplexDelta cd;
  for (const auto& layer : dual.cells()) cd.cell_counts.push_back(static_cast<int>(layer.size()));
  const int d = cd.dim();
  cd.delta.resize(static_cast<size_t>(d >= 0 ? d : 0));
  for (int p = 0; p < d; ++p) {
    const auto& upper = dual.cells()[static_cast<size_t>(p + 1)];
    IntMatrix m = IntMatrix::Zero(cd.cell_counts[static_cast<size_t>(p + 1)],
                                  cd.cell_counts[static_cast<size_t>(p)]);
    for (size_t c = 0; c < upper.size(); ++c) {
      int sign = 1;
      for (size_t j = 0; j < upper[c].faces.size(); ++j) {
        m(static_cast<Eigen::Index>(c), upper[c].faces[j]) += BigInt(sign);
        sign = -sign;
      }
    }
    cd.delta[static_cast<size_t>(p)] = std::move(m);
  }
  return cd;
}

int delta_cohomology_rank(const CochainComplexDelta& cochain, int p) {
  if (p < 0 || p > cochain.dim()) throw std::out_of_range("cochain dimension out of range");
  const int n_p = cochain.cell_counts[static_cast<size_t>(p)];
  const int rank_out = (p < cochain.dim()) ? rank_of(cochain.delta[static_cast<size_t>(p)]) : 0;
  const int rank_in = (p >= 1) ? rank_of(cochain.delta[static_cast<size_t>(p - 1)]) : 0;
  return n_p - rank_out - rank_in;
}

VanishingResult verify_rational_vanishing(const SNCModel& model) {
  if (model.ambient_dim <= 0)
    throw std::invalid_argument("verify_rational_vanishing requires a declared ambient_dim");
  const int top = model.ambient_dim - 1;
  DualComplex dual = build_dual_complex(model);
  VanishingResult r{VanishingVerdict::not_applicable, 0};
  if (top <= dual.dim()) {
    ChainComplex cc = chain_complex(dual);
    r.top_rank = homology(cc, top).rank;  // field Betti numbers: H^k rank = H_k rank
  }
  if (!model.declared_rational)
    r.verdict = VanishingVerdict::not_applicable;
  else
    r.verdict = r.top_rank > 0 ? VanishingVerdict::violates : VanishingVerdict::consistent;
  return r;
}

std::string to_string(VanishingVerdict v) {
  switch (v) {
    case VanishingVerdict::consistent: return "consistent";
    case VanishingVerdict::violates: return "violates";
    case VanishingVerdict::not_applicable: return "not-applicable";
  }
  return "?";
}

}  // namespace snc
