#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "beireg/homology.hpp"

namespace beireg {

/// Squarefree monomial ideal: each generator is the support mask of a
/// squarefree monomial in variables 0..variable_count-1. Generators are kept
/// inclusion-minimal and sorted.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  MonomialIdeal(int variable_count, std::vector<FaceMask> generators) : variable_count_(variable_count) {
    if (variable_count < 0 || variable_count > 32)
      throw std::invalid_argument("MonomialIdeal: at most 32 variables");
    std::sort(generators.begin(), generators.end(),
              [](FaceMask a, FaceMask b) { return std::popcount(a) != std::popcount(b) ? std::popcount(a) < std::popcount(b) : a < b; });
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    for (FaceMask g : generators) {
      if (variable_count < 32 && (g >> variable_count) != 0)
        throw std::invalid_argument("MonomialIdeal: generator uses an unknown variable");
      if (g == 0) throw std::invalid_argument("MonomialIdeal: the unit ideal is not supported");
      const bool redundant = std::any_of(generators_.begin(), generators_.end(),
                                         [g](FaceMask h) { return (h & ~g) == 0; });
      if (!redundant) generators_.push_back(g);
    }
    std::sort(generators_.begin(), generators_.end());
  }

  int variable_count() const { return variable_count_; }
  const std::vector<FaceMask>& generators() const { return generators_; }
  bool is_zero() const { return generators_.empty(); }

  /// True iff the squarefree monomial with support s lies in the ideal.
  bool contains(FaceMask s) const {
    return std::any_of(generators_.begin(), generators_.end(), [s](FaceMask g) { return (g & ~s) == 0; });
  }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  int variable_count_ = 0;
  std::vector<FaceMask> generators_;
};

/// Faces are exactly the supports that contain no generator.
inline SimplicialComplex stanley_reisner_complex(const MonomialIdeal& m) {
  const int vc = m.variable_count();
  if (vc > 24) throw std::invalid_argument("stanley_reisner_complex: too many variables to enumerate");
  std::vector<FaceMask> faces;
  const FaceMask limit = FaceMask{1} << vc;
  for (FaceMask s = 0; s < limit; ++s)
    if (!m.contains(s)) faces.push_back(s);
  return SimplicialComplex(vc, std::move(faces));
}

struct HochsterOptions {
  int max_variables = 16;
};

struct HochsterResult {
  int regularity = 0;
  /// Vertex set σ and degree h with reduced H_h(Δ_σ) ≠ 0 attaining the
  /// maximum; absent when the maximum comes from β_{0,0}.
  std::optional<FaceMask> sigma;
  int homology_degree = -1;
};

/// reg(S/m) = max{h + 1 : H̃_h(Δ_σ; Q) ≠ 0} over vertex sets σ of the
/// Stanley–Reisner complex Δ of m, together with 0 from β_{0,0}.
///
/// Only σ that are unions of generator supports are visited, since every
/// multidegree of a nonzero Betti number is an lcm of generators. Each
/// candidate homology group is first tested over GF(2); torsion-free rank
/// can only be smaller, so a vanishing GF(2) group settles the rational one
/// and the exact rational computation runs only on the remaining candidates.
inline HochsterResult hochster_regularity(const MonomialIdeal& m, const HochsterOptions& opts = {}) {
  const int vc = m.variable_count();
  if (vc > opts.max_variables)
    throw std::invalid_argument("hochster_regularity: " + std::to_string(vc) + " variables exceed the limit of " +
                                std::to_string(opts.max_variables));
  HochsterResult out;
  if (m.is_zero()) return out;
  const SimplicialComplex delta = stanley_reisner_complex(m);
  const auto& gens = m.generators();

  const FaceMask limit = FaceMask{1} << vc;
  for (FaceMask sigma = 1; sigma < limit; ++sigma) {
    FaceMask covered = 0;
    for (FaceMask g : gens)
      if ((g & ~sigma) == 0) covered |= g;
    if (covered != sigma) continue;
    const int top = std::popcount(sigma) - 2;
    if (top < out.regularity) continue;
    const SimplicialComplex local = delta.restrict_to(sigma);
    for (int h = std::min(top, local.dimension()); h >= out.regularity; --h) {
      if (local.reduced_betti(h, Coefficients::gf2) == 0) continue;
      if (local.reduced_betti(h, Coefficients::rationals) == 0) continue;
      out.regularity = h + 1;
      out.sigma = sigma;
      out.homology_degree = h;
      break;
    }
  }
  return out;
}

}  // namespace beireg
