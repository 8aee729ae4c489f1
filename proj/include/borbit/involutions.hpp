#pragma once

// Involutions of the Weyl group, orthogonal subsets of Psi, the circle
// action of simple reflections, the involution length L, and the root-set
// structure of sigma_S (long/short split and negative selection).

#include "borbit/weyl.hpp"

namespace borbit {

struct Involution {
  WeylElement element;
  int lambda = 0;  // dimension of the -1 eigenspace
  int L = 0;       // (length + lambda) / 2

  bool operator==(const Involution& o) const { return element == o.element; }
};

// Checks element^2 = id, computes lambda as rank - rank(M + I) by exact
// fraction-free elimination, and L = (l + lambda)/2 (asserted integral).
Involution make_involution(const RootSystem& rs, WeylElement w);

// sigma_S = product of the (commuting) reflections in the given roots.
// Root indices may point at positive or negative roots; throws input_error
// if the set is not pairwise orthogonal. lambda(sigma_S) = |S|.
Involution sigma_of(const RootSystem& rs, const std::vector<int>& root_indices);

// Circle action: s_a sigma if the two commute, s_a sigma s_a otherwise.
Involution circle(const RootSystem& rs, int simple_idx, const Involution& sigma);

inline int inv_length_L(const Involution& sigma) { return sigma.L; }

// Root-set structure of an involution sigma:
//   phi_sigma          = all roots a with sigma(a) = -a,
//   t_long             = phi_sigma ∩ long roots (all of phi_sigma when
//                        simply laced),
//   t_short            = phi_sigma ∩ short roots orthogonal to all of t_long,
//   negative_selection = (t_long ∪ t_short) ∩ negative roots.
// For sigma = sigma_{v(S)} of an admissible pair the negative selection
// recovers v(S) exactly.
struct PhiSigmaSplit {
  std::vector<int> phi_sigma;
  std::vector<int> t_long;
  std::vector<int> t_short;
  std::vector<int> negative_selection;
};

PhiSigmaSplit phi_sigma_split(const RootSystem& rs, const Involution& sigma);

// An orthogonal subset of Psi: ascending positive-root indices, pairwise
// orthogonal, validated at construction.
struct OrthogonalSet {
  std::vector<int> roots;

  bool operator==(const OrthogonalSet& o) const { return roots == o.roots; }
  bool operator<(const OrthogonalSet& o) const {
    if (roots.size() != o.roots.size()) return roots.size() < o.roots.size();
    return roots < o.roots;
  }
  int size() const { return static_cast<int>(roots.size()); }
};

OrthogonalSet make_orthogonal_set(const HermitianContext& ctx, std::vector<int> roots);

// Pairwise orthogonality via the Cartan pairing.
bool pairwise_orthogonal(const RootSystem& rs, const std::vector<int>& roots);

}  // namespace borbit
