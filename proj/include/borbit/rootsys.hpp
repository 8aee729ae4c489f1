#pragma once

// Finite crystallographic root systems in the simple-root coordinate basis,
// and the cominuscule (abelian-nilradical) context attached to a node of the
// Dynkin diagram.
//
// Conventions, fixed throughout the project:
//   * simple roots are numbered in the Bourbaki order of the given type
//     (0-based in code, 1-based in the CLI and in serialized words);
//   * a root is an integer coefficient tuple over the simple roots;
//   * cartan(i, j) = <alpha_j, alpha_i^vee>;
//   * positive roots are listed first, sorted by (height, lexicographic
//     coefficients), and roots[i + n_positive] = -roots[i].

#include "borbit/base.hpp"

#include <optional>
#include <unordered_map>

namespace borbit {

struct RootSystem {
  char cartan_type = 0;  // 'A'..'G'
  int rank = 0;
  Mat cartan;       // cartan(i,j) = <alpha_j, alpha_i^vee>
  Vec symmetrizer;  // positive integers d_i with diag(d) * cartan symmetric
  Mat bilinear;     // d_i * cartan(i,j); a positive multiple of the Gram matrix

  std::vector<Vec> roots;  // positives, then index-aligned negatives
  int n_positive = 0;
  int highest = -1;          // index of the highest root
  std::vector<Int> norm2;    // squared length of each root (bilinear scale)
  Int long_norm2 = 0;        // maximal squared length
  std::vector<Mat> simple_refl;  // matrices of s_{alpha_i} on root coordinates

  std::unordered_map<Vec, int, VecHash, VecEq> root_index;

  int num_roots() const { return static_cast<int>(roots.size()); }
  bool is_root(const Vec& x) const { return root_index.count(x) != 0; }
  int index_of(const Vec& x) const;          // throws input_error if not a root
  int negate(int idx) const {
    return idx < n_positive ? idx + n_positive : idx - n_positive;
  }
  bool is_positive_index(int idx) const { return idx < n_positive; }
  bool is_long(int idx) const { return norm2[idx] == long_norm2; }
  bool simply_laced() const;
  int simple_index(int root_idx) const;      // -1 if the root is not simple
  int height(int root_idx) const {
    return static_cast<int>(roots[root_idx].sum());
  }
};

// Builds the root system of the given simple type, closing the simple roots
// under simple reflections. Validates the (type, rank) combination and all
// structural invariants (reflection closure, classical positive-root count,
// unique highest root, at most two root lengths).
RootSystem build_root_system(char cartan_type, int rank);

// <beta, alpha^vee> for two roots, from the symmetrized Cartan matrix.
Int pairing(const RootSystem& rs, const Vec& beta, const Vec& alpha);
Int pairing(const RootSystem& rs, int beta_idx, int alpha_idx);

// s_alpha(x) = x - <x, alpha^vee> alpha; x is any tuple in root coordinates.
Vec reflect(const RootSystem& rs, const Vec& alpha, const Vec& x);

// Simple-root indices i with [theta : alpha_i] = 1.
std::vector<int> cominuscule_nodes(const RootSystem& rs);

// Dominance order on integer coefficient tuples over a common simple basis:
// x <= y iff y - x has nonnegative coefficients.
bool dominance_leq(const Vec& x, const Vec& y);

// A coweight with exact rational coordinates over the simple coroots,
// stored as numerators over one positive denominator.
struct Coweight {
  Vec num;
  Int den = 1;
};

// Dominance order on coweights; a non-integral difference is incomparable.
bool dominance_leq(const Coweight& x, const Coweight& y);

// <mu, x> for a coweight mu and a tuple x in root coordinates.
// Throws input_error if the value is not an integer.
Int coweight_pairing(const RootSystem& rs, const Coweight& mu, const Vec& x);

struct HermitianContext {
  RootSystem rs;
  int node = -1;               // simple index alpha_P, [theta : alpha_P] = 1
  std::vector<int> psi;        // positive-root indices of Psi, ascending
  std::vector<int> delta_P;    // simple indices other than node
  std::vector<int> phi_P_plus; // positive-root indices of Phi^+_P, ascending
  Coweight omega_P_covee;      // fundamental coweight of the node
  Bitset psi_mask;             // over positive-root indices

  bool in_psi(int root_idx) const {
    return root_idx < rs.n_positive && psi_mask.test(root_idx);
  }
};

// Validates the node against the cominuscule criterion and populates the
// context; checks the partition Psi ⊔ Phi^+_P, abelianness (beta + beta'
// never a root for beta, beta' in Psi) and <omega_P^vee, alpha> ∈ {0,1}
// for every positive root.
HermitianContext build_hermitian_context(const RootSystem& rs, int node);

// Greedy witness for the simple-root chain between dominance-comparable
// positive roots: returns indices of roots alpha = c_0 < c_1 < ... < c_n =
// beta, each step adding one simple root, or nullopt if the chain search
// fails (it never does for genuine roots alpha <= beta).
std::optional<std::vector<int>> dominance_chain(const RootSystem& rs,
                                                int alpha_idx, int beta_idx);

}  // namespace borbit
