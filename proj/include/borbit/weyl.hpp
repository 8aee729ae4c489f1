#pragma once

// Weyl group arithmetic: canonical elements (matrix form on simple-root
// coordinates), lengths, inversion sets, reduced words, Bruhat order via the
// lifting recursion, and the parabolic quotient W^P attached to a
// cominuscule node.

#include "borbit/rootsys.hpp"

#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>

namespace borbit {

// Canonical form is the matrix; the inverse matrix, length, inversion set
// and lexicographically minimal reduced word are cached at construction.
struct WeylElement {
  Mat m;     // column i = image of alpha_i in simple-root coordinates
  Mat minv;  // matrix of the inverse element
  int length = 0;
  std::vector<int> word;  // lex-minimal reduced word, 0-based generators
  Bitset inversions;      // over positive-root indices

  bool operator==(const WeylElement& o) const { return exact_eq(m, o.m); }
  bool is_identity() const { return length == 0; }
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& w) const { return MatHash{}(w.m); }
};

// Builds the canonical element with the given action matrix (and its
// inverse). All caches are recomputed from scratch.
WeylElement make_element(const RootSystem& rs, Mat m, Mat minv);

WeylElement identity_element(const RootSystem& rs);
WeylElement simple_reflection(const RootSystem& rs, int i);
WeylElement reflection(const RootSystem& rs, const Vec& root);
WeylElement reflection(const RootSystem& rs, int root_idx);

WeylElement mul(const RootSystem& rs, const WeylElement& a, const WeylElement& b);
WeylElement inverse(const RootSystem& rs, const WeylElement& a);
WeylElement from_word(const RootSystem& rs, const std::vector<int>& word);

inline Vec apply(const WeylElement& w, const Vec& x) { return w.m * x; }
int apply_root(const RootSystem& rs, const WeylElement& w, int root_idx);

// Contragredient action on a coweight, computed letter by letter from the
// cached reduced word (exact scaled-integer arithmetic).
Coweight apply_coweight(const RootSystem& rs, const WeylElement& w, const Coweight& mu);

// Smallest i with s_i w < w, or -1 for the identity.
int first_left_descent(const WeylElement& w);

// Memoizing Bruhat comparator. Comparison uses the lifting recursion:
// pick a simple s with sv < v; then u <= v iff (su <= sv if su < u,
// else u <= sv). Thread-safe; results are schedule-independent.
class BruhatCache {
 public:
  explicit BruhatCache(const RootSystem& rs);
  bool leq(const WeylElement& u, const WeylElement& v);

 private:
  struct Node {
    Mat m, minv;
    int length;
    int descent;  // first left descent
  };
  int intern(Mat m, Mat minv);
  int node_length(const Mat& m) const;
  bool leq_ids(int u, int v);

  const RootSystem* rs_;
  std::vector<Node> nodes_;
  std::unordered_map<Mat, int, MatHash, MatEq> ids_;
  std::unordered_map<std::uint64_t, bool> memo_;
  std::mutex mu_;
};

// The parabolic quotient W^P = minimal-length coset representatives of
// W/W_P, for the maximal parabolic of a cominuscule node. Enumerated by
// breadth-first growth from the identity under left multiplication by
// simple reflections, testing membership via Phi^+(s_i v) ⊆ Psi.
struct ParabolicQuotient {
  HermitianContext ctx;
  std::vector<WeylElement> elements;  // sorted by (length, word)
  int longest = -1;                   // index of w^P
  WeylElement w_P;                    // longest element of W_P
  WeylElement w0;                     // longest element of W = w^P * w_P
  std::vector<Vec> omega_numerators;  // v(omega_P^vee) per element

  int size() const { return static_cast<int>(elements.size()); }
  // Index of a W^P element; -1 if the element is not in W^P.
  int id_of(const WeylElement& w) const;
  Coweight omega_image(int id) const {
    return Coweight{omega_numerators[id], ctx.omega_P_covee.den};
  }

  std::unordered_map<Mat, int, MatHash, MatEq> index;
};

ParabolicQuotient enumerate_WP(const HermitianContext& ctx);

// Minimal-length representative of the coset w W_P.
WeylElement min_coset_rep(const RootSystem& rs, const HermitianContext& ctx,
                          const WeylElement& w);

// Bruhat order restricted to W^P; primary criterion is the inversion-set
// inclusion Phi^+(u) ⊆ Phi^+(v).
bool wp_leq(const ParabolicQuotient& q, int u_id, int v_id);

// Same, but evaluates all three equivalent criteria (generic Bruhat,
// inversion-set inclusion, coweight dominance v(omega) <= u(omega)) and
// throws logic_error on disagreement.
bool wp_leq_verified(const ParabolicQuotient& q, int u_id, int v_id,
                     BruhatCache& cache);

// Validating entry point: throws input_error if u or v is not in W^P.
bool wp_leq(const ParabolicQuotient& q, const WeylElement& u, const WeylElement& v);

// Descents of v in W^P: pairs (simple index a, positive-root index b) with
// b dominance-maximal in Phi^+(v), a = index of -v(b), s_a v < v.
std::vector<std::pair<int, int>> wp_descents(const ParabolicQuotient& q, int v_id);
// Ascents: b dominance-minimal in Psi \ Phi^+(v), a = index of v(b), s_a v > v.
std::vector<std::pair<int, int>> wp_ascents(const ParabolicQuotient& q, int v_id);

// Full group enumeration (BFS); throws input_error if |W| would exceed
// max_size. Sorted by (length, word).
std::vector<WeylElement> enumerate_weyl_group(const RootSystem& rs,
                                              std::size_t max_size);

// |W| from the Dynkin diagram (no enumeration).
std::uint64_t weyl_group_order(const RootSystem& rs);
// |W_P| for the Levi of the maximal parabolic at `node`.
std::uint64_t levi_weyl_group_order(const RootSystem& rs, int node);

}  // namespace borbit
