#pragma once

// Enumeration of B-orbit parameters (orthogonal subsets of Psi for the
// nilradical, admissible pairs for the full Hermitian variety), their
// invariants, the minimal-parabolic raising operator m_alpha with its
// lowering fibers E_alpha, and the order relations:
//
//   * rr_leq:      [v sigma_S]^P <= [u sigma_R]^P <= u <= v  and
//                  sigma_{u(R)} <= sigma_{v(S)}           (hermitian)
//   * pan_leq:     sigma_{w_P(R)} <= sigma_{w_P(S)}       (nilradical)
//   * fiber_leq:   sigma_{v(R)} <= sigma_{v(S)}           (fixed v)
//   * standard_order: the least order containing O <= m_alpha(O), closed
//                  under m_alpha-monotonicity; equal to rr_leq as a
//                  relation (this equality is the main verification target).
//
// m_alpha is defined geometrically (open orbit of the minimal-parabolic
// sweep); here it is reconstructed combinatorially: the involution update
// sigma -> s_alpha ∘ sigma, the quotient components (v grows, nu shrinks)
// and the negative-selection recovery of S pin a unique candidate, and a
// failed validation signals the stable case. The reconstruction has no
// standalone correctness proof; it is enforced empirically by the malpha
// consistency suite and the order-equivalence acceptance test.

#include "borbit/involutions.hpp"

#include <array>
#include <map>

namespace borbit {

struct AdmissiblePair {
  int v = -1;        // index into ParabolicQuotient::elements
  OrthogonalSet S;   // subset of Phi^+(v)
  Involution sigma;  // sigma_{v(S)}
  int nu = -1;       // index of [v sigma_S]^P
  int dim = 0;       // |Psi| + L
  int L = 0;
};

// All admissible pairs of a context, in the deterministic order
// (length(v), word(v), |S|, root indices of S), with the raising table
// m_table[pair][alpha] and its reverse e_table precomputed.
struct HermitianOrbits {
  ParabolicQuotient q;
  std::vector<AdmissiblePair> pairs;
  std::vector<std::vector<int>> m_table;          // pair x simple -> pair
  std::vector<std::vector<std::vector<int>>> e_table;  // pair x simple -> pairs

  int size() const { return static_cast<int>(pairs.size()); }
  int pair_id(int v_id, const std::vector<int>& roots) const;

  std::map<std::pair<int, std::vector<int>>, int> index;
};

// All orthogonal subsets of Psi, ordered by (cardinality, root indices).
std::vector<OrthogonalSet> enumerate_nilradical(const HermitianContext& ctx);

// Orthogonal subsets of Phi^+(v), computed by induction on the length of v:
// pick a descent a of v with b = -v^{-1}(alpha_a); the sets for v are the
// sets for s_a v plus, for each of those orthogonal to b, the extension by
// b. Equals the direct filtering of enumerate_nilradical (tested).
// Throws input_error if v is not in W^P.
std::vector<OrthogonalSet> enumerate_fiber_inductive(const ParabolicQuotient& q,
                                                     const WeylElement& v);

HermitianOrbits enumerate_hermitian(const ParabolicQuotient& q);
inline HermitianOrbits enumerate_hermitian(const HermitianContext& ctx) {
  return enumerate_hermitian(enumerate_WP(ctx));
}

// (l(sigma_{w_P(S)}) + |S|) / 2.
int nilradical_dim(const ParabolicQuotient& q, const OrthogonalSet& S);

// The raising operator; returns pair_id unchanged for the stable case.
int m_alpha(const HermitianOrbits& orb, int pair_id, int alpha);

// {p' != pair : m_alpha(p', alpha) = pair}; has at most two elements.
const std::vector<int>& E_alpha(const HermitianOrbits& orb, int pair_id, int alpha);

bool rr_leq(const HermitianOrbits& orb, int a, int b, BruhatCache& cache);

bool pan_leq(const ParabolicQuotient& q, const OrthogonalSet& R,
             const OrthogonalSet& S, BruhatCache& cache);

// Order of the B-orbits lying over a fixed v in W^P; R, S must be subsets
// of Phi^+(v) (else input_error).
bool fiber_leq(const ParabolicQuotient& q, const WeylElement& v,
               const OrthogonalSet& R, const OrthogonalSet& S, BruhatCache& cache);

struct OrbitPoset {
  enum class Space { nilradical, hermitian, fiber };
  Space space = Space::hermitian;
  int n = 0;
  std::vector<Bitset> leq;  // leq[i].test(j)  <=>  node i <= node j
  std::vector<int> dims;
  std::vector<std::pair<int, int>> covers;        // (child, parent), sorted
  std::vector<std::array<int, 3>> decorations;    // (child, parent, alpha)

  bool leq_at(int i, int j) const { return leq[i].test(j); }
};

// Pairwise rr_leq. With restrict_by_length, pairs with L(a) > L(b) are
// skipped as unrelated (sound for a != b; used for large contexts only).
OrbitPoset rr_order(const HermitianOrbits& orb, BruhatCache& cache,
                    int threads = 1, bool restrict_by_length = false);

// Fixpoint of the generation scheme: seed O <= m_alpha(O), then close under
// transitivity and the monotonicity rule until stable.
OrbitPoset standard_order(const HermitianOrbits& orb);

OrbitPoset nilradical_order(const ParabolicQuotient& q,
                            const std::vector<OrthogonalSet>& sets,
                            BruhatCache& cache);

OrbitPoset fiber_order(const ParabolicQuotient& q, const WeylElement& v,
                       const std::vector<OrthogonalSet>& sets, BruhatCache& cache);

// Checks the partial-order axioms; throws logic_error on violation.
void validate_poset(const OrbitPoset& p);

// Fills covers (transitive reduction) and checks that every cover raises
// dim by exactly one.
void compute_hasse(OrbitPoset& p);

// Fills decorations of a hermitian poset: (child, parent, alpha) whenever
// m_alpha(child) = parent.
void decorate(OrbitPoset& p, const HermitianOrbits& orb);

// v(S) as a basis of the orbit's weight lattice (negative roots).
std::vector<Vec> orbit_weight_lattice(const HermitianOrbits& orb, int pair_id);

}  // namespace borbit
