#pragma once

// Executable property suites over a Hermitian context. Each check walks an
// exhaustive family of cases and records counterexamples; the CLI `verify`
// command and the acceptance suite are thin layers over these.

#include "borbit/document.hpp"

namespace borbit {

struct Check {
  std::string name;
  long cases = 0;
  std::vector<std::string> failures;
  std::string skipped_reason;  // nonempty if the check did not run

  Check() = default;
  explicit Check(std::string n) : name(std::move(n)) {}

  bool ok() const { return failures.empty(); }
  void fail(std::string detail) {
    if (failures.size() < 8) failures.push_back(std::move(detail));
    else if (failures.size() == 8) failures.push_back("... more failures suppressed");
  }
};

namespace checks {

Check root_system_properties(const RootSystem& rs);
Check context_properties(const HermitianContext& ctx);

// Agreement of the three W^P order criteria, plus: a length-one Bruhat step
// inside W^P is always by a simple reflection.
Check quotient_order_criteria(const ParabolicQuotient& q, BruhatCache& cache);
// Descent/ascent structure of W^P: dominance-maximal inversions map to
// minus simple roots, the inversion-set step identity, and the length
// formula via the fundamental coweight.
Check quotient_descents(const ParabolicQuotient& q);

// Bruhat lifting property over the full group.
Check bruhat_lifting(const RootSystem& rs, const std::vector<WeylElement>& group,
                     BruhatCache& cache);

// Circle action vs plain multiplication, and the step of the involution
// length: one per circle move.
Check involution_monotonicity(const RootSystem& rs,
                              const std::vector<WeylElement>& group,
                              BruhatCache& cache);
// Lifting for the circle action across comparable involution pairs, and:
// comparable involutions with non-increasing L are equal.
Check involution_lifting(const RootSystem& rs,
                         const std::vector<WeylElement>& group,
                         BruhatCache& cache);

// Half-sum characterization of sigma_S-negated roots, the long/short split,
// injectivity of (v,S) -> sigma_{v(S)} ... -> v(S), and the negative-selection
// reconstruction.
Check sigma_structure(const HermitianOrbits& orb);

// Dimension formulas and cached invariants of admissible pairs.
Check pair_invariants(const HermitianOrbits& orb);

// Inductive fiber enumeration equals direct filtering of the nilradical list.
Check enumeration_consistency(const HermitianOrbits& orb);
// Brute-force subset oracle for the nilradical and pair counts; skipped when
// Psi is too large to enumerate subsets.
Check enumeration_brute_force(const HermitianOrbits& orb);

// Raising operator: idempotence, dim step, involution step, order
// compatibility, fiber sizes.
Check raising_consistency(const HermitianOrbits& orb, BruhatCache& cache);
// Lowering fibers: the two-element characterization and the contracted-pair
// pattern in doubled-root position.
Check lowering_fibers(const HermitianOrbits& orb);

// Generated order == pairwise comparison order.
Check order_equivalence(const HermitianOrbits& orb, BruhatCache& cache,
                        int threads);
// Restriction to fixed v equals the fiber order; nilradical order equals the
// fiber order at w^P; comparable pairs with non-increasing L are equal;
// minimal/maximal structure.
Check order_restrictions(const HermitianOrbits& orb, BruhatCache& cache);

// Byte comparison of the C2 node-2 documents against the checked-in
// fixtures; input_error for any other context.
Check golden_sp4(const HermitianContext& ctx, int threads);

}  // namespace checks

struct SuiteOptions {
  int threads = 1;
  bool force = false;
  std::size_t weyl_limit = 200000;  // guard for full-group enumeration
};

// suite is one of: all, gp1, inv, dim, malpha, order-eq, golden.
std::vector<Check> run_suite(const std::string& suite, const HermitianContext& ctx,
                             const SuiteOptions& opts);

}  // namespace borbit
