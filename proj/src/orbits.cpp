#include "borbit/orbits.hpp"

#include <algorithm>

namespace borbit {

namespace {

int apply_root_inv(const RootSystem& rs, const WeylElement& w, int root_idx) {
  return rs.index_of(Vec(w.minv * rs.roots[root_idx]));
}

std::vector<int> apply_to_roots(const RootSystem& rs, const WeylElement& w,
                                const std::vector<int>& roots) {
  std::vector<int> out;
  out.reserve(roots.size());
  for (int r : roots) out.push_back(apply_root(rs, w, r));
  std::sort(out.begin(), out.end());
  return out;
}

void sort_sets(std::vector<OrthogonalSet>& sets) {
  std::sort(sets.begin(), sets.end());
}

}  // namespace

std::vector<OrthogonalSet> enumerate_nilradical(const HermitianContext& ctx) {
  const RootSystem& rs = ctx.rs;
  std::vector<OrthogonalSet> out;
  std::vector<int> cur;
  auto extend = [&](auto&& self, std::size_t start) -> void {
    out.push_back(OrthogonalSet{cur});
    for (std::size_t k = start; k < ctx.psi.size(); ++k) {
      int cand = ctx.psi[k];
      bool ok = true;
      for (int r : cur)
        if (pairing(rs, cand, r) != 0) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(cand);
      self(self, k + 1);
      cur.pop_back();
    }
  };
  extend(extend, 0);
  sort_sets(out);
  return out;
}

std::vector<OrthogonalSet> enumerate_fiber_inductive(const ParabolicQuotient& q,
                                                     const WeylElement& v) {
  const RootSystem& rs = q.ctx.rs;
  if (!v.inversions.subset_of(q.ctx.psi_mask))
    throw input_error("enumerate_fiber_inductive: element is not in W^P");

  auto rec = [&](auto&& self, const WeylElement& w) -> std::vector<OrthogonalSet> {
    if (w.length == 0) return {OrthogonalSet{}};
    int a = first_left_descent(w);
    int beta = rs.index_of(Vec(-(w.minv.col(a))));  // -w^{-1}(alpha_a)
    WeylElement shorter = mul(rs, simple_reflection(rs, a), w);
    std::vector<OrthogonalSet> base = self(self, shorter);
    std::vector<OrthogonalSet> out = base;
    for (const OrthogonalSet& s : base) {
      bool orth = true;
      for (int r : s.roots)
        if (pairing(rs, beta, r) != 0) {
          orth = false;
          break;
        }
      if (!orth) continue;
      OrthogonalSet ext = s;
      ext.roots.insert(std::upper_bound(ext.roots.begin(), ext.roots.end(), beta),
                       beta);
      out.push_back(std::move(ext));
    }
    return out;
  };
  std::vector<OrthogonalSet> out = rec(rec, v);
  sort_sets(out);
  return out;
}

int HermitianOrbits::pair_id(int v_id, const std::vector<int>& roots) const {
  auto it = index.find({v_id, roots});
  return it == index.end() ? -1 : it->second;
}

static int m_alpha_compute(const HermitianOrbits& orb, int pair_id, int alpha);

HermitianOrbits enumerate_hermitian(const ParabolicQuotient& q) {
  const RootSystem& rs = q.ctx.rs;
  HermitianOrbits orb;
  orb.q = q;
  const int psi_size = static_cast<int>(q.ctx.psi.size());

  for (int v_id = 0; v_id < q.size(); ++v_id) {
    const WeylElement& v = q.elements[v_id];
    for (OrthogonalSet& s : enumerate_fiber_inductive(q, v)) {
      AdmissiblePair p;
      p.v = v_id;
      p.sigma = sigma_of(rs, apply_to_roots(rs, v, s.roots));  // sigma_{v(S)}
      p.L = p.sigma.L;
      p.dim = psi_size + p.L;
      WeylElement v_sigma_S = mul(rs, v, sigma_of(rs, s.roots).element);
      p.nu = q.id_of(min_coset_rep(rs, q.ctx, v_sigma_S));
      if (p.nu < 0) throw std::logic_error("[v sigma_S]^P is not in W^P");
      if (!wp_leq(orb.q, p.nu, p.v))
        throw std::logic_error("admissible pair with nu not below v");
      p.S = std::move(s);
      orb.index.emplace(std::make_pair(v_id, p.S.roots),
                        static_cast<int>(orb.pairs.size()));
      orb.pairs.push_back(std::move(p));
    }
  }

  const int n = orb.size();
  orb.m_table.assign(n, std::vector<int>(rs.rank, -1));
  for (int p = 0; p < n; ++p)
    for (int a = 0; a < rs.rank; ++a) orb.m_table[p][a] = m_alpha_compute(orb, p, a);

  orb.e_table.assign(n, std::vector<std::vector<int>>(rs.rank));
  for (int p = 0; p < n; ++p)
    for (int a = 0; a < rs.rank; ++a) {
      int img = orb.m_table[p][a];
      if (img != p) orb.e_table[img][a].push_back(p);
    }
  for (int p = 0; p < n; ++p)
    for (int a = 0; a < rs.rank; ++a)
      if (orb.e_table[p][a].size() > 2)
        throw std::logic_error("E_alpha with more than two elements");
  return orb;
}

int nilradical_dim(const ParabolicQuotient& q, const OrthogonalSet& S) {
  const RootSystem& rs = q.ctx.rs;
  Involution s = sigma_of(rs, apply_to_roots(rs, q.w_P, S.roots));
  return (s.element.length + S.size()) / 2;
}

// The unique raising candidate, validated; any failed constraint means the
// orbit is stable under the minimal parabolic of alpha.
static int m_alpha_compute(const HermitianOrbits& orb, int pair_id, int alpha) {
  const ParabolicQuotient& q = orb.q;
  const RootSystem& rs = q.ctx.rs;
  const AdmissiblePair& p = orb.pairs[pair_id];

  Involution sigma_up = circle(rs, alpha, p.sigma);
  if (sigma_up.element.length < p.sigma.element.length) return pair_id;  // lowering

  // v' = the longer of v and [s_alpha v]^P.
  const WeylElement& v = q.elements[p.v];
  int vp_id = p.v;
  Vec lifted = v.minv.col(alpha);  // v^{-1}(alpha)
  if (is_nonneg(lifted) && lifted[q.ctx.node] == 1) {
    WeylElement sv = mul(rs, simple_reflection(rs, alpha), v);
    vp_id = q.id_of(sv);
    if (vp_id < 0) throw std::logic_error("s_alpha v escaped W^P");
  }
  const WeylElement& vp = q.elements[vp_id];

  // S' via the negative selection of the raised involution.
  PhiSigmaSplit split = phi_sigma_split(rs, sigma_up);
  if (!pairwise_orthogonal(rs, split.negative_selection)) return pair_id;
  if (!(sigma_of(rs, split.negative_selection).element == sigma_up.element))
    return pair_id;
  std::vector<int> s_roots;
  s_roots.reserve(split.negative_selection.size());
  for (int neg : split.negative_selection) {
    int pre = apply_root_inv(rs, vp, neg);
    if (!q.ctx.in_psi(pre)) return pair_id;  // not a positive root of Psi
    s_roots.push_back(pre);
  }
  std::sort(s_roots.begin(), s_roots.end());

  // nu' must be the shorter of nu and [s_alpha nu]^P.
  const WeylElement& nu = q.elements[p.nu];
  WeylElement s_nu = mul(rs, simple_reflection(rs, alpha), nu);
  int cand_nu = p.nu;
  if (s_nu.length < nu.length) {
    cand_nu = q.id_of(s_nu);
    if (cand_nu < 0) throw std::logic_error("shortened nu escaped W^P");
  }
  WeylElement vp_sigma = mul(rs, vp, sigma_of(rs, s_roots).element);
  int actual_nu = q.id_of(min_coset_rep(rs, q.ctx, vp_sigma));
  if (actual_nu != cand_nu) return pair_id;

  int img = orb.pair_id(vp_id, s_roots);
  if (img < 0) throw std::logic_error("validated raising image is not enumerated");
  return img;
}

int m_alpha(const HermitianOrbits& orb, int pair_id, int alpha) {
  if (pair_id < 0 || pair_id >= orb.size())
    throw input_error("m_alpha: pair id out of range");
  if (alpha < 0 || alpha >= orb.q.ctx.rs.rank)
    throw input_error("m_alpha: simple index out of range");
  return orb.m_table[pair_id][alpha];
}

const std::vector<int>& E_alpha(const HermitianOrbits& orb, int pair_id, int alpha) {
  if (pair_id < 0 || pair_id >= orb.size())
    throw input_error("E_alpha: pair id out of range");
  if (alpha < 0 || alpha >= orb.q.ctx.rs.rank)
    throw input_error("E_alpha: simple index out of range");
  return orb.e_table[pair_id][alpha];
}

bool rr_leq(const HermitianOrbits& orb, int a, int b, BruhatCache& cache) {
  if (a < 0 || a >= orb.size() || b < 0 || b >= orb.size())
    throw input_error("rr_leq: pair id out of range");
  const AdmissiblePair& A = orb.pairs[a];
  const AdmissiblePair& B = orb.pairs[b];
  return wp_leq(orb.q, B.nu, A.nu) && wp_leq(orb.q, A.nu, A.v) &&
         wp_leq(orb.q, A.v, B.v) && cache.leq(A.sigma.element, B.sigma.element);
}

bool pan_leq(const ParabolicQuotient& q, const OrthogonalSet& R,
             const OrthogonalSet& S, BruhatCache& cache) {
  const RootSystem& rs = q.ctx.rs;
  Involution sr = sigma_of(rs, apply_to_roots(rs, q.w_P, R.roots));
  Involution ss = sigma_of(rs, apply_to_roots(rs, q.w_P, S.roots));
  return cache.leq(sr.element, ss.element);
}

bool fiber_leq(const ParabolicQuotient& q, const WeylElement& v,
               const OrthogonalSet& R, const OrthogonalSet& S, BruhatCache& cache) {
  const RootSystem& rs = q.ctx.rs;
  for (int r : R.roots)
    if (!v.inversions.test(r))
      throw input_error("fiber_leq: R is not a subset of Phi^+(v)");
  for (int r : S.roots)
    if (!v.inversions.test(r))
      throw input_error("fiber_leq: S is not a subset of Phi^+(v)");
  Involution sr = sigma_of(rs, apply_to_roots(rs, v, R.roots));
  Involution ss = sigma_of(rs, apply_to_roots(rs, v, S.roots));
  return cache.leq(sr.element, ss.element);
}

// ---------------------------------------------------------------------------
// Posets

namespace {

// One Floyd-Warshall pass over boolean rows; returns whether anything grew.
bool transitive_close(std::vector<Bitset>& leq) {
  const int n = static_cast<int>(leq.size());
  bool changed = false;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (leq[i].test(k)) changed |= leq[i].or_with_changed(leq[k]);
  return changed;
}

}  // namespace

void validate_poset(const OrbitPoset& p) {
  for (int i = 0; i < p.n; ++i)
    if (!p.leq[i].test(i)) throw std::logic_error("order is not reflexive");
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j)
      if (i != j && p.leq[i].test(j) && p.leq[j].test(i))
        throw std::logic_error("order is not antisymmetric");
  std::vector<Bitset> closed = p.leq;
  if (transitive_close(closed)) throw std::logic_error("order is not transitive");
}

void compute_hasse(OrbitPoset& p) {
  p.covers.clear();
  for (int i = 0; i < p.n; ++i) {
    for (int j = 0; j < p.n; ++j) {
      if (i == j || !p.leq[i].test(j)) continue;
      bool cover = true;
      for (int k = 0; k < p.n && cover; ++k)
        if (k != i && k != j && p.leq[i].test(k) && p.leq[k].test(j)) cover = false;
      if (!cover) continue;
      if (p.dims[j] != p.dims[i] + 1)
        throw std::logic_error("covering edge does not raise dim by one");
      p.covers.emplace_back(i, j);
    }
  }
  std::sort(p.covers.begin(), p.covers.end());
}

void decorate(OrbitPoset& p, const HermitianOrbits& orb) {
  p.decorations.clear();
  for (auto [child, parent] : p.covers)
    for (int a = 0; a < orb.q.ctx.rs.rank; ++a)
      if (orb.m_table[child][a] == parent)
        p.decorations.push_back({child, parent, a});
  std::sort(p.decorations.begin(), p.decorations.end());
}

OrbitPoset rr_order(const HermitianOrbits& orb, BruhatCache& cache, int threads,
                    bool restrict_by_length) {
  OrbitPoset p;
  p.space = OrbitPoset::Space::hermitian;
  p.n = orb.size();
  p.leq.assign(p.n, Bitset(p.n));
  p.dims.resize(p.n);
  for (int i = 0; i < p.n; ++i) p.dims[i] = orb.pairs[i].dim;
  parallel_rows(p.n, threads, [&](int i) {
    for (int j = 0; j < p.n; ++j) {
      if (restrict_by_length && i != j && orb.pairs[i].L > orb.pairs[j].L) continue;
      if (rr_leq(orb, i, j, cache)) p.leq[i].set(j);
    }
  });
  validate_poset(p);
  compute_hasse(p);
  decorate(p, orb);
  return p;
}

OrbitPoset standard_order(const HermitianOrbits& orb) {
  OrbitPoset p;
  p.space = OrbitPoset::Space::hermitian;
  p.n = orb.size();
  p.leq.assign(p.n, Bitset(p.n));
  p.dims.resize(p.n);
  for (int i = 0; i < p.n; ++i) p.dims[i] = orb.pairs[i].dim;

  const int rank = orb.q.ctx.rs.rank;
  for (int i = 0; i < p.n; ++i) {
    p.leq[i].set(i);
    for (int a = 0; a < rank; ++a) p.leq[i].set(orb.m_table[i][a]);
  }
  for (bool changed = true; changed;) {
    changed = transitive_close(p.leq);
    for (int i = 0; i < p.n; ++i) {
      std::vector<int> above;
      p.leq[i].for_each([&](int j) { above.push_back(j); });
      for (int j : above)
        for (int a = 0; a < rank; ++a) {
          int mi = orb.m_table[i][a], mj = orb.m_table[j][a];
          if (!p.leq[mi].test(mj)) {
            p.leq[mi].set(mj);
            changed = true;
          }
        }
    }
  }
  validate_poset(p);
  compute_hasse(p);
  decorate(p, orb);
  return p;
}

OrbitPoset nilradical_order(const ParabolicQuotient& q,
                            const std::vector<OrthogonalSet>& sets,
                            BruhatCache& cache) {
  OrbitPoset p;
  p.space = OrbitPoset::Space::nilradical;
  p.n = static_cast<int>(sets.size());
  p.leq.assign(p.n, Bitset(p.n));
  p.dims.resize(p.n);
  for (int i = 0; i < p.n; ++i) p.dims[i] = nilradical_dim(q, sets[i]);
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j)
      if (pan_leq(q, sets[i], sets[j], cache)) p.leq[i].set(j);
  validate_poset(p);
  compute_hasse(p);
  return p;
}

OrbitPoset fiber_order(const ParabolicQuotient& q, const WeylElement& v,
                       const std::vector<OrthogonalSet>& sets, BruhatCache& cache) {
  const RootSystem& rs = q.ctx.rs;
  OrbitPoset p;
  p.space = OrbitPoset::Space::fiber;
  p.n = static_cast<int>(sets.size());
  p.leq.assign(p.n, Bitset(p.n));
  p.dims.resize(p.n);
  const int psi_size = static_cast<int>(q.ctx.psi.size());
  for (int i = 0; i < p.n; ++i) {
    Involution s = sigma_of(rs, apply_to_roots(rs, v, sets[i].roots));
    p.dims[i] = psi_size + s.L;
  }
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j)
      if (fiber_leq(q, v, sets[i], sets[j], cache)) p.leq[i].set(j);
  validate_poset(p);
  compute_hasse(p);
  return p;
}

std::vector<Vec> orbit_weight_lattice(const HermitianOrbits& orb, int pair_id) {
  if (pair_id < 0 || pair_id >= orb.size())
    throw input_error("orbit_weight_lattice: pair id out of range");
  const AdmissiblePair& p = orb.pairs[pair_id];
  const RootSystem& rs = orb.q.ctx.rs;
  const WeylElement& v = orb.q.elements[p.v];
  std::vector<Vec> out;
  for (int r : p.S.roots) out.push_back(apply(v, rs.roots[r]));
  return out;
}

}  // namespace borbit
