#include "borbit/checks.hpp"

#include "borbit/golden.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace borbit {

namespace {

std::string word_of(const WeylElement& w) {
  if (w.word.empty()) return "e";
  std::string s;
  for (int i : w.word) s += std::to_string(i + 1);
  return s;
}

std::string set_str(const RootSystem& rs, const std::vector<int>& roots) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < roots.size(); ++i) {
    os << (i ? "," : "") << "[";
    const Vec& r = rs.roots[roots[i]];
    for (Eigen::Index k = 0; k < r.size(); ++k) os << (k ? "," : "") << r[k];
    os << "]";
  }
  os << "}";
  return os.str();
}

std::string pair_str(const HermitianOrbits& orb, int id) {
  const AdmissiblePair& p = orb.pairs[id];
  std::ostringstream os;
  os << "(" << word_of(orb.q.elements[p.v]) << ", "
     << set_str(orb.q.ctx.rs, p.S.roots) << ")";
  return os.str();
}

// All orthogonal subsets of Psi by bitmask brute force (independent of the
// backtracking enumerator); only for small Psi.
std::vector<std::vector<int>> brute_orthogonal_subsets(const HermitianContext& ctx) {
  const auto& psi = ctx.psi;
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 0; mask < (1u << psi.size()); ++mask) {
    std::vector<int> s;
    for (std::size_t k = 0; k < psi.size(); ++k)
      if (mask & (1u << k)) s.push_back(psi[k]);
    if (pairwise_orthogonal(ctx.rs, s)) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

namespace checks {

Check root_system_properties(const RootSystem& rs) {
  Check c("root-system-properties");
  // Reflection stability, exhaustively.
  for (int i = 0; i < rs.num_roots(); ++i)
    for (int j = 0; j < rs.num_roots(); ++j) {
      ++c.cases;
      Vec img = reflect(rs, rs.roots[j], rs.roots[i]);
      if (!rs.is_root(img)) c.fail("reflection image is not a root");
    }
  // Height additivity and the unique height maximum.
  const Vec& theta = rs.roots[rs.highest];
  for (int i = 0; i < rs.n_positive; ++i) {
    ++c.cases;
    if (rs.height(i) != static_cast<int>(rs.roots[i].sum()))
      c.fail("height mismatch");
    if (i != rs.highest && rs.roots[i].sum() >= theta.sum())
      c.fail("highest root does not uniquely maximize height");
    if (!dominance_leq(rs.roots[i], theta))
      c.fail("positive root not below the highest root in dominance");
  }
  // Two lengths at most; all equal exactly in the simply-laced types.
  std::set<Int> lengths;
  for (int i = 0; i < rs.n_positive; ++i) lengths.insert(rs.norm2[i]);
  if (lengths.size() > 2) c.fail("more than two root lengths");
  if ((lengths.size() == 1) != rs.simply_laced())
    c.fail("length count inconsistent with the Cartan type");
  // Greedy simple-root chains between dominance-comparable positive roots.
  for (int a = 0; a < rs.n_positive; ++a)
    for (int b = 0; b < rs.n_positive; ++b) {
      if (!dominance_leq(rs.roots[a], rs.roots[b])) continue;
      ++c.cases;
      auto chain = dominance_chain(rs, a, b);
      if (!chain)
        c.fail("no simple-root chain between comparable positive roots");
      else if (chain->front() != a || chain->back() != b)
        c.fail("dominance chain has wrong endpoints");
    }
  return c;
}

Check context_properties(const HermitianContext& ctx) {
  Check c("context-properties");
  const RootSystem& rs = ctx.rs;
  // Partition Psi ⊔ Phi^+_P.
  if (static_cast<int>(ctx.psi.size() + ctx.phi_P_plus.size()) != rs.n_positive)
    c.fail("Psi and Phi^+_P do not partition the positive roots");
  // Abelianness and the orthogonal-pair exclusion beta +- beta'.
  for (int a : ctx.psi)
    for (int b : ctx.psi) {
      ++c.cases;
      if (rs.is_root(Vec(rs.roots[a] + rs.roots[b])))
        c.fail("beta + beta' is a root for beta, beta' in Psi");
      if (a != b && pairing(rs, a, b) == 0 &&
          rs.is_root(Vec(rs.roots[a] - rs.roots[b])))
        c.fail("beta - beta' is a root for orthogonal beta, beta' in Psi");
    }
  // Cominuscule pairing criterion.
  for (int i = 0; i < rs.n_positive; ++i) {
    ++c.cases;
    Int v = coweight_pairing(rs, ctx.omega_P_covee, rs.roots[i]);
    if (v != 0 && v != 1) c.fail("<omega_P^vee, alpha> outside {0,1}");
  }
  // ZS ∩ Phi^+ = S for every orthogonal subset.
  for (const OrthogonalSet& s : enumerate_nilradical(ctx)) {
    for (int g = 0; g < rs.n_positive; ++g) {
      ++c.cases;
      // gamma in ZS iff the orthogonal projection onto span(S) has integer
      // coefficients and reproduces gamma.
      Vec acc = Vec::Zero(rs.rank);
      bool integral = true;
      for (int b : s.roots) {
        Int num = rs.roots[g].dot(rs.bilinear * rs.roots[b]);
        Int den = rs.norm2[b];
        if (num % den != 0) {
          integral = false;
          break;
        }
        acc += (num / den) * rs.roots[b];
      }
      bool in_lattice = integral && exact_eq(acc, rs.roots[g]);
      bool in_set = std::binary_search(s.roots.begin(), s.roots.end(), g);
      if (in_lattice != in_set)
        c.fail("ZS ∩ Phi^+ differs from S at " + set_str(rs, {g}));
    }
  }
  return c;
}

Check quotient_order_criteria(const ParabolicQuotient& q, BruhatCache& cache) {
  Check c("quotient-order-criteria");
  const RootSystem& rs = q.ctx.rs;
  for (int u = 0; u < q.size(); ++u)
    for (int v = 0; v < q.size(); ++v) {
      ++c.cases;
      try {
        wp_leq_verified(q, u, v, cache);
      } catch (const std::logic_error& e) {
        c.fail(e.what());
      }
    }
  // A Bruhat step of length one inside W^P is left multiplication by a
  // reflection in a simple root.
  std::unordered_map<Mat, int, MatHash, MatEq> refl_root;
  for (int p = 0; p < rs.n_positive; ++p)
    refl_root.emplace(reflection(rs, p).m, p);
  for (int u = 0; u < q.size(); ++u)
    for (int v = 0; v < q.size(); ++v) {
      if (q.elements[u].length + 1 != q.elements[v].length) continue;
      Mat t = q.elements[u].m * q.elements[v].minv;
      auto it = refl_root.find(t);
      if (it == refl_root.end()) continue;
      ++c.cases;
      if (rs.simple_index(it->second) < 0)
        c.fail("length-one step u = s_gamma v in W^P with gamma not simple: u=" +
               word_of(q.elements[u]) + " v=" + word_of(q.elements[v]));
    }
  return c;
}

Check quotient_descents(const ParabolicQuotient& q) {
  Check c("quotient-descents");
  const RootSystem& rs = q.ctx.rs;
  for (int v_id = 0; v_id < q.size(); ++v_id) {
    const WeylElement& v = q.elements[v_id];
    auto descents = wp_descents(q, v_id);
    // Every simple with s_a v < v appears exactly once, with the step
    // identity Phi^+(v) = Phi^+(s_a v) ⊔ {-v^{-1}(alpha_a)}.
    for (int a = 0; a < rs.rank; ++a) {
      ++c.cases;
      bool is_descent = is_nonpos(Vec(v.minv.col(a)));
      bool listed = std::any_of(descents.begin(), descents.end(),
                                [&](auto& d) { return d.first == a; });
      if (is_descent != listed) {
        c.fail("descent list mismatch at v=" + word_of(v));
        continue;
      }
      if (!is_descent) continue;
      int beta = rs.index_of(Vec(-v.minv.col(a)));
      WeylElement shorter = mul(rs, simple_reflection(rs, a), v);
      Bitset expect = shorter.inversions;
      expect.set(beta);
      if (!(expect == v.inversions))
        c.fail("inversion-set step identity fails at v=" + word_of(v));
      if (q.id_of(shorter) < 0)
        c.fail("descent leaves W^P at v=" + word_of(v));
    }
    // Ascents come from dominance-minimal elements of Psi \ Phi^+(v).
    for (auto [a, beta] : wp_ascents(q, v_id)) {
      ++c.cases;
      if (is_nonpos(Vec(v.m * rs.roots[beta])))
        c.fail("ascent root already an inversion at v=" + word_of(v));
      WeylElement longer = mul(rs, simple_reflection(rs, a), v);
      if (longer.length != v.length + 1 || q.id_of(longer) < 0)
        c.fail("ascent does not raise within W^P at v=" + word_of(v));
    }
    // Length via the fundamental coweight.
    ++c.cases;
    Vec diff = q.ctx.omega_P_covee.num - q.omega_numerators[v_id];
    Int den = q.ctx.omega_P_covee.den;
    Int height = 0;
    bool integral = true;
    for (Eigen::Index i = 0; i < diff.size(); ++i) {
      if (diff[i] % den != 0) integral = false;
      height += diff[i] / den;
    }
    if (!integral || height != v.length)
      c.fail("length differs from height(omega - v omega) at v=" + word_of(v));
  }
  return c;
}

Check bruhat_lifting(const RootSystem& rs, const std::vector<WeylElement>& group,
                     BruhatCache& cache) {
  Check c("bruhat-lifting");
  const int n = static_cast<int>(group.size());
  for (int ui = 0; ui < n; ++ui)
    for (int vi = 0; vi < n; ++vi) {
      const WeylElement& u = group[ui];
      const WeylElement& v = group[vi];
      if (u == v || !cache.leq(u, v)) continue;
      for (int a = 0; a < rs.rank; ++a) {
        ++c.cases;
        WeylElement su = mul(rs, simple_reflection(rs, a), u);
        WeylElement sv = mul(rs, simple_reflection(rs, a), v);
        bool u_up = su.length > u.length;
        bool v_up = sv.length > v.length;
        if (u_up && v_up && !(cache.leq(su, sv) && !(su == sv)))
          c.fail("lifting (raise, raise) fails at u=" + word_of(u) + " v=" + word_of(v));
        if (!u_up && !v_up && !(cache.leq(su, sv) && !(su == sv)))
          c.fail("lifting (lower, lower) fails at u=" + word_of(u) + " v=" + word_of(v));
        if (u_up && !v_up && (!cache.leq(u, sv) || !cache.leq(su, v)))
          c.fail("lifting (raise, lower) fails at u=" + word_of(u) + " v=" + word_of(v));
      }
    }
  return c;
}

static std::vector<Involution> involutions_of(const RootSystem& rs,
                                              const std::vector<WeylElement>& group) {
  std::vector<Involution> out;
  for (const WeylElement& w : group)
    if (exact_eq(Mat(w.m * w.m), Mat(Mat::Identity(rs.rank, rs.rank))))
      out.push_back(make_involution(rs, w));
  return out;
}

Check involution_monotonicity(const RootSystem& rs,
                              const std::vector<WeylElement>& group,
                              BruhatCache& cache) {
  Check c("involution-monotonicity");
  for (const Involution& s : involutions_of(rs, group)) {
    for (int a = 0; a < rs.rank; ++a) {
      ++c.cases;
      Involution cs = circle(rs, a, s);
      WeylElement plain = mul(rs, simple_reflection(rs, a), s.element);
      bool circle_up = cs.element.length > s.element.length;
      bool plain_up = plain.length > s.element.length;
      if (circle_up != plain_up)
        c.fail("circle direction differs from plain multiplication at sigma=" +
               word_of(s.element));
      if (cache.leq(s.element, cs.element) != circle_up ||
          cache.leq(cs.element, s.element) == circle_up)
        c.fail("circle action not Bruhat-monotone at sigma=" + word_of(s.element));
      if (cs.L != s.L + (circle_up ? 1 : -1))
        c.fail("involution length step is not +-1 at sigma=" + word_of(s.element));
      Involution back = circle(rs, a, cs);
      if (!(back.element == s.element))
        c.fail("circle action is not an involution at sigma=" + word_of(s.element));
    }
  }
  return c;
}

Check involution_lifting(const RootSystem& rs,
                         const std::vector<WeylElement>& group,
                         BruhatCache& cache) {
  Check c("involution-lifting");
  std::vector<Involution> invs = involutions_of(rs, group);
  std::vector<std::vector<Involution>> circles(invs.size());
  for (std::size_t i = 0; i < invs.size(); ++i)
    for (int a = 0; a < rs.rank; ++a)
      circles[i].push_back(circle(rs, a, invs[i]));
  for (std::size_t si = 0; si < invs.size(); ++si)
    for (std::size_t ti = 0; ti < invs.size(); ++ti) {
      const Involution& s = invs[si];
      const Involution& t = invs[ti];
      if (s.element == t.element) continue;
      if (!cache.leq(s.element, t.element)) continue;
      // bruhat-L compatibility: sigma < tau forces L(sigma) < L(tau).
      ++c.cases;
      if (s.L >= t.L)
        c.fail("comparable involutions with non-increasing L: sigma=" +
               word_of(s.element) + " tau=" + word_of(t.element));
      for (int a = 0; a < rs.rank; ++a) {
        ++c.cases;
        const Involution& cs = circles[si][a];
        const Involution& ct = circles[ti][a];
        bool s_up = cs.element.length > s.element.length;
        bool t_up = ct.element.length > t.element.length;
        if (s_up && t_up &&
            !(cache.leq(cs.element, ct.element) && !(cs.element == ct.element)))
          c.fail("circle lifting (raise, raise) fails at sigma=" +
                 word_of(s.element) + " tau=" + word_of(t.element));
        if (!s_up && !t_up &&
            !(cache.leq(cs.element, ct.element) && !(cs.element == ct.element)))
          c.fail("circle lifting (lower, lower) fails at sigma=" +
                 word_of(s.element) + " tau=" + word_of(t.element));
        if (s_up && !t_up &&
            (!cache.leq(cs.element, t.element) || !cache.leq(s.element, ct.element)))
          c.fail("circle lifting (raise, lower) fails at sigma=" +
                 word_of(s.element) + " tau=" + word_of(t.element));
      }
    }
  return c;
}

Check sigma_structure(const HermitianOrbits& orb) {
  Check c("sigma-structure");
  const HermitianContext& ctx = orb.q.ctx;
  const RootSystem& rs = ctx.rs;

  for (const OrthogonalSet& s : enumerate_nilradical(ctx)) {
    ++c.cases;
    Involution sigma = sigma_of(rs, s.roots);
    if (sigma.lambda != s.size()) c.fail("lambda(sigma_S) != |S|");

    // Brute-force negated set vs the half-sum characterization.
    std::set<int> brute;
    for (int i = 0; i < rs.num_roots(); ++i)
      if (apply_root(rs, sigma.element, i) == rs.negate(i)) brute.insert(i);
    std::set<int> halfsum;
    for (int a : s.roots)
      for (int b : s.roots)
        for (int ea : {1, -1})
          for (int eb : {1, -1}) {
            Vec sum = ea * rs.roots[a] + eb * rs.roots[b];
            bool even = true;
            for (Eigen::Index k = 0; k < sum.size(); ++k)
              if (sum[k] % 2 != 0) even = false;
            if (!even) continue;
            Vec half = sum / 2;
            if (rs.is_root(half)) halfsum.insert(rs.index_of(half));
          }
    if (brute != halfsum)
      c.fail("half-sum characterization fails for S=" + set_str(rs, s.roots));

    // Long/short split of the negated set.
    std::vector<int> s_long, s_short;
    for (int r : s.roots) (rs.is_long(r) ? s_long : s_short).push_back(r);
    std::set<int> expect_long_part, expect_short_part;
    for (int r : s_long) {
      expect_long_part.insert(r);
      expect_long_part.insert(rs.negate(r));
    }
    for (int r : s_short) {
      expect_short_part.insert(r);
      expect_short_part.insert(rs.negate(r));
    }
    std::set<int> got_long_part, got_short_part;
    for (int i : brute) {
      if (rs.is_long(i)) got_long_part.insert(i);
      else {
        bool orth = true;
        for (int l : s_long)
          if (pairing(rs, i, l) != 0) orth = false;
        if (orth) got_short_part.insert(i);
      }
    }
    if (rs.simply_laced()) {
      if (got_long_part != std::set<int>(brute.begin(), brute.end()) ||
          expect_long_part.size() + expect_short_part.size() != brute.size())
        c.fail("simply-laced split fails for S=" + set_str(rs, s.roots));
    } else {
      if (got_long_part != expect_long_part)
        c.fail("long part of the split fails for S=" + set_str(rs, s.roots));
      if (got_short_part != expect_short_part)
        c.fail("short-orthogonal part of the split fails for S=" + set_str(rs, s.roots));
    }
  }

  // sigma determines v(S), and the negative selection recovers it.
  std::map<std::vector<Int>, std::vector<int>> by_sigma;
  for (int id = 0; id < orb.size(); ++id) {
    ++c.cases;
    const AdmissiblePair& p = orb.pairs[id];
    const WeylElement& v = orb.q.elements[p.v];
    std::vector<int> image;
    for (int r : p.S.roots) image.push_back(apply_root(rs, v, r));
    std::sort(image.begin(), image.end());

    std::vector<Int> key(p.sigma.element.m.data(),
                         p.sigma.element.m.data() + p.sigma.element.m.size());
    auto [it, inserted] = by_sigma.emplace(key, image);
    if (!inserted && it->second != image)
      c.fail("equal involutions with different v(S): " + pair_str(orb, id));

    PhiSigmaSplit split = phi_sigma_split(rs, p.sigma);
    if (split.negative_selection != image)
      c.fail("negative selection does not recover v(S) at " + pair_str(orb, id));
  }
  return c;
}

Check pair_invariants(const HermitianOrbits& orb) {
  Check c("pair-invariants");
  const ParabolicQuotient& q = orb.q;
  const RootSystem& rs = q.ctx.rs;
  const int psi_size = static_cast<int>(q.ctx.psi.size());
  for (int id = 0; id < orb.size(); ++id) {
    ++c.cases;
    const AdmissiblePair& p = orb.pairs[id];
    const WeylElement& v = q.elements[p.v];
    for (int r : p.S.roots)
      if (!v.inversions.test(r)) c.fail("S not inside Phi^+(v) at " + pair_str(orb, id));
    if (p.dim != psi_size + p.L) c.fail("dim != |Psi| + L at " + pair_str(orb, id));
    if (2 * (p.dim - psi_size) != p.sigma.element.length + p.S.size())
      c.fail("dim - |Psi| != (l(sigma)+|S|)/2 at " + pair_str(orb, id));
    if (!wp_leq(q, p.nu, p.v)) c.fail("nu not below v at " + pair_str(orb, id));
    if ((p.S.size() == 0) != (p.dim == psi_size))
      c.fail("S = {} does not match dim = |Psi| at " + pair_str(orb, id));
  }
  // Nilradical dimension agrees with the fiber at w^P.
  for (const OrthogonalSet& s : enumerate_nilradical(q.ctx)) {
    ++c.cases;
    int id = orb.pair_id(q.longest, s.roots);
    if (id < 0) {
      c.fail("nilradical set missing from the w^P fiber");
      continue;
    }
    if (nilradical_dim(q, s) != orb.pairs[id].dim - psi_size)
      c.fail("nilradical dim formula disagrees with the fiber dim at set " +
             set_str(rs, s.roots));
  }
  return c;
}

Check enumeration_consistency(const HermitianOrbits& orb) {
  Check c("enumeration-consistency");
  const ParabolicQuotient& q = orb.q;
  std::vector<OrthogonalSet> nil = enumerate_nilradical(q.ctx);

  for (int v_id = 0; v_id < q.size(); ++v_id) {
    ++c.cases;
    const WeylElement& v = q.elements[v_id];
    std::vector<OrthogonalSet> inductive = enumerate_fiber_inductive(q, v);
    std::vector<OrthogonalSet> filtered;
    for (const OrthogonalSet& s : nil) {
      bool inside = std::all_of(s.roots.begin(), s.roots.end(),
                                [&](int r) { return v.inversions.test(r); });
      if (inside) filtered.push_back(s);
    }
    if (inductive != filtered)
      c.fail("inductive fiber enumeration differs from filtering at v=" + word_of(v));
  }
  return c;
}

Check enumeration_brute_force(const HermitianOrbits& orb) {
  Check c("enumeration-brute-force");
  const ParabolicQuotient& q = orb.q;
  if (q.ctx.psi.size() > 20) {
    c.skipped_reason = "Psi too large for the subset brute force";
    return c;
  }
  std::vector<OrthogonalSet> nil = enumerate_nilradical(q.ctx);
  auto brute = brute_orthogonal_subsets(q.ctx);
  ++c.cases;
  if (brute.size() != nil.size())
    c.fail("nilradical count differs from the subset brute force");
  long pair_count = 0;
  for (int v_id = 0; v_id < q.size(); ++v_id)
    for (const auto& s : brute) {
      bool inside = std::all_of(s.begin(), s.end(), [&](int r) {
        return q.elements[v_id].inversions.test(r);
      });
      if (inside) ++pair_count;
    }
  ++c.cases;
  if (pair_count != orb.size())
    c.fail("admissible pair count differs from the subset brute force");
  return c;
}

Check raising_consistency(const HermitianOrbits& orb, BruhatCache& cache) {
  Check c("raising-consistency");
  const RootSystem& rs = orb.q.ctx.rs;
  for (int id = 0; id < orb.size(); ++id) {
    const AdmissiblePair& p = orb.pairs[id];
    for (int a = 0; a < rs.rank; ++a) {
      ++c.cases;
      int m = orb.m_table[id][a];
      Involution up = circle(rs, a, p.sigma);
      bool raising = up.element.length > p.sigma.element.length;
      const auto& fiber = orb.e_table[id][a];
      if (fiber.size() + 1 > 3) c.fail("minimal-parabolic fiber larger than 3");
      if (!fiber.empty() != !raising) {
        // E nonempty iff the circle action lowers sigma.
        c.fail("lowering fiber emptiness disagrees with the circle direction at " +
               pair_str(orb, id));
      }
      for (int pre : fiber)
        if (orb.m_table[pre][a] != id)
          c.fail("lowering fiber member does not raise back at " + pair_str(orb, id));
      if (m == id) continue;
      const AdmissiblePair& img = orb.pairs[m];
      if (img.dim != p.dim + 1)
        c.fail("raising does not add one to dim at " + pair_str(orb, id));
      if (!(img.sigma.element == up.element) || !raising)
        c.fail("raised involution is not the circle image at " + pair_str(orb, id));
      if (orb.m_table[m][a] != m)
        c.fail("raising is not idempotent at " + pair_str(orb, id));
      if (!rr_leq(orb, id, m, cache))
        c.fail("orbit not below its raising image at " + pair_str(orb, id));
    }
  }
  return c;
}

Check lowering_fibers(const HermitianOrbits& orb) {
  Check c("lowering-fibers");
  const ParabolicQuotient& q = orb.q;
  const RootSystem& rs = q.ctx.rs;
  for (int id = 0; id < orb.size(); ++id) {
    const AdmissiblePair& p = orb.pairs[id];
    const WeylElement& v = q.elements[p.v];
    for (int a = 0; a < rs.rank; ++a) {
      ++c.cases;
      const auto& fiber = orb.e_table[id][a];

      // Two-element fibers happen exactly when beta = -v^{-1}(alpha) is in S,
      // and then the fiber is {(s_a v, S minus beta), (v, S minus beta)}.
      Vec lifted = v.minv.col(a);
      bool beta_in_S = false;
      int beta = -1;
      if (is_nonpos(lifted)) {
        beta = rs.index_of(Vec(-lifted));
        beta_in_S = std::binary_search(p.S.roots.begin(), p.S.roots.end(), beta);
      }
      if ((fiber.size() == 2) != beta_in_S) {
        c.fail("two-element fiber characterization fails at " + pair_str(orb, id) +
               " alpha=" + std::to_string(a + 1));
        continue;
      }
      if (beta_in_S) {
        std::vector<int> reduced;
        for (int r : p.S.roots)
          if (r != beta) reduced.push_back(r);
        WeylElement sv = mul(rs, simple_reflection(rs, a), v);
        int id_short = orb.pair_id(q.id_of(sv), reduced);
        int id_same = orb.pair_id(p.v, reduced);
        std::vector<int> expect{id_short, id_same};
        std::sort(expect.begin(), expect.end());
        std::vector<int> got = fiber;
        std::sort(got.begin(), got.end());
        if (expect != got)
          c.fail("two-element fiber has unexpected members at " + pair_str(orb, id));
      }

      // Doubled-root position: v^{-1}(alpha) simple in Delta_P and some
      // gamma, gamma - 2 beta' both in S force the one-element contracted
      // fiber {(v, S with the pair replaced by gamma - beta')}.
      if (is_nonneg(lifted) && rs.is_root(lifted)) {
        int bp = rs.index_of(lifted);
        int simple = rs.simple_index(bp);
        if (simple >= 0 && simple != q.ctx.node) {
          for (int g : p.S.roots) {
            Vec low = rs.roots[g] - 2 * rs.roots[bp];
            if (!rs.is_root(low)) continue;
            int g2 = rs.index_of(low);
            if (!std::binary_search(p.S.roots.begin(), p.S.roots.end(), g2)) continue;
            ++c.cases;
            std::vector<int> replaced;
            for (int r : p.S.roots)
              if (r != g && r != g2) replaced.push_back(r);
            int g0 = rs.index_of(Vec(rs.roots[g] - rs.roots[bp]));
            replaced.push_back(g0);
            std::sort(replaced.begin(), replaced.end());
            int expect = orb.pair_id(p.v, replaced);
            if (fiber.size() != 1 || expect < 0 || fiber[0] != expect)
              c.fail("contracted one-element fiber fails at " + pair_str(orb, id) +
                     " alpha=" + std::to_string(a + 1));
          }
        }
      }
    }
  }
  return c;
}

Check order_equivalence(const HermitianOrbits& orb, BruhatCache& cache,
                        int threads) {
  Check c("order-equivalence");
  OrbitPoset generated = standard_order(orb);
  OrbitPoset pairwise = rr_order(orb, cache, threads);
  c.cases += static_cast<long>(orb.size()) * orb.size();
  for (int i = 0; i < orb.size(); ++i) {
    if (generated.leq[i] == pairwise.leq[i]) continue;
    for (int j = 0; j < orb.size(); ++j)
      if (generated.leq[i].test(j) != pairwise.leq[i].test(j))
        c.fail("generated and pairwise orders differ on " + pair_str(orb, i) +
               " <= " + pair_str(orb, j));
  }
  if (generated.covers != pairwise.covers)
    c.fail("generated and pairwise orders have different covers");
  return c;
}

Check order_restrictions(const HermitianOrbits& orb, BruhatCache& cache) {
  Check c("order-restrictions");
  const ParabolicQuotient& q = orb.q;
  const int psi_size = static_cast<int>(q.ctx.psi.size());

  // Same-v restriction equals the fiber order.
  for (int a = 0; a < orb.size(); ++a)
    for (int b = 0; b < orb.size(); ++b) {
      const AdmissiblePair& A = orb.pairs[a];
      const AdmissiblePair& B = orb.pairs[b];
      if (A.v != B.v) continue;
      ++c.cases;
      bool full = rr_leq(orb, a, b, cache);
      bool fib = fiber_leq(q, q.elements[A.v], A.S, B.S, cache);
      if (full != fib)
        c.fail("same-v restriction differs from the fiber order on " +
               pair_str(orb, a) + " vs " + pair_str(orb, b));
      // Comparable pairs with non-increasing L are equal.
      if (full && a != b && A.L >= B.L)
        c.fail("comparable pairs with non-increasing L at " + pair_str(orb, a));
    }

  // Nilradical order equals the fiber order at w^P.
  std::vector<OrthogonalSet> nil = enumerate_nilradical(q.ctx);
  for (const OrthogonalSet& r : nil)
    for (const OrthogonalSet& s : nil) {
      ++c.cases;
      if (pan_leq(q, r, s, cache) !=
          fiber_leq(q, q.elements[q.longest], r, s, cache))
        c.fail("nilradical order differs from the w^P fiber order");
    }

  // L-compatibility across all pairs, and extremal structure.
  OrbitPoset order = rr_order(orb, cache);
  for (int a = 0; a < orb.size(); ++a)
    for (int b = 0; b < orb.size(); ++b) {
      if (a == b || !order.leq[a].test(b)) continue;
      ++c.cases;
      if (orb.pairs[a].L >= orb.pairs[b].L)
        c.fail("strictly comparable pairs with non-increasing L");
    }
  int max_count = 0;
  for (int a = 0; a < orb.size(); ++a) {
    bool minimal = true, maximal = true;
    for (int b = 0; b < orb.size(); ++b) {
      if (b == a) continue;
      if (order.leq[b].test(a)) minimal = false;
      if (order.leq[a].test(b)) maximal = false;
    }
    ++c.cases;
    if (minimal != (orb.pairs[a].S.size() == 0))
      c.fail("minimal nodes are not exactly the S = {} pairs");
    if (minimal && orb.pairs[a].dim != psi_size)
      c.fail("minimal node with dim != |Psi|");
    if (maximal) {
      ++max_count;
      if (orb.pairs[a].dim != 2 * psi_size)
        c.fail("maximal node with dim != 2|Psi|");
    }
  }
  if (max_count != 1) c.fail("maximal node is not unique");
  return c;
}

Check golden_sp4(const HermitianContext& ctx, int threads) {
  Check c("golden-sp4");
  if (ctx.rs.cartan_type != 'C' || ctx.rs.rank != 2 || ctx.node != 1)
    throw input_error("golden fixtures are defined for C2 node 2 only");
  BruhatCache cache(ctx.rs);
  ParabolicQuotient q = enumerate_WP(ctx);
  HermitianOrbits orb = enumerate_hermitian(q);
  ++c.cases;
  if (to_json(build_nilradical_document(q, cache)) != golden::sp4_pu_json)
    c.fail("nilradical document differs from the checked-in fixture");
  ++c.cases;
  if (to_json(build_hermitian_document(orb, cache, threads)) != golden::sp4_gl_json)
    c.fail("hermitian document differs from the checked-in fixture");
  return c;
}

}  // namespace checks

std::vector<Check> run_suite(const std::string& suite, const HermitianContext& ctx,
                             const SuiteOptions& opts) {
  const RootSystem& rs = ctx.rs;
  std::vector<Check> out;
  BruhatCache cache(rs);

  bool all = suite == "all";
  if (!(all || suite == "gp1" || suite == "inv" || suite == "dim" ||
        suite == "malpha" || suite == "order-eq" || suite == "golden"))
    throw input_error("unknown suite: " + suite +
                      " (expected all|gp1|inv|dim|malpha|order-eq|golden)");

  if (suite == "golden") {
    out.push_back(checks::golden_sp4(ctx, opts.threads));
    return out;
  }

  ParabolicQuotient q = enumerate_WP(ctx);
  HermitianOrbits orb = enumerate_hermitian(q);

  std::vector<WeylElement> group;
  bool have_group = false;
  auto need_group = [&]() {
    if (have_group) return true;
    std::uint64_t order = weyl_group_order(rs);
    if (order > opts.weyl_limit && !opts.force) return false;
    group = enumerate_weyl_group(rs, opts.force ? order : opts.weyl_limit);
    have_group = true;
    return true;
  };

  if (all || suite == "dim") {
    out.push_back(checks::root_system_properties(rs));
    out.push_back(checks::context_properties(ctx));
    out.push_back(checks::pair_invariants(orb));
    out.push_back(checks::enumeration_consistency(orb));
    out.push_back(checks::enumeration_brute_force(orb));
  }
  if (all || suite == "gp1") {
    out.push_back(checks::quotient_order_criteria(q, cache));
    out.push_back(checks::quotient_descents(q));
    if (need_group()) {
      out.push_back(checks::bruhat_lifting(rs, group, cache));
    } else {
      Check skip("bruhat-lifting");
      skip.skipped_reason = "group too large; pass --force to enumerate";
      out.push_back(skip);
    }
  }
  if (all || suite == "inv") {
    if (need_group()) {
      out.push_back(checks::involution_monotonicity(rs, group, cache));
      out.push_back(checks::involution_lifting(rs, group, cache));
    } else {
      Check skip("involution-suite");
      skip.skipped_reason = "group too large; pass --force to enumerate";
      out.push_back(skip);
    }
    out.push_back(checks::sigma_structure(orb));
  }
  if (all || suite == "malpha") {
    out.push_back(checks::raising_consistency(orb, cache));
    out.push_back(checks::lowering_fibers(orb));
  }
  if (all || suite == "order-eq") {
    out.push_back(checks::order_equivalence(orb, cache, opts.threads));
    out.push_back(checks::order_restrictions(orb, cache));
  }
  if (all && rs.cartan_type == 'C' && rs.rank == 2 && ctx.node == 1)
    out.push_back(checks::golden_sp4(ctx, opts.threads));
  return out;
}

}  // namespace borbit
