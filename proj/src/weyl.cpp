#include "borbit/weyl.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace borbit {

namespace {

// A root vector has uniform coefficient sign; negative iff all coords <= 0
// and not zero.
bool root_vec_negative(const Vec& v) { return is_nonpos(v); }

}  // namespace

WeylElement make_element(const RootSystem& rs, Mat m, Mat minv) {
  WeylElement w;
  w.inversions = Bitset(rs.n_positive);
  for (int p = 0; p < rs.n_positive; ++p) {
    Vec img = m * rs.roots[p];
    if (root_vec_negative(img)) w.inversions.set(p);
  }
  w.length = w.inversions.count();

  // Lex-minimal reduced word: peel the smallest left descent at each step.
  Mat pm = m, pinv = minv;
  w.word.reserve(w.length);
  for (int step = 0; step < w.length; ++step) {
    int d = -1;
    for (int i = 0; i < rs.rank; ++i) {
      if (root_vec_negative(pinv.col(i))) {
        d = i;
        break;
      }
    }
    if (d < 0) throw std::logic_error("length/descent mismatch in make_element");
    w.word.push_back(d);
    pm = rs.simple_refl[d] * pm;
    pinv = pinv * rs.simple_refl[d];
  }
  if (!exact_eq(pm, Mat(Mat::Identity(rs.rank, rs.rank))))
    throw std::logic_error("word peeling did not reach the identity");

  w.m = std::move(m);
  w.minv = std::move(minv);
  return w;
}

WeylElement identity_element(const RootSystem& rs) {
  Mat id = Mat::Identity(rs.rank, rs.rank);
  return make_element(rs, id, id);
}

WeylElement simple_reflection(const RootSystem& rs, int i) {
  return make_element(rs, rs.simple_refl[i], rs.simple_refl[i]);
}

WeylElement reflection(const RootSystem& rs, const Vec& root) {
  if (!rs.is_root(root)) throw input_error("reflection: not a root");
  Mat s(rs.rank, rs.rank);
  for (int j = 0; j < rs.rank; ++j) {
    Vec e = Vec::Zero(rs.rank);
    e[j] = 1;
    s.col(j) = reflect(rs, root, e);
  }
  return make_element(rs, s, s);
}

WeylElement reflection(const RootSystem& rs, int root_idx) {
  return reflection(rs, rs.roots[root_idx]);
}

WeylElement mul(const RootSystem& rs, const WeylElement& a, const WeylElement& b) {
  return make_element(rs, a.m * b.m, b.minv * a.minv);
}

WeylElement inverse(const RootSystem& rs, const WeylElement& a) {
  return make_element(rs, a.minv, a.m);
}

WeylElement from_word(const RootSystem& rs, const std::vector<int>& word) {
  Mat m = Mat::Identity(rs.rank, rs.rank);
  Mat minv = m;
  for (int i : word) {
    if (i < 0 || i >= rs.rank) throw input_error("word letter out of range");
    m = m * rs.simple_refl[i];
    minv = rs.simple_refl[i] * minv;
  }
  return make_element(rs, std::move(m), std::move(minv));
}

int apply_root(const RootSystem& rs, const WeylElement& w, int root_idx) {
  return rs.index_of(Vec(w.m * rs.roots[root_idx]));
}

Coweight apply_coweight(const RootSystem& rs, const WeylElement& w, const Coweight& mu) {
  Coweight out = mu;
  // w = s_{i1} ... s_{ik} acts as s_{i1}(s_{i2}(...)); apply letters
  // right to left. s_i(y) = y - <y, alpha_i> alpha_i^vee.
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
    int i = *it;
    Int c = out.num.dot(rs.cartan.col(i));  // den-scaled pairing <y, alpha_i>
    out.num[i] -= c;
  }
  return out;
}

int first_left_descent(const WeylElement& w) {
  for (int i = 0; i < w.minv.cols(); ++i)
    if (root_vec_negative(w.minv.col(i))) return i;
  return -1;
}

// ---------------------------------------------------------------------------
// Bruhat order

BruhatCache::BruhatCache(const RootSystem& rs) : rs_(&rs) {}

int BruhatCache::node_length(const Mat& m) const {
  int len = 0;
  for (int p = 0; p < rs_->n_positive; ++p)
    if (root_vec_negative(Vec(m * rs_->roots[p]))) ++len;
  return len;
}

int BruhatCache::intern(Mat m, Mat minv) {
  auto it = ids_.find(m);
  if (it != ids_.end()) return it->second;
  Node n;
  n.length = node_length(m);
  n.descent = -1;
  for (int i = 0; i < rs_->rank; ++i)
    if (root_vec_negative(minv.col(i))) {
      n.descent = i;
      break;
    }
  n.m = std::move(m);
  n.minv = std::move(minv);
  int id = static_cast<int>(nodes_.size());
  nodes_.push_back(std::move(n));
  ids_.emplace(nodes_.back().m, id);
  return id;
}

bool BruhatCache::leq_ids(int u, int v) {
  if (u == v) return true;
  if (nodes_[u].length >= nodes_[v].length) return false;
  std::uint64_t key = (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  int i = nodes_[v].descent;
  const Mat& s = rs_->simple_refl[i];
  int sv = intern(s * nodes_[v].m, nodes_[v].minv * s);
  int su = intern(s * nodes_[u].m, nodes_[u].minv * s);
  bool r = nodes_[su].length < nodes_[u].length ? leq_ids(su, sv) : leq_ids(u, sv);
  memo_.emplace(key, r);
  return r;
}

bool BruhatCache::leq(const WeylElement& u, const WeylElement& v) {
  std::lock_guard<std::mutex> lock(mu_);
  int ui = intern(u.m, u.minv);
  int vi = intern(v.m, v.minv);
  return leq_ids(ui, vi);
}

// ---------------------------------------------------------------------------
// Parabolic quotient

int ParabolicQuotient::id_of(const WeylElement& w) const {
  auto it = index.find(w.m);
  return it == index.end() ? -1 : it->second;
}

ParabolicQuotient enumerate_WP(const HermitianContext& ctx) {
  const RootSystem& rs = ctx.rs;
  ParabolicQuotient q;
  q.ctx = ctx;

  std::unordered_map<Mat, int, MatHash, MatEq> seen;
  std::vector<WeylElement> found;
  std::deque<int> queue;
  found.push_back(identity_element(rs));
  seen.emplace(found[0].m, 0);
  queue.push_back(0);
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    WeylElement v = found[cur];
    for (int i = 0; i < rs.rank; ++i) {
      Vec beta = v.minv.col(i);  // v^{-1}(alpha_i)
      if (root_vec_negative(beta)) continue;  // s_i v < v
      // s_i v in W^P iff the new inversion v^{-1}(alpha_i) lies in Psi.
      if (beta[ctx.node] != 1) continue;
      Mat m = rs.simple_refl[i] * v.m;
      if (seen.count(m)) continue;
      WeylElement next = make_element(rs, m, v.minv * rs.simple_refl[i]);
      seen.emplace(next.m, 0);
      found.push_back(next);
      queue.push_back(static_cast<int>(found.size()) - 1);
    }
  }

  std::sort(found.begin(), found.end(), [](const WeylElement& a, const WeylElement& b) {
    if (a.length != b.length) return a.length < b.length;
    return a.word < b.word;
  });
  q.elements = std::move(found);
  for (int i = 0; i < q.size(); ++i) q.index.emplace(q.elements[i].m, i);

  // Longest element of W_P by greedy ascent within the standard parabolic.
  WeylElement wp = identity_element(rs);
  for (bool grew = true; grew;) {
    grew = false;
    for (int j : ctx.delta_P) {
      if (!root_vec_negative(wp.m.col(j))) {  // wp(alpha_j) > 0
        wp = mul(rs, wp, simple_reflection(rs, j));
        grew = true;
        break;
      }
    }
  }
  if (wp.length != static_cast<int>(ctx.phi_P_plus.size()))
    throw std::logic_error("w_P has the wrong length");
  q.w_P = std::move(wp);

  q.longest = q.size() - 1;
  const WeylElement& wP = q.elements[q.longest];
  if (wP.length != static_cast<int>(ctx.psi.size()))
    throw std::logic_error("w^P length differs from |Psi|");
  if (q.size() >= 2 && q.elements[q.size() - 2].length == wP.length)
    throw std::logic_error("longest element of W^P is not unique");
  q.w0 = mul(rs, wP, q.w_P);
  if (q.w0.length != wP.length + q.w_P.length)
    throw std::logic_error("w0 != w^P * w_P with additive lengths");

  std::uint64_t expected =
      weyl_group_order(rs) / levi_weyl_group_order(rs, ctx.node);
  if (expected != static_cast<std::uint64_t>(q.size()))
    throw std::logic_error("|W^P| does not match |W|/|W_P|");

  for (const WeylElement& v : q.elements) {
    if (!v.inversions.subset_of(ctx.psi_mask))
      throw std::logic_error("W^P element with inversions outside Psi");
    q.omega_numerators.push_back(apply_coweight(rs, v, ctx.omega_P_covee).num);
  }
  return q;
}

WeylElement min_coset_rep(const RootSystem& rs, const HermitianContext& ctx,
                          const WeylElement& w) {
  Mat m = w.m, minv = w.minv;
  for (bool reduced = true; reduced;) {
    reduced = false;
    for (int j : ctx.delta_P) {
      if (root_vec_negative(m.col(j))) {  // w(alpha_j) < 0, strip s_j
        m = m * rs.simple_refl[j];
        minv = rs.simple_refl[j] * minv;
        reduced = true;
        break;
      }
    }
  }
  return make_element(rs, std::move(m), std::move(minv));
}

bool wp_leq(const ParabolicQuotient& q, int u_id, int v_id) {
  return q.elements[u_id].inversions.subset_of(q.elements[v_id].inversions);
}

bool wp_leq_verified(const ParabolicQuotient& q, int u_id, int v_id,
                     BruhatCache& cache) {
  bool by_inversions = wp_leq(q, u_id, v_id);
  bool by_bruhat = cache.leq(q.elements[u_id], q.elements[v_id]);
  bool by_coweight = dominance_leq(q.omega_image(v_id), q.omega_image(u_id));
  if (by_inversions != by_bruhat || by_inversions != by_coweight) {
    std::ostringstream os;
    os << "W^P order criteria disagree on pair (" << u_id << ", " << v_id
       << "): inversions=" << by_inversions << " bruhat=" << by_bruhat
       << " coweight=" << by_coweight;
    throw std::logic_error(os.str());
  }
  return by_inversions;
}

bool wp_leq(const ParabolicQuotient& q, const WeylElement& u, const WeylElement& v) {
  int ui = q.id_of(u), vi = q.id_of(v);
  if (ui < 0 || vi < 0) throw input_error("wp_leq: element not in W^P");
  return wp_leq(q, ui, vi);
}

std::vector<std::pair<int, int>> wp_descents(const ParabolicQuotient& q, int v_id) {
  const RootSystem& rs = q.ctx.rs;
  const WeylElement& v = q.elements[v_id];
  std::vector<int> inv;
  v.inversions.for_each([&](int p) { inv.push_back(p); });
  std::vector<std::pair<int, int>> out;
  for (int b : inv) {
    bool maximal = true;
    for (int c : inv)
      if (c != b && dominance_leq(rs.roots[b], rs.roots[c])) {
        maximal = false;
        break;
      }
    if (!maximal) continue;
    int image = apply_root(rs, v, b);           // v(b), a negative root
    int a = rs.simple_index(rs.negate(image));  // alpha = -v(b)
    if (a < 0) throw std::logic_error("maximal inversion not sent to minus a simple root");
    out.emplace_back(a, b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<int, int>> wp_ascents(const ParabolicQuotient& q, int v_id) {
  const RootSystem& rs = q.ctx.rs;
  const WeylElement& v = q.elements[v_id];
  std::vector<int> complement;
  for (int p : q.ctx.psi)
    if (!v.inversions.test(p)) complement.push_back(p);
  std::vector<std::pair<int, int>> out;
  for (int b : complement) {
    bool minimal = true;
    for (int c : complement)
      if (c != b && dominance_leq(rs.roots[c], rs.roots[b])) {
        minimal = false;
        break;
      }
    if (!minimal) continue;
    int image = apply_root(rs, v, b);  // v(b), a positive root
    int a = rs.simple_index(image);
    if (a < 0) throw std::logic_error("minimal non-inversion not sent to a simple root");
    out.emplace_back(a, b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<WeylElement> enumerate_weyl_group(const RootSystem& rs,
                                              std::size_t max_size) {
  std::unordered_map<Mat, int, MatHash, MatEq> seen;
  std::vector<WeylElement> found;
  std::deque<int> queue;
  found.push_back(identity_element(rs));
  seen.emplace(found[0].m, 0);
  queue.push_back(0);
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    WeylElement w = found[cur];
    for (int i = 0; i < rs.rank; ++i) {
      Mat m = w.m * rs.simple_refl[i];
      if (seen.count(m)) continue;
      if (found.size() >= max_size)
        throw input_error("Weyl group enumeration exceeds the configured limit");
      WeylElement next = make_element(rs, m, rs.simple_refl[i] * w.minv);
      seen.emplace(next.m, 0);
      found.push_back(next);
      queue.push_back(static_cast<int>(found.size()) - 1);
    }
  }
  std::sort(found.begin(), found.end(), [](const WeylElement& a, const WeylElement& b) {
    if (a.length != b.length) return a.length < b.length;
    return a.word < b.word;
  });
  return found;
}

// ---------------------------------------------------------------------------
// Diagram-based group orders

namespace {

std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t f = 1;
  for (std::uint64_t i = 2; i <= n; ++i) f *= i;
  return f;
}

// Order of the Weyl group of one connected diagram component.
std::uint64_t component_order(const Mat& cartan, const std::vector<int>& nodes) {
  const int n = static_cast<int>(nodes.size());
  if (n == 1) return 2;

  int max_mult = 1;
  bool middle_double = false;
  std::vector<int> degree(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Int prod = cartan(nodes[a], nodes[b]) * cartan(nodes[b], nodes[a]);
      if (prod == 0) continue;
      ++degree[a];
      ++degree[b];
      max_mult = std::max<int>(max_mult, static_cast<int>(prod));
      if (prod == 2) {
        // Double edge in the middle of a path distinguishes F4 from B/C.
        int others_a = 0, others_b = 0;
        for (int c = 0; c < n; ++c) {
          if (c != a && c != b && cartan(nodes[a], nodes[c]) != 0) ++others_a;
          if (c != a && c != b && cartan(nodes[b], nodes[c]) != 0) ++others_b;
        }
        if (others_a > 0 && others_b > 0) middle_double = true;
      }
    }

  if (max_mult == 3) return 12;  // G2
  if (max_mult == 2) {
    if (n == 4 && middle_double) return 1152;  // F4
    return (1ULL << n) * factorial(n);         // B/C
  }

  int branch = -1;
  for (int a = 0; a < n; ++a) {
    if (degree[a] > 3) throw std::logic_error("diagram node of degree > 3");
    if (degree[a] == 3) {
      if (branch >= 0) throw std::logic_error("diagram with two branch nodes");
      branch = a;
    }
  }
  if (branch < 0) return factorial(n + 1);  // A_n

  // Arm lengths from the branch node.
  std::vector<int> arms;
  std::vector<bool> used(n, false);
  used[branch] = true;
  for (int a = 0; a < n; ++a) {
    if (used[a] || cartan(nodes[branch], nodes[a]) == 0) continue;
    int len = 0, cur = a;
    int prev = branch;
    while (true) {
      used[cur] = true;
      ++len;
      int next = -1;
      for (int c = 0; c < n; ++c)
        if (c != prev && !used[c] && cartan(nodes[cur], nodes[c]) != 0) next = c;
      if (next < 0) break;
      prev = cur;
      cur = next;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms.size() != 3) throw std::logic_error("branch node without three arms");
  if (arms[0] == 1 && arms[1] == 1)
    return (1ULL << (n - 1)) * factorial(n);  // D_n
  if (arms[0] == 1 && arms[1] == 2 && arms[2] == 2) return 51840;      // E6
  if (arms[0] == 1 && arms[1] == 2 && arms[2] == 3) return 2903040;    // E7
  if (arms[0] == 1 && arms[1] == 2 && arms[2] == 4) return 696729600;  // E8
  throw std::logic_error("unrecognized simply-laced diagram");
}

std::uint64_t diagram_order(const Mat& cartan, std::vector<int> nodes) {
  std::uint64_t total = 1;
  std::vector<bool> used(nodes.size(), false);
  for (std::size_t s = 0; s < nodes.size(); ++s) {
    if (used[s]) continue;
    // Connected component containing nodes[s].
    std::vector<int> comp;
    std::deque<std::size_t> queue{s};
    used[s] = true;
    while (!queue.empty()) {
      std::size_t a = queue.front();
      queue.pop_front();
      comp.push_back(nodes[a]);
      for (std::size_t b = 0; b < nodes.size(); ++b)
        if (!used[b] && cartan(nodes[a], nodes[b]) != 0) {
          used[b] = true;
          queue.push_back(b);
        }
    }
    total *= component_order(cartan, comp);
  }
  return total;
}

}  // namespace

std::uint64_t weyl_group_order(const RootSystem& rs) {
  std::vector<int> nodes(rs.rank);
  for (int i = 0; i < rs.rank; ++i) nodes[i] = i;
  return diagram_order(rs.cartan, nodes);
}

std::uint64_t levi_weyl_group_order(const RootSystem& rs, int node) {
  std::vector<int> nodes;
  for (int i = 0; i < rs.rank; ++i)
    if (i != node) nodes.push_back(i);
  if (nodes.empty()) return 1;
  return diagram_order(rs.cartan, nodes);
}

}  // namespace borbit
