#include "borbit/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace borbit {

namespace {

std::string root_str(const Vec& v) {
  std::ostringstream os;
  os << "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "]";
  return os.str();
}

void add_edge(Mat& a, int i, int j, Int aij, Int aji) {
  a(i, j) = aij;
  a(j, i) = aji;
}

// Cartan matrix in Bourbaki numbering; cartan(i,j) = <alpha_j, alpha_i^vee>.
Mat cartan_matrix(char type, int n) {
  Mat a = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i) a(i, i) = 2;
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) add_edge(a, i, i + 1, -1, -1);
  };
  switch (type) {
    case 'A':
      chain(n);
      break;
    case 'B':  // alpha_n short
      chain(n - 1);
      if (n >= 2) add_edge(a, n - 2, n - 1, -1, -2);
      break;
    case 'C':  // alpha_n long
      chain(n - 1);
      if (n >= 2) add_edge(a, n - 2, n - 1, -2, -1);
      break;
    case 'D':
      chain(n - 1);
      add_edge(a, n - 3, n - 1, -1, -1);
      break;
    case 'E':
      // 1-3-4-5-6(-7)(-8) chain with 2 attached to 4 (Bourbaki).
      add_edge(a, 0, 2, -1, -1);
      add_edge(a, 1, 3, -1, -1);
      for (int i = 2; i + 1 < n; ++i) add_edge(a, i, i + 1, -1, -1);
      break;
    case 'F':  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      add_edge(a, 0, 1, -1, -1);
      add_edge(a, 1, 2, -1, -2);
      add_edge(a, 2, 3, -1, -1);
      break;
    case 'G':  // alpha_1 short, alpha_2 long
      add_edge(a, 0, 1, -3, -1);
      break;
    default:
      throw input_error("unknown Cartan type");
  }
  return a;
}

Vec symmetrizer_of(const Mat& a) {
  // Smallest positive integers d with d_i a(i,j) = d_j a(j,i); the diagram is
  // connected, so propagate ratios from node 0 and clear denominators.
  const int n = static_cast<int>(a.rows());
  std::vector<Int> num(n, 0), den(n, 0);
  num[0] = den[0] = 1;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    for (int j = 0; j < n; ++j) {
      if (i == j || a(i, j) == 0 || num[j] != 0) continue;
      // d_j / d_i = a(i,j) / a(j,i)
      num[j] = num[i] * a(i, j);
      den[j] = den[i] * a(j, i);
      if (num[j] < 0) {
        num[j] = -num[j];
        den[j] = -den[j];
      }
      Int g = std::gcd(num[j], den[j]);
      num[j] /= g;
      den[j] /= g;
      queue.push_back(j);
    }
  }
  Int l = 1;
  for (int i = 0; i < n; ++i) l = std::lcm(l, den[i]);
  Vec d(n);
  for (int i = 0; i < n; ++i) d[i] = num[i] * (l / den[i]);
  return d;
}

int classical_positive_count(char type, int n) {
  switch (type) {
    case 'A':
      return n * (n + 1) / 2;
    case 'B':
    case 'C':
      return n * n;
    case 'D':
      return n * (n - 1);
    case 'E':
      return n == 6 ? 36 : (n == 7 ? 63 : 120);
    case 'F':
      return 24;
    case 'G':
      return 6;
  }
  return -1;
}

void validate_type(char type, int rank) {
  bool ok = false;
  switch (type) {
    case 'A': ok = rank >= 1; break;
    case 'B': ok = rank >= 2; break;
    case 'C': ok = rank >= 2; break;
    case 'D': ok = rank >= 4; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: ok = false;
  }
  if (!ok) {
    std::ostringstream os;
    os << "invalid simple type " << type << rank
       << " (valid: A>=1, B>=2, C>=2, D>=4, E6-E8, F4, G2)";
    throw input_error(os.str());
  }
}

}  // namespace

int RootSystem::index_of(const Vec& x) const {
  auto it = root_index.find(x);
  if (it == root_index.end())
    throw input_error("not a root: " + root_str(x));
  return it->second;
}

bool RootSystem::simply_laced() const {
  return cartan_type == 'A' || cartan_type == 'D' || cartan_type == 'E';
}

int RootSystem::simple_index(int root_idx) const {
  const Vec& r = roots[root_idx];
  if (r.sum() != 1) return -1;
  for (int i = 0; i < rank; ++i)
    if (r[i] == 1) return i;
  return -1;
}

RootSystem build_root_system(char cartan_type, int rank) {
  validate_type(cartan_type, rank);

  RootSystem rs;
  rs.cartan_type = cartan_type;
  rs.rank = rank;
  rs.cartan = cartan_matrix(cartan_type, rank);
  rs.symmetrizer = symmetrizer_of(rs.cartan);
  rs.bilinear = rs.symmetrizer.asDiagonal() * rs.cartan;
  if (!exact_eq(Mat(rs.bilinear.transpose()), rs.bilinear))
    throw std::logic_error("symmetrizer failed to symmetrize the Cartan matrix");

  // Close the simple roots under all simple reflections.
  std::unordered_map<Vec, int, VecHash, VecEq> seen;
  std::vector<Vec> all;
  std::deque<Vec> queue;
  for (int i = 0; i < rank; ++i) {
    Vec e = Vec::Zero(rank);
    e[i] = 1;
    seen.emplace(e, 0);
    all.push_back(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    Vec b = queue.front();
    queue.pop_front();
    for (int i = 0; i < rank; ++i) {
      // s_i(b) = b - <b, alpha_i^vee> alpha_i, and <b, alpha_i^vee> is the
      // i-th row of the Cartan matrix applied to b.
      Int c = rs.cartan.row(i).dot(b);
      Vec img = b;
      img[i] -= c;
      if (!seen.count(img)) {
        seen.emplace(img, 0);
        all.push_back(img);
        queue.push_back(img);
      }
    }
  }

  std::vector<Vec> positives;
  for (const Vec& r : all)
    if (is_nonneg(r)) positives.push_back(r);
  if (static_cast<int>(all.size()) != 2 * static_cast<int>(positives.size()))
    throw std::logic_error("root closure produced sign-mixed vectors");
  std::sort(positives.begin(), positives.end(), [](const Vec& a, const Vec& b) {
    Int ha = a.sum(), hb = b.sum();
    if (ha != hb) return ha < hb;
    return lex_less(a, b);
  });

  const int np = static_cast<int>(positives.size());
  if (np != classical_positive_count(cartan_type, rank))
    throw std::logic_error("positive-root count does not match the classical value");

  rs.n_positive = np;
  rs.roots = positives;
  rs.roots.reserve(2 * np);
  for (int i = 0; i < np; ++i) rs.roots.push_back(Vec(-positives[i]));
  for (int i = 0; i < 2 * np; ++i) rs.root_index.emplace(rs.roots[i], i);

  rs.norm2.resize(2 * np);
  for (int i = 0; i < 2 * np; ++i) {
    const Vec& r = rs.roots[i];
    rs.norm2[i] = r.dot(rs.bilinear * r);
    rs.long_norm2 = std::max(rs.long_norm2, rs.norm2[i]);
  }
  std::set<Int> lengths(rs.norm2.begin(), rs.norm2.end());
  if (lengths.size() > 2)
    throw std::logic_error("more than two root lengths");
  if ((lengths.size() == 1) != rs.simply_laced())
    throw std::logic_error("root lengths inconsistent with the type");

  // Reflection closure, exhaustively.
  for (const Vec& b : rs.roots)
    for (int i = 0; i < rank; ++i) {
      Int c = rs.cartan.row(i).dot(b);
      Vec img = b;
      img[i] -= c;
      if (!rs.root_index.count(img))
        throw std::logic_error("root set is not reflection-stable");
    }

  // Unique highest root: maximal height, and dominance-above every positive.
  rs.highest = np - 1;
  Int top_height = rs.roots[rs.highest].sum();
  if (np >= 2 && rs.roots[np - 2].sum() == top_height)
    throw std::logic_error("highest root is not unique");
  for (int i = 0; i < np; ++i)
    if (!dominance_leq(rs.roots[i], rs.roots[rs.highest]))
      throw std::logic_error("highest root is not a dominance maximum");

  rs.simple_refl.reserve(rank);
  for (int i = 0; i < rank; ++i) {
    Mat s = Mat::Identity(rank, rank);
    s.row(i) -= rs.cartan.row(i);
    rs.simple_refl.push_back(s);
  }
  return rs;
}

Int pairing(const RootSystem& rs, const Vec& beta, const Vec& alpha) {
  if (!rs.is_root(beta)) throw input_error("pairing: not a root: " + root_str(beta));
  if (!rs.is_root(alpha)) throw input_error("pairing: not a root: " + root_str(alpha));
  Int num = 2 * beta.dot(rs.bilinear * alpha);
  Int den = alpha.dot(rs.bilinear * alpha);
  if (num % den != 0) throw std::logic_error("non-integral Cartan pairing");
  return num / den;
}

Int pairing(const RootSystem& rs, int beta_idx, int alpha_idx) {
  const Vec& beta = rs.roots[beta_idx];
  const Vec& alpha = rs.roots[alpha_idx];
  Int num = 2 * beta.dot(rs.bilinear * alpha);
  return num / rs.norm2[alpha_idx];
}

Vec reflect(const RootSystem& rs, const Vec& alpha, const Vec& x) {
  if (!rs.is_root(alpha)) throw input_error("reflect: not a root: " + root_str(alpha));
  Int num = 2 * x.dot(rs.bilinear * alpha);
  Int den = alpha.dot(rs.bilinear * alpha);
  if (num % den != 0) throw std::logic_error("non-integral reflection coefficient");
  return x - (num / den) * alpha;
}

std::vector<int> cominuscule_nodes(const RootSystem& rs) {
  std::vector<int> out;
  const Vec& theta = rs.roots[rs.highest];
  for (int i = 0; i < rs.rank; ++i)
    if (theta[i] == 1) out.push_back(i);
  return out;
}

bool dominance_leq(const Vec& x, const Vec& y) {
  if (x.size() != y.size())
    throw input_error("dominance_leq: tuples over different bases");
  return is_nonneg(Vec(y - x));
}

bool dominance_leq(const Coweight& x, const Coweight& y) {
  if (x.num.size() != y.num.size())
    throw input_error("dominance_leq: coweights over different bases");
  // Bring to the common denominator x.den * y.den (both positive).
  Vec diff = y.num * x.den - x.num * y.den;
  Int den = x.den * y.den;
  for (Eigen::Index i = 0; i < diff.size(); ++i) {
    if (diff[i] < 0) return false;
    if (diff[i] % den != 0) return false;  // non-integral: incomparable
  }
  return true;
}

Int coweight_pairing(const RootSystem& rs, const Coweight& mu, const Vec& x) {
  // <alpha_i^vee, alpha_j> = cartan(i, j).
  Int num = mu.num.dot(rs.cartan * x);
  if (num % mu.den != 0)
    throw input_error("coweight pairing is not an integer");
  return num / mu.den;
}

HermitianContext build_hermitian_context(const RootSystem& rs, int node) {
  if (node < 0 || node >= rs.rank)
    throw input_error("node index out of range");
  const Vec& theta = rs.roots[rs.highest];
  if (theta[node] != 1) {
    std::ostringstream os;
    os << "node " << node + 1 << " is not cominuscule: [theta:alpha_" << node + 1
       << "] = " << theta[node];
    throw input_error(os.str());
  }

  HermitianContext ctx;
  ctx.rs = rs;
  ctx.node = node;
  ctx.psi_mask = Bitset(rs.n_positive);
  for (int i = 0; i < rs.n_positive; ++i) {
    Int c = rs.roots[i][node];
    if (c == 1) {
      ctx.psi.push_back(i);
      ctx.psi_mask.set(i);
    } else if (c == 0) {
      ctx.phi_P_plus.push_back(i);
    } else {
      throw std::logic_error("cominuscule node with coefficient > 1 in a positive root");
    }
  }
  for (int i = 0; i < rs.rank; ++i)
    if (i != node) ctx.delta_P.push_back(i);

  // Abelianness: beta + beta' is never a root for beta, beta' in Psi.
  for (int a : ctx.psi)
    for (int b : ctx.psi)
      if (rs.is_root(Vec(rs.roots[a] + rs.roots[b])))
        throw std::logic_error("Psi is not abelian");

  // omega_P^vee over simple coroots: cartan^T * c = e_node.
  Vec e = Vec::Zero(rs.rank);
  e[node] = 1;
  auto [num, den] = solve_exact(Mat(rs.cartan.transpose()), e);
  ctx.omega_P_covee = Coweight{num, den};
  for (int i = 0; i < rs.n_positive; ++i) {
    Int v = coweight_pairing(rs, ctx.omega_P_covee, rs.roots[i]);
    if (v != 0 && v != 1)
      throw std::logic_error("cominuscule criterion failed for omega_P^vee");
    if ((v == 1) != ctx.psi_mask.test(i))
      throw std::logic_error("omega_P^vee pairing disagrees with the Psi coefficient filter");
  }
  return ctx;
}

std::optional<std::vector<int>> dominance_chain(const RootSystem& rs,
                                                int alpha_idx, int beta_idx) {
  if (!rs.is_positive_index(alpha_idx) || !rs.is_positive_index(beta_idx))
    throw input_error("dominance_chain expects positive roots");
  std::vector<int> chain{alpha_idx};
  int cur = alpha_idx;
  while (cur != beta_idx) {
    bool advanced = false;
    for (int i = 0; i < rs.rank && !advanced; ++i) {
      Vec step = rs.roots[cur];
      step[i] += 1;
      if (!dominance_leq(step, rs.roots[beta_idx])) continue;
      auto it = rs.root_index.find(step);
      if (it == rs.root_index.end()) continue;
      cur = it->second;
      chain.push_back(cur);
      advanced = true;
    }
    if (!advanced) return std::nullopt;
  }
  return chain;
}

}  // namespace borbit
