#include "borbit/involutions.hpp"

#include <algorithm>
#include <sstream>

namespace borbit {

Involution make_involution(const RootSystem& rs, WeylElement w) {
  if (!exact_eq(Mat(w.m * w.m), Mat(Mat::Identity(rs.rank, rs.rank))))
    throw input_error("make_involution: element is not an involution");
  Involution s;
  s.lambda = rs.rank - integer_rank(Mat(w.m + Mat::Identity(rs.rank, rs.rank)));
  if ((w.length + s.lambda) % 2 != 0)
    throw std::logic_error("involution length (l + lambda)/2 is not an integer");
  s.L = (w.length + s.lambda) / 2;
  s.element = std::move(w);
  return s;
}

bool pairwise_orthogonal(const RootSystem& rs, const std::vector<int>& roots) {
  for (std::size_t a = 0; a < roots.size(); ++a)
    for (std::size_t b = a + 1; b < roots.size(); ++b)
      if (pairing(rs, roots[a], roots[b]) != 0) return false;
  return true;
}

Involution sigma_of(const RootSystem& rs, const std::vector<int>& root_indices) {
  if (!pairwise_orthogonal(rs, root_indices))
    throw input_error("sigma_of: roots are not pairwise orthogonal");
  WeylElement prod = identity_element(rs);
  for (int idx : root_indices) prod = mul(rs, prod, reflection(rs, idx));
  Involution s = make_involution(rs, std::move(prod));
  if (s.lambda != static_cast<int>(root_indices.size()))
    throw std::logic_error("lambda(sigma_S) != |S|");
  return s;
}

Involution circle(const RootSystem& rs, int simple_idx, const Involution& sigma) {
  WeylElement s = simple_reflection(rs, simple_idx);
  WeylElement left = mul(rs, s, sigma.element);
  WeylElement right = mul(rs, sigma.element, s);
  Involution out = left == right ? make_involution(rs, left)
                                 : make_involution(rs, mul(rs, left, s));
  // The circle action moves L by exactly one.
  if (out.L != sigma.L + 1 && out.L != sigma.L - 1)
    throw std::logic_error("circle action changed L by a value other than 1");
  return out;
}

PhiSigmaSplit phi_sigma_split(const RootSystem& rs, const Involution& sigma) {
  PhiSigmaSplit out;
  const int n = rs.num_roots();
  for (int i = 0; i < n; ++i) {
    if (apply_root(rs, sigma.element, i) == rs.negate(i)) out.phi_sigma.push_back(i);
  }
  for (int i : out.phi_sigma)
    if (rs.is_long(i)) out.t_long.push_back(i);
  for (int i : out.phi_sigma) {
    if (rs.is_long(i)) continue;
    bool orth = true;
    for (int l : out.t_long)
      if (pairing(rs, i, l) != 0) {
        orth = false;
        break;
      }
    if (orth) out.t_short.push_back(i);
  }
  for (int i : out.t_long)
    if (!rs.is_positive_index(i)) out.negative_selection.push_back(i);
  for (int i : out.t_short)
    if (!rs.is_positive_index(i)) out.negative_selection.push_back(i);
  std::sort(out.negative_selection.begin(), out.negative_selection.end());
  return out;
}

OrthogonalSet make_orthogonal_set(const HermitianContext& ctx, std::vector<int> roots) {
  std::sort(roots.begin(), roots.end());
  for (std::size_t a = 0; a + 1 < roots.size(); ++a)
    if (roots[a] == roots[a + 1])
      throw input_error("orthogonal set with a repeated root");
  for (int r : roots)
    if (!ctx.in_psi(r)) {
      std::ostringstream os;
      os << "orthogonal set member with index " << r << " is not in Psi";
      throw input_error(os.str());
    }
  if (!pairwise_orthogonal(ctx.rs, roots))
    throw input_error("set is not pairwise orthogonal");
  return OrthogonalSet{std::move(roots)};
}

}  // namespace borbit
