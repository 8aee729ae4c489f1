#pragma once

// Test-only oracles, independent of the library's order machinery.

#include "borbit/weyl.hpp"

#include <unordered_set>

namespace borbit::oracles {

// Subword characterization of the Bruhat order: the products over all
// subsequences of one reduced word of v are exactly the elements below v.
class SubwordOracle {
 public:
  explicit SubwordOracle(const RootSystem& rs) : rs_(&rs) {}

  bool leq(const WeylElement& u, const WeylElement& v) {
    const auto& below = lower_set(v);
    return below.count(u.m) != 0;
  }

 private:
  const std::unordered_set<Mat, MatHash, MatEq>& lower_set(const WeylElement& v) {
    auto it = cache_.find(v.m);
    if (it != cache_.end()) return it->second;
    std::unordered_set<Mat, MatHash, MatEq> out;
    const auto& word = v.word;
    const std::size_t n = word.size();
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
      Mat m = Mat::Identity(rs_->rank, rs_->rank);
      for (std::size_t k = 0; k < n; ++k)
        if (mask & (1ULL << k)) m = m * rs_->simple_refl[word[k]];
      out.insert(std::move(m));
    }
    return cache_.emplace(v.m, std::move(out)).first->second;
  }

  const RootSystem* rs_;
  std::unordered_map<Mat, std::unordered_set<Mat, MatHash, MatEq>, MatHash, MatEq>
      cache_;
};

}  // namespace borbit::oracles
