#pragma once

// Shared aliases and small exact-arithmetic utilities. Everything in this
// project is exact integer (or scaled-integer) arithmetic; no floating point.

#include <Eigen/Core>

#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace borbit {

using Int = std::int64_t;
using Vec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using Mat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

// Invalid caller input (bad Cartan data, non-root arguments, ...).
// The CLI maps this to exit code 2.
struct input_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline bool exact_eq(const Vec& a, const Vec& b) {
  return a.size() == b.size() && (a.array() == b.array()).all();
}

inline bool exact_eq(const Mat& a, const Mat& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         (a.array() == b.array()).all();
}

inline bool lex_less(const Vec& a, const Vec& b) {
  for (Eigen::Index i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

inline bool is_nonneg(const Vec& a) { return (a.array() >= 0).all(); }
inline bool is_nonpos(const Vec& a) { return (a.array() <= 0).all(); }
inline bool is_zero(const Vec& a) { return (a.array() == 0).all(); }

inline void hash_combine(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

struct VecHash {
  std::size_t operator()(const Vec& v) const {
    std::size_t h = static_cast<std::size_t>(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i)
      hash_combine(h, std::hash<Int>{}(v[i]));
    return h;
  }
};

struct VecEq {
  bool operator()(const Vec& a, const Vec& b) const { return exact_eq(a, b); }
};

struct MatHash {
  std::size_t operator()(const Mat& m) const {
    std::size_t h = static_cast<std::size_t>(m.rows() * 131 + m.cols());
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      for (Eigen::Index i = 0; i < m.rows(); ++i)
        hash_combine(h, std::hash<Int>{}(m(i, j)));
    return h;
  }
};

struct MatEq {
  bool operator()(const Mat& a, const Mat& b) const { return exact_eq(a, b); }
};

// Fixed-size bitset over an index space chosen at construction; used for
// inversion sets over positive-root indices and for order relation rows.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int n) : words_((n + 63) / 64, 0), n_(n) {}

  int size() const { return n_; }

  void set(int i) { words_[i >> 6] |= (1ULL << (i & 63)); }
  void reset(int i) { words_[i >> 6] &= ~(1ULL << (i & 63)); }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1ULL; }

  int count() const {
    int c = 0;
    for (auto w : words_) c += __builtin_popcountll(w);
    return c;
  }

  bool subset_of(const Bitset& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }

  bool intersects(const Bitset& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & o.words_[k]) return true;
    return false;
  }

  Bitset& operator|=(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }

  bool or_with_changed(const Bitset& o) {
    bool changed = false;
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k] | o.words_[k];
      if (w != words_[k]) {
        words_[k] = w;
        changed = true;
      }
    }
    return changed;
  }

  bool operator==(const Bitset& o) const {
    return n_ == o.n_ && words_ == o.words_;
  }

  template <class F>
  void for_each(F f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        int b = __builtin_ctzll(w);
        f(static_cast<int>(k * 64 + b));
        w &= w - 1;
      }
    }
  }

  std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(n_);
    for (auto w : words_) hash_combine(h, std::hash<std::uint64_t>{}(w));
    return h;
  }

 private:
  std::vector<std::uint64_t> words_;
  int n_ = 0;
};

// Rank over the rationals of an integer matrix, by fraction-free elimination.
int integer_rank(Mat a);

// Bareiss determinant of a square integer matrix.
Int integer_det(Mat a);

// Exact solution of a*x = b over the rationals via Cramer's rule.
// Returns (numerators, denominator), denominator > 0, gcd-reduced.
// Throws input_error if a is singular.
std::pair<Vec, Int> solve_exact(const Mat& a, const Vec& b);

// Runs fn(row) for row in [0, n), split across `threads` workers.
// Each row's work must write only to its own slot.
void parallel_rows(int n, int threads, const std::function<void(int)>& fn);

}  // namespace borbit
