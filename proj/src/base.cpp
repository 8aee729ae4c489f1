#include "borbit/base.hpp"

namespace borbit {

// Bareiss fraction-free elimination; returns the number of pivots.
static int bareiss(Mat& a, Int* det_out) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Int prev = 1;
  Int sign = 1;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (a(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) {
      a.row(piv).swap(a.row(r));
      sign = -sign;
    }
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      for (Eigen::Index j = c + 1; j < cols; ++j)
        a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / prev;
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  if (det_out) *det_out = (r == rows && rows == cols) ? sign * prev : 0;
  return static_cast<int>(r);
}

int integer_rank(Mat a) { return bareiss(a, nullptr); }

Int integer_det(Mat a) {
  if (a.rows() != a.cols()) throw input_error("determinant of non-square matrix");
  if (a.rows() == 0) return 1;
  Int det = 0;
  bareiss(a, &det);
  return det;
}

std::pair<Vec, Int> solve_exact(const Mat& a, const Vec& b) {
  if (a.rows() != a.cols() || a.rows() != b.size())
    throw input_error("solve_exact: shape mismatch");
  const Eigen::Index n = a.rows();
  Int det = integer_det(a);
  if (det == 0) throw input_error("solve_exact: singular matrix");
  Vec num(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    Mat aj = a;
    aj.col(j) = b;
    num[j] = integer_det(aj);
  }
  Int den = det;
  if (den < 0) {
    den = -den;
    num = -num;
  }
  Int g = den;
  for (Eigen::Index j = 0; j < n; ++j) g = std::gcd(g, num[j] < 0 ? -num[j] : num[j]);
  if (g > 1) {
    den /= g;
    num /= g;
  }
  return {num, den};
}

void parallel_rows(int n, int threads, const std::function<void(int)>& fn) {
  if (threads <= 1 || n < 2 * threads) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (int i = t; i < n; i += threads) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace borbit
