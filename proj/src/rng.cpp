#include "cy2/rng.hpp"

namespace cy2 {

uint64_t Rng::next() {
  uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long long Rng::next_in(long long lo, long long hi) {
  uint64_t span = static_cast<uint64_t>(hi - lo + 1);
  return lo + static_cast<long long>(next() % span);
}

Rat Rng::rational(long long bound) {
  long long num = next_in(-bound, bound);
  long long den = next_in(1, bound);
  return Rat(num, den);
}

Rat Rng::nonzero_rational(long long bound) {
  for (;;) {
    Rat r = rational(bound);
    if (r != 0) return r;
  }
}

Mat Rng::matrix(int rows, int cols, long long bound) {
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = rational(bound);
  return m;
}

Mat Rng::invertible_matrix(int n, long long bound) {
  for (;;) {
    Mat m = matrix(n, n, bound);
    if (rank(m) == n) return m;
  }
}

}  // namespace cy2
