#include "grassproto/rng.hpp"

#include "grassproto/errors.hpp"

namespace grassproto {

namespace {

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  // splitmix64 finalizer over the combined value
  std::uint64_t z = a + 0x9e3779b97f4a7c15ULL + (b << 6) + (b >> 2);
  z ^= b;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::string_view tag)
    : gen_(mix(fnv1a64(tag), seed)) {}

std::uint64_t Rng::next() { return gen_(); }

double Rng::uniform() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
  return lo + uniform() * (hi - lo);
}

std::size_t Rng::uniform_index(std::size_t n) {
  if (n == 0) throw InvalidArgumentError("uniform_index: n must be positive");
  return static_cast<std::size_t>(next() % n);
}

Eigen::MatrixXd Rng::uniform_matrix(int rows, int cols, double lo, double hi) {
  Eigen::MatrixXd m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = uniform(lo, hi);
  return m;
}

}  // namespace grassproto
