#include "distilkit/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace distilkit {

std::uint64_t Rng64::next_u64() {
  // splitmix64 (Steele, Lea, Flood 2014)
  state_ += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::size_t Rng64::uniform_index(std::size_t n) {
  if (n == 0) throw DomainError("uniform_index: n must be >= 1");
  std::uint64_t un = static_cast<std::uint64_t>(n);
  // 2^64 mod n; accept draws below 2^64 - rem so every residue is equally likely
  std::uint64_t rem = (std::numeric_limits<std::uint64_t>::max() % un + 1) % un;
  std::uint64_t x;
  do {
    x = next_u64();
  } while (rem != 0 && x >= std::uint64_t(0) - rem);
  return static_cast<std::size_t>(x % un);
}

double Rng64::uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng64::normal() {
  // u1 in (0, 1] keeps the log finite
  double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  double u2 = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag) {
  Rng64 rng(seed ^ (tag * 0xD1B54A32D192ED03ull));
  return rng.next_u64();
}

bool all_finite(const Vec64& v) {
  return std::all_of(v.begin(), v.end(),
                     [](double x) { return std::isfinite(x); });
}

Vec64 softmax(const Vec64& v) {
  if (v.empty()) throw DomainError("softmax: empty input");
  if (!all_finite(v)) throw DomainError("softmax: non-finite input");
  double m = *std::max_element(v.begin(), v.end());
  Vec64 out(v.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = std::exp(v[i] - m);
    sum += out[i];
  }
  for (double& x : out) x /= sum;
  return out;
}

double cross_entropy(const Vec64& target, const Vec64& pred) {
  if (target.size() != pred.size())
    throw DomainError("cross_entropy: dimension mismatch");
  constexpr double kLogClamp = 1e-12;
  double loss = 0.0;
  for (std::size_t i = 0; i < target.size(); ++i) {
    loss -= target[i] * std::log(std::max(pred[i], kLogClamp));
  }
  return loss;
}

Mat64 matmul(const Mat64& a, const Mat64& b) {
  if (a.cols != b.rows) throw DomainError("matmul: shape mismatch");
  Mat64 out(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t k = 0; k < a.cols; ++k) {
      const double aik = a.at(i, k);
      for (std::size_t j = 0; j < b.cols; ++j) {
        out.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return out;
}

}  // namespace distilkit
