#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "distilkit/error.hpp"

namespace distilkit {

// 64-bit floats everywhere; finite-difference gradient checks need the
// headroom, and reproducibility across platforms rules out float.
using Vec64 = std::vector<double>;

// Dense row-major matrix. Accumulations run in row-major order so results
// are bitwise reproducible.
struct Mat64 {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;  // rows * cols, row-major

  Mat64() = default;
  Mat64(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

  double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

// Counter-based splitmix64 stream. Identical seed gives an identical
// sequence on every platform, which the whole seed protocol leans on.
// Instances are single-owner; never share one across threads.
class Rng64 {
public:
  explicit Rng64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();

  // Uniform index in [0, n). Unbiased via modulo rejection. n == 0 throws.
  std::size_t uniform_index(std::size_t n);

  // Uniform double in [0, 1).
  double uniform01();

  // Standard normal via Box-Muller (sine branch discarded, no cached state).
  double normal();

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    if (v.size() < 2) return;
    for (std::size_t i = v.size() - 1; i > 0; --i) {
      std::size_t j = uniform_index(i + 1);
      std::swap(v[i], v[j]);
    }
  }

private:
  std::uint64_t state_;
};

// Deterministic seed derivation for independent sub-streams.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag);

// Numerically stable softmax (max subtraction). Throws DomainError on
// non-finite input. Output sums to 1 within 1e-9.
Vec64 softmax(const Vec64& v);

// -sum(target_i * log(pred_i)), with pred clamped at 1e-12 before the log.
// Throws DomainError on dimension mismatch.
double cross_entropy(const Vec64& target, const Vec64& pred);

// Plain dense product with deterministic row-major accumulation order.
Mat64 matmul(const Mat64& a, const Mat64& b);

bool all_finite(const Vec64& v);

}  // namespace distilkit
