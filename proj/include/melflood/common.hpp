#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace melflood {

// Error taxonomy shared by the library and the CLI exit-code mapping.
enum class ErrorCode {
  config,          // invalid configuration / arguments
  io,              // generic file I/O failure
  wav_missing,     // file does not exist
  wav_not_mono,    // channel count != 1
  wav_not_pcm16,   // format tag or bit depth unsupported
  wav_truncated,   // header or data chunk shorter than declared
  shape_mismatch,  // matrix / buffer dimensions disagree
  degenerate,      // estimation collapsed (e.g. all-zero shaping curve)
  scenario,        // scenario execution aborted
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Row-major dense matrix of doubles. Kept deliberately minimal; all heavy
// lifting happens in explicit loops so the OpenMP kernels stay transparent.
struct Mat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Mat() = default;
  Mat(std::size_t r, std::size_t c, double fill = 0.0)
      : rows(r), cols(c), data(r * c, fill) {}

  double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  double* row(std::size_t r) { return data.data() + r * cols; }
  const double* row(std::size_t r) const { return data.data() + r * cols; }
  bool same_shape(const Mat& o) const { return rows == o.rows && cols == o.cols; }
};

// Execution policy for the data-parallel kernels. Every parallel kernel has a
// serial twin that produces bit-identical output; tests compare the two.
enum class Exec { serial, parallel };

// SplitMix64 finalizer. Used to derive independent per-index seeds from one
// base seed so parallel and serial runs see the same random streams.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Deterministic Gaussian source: mt19937_64 + Box-Muller. The standard
// library normal_distribution is implementation-defined, which would break
// bit-reproducibility guarantees across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    // Rejection-free modulo is fine here; n is tiny relative to 2^64.
    return gen_() % n;
  }

  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 1.0 - uniform();  // (0, 1]
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * 3.141592653589793238462643383279502884 * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// FNV-1a over raw bytes; used for config hashes embedded in binary headers.
inline std::uint64_t fnv1a(const void* bytes, std::size_t len,
                           std::uint64_t h = 0xcbf29ce484222325ULL) {
  const auto* p = static_cast<const unsigned char*>(bytes);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline constexpr double kPi = 3.141592653589793238462643383279502884;

}  // namespace melflood
