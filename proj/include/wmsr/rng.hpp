#pragma once
// Deterministic random source: a fixed engine plus explicit value mappings,
// so the same seed reproduces the same draws on any platform or standard
// library. Distribution classes from <random> are deliberately avoided;
// their outputs are implementation-defined.

#include <cstdint>
#include <random>

namespace wmsr {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform-ish integer in [lo, hi], inclusive. The modulo bias is far below
  // anything these desk-scale sweeps can notice.
  int integer(int lo, int hi);

  double real(double lo, double hi);

  bool chance(double p) { return real(0.0, 1.0) < p; }

  // Deterministic per-subtask seed, so numbered trials stay independent of
  // scheduling order.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream);

 private:
  std::mt19937_64 engine_;
};

}  // namespace wmsr
