#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>

namespace sonact {

// splitmix64 finalizer; used to derive decorrelated stream seeds from
// (base, index) pairs without coupling the downstream generators.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b) { return mix64(mix64(a) ^ b); }

inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return mix64(mix64(a, b) ^ c);
}

// Deterministic RNG with pinned conversions. std::mt19937_64 has a fixed
// output sequence by the standard; the uniform/normal mappings below are
// ours, so draws are reproducible across compilers and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // uniform in [0, 1) with 53 random bits
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // uniform integer in [0, n)
  int uniform_int(int n) {
    int v = static_cast<int>(uniform() * n);
    return v < n ? v : n - 1;
  }

  // Box-Muller standard normal
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 1.0 - uniform();  // (0, 1]
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double th = 2.0 * M_PI * u2;
    spare_ = r * std::sin(th);
    have_spare_ = true;
    return r * std::cos(th);
  }

  std::string serialize() const {
    std::ostringstream os;
    os << engine_ << " " << (have_spare_ ? 1 : 0);
    if (have_spare_) {
      char buf[40];
      std::snprintf(buf, sizeof(buf), " %a", spare_);
      os << buf;
    }
    return os.str();
  }

  void deserialize(const std::string& text) {
    std::istringstream is(text);
    is >> engine_;
    int flag = 0;
    is >> flag;
    have_spare_ = flag != 0;
    if (have_spare_) {
      std::string hex;
      is >> hex;
      spare_ = std::strtod(hex.c_str(), nullptr);
    }
  }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace sonact
