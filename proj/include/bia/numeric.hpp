// Exact integer/rational scalars and small numeric helpers shared by all modules.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bia {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat make_rat(const Int& num, const Int& den) { return Rat(num, den); }

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

/// "10/7" for proper fractions, "2" when the denominator is 1.
inline std::string rat_str(const Rat& r) {
  Int n = rat_num(r), d = rat_den(r);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

/// Fixed-point rendering with six fractional digits, round half away from zero.
inline std::string rat_decimal(const Rat& r) {
  const Int scale = 1000000;
  Int n = rat_num(r), d = rat_den(r);
  bool neg = n < 0;
  if (neg) n = -n;
  Int q = (n * scale * 2 + d) / (2 * d);
  Int ip = q / scale, fp = q % scale;
  std::string frac = fp.str();
  frac.insert(frac.begin(), 6 - frac.size(), '0');
  return (neg && q != 0 ? "-" : "") + ip.str() + "." + frac;
}

inline long ceil_div(long a, long b) { return (a + b - 1) / b; }

/// Smallest c >= 1 with c*c*M >= K.
inline long ceil_sqrt_ratio(long K, long M) {
  long c = 1;
  while (c * c * M < K) ++c;
  return c;
}

/// Largest f >= 1 with f*f*M <= K, or 1 when none.
inline long floor_sqrt_ratio(long K, long M) {
  long f = 1;
  while ((f + 1) * (f + 1) * M <= K) ++f;
  return f;
}

/// C(n, k) capped: returns cap+1 as soon as the value exceeds cap.
inline unsigned long long binomial_capped(long n, long k, unsigned long long cap) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (long i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > Int(cap)) return cap + 1;
  }
  return r.convert_to<unsigned long long>();
}

/// splitmix64: the fixed seed-derivation and channel-draw generator.
/// Every stream the workbench consumes is defined in terms of this function,
/// so identical seeds give identical results on every platform.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
};

}  // namespace bia
