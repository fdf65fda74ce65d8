#include "limitrep/util.hpp"

#include <cstdlib>
#include <limits>
#include <numeric>

namespace limitrep {

namespace bounds {

namespace {
std::uint64_t g_enum_override = 0;

std::uint64_t env_override() {
  static std::uint64_t v = [] {
    const char* s = std::getenv("LIMITREP_BOUND_OVERRIDE");
    if (!s || !*s) return std::uint64_t{0};
    char* end = nullptr;
    unsigned long long x = std::strtoull(s, &end, 10);
    if (end == s || (end && *end)) return std::uint64_t{0};
    return static_cast<std::uint64_t>(x);
  }();
  return v;
}
} // namespace

std::uint64_t enumeration() {
  if (g_enum_override) return g_enum_override;
  if (std::uint64_t e = env_override()) return e;
  return 1000000;
}
std::uint64_t character_table() { return 10000; }
std::uint64_t solver() { return 2000; }
std::uint64_t weyl_enum() {
  if (std::uint64_t e = env_override()) return e;
  return 3628800; // 10!
}
void set_enumeration(std::uint64_t b) { g_enum_override = b; }

} // namespace bounds

namespace nt {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull}) {
    if (n == d) return true;
    if (n % d == 0) return false;
  }
  for (std::uint64_t d = 11; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d) continue;
    int e = 0;
    while (n % d == 0) n /= d, ++e;
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t pow_u64(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) {
    if (b != 0 && r > std::numeric_limits<std::uint64_t>::max() / b)
      throw bound_error("pow_u64 overflow");
    r *= b;
  }
  return r;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return a / std::gcd(a, b) * b; }

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
  // extended Euclid; m need not be prime but a must be a unit
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(m), nr = static_cast<std::int64_t>(a % m);
  while (nr) {
    std::int64_t q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (r != 1) throw input_error("inv_mod: not a unit");
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t);
}

} // namespace nt

} // namespace limitrep
