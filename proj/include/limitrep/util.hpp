#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace limitrep {

// Invalid user input (bad spec string, non-prime p, ...). CLI maps this to exit 2.
struct input_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A desk-scale enumeration or solver bound was exceeded.
struct bound_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Internal invariant broken; always a bug.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

namespace bounds {
// Defaults; LIMITREP_BOUND_OVERRIDE (a positive integer) replaces the
// enumeration bound when set.
std::uint64_t enumeration();      // group enumeration, default 10^6
std::uint64_t character_table(); // brute-force tables, default 10^4
std::uint64_t solver();          // module dimension for solvers, default 2000
std::uint64_t weyl_enum();       // Coxeter group enumeration, default 10!
void set_enumeration(std::uint64_t);
} // namespace bounds

namespace nt {
bool is_prime(std::uint64_t n);
// (prime, multiplicity) pairs, ascending.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);
std::uint64_t pow_u64(std::uint64_t b, std::uint32_t e); // throws on overflow
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);
} // namespace nt

} // namespace limitrep
