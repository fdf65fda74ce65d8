#pragma once

// Exact arithmetic in Q(zeta_n): dense coefficient vectors of rationals,
// reduced modulo the n-th cyclotomic polynomial.  n = 1 gives plain Q.

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "limitrep/util.hpp"

namespace limitrep::fields {

class CyclotomicField;
using CycloPtr = std::shared_ptr<const CyclotomicField>;

class Cyclotomic {
public:
  Cyclotomic() = default;
  Cyclotomic(const CyclotomicField* F, std::vector<mpq_class> coeffs);

  const CyclotomicField& parent() const { return *F_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;
  mpq_class rational_part() const; // requires is_rational()

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic inverse() const;
  Cyclotomic conj() const; // zeta -> zeta^{-1}
  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  std::string str() const; // "1/2", "z^2-1", ...

private:
  const CyclotomicField* F_ = nullptr;
  std::vector<mpq_class> c_; // length phi(n)
  friend class CyclotomicField;
};

class CyclotomicField {
public:
  static CycloPtr get(std::uint32_t n); // 1 <= n <= 5000

  std::uint32_t n() const { return n_; }
  std::uint32_t phi() const { return phi_; }
  const std::vector<mpz_class>& minimal_polynomial() const { return poly_; }

  Cyclotomic zero() const;
  Cyclotomic one() const;
  Cyclotomic from_mpq(const mpq_class& r) const;
  Cyclotomic zeta() const;                      // class of x (= 1 when n = 1)
  Cyclotomic zeta_pow(std::int64_t k) const;    // zeta^k, any integer k
  Cyclotomic element(std::vector<mpq_class> c) const;

  // coercion Q(zeta_m) -> Q(zeta_n) for m | n, via zeta_m -> zeta_n^{n/m}
  Cyclotomic lift(const Cyclotomic& x) const;

private:
  explicit CyclotomicField(std::uint32_t n);
  std::vector<mpq_class> reduce(std::vector<mpq_class> v) const;
  std::uint32_t n_;
  std::uint32_t phi_;
  std::vector<mpz_class> poly_;                       // monic, degree phi
  std::vector<std::vector<mpq_class>> xpow_;          // x^k reduced, k < n
  friend class Cyclotomic;
};

// n-th cyclotomic polynomial over Z, monic, coefficients low-to-high.
std::vector<mpz_class> cyclotomic_polynomial(std::uint32_t n);

} // namespace limitrep::fields
