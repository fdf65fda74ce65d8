#include "limitrep/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace limitrep::fields {

namespace {
using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// exact division of a by monic b in Z[x]
ZPoly zdiv_exact(ZPoly a, const ZPoly& b) {
  ztrim(a);
  if (a.empty()) return {};
  ZPoly q(a.size() - b.size() + 1, 0);
  while (a.size() >= b.size()) {
    mpz_class lead = a.back();
    size_t shift = a.size() - b.size();
    q[shift] = lead;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= lead * b[i];
    ztrim(a);
    if (a.empty()) break;
  }
  if (!a.empty()) throw internal_error("zdiv_exact: nonzero remainder");
  return q;
}
} // namespace

std::vector<mpz_class> cyclotomic_polynomial(std::uint32_t n) {
  static std::map<std::uint32_t, ZPoly> cache;
  static std::recursive_mutex mu;
  std::lock_guard<std::recursive_mutex> lk(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  ZPoly f(n + 1, 0);
  f[0] = -1;
  f[n] = 1; // x^n - 1
  for (std::uint32_t d = 1; d < n; ++d) {
    if (n % d) continue;
    f = zdiv_exact(std::move(f), cyclotomic_polynomial(d));
  }
  cache.emplace(n, f);
  return f;
}

// ---- Cyclotomic -------------------------------------------------------------

Cyclotomic::Cyclotomic(const CyclotomicField* F, std::vector<mpq_class> coeffs)
    : F_(F), c_(std::move(coeffs)) {}

bool Cyclotomic::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

mpq_class Cyclotomic::rational_part() const {
  if (!is_rational()) throw input_error("not a rational value");
  return c_[0];
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  if (F_ != o.F_) throw input_error("cyclotomic field mismatch");
  std::vector<mpq_class> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] + o.c_[i];
  return Cyclotomic(F_, std::move(r));
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator-() const {
  std::vector<mpq_class> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
  return Cyclotomic(F_, std::move(r));
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  if (F_ != o.F_) throw input_error("cyclotomic field mismatch");
  const size_t n = c_.size();
  std::vector<mpq_class> prod(2 * n - 1);
  for (size_t i = 0; i < n; ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < n; ++j) {
      if (o.c_[j] == 0) continue;
      prod[i + j] += c_[i] * o.c_[j];
    }
  }
  return Cyclotomic(F_, F_->reduce(std::move(prod)));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw input_error("inverse of zero");
  const auto& f = F_->poly_;
  // extended Euclid in Q[x] against the minimal polynomial
  std::vector<mpq_class> r0(f.begin(), f.end());
  std::vector<mpq_class> r1(c_.begin(), c_.end());
  std::vector<mpq_class> t0{0}, t1{1};
  auto deg = [](const std::vector<mpq_class>& a) {
    for (size_t i = a.size(); i-- > 0;)
      if (a[i] != 0) return static_cast<long>(i);
    return -1L;
  };
  while (deg(r1) > 0) {
    // r0 = q*r1 + r2
    std::vector<mpq_class> q(std::max<long>(deg(r0) - deg(r1) + 1, 1), 0);
    std::vector<mpq_class> r2 = r0;
    long d1 = deg(r1);
    mpq_class inv_lead = 1 / r1[d1];
    while (deg(r2) >= d1) {
      long d2 = deg(r2);
      mpq_class coef = r2[d2] * inv_lead;
      q[d2 - d1] = coef;
      for (long i = 0; i <= d1; ++i) r2[d2 - d1 + i] -= coef * r1[i];
    }
    // t2 = t0 - q*t1
    std::vector<mpq_class> t2 = t0;
    t2.resize(std::max(t0.size(), q.size() + t1.size()), 0);
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (size_t j = 0; j < t1.size(); ++j) t2[i + j] -= q[i] * t1[j];
    }
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  long d = deg(r1);
  if (d != 0) throw internal_error("cyclotomic inverse: gcd not constant");
  mpq_class scale = 1 / r1[0];
  for (auto& x : t1) x *= scale;
  return Cyclotomic(F_, F_->reduce(std::move(t1)));
}

Cyclotomic Cyclotomic::conj() const {
  const std::uint32_t n = F_->n_;
  if (n <= 2) return *this;
  std::vector<mpq_class> acc(F_->phi_, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const auto& xp = F_->xpow_[(n - i) % n];
    for (size_t j = 0; j < xp.size(); ++j) acc[j] += c_[i] * xp[j];
  }
  return Cyclotomic(F_, std::move(acc));
}

bool Cyclotomic::operator==(const Cyclotomic& o) const { return F_ == o.F_ && c_ == o.c_; }

std::string Cyclotomic::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    mpq_class a = c_[i];
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
    } else {
      os << (a < 0 ? "-" : "+");
      if (a < 0) a = -a;
    }
    first = false;
    if (i == 0 || a != 1) os << a.get_str();
    if (i >= 1) {
      if (a != 1) os << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

// ---- CyclotomicField --------------------------------------------------------

CyclotomicField::CyclotomicField(std::uint32_t n) : n_(n) {
  poly_ = cyclotomic_polynomial(n);
  phi_ = static_cast<std::uint32_t>(poly_.size() - 1);
  // x^k reduced mod poly for 0 <= k < n  (used by conj and zeta_pow)
  xpow_.resize(std::max<std::uint32_t>(n, 1));
  std::vector<mpq_class> cur(phi_, 0);
  cur[0] = 1;
  for (std::uint32_t k = 0; k < n; ++k) {
    xpow_[k] = cur;
    // multiply by x
    std::vector<mpq_class> nxt(phi_ + 1, 0);
    for (std::uint32_t i = 0; i < phi_; ++i) nxt[i + 1] = cur[i];
    cur = reduce(std::move(nxt));
  }
}

std::vector<mpq_class> CyclotomicField::reduce(std::vector<mpq_class> v) const {
  // modulus is monic with integer coefficients
  while (v.size() > phi_) {
    mpq_class lead = v.back();
    size_t shift = v.size() - 1 - phi_;
    if (lead != 0) {
      for (std::uint32_t i = 0; i < phi_; ++i) v[shift + i] -= lead * mpq_class(poly_[i]);
    }
    v.pop_back();
  }
  v.resize(phi_, 0);
  return v;
}

CycloPtr CyclotomicField::get(std::uint32_t n) {
  if (n < 1) throw input_error("cyclotomic_field: n must be >= 1");
  if (n > 5000) throw bound_error("cyclotomic_field: n > 5000");
  static std::map<std::uint32_t, CycloPtr> registry;
  static std::mutex mu;
  std::lock_guard<std::mutex> lk(mu);
  auto it = registry.find(n);
  if (it != registry.end()) return it->second;
  CycloPtr F(new CyclotomicField(n));
  registry.emplace(n, F);
  return F;
}

Cyclotomic CyclotomicField::zero() const {
  return Cyclotomic(this, std::vector<mpq_class>(phi_, 0));
}

Cyclotomic CyclotomicField::one() const { return from_mpq(1); }

Cyclotomic CyclotomicField::from_mpq(const mpq_class& r) const {
  std::vector<mpq_class> c(phi_, 0);
  c[0] = r;
  c[0].canonicalize();
  return Cyclotomic(this, std::move(c));
}

Cyclotomic CyclotomicField::zeta() const { return zeta_pow(1); }

Cyclotomic CyclotomicField::zeta_pow(std::int64_t k) const {
  std::int64_t r = k % static_cast<std::int64_t>(n_);
  if (r < 0) r += n_;
  return Cyclotomic(this, xpow_[static_cast<std::uint32_t>(r)]);
}

Cyclotomic CyclotomicField::element(std::vector<mpq_class> c) const {
  for (auto& x : c) x.canonicalize();
  if (c.size() > phi_) c = reduce(std::move(c));
  c.resize(phi_, 0);
  return Cyclotomic(this, std::move(c));
}

Cyclotomic CyclotomicField::lift(const Cyclotomic& x) const {
  const std::uint32_t m = x.parent().n();
  if (n_ % m) throw input_error("cyclotomic lift: index does not divide");
  const std::uint32_t step = n_ / m;
  std::vector<mpq_class> acc(phi_, 0);
  for (size_t i = 0; i < x.coeffs().size(); ++i) {
    if (x.coeffs()[i] == 0) continue;
    const auto& xp = xpow_[(static_cast<std::uint64_t>(i) * step) % n_];
    for (size_t j = 0; j < xp.size(); ++j) acc[j] += x.coeffs()[i] * xp[j];
  }
  return Cyclotomic(this, std::move(acc));
}

} // namespace limitrep::fields
