#include "limitrep/fields.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace limitrep::fields {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

// ---- dense polynomial arithmetic over F_p ----------------------------------

void trim(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

FpPoly poly_mul(const FpPoly& a, const FpPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<u32>((r[i + j] + static_cast<u64>(a[i]) * b[j]) % p);
  }
  return r;
}

// remainder of a mod f, f monic
FpPoly poly_rem(FpPoly a, const FpPoly& f, u64 p) {
  trim(a);
  const size_t df = f.size() - 1;
  while (a.size() > df) {
    u64 lead = a.back();
    size_t shift = a.size() - 1 - df;
    if (lead) {
      for (size_t i = 0; i < df; ++i)
        a[shift + i] = static_cast<u32>((a[shift + i] + p * lead - lead * f[i] % p) % p);
    }
    a.pop_back();
    trim(a);
  }
  a.resize(df, 0);
  return a;
}

FpPoly poly_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& f, u64 p) {
  return poly_rem(poly_mul(a, b, p), f, p);
}

FpPoly poly_powmod2(const FpPoly& base0, u64 e, const FpPoly& f, u64 p) {
  FpPoly r{1};
  r.resize(f.size() - 1, 0);
  FpPoly base = poly_rem(base0, f, p);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

bool poly_is_zero(const FpPoly& a) {
  for (u32 c : a)
    if (c) return false;
  return true;
}

FpPoly poly_sub(FpPoly a, const FpPoly& b, u64 p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = static_cast<u32>((a[i] + p - b[i]) % p);
  return a;
}

FpPoly poly_gcd(FpPoly a, FpPoly b, u64 p) {
  trim(a);
  trim(b);
  while (!poly_is_zero(b)) {
    // make b monic, then a mod b
    u64 inv = nt::inv_mod(b.back(), p);
    for (auto& c : b) c = static_cast<u32>(c * inv % p);
    FpPoly r = poly_rem(a, b, p);
    trim(r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// ---- modulus selection ------------------------------------------------------

bool is_irreducible_impl(const FpPoly& f, u64 p) {
  const u32 m = static_cast<u32>(f.size() - 1);
  if (m == 0) return false;
  // x^{p^m} == x mod f, and gcd(x^{p^{m/r}} - x, f) = 1 for primes r | m
  FpPoly x{0, 1};
  FpPoly xq = x;
  for (u32 i = 0; i < m; ++i) xq = poly_powmod2(xq, p, f, p); // x^{p^m}
  FpPoly diff = poly_sub(xq, poly_rem(x, f, p), p);
  if (!poly_is_zero(diff)) return false;
  for (auto [r, e] : nt::factorize(m)) {
    (void)e;
    FpPoly xr = x;
    for (u32 i = 0; i < m / r; ++i) xr = poly_powmod2(xr, p, f, p);
    FpPoly g = poly_gcd(f, poly_sub(xr, poly_rem(x, f, p), p), p);
    trim(g);
    if (g.size() != 1) return false;
  }
  return true;
}

bool is_primitive(const FpPoly& f, u64 p) {
  const u32 m = static_cast<u32>(f.size() - 1);
  const u64 Q = nt::pow_u64(p, m);
  if (!is_irreducible_impl(f, p)) return false;
  FpPoly x{0, 1};
  for (auto [r, e] : nt::factorize(Q - 1)) {
    (void)e;
    FpPoly y = poly_powmod2(x, (Q - 1) / r, f, p);
    trim(y);
    if (y.size() == 1 && y[0] == 1) return false;
  }
  return true;
}

bool norm_compatible(const FpPoly& f, u64 p) {
  const u32 m = static_cast<u32>(f.size() - 1);
  const u64 Q = nt::pow_u64(p, m);
  for (u32 d = 1; d < m; ++d) {
    if (m % d) continue;
    const FpPoly cd = conway_polynomial(p, d);
    const u64 N = (Q - 1) / (nt::pow_u64(p, d) - 1);
    FpPoly y = poly_powmod2(FpPoly{0, 1}, N, f, p);
    // evaluate cd at y mod f (Horner)
    FpPoly acc{cd.back()};
    for (size_t i = cd.size() - 1; i-- > 0;) {
      acc = poly_mulmod(acc, y, f, p);
      if (acc.size() < f.size() - 1) acc.resize(f.size() - 1, 0);
      acc[0] = static_cast<u32>((acc[0] + cd[i]) % p);
    }
    if (!poly_is_zero(acc)) return false;
  }
  return true;
}

// The standard word order: f = x^m + a_{m-1}x^{m-1} + ... compares by the
// tuple ((-1)^{m-i} a_i mod p) for i = m-1 down to 0.
FpPoly poly_from_word(const std::vector<u32>& word, u64 p, u32 m) {
  FpPoly f(m + 1, 0);
  f[m] = 1;
  for (u32 k = 0; k < m; ++k) {
    u32 i = m - 1 - k; // word[k] corresponds to a_i
    u64 b = word[k];
    u64 a = ((m - i) % 2 == 0) ? b : (p - b) % p; // a_i = (-1)^{m-i} b
    f[i] = static_cast<u32>(a);
  }
  return f;
}

std::map<std::pair<u64, u32>, FpPoly>& conway_cache() {
  static std::map<std::pair<u64, u32>, FpPoly> c;
  return c;
}
std::mutex& conway_mutex() {
  static std::mutex m;
  return m;
}

} // namespace

bool fp_poly_irreducible(const FpPoly& f, std::uint64_t p) { return is_irreducible_impl(f, p); }

FpPoly conway_polynomial(std::uint64_t p, std::uint32_t m) {
  if (!nt::is_prime(p)) throw input_error("conway_polynomial: p must be prime");
  if (m < 1) throw input_error("conway_polynomial: m must be >= 1");
  {
    std::lock_guard<std::mutex> lk(conway_mutex());
    auto it = conway_cache().find({p, m});
    if (it != conway_cache().end()) return it->second;
  }
  const u64 total = nt::pow_u64(p, m);
  if (total > (1u << 21))
    throw bound_error("conway_polynomial: search space too large for desk scale");
  // iterate words in lexicographic order, most significant first
  std::vector<u32> word(m, 0);
  for (u64 idx = 0; idx < total; ++idx) {
    u64 t = idx;
    for (u32 k = m; k-- > 0;) {
      word[k] = static_cast<u32>(t % p);
      t /= p;
    }
    FpPoly f = poly_from_word(word, p, m);
    if (f[0] == 0) continue; // x | f
    if (!is_primitive(f, p)) continue;
    if (m > 1 && !norm_compatible(f, p)) continue;
    std::lock_guard<std::mutex> lk(conway_mutex());
    conway_cache().emplace(std::make_pair(p, m), f);
    return f;
  }
  throw internal_error("conway_polynomial: no candidate found");
}

// ---- FieldElement -----------------------------------------------------------

FieldElement::FieldElement(const PrimePowerField* parent, std::vector<u32> coeffs)
    : parent_(parent), c_(std::move(coeffs)) {}

bool FieldElement::is_zero() const {
  for (u32 c : c_)
    if (c) return false;
  return true;
}

bool FieldElement::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i]) return false;
  return true;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  if (parent_ != o.parent_) throw input_error("field mismatch in +");
  const u64 p = parent_->characteristic();
  std::vector<u32> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = static_cast<u32>((c_[i] + o.c_[i]) % p);
  return FieldElement(parent_, std::move(r));
}

FieldElement FieldElement::operator-(const FieldElement& o) const { return *this + (-o); }

FieldElement FieldElement::operator-() const {
  const u64 p = parent_->characteristic();
  std::vector<u32> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = static_cast<u32>((p - c_[i]) % p);
  return FieldElement(parent_, std::move(r));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  if (parent_ != o.parent_) throw input_error("field mismatch in *");
  const u64 p = parent_->characteristic();
  FpPoly prod = poly_mul(c_, o.c_, p);
  FpPoly red = poly_rem(std::move(prod), parent_->modulus(), p);
  red.resize(parent_->degree(), 0);
  return FieldElement(parent_, std::move(red));
}

FieldElement FieldElement::pow(u64 e) const {
  FieldElement r = parent_->one();
  FieldElement b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw input_error("inverse of zero");
  // x^(q-2)
  return pow(parent_->order() - 2);
}

bool FieldElement::operator==(const FieldElement& o) const {
  return parent_ == o.parent_ && c_ == o.c_;
}

bool FieldElement::operator<(const FieldElement& o) const { return c_ < o.c_; }

std::string FieldElement::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (!c_[i]) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || c_[i] != 1) os << c_[i];
    if (i >= 1) {
      if (c_[i] != 1) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::uint64_t FieldElement::index() const {
  const u64 p = parent_->characteristic();
  u64 idx = 0;
  for (size_t i = c_.size(); i-- > 0;) idx = idx * p + c_[i];
  return idx;
}

// ---- PrimePowerField --------------------------------------------------------

PrimePowerField::PrimePowerField(u64 p, u32 m, FpPoly modulus)
    : p_(p), m_(m), q_(nt::pow_u64(p, m)), modulus_(std::move(modulus)) {}

FieldPtr PrimePowerField::get(std::uint64_t p, std::uint32_t m) {
  if (!nt::is_prime(p)) throw input_error("PrimePowerField: p must be prime");
  if (m < 1) throw input_error("PrimePowerField: m must be >= 1");
  static std::map<std::pair<u64, u32>, FieldPtr> registry;
  static std::mutex mu;
  std::lock_guard<std::mutex> lk(mu);
  auto it = registry.find({p, m});
  if (it != registry.end()) return it->second;
  FpPoly mod = conway_polynomial(p, m);
  FieldPtr F(new PrimePowerField(p, m, std::move(mod)));
  registry.emplace(std::make_pair(p, m), F);
  return F;
}

FieldElement PrimePowerField::zero() const {
  return FieldElement(this, std::vector<u32>(m_, 0));
}

FieldElement PrimePowerField::one() const { return from_int(1); }

FieldElement PrimePowerField::from_int(u64 n) const {
  std::vector<u32> c(m_, 0);
  c[0] = static_cast<u32>(n % p_);
  return FieldElement(this, std::move(c));
}

FieldElement PrimePowerField::generator() const {
  if (m_ == 1) {
    // smallest primitive root; for p=2 this is 1
    if (p_ == 2) return one();
    for (u64 g = 2; g < p_; ++g) {
      bool prim = true;
      for (auto [r, e] : nt::factorize(p_ - 1)) {
        (void)e;
        if (nt::pow_mod(g, (p_ - 1) / r, p_) == 1) { prim = false; break; }
      }
      if (prim) return from_int(g);
    }
    throw internal_error("no primitive root");
  }
  std::vector<u32> c(m_, 0);
  c[1] = 1;
  return FieldElement(this, std::move(c));
}

FieldElement PrimePowerField::element(std::vector<u32> coeffs) const {
  if (coeffs.size() != m_) throw input_error("element: wrong coefficient count");
  for (auto& c : coeffs) c %= static_cast<u32>(p_);
  return FieldElement(this, std::move(coeffs));
}

FieldElement PrimePowerField::element_by_index(u64 i) const {
  if (i >= q_) throw input_error("element_by_index: out of range");
  std::vector<u32> c(m_, 0);
  for (u32 k = 0; k < m_; ++k) {
    c[k] = static_cast<u32>(i % p_);
    i /= p_;
  }
  return FieldElement(this, std::move(c));
}

FieldElement PrimePowerField::scalar_mul(u32 a, const FieldElement& x) const {
  std::vector<u32> c = x.coeffs();
  for (auto& v : c) v = static_cast<u32>(static_cast<u64>(v) * a % p_);
  return FieldElement(this, std::move(c));
}

std::uint64_t PrimePowerField::dlog(const FieldElement& x) const {
  if (x.is_zero()) throw input_error("dlog of zero");
  if (log_.empty()) {
    if (q_ > (1u << 21)) throw bound_error("dlog table too large");
    std::vector<u64> tbl(q_, 0);
    FieldElement g = generator();
    FieldElement acc = one();
    for (u64 i = 0; i + 1 < q_; ++i) {
      tbl[acc.index()] = i;
      acc = acc * g;
    }
    const_cast<PrimePowerField*>(this)->log_ = std::move(tbl);
  }
  return log_[x.index()];
}

std::uint32_t PrimePowerField::trace_to_prime(const FieldElement& x) const {
  FieldElement acc = x;
  FieldElement t = x;
  for (u32 i = 1; i < m_; ++i) {
    t = t.pow(p_);
    acc = acc + t;
  }
  // acc lies in the prime field
  for (size_t i = 1; i < acc.coeffs().size(); ++i)
    if (acc.coeffs()[i]) throw internal_error("trace not in prime field");
  return acc.coeffs()[0];
}

std::string PrimePowerField::str() const {
  std::ostringstream os;
  os << "F_" << q_;
  return os.str();
}

FieldElement frobenius(const FieldElement& x, std::uint64_t q) {
  const u64 p = x.parent().characteristic();
  u64 t = q;
  while (t > 1) {
    if (t % p) throw input_error("frobenius: q must be a power of the characteristic");
    t /= p;
  }
  if (q < 1) throw input_error("frobenius: q must be positive");
  return x.pow(q);
}

// ---- TowerEmbedding ---------------------------------------------------------

TowerEmbedding TowerEmbedding::get(const FieldPtr& src, const FieldPtr& tgt) {
  if (src->characteristic() != tgt->characteristic())
    throw input_error("embedding: different characteristic");
  if (tgt->degree() % src->degree())
    throw input_error("embedding: source degree does not divide target degree");
  static std::map<std::pair<const PrimePowerField*, const PrimePowerField*>, TowerEmbedding> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lk(mu);
  auto key = std::make_pair(src.get(), tgt.get());
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  TowerEmbedding e;
  e.src_ = src;
  e.tgt_ = tgt;
  // canonical compatible choice: generator of the source maps to
  // ghat^((Q_b-1)/(Q_a-1)) where ghat generates the target; with
  // norm-compatible moduli this lands on a root of the source modulus and
  // makes the whole lattice commute on the nose.
  const u64 N = (tgt->order() - 1) / (src->order() - 1);
  e.gen_image_ = tgt->generator().pow(N);
  e.gen_powers_.reserve(src->degree());
  FieldElement acc = tgt->one();
  for (u32 i = 0; i < src->degree(); ++i) {
    e.gen_powers_.push_back(acc);
    acc = acc * e.gen_image_;
  }
  // sanity: image is a root of the source modulus
  {
    const FpPoly& f = src->modulus();
    FieldElement v = tgt->zero();
    for (size_t i = f.size(); i-- > 0;) {
      v = v * e.gen_image_;
      v = v + tgt->scalar_mul(f[i], tgt->one());
    }
    if (!v.is_zero()) throw internal_error("embedding image is not a root of the source modulus");
  }
  cache.emplace(key, e);
  return e;
}

FieldElement TowerEmbedding::apply(const FieldElement& x) const {
  if (&x.parent() != src_.get()) throw input_error("embedding: element not in source field");
  FieldElement r = tgt_->zero();
  for (size_t i = 0; i < x.coeffs().size(); ++i) {
    if (!x.coeffs()[i]) continue;
    r = r + tgt_->scalar_mul(x.coeffs()[i], gen_powers_[i]);
  }
  return r;
}

} // namespace limitrep::fields
