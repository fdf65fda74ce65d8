#include "limitrep/scalar.hpp"

#include <sstream>

namespace limitrep {

using fields::CyclotomicField;
using fields::PrimePowerField;
using fields::TowerEmbedding;

CoeffField CoeffField::cyclotomic(std::uint32_t n) {
  CoeffField f;
  f.kind_ = Kind::Cyclo;
  f.cyc_ = CyclotomicField::get(n);
  return f;
}

CoeffField CoeffField::finite(std::uint64_t ell, std::uint32_t m) {
  CoeffField f;
  f.kind_ = Kind::Finite;
  f.ff_ = PrimePowerField::get(ell, m);
  return f;
}

CoeffField CoeffField::parse(const std::string& s) {
  if (s == "Q") return rationals();
  if (s.rfind("Q(z_", 0) == 0 && s.back() == ')') {
    std::uint32_t n = static_cast<std::uint32_t>(std::stoul(s.substr(4, s.size() - 5)));
    return cyclotomic(n);
  }
  if (s.rfind("F_", 0) == 0) {
    std::string body = s.substr(2);
    std::uint32_t m = 1;
    auto caret = body.find('^');
    if (caret != std::string::npos) {
      m = static_cast<std::uint32_t>(std::stoul(body.substr(caret + 1)));
      body = body.substr(0, caret);
    }
    std::uint64_t ell = std::stoull(body);
    if (!nt::is_prime(ell)) throw input_error("coefficient field: F_ell needs prime ell");
    return finite(ell, m);
  }
  throw input_error("cannot parse coefficient field '" + s + "'");
}

std::uint64_t CoeffField::characteristic() const {
  return kind_ == Kind::Cyclo ? 0 : ff_->characteristic();
}

std::uint32_t CoeffField::cyclo_index() const {
  if (kind_ != Kind::Cyclo) throw input_error("not a cyclotomic field");
  return cyc_->n();
}

Scalar CoeffField::zero() const {
  return kind_ == Kind::Cyclo ? Scalar(cyc_->zero()) : Scalar(ff_->zero());
}

Scalar CoeffField::one() const {
  return kind_ == Kind::Cyclo ? Scalar(cyc_->one()) : Scalar(ff_->one());
}

Scalar CoeffField::from_int(std::int64_t v) const {
  if (kind_ == Kind::Cyclo) return Scalar(cyc_->from_mpq(mpq_class(static_cast<long>(v))));
  const std::uint64_t p = ff_->characteristic();
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += static_cast<std::int64_t>(p);
  return Scalar(ff_->from_int(static_cast<std::uint64_t>(r)));
}

Scalar CoeffField::from_mpq(const mpq_class& r) const {
  if (kind_ != Kind::Cyclo) throw input_error("from_mpq: char-0 fields only");
  return Scalar(cyc_->from_mpq(r));
}

Scalar CoeffField::root_of_unity(std::uint64_t k) const {
  if (k == 0) throw input_error("root_of_unity: order must be positive");
  if (kind_ == Kind::Cyclo) {
    const std::uint32_t n = cyc_->n();
    if (k == 1) return one();
    if (k == 2 && n % 2) return Scalar(cyc_->from_mpq(-1));
    if (n % k) throw input_error("root_of_unity: order does not divide cyclotomic index");
    return Scalar(cyc_->zeta_pow(static_cast<std::int64_t>(n / k)));
  }
  const std::uint64_t q = ff_->order();
  if ((q - 1) % k) throw input_error("root_of_unity: order does not divide q-1");
  return Scalar(ff_->generator().pow((q - 1) / k));
}

CoeffField CoeffField::join(const CoeffField& other) const {
  if (kind_ != other.kind_) throw input_error("join: incompatible coefficient fields");
  if (kind_ == Kind::Cyclo)
    return cyclotomic(static_cast<std::uint32_t>(nt::lcm_u64(cyc_->n(), other.cyc_->n())));
  if (ff_->characteristic() != other.ff_->characteristic())
    throw input_error("join: different characteristic");
  return finite(ff_->characteristic(),
                static_cast<std::uint32_t>(nt::lcm_u64(ff_->degree(), other.ff_->degree())));
}

Scalar CoeffField::coerce(const Scalar& x) const {
  if (kind_ == Kind::Cyclo) {
    if (!x.is_cyclo()) throw input_error("coerce: char mismatch");
    if (&x.cyclo().parent() == cyc_.get()) return x;
    return Scalar(cyc_->lift(x.cyclo()));
  }
  if (x.is_cyclo()) throw input_error("coerce: char mismatch");
  const PrimePowerField* src = &x.finite().parent();
  if (src == ff_.get()) return x;
  auto srcp = PrimePowerField::get(src->characteristic(), src->degree());
  return Scalar(TowerEmbedding::get(srcp, ff_).apply(x.finite()));
}

bool CoeffField::operator==(const CoeffField& o) const {
  if (kind_ != o.kind_) return false;
  if (kind_ == Kind::Cyclo) return cyc_.get() == o.cyc_.get();
  return ff_.get() == o.ff_.get();
}

std::string CoeffField::str() const {
  if (kind_ == Kind::Cyclo) {
    if (cyc_->n() == 1) return "Q";
    std::ostringstream os;
    os << "Q(z_" << cyc_->n() << ")";
    return os.str();
  }
  std::ostringstream os;
  if (ff_->degree() == 1) {
    os << "F_" << ff_->characteristic();
  } else {
    os << "F_" << ff_->characteristic() << "^" << ff_->degree();
  }
  return os.str();
}

// ---- Scalar -----------------------------------------------------------------

bool Scalar::is_zero() const {
  return is_cyclo() ? cyclo().is_zero() : finite().is_zero();
}

bool Scalar::is_one() const {
  if (is_cyclo()) return cyclo().is_rational() && cyclo().rational_part() == 1;
  return finite().is_one();
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (is_cyclo()) return Scalar(cyclo() + o.cyclo());
  return Scalar(finite() + o.finite());
}

Scalar Scalar::operator-(const Scalar& o) const {
  if (is_cyclo()) return Scalar(cyclo() - o.cyclo());
  return Scalar(finite() - o.finite());
}

Scalar Scalar::operator-() const {
  if (is_cyclo()) return Scalar(-cyclo());
  return Scalar(-finite());
}

Scalar Scalar::operator*(const Scalar& o) const {
  if (is_cyclo()) return Scalar(cyclo() * o.cyclo());
  return Scalar(finite() * o.finite());
}

Scalar Scalar::inverse() const {
  if (is_cyclo()) return Scalar(cyclo().inverse());
  return Scalar(finite().inverse());
}

Scalar Scalar::conj() const {
  if (is_cyclo()) return Scalar(cyclo().conj());
  return *this;
}

bool Scalar::operator==(const Scalar& o) const {
  if (is_cyclo() != o.is_cyclo()) return false;
  if (is_cyclo()) return cyclo() == o.cyclo();
  return finite() == o.finite();
}

std::string Scalar::str() const { return is_cyclo() ? cyclo().str() : finite().str(); }

} // namespace limitrep
