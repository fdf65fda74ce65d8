#pragma once

// Tagged exact scalars: an element of Q(zeta_n) (n = 1 gives Q) or of a
// finite field F_{ell^m}.  All module machinery is written against this one
// coefficient type; coercions move values along the cyclotomic lattice and
// finite-field tower embeddings.

#include <cstdint>
#include <string>
#include <variant>

#include "limitrep/cyclotomic.hpp"
#include "limitrep/fields.hpp"

namespace limitrep {

class Scalar;

class CoeffField {
public:
  enum class Kind { Cyclo, Finite };

  static CoeffField rationals() { return cyclotomic(1); }
  static CoeffField cyclotomic(std::uint32_t n);
  static CoeffField finite(std::uint64_t ell, std::uint32_t m = 1);
  static CoeffField parse(const std::string& s); // "Q", "Q(z_4)", "F_3", "F_3^2"

  Kind kind() const { return kind_; }
  bool char_zero() const { return kind_ == Kind::Cyclo; }
  std::uint64_t characteristic() const;
  std::uint32_t cyclo_index() const; // n for Q(zeta_n)
  const fields::CycloPtr& cyclo() const { return cyc_; }
  const fields::FieldPtr& finite_field() const { return ff_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t) const;
  Scalar from_mpq(const mpq_class&) const; // char 0 only
  // a fixed scalar of exact multiplicative order k (requires k compatible)
  Scalar root_of_unity(std::uint64_t k) const;

  // smallest common overfield of the two descriptors
  CoeffField join(const CoeffField& other) const;
  // move x (valued in `from`) into this field
  Scalar coerce(const Scalar& x) const;

  bool operator==(const CoeffField& o) const;
  bool operator!=(const CoeffField& o) const { return !(*this == o); }
  std::string str() const;

private:
  Kind kind_ = Kind::Cyclo;
  fields::CycloPtr cyc_;
  fields::FieldPtr ff_;
};

class Scalar {
public:
  Scalar() = default;
  explicit Scalar(fields::Cyclotomic c) : v_(std::move(c)) {}
  explicit Scalar(fields::FieldElement f) : v_(std::move(f)) {}

  bool is_cyclo() const { return std::holds_alternative<fields::Cyclotomic>(v_); }
  const fields::Cyclotomic& cyclo() const { return std::get<fields::Cyclotomic>(v_); }
  const fields::FieldElement& finite() const { return std::get<fields::FieldElement>(v_); }

  bool is_zero() const;
  bool is_one() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator-() const;
  Scalar operator*(const Scalar& o) const;
  Scalar inverse() const;
  Scalar conj() const; // complex conjugation on cyclotomics; identity on finite
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  std::string str() const;

private:
  std::variant<fields::Cyclotomic, fields::FieldElement> v_;
};

} // namespace limitrep
