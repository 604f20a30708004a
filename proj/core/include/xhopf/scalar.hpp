#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace xhopf {

/// The ground field: the rationals or a prime field GF(p).
struct FieldSpec {
    enum class Kind : std::uint8_t { rational, prime };

    Kind kind = Kind::rational;
    std::uint64_t characteristic = 0;

    static FieldSpec rational() { return {}; }
    /// Throws InvalidArgument unless `p` is a prime below 2^62.
    static FieldSpec prime(std::uint64_t p);

    bool is_rational() const { return kind == Kind::rational; }
    /// "Q" or "GF(p)".
    std::string name() const;

    bool operator==(const FieldSpec&) const = default;
};

bool is_prime(std::uint64_t n);

/// An exact field element. Rationals are kept as reduced GMP fractions with
/// positive denominator; prime-field elements as residues in [0, p).
/// Binary operations on elements of different fields throw MixedFields.
class Scalar {
  public:
    /// Rational zero.
    Scalar() = default;
    Scalar(FieldSpec field, long value);
    Scalar(FieldSpec field, const mpq_class& value);

    static Scalar zero(FieldSpec field) { return Scalar(field, 0L); }
    static Scalar one(FieldSpec field) { return Scalar(field, 1L); }
    /// num/den interpreted in `field`; throws DivisionByZero when den
    /// vanishes in the field.
    static Scalar fraction(FieldSpec field, const mpz_class& num, const mpz_class& den);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& rhs) const;
    Scalar operator-(const Scalar& rhs) const;
    Scalar operator*(const Scalar& rhs) const;
    Scalar operator/(const Scalar& rhs) const;
    Scalar operator-() const;
    Scalar inv() const;

    Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
    Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
    Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }

    /// Adds a*b in place; the hot path of every matrix product.
    void add_product(const Scalar& a, const Scalar& b);

    bool operator==(const Scalar& rhs) const;
    bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

    const mpq_class& rational_value() const { return q_; }
    std::uint64_t residue() const { return r_; }

    /// "a" or "a/b" over Q, the residue over GF(p).
    std::string to_string() const;

  private:
    void require_same_field(const Scalar& rhs) const;

    FieldSpec field_;
    mpq_class q_;
    std::uint64_t r_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

} // namespace xhopf
