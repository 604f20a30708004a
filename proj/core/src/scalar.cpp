#include "xhopf/scalar.hpp"

#include <ostream>

#include "xhopf/error.hpp"

namespace xhopf {

namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t result = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1)
            result = mod_mul(result, base, p);
        base = mod_mul(base, base, p);
        exp >>= 1;
    }
    return result;
}

std::uint64_t reduce(const mpz_class& v, std::uint64_t p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
    return r.get_ui();
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n && d < (1ULL << 32); ++d)
        if (n % d == 0)
            return false;
    return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (p >= (1ULL << 62) || !is_prime(p))
        throw Error(ErrorCode::InvalidArgument, "characteristic " + std::to_string(p) + " is not a supported prime");
    return FieldSpec{Kind::prime, p};
}

std::string FieldSpec::name() const {
    if (is_rational())
        return "Q";
    return "GF(" + std::to_string(characteristic) + ")";
}

Scalar::Scalar(FieldSpec field, long value) : field_(field) {
    if (field_.is_rational())
        q_ = value;
    else
        r_ = reduce(mpz_class(value), field_.characteristic);
}

Scalar::Scalar(FieldSpec field, const mpq_class& value) : field_(field) {
    if (field_.is_rational()) {
        q_ = value;
        q_.canonicalize();
    } else {
        *this = fraction(field, value.get_num(), value.get_den());
    }
}

Scalar Scalar::fraction(FieldSpec field, const mpz_class& num, const mpz_class& den) {
    Scalar s;
    s.field_ = field;
    if (field.is_rational()) {
        if (den == 0)
            throw Error(ErrorCode::DivisionByZero, "zero denominator");
        s.q_ = mpq_class(num, den);
        s.q_.canonicalize();
        return s;
    }
    const std::uint64_t p = field.characteristic;
    const std::uint64_t d = reduce(den, p);
    if (d == 0)
        throw Error(ErrorCode::DivisionByZero, "denominator vanishes in " + field.name());
    s.r_ = mod_mul(reduce(num, p), mod_pow(d, p - 2, p), p);
    return s;
}

bool Scalar::is_zero() const { return field_.is_rational() ? sgn(q_) == 0 : r_ == 0; }

bool Scalar::is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1; }

void Scalar::require_same_field(const Scalar& rhs) const {
    if (!(field_ == rhs.field_))
        throw Error(ErrorCode::MixedFields, field_.name() + " vs " + rhs.field_.name());
}

Scalar Scalar::operator+(const Scalar& rhs) const {
    require_same_field(rhs);
    Scalar s;
    s.field_ = field_;
    if (field_.is_rational()) {
        s.q_ = q_ + rhs.q_;
    } else {
        const std::uint64_t p = field_.characteristic;
        s.r_ = r_ + rhs.r_;
        if (s.r_ >= p)
            s.r_ -= p;
    }
    return s;
}

Scalar Scalar::operator-() const {
    Scalar s;
    s.field_ = field_;
    if (field_.is_rational())
        s.q_ = -q_;
    else
        s.r_ = r_ == 0 ? 0 : field_.characteristic - r_;
    return s;
}

Scalar Scalar::operator-(const Scalar& rhs) const { return *this + (-rhs); }

Scalar Scalar::operator*(const Scalar& rhs) const {
    require_same_field(rhs);
    Scalar s;
    s.field_ = field_;
    if (field_.is_rational())
        s.q_ = q_ * rhs.q_;
    else
        s.r_ = mod_mul(r_, rhs.r_, field_.characteristic);
    return s;
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
    a.require_same_field(b);
    require_same_field(a);
    if (field_.is_rational()) {
        if (sgn(a.q_) == 0 || sgn(b.q_) == 0)
            return;
        q_ += a.q_ * b.q_;
    } else {
        const std::uint64_t p = field_.characteristic;
        r_ = (r_ + mod_mul(a.r_, b.r_, p)) % p;
    }
}

Scalar Scalar::inv() const {
    if (is_zero())
        throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    Scalar s;
    s.field_ = field_;
    if (field_.is_rational())
        s.q_ = 1 / q_;
    else
        s.r_ = mod_pow(r_, field_.characteristic - 2, field_.characteristic);
    return s;
}

Scalar Scalar::operator/(const Scalar& rhs) const {
    require_same_field(rhs);
    return *this * rhs.inv();
}

bool Scalar::operator==(const Scalar& rhs) const {
    require_same_field(rhs);
    return field_.is_rational() ? q_ == rhs.q_ : r_ == rhs.r_;
}

std::string Scalar::to_string() const {
    if (field_.is_rational())
        return q_.get_str();
    return std::to_string(r_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

} // namespace xhopf
