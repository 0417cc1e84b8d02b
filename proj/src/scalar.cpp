#include "dotpairs/scalar.hpp"

#include <cctype>

namespace dotpairs {

namespace {

std::int64_t mod_reduce(std::int64_t v, std::int64_t p) {
    std::int64_t r = v % p;
    return r < 0 ? r + p : r;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t p) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

// Inverse of a mod p via extended Euclid; a must be nonzero mod a prime p.
std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    // r is gcd(a, p) == 1 for prime p and a != 0
    return mod_reduce(t, p);
}

} // namespace

bool is_prime_modulus(std::int64_t p) {
    if (p < 2) return false;
    if (p < 4) return true;
    if (p % 2 == 0) return false;
    for (std::int64_t q = 3; q <= p / q; q += 2) {
        if (p % q == 0) return false;
    }
    return true;
}

FieldSpec FieldSpec::rationals() {
    return FieldSpec(FieldKind::rational, 0);
}

FieldSpec FieldSpec::prime_field(std::int64_t p) {
    if (!is_prime_modulus(p)) {
        throw DomainError("field modulus " + std::to_string(p) + " is not prime");
    }
    return FieldSpec(FieldKind::prime, p);
}

std::int64_t FieldSpec::modulus() const {
    if (kind_ != FieldKind::prime) {
        throw DomainError("modulus() called on the rational backend");
    }
    return p_;
}

std::string FieldSpec::to_string() const {
    return is_rational() ? "rational" : "F_" + std::to_string(p_);
}

Scalar::Scalar() : field_(FieldSpec::rationals()), rat_(0) {}

Scalar Scalar::rational(mpq_class value) {
    value.canonicalize();
    Scalar s(FieldSpec::rationals());
    s.rat_ = std::move(value);
    return s;
}

Scalar Scalar::rational(long long num, long long den) {
    if (den == 0) throw DivisionByZeroError("rational with zero denominator");
    mpq_class v(static_cast<long>(num), static_cast<long>(den));
    return rational(std::move(v));
}

Scalar Scalar::residue(std::int64_t value, const FieldSpec& field) {
    if (!field.is_prime()) throw DomainError("residue() needs a prime field");
    Scalar s(field);
    s.res_ = mod_reduce(value, field.modulus());
    return s;
}

Scalar Scalar::from_integer(long long value, const FieldSpec& field) {
    return field.is_rational() ? rational(value) : residue(value, field);
}

Scalar Scalar::zero(const FieldSpec& field) { return from_integer(0, field); }
Scalar Scalar::one(const FieldSpec& field) { return from_integer(1, field); }

bool Scalar::is_zero() const {
    return field_.is_rational() ? rat_ == 0 : res_ == 0;
}

void Scalar::check_same_field(const Scalar& other) const {
    if (field_ != other.field_) {
        throw FieldMismatchError("mixed-field operands: " + field_.to_string() +
                                 " vs " + other.field_.to_string());
    }
}

Scalar Scalar::operator+(const Scalar& other) const {
    check_same_field(other);
    Scalar s(field_);
    if (field_.is_rational()) {
        s.rat_ = rat_ + other.rat_;
    } else {
        s.res_ = mod_reduce(res_ + other.res_, field_.modulus());
    }
    return s;
}

Scalar Scalar::operator-(const Scalar& other) const {
    check_same_field(other);
    Scalar s(field_);
    if (field_.is_rational()) {
        s.rat_ = rat_ - other.rat_;
    } else {
        s.res_ = mod_reduce(res_ - other.res_, field_.modulus());
    }
    return s;
}

Scalar Scalar::operator*(const Scalar& other) const {
    check_same_field(other);
    Scalar s(field_);
    if (field_.is_rational()) {
        s.rat_ = rat_ * other.rat_;
    } else {
        s.res_ = mul_mod(res_, other.res_, field_.modulus());
    }
    return s;
}

Scalar Scalar::operator/(const Scalar& other) const {
    check_same_field(other);
    if (other.is_zero()) throw DivisionByZeroError("division by zero");
    Scalar s(field_);
    if (field_.is_rational()) {
        s.rat_ = rat_ / other.rat_;
    } else {
        const std::int64_t p = field_.modulus();
        s.res_ = mul_mod(res_, inv_mod(other.res_, p), p);
    }
    return s;
}

Scalar Scalar::operator-() const {
    Scalar s(field_);
    if (field_.is_rational()) {
        s.rat_ = -rat_;
    } else {
        s.res_ = mod_reduce(-res_, field_.modulus());
    }
    return s;
}

bool Scalar::operator==(const Scalar& other) const {
    check_same_field(other);
    return field_.is_rational() ? rat_ == other.rat_ : res_ == other.res_;
}

const mpq_class& Scalar::rational_value() const {
    if (!field_.is_rational()) throw DomainError("rational_value() on a prime-field scalar");
    return rat_;
}

std::int64_t Scalar::residue_value() const {
    if (!field_.is_prime()) throw DomainError("residue_value() on a rational scalar");
    return res_;
}

std::string Scalar::str() const {
    return field_.is_rational() ? rat_.get_str() : std::to_string(res_);
}

namespace {

bool is_decimal_integer(std::string_view t) {
    std::size_t i = 0;
    if (i < t.size() && (t[i] == '+' || t[i] == '-')) ++i;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    }
    return true;
}

// mpz_set_str accepts '-' but not '+'.
mpz_class to_mpz(std::string_view t) {
    if (!t.empty() && t.front() == '+') t.remove_prefix(1);
    return mpz_class(std::string(t), 10);
}

} // namespace

Scalar parse_scalar(std::string_view text, const FieldSpec& field) {
    if (text.empty()) throw ParseError("empty scalar");
    if (field.is_prime()) {
        if (!is_decimal_integer(text)) {
            throw ParseError("prime-field scalar must be a decimal integer: '" +
                             std::string(text) + "'");
        }
        mpz_class v = to_mpz(text);
        mpz_class r = v % field.modulus();
        if (r < 0) r += field.modulus();
        return Scalar::residue(r.get_si(), field);
    }
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    if (!is_decimal_integer(num)) {
        throw ParseError("bad rational numerator: '" + std::string(text) + "'");
    }
    mpz_class n = to_mpz(num);
    mpz_class d(1);
    if (slash != std::string_view::npos) {
        std::string_view den = text.substr(slash + 1);
        if (!is_decimal_integer(den)) {
            throw ParseError("bad rational denominator: '" + std::string(text) + "'");
        }
        d = to_mpz(den);
        if (d == 0) throw DivisionByZeroError("rational with zero denominator: '" +
                                              std::string(text) + "'");
    }
    return Scalar::rational(mpq_class(n, d));
}

std::string format_scalar(const Scalar& s) { return s.str(); }

} // namespace dotpairs
