#ifndef DOTPAIRS_SCALAR_HPP
#define DOTPAIRS_SCALAR_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "dotpairs/errors.hpp"

namespace dotpairs {

enum class FieldKind { rational, prime };

// Identifies the field a scalar (or point set) lives in.  Exactly two
// backends exist: the rationals, and F_p for a prime modulus p.
class FieldSpec {
public:
    static FieldSpec rationals();
    // Validates primality by deterministic trial division; throws DomainError
    // for composite, zero, one, or negative moduli.
    static FieldSpec prime_field(std::int64_t p);

    FieldKind kind() const { return kind_; }
    bool is_rational() const { return kind_ == FieldKind::rational; }
    bool is_prime() const { return kind_ == FieldKind::prime; }
    std::int64_t modulus() const;

    // p == 2 is a legal backend but several bound checks must skip it.
    bool characteristic_two() const { return kind_ == FieldKind::prime && p_ == 2; }

    bool operator==(const FieldSpec& other) const = default;
    std::string to_string() const; // "rational" or "F_p"

private:
    FieldSpec(FieldKind kind, std::int64_t p) : kind_(kind), p_(p) {}
    FieldKind kind_;
    std::int64_t p_; // 0 for the rational backend
};

bool is_prime_modulus(std::int64_t p);

// An exact field element.  Rational values are kept reduced with positive
// denominator (so equality is structural); prime-field values are canonical
// residues in [0, p).  Immutable after construction.
class Scalar {
public:
    Scalar(); // rational zero

    static Scalar rational(mpq_class value);
    static Scalar rational(long long num, long long den = 1);
    static Scalar residue(std::int64_t value, const FieldSpec& field);
    static Scalar from_integer(long long value, const FieldSpec& field);
    static Scalar zero(const FieldSpec& field);
    static Scalar one(const FieldSpec& field);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;

    Scalar operator+(const Scalar& other) const;
    Scalar operator-(const Scalar& other) const;
    Scalar operator*(const Scalar& other) const;
    Scalar operator/(const Scalar& other) const; // throws DivisionByZeroError
    Scalar operator-() const;
    bool operator==(const Scalar& other) const; // exact; mixed fields throw
    bool operator!=(const Scalar& other) const { return !(*this == other); }

    // Backend accessors; throw DomainError when asked of the wrong kind.
    const mpq_class& rational_value() const;
    std::int64_t residue_value() const;

    std::string str() const; // canonical text form, see parse_scalar

private:
    explicit Scalar(const FieldSpec& field) : field_(field) {}
    void check_same_field(const Scalar& other) const;

    FieldSpec field_;
    mpq_class rat_;          // rational backend only
    std::int64_t res_ = 0;   // prime backend only
};

// Text grammar: rational accepts "a" or "a/b" (decimal integers, b != 0);
// prime accepts a decimal integer, reduced to the canonical residue.
Scalar parse_scalar(std::string_view text, const FieldSpec& field);
std::string format_scalar(const Scalar& s);

} // namespace dotpairs

#endif
