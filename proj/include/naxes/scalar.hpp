#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

#include "naxes/errors.hpp"

namespace naxes {

// Identifies the coefficient field: the rationals, or F_p for an odd
// prime p >= 11. Characteristic 2 is rejected outright (circle equations
// divide by 2), and tiny primes leave no room for general position.
class FieldTag {
public:
    static FieldTag rationals() { return FieldTag(0); }
    static FieldTag prime(std::uint64_t p);

    bool is_rational() const { return p_ == 0; }
    std::uint64_t characteristic() const { return p_; }

    friend bool operator==(const FieldTag& a, const FieldTag& b) { return a.p_ == b.p_; }
    friend bool operator!=(const FieldTag& a, const FieldTag& b) { return a.p_ != b.p_; }

    std::string str() const;

private:
    explicit FieldTag(std::uint64_t p) : p_(p) {}
    std::uint64_t p_;
};

bool is_prime_u64(std::uint64_t n);

// Exact field element. Rationals are kept in lowest terms with positive
// denominator (mpq_class canonical form); residues live in [0, p).
class Scalar {
public:
    Scalar() : tag_(FieldTag::rationals()), v_(mpq_class(0)) {}
    explicit Scalar(const FieldTag& tag);

    static Scalar from_int(const FieldTag& tag, long value);
    static Scalar from_rational(mpq_class q);
    // Accepts "123", "-4", "3/5", "-22/7". Anything else is a ParseError.
    static Scalar from_string(const FieldTag& tag, const std::string& text);

    const FieldTag& field() const { return tag_; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar inverse() const;

    // Canonical text form: "num" or "num/den" over Q, decimal residue over F_p.
    std::string str() const;

    // Only meaningful over Q.
    const mpq_class& rational() const;
    double to_double() const;

    // Only meaningful over F_p.
    std::uint64_t residue() const;

    // Image of a rational under reduction mod p. Fails when the
    // denominator vanishes mod p.
    Scalar reduced(const FieldTag& target) const;

    std::size_t hash() const;

private:
    Scalar(FieldTag tag, mpq_class q) : tag_(tag), v_(std::move(q)) {}
    Scalar(FieldTag tag, std::uint64_t r) : tag_(tag), v_(r) {}

    FieldTag tag_;
    std::variant<mpq_class, std::uint64_t> v_;
};

void require_same_field(const FieldTag& a, const FieldTag& b);

} // namespace naxes

template <>
struct std::hash<naxes::Scalar> {
    std::size_t operator()(const naxes::Scalar& s) const { return s.hash(); }
};
