#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace twrep {

// Ground field: either the rationals or a prime field F_p with p < 2^31.
class Field {
public:
    enum class Kind { Rationals, Prime };

    static Field rationals() { return Field(Kind::Rationals, 0); }
    static Field prime(std::uint32_t p);

    Kind kind() const noexcept { return kind_; }
    bool is_prime() const noexcept { return kind_ == Kind::Prime; }
    std::uint32_t characteristic() const noexcept { return p_; }

    std::string name() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    Field(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

    Kind kind_;
    std::uint32_t p_;
};

// Parses "Q" or "Fp:<p>" / "F<p>".
Field parse_field(const std::string& text);

bool is_prime_number(std::uint64_t n);

namespace modp {

inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
}
inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return a >= b ? a - b : a + (p - b);
}
inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}
inline std::uint32_t neg(std::uint32_t a, std::uint32_t p) { return a == 0 ? 0 : p - a; }
std::uint32_t inv(std::uint32_t a, std::uint32_t p);
std::uint32_t reduce(long long v, std::uint32_t p);

}  // namespace modp

// An exact element of a Field. Rationals are kept canonical by GMP
// (lowest terms, positive denominator); residues live in [0, p).
class Scalar {
public:
    explicit Scalar(Field field);
    Scalar(Field field, long long value);
    Scalar(Field field, const mpq_class& value);

    static Scalar zero(Field f) { return Scalar(f); }
    static Scalar one(Field f) { return Scalar(f, 1); }
    // Accepts "n", "n/d" (rationals) or a decimal integer (prime fields).
    static Scalar parse(Field f, const std::string& text);

    const Field& field() const noexcept { return field_; }
    std::uint32_t residue() const noexcept { return residue_; }
    const mpq_class& rational() const noexcept { return rational_; }

    bool is_zero() const;
    Scalar inverse() const;
    std::string to_string() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);

private:
    void require_same(const Scalar& o) const;

    Field field_;
    std::uint32_t residue_ = 0;
    mpq_class rational_;
};

}  // namespace twrep
