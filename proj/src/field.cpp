#include "twrep/field.hpp"

#include <cctype>

#include "twrep/error.hpp"

namespace twrep {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
        case ErrorKind::DiagramMismatch: return "DiagramMismatch";
        case ErrorKind::CyclicQuiver: return "CyclicQuiver";
        case ErrorKind::HypothesisViolated: return "HypothesisViolated";
        case ErrorKind::FunctorNotExact: return "FunctorNotExact";
        case ErrorKind::LiftFailure: return "LiftFailure";
        case ErrorKind::UniquenessFailure: return "UniquenessFailure";
        case ErrorKind::InvalidData: return "InvalidData";
        case ErrorKind::NotVectDiagram: return "NotVectDiagram";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

bool is_prime_number(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(std::uint32_t p) {
    if (!is_prime_number(p) || p >= (1u << 31))
        throw Error(ErrorKind::InvalidData, "characteristic " + std::to_string(p) +
                                                " is not a prime below 2^31");
    return Field(Kind::Prime, p);
}

std::string Field::name() const {
    return is_prime() ? "Fp:" + std::to_string(p_) : "Q";
}

Field parse_field(const std::string& text) {
    if (text == "Q" || text == "QQ") return Field::rationals();
    std::string digits;
    if (text.rfind("Fp:", 0) == 0)
        digits = text.substr(3);
    else if (text.rfind("F", 0) == 0)
        digits = text.substr(1);
    if (digits.empty() || digits.size() > 10)
        throw Error(ErrorKind::InvalidData, "unrecognized field '" + text + "'");
    for (char c : digits)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw Error(ErrorKind::InvalidData, "unrecognized field '" + text + "'");
    return Field::prime(static_cast<std::uint32_t>(std::stoull(digits)));
}

namespace modp {

std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
    if (a == 0) throw Error(ErrorKind::Internal, "inverse of zero");
    // Extended Euclid on signed 64-bit values.
    long long t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        long long q = r / new_r;
        long long tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

std::uint32_t reduce(long long v, std::uint32_t p) {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

}  // namespace modp

Scalar::Scalar(Field field) : field_(field) {}

Scalar::Scalar(Field field, long long value) : field_(field) {
    if (field_.is_prime())
        residue_ = modp::reduce(value, field_.characteristic());
    else
        rational_ = mpq_class(mpz_class(std::to_string(value)));
}

Scalar::Scalar(Field field, const mpq_class& value) : field_(field) {
    if (field_.is_prime()) {
        mpz_class p(field_.characteristic());
        mpz_class num = value.get_num() % p;
        mpz_class den = value.get_den() % p;
        if (den == 0) throw Error(ErrorKind::InvalidData, "denominator divisible by p");
        if (num < 0) num += p;
        residue_ = modp::mul(static_cast<std::uint32_t>(num.get_ui()),
                             modp::inv(static_cast<std::uint32_t>(den.get_ui()),
                                       field_.characteristic()),
                             field_.characteristic());
    } else {
        rational_ = value;
        rational_.canonicalize();
    }
}

Scalar Scalar::parse(Field f, const std::string& text) {
    if (text.empty()) throw Error(ErrorKind::InvalidData, "empty scalar");
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw Error(ErrorKind::InvalidData, "malformed scalar '" + text + "'");
    if (q.get_den() == 0) throw Error(ErrorKind::InvalidData, "zero denominator in '" + text + "'");
    q.canonicalize();
    return Scalar(f, q);
}

bool Scalar::is_zero() const {
    return field_.is_prime() ? residue_ == 0 : sgn(rational_) == 0;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error(ErrorKind::Internal, "inverse of zero");
    Scalar r(field_);
    if (field_.is_prime())
        r.residue_ = modp::inv(residue_, field_.characteristic());
    else
        r.rational_ = 1 / rational_;
    return r;
}

std::string Scalar::to_string() const {
    if (field_.is_prime()) return std::to_string(residue_);
    return rational_.get_num().get_str() + "/" + rational_.get_den().get_str();
}

void Scalar::require_same(const Scalar& o) const {
    if (!(field_ == o.field_))
        throw Error(ErrorKind::FieldMismatch, field_.name() + " vs " + o.field_.name());
}

Scalar Scalar::operator-() const {
    Scalar r(field_);
    if (field_.is_prime())
        r.residue_ = modp::neg(residue_, field_.characteristic());
    else
        r.rational_ = -rational_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    require_same(o);
    if (field_.is_prime())
        residue_ = modp::add(residue_, o.residue_, field_.characteristic());
    else
        rational_ += o.rational_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    require_same(o);
    if (field_.is_prime())
        residue_ = modp::sub(residue_, o.residue_, field_.characteristic());
    else
        rational_ -= o.rational_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    require_same(o);
    if (field_.is_prime())
        residue_ = modp::mul(residue_, o.residue_, field_.characteristic());
    else
        rational_ *= o.rational_;
    return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (!(a.field_ == b.field_)) return false;
    return a.field_.is_prime() ? a.residue_ == b.residue_ : a.rational_ == b.rational_;
}

}  // namespace twrep
