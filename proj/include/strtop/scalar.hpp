#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace strtop {

enum class RingKind { Integer, Rational, ModP };

struct NonFieldCoefficients : std::runtime_error {
    NonFieldCoefficients() : std::runtime_error("solver requires field coefficients (rat or mod p)") {}
};

struct Ring {
    RingKind kind = RingKind::Integer;
    std::uint32_t p = 0;

    static Ring integers() { return {RingKind::Integer, 0}; }
    static Ring rationals() { return {RingKind::Rational, 0}; }
    static Ring mod(std::uint32_t p);
    // "int", "rat", "mod7", "mod 7", "Z/7"
    static Ring parse(const std::string& spec);

    bool is_field() const { return kind != RingKind::Integer; }
    std::string name() const;
    bool operator==(const Ring& o) const { return kind == o.kind && p == o.p; }
};

// Exact coefficient. Integers and rationals share a representation: a reduced
// fraction held in int64 while it fits, promoted to GMP otherwise.
// Residues mod p live in num_. A plain integer (kind Integer) mixes freely with
// the other kinds, so literals like Scalar(1) can be used anywhere.
class Scalar {
public:
    Scalar() = default;
    Scalar(long long v) : num_(v) {}
    Scalar(const Ring& r, long long v);
    static Scalar fraction(const Ring& r, long long n, long long d);
    static Scalar parse(const Ring& r, const std::string& s);

    RingKind kind() const { return kind_; }
    std::uint32_t modulus() const { return p_; }
    Ring ring() const { return {kind_, p_}; }

    bool is_zero() const;
    bool is_one() const;
    // integral value if it is a small integer (or residue); throws otherwise
    long long to_int() const;
    bool is_integral() const;
    std::string str() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar inverse() const;
    Scalar in(const Ring& r) const;  // reinterpret a value in another ring

private:
    RingKind kind_ = RingKind::Integer;
    std::uint32_t p_ = 0;
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;

    mpq_class as_mpq() const;
    void set_mpq(const mpq_class& q);
    void normalize_small(__int128 n, __int128 d);
    static RingKind join(const Scalar& a, const Scalar& b, std::uint32_t& p);
    void coerce(RingKind k, std::uint32_t p);
};

inline Scalar sign_of(int exponent) { return (exponent & 1) ? Scalar(-1) : Scalar(1); }
inline int parity(long long e) { return static_cast<int>(((e % 2) + 2) % 2); }
inline int sgn(long long exponent) { return (exponent & 1) ? -1 : 1; }

}  // namespace strtop
