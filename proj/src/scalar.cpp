#include "strtop/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>

namespace strtop {

namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::int64_t mod_reduce(__int128 v, std::uint32_t p) {
    __int128 r = v % p;
    if (r < 0) r += p;
    return static_cast<std::int64_t>(r);
}

std::int64_t mod_pow(std::int64_t b, std::uint64_t e, std::uint32_t p) {
    __int128 r = 1, x = b % p;
    while (e) {
        if (e & 1) r = (r * x) % p;
        x = (x * x) % p;
        e >>= 1;
    }
    return static_cast<std::int64_t>(r);
}

constexpr __int128 kMax = std::numeric_limits<std::int64_t>::max();
constexpr __int128 kMin = -kMax;

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

Ring Ring::mod(std::uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
    return {RingKind::ModP, p};
}

Ring Ring::parse(const std::string& spec) {
    std::string s;
    for (char c : spec)
        if (!std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::tolower(c));
    if (s == "int" || s == "z" || s == "integer") return integers();
    if (s == "rat" || s == "q" || s == "rational") return rationals();
    std::string digits;
    if (s.rfind("mod", 0) == 0) digits = s.substr(3);
    else if (s.rfind("z/", 0) == 0) digits = s.substr(2);
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), ::isdigit))
        return mod(static_cast<std::uint32_t>(std::stoul(digits)));
    throw std::invalid_argument("unknown coefficient spec '" + spec + "'");
}

std::string Ring::name() const {
    switch (kind) {
        case RingKind::Integer: return "int";
        case RingKind::Rational: return "rat";
        case RingKind::ModP: return "mod" + std::to_string(p);
    }
    return "?";
}

Scalar::Scalar(const Ring& r, long long v) : kind_(r.kind), p_(r.p), num_(v) {
    if (kind_ == RingKind::ModP) num_ = mod_reduce(v, p_);
}

Scalar Scalar::fraction(const Ring& r, long long n, long long d) {
    if (d == 0) throw std::domain_error("zero denominator");
    Scalar a(r, n);
    return a / Scalar(r, d);
}

Scalar Scalar::parse(const Ring& r, const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad coefficient '" + s + "'");
    q.canonicalize();
    Scalar out;
    out.kind_ = r.kind;
    out.p_ = r.p;
    if (r.kind == RingKind::ModP) {
        mpz_class n = q.get_num() % r.p, d = q.get_den() % r.p;
        if (d == 0) throw std::domain_error("denominator divisible by p");
        out.num_ = mod_reduce(static_cast<__int128>(n.get_si()), r.p);
        out.num_ = static_cast<std::int64_t>(static_cast<__int128>(out.num_) * mod_pow(d.get_si(), r.p - 2, r.p) % r.p);
        return out;
    }
    if (r.kind == RingKind::Integer && q.get_den() != 1) throw std::invalid_argument("non-integral coefficient over int");
    out.set_mpq(q);
    return out;
}

mpq_class Scalar::as_mpq() const {
    if (big_) return *big_;
    mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
    return q;
}

void Scalar::set_mpq(const mpq_class& q) {
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (n.fits_slong_p() && d.fits_slong_p()) {
        num_ = n.get_si();
        den_ = d.get_si();
        big_.reset();
    } else {
        big_ = std::make_shared<const mpq_class>(q);
        num_ = 0;
        den_ = 1;
    }
}

void Scalar::normalize_small(__int128 n, __int128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    if (n == 0) d = 1;
    if (n <= kMax && n >= kMin && d <= kMax) {
        num_ = static_cast<std::int64_t>(n);
        den_ = static_cast<std::int64_t>(d);
        big_.reset();
        return;
    }
    // rare path: rebuild through GMP from the 128-bit parts
    auto to_mpz = [](__int128 v) {
        bool neg = v < 0;
        unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
        mpz_class hi(static_cast<unsigned long>(u >> 64)), lo(static_cast<unsigned long>(u & ~0ULL));
        mpz_class r = (hi << 64) + lo;
        return neg ? mpz_class(-r) : r;
    };
    mpq_class q(to_mpz(n), to_mpz(d));
    q.canonicalize();
    set_mpq(q);
}

RingKind Scalar::join(const Scalar& a, const Scalar& b, std::uint32_t& p) {
    if (a.kind_ == RingKind::Integer) {
        p = b.p_;
        return b.kind_;
    }
    if (b.kind_ == RingKind::Integer) {
        p = a.p_;
        return a.kind_;
    }
    if (a.kind_ != b.kind_ || a.p_ != b.p_) throw std::logic_error("mixing coefficients from different rings");
    p = a.p_;
    return a.kind_;
}

void Scalar::coerce(RingKind k, std::uint32_t p) {
    if (kind_ == k && p_ == p) return;
    if (k == RingKind::ModP) {
        if (big_) {
            mpz_class n = big_->get_num() % p;
            mpz_class d = big_->get_den() % p;
            num_ = mod_reduce(n.get_si(), p);
            std::int64_t dd = mod_reduce(d.get_si(), p);
            num_ = static_cast<std::int64_t>(static_cast<__int128>(num_) * mod_pow(dd, p - 2, p) % p);
            big_.reset();
        } else {
            std::int64_t n = mod_reduce(num_, p);
            std::int64_t d = mod_reduce(den_, p);
            num_ = static_cast<std::int64_t>(static_cast<__int128>(n) * mod_pow(d, p - 2, p) % p);
        }
        den_ = 1;
    }
    kind_ = k;
    p_ = p;
}

Scalar Scalar::in(const Ring& r) const {
    Scalar s = *this;
    if (s.kind_ == RingKind::ModP && r.kind != RingKind::ModP) {
        s.kind_ = r.kind;
        s.p_ = 0;
        return s;
    }
    s.coerce(r.kind, r.p);
    return s;
}

bool Scalar::is_zero() const { return !big_ && num_ == 0; }
bool Scalar::is_one() const { return !big_ && num_ == 1 && den_ == 1; }

bool Scalar::is_integral() const { return kind_ == RingKind::ModP || (!big_ && den_ == 1) || (big_ && big_->get_den() == 1); }

long long Scalar::to_int() const {
    if (big_ || den_ != 1) throw std::range_error("coefficient is not a small integer");
    return num_;
}

std::string Scalar::str() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    if (big_) {
        r.set_mpq(-as_mpq());
    } else if (kind_ == RingKind::ModP) {
        r.num_ = num_ == 0 ? 0 : p_ - num_;
    } else {
        r.normalize_small(-static_cast<__int128>(num_), den_);
    }
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    std::uint32_t p;
    RingKind k = join(*this, o, p);
    Scalar b = o;
    coerce(k, p);
    b.coerce(k, p);
    if (k == RingKind::ModP) {
        num_ = mod_reduce(static_cast<__int128>(num_) + b.num_, p);
        return *this;
    }
    if (big_ || b.big_) {
        set_mpq(as_mpq() + b.as_mpq());
        return *this;
    }
    if (den_ == 1 && b.den_ == 1) {
        normalize_small(static_cast<__int128>(num_) + b.num_, 1);
        return *this;
    }
    normalize_small(static_cast<__int128>(num_) * b.den_ + static_cast<__int128>(b.num_) * den_,
                    static_cast<__int128>(den_) * b.den_);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    std::uint32_t p;
    RingKind k = join(*this, o, p);
    Scalar b = o;
    coerce(k, p);
    b.coerce(k, p);
    if (k == RingKind::ModP) {
        num_ = mod_reduce(static_cast<__int128>(num_) * b.num_, p);
        return *this;
    }
    if (big_ || b.big_) {
        set_mpq(as_mpq() * b.as_mpq());
        return *this;
    }
    normalize_small(static_cast<__int128>(num_) * b.num_, static_cast<__int128>(den_) * b.den_);
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    Scalar r = *this;
    if (kind_ == RingKind::ModP) {
        r.num_ = mod_pow(num_, p_ - 2, p_);
        return r;
    }
    if (big_) {
        r.set_mpq(1 / as_mpq());
    } else {
        r.normalize_small(den_, num_);
    }
    if (kind_ == RingKind::Integer && !r.is_integral()) throw NonFieldCoefficients();
    return r;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    std::uint32_t p;
    RingKind k = join(*this, o, p);
    Scalar b = o;
    b.coerce(k, p);
    Scalar inv = b;
    if (k == RingKind::Integer) {
        // exact division of integers only
        inv.kind_ = RingKind::Rational;
        Scalar a = *this;
        a.kind_ = RingKind::Rational;
        a *= inv.inverse();
        if (!a.is_integral()) throw NonFieldCoefficients();
        a.kind_ = RingKind::Integer;
        *this = a;
        return *this;
    }
    return *this *= inv.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
    if (big_ || o.big_) return as_mpq() == o.as_mpq();
    if (kind_ == RingKind::ModP || o.kind_ == RingKind::ModP) {
        Scalar a = *this, b = o;
        std::uint32_t p;
        RingKind k = join(a, b, p);
        a.coerce(k, p);
        b.coerce(k, p);
        return a.num_ == b.num_;
    }
    return num_ == o.num_ && den_ == o.den_;
}

}  // namespace strtop
