#include "wha/exactlin/rat.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace wha {
namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

u128 uabs(i128 v) { return v < 0 ? u128(0) - u128(v) : u128(v); }

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits(i128 v) { return v >= kMin && v <= kMax; }

mpz_class to_mpz(i128 v) {
    bool neg = v < 0;
    u128 u = uabs(v);
    mpz_class hi = static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64));
    mpz_class lo = static_cast<unsigned long>(static_cast<std::uint64_t>(u));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

mpz_class mpz_from_i64(std::int64_t v) { return to_mpz(static_cast<i128>(v)); }

bool mpz_to_i64(const mpz_class& z, std::int64_t& out) {
    if (z < mpz_from_i64(kMin) || z > mpz_from_i64(kMax)) return false;
    // mpz_get_si is exact for values in long range; long is 64-bit on our targets.
    out = static_cast<std::int64_t>(mpz_get_si(z.get_mpz_t()));
    return true;
}

}  // namespace

Rat::Rat(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::invalid_argument("Rat: zero denominator");
    *this = from_i128(n, d);
}

Rat::Rat(const mpq_class& q) { *this = from_mpq(q); }

Rat Rat::from_i128(i128 n, i128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (n == 0) return Rat();
    u128 g = gcd128(uabs(n), u128(d));
    if (g > 1) {
        n /= static_cast<i128>(g);
        d /= static_cast<i128>(g);
    }
    if (fits(n) && fits(d)) {
        Rat r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }
    mpq_class q(to_mpz(n), to_mpz(d));
    Rat r;
    r.big_ = std::make_shared<const mpq_class>(std::move(q));
    return r;
}

Rat Rat::from_mpq(mpq_class q) {
    q.canonicalize();
    std::int64_t n = 0;
    std::int64_t d = 0;
    if (mpz_to_i64(q.get_num(), n) && mpz_to_i64(q.get_den(), d)) {
        Rat r;
        r.num_ = n;
        r.den_ = d;
        return r;
    }
    Rat r;
    r.big_ = std::make_shared<const mpq_class>(std::move(q));
    return r;
}

Rat Rat::parse(std::string_view text) {
    std::string s(text);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
    if (s.empty()) throw std::invalid_argument("Rat: empty string");
    auto check_int = [](const std::string& part) {
        std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
        if (i >= part.size()) return false;
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    std::string np = s.substr(0, slash);
    std::string dp = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!check_int(np) || !check_int(dp) || (slash != std::string::npos && (dp[0] == '-' || dp[0] == '+')))
        throw std::invalid_argument("Rat: malformed rational '" + s + "'");
    if (np[0] == '+') np.erase(np.begin());
    mpz_class n(np, 10);
    mpz_class d(dp, 10);
    if (d == 0) throw std::invalid_argument("Rat: zero denominator in '" + s + "'");
    return from_mpq(mpq_class(n, d));
}

bool Rat::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rat::sign() const {
    if (big_) return sgn(*big_);
    return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

mpq_class Rat::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_from_i64(num_), mpz_from_i64(den_));
}

mpz_class Rat::numerator() const { return big_ ? mpz_class(big_->get_num()) : mpz_from_i64(num_); }
mpz_class Rat::denominator() const { return big_ ? mpz_class(big_->get_den()) : mpz_from_i64(den_); }

double Rat::to_double() const {
    if (big_) return big_->get_d();
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rat::str() const {
    if (big_) {
        if (big_->get_den() == 1) return big_->get_num().get_str();
        return big_->get_num().get_str() + "/" + big_->get_den().get_str();
    }
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rat Rat::operator-() const {
    if (big_ || num_ == kMin) return from_mpq(-to_mpq());
    Rat r = *this;
    r.num_ = -num_;
    return r;
}

Rat Rat::inverse() const {
    if (is_zero()) throw std::domain_error("Rat: inverse of zero");
    if (big_) return from_mpq(1 / *big_);
    return from_i128(den_, num_);
}

Rat operator+(const Rat& a, const Rat& b) {
    if (a.big_ || b.big_) return Rat::from_mpq(a.to_mpq() + b.to_mpq());
    if (b.num_ == 0) return a;
    if (a.num_ == 0) return b;
    if (a.den_ == 1 && b.den_ == 1) {
        std::int64_t s = 0;
        if (!__builtin_add_overflow(a.num_, b.num_, &s)) return Rat(s);
        return Rat::from_i128(i128(a.num_) + b.num_, 1);
    }
    if (a.den_ == b.den_) return Rat::from_i128(i128(a.num_) + b.num_, a.den_);
    return Rat::from_i128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
}

Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }

Rat operator*(const Rat& a, const Rat& b) {
    if (a.is_zero() || b.is_zero()) return Rat();
    if (a.big_ || b.big_) return Rat::from_mpq(a.to_mpq() * b.to_mpq());
    if (a.den_ == 1 && b.den_ == 1) {
        std::int64_t p = 0;
        if (!__builtin_mul_overflow(a.num_, b.num_, &p)) return Rat(p);
    }
    return Rat::from_i128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
}

Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw std::domain_error("Rat: division by zero");
    if (a.is_zero()) return Rat();
    if (a.big_ || b.big_) return Rat::from_mpq(a.to_mpq() / b.to_mpq());
    return Rat::from_i128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
}

bool operator==(const Rat& a, const Rat& b) {
    // Canonical form makes representation equality exact; a promoted value never
    // fits in int64 so small and big values never compare equal.
    if (a.big_ || b.big_) {
        if (a.big_ && b.big_) return *a.big_ == *b.big_;
        return false;
    }
    return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    if (a.big_ || b.big_) {
        int c = cmp(a.to_mpq(), b.to_mpq());
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    return i128(a.num_) * b.den_ <=> i128(b.num_) * a.den_;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace wha
