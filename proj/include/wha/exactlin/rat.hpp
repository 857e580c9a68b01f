#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace wha {

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in int64 are stored inline and
/// combined with 128-bit intermediates; anything larger is promoted to a
/// shared, immutable GMP rational and demoted again whenever a result fits.
/// Structure constants in this library are overwhelmingly small integers, so
/// the inline path carries almost all of the work.
class Rat {
public:
    Rat() = default;
    Rat(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
    Rat(int n) : num_(n) {}           // NOLINT(google-explicit-constructor)
    Rat(std::int64_t n, std::int64_t d);
    explicit Rat(const mpq_class& q);

    /// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed text
    /// or a zero denominator.
    static Rat parse(std::string_view text);

    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const;
    int sign() const;

    mpq_class to_mpq() const;
    mpz_class numerator() const;
    mpz_class denominator() const;
    double to_double() const;
    std::string str() const;

    /// True when the value is held inline; exposed for tests of the promotion path.
    bool is_small() const { return !big_; }

    Rat operator-() const;
    Rat inverse() const;

    friend Rat operator+(const Rat& a, const Rat& b);
    friend Rat operator-(const Rat& a, const Rat& b);
    friend Rat operator*(const Rat& a, const Rat& b);
    friend Rat operator/(const Rat& a, const Rat& b);

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat& a, const Rat& b);
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

private:
    static Rat from_i128(__int128 n, __int128 d);
    static Rat from_mpq(mpq_class q);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace wha
