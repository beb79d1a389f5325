#pragma once

#include <gmp.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace chordal {

/// Exact rational number with arbitrary-precision numerator and denominator,
/// kept in canonical reduced form (denominator positive).
class rational {
public:
    rational() { mpq_init(q_); }

    rational(long num) { // NOLINT(google-explicit-constructor): numeric literal convenience
        mpq_init(q_);
        mpq_set_si(q_, num, 1);
    }

    rational(long num, long den) {
        if (den == 0) throw std::invalid_argument("rational: zero denominator");
        mpq_init(q_);
        mpq_set_si(q_, num, 1);
        mpq_t d;
        mpq_init(d);
        mpq_set_si(d, den, 1);
        mpq_div(q_, q_, d);
        mpq_clear(d);
    }

    rational(const rational& other) {
        mpq_init(q_);
        mpq_set(q_, other.q_);
    }

    rational(rational&& other) noexcept {
        mpq_init(q_);
        mpq_swap(q_, other.q_);
    }

    rational& operator=(const rational& other) {
        if (this != &other) mpq_set(q_, other.q_);
        return *this;
    }

    rational& operator=(rational&& other) noexcept {
        mpq_swap(q_, other.q_);
        return *this;
    }

    ~rational() { mpq_clear(q_); }

    /// Accepts "p", "p/q", and decimal strings like "-1.25".
    static std::optional<rational> parse(const std::string& text) {
        if (text.empty()) return std::nullopt;
        auto slash = text.find('/');
        auto dot = text.find('.');
        if (slash != std::string::npos) {
            if (dot != std::string::npos) return std::nullopt;
            std::string num = text.substr(0, slash);
            std::string den = text.substr(slash + 1);
            if (!is_integer(num) || !is_integer(den)) return std::nullopt;
            rational r;
            if (mpq_set_str(r.q_, text.c_str(), 10) != 0) return std::nullopt;
            if (mpz_sgn(mpq_denref(r.q_)) == 0) return std::nullopt;
            mpq_canonicalize(r.q_);
            return r;
        }
        if (dot != std::string::npos) {
            std::string whole = text.substr(0, dot);
            std::string frac = text.substr(dot + 1);
            if (frac.empty() || !is_digits(frac)) return std::nullopt;
            if (!whole.empty() && whole != "-" && whole != "+" && !is_integer(whole)) return std::nullopt;
            bool negative = !whole.empty() && whole[0] == '-';
            std::string digits = whole;
            if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) digits.erase(0, 1);
            digits += frac;
            if (digits.empty()) return std::nullopt;
            std::string scaled = (negative ? "-" : "") + digits + "/1" + std::string(frac.size(), '0');
            rational r;
            if (mpq_set_str(r.q_, scaled.c_str(), 10) != 0) return std::nullopt;
            mpq_canonicalize(r.q_);
            return r;
        }
        if (!is_integer(text)) return std::nullopt;
        rational r;
        if (mpq_set_str(r.q_, text.c_str(), 10) != 0) return std::nullopt;
        return r;
    }

    /// "p" when the denominator is 1, "p/q" otherwise.
    std::string str() const {
        char* raw = mpq_get_str(nullptr, 10, q_);
        std::string out(raw);
        void (*freefunc)(void*, std::size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefunc);
        freefunc(raw, out.size() + 1);
        return out;
    }

    std::string numerator_str() const {
        rational n;
        mpq_set_z(n.q_, mpq_numref(q_));
        return n.str();
    }

    std::string denominator_str() const {
        rational d;
        mpq_set_z(d.q_, mpq_denref(q_));
        return d.str();
    }

    double to_double() const { return mpq_get_d(q_); }

    int sign() const { return mpq_sgn(q_); }

    /// True when the value fits an int64 numerator over an int64 denominator.
    bool fits_long() const {
        return mpz_fits_slong_p(mpq_numref(q_)) && mpz_fits_slong_p(mpq_denref(q_));
    }

    long numerator_long() const { return mpz_get_si(mpq_numref(q_)); }
    long denominator_long() const { return mpz_get_si(mpq_denref(q_)); }

    rational& operator+=(const rational& r) { mpq_add(q_, q_, r.q_); return *this; }
    rational& operator-=(const rational& r) { mpq_sub(q_, q_, r.q_); return *this; }
    rational& operator*=(const rational& r) { mpq_mul(q_, q_, r.q_); return *this; }
    rational& operator/=(const rational& r) {
        if (r.sign() == 0) throw std::invalid_argument("rational: division by zero");
        mpq_div(q_, q_, r.q_);
        return *this;
    }

    friend rational operator+(rational a, const rational& b) { return a += b; }
    friend rational operator-(rational a, const rational& b) { return a -= b; }
    friend rational operator*(rational a, const rational& b) { return a *= b; }
    friend rational operator/(rational a, const rational& b) { return a /= b; }

    friend rational operator-(const rational& a) {
        rational r;
        mpq_neg(r.q_, a.q_);
        return r;
    }

    friend bool operator==(const rational& a, const rational& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend bool operator!=(const rational& a, const rational& b) { return !(a == b); }
    friend bool operator<(const rational& a, const rational& b) { return mpq_cmp(a.q_, b.q_) < 0; }
    friend bool operator>(const rational& a, const rational& b) { return mpq_cmp(a.q_, b.q_) > 0; }
    friend bool operator<=(const rational& a, const rational& b) { return mpq_cmp(a.q_, b.q_) <= 0; }
    friend bool operator>=(const rational& a, const rational& b) { return mpq_cmp(a.q_, b.q_) >= 0; }

private:
    mpq_t q_;

    static bool is_digits(const std::string& s) {
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    }

    static bool is_integer(const std::string& s) {
        if (s.empty()) return false;
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        return is_digits(s.substr(start));
    }
};

} // namespace chordal
