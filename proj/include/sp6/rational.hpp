// Exact scalar types: rationals and Gaussian rationals.
//
// Everything downstream of the root-system and character modules is exact;
// these types throw on overflow instead of silently wrapping.  The magnitudes
// appearing in this project are small (the largest pinned constant is
// 2^10 * 3^2 * 5^2 = 230400), so 64-bit storage with 128-bit intermediates is
// ample headroom.

#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sp6 {

namespace detail {

using i128 = __int128;

inline i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline std::int64_t narrow(i128 v) {
    if (v > static_cast<i128>(INT64_MAX) || v < static_cast<i128>(INT64_MIN))
        throw std::overflow_error("rational arithmetic overflow");
    return static_cast<std::int64_t>(v);
}

}  // namespace detail

/// Exact rational number p/q with q > 0 and gcd(p,q) = 1.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rat(std::int64_t n, std::int64_t d) { assign(n, d); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return from128(static_cast<detail::i128>(a.num_) * b.den_ +
                           static_cast<detail::i128>(b.num_) * a.den_,
                       static_cast<detail::i128>(a.den_) * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return from128(static_cast<detail::i128>(a.num_) * b.den_ -
                           static_cast<detail::i128>(b.num_) * a.den_,
                       static_cast<detail::i128>(a.den_) * b.den_);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return from128(static_cast<detail::i128>(a.num_) * b.num_,
                       static_cast<detail::i128>(a.den_) * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return from128(static_cast<detail::i128>(a.num_) * b.den_,
                       static_cast<detail::i128>(a.den_) * b.num_);
    }
    Rat operator-() const {
        Rat r;
        r.num_ = detail::narrow(-static_cast<detail::i128>(num_));
        r.den_ = den_;
        return r;
    }
    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const Rat& a, const Rat& b) {
        return static_cast<detail::i128>(a.num_) * b.den_ <
               static_cast<detail::i128>(b.num_) * a.den_;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    /// Reduced decimal-free rendering: "7", "-3/4".
    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

    /// Parses "p", "-p", or "p/q" (whitespace-free).
    static Rat parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rat(std::stoll(s));
            return Rat(std::stoll(s.substr(0, slash)),
                       std::stoll(s.substr(slash + 1)));
        } catch (const std::logic_error&) {
            throw std::invalid_argument("cannot parse rational: '" + s + "'");
        }
    }

private:
    static Rat from128(detail::i128 n, detail::i128 d) {
        Rat r;
        r.assign128(n, d);
        return r;
    }
    void assign(std::int64_t n, std::int64_t d) {
        assign128(static_cast<detail::i128>(n), static_cast<detail::i128>(d));
    }
    void assign128(detail::i128 n, detail::i128 d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        detail::i128 g = detail::gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        num_ = detail::narrow(n);
        den_ = detail::narrow(d);
    }

    std::int64_t num_;
    std::int64_t den_;
};

/// Element of Q(i): re + i*im with exact rational parts.
struct GaussRat {
    Rat re;
    Rat im;

    GaussRat() = default;
    GaussRat(Rat r) : re(r) {}  // NOLINT: implicit by design
    GaussRat(std::int64_t r) : re(r) {}  // NOLINT: implicit by design
    GaussRat(Rat r, Rat i) : re(r), im(i) {}

    static GaussRat i() { return {Rat(0), Rat(1)}; }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_rational() const { return im.is_zero(); }
    GaussRat conj() const { return {re, -im}; }

    friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
        return {a.re - b.re, a.im - b.im};
    }
    GaussRat operator-() const { return {-re, -im}; }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
        Rat n = b.re * b.re + b.im * b.im;
        if (n.is_zero()) throw std::domain_error("Gaussian-rational division by zero");
        GaussRat p = a * b.conj();
        return {p.re / n, p.im / n};
    }
    GaussRat& operator+=(const GaussRat& o) { return *this = *this + o; }
    GaussRat& operator-=(const GaussRat& o) { return *this = *this - o; }
    GaussRat& operator*=(const GaussRat& o) { return *this = *this * o; }
    GaussRat& operator/=(const GaussRat& o) { return *this = *this / o; }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re == b.re && a.im == b.im;
    }

    /// "3", "-i", "1/2+3i", "2-i/3" style rendering for diagnostics.
    std::string str() const {
        if (im.is_zero()) return re.str();
        std::string s;
        if (!re.is_zero()) s = re.str();
        if (im == Rat(1))
            s += s.empty() ? "i" : "+i";
        else if (im == Rat(-1))
            s += "-i";
        else {
            if (!s.empty() && !(im < Rat(0))) s += "+";
            s += im.str() + "i";
        }
        return s;
    }
};

}  // namespace sp6
