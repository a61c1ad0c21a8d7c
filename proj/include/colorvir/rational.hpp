// Exact scalar arithmetic: 64-bit checked rationals and Gaussian rationals.
//
// Structure constants of the algebras handled here are tiny (linear or cubic
// in mode indices, denominators dividing 12), so a fixed-width rational with
// overflow *detection* is both safe and fast for bracket/Jacobi work.  The
// extension classifier, whose elimination can grow coefficients, uses GMP
// instead (see classifier.cpp) — this type throws rather than wrapping, so a
// silent wrong answer is impossible.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace colorvir {

// Raised when a scalar operation would leave the exactly representable range.
struct OverflowError : std::overflow_error {
    using std::overflow_error::overflow_error;
};

namespace detail {

using int128 = __int128;

inline std::int64_t narrow128(int128 v) {
    if (v > int128(INT64_MAX) || v < int128(INT64_MIN))
        throw OverflowError("rational arithmetic overflow");
    return static_cast<std::int64_t>(v);
}

inline unsigned __int128 abs128(int128 v) {
    return v < 0 ? -static_cast<unsigned __int128>(v)
                 : static_cast<unsigned __int128>(v);
}

inline unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
    while (b != 0) {
        unsigned __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace detail

class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t n) : num_(n) {}  // NOLINT: implicit by design
    Rational(std::int64_t n, std::int64_t d) { *this = make(n, d); }

    // Builds a normalized rational from 128-bit intermediates, narrowing
    // (checked) only after cancellation.
    static Rational make(detail::int128 n, detail::int128 d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (n == 0) return Rational();
        if (d < 0) {
            n = -n;
            d = -d;
        }
        const auto g = detail::gcd128(detail::abs128(n), detail::abs128(d));
        n /= static_cast<detail::int128>(g);
        d /= static_cast<detail::int128>(g);
        Rational r;
        r.num_ = detail::narrow128(n);
        r.den_ = detail::narrow128(d);
        return r;
    }

    [[nodiscard]] std::int64_t num() const { return num_; }
    [[nodiscard]] std::int64_t den() const { return den_; }
    [[nodiscard]] bool is_zero() const { return num_ == 0; }
    [[nodiscard]] bool is_integer() const { return den_ == 1; }
    [[nodiscard]] int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        if (a.den_ == 1 && b.den_ == 1)
            return Rational(detail::narrow128(detail::int128(a.num_) + b.num_));
        return make(detail::int128(a.num_) * b.den_ + detail::int128(b.num_) * a.den_,
                    detail::int128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        if (a.den_ == 1 && b.den_ == 1)
            return Rational(detail::narrow128(detail::int128(a.num_) - b.num_));
        return make(detail::int128(a.num_) * b.den_ - detail::int128(b.num_) * a.den_,
                    detail::int128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        if (a.den_ == 1 && b.den_ == 1)
            return Rational(detail::narrow128(detail::int128(a.num_) * b.num_));
        return make(detail::int128(a.num_) * b.num_, detail::int128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("rational division by zero");
        return make(detail::int128(a.num_) * b.den_, detail::int128(a.den_) * b.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = detail::narrow128(-detail::int128(num_));
        r.den_ = den_;
        return r;
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return detail::int128(a.num_) * b.den_ < detail::int128(b.num_) * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    [[nodiscard]] std::string to_string() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Parses "p", "p/q" (q > 0). Returns nullopt on malformed input.
    static std::optional<Rational> parse(std::string_view text);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline std::optional<Rational> Rational::parse(std::string_view text) {
    auto parse_int = [](std::string_view s, std::int64_t& out) -> bool {
        if (s.empty()) return false;
        std::size_t i = 0;
        bool neg = false;
        if (s[0] == '-' || s[0] == '+') {
            neg = s[0] == '-';
            i = 1;
            if (s.size() == 1) return false;
        }
        std::int64_t v = 0;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') return false;
            if (v > (INT64_MAX - (s[i] - '0')) / 10) return false;
            v = v * 10 + (s[i] - '0');
        }
        out = neg ? -v : v;
        return true;
    };
    const auto slash = text.find('/');
    std::int64_t n = 0, d = 1;
    if (slash == std::string_view::npos) {
        if (!parse_int(text, n)) return std::nullopt;
    } else {
        if (!parse_int(text.substr(0, slash), n)) return std::nullopt;
        if (!parse_int(text.substr(slash + 1), d)) return std::nullopt;
        if (d <= 0) return std::nullopt;
    }
    return Rational(n, d);
}

// Complex scalar a + b·i with exact rational parts.  Needed so that the
// antilinearity of the adjoint/superadjoint operations is testable with
// zero-tolerance equality.
class GaussianRational {
public:
    constexpr GaussianRational() = default;
    GaussianRational(Rational re) : re_(re) {}  // NOLINT: implicit by design
    GaussianRational(std::int64_t re) : re_(re) {}
    GaussianRational(Rational re, Rational im) : re_(re), im_(im) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    [[nodiscard]] const Rational& re() const { return re_; }
    [[nodiscard]] const Rational& im() const { return im_; }
    [[nodiscard]] bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    [[nodiscard]] bool is_real() const { return im_.is_zero(); }
    [[nodiscard]] GaussianRational conj() const { return {re_, -im_}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        if (a.im_.is_zero() && b.im_.is_zero()) return {a.re_ * b.re_};
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        if (b.is_zero()) throw std::domain_error("gaussian division by zero");
        const Rational n = b.re_ * b.re_ + b.im_ * b.im_;
        return {(a.re_ * b.re_ + a.im_ * b.im_) / n, (a.im_ * b.re_ - a.re_ * b.im_) / n};
    }
    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
        return !(a == b);
    }

    // "0", "-3/2", "i", "-i", "2i", "1+i", "1/2-2/3i"
    [[nodiscard]] std::string to_string() const {
        if (im_.is_zero()) return re_.to_string();
        std::string im_part;
        if (im_ == Rational(1))
            im_part = "i";
        else if (im_ == Rational(-1))
            im_part = "-i";
        else
            im_part = im_.to_string() + "i";
        if (re_.is_zero()) return im_part;
        if (im_.sign() > 0) return re_.to_string() + "+" + im_part;
        return re_.to_string() + im_part;
    }

private:
    Rational re_;
    Rational im_;
};

}  // namespace colorvir
