#pragma once

// CoeffElem: elements of the coefficient field Q(i)(r) with r^2 = q.
//
// Every non-archimedean quantity in the library (Satake values, torus
// character values, Hecke eigenvalues, local zeta coefficients) lives in
// this field. An element is (a + b i) + (c + d i) r with a,b,c,d rational.
//
// When q itself is a perfect square, r is a rational number and the
// extension collapses; we canonicalize by folding the r-part into the
// Q(i)-part at construction time, so elements always form a field and
// equality stays component-wise.

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "waldzeta/rational.hpp"

namespace waldzeta {

// Gaussian rational x = re + im*i.
struct GaussRat {
    Rational re{0};
    Rational im{0};

    bool is_zero() const { return re == 0 && im == 0; }

    friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re == b.re && a.im == b.im;
    }

    GaussRat inv() const {
        Rational n = re * re + im * im;
        if (n == 0) throw std::domain_error("division by zero in Q(i)");
        return {re / n, -im / n};
    }
    GaussRat scaled(const Rational& s) const { return {re * s, im * s}; }
};

class CoeffElem {
  public:
    CoeffElem() = default;  // unattached zero (q = 0); usable only as a placeholder

    CoeffElem(std::int64_t q, Rational a, Rational b, Rational c, Rational d)
        : x_{std::move(a), std::move(b)}, y_{std::move(c), std::move(d)}, q_(q) {
        canonicalize();
    }
    CoeffElem(std::int64_t q, GaussRat x, GaussRat y) : x_(std::move(x)), y_(std::move(y)), q_(q) {
        canonicalize();
    }

    static CoeffElem zero(std::int64_t q) { return CoeffElem(q, 0, 0, 0, 0); }
    static CoeffElem one(std::int64_t q) { return CoeffElem(q, 1, 0, 0, 0); }
    static CoeffElem i(std::int64_t q) { return CoeffElem(q, 0, 1, 0, 0); }
    static CoeffElem r(std::int64_t q) { return CoeffElem(q, 0, 0, 1, 0); }
    static CoeffElem from_rational(std::int64_t q, Rational a) {
        return CoeffElem(q, std::move(a), 0, 0, 0);
    }
    static CoeffElem from_int(std::int64_t q, std::int64_t n) {
        return from_rational(q, Rational(n));
    }

    std::int64_t q() const { return q_; }
    const Rational& a() const { return x_.re; }
    const Rational& b() const { return x_.im; }
    const Rational& c() const { return y_.re; }
    const Rational& d() const { return y_.im; }
    const GaussRat& rational_part() const { return x_; }
    const GaussRat& radical_part() const { return y_; }

    bool is_zero() const { return x_.is_zero() && y_.is_zero(); }
    bool is_one() const { return *this == one(q_); }

    friend CoeffElem operator+(const CoeffElem& u, const CoeffElem& v) {
        std::int64_t q = merge_q(u, v);
        return CoeffElem(q, u.x_ + v.x_, u.y_ + v.y_);
    }
    friend CoeffElem operator-(const CoeffElem& u, const CoeffElem& v) {
        std::int64_t q = merge_q(u, v);
        return CoeffElem(q, u.x_ - v.x_, u.y_ - v.y_);
    }
    friend CoeffElem operator-(const CoeffElem& u) { return CoeffElem(u.q_, -u.x_, -u.y_); }
    friend CoeffElem operator*(const CoeffElem& u, const CoeffElem& v) {
        std::int64_t q = merge_q(u, v);
        // (x1 + y1 r)(x2 + y2 r) = (x1 x2 + q y1 y2) + (x1 y2 + x2 y1) r
        GaussRat x = u.x_ * v.x_ + (u.y_ * v.y_).scaled(Rational(q));
        GaussRat y = u.x_ * v.y_ + v.x_ * u.y_;
        return CoeffElem(q, x, y);
    }
    friend CoeffElem operator/(const CoeffElem& u, const CoeffElem& v) { return u * v.inv(); }

    CoeffElem& operator+=(const CoeffElem& v) { return *this = *this + v; }
    CoeffElem& operator-=(const CoeffElem& v) { return *this = *this - v; }
    CoeffElem& operator*=(const CoeffElem& v) { return *this = *this * v; }
    CoeffElem& operator/=(const CoeffElem& v) { return *this = *this / v; }

    // 1/(x + y r) = (x - y r) / (x^2 - q y^2). The norm x^2 - q y^2 lies in
    // Q(i) and vanishes only for the zero element: for non-square q we have
    // sqrt(q) not in Q(i), and for square q the r-part is already folded.
    CoeffElem inv() const {
        if (is_zero()) throw std::domain_error("division by zero in Q(i)(r)");
        GaussRat n = x_ * x_ - (y_ * y_).scaled(Rational(q_));
        GaussRat ninv = n.inv();
        return CoeffElem(q_, x_ * ninv, (-y_) * ninv);
    }

    CoeffElem pow(long e) const {
        if (e < 0) return inv().pow(-e);
        CoeffElem acc = one(q_), b = *this;
        long n = e;
        while (n > 0) {
            if (n & 1) acc *= b;
            b *= b;
            n >>= 1;
        }
        return acc;
    }

    friend bool operator==(const CoeffElem& u, const CoeffElem& v) {
        if (u.q_ != v.q_ && !u.is_zero() && !v.is_zero())
            throw std::logic_error("comparing coefficients over different q");
        if (u.is_zero() || v.is_zero()) return u.is_zero() && v.is_zero();
        return u.x_ == v.x_ && u.y_ == v.y_;
    }
    friend bool operator!=(const CoeffElem& u, const CoeffElem& v) { return !(u == v); }

    std::complex<double> to_complex() const {
        double rq = std::sqrt(static_cast<double>(q_));
        return {rat_to_double(x_.re) + rq * rat_to_double(y_.re),
                rat_to_double(x_.im) + rq * rat_to_double(y_.im)};
    }

    std::string to_string() const {
        return "(" + rat_to_string(a()) + "," + rat_to_string(b()) + "," + rat_to_string(c()) +
               "," + rat_to_string(d()) + ")";
    }

  private:
    void canonicalize() {
        if (q_ == 0) {
            if (!is_zero()) throw std::logic_error("nonzero coefficient without ambient q");
            return;
        }
        if (q_ < 2) throw std::invalid_argument("ambient q must be >= 2");
        std::int64_t s = perfect_square_root(q_);
        if (s >= 0 && !y_.is_zero()) {
            x_ = x_ + y_.scaled(Rational(s));
            y_ = GaussRat{};
        }
    }

    static std::int64_t merge_q(const CoeffElem& u, const CoeffElem& v) {
        if (u.q_ == 0) return v.q_;
        if (v.q_ == 0) return u.q_;
        if (u.q_ != v.q_) throw std::logic_error("mixing coefficients over different q");
        return u.q_;
    }

    GaussRat x_;  // a + b i
    GaussRat y_;  // c + d i, coefficient of r
    std::int64_t q_ = 0;
};

}  // namespace waldzeta
