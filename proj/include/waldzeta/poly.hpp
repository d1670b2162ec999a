#pragma once

// Dense univariate polynomials over Q(i)(r), ascending coefficient order.
// Degrees in this library stay small (<= ~10), so the naive algorithms are
// the right ones. The zero polynomial has an empty coefficient vector and
// degree() == -1.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "waldzeta/coeff.hpp"

namespace waldzeta {

class Poly {
  public:
    Poly() = default;
    explicit Poly(std::int64_t q) : q_(q) {}
    Poly(std::int64_t q, std::vector<CoeffElem> coeffs) : q_(q), c_(std::move(coeffs)) { trim(); }

    static Poly zero(std::int64_t q) { return Poly(q); }
    static Poly constant(const CoeffElem& v) { return Poly(v.q(), {v}); }
    static Poly x(std::int64_t q) { return Poly(q, {CoeffElem::zero(q), CoeffElem::one(q)}); }
    // c * X^k
    static Poly monomial(const CoeffElem& v, int k) {
        std::vector<CoeffElem> cs(static_cast<size_t>(k) + 1, CoeffElem::zero(v.q()));
        cs.back() = v;
        return Poly(v.q(), std::move(cs));
    }

    std::int64_t q() const { return q_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<CoeffElem>& coeffs() const { return c_; }

    CoeffElem coeff(int k) const {
        if (k < 0 || k > degree()) return CoeffElem::zero(q_);
        return c_[static_cast<size_t>(k)];
    }
    CoeffElem leading() const {
        if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    friend Poly operator+(const Poly& f, const Poly& g) {
        std::int64_t q = merge_q(f, g);
        std::vector<CoeffElem> out(std::max(f.c_.size(), g.c_.size()), CoeffElem::zero(q));
        for (size_t k = 0; k < out.size(); ++k) out[k] = f.coeff((int)k) + g.coeff((int)k);
        return Poly(q, std::move(out));
    }
    friend Poly operator-(const Poly& f, const Poly& g) { return f + (-g); }
    friend Poly operator-(const Poly& f) {
        std::vector<CoeffElem> out(f.c_);
        for (auto& v : out) v = -v;
        return Poly(f.q_, std::move(out));
    }
    friend Poly operator*(const Poly& f, const Poly& g) {
        std::int64_t q = merge_q(f, g);
        if (f.is_zero() || g.is_zero()) return Poly(q);
        std::vector<CoeffElem> out(f.c_.size() + g.c_.size() - 1, CoeffElem::zero(q));
        for (size_t a = 0; a < f.c_.size(); ++a)
            for (size_t b = 0; b < g.c_.size(); ++b) out[a + b] += f.c_[a] * g.c_[b];
        return Poly(q, std::move(out));
    }
    friend Poly operator*(const Poly& f, const CoeffElem& s) {
        std::vector<CoeffElem> out(f.c_);
        for (auto& v : out) v = v * s;
        return Poly(s.is_zero() ? f.q_ : s.q(), std::move(out));
    }
    friend bool operator==(const Poly& f, const Poly& g) {
        if (f.c_.size() != g.c_.size()) return false;
        for (size_t k = 0; k < f.c_.size(); ++k)
            if (f.c_[k] != g.c_[k]) return false;
        return true;
    }
    friend bool operator!=(const Poly& f, const Poly& g) { return !(f == g); }

    // Euclidean division: f = q*d + r with deg r < deg d.
    static std::pair<Poly, Poly> divmod(const Poly& f, const Poly& d) {
        if (d.is_zero()) throw std::domain_error("polynomial division by zero");
        std::int64_t q = merge_q(f, d);
        Poly rem = f, quo = Poly::zero(q);
        CoeffElem lead_inv = d.leading().inv();
        while (!rem.is_zero() && rem.degree() >= d.degree()) {
            int k = rem.degree() - d.degree();
            CoeffElem c = rem.leading() * lead_inv;
            Poly t = Poly::monomial(c, k);
            quo = quo + t;
            rem = rem - t * d;
        }
        return {quo, rem};
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return *this * leading().inv();
    }

    // Monic gcd by the Euclidean algorithm over the coefficient field.
    static Poly gcd(const Poly& a0, const Poly& b0) {
        Poly a = a0, b = b0;
        while (!b.is_zero()) {
            Poly r = divmod(a, b).second;
            a = b;
            b = r;
        }
        return a.monic();
    }

    CoeffElem eval(const CoeffElem& v) const {
        CoeffElem acc = CoeffElem::zero(q_);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
        return acc;
    }

    std::complex<double> eval_complex(const std::complex<double>& x) const {
        std::complex<double> acc{0.0, 0.0};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_complex();
        return acc;
    }

    // p(X) -> p(t * X^k): the argument-substitution primitive used for the
    // 2s+1/2 and 2s+1 shifts.
    Poly substitute_power(const CoeffElem& t, int k) const {
        if (k < 1) throw std::invalid_argument("substitution power must be >= 1");
        if (is_zero()) return Poly(q_);
        std::vector<CoeffElem> out(static_cast<size_t>(degree()) * k + 1, CoeffElem::zero(q_));
        CoeffElem tp = CoeffElem::one(q_);
        for (int m = 0; m <= degree(); ++m) {
            out[static_cast<size_t>(m) * k] = c_[static_cast<size_t>(m)] * tp;
            tp *= t;
        }
        return Poly(q_, std::move(out));
    }

    // X^k * p
    Poly shifted(int k) const {
        if (is_zero()) return *this;
        std::vector<CoeffElem> out(c_.size() + static_cast<size_t>(k), CoeffElem::zero(q_));
        for (size_t m = 0; m < c_.size(); ++m) out[m + static_cast<size_t>(k)] = c_[m];
        return Poly(q_, std::move(out));
    }

    std::string to_string(const std::string& var = "X") const {
        if (is_zero()) return "0";
        std::string s;
        for (int k = 0; k <= degree(); ++k) {
            if (coeff(k).is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += coeff(k).to_string();
            if (k >= 1) s += "*" + var + (k > 1 ? "^" + std::to_string(k) : "");
        }
        return s;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    static std::int64_t merge_q(const Poly& f, const Poly& g) {
        if (f.q_ == 0) return g.q_;
        if (g.q_ == 0) return f.q_;
        if (f.q_ != g.q_) throw std::logic_error("mixing polynomials over different q");
        return f.q_;
    }

    std::int64_t q_ = 0;
    std::vector<CoeffElem> c_;
};

}  // namespace waldzeta
