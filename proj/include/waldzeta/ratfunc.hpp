#pragma once

// Reduced rational functions in the formal variable X = q^{-s}.
//
// Canonical form: gcd(num, den) = 1 and den monic, so equality is
// component-wise. Negative powers of X (Laurent data such as
// q^{s+1/2} = r X^{-1}) are carried by a denominator divisible by X;
// the normal form keeps all such powers in the denominator.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "waldzeta/poly.hpp"

namespace waldzeta {

class RatFunc {
  public:
    RatFunc() = default;
    explicit RatFunc(std::int64_t q)
        : num_(Poly::zero(q)), den_(Poly::constant(CoeffElem::one(q))) {}

    // The reduce operation: gcd cancellation plus monic normalization of the
    // denominator. reduce(a n, a d) = reduce(n, d) for any nonzero scalar a.
    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::invalid_argument("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = Poly::constant(CoeffElem::one(den_.q()));
            num_ = Poly::zero(den_.q());
            return;
        }
        Poly g = Poly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = Poly::divmod(num_, g).first;
            den_ = Poly::divmod(den_, g).first;
        }
        CoeffElem lead_inv = den_.leading().inv();
        num_ = num_ * lead_inv;
        den_ = den_ * lead_inv;
    }

    static RatFunc zero(std::int64_t q) { return RatFunc(q); }
    static RatFunc one(std::int64_t q) { return constant(CoeffElem::one(q)); }
    static RatFunc constant(const CoeffElem& v) {
        return RatFunc(Poly::constant(v), Poly::constant(CoeffElem::one(v.q())));
    }
    static RatFunc from_poly(Poly p) {
        std::int64_t q = p.q();
        return RatFunc(std::move(p), Poly::constant(CoeffElem::one(q)));
    }
    // c * X^k with k of either sign.
    static RatFunc monomial(const CoeffElem& v, int k) {
        if (k >= 0) return from_poly(Poly::monomial(v, k));
        return RatFunc(Poly::constant(v), Poly::monomial(CoeffElem::one(v.q()), -k));
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    std::int64_t q() const { return den_.q(); }
    bool is_zero() const { return num_.is_zero(); }

    friend RatFunc operator+(const RatFunc& f, const RatFunc& g) {
        return RatFunc(f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_);
    }
    friend RatFunc operator-(const RatFunc& f, const RatFunc& g) {
        return RatFunc(f.num_ * g.den_ - g.num_ * f.den_, f.den_ * g.den_);
    }
    friend RatFunc operator-(const RatFunc& f) { return RatFunc(-f.num_, f.den_); }
    friend RatFunc operator*(const RatFunc& f, const RatFunc& g) {
        return RatFunc(f.num_ * g.num_, f.den_ * g.den_);
    }
    friend RatFunc operator*(const RatFunc& f, const CoeffElem& s) {
        return RatFunc(f.num_ * s, f.den_);
    }
    friend RatFunc operator/(const RatFunc& f, const RatFunc& g) {
        if (g.is_zero()) throw std::domain_error("division by zero rational function");
        return RatFunc(f.num_ * g.den_, f.den_ * g.num_);
    }
    RatFunc inv() const {
        if (is_zero()) throw std::domain_error("inverse of zero rational function");
        return RatFunc(den_, num_);
    }

    friend bool operator==(const RatFunc& f, const RatFunc& g) {
        return f.num_ == g.num_ && f.den_ == g.den_;
    }
    friend bool operator!=(const RatFunc& f, const RatFunc& g) { return !(f == g); }

    // f(X) -> f(t * X^k)
    RatFunc substitute_power(const CoeffElem& t, int k) const {
        return RatFunc(num_.substitute_power(t, k), den_.substitute_power(t, k));
    }

    std::complex<double> eval_complex(const std::complex<double>& x) const {
        return num_.eval_complex(x) / den_.eval_complex(x);
    }

    std::string to_string(const std::string& var = "X") const {
        return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
    }

  private:
    Poly num_;
    Poly den_;
};

// Named argument-substitution maps. With the convention X = q^{-s}:
//   s -> 2s + 1/2 sends X to q^{-1/2} X^2 = (r/q) X^2,
//   s -> 2s + 1   sends X to q^{-1}   X^2.
inline RatFunc subst_two_s_plus_half(const RatFunc& f, std::int64_t q) {
    CoeffElem t(q, 0, 0, Rational(1, q), 0);  // r/q = q^{-1/2}
    return f.substitute_power(t, 2);
}
inline RatFunc subst_two_s_plus_one(const RatFunc& f, std::int64_t q) {
    CoeffElem t = CoeffElem::from_rational(q, Rational(1, q));
    return f.substitute_power(t, 2);
}

}  // namespace waldzeta
