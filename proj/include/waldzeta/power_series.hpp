#pragma once

// Truncated power series over Q(i)(r): the oracle representation. A series
// of order T stores coefficients of X^0..X^T; arithmetic and comparison act
// modulo X^{T+1}.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "waldzeta/ratfunc.hpp"

namespace waldzeta {

class PowerSeries {
  public:
    PowerSeries(std::int64_t q, int order)
        : q_(q), c_(static_cast<size_t>(order) + 1, CoeffElem::zero(q)) {
        if (order < 0) throw std::invalid_argument("negative truncation order");
    }
    PowerSeries(std::int64_t q, int order, std::vector<CoeffElem> coeffs) : PowerSeries(q, order) {
        for (size_t k = 0; k < c_.size() && k < coeffs.size(); ++k) c_[k] = coeffs[k];
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    std::int64_t q() const { return q_; }
    const std::vector<CoeffElem>& coeffs() const { return c_; }
    CoeffElem coeff(int k) const {
        if (k < 0 || k > order()) return CoeffElem::zero(q_);
        return c_[static_cast<size_t>(k)];
    }
    void set_coeff(int k, const CoeffElem& v) {
        if (k < 0 || k > order()) throw std::out_of_range("series coefficient index");
        c_[static_cast<size_t>(k)] = v;
    }

    friend PowerSeries operator+(const PowerSeries& f, const PowerSeries& g) {
        PowerSeries out(f.q_, std::min(f.order(), g.order()));
        for (int k = 0; k <= out.order(); ++k) out.c_[(size_t)k] = f.coeff(k) + g.coeff(k);
        return out;
    }
    friend PowerSeries operator-(const PowerSeries& f, const PowerSeries& g) {
        PowerSeries out(f.q_, std::min(f.order(), g.order()));
        for (int k = 0; k <= out.order(); ++k) out.c_[(size_t)k] = f.coeff(k) - g.coeff(k);
        return out;
    }
    friend PowerSeries operator*(const PowerSeries& f, const PowerSeries& g) {
        PowerSeries out(f.q_, std::min(f.order(), g.order()));
        for (int k = 0; k <= out.order(); ++k) {
            CoeffElem acc = CoeffElem::zero(f.q_);
            for (int j = 0; j <= k; ++j) acc += f.coeff(j) * g.coeff(k - j);
            out.c_[(size_t)k] = acc;
        }
        return out;
    }
    friend PowerSeries operator*(const PowerSeries& f, const CoeffElem& s) {
        PowerSeries out = f;
        for (auto& v : out.c_) v = v * s;
        return out;
    }

    friend bool operator==(const PowerSeries& f, const PowerSeries& g) {
        if (f.order() != g.order()) return false;
        for (int k = 0; k <= f.order(); ++k)
            if (f.coeff(k) != g.coeff(k)) return false;
        return true;
    }
    friend bool operator!=(const PowerSeries& f, const PowerSeries& g) { return !(f == g); }

  private:
    std::int64_t q_;
    std::vector<CoeffElem> c_;
};

// Expands f as a power series at X = 0 to order T by long division. The
// denominator must not vanish at X = 0.
inline PowerSeries series_expand(const RatFunc& f, int T) {
    const Poly& n = f.num();
    const Poly& d = f.den();
    CoeffElem d0 = d.coeff(0);
    if (d0.is_zero()) throw std::domain_error("series expansion: pole at X=0");
    CoeffElem d0inv = d0.inv();
    PowerSeries g(f.q(), T);
    for (int k = 0; k <= T; ++k) {
        CoeffElem acc = n.coeff(k);
        for (int j = 1; j <= std::min(k, d.degree()); ++j) acc -= d.coeff(j) * g.coeff(k - j);
        g.set_coeff(k, acc * d0inv);
    }
    return g;
}

}  // namespace waldzeta
