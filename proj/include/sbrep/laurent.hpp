#pragma once

#include <map>
#include <string>

#include "sbrep/scalar.hpp"

namespace sbrep {

// Laurent polynomial in one indeterminate t over Q(i).
// Invariant: no stored zero coefficients; zero element is the empty map.
class LaurentPoly {
public:
    using CoeffMap = std::map<long, GaussianRational>;

    LaurentPoly() = default;
    LaurentPoly(long v) { set(0, GaussianRational(v)); }  // NOLINT: implicit by design
    LaurentPoly(GaussianRational c) { set(0, std::move(c)); }

    static LaurentPoly t(long exp = 1) { return monomial(exp, GaussianRational(1)); }
    static LaurentPoly monomial(long exp, GaussianRational coeff) {
        LaurentPoly p;
        p.set(exp, std::move(coeff));
        return p;
    }

    const CoeffMap& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return is_constant() && constant_term().is_one(); }
    bool is_constant() const {
        return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
    }
    GaussianRational constant_term() const {
        auto it = coeffs_.find(0);
        return it == coeffs_.end() ? GaussianRational(0) : it->second;
    }

    // Units of Q(i)[t^{+-1}] are the nonzero monomials c*t^k.
    bool is_unit() const { return coeffs_.size() == 1; }

    GaussianRational coeff(long exp) const {
        auto it = coeffs_.find(exp);
        return it == coeffs_.end() ? GaussianRational(0) : it->second;
    }

    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, -c);
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
        return *this;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    LaurentPoly& operator/=(const LaurentPoly& o) { return *this = *this / o; }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.coeffs_)
            for (const auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
        return r;
    }

    // Division restricted to units (monomials, including nonzero constants).
    friend LaurentPoly operator/(const LaurentPoly& a, const LaurentPoly& b) {
        if (b.is_zero()) fail(Errc::division_by_zero, "Laurent division by zero");
        if (!b.is_unit())
            fail(Errc::non_unit_laurent_divisor, "divisor must be a monomial c*t^k");
        return a * b.unit_inverse();
    }

    LaurentPoly unit_inverse() const {
        if (is_zero()) fail(Errc::division_by_zero, "Laurent inverse of zero");
        if (!is_unit()) fail(Errc::non_unit_laurent_divisor, "inverse of non-monomial");
        const auto& [e, c] = *coeffs_.begin();
        return monomial(-e, c.inverse());
    }

    // Substitutes t = t0. Exact; negative exponents need t0 != 0.
    GaussianRational eval(const GaussianRational& t0) const {
        GaussianRational acc(0);
        for (const auto& [e, c] : coeffs_) {
            if (e < 0 && t0.is_zero())
                fail(Errc::eval_at_zero, "negative exponent at t = 0");
            acc += c * t0.pow(e);
        }
        return acc;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    std::string str() const;

private:
    void set(long exp, GaussianRational c) {
        if (!c.is_zero()) coeffs_[exp] = std::move(c);
    }
    void add_term(long exp, const GaussianRational& c) {
        auto it = coeffs_.find(exp);
        if (it == coeffs_.end()) {
            if (!c.is_zero()) coeffs_.emplace(exp, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }

    CoeffMap coeffs_;
};

}  // namespace sbrep
