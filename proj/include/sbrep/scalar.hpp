#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "sbrep/errors.hpp"

namespace sbrep {

// Exact rational scalar. GMP's mpq_class keeps the canonical form
// (positive denominator, gcd(num, den) = 1) after every operation.
using Rational = mpq_class;

Rational rational_from_strings(const std::string& num, const std::string& den);

// Parses "3", "-1/2" style literals.
Rational rational_from_literal(const std::string& text);

// Exact square root of a nonnegative rational, if it is a perfect square.
std::optional<Rational> rational_sqrt(const Rational& q);

// Element of Q(i): re + im*i with exact rational parts.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long v) : re_(v), im_(0) {}  // NOLINT: implicit by design
    GaussianRational(Rational re) : re_(std::move(re)), im_(0) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational conj() const { return {re_, Rational(-im_)}; }

    // re^2 + im^2, the field norm down to Q.
    Rational norm() const {
        Rational n = re_ * re_ + im_ * im_;
        return n;
    }

    GaussianRational inverse() const;
    GaussianRational pow(long e) const;

    GaussianRational operator-() const { return {Rational(-re_), Rational(-im_)}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        if (o.im_ == 0) {
            re_ *= o.re_;
            im_ *= o.re_;
            return *this;
        }
        if (im_ == 0) {
            Rational r = re_;
            re_ = r * o.re_;
            im_ = r * o.im_;
            return *this;
        }
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    // Total order for use as map key; not the field order (there is none).
    friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

    std::string str() const;

private:
    Rational re_, im_;
};

// Exact square root in Q(i), when the argument is a perfect square there.
std::optional<GaussianRational> gaussian_sqrt(const GaussianRational& z);

// Parses compact literals: "2", "-3/2", "i", "-i", "1+i", "2-3/4i".
GaussianRational gaussian_from_literal(const std::string& text);

}  // namespace sbrep
