#pragma once

#include <string>

#include "sbrep/scalar.hpp"

namespace sbrep {

// Element base + coeff*sqrt(rad) of a quadratic extension of Q(i).
// One shared radicand per computation; when the radicand is a perfect
// square in Q(i) the value collapses to a plain Gaussian rational
// (coeff = 0, rad = 0). Plain values mix freely with any radicand.
class QuadExt {
public:
    QuadExt() : base_(0), coeff_(0), rad_(0) {}
    QuadExt(long v) : base_(v), coeff_(0), rad_(0) {}  // NOLINT: implicit by design
    QuadExt(GaussianRational plain) : base_(std::move(plain)), coeff_(0), rad_(0) {}
    QuadExt(GaussianRational base, GaussianRational coeff, GaussianRational rad);

    // sqrt(d), collapsing to a plain value when d is a perfect square in Q(i).
    static QuadExt sqrt(const GaussianRational& d);

    const GaussianRational& base() const { return base_; }
    const GaussianRational& coeff() const { return coeff_; }
    const GaussianRational& radicand() const { return rad_; }

    bool is_plain() const { return coeff_.is_zero(); }
    bool is_zero() const { return base_.is_zero() && coeff_.is_zero(); }
    bool is_one() const { return coeff_.is_zero() && base_.is_one(); }

    QuadExt conj() const { return raw(base_, -coeff_, rad_); }
    GaussianRational norm_down() const { return base_ * base_ - coeff_ * coeff_ * rad_; }

    QuadExt inverse() const;

    QuadExt operator-() const { return raw(-base_, -coeff_, rad_); }

    friend QuadExt operator+(const QuadExt& a, const QuadExt& b) {
        GaussianRational r = merged_radicand(a, b);
        return raw(a.base_ + b.base_, a.coeff_ + b.coeff_, r);
    }
    friend QuadExt operator-(const QuadExt& a, const QuadExt& b) { return a + (-b); }
    friend QuadExt operator*(const QuadExt& a, const QuadExt& b) {
        GaussianRational r = merged_radicand(a, b);
        return raw(a.base_ * b.base_ + a.coeff_ * b.coeff_ * r,
                   a.base_ * b.coeff_ + a.coeff_ * b.base_, r);
    }
    friend QuadExt operator/(const QuadExt& a, const QuadExt& b) { return a * b.inverse(); }

    QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
    QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
    QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }
    QuadExt& operator/=(const QuadExt& o) { return *this = *this / o; }

    friend bool operator==(const QuadExt& a, const QuadExt& b) {
        if (a.base_ != b.base_) return false;
        if (a.coeff_.is_zero() && b.coeff_.is_zero()) return true;
        merged_radicand(a, b);  // throws on incompatible radicands
        return a.coeff_ == b.coeff_;
    }
    friend bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }

    std::string str() const;

private:
    static QuadExt raw(GaussianRational base, GaussianRational coeff, GaussianRational rad) {
        QuadExt q;
        q.base_ = std::move(base);
        q.coeff_ = std::move(coeff);
        q.rad_ = std::move(rad);
        if (q.coeff_.is_zero()) q.rad_ = GaussianRational(0);
        return q;
    }

    static GaussianRational merged_radicand(const QuadExt& a, const QuadExt& b) {
        if (a.is_plain()) return b.rad_;
        if (b.is_plain()) return a.rad_;
        if (a.rad_ != b.rad_)
            fail(Errc::ring_mismatch, "mixing radicands " + a.rad_.str() + " and " + b.rad_.str());
        return a.rad_;
    }

    GaussianRational base_, coeff_, rad_;
};

}  // namespace sbrep
