#include "sbrep/quadext.hpp"

namespace sbrep {

QuadExt::QuadExt(GaussianRational base, GaussianRational coeff, GaussianRational rad)
    : base_(std::move(base)), coeff_(std::move(coeff)), rad_(std::move(rad)) {
    if (coeff_.is_zero() || rad_.is_zero()) {
        if (!coeff_.is_zero() && rad_.is_zero()) coeff_ = GaussianRational(0);
        rad_ = GaussianRational(0);
        return;
    }
    if (auto root = gaussian_sqrt(rad_)) {
        base_ += coeff_ * (*root);
        coeff_ = GaussianRational(0);
        rad_ = GaussianRational(0);
    }
}

QuadExt QuadExt::sqrt(const GaussianRational& d) {
    if (auto root = gaussian_sqrt(d)) return QuadExt(*root);
    return QuadExt(GaussianRational(0), GaussianRational(1), d);
}

QuadExt QuadExt::inverse() const {
    if (is_plain()) return QuadExt(base_.inverse());
    // (a + b*sqrt(r))^-1 = (a - b*sqrt(r)) / (a^2 - b^2 r); the denominator is
    // nonzero because r is not a square in Q(i).
    GaussianRational n = norm_down();
    if (n.is_zero()) fail(Errc::division_by_zero, "inverse of 0 in quadratic extension");
    GaussianRational ninv = n.inverse();
    return raw(base_ * ninv, -coeff_ * ninv, rad_);
}

std::string QuadExt::str() const {
    if (is_plain()) return base_.str();
    std::string out;
    if (!base_.is_zero()) out = base_.str() + " + ";
    std::string c = coeff_.str();
    if (c == "1")
        out += "sqrt(" + rad_.str() + ")";
    else
        out += "(" + c + ")*sqrt(" + rad_.str() + ")";
    return out;
}

}  // namespace sbrep
