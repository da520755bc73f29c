#include "sbrep/eigen2.hpp"

namespace sbrep {

Eigen2Result eigen_2x2(const SquareMatrix<GaussianRational>& m) {
    if (m.size() != 2) fail(Errc::size_mismatch, "eigen_2x2 needs a 2x2 matrix");
    const GaussianRational &p = m(0, 0), &q = m(0, 1), &r = m(1, 0), &s = m(1, 1);

    Eigen2Result out;
    if (q.is_zero() && r.is_zero() && p == s) {
        out.all_vectors = true;
        return out;
    }

    GaussianRational tr = p + s;
    GaussianRational disc = (p - s) * (p - s) + GaussianRational(4) * q * r;
    QuadExt root = QuadExt::sqrt(disc);
    QuadExt half = QuadExt(GaussianRational(Rational(1, 2)));
    QuadExt lo = (QuadExt(tr) - root) * half;
    QuadExt hi = (QuadExt(tr) + root) * half;

    auto vector_for = [&](const QuadExt& lambda) -> std::array<QuadExt, 2> {
        if (!q.is_zero()) return {QuadExt(q), lambda - QuadExt(p)};
        if (!r.is_zero()) return {lambda - QuadExt(s), QuadExt(r)};
        // diagonal with p != s
        if (lambda == QuadExt(p)) return {QuadExt(1), QuadExt(0)};
        return {QuadExt(0), QuadExt(1)};
    };

    out.pairs.push_back({lo, vector_for(lo)});
    if (hi != lo) {
        // double eigenvalue on a non-scalar matrix means a single Jordan
        // block: only one eigen-direction exists
        out.pairs.push_back({hi, vector_for(hi)});
    }
    return out;
}

bool same_direction(const std::array<QuadExt, 2>& v, const std::array<QuadExt, 2>& w) {
    return (v[0] * w[1] - v[1] * w[0]).is_zero();
}

}  // namespace sbrep
