#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sbrep/errors.hpp"
#include "sbrep/laurent.hpp"
#include "sbrep/quadext.hpp"
#include "sbrep/scalar.hpp"

namespace sbrep {

template <class R>
struct RingTraits;

template <>
struct RingTraits<GaussianRational> {
    static constexpr bool is_field = true;
    static constexpr const char* name = "gaussian";
    static bool is_unit(const GaussianRational& x) { return !x.is_zero(); }
    static GaussianRational unit_inverse(const GaussianRational& x) { return x.inverse(); }
};

template <>
struct RingTraits<LaurentPoly> {
    static constexpr bool is_field = false;
    static constexpr const char* name = "laurent";
    static bool is_unit(const LaurentPoly& x) { return x.is_unit(); }
    static LaurentPoly unit_inverse(const LaurentPoly& x) { return x.unit_inverse(); }
};

template <>
struct RingTraits<QuadExt> {
    static constexpr bool is_field = true;
    static constexpr const char* name = "quadext";
    static bool is_unit(const QuadExt& x) { return !x.is_zero(); }
    static QuadExt unit_inverse(const QuadExt& x) { return x.inverse(); }
};

// Dense square matrix over one scalar ring, value semantics throughout.
template <class R>
class SquareMatrix {
public:
    SquareMatrix() : m_(0) {}
    explicit SquareMatrix(int m) : m_(m), data_(static_cast<std::size_t>(m) * m, R(0)) {
        if (m < 1) fail(Errc::size_mismatch, "matrix size must be >= 1");
    }
    SquareMatrix(int m, std::vector<R> entries) : m_(m), data_(std::move(entries)) {
        if (m < 1 || data_.size() != static_cast<std::size_t>(m) * m)
            fail(Errc::size_mismatch, "entry count does not match size");
    }

    static SquareMatrix identity(int m) {
        SquareMatrix I(m);
        for (int i = 0; i < m; ++i) I(i, i) = R(1);
        return I;
    }

    int size() const { return m_; }

    R& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * m_ + j]; }
    const R& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * m_ + j]; }

    bool is_identity() const {
        for (int i = 0; i < m_; ++i)
            for (int j = 0; j < m_; ++j) {
                const R expect = (i == j) ? R(1) : R(0);
                if ((*this)(i, j) != expect) return false;
            }
        return true;
    }

    bool is_scalar() const {
        for (int i = 0; i < m_; ++i)
            for (int j = 0; j < m_; ++j) {
                if (i != j && !(*this)(i, j).is_zero()) return false;
                if (i != j) continue;
                if ((*this)(i, i) != (*this)(0, 0)) return false;
            }
        return true;
    }

    SquareMatrix operator-() const {
        SquareMatrix r(*this);
        for (auto& x : r.data_) x = -x;
        return r;
    }

    friend SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b) {
        check_sizes(a, b);
        SquareMatrix r(a);
        for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
        return r;
    }
    friend SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b) {
        check_sizes(a, b);
        SquareMatrix r(a);
        for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] -= b.data_[k];
        return r;
    }
    friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
        check_sizes(a, b);
        const int m = a.m_;
        SquareMatrix r(m);
        for (int i = 0; i < m; ++i)
            for (int k = 0; k < m; ++k) {
                const R& aik = a(i, k);
                if (aik.is_zero()) continue;
                const bool aik_one = aik.is_one();
                for (int j = 0; j < m; ++j) {
                    const R& bkj = b(k, j);
                    if (bkj.is_zero()) continue;
                    if (aik_one)
                        r(i, j) += bkj;
                    else if (bkj.is_one())
                        r(i, j) += aik;
                    else
                        r(i, j) += aik * bkj;
                }
            }
        return r;
    }
    friend SquareMatrix operator*(const R& s, const SquareMatrix& a) {
        SquareMatrix r(a);
        for (auto& x : r.data_) x = s * x;
        return r;
    }

    friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
        return a.m_ == b.m_ && a.data_ == b.data_;
    }
    friend bool operator!=(const SquareMatrix& a, const SquareMatrix& b) { return !(a == b); }

    R trace() const {
        R t(0);
        for (int i = 0; i < m_; ++i) t += (*this)(i, i);
        return t;
    }

    R det() const {
        if constexpr (RingTraits<R>::is_field) {
            // fraction-full elimination over the field
            SquareMatrix a(*this);
            const int m = m_;
            R result(1);
            for (int col = 0; col < m; ++col) {
                int piv = -1;
                for (int r = col; r < m; ++r)
                    if (!a(r, col).is_zero()) {
                        piv = r;
                        break;
                    }
                if (piv < 0) return R(0);
                if (piv != col) {
                    for (int j = col; j < m; ++j) std::swap(a(piv, j), a(col, j));
                    result = -result;
                }
                result *= a(col, col);
                R pinv = RingTraits<R>::unit_inverse(a(col, col));
                for (int r = col + 1; r < m; ++r) {
                    if (a(r, col).is_zero()) continue;
                    R f = a(r, col) * pinv;
                    for (int j = col + 1; j < m; ++j) {
                        const R& acj = a(col, j);
                        if (!acj.is_zero()) a(r, j) -= f * acj;
                    }
                }
            }
            return result;
        } else {
            // Laplace expansion with subset memoization; exact over any
            // commutative ring, fine at these dimensions
            const int m = m_;
            std::vector<R> memo(static_cast<std::size_t>(1) << m, R(0));
            memo[0] = R(1);
            for (unsigned mask = 1; mask < (1u << m); ++mask) {
                int row = __builtin_popcount(mask) - 1;
                R acc(0);
                // expansion along the last used row: cofactor sign (-1)^(row+k)
                int sign = (row % 2 == 0) ? 1 : -1;
                for (int j = 0; j < m; ++j) {
                    if (!(mask & (1u << j))) continue;
                    const R& a = (*this)(row, j);
                    if (!a.is_zero()) {
                        R term = a * memo[mask ^ (1u << j)];
                        acc += (sign > 0) ? term : -term;
                    }
                    sign = -sign;
                }
                memo[mask] = std::move(acc);
            }
            return memo[(1u << m) - 1];
        }
    }

    SquareMatrix inverse() const;

    const std::vector<R>& flat() const { return data_; }

    template <class Fn>
    auto map(Fn&& fn) const -> SquareMatrix<decltype(fn(std::declval<R>()))> {
        using S = decltype(fn(std::declval<R>()));
        SquareMatrix<S> r(m_);
        for (int i = 0; i < m_; ++i)
            for (int j = 0; j < m_; ++j) r(i, j) = fn((*this)(i, j));
        return r;
    }

    SquareMatrix transpose() const {
        SquareMatrix r(m_);
        for (int i = 0; i < m_; ++i)
            for (int j = 0; j < m_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    std::string str() const {
        std::string out = "[";
        for (int i = 0; i < m_; ++i) {
            out += i ? "; " : "";
            for (int j = 0; j < m_; ++j) out += (j ? ", " : "") + (*this)(i, j).str();
        }
        return out + "]";
    }

private:
    static void check_sizes(const SquareMatrix& a, const SquareMatrix& b) {
        if (a.m_ != b.m_)
            fail(Errc::size_mismatch,
                 "sizes " + std::to_string(a.m_) + " and " + std::to_string(b.m_));
    }

    int m_;
    std::vector<R> data_;
};

template <class R>
SquareMatrix<R> SquareMatrix<R>::inverse() const {
    const int m = m_;
    if constexpr (RingTraits<R>::is_field) {
        // Gauss-Jordan over the field.
        SquareMatrix a(*this), inv = identity(m);
        for (int col = 0; col < m; ++col) {
            int piv = -1;
            for (int r = col; r < m; ++r)
                if (!a(r, col).is_zero()) {
                    piv = r;
                    break;
                }
            if (piv < 0) fail(Errc::singular_matrix, "matrix is singular");
            if (piv != col)
                for (int j = 0; j < m; ++j) {
                    std::swap(a(piv, j), a(col, j));
                    std::swap(inv(piv, j), inv(col, j));
                }
            R pinv = RingTraits<R>::unit_inverse(a(col, col));
            for (int j = 0; j < m; ++j) {
                a(col, j) *= pinv;
                inv(col, j) *= pinv;
            }
            for (int r = 0; r < m; ++r) {
                if (r == col || a(r, col).is_zero()) continue;
                R f = a(r, col);
                for (int j = 0; j < m; ++j) {
                    a(r, j) -= f * a(col, j);
                    inv(r, j) -= f * inv(col, j);
                }
            }
        }
        return inv;
    } else {
        // Adjugate divided by the determinant, which must be a unit.
        R d = det();
        if (d.is_zero()) fail(Errc::singular_matrix, "matrix is singular");
        if (!RingTraits<R>::is_unit(d))
            fail(Errc::non_unit_determinant, "determinant " + d.str() + " is not a unit");
        R dinv = RingTraits<R>::unit_inverse(d);
        if (m == 1) {
            SquareMatrix r(1);
            r(0, 0) = dinv;
            return r;
        }
        SquareMatrix adj(m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                SquareMatrix minor(m - 1);
                for (int r = 0, rr = 0; r < m; ++r) {
                    if (r == i) continue;
                    for (int c = 0, cc = 0; c < m; ++c) {
                        if (c == j) continue;
                        minor(rr, cc) = (*this)(r, c);
                        ++cc;
                    }
                    ++rr;
                }
                R cof = minor.det();
                adj(j, i) = ((i + j) % 2 == 0) ? cof * dinv : -(cof * dinv);
            }
        return adj;
    }
}

// Identity everywhere except rows/columns pos..pos+k-1 (1-based), which hold
// the block. This is the local form shared by every family in the catalog.
template <class R>
SquareMatrix<R> block_embed(const SquareMatrix<R>& block, int pos, int ambient) {
    const int k = block.size();
    if (pos < 1 || pos + k - 1 > ambient)
        fail(Errc::position_out_of_range,
             "block of size " + std::to_string(k) + " at position " + std::to_string(pos) +
                 " in ambient " + std::to_string(ambient));
    SquareMatrix<R> r = SquareMatrix<R>::identity(ambient);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) r(pos - 1 + i, pos - 1 + j) = block(i, j);
    return r;
}

template <class R>
SquareMatrix<R> make_matrix(int m, std::vector<R> entries) {
    return SquareMatrix<R>(m, std::move(entries));
}

inline SquareMatrix<GaussianRational> eval_matrix(const SquareMatrix<LaurentPoly>& a,
                                                  const GaussianRational& t0) {
    return a.map([&](const LaurentPoly& p) { return p.eval(t0); });
}

inline SquareMatrix<LaurentPoly> to_laurent_matrix(const SquareMatrix<GaussianRational>& a) {
    return a.map([](const GaussianRational& g) { return LaurentPoly(g); });
}

inline SquareMatrix<QuadExt> to_quadext_matrix(const SquareMatrix<GaussianRational>& a) {
    return a.map([](const GaussianRational& g) { return QuadExt(g); });
}

using GaussianMatrix = SquareMatrix<GaussianRational>;
using LaurentMatrix = SquareMatrix<LaurentPoly>;
using QuadExtMatrix = SquareMatrix<QuadExt>;

}  // namespace sbrep
