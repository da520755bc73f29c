#pragma once

#include <vector>

#include "sbrep/matrix.hpp"

namespace sbrep {

// Canonical reduced row echelon basis of a subspace of F^ambient.
// Leftmost pivots, pivots normalized to one, eliminated above and below,
// rows ordered by pivot column: two equal subspaces store identical bases.
template <class F>
class Subspace {
    static_assert(RingTraits<F>::is_field, "Subspace needs a field");

public:
    explicit Subspace(int ambient) : ambient_(ambient) {}

    int ambient_dim() const { return ambient_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::vector<F>>& basis() const { return rows_; }

    // Reduces v against the basis; if independent, inserts and returns true.
    bool insert(std::vector<F> v) {
        if (static_cast<int>(v.size()) != ambient_)
            fail(Errc::size_mismatch, "vector dimension does not match ambient");
        reduce(v);
        int p = -1;
        for (int j = 0; j < ambient_; ++j)
            if (!v[j].is_zero()) {
                p = j;
                break;
            }
        if (p < 0) return false;
        F pinv = RingTraits<F>::unit_inverse(v[p]);
        for (int j = p; j < ambient_; ++j)
            if (!v[j].is_zero()) v[j] = pinv * v[j];
        // eliminate the new pivot from existing rows
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const F& c = rows_[r][p];
            if (c.is_zero()) continue;
            F f = c;
            for (int j = p; j < ambient_; ++j) {
                const F& vj = v[j];
                if (!vj.is_zero()) rows_[r][j] -= f * vj;
            }
        }
        // keep rows ordered by pivot column
        std::size_t at = 0;
        while (at < pivots_.size() && pivots_[at] < p) ++at;
        rows_.insert(rows_.begin() + at, std::move(v));
        pivots_.insert(pivots_.begin() + at, p);
        return true;
    }

    bool contains(std::vector<F> v) const {
        reduce(v);
        for (const F& x : v)
            if (!x.is_zero()) return false;
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
    }

private:
    void reduce(std::vector<F>& v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const F& c = v[pivots_[r]];
            if (c.is_zero()) continue;
            F f = c;
            for (int j = pivots_[r]; j < ambient_; ++j) {
                const F& rj = rows_[r][j];
                if (!rj.is_zero()) v[j] -= f * rj;
            }
        }
    }

    int ambient_;
    std::vector<std::vector<F>> rows_;
    std::vector<int> pivots_;
};

template <class F>
Subspace<F> row_space(const std::vector<std::vector<F>>& vectors, int ambient) {
    Subspace<F> s(ambient);
    for (const auto& v : vectors) s.insert(v);
    return s;
}

template <class F>
int rank(const std::vector<std::vector<F>>& vectors, int ambient) {
    return row_space(vectors, ambient).dim();
}

// Dimension of the unital associative algebra generated by gens, computed by
// iterated right-multiplication and row reduction. Seeds with I, the
// generators, and their inverses; multiplies by generators until the rank
// stabilizes or reaches m^2.
template <class F>
int span_closure(const std::vector<SquareMatrix<F>>& gens, bool seed_inverses = true) {
    static_assert(RingTraits<F>::is_field, "span closure needs a field");
    if (gens.empty()) fail(Errc::size_mismatch, "span closure of empty generator list");
    const int m = gens.front().size();
    const int full = m * m;
    for (const auto& g : gens)
        if (g.size() != m) fail(Errc::size_mismatch, "generators of mixed sizes");

    Subspace<F> space(full);
    std::vector<SquareMatrix<F>> worklist;
    auto offer = [&](const SquareMatrix<F>& mat) {
        if (space.insert(mat.flat())) worklist.push_back(mat);
    };
    offer(SquareMatrix<F>::identity(m));
    for (const auto& g : gens) offer(g);
    if (seed_inverses)
        for (const auto& g : gens) offer(g.inverse());

    // Each basis growth enqueues one matrix, so the loop body runs at most
    // m^2 * |gens| times; the guard surfaces bugs rather than looping.
    long guard = static_cast<long>(full + 1) * static_cast<long>(full + gens.size() * 3 + 4);
    for (std::size_t k = 0; k < worklist.size(); ++k) {
        if (space.dim() == full) break;
        SquareMatrix<F> cur = worklist[k];
        for (const auto& g : gens) {
            offer(cur * g);
            if (space.dim() == full) break;
        }
        if (static_cast<long>(worklist.size()) > guard)
            fail(Errc::internal, "span closure failed to stabilize");
    }
    return space.dim();
}

}  // namespace sbrep
