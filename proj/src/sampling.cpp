#include "sbrep/sampling.hpp"

namespace sbrep {

namespace {

using G = GaussianRational;

std::vector<G> build_pool() {
    Rational half(1, 2);
    return {
        G(0),
        G(1),
        G(-1),
        G(2),
        G(-2),
        G(half),
        G(Rational(-1, 2)),
        G::i(),
        -G::i(),
        G(Rational(1), Rational(1)),
        G(Rational(1), Rational(-1)),
    };
}

}  // namespace

const std::vector<GaussianRational>& sample_pool() {
    static const std::vector<G> pool = build_pool();
    return pool;
}

const std::vector<GaussianRational>& sample_pool_nonzero() {
    static const std::vector<G> pool = [] {
        std::vector<G> p = build_pool();
        p.erase(p.begin());
        return p;
    }();
    return pool;
}

GaussianRational random_pool_value(Rng& rng, bool nonzero) {
    const auto& pool = nonzero ? sample_pool_nonzero() : sample_pool();
    std::uniform_int_distribution<std::size_t> dist(0, pool.size() - 1);
    return pool[dist(rng)];
}

SquareMatrix<GaussianRational> random_invertible(Rng& rng, int m) {
    for (;;) {
        SquareMatrix<G> a(m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) a(i, j) = random_pool_value(rng);
        if (!a.det().is_zero()) return a;
    }
}

}  // namespace sbrep
