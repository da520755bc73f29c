#pragma once

#include <string>
#include <vector>

#include "sbrep/matrix.hpp"

namespace sbrep {

enum class GenKind { sigma, tau };

struct GeneratorSymbol {
    GenKind kind = GenKind::sigma;
    int index = 1;   // 1-based, valid up to n-1
    int sign = +1;   // +1 or -1

    friend bool operator==(const GeneratorSymbol&, const GeneratorSymbol&) = default;
};

using Word = std::vector<GeneratorSymbol>;

inline GeneratorSymbol sig(int i) { return {GenKind::sigma, i, +1}; }
inline GeneratorSymbol tau(int i) { return {GenKind::tau, i, +1}; }

// One defining relation lhs = rhs, tagged with its equation family (1)-(7)
// and the generator indices it was instantiated at (j = 0 when unused).
struct Relation {
    Word lhs, rhs;
    int family = 0;
    int i = 0;
    int j = 0;
};

struct Presentation {
    int n = 0;
    std::vector<Relation> relations;
};

// Artin presentation: braid relations (1) and far commutations (2).
Presentation bn_presentation(int n);

// Adds the singular families (3)-(7) on top of the B_n relations.
Presentation sbn_presentation(int n);

std::string word_str(const Word& w);

// Generator images of a representation, indexed 1..n-1. tau may be empty for
// plain braid group representations.
template <class R>
struct RepImages {
    std::vector<SquareMatrix<R>> sigma, tau;

    const SquareMatrix<R>& image(const GeneratorSymbol& g) const {
        const auto& v = g.kind == GenKind::sigma ? sigma : tau;
        if (g.index < 1 || g.index > static_cast<int>(v.size()))
            fail(Errc::missing_generator,
                 std::string(g.kind == GenKind::sigma ? "sigma" : "tau") + "_" +
                     std::to_string(g.index) + " has no assigned image");
        return v[static_cast<std::size_t>(g.index - 1)];
    }
};

template <class R>
struct Violation {
    int family = 0;
    int i = 0;
    int j = 0;
    SquareMatrix<R> residual;  // lhs - rhs
};

namespace detail {

template <class R>
struct WordEvaluator {
    const RepImages<R>& images;
    int dim;
    std::vector<SquareMatrix<R>> sigma_inv, tau_inv;
    // two-letter prefixes repeat across the braid and mixed relation families
    std::map<std::pair<int, int>, SquareMatrix<R>> pair_cache;

    static int letter_key(const GeneratorSymbol& g) {
        return g.index * 4 + (g.kind == GenKind::tau ? 2 : 0) + (g.sign < 0 ? 1 : 0);
    }

    const SquareMatrix<R>& letter(const GeneratorSymbol& g) {
        if (g.sign >= 0) return images.image(g);
        auto& cache = g.kind == GenKind::sigma ? sigma_inv : tau_inv;
        auto idx = static_cast<std::size_t>(g.index - 1);
        if (idx >= cache.size()) cache.resize(idx + 1, SquareMatrix<R>());
        if (cache[idx].size() == 0) cache[idx] = images.image(g).inverse();
        return cache[idx];
    }

    const SquareMatrix<R>& pair_product(const GeneratorSymbol& a, const GeneratorSymbol& b) {
        auto key = std::make_pair(letter_key(a), letter_key(b));
        auto it = pair_cache.find(key);
        if (it == pair_cache.end())
            it = pair_cache.emplace(key, letter(a) * letter(b)).first;
        return it->second;
    }

    SquareMatrix<R> eval(const Word& w) {
        if (w.empty()) return SquareMatrix<R>::identity(dim);
        if (w.size() == 1) return letter(w.front());
        SquareMatrix<R> acc = pair_product(w[0], w[1]);
        for (std::size_t k = 2; k < w.size(); ++k) acc = acc * letter(w[k]);
        return acc;
    }
};

}  // namespace detail

// Evaluates both sides of every relation exactly and reports each failure
// with the residual lhs - rhs. Also validates that every generator image is
// invertible, since the singular braid monoid embeds into a group.
template <class R>
std::vector<Violation<R>> verify_rep(const RepImages<R>& images, const Presentation& pres) {
    int dim = 0;
    // Invertibility gate: nonzero determinant. Over the Laurent ring this is
    // invertibility over the fraction field (every instantiation outside a
    // finite set of t); a unit determinant is only needed when a word
    // actually inverts the image.
    auto check_images = [&](const std::vector<SquareMatrix<R>>& v, const char* what) {
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (dim == 0) dim = v[k].size();
            if (v[k].size() != dim)
                fail(Errc::size_mismatch, "generator images of mixed sizes");
            if (v[k].det().is_zero())
                fail(Errc::singular_generator_image,
                     std::string(what) + "_" + std::to_string(k + 1) + " is not invertible");
        }
    };
    check_images(images.sigma, "sigma");
    check_images(images.tau, "tau");
    if (dim == 0) fail(Errc::missing_generator, "no generator images given");

    detail::WordEvaluator<R> eval{images, dim, {}, {}, {}};
    std::vector<Violation<R>> out;
    for (const auto& rel : pres.relations) {
        auto lhs = eval.eval(rel.lhs);
        auto rhs = eval.eval(rel.rhs);
        if (lhs != rhs) out.push_back({rel.family, rel.i, rel.j, lhs - rhs});
    }
    return out;
}

}  // namespace sbrep
