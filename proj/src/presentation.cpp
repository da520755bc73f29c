#include "sbrep/presentation.hpp"

#include <algorithm>

namespace sbrep {

namespace {

void sort_relations(std::vector<Relation>& rels) {
    std::stable_sort(rels.begin(), rels.end(), [](const Relation& a, const Relation& b) {
        if (a.family != b.family) return a.family < b.family;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    });
}

}  // namespace

Presentation bn_presentation(int n) {
    if (n < 2) fail(Errc::bad_strand_count, "B_n needs n >= 2");
    Presentation p;
    p.n = n;
    for (int i = 1; i <= n - 2; ++i)
        p.relations.push_back({{sig(i), sig(i + 1), sig(i)}, {sig(i + 1), sig(i), sig(i + 1)}, 1, i, 0});
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 2; j <= n - 1; ++j)
            p.relations.push_back({{sig(i), sig(j)}, {sig(j), sig(i)}, 2, i, j});
    sort_relations(p.relations);
    return p;
}

Presentation sbn_presentation(int n) {
    Presentation p = bn_presentation(n);
    // (3) tau_i tau_j and (4) tau_i sigma_j for |i-j| >= 2; family (4) is
    // directional, so each unordered pair contributes both orientations
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 2; j <= n - 1; ++j) {
            p.relations.push_back({{tau(i), tau(j)}, {tau(j), tau(i)}, 3, i, j});
            p.relations.push_back({{tau(i), sig(j)}, {sig(j), tau(i)}, 4, i, j});
            p.relations.push_back({{tau(j), sig(i)}, {sig(i), tau(j)}, 4, j, i});
        }
    for (int i = 1; i <= n - 1; ++i)
        p.relations.push_back({{tau(i), sig(i)}, {sig(i), tau(i)}, 5, i, 0});
    for (int i = 1; i <= n - 2; ++i) {
        p.relations.push_back(
            {{sig(i), sig(i + 1), tau(i)}, {tau(i + 1), sig(i), sig(i + 1)}, 6, i, 0});
        p.relations.push_back(
            {{sig(i + 1), sig(i), tau(i + 1)}, {tau(i), sig(i + 1), sig(i)}, 7, i, 0});
    }
    sort_relations(p.relations);
    return p;
}

std::string word_str(const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (const auto& g : w) {
        out += g.kind == GenKind::sigma ? "s" : "t";
        out += std::to_string(g.index);
        if (g.sign < 0) out += "'";
        out += " ";
    }
    out.pop_back();
    return out;
}

}  // namespace sbrep
