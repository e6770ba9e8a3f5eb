#include "bcls/fpgroup.hpp"

#include <algorithm>
#include <set>

namespace bcls::fpgroup {

// Reidemeister-Schreier: subgroup presentation from a closed coset table.
// Schreier transversal from a breadth-first spanning tree; one subgroup
// generator per non-tree edge (coset, generator); relators by rewriting
// every parent relator at every coset.
SubgroupPresentation reidemeister_schreier(const Presentation& pres, const CosetTable& table) {
    const size_t n = table.size();
    const int ngens = pres.ngens();
    if (table.ngens() != ngens) throw std::invalid_argument("table/presentation mismatch");
    for (size_t c = 1; c <= n; ++c)
        for (int x = 0; x < 2 * ngens; ++x)
            if (table.get(c, x) == 0) throw std::invalid_argument("reidemeister_schreier: table not closed");

    // spanning tree: tree_parent[c] = (parent, letter) with parent^letter = c
    std::vector<int32_t> tree_parent(n + 1, 0);
    std::vector<int> tree_letter(n + 1, -1);
    std::vector<Word> rho(n + 1);  // transversal words
    {
        std::vector<int32_t> queue = {1};
        std::vector<bool> seen(n + 1, false);
        seen[1] = true;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int32_t c = queue[qi];
            for (int x = 0; x < 2 * ngens; ++x) {
                int32_t d = table.get(c, x);
                if (seen[d]) continue;
                seen[d] = true;
                tree_parent[d] = c;
                tree_letter[d] = x;
                rho[d] = concat(rho[c], make_word({{x / 2, x % 2 == 0 ? 1L : -1L}}));
                queue.push_back(d);
            }
        }
        if (queue.size() != n) throw std::invalid_argument("reidemeister_schreier: table not transitive");
    }

    // Schreier generators: nontrivial (coset, positive generator) edges
    auto is_tree_edge = [&](int32_t c, int g) {
        int32_t d = table.get(c, 2 * g);
        return (tree_parent[d] == c && tree_letter[d] == 2 * g) ||
               (tree_parent[c] == d && tree_letter[c] == 2 * g + 1);
    };
    std::vector<std::vector<int>> gen_index(n + 1, std::vector<int>(ngens, -1));
    SubgroupPresentation out;
    for (size_t c = 1; c <= n; ++c)
        for (int g = 0; g < ngens; ++g) {
            if (is_tree_edge(static_cast<int32_t>(c), g)) continue;
            int idx = static_cast<int>(out.presentation.gens.size());
            gen_index[c][g] = idx;
            out.presentation.gens.push_back("x" + std::to_string(idx + 1));
            int32_t d = table.get(c, 2 * g);
            out.generators_in_parent.push_back(
                concat(concat(rho[c], make_word({{g, 1}})), inverse(rho[d])));
        }

    // rewrite each parent relator at each coset
    std::set<std::vector<int>> seen_relators;
    for (size_t c = 1; c <= n; ++c) {
        for (const auto& r : pres.relators) {
            std::vector<Word::Syllable> syl;
            int32_t e = static_cast<int32_t>(c);
            for (int letter : to_letters(r)) {
                if (letter % 2 == 0) {
                    int g = letter / 2;
                    if (int idx = gen_index[e][g]; idx >= 0) syl.push_back({idx, 1});
                    e = table.get(e, letter);
                } else {
                    int g = letter / 2;
                    int32_t from = table.get(e, letter);  // from^g = e
                    if (int idx = gen_index[from][g]; idx >= 0) syl.push_back({idx, -1});
                    e = from;
                }
            }
            Word w = cyclically_reduce(make_word(std::move(syl)));
            if (w.empty()) continue;
            // keep one of each relator up to the stored normal form
            if (seen_relators.insert(to_letters(w)).second)
                out.presentation.relators.push_back(std::move(w));
        }
    }
    return out;
}

}  // namespace bcls::fpgroup
