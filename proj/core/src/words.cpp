#include "bcls/fpgroup.hpp"

#include <algorithm>

namespace bcls::fpgroup {

long Word::length() const {
    long n = 0;
    for (const auto& s : syl) n += std::abs(s.exp);
    return n;
}

Word make_word(std::vector<Word::Syllable> syllables) {
    Word w;
    for (auto& s : syllables) {
        if (s.exp == 0) continue;
        if (!w.syl.empty() && w.syl.back().gen == s.gen) {
            w.syl.back().exp += s.exp;
            if (w.syl.back().exp == 0) w.syl.pop_back();
        } else {
            w.syl.push_back(s);
        }
    }
    return w;
}

Word concat(const Word& a, const Word& b) {
    std::vector<Word::Syllable> all = a.syl;
    all.insert(all.end(), b.syl.begin(), b.syl.end());
    return make_word(std::move(all));
}

Word inverse(const Word& a) {
    Word w;
    for (auto it = a.syl.rbegin(); it != a.syl.rend(); ++it) w.syl.push_back({it->gen, -it->exp});
    return w;
}

Word power(const Word& a, long e) {
    if (e == 0) return {};
    Word base = e > 0 ? a : inverse(a);
    Word out = base;
    for (long i = 1; i < std::abs(e); ++i) out = concat(out, base);
    return out;
}

Word cyclically_reduce(const Word& a) {
    Word w = a;
    while (w.syl.size() >= 2 && w.syl.front().gen == w.syl.back().gen) {
        int gen = w.syl.front().gen;
        long sum = w.syl.front().exp + w.syl.back().exp;
        w.syl.pop_back();
        w.syl.erase(w.syl.begin());
        if (sum != 0) w.syl.insert(w.syl.begin(), {gen, sum});
        // re-reduce in case the join created a new cancellation
        w = make_word(std::move(w.syl));
    }
    return w;
}

std::vector<int> to_letters(const Word& a) {
    std::vector<int> out;
    for (const auto& s : a.syl) {
        int letter = s.exp > 0 ? 2 * s.gen : 2 * s.gen + 1;
        for (long i = 0; i < std::abs(s.exp); ++i) out.push_back(letter);
    }
    return out;
}

Word from_letters(const std::vector<int>& letters) {
    std::vector<Word::Syllable> syl;
    for (int l : letters) syl.push_back({l / 2, l % 2 == 0 ? 1L : -1L});
    return make_word(std::move(syl));
}

Presentation add_relators(const Presentation& pres, const std::vector<Word>& words) {
    Presentation out = pres;
    for (const auto& w : words) {
        for (const auto& s : w.syl)
            if (s.gen < 0 || s.gen >= pres.ngens())
                throw std::invalid_argument("add_relators: generator index out of range");
        Word r = cyclically_reduce(w);
        if (r.empty()) continue;
        out.relators.push_back(std::move(r));
    }
    return out;
}

int32_t CosetTable::trace(size_t coset, const Word& w) const {
    int32_t c = static_cast<int32_t>(coset);
    for (const auto& s : w.syl) {
        int letter = s.exp > 0 ? 2 * s.gen : 2 * s.gen + 1;
        for (long i = 0; i < std::abs(s.exp); ++i) {
            c = get(c, letter);
            if (c == 0) return 0;
        }
    }
    return c;
}

std::vector<int32_t> CosetTable::column(int letter) const {
    std::vector<int32_t> perm(size() + 1, 0);
    for (size_t c = 1; c <= size(); ++c) perm[c] = get(c, letter);
    return perm;
}

}  // namespace bcls::fpgroup
