#include "bcls/fpgroup.hpp"

#include <algorithm>

// Low-index subgroups by backtrack search over partial coset tables.  Cells
// are filled in row-major order, new cosets numbered by first appearance, so
// every completed table is in standard form; conjugate duplicates are removed
// by the first-in-class minimality test over all base points.
namespace bcls::fpgroup {

namespace {

class LowIndex {
  public:
    LowIndex(const Presentation& pres, size_t max_index, size_t max_nodes)
        : ncols_(2 * pres.ngens()), max_n_(max_index), budget_(max_nodes) {
        for (const auto& r : pres.relators) {
            auto letters = to_letters(r);
            if (!letters.empty()) relators_.push_back(std::move(letters));
        }
    }

    std::vector<CosetTable> run(int ngens) {
        if (max_n_ == 0) return {};
        tab_.assign(max_n_ * ncols_, 0);
        n_ = 1;
        dfs(ngens);
        return std::move(results_);
    }

  private:
    int ncols_;
    size_t max_n_;
    size_t budget_;
    std::vector<std::vector<int>> relators_;
    std::vector<int32_t> tab_;
    size_t n_ = 1;
    std::vector<CosetTable> results_;

    static int inv(int x) { return x ^ 1; }
    int32_t& entry(int32_t c, int x) { return tab_[(c - 1) * size_t(ncols_) + x]; }

    // scan relator at coset; fills forced single-gap entries
    // returns false on contradiction, sets *progress when an entry was filled
    bool scan(int32_t alpha, const std::vector<int>& w, bool* progress) {
        int32_t f = alpha;
        size_t i = 0;
        int32_t b = alpha;
        size_t j = w.size();
        while (i < j) {
            int32_t next = entry(f, w[i]);
            if (next == 0) break;
            f = next;
            ++i;
        }
        if (i >= j) return f == b;
        while (j > i) {
            int32_t prev = entry(b, inv(w[j - 1]));
            if (prev == 0) break;
            b = prev;
            --j;
        }
        if (j == i) return f == b;
        if (j == i + 1) {
            entry(f, w[i]) = b;
            entry(b, inv(w[i])) = f;
            *progress = true;
        }
        return true;
    }

    // deduction closure over all relators and cosets; false on contradiction
    bool close() {
        bool progress = true;
        while (progress) {
            progress = false;
            for (int32_t c = 1; c <= static_cast<int32_t>(n_); ++c)
                for (const auto& r : relators_)
                    if (!scan(c, r, &progress)) return false;
        }
        return true;
    }

    bool complete() {
        for (int32_t c = 1; c <= static_cast<int32_t>(n_); ++c)
            for (int x = 0; x < ncols_; ++x)
                if (entry(c, x) == 0) return false;
        return true;
    }

    // breadth-first renumbering from `base` for the minimality test
    std::vector<int32_t> renumbered_from(int32_t base) {
        std::vector<int32_t> pos(n_ + 1, 0), order;
        order.reserve(n_);
        order.push_back(base);
        pos[base] = 1;
        for (size_t q = 0; q < order.size(); ++q)
            for (int x = 0; x < ncols_; ++x) {
                int32_t d = entry(order[q], x);
                if (pos[d] == 0) {
                    order.push_back(d);
                    pos[d] = static_cast<int32_t>(order.size());
                }
            }
        std::vector<int32_t> flat;
        flat.reserve(n_ * ncols_);
        for (int32_t c : order)
            for (int x = 0; x < ncols_; ++x) flat.push_back(pos[entry(c, x)]);
        return flat;
    }

    void emit(int ngens) {
        // reject unless numbering from coset 1 is minimal over all bases
        std::vector<int32_t> self = renumbered_from(1);
        for (int32_t base = 2; base <= static_cast<int32_t>(n_); ++base)
            if (renumbered_from(base) < self) return;
        CosetTable t(ngens, n_);
        for (int32_t c = 1; c <= static_cast<int32_t>(n_); ++c)
            for (int x = 0; x < ncols_; ++x) t.set(c, x, entry(c, x));
        results_.push_back(std::move(t));
    }

    // mutates the table; the caller restores around the call
    void dfs(int ngens) {
        if (budget_ == 0) throw std::runtime_error("low-index search exceeded its node budget");
        --budget_;
        if (!close()) return;
        int32_t hc = 0;
        int hx = -1;
        for (int32_t c = 1; c <= static_cast<int32_t>(n_) && hc == 0; ++c)
            for (int x = 0; x < ncols_; ++x)
                if (entry(c, x) == 0) {
                    hc = c;
                    hx = x;
                    break;
                }
        if (hc == 0) {
            emit(ngens);
            return;
        }
        std::vector<int32_t> snapshot(tab_.begin(), tab_.begin() + n_ * ncols_);
        size_t saved_n = n_;
        size_t tries = n_ < max_n_ ? n_ + 1 : n_;
        for (int32_t d = 1; d <= static_cast<int32_t>(tries); ++d) {
            if (d <= static_cast<int32_t>(saved_n) && entry(d, inv(hx)) != 0) continue;
            if (d == static_cast<int32_t>(saved_n) + 1) n_ = d;
            entry(hc, hx) = d;
            entry(d, inv(hx)) = hc;
            dfs(ngens);
            restore(snapshot, saved_n);
        }
    }

    void restore(const std::vector<int32_t>& snapshot, size_t saved_n) {
        std::copy(snapshot.begin(), snapshot.end(), tab_.begin());
        std::fill(tab_.begin() + snapshot.size(), tab_.begin() + n_ * ncols_, 0);
        n_ = saved_n;
    }
};

}  // namespace

std::vector<CosetTable> low_index_subgroups(const Presentation& pres, size_t max_index,
                                            size_t max_nodes) {
    LowIndex li(pres, max_index, max_nodes);
    return li.run(pres.ngens());
}

}  // namespace bcls::fpgroup
