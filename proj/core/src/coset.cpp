#include "bcls/fpgroup.hpp"

#include <algorithm>
#include <chrono>

// Todd-Coxeter coset enumeration. The machinery follows the classical
// presentation (union-find coincidence queue, scan-and-fill relator
// processing): HLT with row filling and a lookahead pass at the coset limit,
// or Felsch with a deduction stack, selected by flag.
namespace bcls::fpgroup {

namespace {

constexpr int32_t kUndef = 0;

class Enumerator {
  public:
    Enumerator(const Presentation& pres, const std::vector<Word>& subgroup_gens,
               const EnumLimits& limits, Strategy strategy)
        : ngens_(pres.ngens()),
          ncols_(2 * pres.ngens()),
          limits_(limits),
          strategy_(strategy),
          start_(std::chrono::steady_clock::now()) {
        for (const auto& r : pres.relators) {
            auto letters = to_letters(r);
            if (!letters.empty()) relators_.push_back(std::move(letters));
        }
        for (const auto& g : subgroup_gens) {
            auto letters = to_letters(g);
            if (!letters.empty()) subgroup_.push_back(std::move(letters));
        }
        if (strategy_ == Strategy::Felsch) build_rotation_index();
        new_coset();  // coset 1
    }

    TcResult run() {
        if (strategy_ == Strategy::HltLookahead) return run_hlt();
        return run_felsch();
    }

  private:
    int ngens_, ncols_;
    EnumLimits limits_;
    Strategy strategy_;
    std::chrono::steady_clock::time_point start_;

    std::vector<std::vector<int>> relators_;
    std::vector<std::vector<int>> subgroup_;
    // Felsch: all cyclic rotations of relators and inverted relators,
    // bucketed by first letter
    std::vector<std::vector<std::vector<int>>> rotations_by_letter_;

    std::vector<int32_t> tab_;  // (allocated) x ncols_, coset c row at (c-1)*ncols_
    std::vector<int32_t> p_;    // union-find, p_[c] <= c; p_[0] unused
    size_t alive_ = 0;
    size_t total_defined_ = 0;
    bool overflowed_ = false;

    std::vector<std::pair<int32_t, int>> deductions_;
    std::vector<int32_t> coincidence_queue_;

    static int inv(int letter) { return letter ^ 1; }

    size_t allocated() const { return p_.empty() ? 0 : p_.size() - 1; }

    int32_t& entry(int32_t coset, int letter) { return tab_[(coset - 1) * size_t(ncols_) + letter]; }
    int32_t entry(int32_t coset, int letter) const { return tab_[(coset - 1) * size_t(ncols_) + letter]; }

    bool alive(int32_t c) const { return p_[c] == c; }

    int32_t rep(int32_t c) {
        int32_t r = c;
        while (p_[r] != r) r = p_[r];
        while (p_[c] != r) {
            int32_t next = p_[c];
            p_[c] = r;
            c = next;
        }
        return r;
    }

    bool time_exceeded() {
        auto now = std::chrono::steady_clock::now();
        return std::chrono::duration<double>(now - start_).count() > limits_.max_seconds;
    }

    int32_t new_coset() {
        if (p_.empty()) p_.push_back(0);  // index 0 unused
        p_.push_back(static_cast<int32_t>(p_.size()));
        tab_.resize(tab_.size() + ncols_, kUndef);
        ++alive_;
        ++total_defined_;
        return static_cast<int32_t>(p_.size() - 1);
    }

    void set_pair(int32_t a, int letter, int32_t b) {
        entry(a, letter) = b;
        entry(b, inv(letter)) = a;
        if (strategy_ == Strategy::Felsch) {
            deductions_.push_back({a, letter});
            deductions_.push_back({b, inv(letter)});
        }
    }

    // define a new coset at (a, letter); returns 0 on overflow
    int32_t define(int32_t a, int letter) {
        if (allocated() >= limits_.max_cosets) {
            overflowed_ = true;
            return 0;
        }
        int32_t b = new_coset();
        set_pair(a, letter, b);
        return b;
    }

    void merge(int32_t a, int32_t b) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        p_[b] = a;
        --alive_;
        coincidence_queue_.push_back(b);
    }

    void coincidence(int32_t a, int32_t b) {
        merge(a, b);
        while (!coincidence_queue_.empty()) {
            int32_t dead = coincidence_queue_.back();
            coincidence_queue_.pop_back();
            for (int x = 0; x < ncols_; ++x) {
                int32_t delta = entry(dead, x);
                if (delta == kUndef) continue;
                entry(dead, x) = kUndef;
                entry(delta, inv(x)) = kUndef;
                int32_t mu = rep(dead);
                int32_t nu = rep(delta);
                if (int32_t e = entry(mu, x); e != kUndef) {
                    merge(nu, e);
                } else if (int32_t e2 = entry(nu, inv(x)); e2 != kUndef) {
                    merge(mu, e2);
                } else {
                    set_pair(mu, x, nu);
                }
            }
        }
    }

    // scan word at coset; fill gaps with new definitions when fill == true
    void scan(int32_t alpha, const std::vector<int>& w, bool fill) {
        int32_t f = alpha;
        size_t i = 0;
        int32_t b = alpha;
        size_t j = w.size();  // backward position: suffix w[j..) consumed
        for (;;) {
            while (i < j) {
                int32_t next = entry(f, w[i]);
                if (next == kUndef) break;
                f = next;
                ++i;
            }
            if (i >= j) {
                if (f != b) coincidence(f, b);
                return;
            }
            while (j > i) {
                int32_t prev = entry(b, inv(w[j - 1]));
                if (prev == kUndef) break;
                b = prev;
                --j;
            }
            if (j == i) {
                if (f != b) coincidence(f, b);
                return;
            }
            if (j == i + 1) {
                set_pair(f, w[i], b);  // deduction closes the scan
                return;
            }
            if (!fill) return;
            if (define(f, w[i]) == 0) return;  // overflow
        }
    }

    void build_rotation_index() {
        rotations_by_letter_.assign(ncols_, {});
        for (const auto& r : relators_) {
            for (int side = 0; side < 2; ++side) {
                std::vector<int> w = r;
                if (side == 1) {
                    std::reverse(w.begin(), w.end());
                    for (auto& l : w) l = inv(l);
                }
                for (size_t k = 0; k < w.size(); ++k) {
                    std::vector<int> rot(w.begin() + k, w.end());
                    rot.insert(rot.end(), w.begin(), w.begin() + k);
                    auto& bucket = rotations_by_letter_[rot[0]];
                    if (std::find(bucket.begin(), bucket.end(), rot) == bucket.end())
                        bucket.push_back(rot);
                }
            }
        }
    }

    void process_deductions() {
        while (!deductions_.empty()) {
            auto [c, x] = deductions_.back();
            deductions_.pop_back();
            if (!alive(c)) c = rep(c);
            for (const auto& rot : rotations_by_letter_[x]) {
                scan(c, rot, false);
                if (!alive(c)) break;
            }
            if (overflowed_ || time_exceeded()) {
                overflowed_ = true;
                return;
            }
        }
    }

    // renumber alive cosets contiguously; returns the new index of `track`
    int32_t compact(int32_t track) {
        std::vector<int32_t> remap(p_.size(), 0);
        int32_t next = 0;
        for (int32_t c = 1; c < static_cast<int32_t>(p_.size()); ++c)
            if (alive(c)) remap[c] = ++next;
        std::vector<int32_t> ntab(size_t(next) * ncols_, kUndef);
        for (int32_t c = 1; c < static_cast<int32_t>(p_.size()); ++c) {
            if (!alive(c)) continue;
            for (int x = 0; x < ncols_; ++x) {
                int32_t d = entry(c, x);
                ntab[(remap[c] - 1) * size_t(ncols_) + x] = d == kUndef ? kUndef : remap[rep(d)];
            }
        }
        tab_ = std::move(ntab);
        p_.assign(size_t(next) + 1, 0);
        for (int32_t c = 1; c <= next; ++c) p_[c] = c;
        alive_ = next;
        return track == 0 ? 0 : remap[track];
    }

    // scan all relators at all alive cosets without filling
    void lookahead() {
        for (int32_t c = 1; c < static_cast<int32_t>(p_.size()); ++c) {
            if (!alive(c)) continue;
            for (const auto& r : relators_) {
                scan(c, r, false);
                if (!alive(c)) break;
            }
            if (time_exceeded()) {
                overflowed_ = true;
                return;
            }
        }
    }

    TcResult run_hlt() {
        for (const auto& g : subgroup_) {
            scan(1, g, true);
            if (overflowed_) return finish_overflow();
        }
        int32_t alpha = 1;
        while (alpha < static_cast<int32_t>(p_.size())) {
            if (alive(alpha)) {
                for (const auto& r : relators_) {
                    scan(alpha, r, true);
                    if (!alive(alpha) || overflowed_) break;
                }
                if (alive(alpha) && !overflowed_) {
                    for (int x = 0; x < ncols_ && alive(alpha); ++x)
                        if (entry(alpha, x) == kUndef && define(alpha, x) == 0) break;
                }
            }
            if (overflowed_) {
                // lookahead: deduction/coincidence pass over the full table,
                // then compact; give up unless it recovers enough space
                overflowed_ = false;
                size_t before = alive_;
                lookahead();
                if (overflowed_) return finish_overflow();
                alpha = compact(rep(alpha));
                if (alive_ >= limits_.max_cosets || before - alive_ < before / 20)
                    return finish_overflow();
                continue;  // reprocess the interrupted coset
            }
            if (time_exceeded()) return finish_overflow();
            ++alpha;
        }
        return finish_closed();
    }

    TcResult run_felsch() {
        for (const auto& g : subgroup_) {
            scan(1, g, true);
            process_deductions();
            if (overflowed_) return finish_overflow();
        }
        for (;;) {
            process_deductions();
            if (overflowed_ || time_exceeded()) return finish_overflow();
            // first undefined entry in coset order
            int32_t hole_c = 0;
            int hole_x = -1;
            for (int32_t c = 1; c < static_cast<int32_t>(p_.size()) && hole_c == 0; ++c) {
                if (!alive(c)) continue;
                for (int x = 0; x < ncols_; ++x)
                    if (entry(c, x) == kUndef) {
                        hole_c = c;
                        hole_x = x;
                        break;
                    }
            }
            if (hole_c == 0) return finish_closed();
            if (define(hole_c, hole_x) == 0) return finish_overflow();
        }
    }

    TcResult finish_overflow() {
        TcResult res;
        res.status = TcResult::Status::Overflow;
        res.total_cosets_defined = total_defined_;
        return res;
    }

    TcResult finish_closed() {
        compact(0);
        // standardize: renumber cosets in breadth-first discovery order so
        // the table is independent of enumeration history
        size_t n = alive_;
        std::vector<int32_t> order(n + 1, 0), pos(n + 1, 0);
        size_t seen = 0;
        order[++seen] = 1;
        pos[1] = 1;
        for (size_t q = 1; q <= seen && seen < n; ++q) {
            int32_t c = order[q];
            for (int x = 0; x < ncols_ && seen < n; ++x) {
                int32_t d = entry(c, x);
                if (d != kUndef && pos[d] == 0) {
                    order[++seen] = d;
                    pos[d] = static_cast<int32_t>(seen);
                }
            }
        }
        TcResult res;
        res.status = TcResult::Status::Closed;
        res.index = n;
        res.total_cosets_defined = total_defined_;
        res.table = CosetTable(ngens_, n);
        for (size_t c = 1; c <= n; ++c)
            for (int x = 0; x < ncols_; ++x) res.table.set(pos[c], x, pos[entry(static_cast<int32_t>(c), x)]);
        return res;
    }
};

}  // namespace

TcResult todd_coxeter(const Presentation& pres, const std::vector<Word>& subgroup_gens,
                      const EnumLimits& limits, Strategy strategy) {
    for (const auto& w : subgroup_gens)
        for (const auto& s : w.syl)
            if (s.gen < 0 || s.gen >= pres.ngens())
                throw std::invalid_argument("todd_coxeter: subgroup generator out of range");
    Enumerator e(pres, subgroup_gens, limits, strategy);
    return e.run();
}

CertifyResult certify_trivializing_slopes(const Presentation& pres, const std::vector<Word>& slopes,
                                          const EnumLimits& limits) {
    Presentation quotient = add_relators(pres, slopes);
    TcResult r = todd_coxeter(quotient, {}, limits);
    if (!r.closed()) return CertifyResult::Unknown;
    return r.index == 1 ? CertifyResult::Trivial : CertifyResult::NonTrivial;
}

}  // namespace bcls::fpgroup
