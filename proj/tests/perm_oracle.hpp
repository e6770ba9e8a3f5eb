#pragma once

// Test-side permutation-group oracle, independent of the coset-enumeration
// implementation it checks: plain closure of permutation sets, point
// stabilizers, commutator subgroups, and abelian invariants recovered from
// element-order statistics.

#include "bcls/fpgroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

namespace perm_oracle {

using Perm = std::vector<int>;  // images of 0..n-1

inline Perm identity(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

inline Perm compose(const Perm& a, const Perm& b) {  // apply a, then b
    Perm c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
    return c;
}

inline Perm invert(const Perm& a) {
    Perm c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[a[i]] = static_cast<int>(i);
    return c;
}

inline std::vector<Perm> closure(const std::vector<Perm>& gens, size_t cap = 2'000'000) {
    if (gens.empty()) return {};
    std::set<Perm> seen;
    std::vector<Perm> queue = {identity(static_cast<int>(gens[0].size()))};
    seen.insert(queue[0]);
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        for (const auto& g : gens) {
            Perm next = compose(queue[qi], g);
            if (seen.insert(next).second) {
                if (seen.size() > cap) throw std::runtime_error("perm closure cap exceeded");
                queue.push_back(std::move(next));
            }
        }
    }
    return queue;
}

// the column permutations of a closed coset table (0-based points)
inline std::vector<Perm> table_perms(const bcls::fpgroup::CosetTable& t) {
    std::vector<Perm> out;
    for (int g = 0; g < t.ngens(); ++g) {
        Perm p(t.size());
        for (size_t c = 1; c <= t.size(); ++c) p[c - 1] = t.get(c, 2 * g) - 1;
        out.push_back(std::move(p));
    }
    return out;
}

inline Perm eval_word(const std::vector<Perm>& gen_perms, const bcls::fpgroup::Word& w) {
    Perm acc = identity(static_cast<int>(gen_perms.at(0).size()));
    for (const auto& s : w.syl) {
        Perm base = s.exp > 0 ? gen_perms.at(s.gen) : invert(gen_perms.at(s.gen));
        for (long k = 0; k < std::labs(s.exp); ++k) acc = compose(acc, base);
    }
    return acc;
}

// commutator subgroup of a closed permutation group given by its elements
inline std::vector<Perm> commutator_subgroup(const std::vector<Perm>& elements) {
    std::vector<Perm> comms;
    for (const auto& g : elements)
        for (const auto& h : elements)
            comms.push_back(compose(compose(compose(g, h), invert(g)), invert(h)));
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    return closure(comms);
}

inline long element_order(const Perm& p) {
    Perm acc = p;
    long n = 1;
    Perm id = identity(static_cast<int>(p.size()));
    while (acc != id) {
        acc = compose(acc, p);
        ++n;
    }
    return n;
}

// Invariant factors of a finite abelian group from its element orders: for
// each prime p, the partition of the p-part is recovered from the counts
// s_k = #{x : x^(p^k) = 1} (log_p s_k = sum_i min(lambda_i, k)).
inline std::vector<long> abelian_invariants_from_orders(const std::vector<long>& orders) {
    long n = static_cast<long>(orders.size());
    std::map<long, std::vector<long>> partitions;  // prime -> lambda (descending)
    for (long p = 2; p <= n; ++p) {
        bool prime = p >= 2;
        for (long q = 2; q * q <= p; ++q)
            if (p % q == 0) prime = false;
        if (!prime || n % p != 0) continue;
        std::vector<long> log_s;  // log_p of #{x : x^(p^k) = 1}
        for (long k = 0;; ++k) {
            long pk = 1;
            for (long i = 0; i < k; ++i) pk *= p;
            long count = 0;
            for (long o : orders)
                if (pk % o == 0) ++count;
            long lg = 0, c = count;
            while (c > 1) {
                if (c % p != 0) throw std::runtime_error("non-p-power solution count");
                c /= p;
                ++lg;
            }
            log_s.push_back(lg);
            if (k > 0 && log_s[k] == log_s[k - 1]) break;
        }
        // lambda_i >= k occurs (log_s[k] - log_s[k-1]) times
        std::vector<long> lambda;
        for (size_t k = 1; k < log_s.size(); ++k) {
            long mult_ge_k = log_s[k] - log_s[k - 1];
            while (static_cast<long>(lambda.size()) < mult_ge_k) lambda.push_back(0);
            for (long i = 0; i < mult_ge_k; ++i) ++lambda[i];
        }
        if (!lambda.empty()) partitions[p] = lambda;
    }
    // merge p-parts into invariant factors d_1 | d_2 | ... (largest last)
    size_t rows = 0;
    for (auto& [p, lam] : partitions) rows = std::max(rows, lam.size());
    std::vector<long> factors(rows, 1);
    for (auto& [p, lam] : partitions)
        for (size_t i = 0; i < lam.size(); ++i) {
            long pk = 1;
            for (long e = 0; e < lam[i]; ++e) pk *= p;
            factors[i] *= pk;
        }
    std::sort(factors.begin(), factors.end());
    return factors;  // ascending, so d_1 | d_2 | ...
}

// orders of the p^k-torsion counting argument require the full element list
inline std::vector<long> orders_of(const std::vector<Perm>& elements) {
    std::vector<long> out;
    for (const auto& e : elements) out.push_back(element_order(e));
    return out;
}

}  // namespace perm_oracle
