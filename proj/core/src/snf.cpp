#include "bcls/fpgroup.hpp"

#include <algorithm>

namespace bcls::fpgroup {

namespace {

struct SnfWork {
    IntMatrix m;
    bool track;
    IntMatrix u, v;  // u * original * v == m throughout

    explicit SnfWork(const IntMatrix& in, bool with_transforms) : m(in), track(with_transforms) {
        if (track) {
            u = IntMatrix(in.rows, in.rows);
            v = IntMatrix(in.cols, in.cols);
            for (size_t i = 0; i < in.rows; ++i) u.at(i, i) = 1;
            for (size_t j = 0; j < in.cols; ++j) v.at(j, j) = 1;
        }
    }

    void swap_rows(size_t i, size_t j) {
        if (i == j) return;
        for (size_t k = 0; k < m.cols; ++k) std::swap(m.at(i, k), m.at(j, k));
        if (track)
            for (size_t k = 0; k < u.cols; ++k) std::swap(u.at(i, k), u.at(j, k));
    }
    void swap_cols(size_t i, size_t j) {
        if (i == j) return;
        for (size_t k = 0; k < m.rows; ++k) std::swap(m.at(k, i), m.at(k, j));
        if (track)
            for (size_t k = 0; k < v.rows; ++k) std::swap(v.at(k, i), v.at(k, j));
    }
    // row_i += q * row_j
    void add_row(size_t i, size_t j, const Int& q) {
        if (q == 0) return;
        for (size_t k = 0; k < m.cols; ++k) m.at(i, k) += q * m.at(j, k);
        if (track)
            for (size_t k = 0; k < u.cols; ++k) u.at(i, k) += q * u.at(j, k);
    }
    void add_col(size_t i, size_t j, const Int& q) {
        if (q == 0) return;
        for (size_t k = 0; k < m.rows; ++k) m.at(k, i) += q * m.at(k, j);
        if (track)
            for (size_t k = 0; k < v.rows; ++k) v.at(k, i) += q * v.at(k, j);
    }
    void negate_row(size_t i) {
        for (size_t k = 0; k < m.cols; ++k) m.at(i, k) = -m.at(i, k);
        if (track)
            for (size_t k = 0; k < u.cols; ++k) u.at(i, k) = -u.at(i, k);
    }
};

// quotient of rounded division: |a - q*b| <= |b|/2, which keeps the
// remainder sequences of the elimination from blowing up
Int round_div(const Int& a, const Int& b) {
    Int q = a / b;
    Int r = a - q * b;
    if (r != 0) {
        Int two_r = 2 * r;
        if (mpz_cmpabs(two_r.get_mpz_t(), b.get_mpz_t()) > 0) q += (r < 0) == (b < 0) ? 1 : -1;
    }
    return q;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& in, bool with_transforms) {
    SnfWork w(in, with_transforms);
    IntMatrix& m = w.m;
    size_t n = std::min(m.rows, m.cols);

    // phase 1: diagonalize, pivoting on the least absolute value
    for (size_t k = 0; k < n; ++k) {
        for (;;) {
            size_t pi = k, pj = k;
            Int best = 0;
            for (size_t i = k; i < m.rows; ++i)
                for (size_t j = k; j < m.cols; ++j) {
                    const Int& x = m.at(i, j);
                    if (x == 0) continue;
                    if (best == 0 || mpz_cmpabs(x.get_mpz_t(), best.get_mpz_t()) < 0) {
                        best = x;
                        pi = i;
                        pj = j;
                    }
                }
            if (best == 0) goto diagonal_done;  // trailing submatrix is zero
            w.swap_rows(k, pi);
            w.swap_cols(k, pj);
            bool clean = true;
            for (size_t i = k + 1; i < m.rows; ++i) {
                if (m.at(i, k) == 0) continue;
                w.add_row(i, k, -round_div(m.at(i, k), m.at(k, k)));
                if (m.at(i, k) != 0) clean = false;  // remainder becomes the next pivot
            }
            for (size_t j = k + 1; j < m.cols; ++j) {
                if (m.at(k, j) == 0) continue;
                w.add_col(j, k, -round_div(m.at(k, j), m.at(k, k)));
                if (m.at(k, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (m.at(k, k) < 0) w.negate_row(k);
    }
diagonal_done:;

    size_t rank = 0;
    while (rank < n && m.at(rank, rank) != 0) ++rank;

    // phase 2: enforce the divisibility chain by local 2x2 fixes; all the
    // involved rows and columns are zero away from the diagonal, so the
    // operations stay local and entries stay bounded by the diagonal values
    for (bool changed = true; changed;) {
        changed = false;
        for (size_t i = 0; i + 1 < rank; ++i) {
            Int a = m.at(i, i), b = m.at(i + 1, i + 1);
            if (b % a == 0) continue;
            changed = true;
            w.add_row(i, i + 1, 1);  // [[a, b], [0, b]]
            // euclid on row i by column operations until (gcd, 0)
            while (m.at(i, i + 1) != 0) {
                if (m.at(i, i) == 0) {
                    w.swap_cols(i, i + 1);
                    continue;
                }
                if (mpz_cmpabs(m.at(i, i).get_mpz_t(), m.at(i, i + 1).get_mpz_t()) >=
                    0) {
                    w.add_col(i, i + 1, -round_div(m.at(i, i), m.at(i, i + 1)));
                    if (m.at(i, i) == 0) w.swap_cols(i, i + 1);
                } else {
                    w.add_col(i + 1, i, -round_div(m.at(i, i + 1), m.at(i, i)));
                }
            }
            // clear the subdiagonal entry introduced by the row addition
            if (m.at(i + 1, i) != 0) {
                if (m.at(i + 1, i) % m.at(i, i) != 0)
                    throw std::logic_error("smith_normal_form: pivot does not divide below");
                w.add_row(i + 1, i, -Int(m.at(i + 1, i) / m.at(i, i)));
            }
            if (m.at(i, i) < 0) w.negate_row(i);
            if (m.at(i + 1, i + 1) < 0) w.negate_row(i + 1);
        }
    }

    SnfResult res;
    for (size_t k = 0; k < rank; ++k) res.invariant_factors.push_back(m.at(k, k));
    res.rank = rank;
    if (with_transforms) {
        res.U = std::move(w.u);
        res.V = std::move(w.v);
    }
    return res;
}

AbelianInvariants abelianization(const Presentation& pres) {
    IntMatrix m(pres.relators.size(), pres.ngens());
    for (size_t r = 0; r < pres.relators.size(); ++r)
        for (const auto& s : pres.relators[r].syl) m.at(r, s.gen) += s.exp;
    SnfResult snf = smith_normal_form(m);
    AbelianInvariants inv;
    inv.free_rank = pres.ngens() - static_cast<long>(snf.rank);
    for (const auto& d : snf.invariant_factors)
        if (d != 1) inv.factors.push_back(d);
    return inv;
}

}  // namespace bcls::fpgroup
