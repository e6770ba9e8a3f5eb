#include "bcls/modmat.hpp"

#include <algorithm>
#include <stdexcept>

namespace bcls::modmat {

using quadint::make_int;

// --- residue ring -----------------------------------------------------------

ResidueRing::ResidueRing(QIdeal ideal) : ideal_(std::move(ideal)) {
    Int n = ideal_.norm();
    if (!n.fits_slong_p()) throw std::invalid_argument("residue ring too large");
    n_ = n.get_si();
    A_ = ideal_.a.get_si();
    B_ = ideal_.b.get_si();
    C_ = ideal_.c.get_si();
    s0_ = ideal_.field.omega_sq_const();
    s1_ = ideal_.field.omega_sq_lin();
    one_ = reduce_xy(1, 0);
    omega_ = reduce_xy(0, 1);
    tables_ = n_ <= 2048;
    if (tables_) {
        add_tab_.resize(size_t(n_) * n_);
        mul_tab_.resize(size_t(n_) * n_);
        neg_tab_.resize(n_);
        for (long u = 0; u < n_; ++u) {
            long ux = u % A_, uy = u / A_;
            neg_tab_[u] = static_cast<int32_t>(reduce_xy(-ux, -uy));
            for (long v = 0; v < n_; ++v) {
                long vx = v % A_, vy = v / A_;
                add_tab_[size_t(u) * n_ + v] = static_cast<int32_t>(reduce_xy(ux + vx, uy + vy));
                mul_tab_[size_t(u) * n_ + v] = static_cast<int32_t>(mul_raw(u, v));
            }
        }
    }
}

long ResidueRing::reduce_xy(long x, long y) const {
    // subtract multiples of (B, C) to land y in [0, C), then reduce x mod A
    long k = y >= 0 ? y / C_ : -((-y + C_ - 1) / C_);
    y -= k * C_;
    x -= k * B_;
    x %= A_;
    if (x < 0) x += A_;
    return x + A_ * y;
}

long ResidueRing::mul_raw(long u, long v) const {
    long ux = u % A_, uy = u / A_;
    long vx = v % A_, vy = v / A_;
    // (ux + uy w)(vx + vy w) with w^2 = s1 w + s0
    long ww = uy * vy;
    long x = ux * vx + ww * s0_;
    long y = ux * vy + uy * vx + ww * s1_;
    return reduce_xy(x, y);
}

long ResidueRing::reduce(const AlgebraicInt& z) const {
    if (z.field.d != ideal_.field.d) throw std::invalid_argument("element/ring field mismatch");
    Int y = z.b % C_;
    if (y < 0) y += C_;
    Int k = (z.b - y) / C_;
    Int x = (z.a - k * B_) % A_;
    if (x < 0) x += A_;
    return x.get_si() + A_ * y.get_si();
}

long ResidueRing::add(long u, long v) const {
    if (tables_) return add_tab_[size_t(u) * n_ + v];
    return reduce_xy(u % A_ + v % A_, u / A_ + v / A_);
}

long ResidueRing::neg(long u) const {
    if (tables_) return neg_tab_[u];
    return reduce_xy(-(u % A_), -(u / A_));
}

long ResidueRing::mul(long u, long v) const {
    if (tables_) return mul_tab_[size_t(u) * n_ + v];
    return mul_raw(u, v);
}

AlgebraicInt ResidueRing::lift(long u) const {
    return make_int(ideal_.field, u % A_, u / A_);
}

// --- order formulas -----------------------------------------------------------

Int sl2_order(const QIdeal& I) {
    if (I.is_unit_ideal()) throw std::invalid_argument("trivial level");
    Int n = I.norm();
    Int order = n * n * n;
    for (const auto& t : quadint::factor_ideal(I).terms) {
        Int np2 = t.prime.norm() * t.prime.norm();
        if (order % np2 != 0) throw std::logic_error("sl2_order: non-integral local factor");
        order = order / np2 * (np2 - 1);
    }
    return order;
}

Int psl2_order(const QIdeal& I) {
    Int s = sl2_order(I);
    if (I.contains(make_int(I.field, 2, 0))) return s;  // -Id = Id in SL(2, O/I)
    if (s % 2 != 0) throw std::logic_error("psl2_order: odd SL order without 2 in I");
    return s / 2;
}

// --- explicit group enumeration ---------------------------------------------

namespace {

uint64_t pack(const MatModI& m) {
    return (uint64_t(m.a) << 48) | (uint64_t(m.b) << 32) | (uint64_t(m.c) << 16) | uint64_t(m.d);
}

MatModI unpack(uint64_t v) {
    return {long(v >> 48), long((v >> 32) & 0xffff), long((v >> 16) & 0xffff), long(v & 0xffff)};
}

// lexicographically smaller of {M, -M}: a canonical representative mod +-Id
uint64_t pack_pm(const ResidueRing& R, const MatModI& m) {
    uint64_t p = pack(m);
    uint64_t q = pack({R.neg(m.a), R.neg(m.b), R.neg(m.c), R.neg(m.d)});
    return std::min(p, q);
}

MatModI mat_mul(const ResidueRing& R, const MatModI& x, const MatModI& y) {
    return {R.add(R.mul(x.a, y.a), R.mul(x.b, y.c)), R.add(R.mul(x.a, y.b), R.mul(x.b, y.d)),
            R.add(R.mul(x.c, y.a), R.mul(x.d, y.c)), R.add(R.mul(x.c, y.b), R.mul(x.d, y.d))};
}

// breadth-first closure of the generator set under right multiplication
std::vector<uint64_t> closure(const ResidueRing& R, const std::vector<MatModI>& gens,
                              size_t bound) {
    MatModI id{R.one(), R.zero(), R.zero(), R.one()};
    std::unordered_set<uint64_t> seen;
    std::vector<uint64_t> queue;
    seen.insert(pack_pm(R, id));
    queue.push_back(pack_pm(R, id));
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        MatModI m = unpack(queue[qi]);
        for (const auto& g : gens) {
            uint64_t key = pack_pm(R, mat_mul(R, m, g));
            if (seen.insert(key).second) {
                if (seen.size() > bound) throw std::runtime_error("group too large for enumeration bound");
                queue.push_back(key);
            }
        }
    }
    std::sort(queue.begin(), queue.end());
    return queue;
}

std::vector<MatModI> elementary_generators(const ResidueRing& R) {
    long o = R.one(), w = R.omega(), z = R.zero();
    // E12(1), E12(w), E21(1), E21(w): these generate SL2 over any finite
    // commutative ring
    return {
        {o, o, z, o},
        {o, w, z, o},
        {o, z, o, o},
        {o, z, w, o},
    };
}

}  // namespace

FiniteMatrixGroup build_group(const QIdeal& I, size_t bound) {
    if (I.is_unit_ideal()) throw std::invalid_argument("trivial level");
    Int expected = psl2_order(I);
    if (expected > static_cast<long>(bound))
        throw std::runtime_error("psl2 order " + expected.get_str() + " exceeds enumeration bound " +
                                 std::to_string(bound));
    ResidueRing R(I);
    if (R.size() >= (1L << 16)) throw std::runtime_error("residue ring too large to pack");
    FiniteMatrixGroup g{I, {}, elementary_generators(R)};
    g.elements = closure(R, g.generators, bound);
    return g;
}

long cusp_count(FieldLabel f, const QIdeal& I, size_t bound) {
    if (quadint::class_number(f) != 1) throw std::invalid_argument("unsupported: multi-class cusp count");
    FiniteMatrixGroup g = build_group(I, bound);
    ResidueRing R(I);
    // stabilizer of the cusp at infinity: translations t: x -> x+1,
    // u: x -> x+w, and diag(v, v^-1) for each unit v
    std::vector<MatModI> stab = {
        {R.one(), R.one(), R.zero(), R.one()},
        {R.one(), R.omega(), R.zero(), R.one()},
    };
    for (const auto& v : quadint::units(f)) {
        // for a unit, v^-1 = conj(v) (norm 1)
        stab.push_back({R.reduce(v), R.zero(), R.zero(), R.reduce(quadint::conj(v))});
    }
    std::vector<uint64_t> b = closure(R, stab, bound);
    if (g.order() % b.size() != 0) throw std::logic_error("cusp stabilizer order does not divide group order");
    return static_cast<long>(g.order() / b.size());
}

// --- torsion ---------------------------------------------------------------

namespace {

// lattice points of I with both coordinates within |height|
std::vector<AlgebraicInt> ideal_points_in_box(const QIdeal& I, long height) {
    std::vector<AlgebraicInt> out;
    long A = I.a.get_si(), B = I.b.get_si(), C = I.c.get_si();
    for (long t = -height / C - 1; t <= height / C + 1; ++t) {
        long y = t * C;
        if (y < -height || y > height) continue;
        // x = s*A + t*B
        for (long s = (-height - t * B) / A - 2; s * A + t * B <= height; ++s) {
            long x = s * A + t * B;
            if (x < -height) continue;
            out.push_back(make_int(I.field, x, y));
        }
    }
    // smallest points first, so the returned witness has small entries
    std::sort(out.begin(), out.end(), [](const AlgebraicInt& p, const AlgebraicInt& q) {
        Int pa = abs(p.a), pb = abs(p.b), qa = abs(q.a), qb = abs(q.b);
        Int hp = pa > pb ? pa : pb, hq = qa > qb ? qa : qb;
        if (hp != hq) return hp < hq;
        if (p.a != q.a) return p.a < q.a;
        return p.b < q.b;
    });
    return out;
}

}  // namespace

std::optional<TorsionWitness> torsion_in_gamma(FieldLabel f, const QIdeal& I, long height) {
    if (I.is_unit_ideal()) throw std::invalid_argument("trivial level");
    AlgebraicInt two = make_int(f, 2, 0), three = make_int(f, 3, 0);
    bool has2 = I.contains(two), has3 = I.contains(three);
    if (!has2 && !has3) return std::nullopt;  // elliptic traces are 0, +-1

    auto points = ideal_points_in_box(I, height);
    AlgebraicInt one = make_int(f, 1, 0);
    // trace 0 gives order 2 (needs 2 in I); trace -1 gives order 3 (needs 3
    // in I); traces +1 are the negatives of the trace -1 witnesses
    for (long tr : {0L, -1L}) {
        if (tr == 0 && !has2) continue;
        if (tr == -1 && !has3) continue;
        AlgebraicInt trace = make_int(f, tr, 0);
        for (const auto& pa : points) {
            AlgebraicInt a = one + pa;
            if (abs(a.a) > height || abs(a.b) > height) continue;
            AlgebraicInt d = trace - a;
            if (!I.contains(d - one)) continue;
            AlgebraicInt det_defect = a * d - one;  // = b*c for det 1
            if (det_defect.is_zero()) {
                int order = tr == 0 ? 2 : 3;
                return TorsionWitness{a, make_int(f, 0, 0), make_int(f, 0, 0), d, order};
            }
            for (const auto& b : points) {
                if (b.is_zero()) continue;
                auto c = quadint::divide_exact(det_defect, b);
                if (!c) continue;
                if (abs(c->a) > height || abs(c->b) > height) continue;
                if (!I.contains(*c)) continue;
                return TorsionWitness{a, b, *c, d, tr == 0 ? 2 : 3};
            }
        }
    }
    return std::nullopt;
}

}  // namespace bcls::modmat
