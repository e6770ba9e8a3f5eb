#include "bcls/quadint.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace bcls::quadint {

bool is_square_free(long d) {
    if (d <= 0) return false;
    for (long q = 2; q * q <= d; ++q)
        if (d % (q * q) == 0) return false;
    return true;
}

FieldLabel make_field(long d) {
    if (!is_square_free(d))
        throw std::invalid_argument("field label requires a square-free positive d, got " +
                                    std::to_string(d));
    return FieldLabel{d};
}

static void require_same_field(const AlgebraicInt& z, const AlgebraicInt& w) {
    if (z.field.d != w.field.d) throw std::invalid_argument("mixed fields in element arithmetic");
}

AlgebraicInt make_int(FieldLabel f, Int a, Int b) { return AlgebraicInt{f, std::move(a), std::move(b)}; }
AlgebraicInt make_int(FieldLabel f, long a, long b) { return AlgebraicInt{f, Int(a), Int(b)}; }

AlgebraicInt operator+(const AlgebraicInt& z, const AlgebraicInt& w) {
    require_same_field(z, w);
    return {z.field, z.a + w.a, z.b + w.b};
}

AlgebraicInt operator-(const AlgebraicInt& z, const AlgebraicInt& w) {
    require_same_field(z, w);
    return {z.field, z.a - w.a, z.b - w.b};
}

AlgebraicInt operator-(const AlgebraicInt& z) { return {z.field, -z.a, -z.b}; }

AlgebraicInt operator*(const AlgebraicInt& z, const AlgebraicInt& w) {
    require_same_field(z, w);
    // (a1 + b1 w)(a2 + b2 w) with w^2 = s1 w + s0
    Int cross = z.a * w.b + z.b * w.a;
    Int ww = z.b * w.b;
    return {z.field, z.a * w.a + ww * z.field.omega_sq_const(), cross + ww * z.field.omega_sq_lin()};
}

Int norm(const AlgebraicInt& z) {
    // N(a + b w) = a^2 + d b^2, or a^2 + a b + ((d+1)/4) b^2 for half-integral w
    if (z.field.half_integral())
        return z.a * z.a + z.a * z.b + Int(z.field.norm_omega()) * z.b * z.b;
    return z.a * z.a + Int(z.field.d) * z.b * z.b;
}

Int trace(const AlgebraicInt& z) { return 2 * z.a + Int(z.field.trace_omega()) * z.b; }

AlgebraicInt conj(const AlgebraicInt& z) {
    // conj(w) = -w, or 1 - w in the half-integral case
    if (z.field.half_integral()) return {z.field, z.a + z.b, -z.b};
    return {z.field, z.a, -z.b};
}

std::optional<AlgebraicInt> divide_exact(const AlgebraicInt& z, const AlgebraicInt& w) {
    require_same_field(z, w);
    if (w.is_zero()) return std::nullopt;
    Int n = norm(w);
    AlgebraicInt num = z * conj(w);
    if (num.a % n != 0 || num.b % n != 0) return std::nullopt;
    return AlgebraicInt{z.field, num.a / n, num.b / n};
}

bool is_unit(const AlgebraicInt& z) { return norm(z) == 1; }

std::vector<AlgebraicInt> units(FieldLabel f) {
    std::vector<AlgebraicInt> us = {make_int(f, 1, 0), make_int(f, -1, 0)};
    if (f.d == 1) {
        us.push_back(make_int(f, 0, 1));
        us.push_back(make_int(f, 0, -1));
    } else if (f.d == 3) {
        // the six units: +-1, +-w, +-(w-1), with w a primitive sixth root of unity
        us.push_back(make_int(f, 0, 1));
        us.push_back(make_int(f, 0, -1));
        us.push_back(make_int(f, -1, 1));
        us.push_back(make_int(f, 1, -1));
    }
    return us;
}

bool is_associate(const AlgebraicInt& z, const AlgebraicInt& w) {
    for (const auto& u : units(z.field))
        if (z * u == w) return true;
    return false;
}

// --- HNF machinery ---------------------------------------------------------

namespace {

struct Row {
    Int x, y;  // x + y*w
};

// Row HNF of a rank-2 lattice given by generating rows.  Returns (a, b, c)
// with lattice = (a,0)Z + (b,c)Z, a,c > 0, 0 <= b < a.
struct Hnf {
    Int a, b, c;
};

Hnf row_hnf(std::vector<Row> rows, const char* what) {
    // fold second coordinates to their gcd, tracking the first coordinate
    Int vb = 0, vc = 0;
    for (const auto& r : rows) {
        if (r.y == 0) continue;
        if (vc == 0) {
            vb = r.x;
            vc = r.y;
        } else {
            Int g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), vc.get_mpz_t(), r.y.get_mpz_t());
            Int nb = s * vb + t * r.x;
            vb = nb;
            vc = g;
        }
    }
    if (vc < 0) {
        vb = -vb;
        vc = -vc;
    }
    Int a = 0;
    for (const auto& r : rows) {
        Int x = r.x;
        if (r.y != 0) {
            if (vc == 0 || r.y % vc != 0)
                throw std::logic_error("row_hnf: inconsistent second-coordinate gcd");
            x -= (r.y / vc) * vb;
        }
        if (x != 0) {
            Int g;
            mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), x.get_mpz_t());
            a = g;
        }
    }
    if (a == 0 || vc == 0) throw std::invalid_argument(std::string(what) + ": lattice is not full rank");
    Int b = vb % a;
    if (b < 0) b += a;
    return {a, b, vc};
}

QIdeal ideal_from_rows(FieldLabel f, std::vector<Row> rows, const char* what) {
    Hnf h = row_hnf(std::move(rows), what);
    return QIdeal{f, h.a, h.b, h.c};
}

}  // namespace

bool QIdeal::contains(const AlgebraicInt& z) const {
    if (z.field.d != field.d) throw std::invalid_argument("element/ideal field mismatch");
    if (z.b % c != 0) return false;
    Int t = z.b / c;
    Int x = z.a - t * b;
    return x % a == 0;
}

bool QIdeal::contains(const QIdeal& other) const {
    if (other.field.d != field.d) throw std::invalid_argument("ideal field mismatch");
    return contains(make_int(field, other.a, Int(0))) && contains(make_int(field, other.b, other.c));
}

int compare(const QIdeal& I, const QIdeal& J) {
    if (int r = cmp(I.a, J.a); r != 0) return r;
    if (int r = cmp(I.b, J.b); r != 0) return r;
    return cmp(I.c, J.c);
}

QIdeal ideal_from_gens(FieldLabel f, const std::vector<AlgebraicInt>& gens) {
    std::vector<Row> rows;
    AlgebraicInt w = make_int(f, 0, 1);
    bool nonzero = false;
    for (const auto& g : gens) {
        if (g.field.d != f.d) throw std::invalid_argument("generator/field mismatch");
        if (g.is_zero()) continue;
        nonzero = true;
        AlgebraicInt gw = g * w;
        rows.push_back({g.a, g.b});
        rows.push_back({gw.a, gw.b});
    }
    if (!nonzero) throw std::invalid_argument("zero ideal");
    return ideal_from_rows(f, std::move(rows), "ideal_from_gens");
}

QIdeal principal_ideal(const AlgebraicInt& z) { return ideal_from_gens(z.field, {z}); }

QIdeal unit_ideal(FieldLabel f) { return QIdeal{f, 1, 0, 1}; }

Int ideal_norm(const QIdeal& I) { return I.norm(); }

QIdeal mul(const QIdeal& I, const QIdeal& J) {
    if (I.field.d != J.field.d) throw std::invalid_argument("ideal field mismatch");
    FieldLabel f = I.field;
    // products of Z-basis elements; the result is w-closed because I and J are
    AlgebraicInt i1 = make_int(f, I.a, Int(0)), i2 = make_int(f, I.b, I.c);
    AlgebraicInt j1 = make_int(f, J.a, Int(0)), j2 = make_int(f, J.b, J.c);
    std::vector<Row> rows;
    for (const auto& p : {i1 * j1, i1 * j2, i2 * j1, i2 * j2}) rows.push_back({p.a, p.b});
    return ideal_from_rows(f, std::move(rows), "ideal product");
}

QIdeal conj_ideal(const QIdeal& I) {
    // conjugation is additive, so conjugating a Z-basis gives a Z-basis
    AlgebraicInt b1 = conj(make_int(I.field, I.a, Int(0)));
    AlgebraicInt b2 = conj(make_int(I.field, I.b, I.c));
    return ideal_from_rows(I.field, {{b1.a, b1.b}, {b2.a, b2.b}}, "conj_ideal");
}

bool is_ideal_lattice(const QIdeal& I) {
    AlgebraicInt w = make_int(I.field, 0, 1);
    AlgebraicInt b1 = make_int(I.field, I.a, Int(0));
    AlgebraicInt b2 = make_int(I.field, I.b, I.c);
    return I.contains(b1 * w) && I.contains(b2 * w);
}

// --- factorization ----------------------------------------------------------

namespace {

std::vector<std::pair<Int, long>> factor_rational(Int n) {
    std::vector<std::pair<Int, long>> out;
    if (n < 0) n = -n;
    for (Int p = 2; p * p <= n && p <= 1'000'000; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        long e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) {
        // trial division ran out; accept a prime cofactor, refuse otherwise
        if (mpz_probab_prime_p(n.get_mpz_t(), 40) == 0)
            throw std::invalid_argument("ideal norm " + n.get_str() + " is out of factoring range");
        out.emplace_back(n, 1);
    }
    return out;
}

// roots of the minimal polynomial of w modulo p
std::vector<Int> omega_roots_mod_p(FieldLabel f, const Int& p) {
    std::vector<Int> roots;
    for (Int r = 0; r < p; ++r) {
        Int v = f.half_integral() ? Int(r * r - r + f.norm_omega()) : Int(r * r + f.d);
        if (v % p == 0) roots.push_back(r);
    }
    return roots;
}

}  // namespace

std::vector<QIdeal> primes_above(FieldLabel f, const Int& p) {
    if (p < 2) throw std::invalid_argument("primes_above: p must be a rational prime");
    if (!p.fits_slong_p() || p > 100'000'000)
        throw std::invalid_argument("primes_above: p = " + p.get_str() + " is out of supported range");
    int chi = mpz_kronecker_si(Int(f.discriminant()).get_mpz_t(), p.get_si());
    AlgebraicInt pe = make_int(f, p, Int(0));
    if (chi == -1) return {principal_ideal(pe)};  // inert
    auto roots = omega_roots_mod_p(f, p);
    std::vector<QIdeal> out;
    for (const auto& r : roots) {
        // P = <p, w - r>
        out.push_back(ideal_from_gens(f, {pe, make_int(f, -r, Int(1))}));
    }
    if (chi == 0) {
        if (out.size() != 1) throw std::logic_error("ramified prime expects one double root");
        return out;  // ramified: p O = P^2
    }
    if (out.size() != 2) throw std::logic_error("split prime expects two roots");
    if (compare(out[0], out[1]) > 0) std::swap(out[0], out[1]);
    return out;
}

PrimeFactorization factor_ideal(const QIdeal& I) {
    if (I.norm() <= 0) throw std::invalid_argument("factor_ideal: zero ideal");
    PrimeFactorization fac;
    if (I.is_unit_ideal()) return fac;
    for (const auto& [p, e_of_norm] : factor_rational(I.norm())) {
        for (const auto& P : primes_above(I.field, p)) {
            // valuation of I at P: the largest k with I contained in P^k
            long v = 0;
            QIdeal power = P;
            while (power.contains(I)) {
                ++v;
                power = mul(power, P);
            }
            if (v > 0) fac.terms.push_back({P, v});
        }
        (void)e_of_norm;
    }
    // verify the round trip: the product of prime powers reproduces I exactly
    QIdeal prod = unit_ideal(I.field);
    for (const auto& t : fac.terms)
        for (long k = 0; k < t.exponent; ++k) prod = mul(prod, t.prime);
    if (!(prod == I)) throw std::logic_error("factor_ideal: prime powers do not reproduce the ideal");
    return fac;
}

long class_number(FieldLabel f) {
    // count reduced primitive binary quadratic forms (A,B,C) of the field
    // discriminant D < 0: B^2 - 4AC = D, |B| <= A <= C, gcd(A,B,C) = 1,
    // and B >= 0 whenever |B| = A or A = C
    long D = f.discriminant();
    long count = 0;
    for (long A = 1; 3 * A * A <= -D; ++A) {
        for (long B = -A; B <= A; ++B) {
            long num = B * B - D;
            if (num % (4 * A) != 0) continue;
            long C = num / (4 * A);
            if (C < A) continue;
            if ((B < 0) && (B == -A || A == C)) continue;
            long g = std::gcd(std::gcd(std::abs(A), std::abs(B)), std::abs(C));
            if (g != 1) continue;
            ++count;
        }
    }
    return count;
}

std::vector<AlgebraicInt> elements_of_norm(FieldLabel f, const Int& n) {
    std::vector<AlgebraicInt> out;
    if (n < 0) return out;
    if (n == 0) {
        out.push_back(make_int(f, 0, 0));
        return out;
    }
    auto push_up_to_sign = [&](Int a, Int b) {
        AlgebraicInt z = make_int(f, std::move(a), std::move(b));
        if (z.a < 0 || (z.a == 0 && z.b < 0)) z = -z;
        if (std::find(out.begin(), out.end(), z) == out.end()) out.push_back(z);
    };
    if (!f.half_integral()) {
        // a^2 + d b^2 = n
        for (Int b = 0; Int(f.d) * b * b <= n; ++b) {
            Int rem = n - Int(f.d) * b * b;
            Int a = sqrt(rem);
            if (a * a != rem) continue;
            push_up_to_sign(a, b);
            push_up_to_sign(a, -b);
            push_up_to_sign(-a, b);
            push_up_to_sign(-a, -b);
        }
    } else {
        // (2a+b)^2 + d b^2 = 4n
        for (Int b = 0; Int(f.d) * b * b <= 4 * n; ++b) {
            Int rem = 4 * n - Int(f.d) * b * b;
            Int s = sqrt(rem);
            if (s * s != rem) continue;
            for (const Int& sb : {b, Int(-b)}) {
                for (const Int& ss : {s, Int(-s)}) {
                    Int twoa = ss - sb;
                    if (twoa % 2 != 0) continue;
                    push_up_to_sign(twoa / 2, sb);
                }
                if (b == 0) break;
            }
        }
    }
    return out;
}

std::optional<AlgebraicInt> is_principal(const QIdeal& I) {
    for (const auto& z : elements_of_norm(I.field, I.norm()))
        if (principal_ideal(z) == I) return z;
    return std::nullopt;
}

QIdeal canonical_up_to_conjugation(const QIdeal& I) {
    QIdeal J = conj_ideal(I);
    return compare(I, J) <= 0 ? I : J;
}

// --- text I/O ----------------------------------------------------------------

namespace {

struct ElemParser {
    FieldLabel f;
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("element '" + s + "': " + msg + " at position " + std::to_string(i));
    }

    Int parse_uint() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail("expected integer");
        return Int(s.substr(start, i - start));
    }

    // returns the term value as (p, q) meaning p + q*sqrt(-d), both doubled
    // later; internally we work in the basis (1, sqrt(-d)) scaled by 2 to
    // accommodate half-integral inputs uniformly.
    void parse_term(Int sign, Int& two_a, Int& two_b) {
        skip_ws();
        Int coef = 1;
        bool have_coef = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            coef = parse_uint();
            have_coef = true;
            skip_ws();
            if (i < s.size() && s[i] == '*') ++i;
        }
        skip_ws();
        if (i < s.size() && (std::isalpha(static_cast<unsigned char>(s[i])))) {
            if (s.compare(i, 4, "sqrt") == 0) {
                i += 4;
                if (!eat('-')) fail("expected '-' after sqrt");
                Int dd = parse_uint();
                if (dd != f.d) fail("sqrt-" + dd.get_str() + " does not match field d=" + std::to_string(f.d));
                two_b += 2 * sign * coef;
            } else if (s[i] == 'w' || (s[i] == 'i' && f.d == 1)) {
                ++i;
                // w itself: sqrt(-d) or (1+sqrt(-d))/2
                if (f.half_integral()) {
                    two_a += sign * coef;
                    two_b += sign * coef;
                } else {
                    two_b += 2 * sign * coef;
                }
            } else {
                fail("unknown symbol");
            }
        } else {
            if (!have_coef) fail("expected term");
            two_a += 2 * sign * coef;
        }
    }

    void parse_linear(Int& two_a, Int& two_b) {
        Int sign = 1;
        skip_ws();
        if (eat('-')) sign = -1;
        else eat('+');
        parse_term(sign, two_a, two_b);
        for (;;) {
            skip_ws();
            if (eat('+')) sign = 1;
            else if (eat('-')) sign = -1;
            else break;
            parse_term(sign, two_a, two_b);
        }
    }

    AlgebraicInt parse() {
        // terms accumulate twice the (1, sqrt(-d)) coordinates, so the
        // half-integral w contributes integrally; "(...)/2" doubles the
        // denominator once more
        Int two_a = 0, two_b = 0;
        bool halved = false;
        skip_ws();
        if (eat('(')) {
            parse_linear(two_a, two_b);
            if (!eat(')')) fail("expected ')'");
            if (!eat('/')) fail("expected '/2' after ')'");
            Int den = parse_uint();
            if (den != 2) fail("only division by 2 is supported");
            halved = true;
        } else {
            parse_linear(two_a, two_b);
        }
        skip_ws();
        if (i != s.size()) fail("trailing input");
        // element = (two_a + two_b*sqrt(-d)) / den = (p + q*sqrt(-d)) / 2
        Int den = halved ? 4 : 2;
        if ((2 * two_a) % den != 0 || (2 * two_b) % den != 0)
            fail("not an algebraic integer of O_" + std::to_string(f.d));
        Int p = 2 * two_a / den, q = 2 * two_b / den;
        if (f.half_integral()) {
            // (p + q*sqrt(-d))/2 = (p-q)/2 + q*w
            if ((p - q) % 2 != 0) fail("not an algebraic integer of O_" + std::to_string(f.d));
            return make_int(f, Int((p - q) / 2), q);
        }
        if (p % 2 != 0 || q % 2 != 0) fail("not an algebraic integer of O_" + std::to_string(f.d));
        return make_int(f, Int(p / 2), Int(q / 2));
    }
};

}  // namespace

AlgebraicInt parse_element(FieldLabel f, const std::string& text) {
    ElemParser p{f, text};
    return p.parse();
}

QIdeal parse_ideal(FieldLabel f, const std::string& gens) {
    std::vector<AlgebraicInt> g;
    size_t start = 0;
    while (start <= gens.size()) {
        size_t comma = gens.find(',', start);
        std::string piece = gens.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (piece.find_first_not_of(" \t") != std::string::npos) g.push_back(parse_element(f, piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (g.empty()) throw std::invalid_argument("empty generator list");
    return ideal_from_gens(f, g);
}

std::string to_string(const AlgebraicInt& z) {
    std::ostringstream os;
    if (z.b == 0) {
        os << z.a;
        return os.str();
    }
    if (z.a != 0) os << z.a;
    if (z.b > 0 && z.a != 0) os << "+";
    if (z.b == -1) os << "-";
    else if (z.b != 1) os << z.b << "*";
    os << "w";
    return os.str();
}

std::string to_string(const QIdeal& I) {
    std::ostringstream os;
    os << "[[" << I.a << ",0],[" << I.b << "," << I.c << "]]";
    return os.str();
}

}  // namespace bcls::quadint
