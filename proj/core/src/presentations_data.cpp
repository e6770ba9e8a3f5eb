#include "bcls/bianchi.hpp"

#include <stdexcept>
#include <string>

// Embedded presentations of PSL(2, O_d) for the class-number-one fields,
// with their generator matrices. Sourced from Swan's tables; every data
// block is gated by verify_matrices at load time and cross-checked against
// known finite quotient orders in the test suite.
namespace bcls::bianchi::detail {

namespace {

// a: inversion, t: x -> x+1, u: x -> x+w, l: unit diagonal, c: extra
// elliptic generator (d = 19 only, where the elementary matrices do not
// generate).

const char* kD1 = R"(# PSL(2, O_1), data format v1
field: 1
gens: a l t u ; rels: a^2, l^2, (a*l)^2, (t*l)^2, (u*l)^2, (t*a)^3, (u*a*l)^3, t*u*t^-1*u^-1
matrix: a = [[0, 1], [-1, 0]]
matrix: l = [[-w, 0], [0, w]]
matrix: t = [[1, 1], [0, 1]]
matrix: u = [[1, w], [0, 1]]
cusp: t u
)";

const char* kD2 = R"(# PSL(2, O_2), data format v1
field: 2
gens: a t u ; rels: a^2, (t*a)^3, (a*u^-1*a*u)^2, t*u*t^-1*u^-1
matrix: a = [[0, 1], [-1, 0]]
matrix: t = [[1, 1], [0, 1]]
matrix: u = [[1, w], [0, 1]]
cusp: t u
)";

const char* kD3 = R"(# PSL(2, O_3), data format v1
field: 3
gens: a l t u ; rels: a^2, l^3, (a*l)^2, (t*a)^3, (u*a*l)^3, l*t*l^-1*u, l*u*l^-1*u*t^-1, t*u*t^-1*u^-1
matrix: a = [[0, 1], [-1, 0]]
matrix: l = [[1-w, 0], [0, w]]
matrix: t = [[1, 1], [0, 1]]
matrix: u = [[1, w], [0, 1]]
cusp: t u
)";

const char* kD7 = R"(# PSL(2, O_7), data format v1
field: 7
gens: a t u ; rels: a^2, (t*a)^3, (a*t*u^-1*a*u)^2, t*u*t^-1*u^-1
matrix: a = [[0, 1], [-1, 0]]
matrix: t = [[1, 1], [0, 1]]
matrix: u = [[1, w], [0, 1]]
cusp: t u
)";

const char* kD11 = R"(# PSL(2, O_11), data format v1
field: 11
gens: a t u ; rels: a^2, (t*a)^3, (a*t*u^-1*a*u)^3, t*u*t^-1*u^-1
matrix: a = [[0, 1], [-1, 0]]
matrix: t = [[1, 1], [0, 1]]
matrix: u = [[1, w], [0, 1]]
cusp: t u
)";

const char* kD19 = R"(# PSL(2, O_19), data format v1
field: 19
gens: a t u c ; rels: a^2, (t*a)^3, c^3, (c*a)^2, (c*t^-1)^3, (u*c*u^-1*a*t^-1)^2, t*u*t^-1*u^-1
matrix: a = [[0, 1], [-1, 0]]
matrix: t = [[1, 1], [0, 1]]
matrix: u = [[1, w], [0, 1]]
matrix: c = [[1-w, 2], [2, w]]
cusp: t u
)";

}  // namespace

const char* presentation_text(long d) {
    switch (d) {
        case 1: return kD1;
        case 2: return kD2;
        case 3: return kD3;
        case 7: return kD7;
        case 11: return kD11;
        case 19: return kD19;
    }
    throw std::invalid_argument("no presentation data for d=" + std::to_string(d));
}

}  // namespace bcls::bianchi::detail
