#pragma once

#include <fano3lab/errors.hpp>
#include <fano3lab/polynomial.hpp>

#include <random>
#include <string>

namespace testing {

using namespace fano3lab;

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(20261019);
    return g;
}

inline long rand_int(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Rational rand_rational(long range = 9) {
    Rational q(Integer(rand_int(-range, range)), Integer(rand_int(1, 4)));
    q.canonicalize();
    return q;
}

inline CycNum rand_cyc(unsigned n, long range = 5) {
    std::vector<Rational> c(euler_phi(n));
    for (auto& v : c) v = rand_int(0, 2) ? rand_rational(range) : Rational(0);
    return CycNum::from_coords(n, c);
}

inline CycNum rand_nonzero(unsigned n) {
    for (;;) {
        CycNum c = rand_cyc(n);
        if (!c.is_zero()) return c;
    }
}

inline BinaryForm rand_form(unsigned d, unsigned n = 1, long range = 5) {
    std::vector<CycNum> c(d + 1);
    for (auto& v : c) v = rand_cyc(n, range);
    return BinaryForm(c);
}

inline GroupElt2 rand_group(unsigned n = 1) {
    for (;;) {
        CycNum a = rand_cyc(n, 3), b = rand_cyc(n, 3), c = rand_cyc(n, 3), d = rand_cyc(n, 3);
        if (!(a * d - b * c).is_zero()) return GroupElt2(a, b, c, d);
    }
}

inline BinaryForm form(const std::string& s, int d = -1, unsigned n = kDefaultConductor) {
    return parse_binary_form(s, d, n);
}

}  // namespace testing
