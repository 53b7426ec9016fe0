#pragma once

#include <fano3lab/cyclotomic.hpp>

#include <utility>
#include <vector>

namespace fano3lab::detail {

struct CycContext {
    unsigned n = 1;
    unsigned phi = 1;
    IntPoly poly;  // Phi_n
    // powers[k] = z^k reduced, as sparse (index, coefficient), for 0 <= k < n
    std::vector<std::vector<std::pair<unsigned, long>>> powers;
};

}  // namespace fano3lab::detail
