#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ringlex/ring.hpp"
#include "ringlex/vector.hpp"

namespace ringlex {

using Matrix = std::vector<std::vector<std::uint8_t>>;

// Row-reduced generator matrix of a linear code over a chain ring.
//
// After permuting columns the rows read
//
//     [ I_k1   A        B1 + gamma B2 ]
//     [ 0      gamma I_k2   gamma M   ]
//
// for the 4-element rings; the code then has type 4^k1 2^k2. For a general
// chain ring `levels[v]` counts the pivots equal to gamma^v.
struct StandardForm {
    int n = 0;
    std::vector<int> levels;

    // Reduced rows in the original coordinate order; they span the input code.
    std::vector<RingVector> rows;
    // Pivot level of each row.
    std::vector<int> row_levels;
    // Position j of the permuted matrix holds original column column_permutation[j].
    std::vector<int> column_permutation;

    // Residue-field blocks; filled for the built-in rings only.
    Matrix A, B1, B2, M;

    // Saturates at UINT64_MAX.
    std::uint64_t code_size = 1;

    int k1() const { return levels.empty() ? 0 : levels[0]; }
    int k2() const { return levels.size() < 2 ? 0 : levels[1]; }
    int rank() const;

    // "4^1 2^3" for the built-in rings; level counts otherwise.
    std::string type_string(const ChainRing& ring) const;
};

StandardForm standard_form(const ChainRing& ring, int n, const std::vector<RingVector>& generators);

// Formats a (k1, k2) type the way the tables print it.
std::string format_type(int k1, int k2);

}  // namespace ringlex
