#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ringlex/lexicode.hpp"

namespace ringlex {

// A vector file:
//
//     ring=z4 n=4
//     # comment
//     1100
//     0110
//
// or the single token `canonical` in place of the vectors (basis files only).
struct VectorFile {
    ChainRing ring = make_z4();
    int n = 0;
    bool canonical = false;
    std::vector<RingVector> vectors;
};

// Throws ParseError on malformed text.
VectorFile parse_vector_file(const std::string& text);
VectorFile read_vector_file(const std::string& path);

// Throws ParseError on malformed text and InvalidBasis when the vectors do
// not generate R^n.
Basis parse_basis_file(const std::string& text);
Basis read_basis_file(const std::string& path);

std::string format_basis_file(const Basis& basis);

// Random basis of R^n from a seeded mt19937_64: draws n random vectors until
// they generate R^n.
Basis random_basis(const ChainRing& ring, int n, std::uint64_t seed);

}  // namespace ringlex
