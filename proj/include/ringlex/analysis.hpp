#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ringlex/code.hpp"
#include "ringlex/lexicode.hpp"
#include "ringlex/standard_form.hpp"

namespace ringlex {

// All R-linear combinations of the generators. Throws CapExceeded past cap.
Code enumerate_code(const ChainRing& ring, int n, const std::vector<RingVector>& generators,
                    std::uint64_t cap = kDefaultCap);

// Minimum weight over the nonzero codewords; UndefinedDistance on the zero code.
int min_weight(const Code& code, Metric metric);

// C-perp as a codeword set and as a reduced generating set (exhaustive over
// R^n, so m^n must stay within cap).
Code dual_code_words(const Code& code, std::uint64_t cap = kDefaultCap);
std::vector<RingVector> dual_code(const Code& code, std::uint64_t cap = kDefaultCap);

bool is_self_orthogonal(const ChainRing& ring, const std::vector<RingVector>& generators);
bool is_self_dual(const ChainRing& ring, const std::vector<RingVector>& generators, int n);

// max over u in R^n of the Lee distance to the code, by breadth-first search
// on the Lee graph (neighbours differ by a weight-one symbol in one place).
int covering_radius_lee(const Code& code, std::uint64_t cap = kDefaultCap);

// Binary words of length <= 64 packed so that bit j is position j of the
// corresponding BinaryWord.
struct BinaryCode {
    int length = 0;
    std::vector<std::uint64_t> words;  // sorted, distinct

    std::size_t size() const { return words.size(); }
    std::vector<BinaryWord> unpacked() const;
};

BinaryCode gray_image(const Code& code);
std::uint64_t pack_binary(const BinaryWord& w);

int binary_min_distance(const BinaryCode& image);
int binary_rank(const BinaryCode& image);
bool is_binary_linear(const BinaryCode& image);
// Throws CapExceeded when 2^length > cap.
int binary_covering_radius(const BinaryCode& image, std::uint64_t cap = kDefaultCap);

// Gilbert bound M >= 2^n / sum_{i<d} C(n, i), compared exactly as
// M * sum >= 2^n.
struct GilbertResult {
    bool met = false;
    std::uint64_t ball = 0;       // sum_{i<d} C(n, i)
    double threshold = 0;         // 2^n / ball
};
GilbertResult gilbert_bound(int n_bin, std::uint64_t size, int d);
inline bool gilbert_check(int n_bin, std::uint64_t size, int d) { return gilbert_bound(n_bin, size, d).met; }

// Checks unit invariance and a common xi with sum_{x in U} w(x) = xi |U| s(U)
// over every submodule U of R^n with |U| >= 2, for n = 1..n_max, where s(U)
// counts the coordinates on which U is not identically zero (s = 1 for n = 1).
struct HomogeneousResult {
    bool unit_invariant = true;
    bool holds = true;
    std::int64_t xi_num = 0;
    std::int64_t xi_den = 1;
    std::uint64_t subcodes_checked = 0;
    std::vector<RingVector> counterexample;  // generators of the first U with a different xi
};
HomogeneousResult homogeneous_weight_verify(const ChainRing& ring, Metric metric, int n_max = 2);

// One inequality lhs <= rhs from the covering-radius bounds of a
// minimum-Lee-weight lexicode.
struct BoundComparison {
    std::string label;
    int step = -1;  // chain index i, or -1 for the final code
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    bool holds = false;
    bool asserted = false;  // expected to hold on every input
};

struct RadiusBoundsReport {
    int n = 0;
    int delta = 0;
    int d = 0;
    int rho = 0;
    std::vector<int> step_rho;  // rho_L(C_i), -1 where C_i = C_n
    std::vector<BoundComparison> comparisons;
    bool asserted_hold() const;
};
RadiusBoundsReport radius_bounds_report(const BuildResult& build, int delta, std::uint64_t cap = kDefaultCap);

struct AnalysisOptions {
    bool dual = true;
    bool rho = false;
    bool gray = false;
    bool gilbert = false;
    std::uint64_t cap = kDefaultCap;
};

struct GrayReport {
    int length = 0;
    std::uint64_t size = 0;
    int min_distance = 0;
    bool linear = false;
    std::optional<int> covering_radius;
    std::optional<bool> gilbert_met;
    std::optional<std::uint64_t> gilbert_ball;
};

struct CodeReport {
    std::string ring;
    int n = 0;
    int k1 = 0;
    int k2 = 0;
    std::string type;
    std::uint64_t code_size = 0;
    std::optional<int> d_H, d_L, d_E;
    std::optional<bool> self_orthogonal, self_dual;
    std::optional<std::uint64_t> dual_size;
    std::optional<int> rho_L;
    std::optional<GrayReport> gray;
};

CodeReport analyze_code(const Code& code, const std::vector<RingVector>& generators, const AnalysisOptions& options);

}  // namespace ringlex
