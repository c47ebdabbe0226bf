#include "ringlex/standard_form.hpp"

#include <limits>

#include "ringlex/errors.hpp"

namespace ringlex {

namespace {

using Row = std::vector<std::uint8_t>;

// row_a -= t * row_b
void sub_multiple(const ChainRing& ring, Row& a, const Row& b, std::uint8_t t) {
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] = ring.add_index(a[i], ring.neg_index(ring.mul_index(t, b[i])));
}

// Some t with t * divisor == target; divisor must divide target.
std::uint8_t quotient(const ChainRing& ring, std::uint8_t divisor, std::uint8_t target) {
    for (int t = 0; t < ring.size(); ++t)
        if (ring.mul_index(static_cast<std::uint8_t>(t), divisor) == target) return static_cast<std::uint8_t>(t);
    throw DomainError("standard_form: pivot does not divide entry");
}

// t making x - t * pivot the smallest canonical representative.
std::uint8_t reducer(const ChainRing& ring, std::uint8_t pivot, std::uint8_t x) {
    std::uint8_t best_t = 0, best = x;
    for (int t = 0; t < ring.size(); ++t) {
        const std::uint8_t r =
            ring.add_index(x, ring.neg_index(ring.mul_index(static_cast<std::uint8_t>(t), pivot)));
        if (r < best) {
            best = r;
            best_t = static_cast<std::uint8_t>(t);
        }
    }
    return best_t;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

}  // namespace

int StandardForm::rank() const {
    int s = 0;
    for (int k : levels) s += k;
    return s;
}

std::string format_type(int k1, int k2) {
    if (k1 == 0 && k2 == 0) return "4^0";
    std::string s;
    if (k1 > 0) s = "4^" + std::to_string(k1);
    if (k2 > 0) s += (s.empty() ? "" : " ") + std::string("2^") + std::to_string(k2);
    return s;
}

std::string StandardForm::type_string(const ChainRing& ring) const {
    if (ring.is_builtin()) return format_type(k1(), k2());
    std::string s = "levels(";
    for (std::size_t v = 0; v < levels.size(); ++v) s += (v ? "," : "") + std::to_string(levels[v]);
    return s + ")";
}

StandardForm standard_form(const ChainRing& ring, int n, const std::vector<RingVector>& generators) {
    std::vector<Row> rows;
    for (const auto& g : generators) {
        if (g.ring() != ring.id()) throw RingMismatch("generator does not belong to ring " + ring.name());
        if (g.size() != n) throw LengthMismatch("generator length differs from n = " + std::to_string(n));
        rows.push_back(g.indices());
    }

    const int e = ring.e();
    StandardForm sf;
    sf.n = n;
    sf.levels.assign(e, 0);
    std::vector<bool> used(n, false);
    std::vector<int> pivot_cols;
    std::size_t top = 0;

    for (int v = 0; v < e; ++v) {
        const std::uint8_t gpow = ring.gamma_pow(v).index;
        for (;;) {
            // leftmost free column holding an entry of valuation v; lowest row
            int col = -1;
            std::size_t row = 0;
            for (int c = 0; c < n && col < 0; ++c) {
                if (used[c]) continue;
                for (std::size_t r = top; r < rows.size(); ++r) {
                    const std::uint8_t x = rows[r][c];
                    if (x != 0 && ring.valuation(ring.element(x)) == v) {
                        col = c;
                        row = r;
                        break;
                    }
                }
            }
            if (col < 0) break;

            std::swap(rows[top], rows[row]);
            // normalise the pivot to gamma^v
            const std::uint8_t unit = quotient(ring, gpow, rows[top][col]);
            const std::uint8_t inv = ring.inv_unit(ring.element(unit)).index;
            for (auto& x : rows[top]) x = ring.mul_index(inv, x);

            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (r == top || rows[r][col] == 0) continue;
                const std::uint8_t t =
                    r > top ? quotient(ring, gpow, rows[r][col]) : reducer(ring, gpow, rows[r][col]);
                if (t != 0) sub_multiple(ring, rows[r], rows[top], t);
            }
            used[col] = true;
            pivot_cols.push_back(col);
            sf.row_levels.push_back(v);
            ++sf.levels[v];
            ++top;
        }
    }

    rows.resize(top);
    for (auto& r : rows) sf.rows.emplace_back(ring.id(), r);

    sf.column_permutation = pivot_cols;
    for (int c = 0; c < n; ++c)
        if (!used[c]) sf.column_permutation.push_back(c);

    for (int v = 0; v < e; ++v) {
        // |gamma^v R| = p^{r(e-v)}
        std::uint64_t ideal = 1;
        for (int i = 0; i < ring.r() * (e - v); ++i) ideal *= static_cast<std::uint64_t>(ring.p());
        for (int i = 0; i < sf.levels[v]; ++i) sf.code_size = saturating_mul(sf.code_size, ideal);
    }

    if (ring.is_builtin()) {
        const int k1 = sf.k1(), k2 = sf.k2();
        const int rest = n - k1 - k2;
        auto entry = [&](int r, int j) { return rows[r][sf.column_permutation[j]]; };
        sf.A.assign(k1, Row(k2, 0));
        sf.B1.assign(k1, Row(rest, 0));
        sf.B2.assign(k1, Row(rest, 0));
        sf.M.assign(k2, Row(rest, 0));
        for (int r = 0; r < k1; ++r) {
            for (int j = 0; j < k2; ++j) sf.A[r][j] = entry(r, k1 + j) & 1;
            for (int j = 0; j < rest; ++j) {
                const std::uint8_t x = entry(r, k1 + k2 + j);
                sf.B1[r][j] = x & 1;
                sf.B2[r][j] = x >> 1;
            }
        }
        for (int r = 0; r < k2; ++r)
            for (int j = 0; j < rest; ++j) sf.M[r][j] = entry(k1 + r, k1 + k2 + j) >> 1;
    }
    return sf;
}

}  // namespace ringlex
