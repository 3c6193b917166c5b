#include "design/dd.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace design {

std::uint64_t binomial2(std::uint64_t n) { return n * (n - 1) / 2; }

DDSolution dd_solve(int k, int c, int d) {
    if (k < 2 || c < 2 || d < 2)
        throw std::invalid_argument("dd_solve: need k, c, d >= 2");
    DDSolution sol;
    sol.v = static_cast<std::uint64_t>(c) * d;
    std::uint64_t pairs = binomial2(static_cast<std::uint64_t>(k));
    sol.bound = (pairs - 1) * (pairs - 1);
    sol.bound_violated = sol.v > sol.bound;

    for (std::uint64_t x = 1; x <= pairs; ++x) {
        for (std::uint64_t y = 1; y <= pairs; ++y) {
            if (x + static_cast<std::uint64_t>(c) * y != pairs) continue;
            if (y + static_cast<std::uint64_t>(d) * x != pairs) continue;
            sol.params.push_back(DDParams{k, c, d, static_cast<int>(x), static_cast<int>(y)});
        }
    }
    return sol;
}

std::string InterceptVector::to_string() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) out << ',';
        out << entries[i];
    }
    out << ']';
    return out.str();
}

namespace {

void extend_vector(int k, int x, int d, int c, int i, int classes_left, int points_left,
                   int inner_left, std::vector<int>& entries,
                   std::vector<InterceptVector>& out) {
    if (i == k + 1) {
        if (classes_left == 0 && points_left == 0 && inner_left == 0) {
            InterceptVector v;
            v.entries = entries;
            v.d = d;
            v.c = c;
            v.x = x;
            out.push_back(std::move(v));
        }
        return;
    }
    int max_count = classes_left;
    if (i > 0) max_count = std::min(max_count, points_left / i);
    if (i > c) max_count = 0; // no class can exceed its own size
    for (int count = 0; count <= max_count; ++count) {
        int inner = count * static_cast<int>(binomial2(static_cast<std::uint64_t>(i)));
        if (inner > inner_left) break;
        // occupancies above i can still absorb the rest only if enough classes remain
        entries.push_back(count);
        extend_vector(k, x, d, c, i + 1, classes_left - count, points_left - count * i,
                      inner_left - inner, entries, out);
        entries.pop_back();
    }
}

} // namespace

std::vector<InterceptVector> intercept_vectors(int k, int x, int d, int c) {
    if (k < 1 || d < 1 || c < 1 || x < 0)
        throw std::invalid_argument("intercept_vectors: bad arguments");
    std::vector<InterceptVector> out;
    std::vector<int> entries;
    extend_vector(k, x, d, c, 0, d, k, x, entries, out);
    return out; // recursion emits entry lists in lexicographic order
}

std::vector<Mask> enumerate_masks(const InterceptVector& row_vector,
                                  const InterceptVector& column_vector) {
    if (row_vector.entries.size() < 3 || row_vector.entries[2] != 1)
        throw std::invalid_argument("enumerate_masks: unsupported shape (need a unique 2-row)");
    for (std::size_t i = 3; i < row_vector.entries.size(); ++i)
        if (row_vector.entries[i] != 0)
            throw std::invalid_argument("enumerate_masks: unsupported shape (row occupancy above 2)");

    std::vector<Mask> masks;
    int kmax = column_vector.k();
    for (int m1 = 1; m1 <= kmax; ++m1) {
        if (column_vector.entries[static_cast<std::size_t>(m1)] < 1) continue;
        for (int m2 = m1; m2 <= kmax; ++m2) {
            int available = column_vector.entries[static_cast<std::size_t>(m2)];
            if (available < 1) continue;
            // the two anchor points share a row, hence occupy distinct columns
            if (m1 == m2 && available < 2) continue;
            masks.push_back(Mask{row_vector, column_vector, m1, m2});
        }
    }
    return masks;
}

} // namespace design
