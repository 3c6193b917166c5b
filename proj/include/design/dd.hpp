#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace design {

// Inner-pair arithmetic for a line-transitive design over an invariant
// partition with d classes of size c: positive integers x, y with
//   c = (C(k,2) - x) / y   and   d = (C(k,2) - y) / x
// exactly, x being the number of inner pairs per line on that partition.
struct DDParams {
    int k = 0;
    int c = 0;
    int d = 0;
    int x = 0;
    int y = 0;
};

struct DDSolution {
    std::vector<DDParams> params;  // all exact (x,y) solutions
    std::uint64_t v = 0;           // c*d
    std::uint64_t bound = 0;       // (C(k,2)-1)^2
    bool bound_violated = false;   // v > bound rules the parameters out
};

DDSolution dd_solve(int k, int c, int d);

// Class-occupancy profile of a line: entries[i] = number of classes meeting
// the line in exactly i points, for i = 0..k.
struct InterceptVector {
    std::vector<int> entries; // length k+1
    int d = 0;                // class count (= sum of entries)
    int c = 0;                // class size (entries[i] = 0 for i > c)
    int x = 0;                // inner pairs (= sum C(i,2)*entries[i])

    int k() const { return static_cast<int>(entries.size()) - 1; }
    std::string to_string() const;
};

// All vectors with sum d, weighted sum k, inner-pair sum x and no occupancy
// above c, in lexicographic order of the entry list. Plain exhaustive
// composition search with partial-sum pruning; k stays tiny here.
std::vector<InterceptVector> intercept_vectors(int k, int x, int d, int c);

// Joint row/column shape of a line when the row partition has a unique
// 2-class: the two points of that 2-class sit in distinct columns with
// occupancies m1 <= m2. Everything else is forced to 1-rows, so the anchor
// multiplicities determine the mask.
struct Mask {
    InterceptVector row_vector;
    InterceptVector column_vector;
    int m1 = 0;
    int m2 = 0;
};

// One mask per feasible unordered occupancy pair, honouring availability in
// the column vector ((m,m) needs at least two m-columns). Requires the row
// vector to have exactly one 2-class and nothing above occupancy 2.
std::vector<Mask> enumerate_masks(const InterceptVector& row_vector,
                                  const InterceptVector& column_vector);

std::uint64_t binomial2(std::uint64_t n);

} // namespace design
