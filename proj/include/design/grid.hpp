#pragma once

#include "design/perm.hpp"
#include "design/perm_group.hpp"

#include <vector>

namespace design {

// Row/column grid identification of the point set with Z_rows x Z_cols.
// The point in row e, column f has id f*n_rows + e + 1, so ids run down
// column 0 first, then column 1, and so on.
struct GridGeometry {
    Point n_rows = 0;
    Point n_cols = 0;

    Point degree() const { return static_cast<Point>(n_rows * n_cols); }
    Point id(Point row, Point col) const {
        return static_cast<Point>(col * n_rows + row + 1);
    }
    Point row_of(Point id) const { return static_cast<Point>((id - 1) % n_rows); }
    Point col_of(Point id) const { return static_cast<Point>((id - 1) / n_rows); }

    // The n_rows classes {points with row e} and n_cols classes
    // {points with column f}, each sorted ascending.
    std::vector<std::vector<Point>> row_partition() const;
    std::vector<std::vector<Point>> column_partition() const;
};

// (e,f) -> (e+1 mod n_rows, f)
Permutation row_addition(const GridGeometry& geom);
// (e,f) -> (e, f+1 mod n_cols)
Permutation column_addition(const GridGeometry& geom);
// (e,f) -> (a*e mod n_rows, f); n_rows must be prime, a in 1..n_rows-1
Permutation row_multiplication(const GridGeometry& geom, unsigned a);
// (e,f) -> (e, b*f mod n_cols); n_cols must be prime, b in 1..n_cols-1
Permutation column_multiplication(const GridGeometry& geom, unsigned b);

bool is_prime(unsigned n);

// Multiplicative order of a mod p (p prime, a not divisible by p).
unsigned multiplicative_order(unsigned a, unsigned p);

// Smallest primitive root mod p, found by brute-force order checks.
unsigned smallest_primitive_root(unsigned p);

inline constexpr Point kRows451 = 41;
inline constexpr Point kCols451 = 11;

// The searched groups on the 41x11 grid (451 points). With a, b the chosen
// primitive roots mod 41 and mod 11, group i of family `set` is generated by
//   alpha           row addition
//   beta            column addition
//   a^20 on rows    (family 1 only; the involution e -> -e)
//   a^8 b^(2i)      simultaneous multiplication on rows and columns
// Family 1 groups have order 4510, family 2 groups order 2255.
PermGroup build_parameter_set_group(int family, int i,
                                    unsigned root41 = 0, unsigned root11 = 0);

// The common normalizer AGL(1,41) x AGL(1,11) of all eight groups,
// generated by the additions and the full multiplications; order 180400.
PermGroup build_normalizer(unsigned root41 = 0, unsigned root11 = 0);

} // namespace design
