#include "design/grid.hpp"

#include <stdexcept>

namespace design {

std::vector<std::vector<Point>> GridGeometry::row_partition() const {
    std::vector<std::vector<Point>> classes(n_rows);
    for (Point e = 0; e < n_rows; ++e) {
        classes[e].reserve(n_cols);
        for (Point f = 0; f < n_cols; ++f) classes[e].push_back(id(e, f));
    }
    return classes;
}

std::vector<std::vector<Point>> GridGeometry::column_partition() const {
    std::vector<std::vector<Point>> classes(n_cols);
    for (Point f = 0; f < n_cols; ++f) {
        classes[f].reserve(n_rows);
        for (Point e = 0; e < n_rows; ++e) classes[f].push_back(id(e, f));
    }
    return classes;
}

namespace {

Permutation grid_map(const GridGeometry& geom,
                     Point (*row_image)(Point, unsigned, const GridGeometry&),
                     Point (*col_image)(Point, unsigned, const GridGeometry&),
                     unsigned row_arg, unsigned col_arg) {
    std::vector<Point> img(geom.degree());
    for (Point e = 0; e < geom.n_rows; ++e)
        for (Point f = 0; f < geom.n_cols; ++f)
            img[geom.id(e, f) - 1] =
                geom.id(row_image(e, row_arg, geom), col_image(f, col_arg, geom));
    return Permutation(std::move(img));
}

Point row_same(Point e, unsigned, const GridGeometry&) { return e; }
Point col_same(Point f, unsigned, const GridGeometry&) { return f; }
Point row_add1(Point e, unsigned, const GridGeometry& g) {
    return static_cast<Point>((e + 1) % g.n_rows);
}
Point col_add1(Point f, unsigned, const GridGeometry& g) {
    return static_cast<Point>((f + 1) % g.n_cols);
}
Point row_mul(Point e, unsigned a, const GridGeometry& g) {
    return static_cast<Point>((static_cast<unsigned long>(a) * e) % g.n_rows);
}
Point col_mul(Point f, unsigned b, const GridGeometry& g) {
    return static_cast<Point>((static_cast<unsigned long>(b) * f) % g.n_cols);
}

} // namespace

Permutation row_addition(const GridGeometry& geom) {
    return grid_map(geom, row_add1, col_same, 0, 0);
}

Permutation column_addition(const GridGeometry& geom) {
    return grid_map(geom, row_same, col_add1, 0, 0);
}

Permutation row_multiplication(const GridGeometry& geom, unsigned a) {
    if (!is_prime(geom.n_rows))
        throw std::invalid_argument("row_multiplication: n_rows must be prime");
    if (a % geom.n_rows == 0)
        throw std::invalid_argument("row_multiplication: multiplier is 0 mod n_rows");
    return grid_map(geom, row_mul, col_same, a % geom.n_rows, 0);
}

Permutation column_multiplication(const GridGeometry& geom, unsigned b) {
    if (!is_prime(geom.n_cols))
        throw std::invalid_argument("column_multiplication: n_cols must be prime");
    if (b % geom.n_cols == 0)
        throw std::invalid_argument("column_multiplication: multiplier is 0 mod n_cols");
    return grid_map(geom, row_same, col_mul, 0, b % geom.n_cols);
}

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

unsigned multiplicative_order(unsigned a, unsigned p) {
    if (!is_prime(p) || a % p == 0)
        throw std::invalid_argument("multiplicative_order: need prime p and a != 0 mod p");
    unsigned long x = a % p;
    unsigned order = 1;
    while (x != 1) {
        x = (x * a) % p;
        ++order;
    }
    return order;
}

unsigned smallest_primitive_root(unsigned p) {
    if (!is_prime(p))
        throw std::invalid_argument("smallest_primitive_root: p must be prime");
    for (unsigned a = 1; a < p; ++a)
        if (multiplicative_order(a, p) == p - 1) return a;
    throw std::logic_error("smallest_primitive_root: none found"); // unreachable for prime p > 1
}

namespace {

unsigned pow_mod(unsigned base, unsigned exp, unsigned mod) {
    unsigned long r = 1, b = base % mod;
    while (exp) {
        if (exp & 1) r = (r * b) % mod;
        b = (b * b) % mod;
        exp >>= 1;
    }
    return static_cast<unsigned>(r);
}

// Simultaneous multiplication a on rows, b on columns.
Permutation joint_multiplication(const GridGeometry& geom, unsigned a, unsigned b) {
    return compose(row_multiplication(geom, a), column_multiplication(geom, b));
}

} // namespace

PermGroup build_parameter_set_group(int family, int i, unsigned root41, unsigned root11) {
    if (family != 1 && family != 2)
        throw std::invalid_argument("build_parameter_set_group: family must be 1 or 2");
    if (i < 1 || i > 4)
        throw std::invalid_argument("build_parameter_set_group: i must be in 1..4");
    GridGeometry geom{kRows451, kCols451};
    unsigned a = root41 ? root41 : smallest_primitive_root(41);
    unsigned b = root11 ? root11 : smallest_primitive_root(11);

    std::vector<Permutation> gens;
    gens.push_back(row_addition(geom));
    gens.push_back(column_addition(geom));
    if (family == 1)
        gens.push_back(row_multiplication(geom, pow_mod(a, 20, 41)));
    gens.push_back(joint_multiplication(geom, pow_mod(a, 8, 41),
                                        pow_mod(b, 2 * static_cast<unsigned>(i), 11)));
    return enumerate_group(gens);
}

PermGroup build_normalizer(unsigned root41, unsigned root11) {
    GridGeometry geom{kRows451, kCols451};
    unsigned a = root41 ? root41 : smallest_primitive_root(41);
    unsigned b = root11 ? root11 : smallest_primitive_root(11);
    std::vector<Permutation> gens{
        row_addition(geom),
        column_addition(geom),
        row_multiplication(geom, a),
        column_multiplication(geom, b),
    };
    return enumerate_group(gens);
}

} // namespace design
