#include "design/singer.hpp"

#include "design/grid.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace design {

namespace {

using Vec3 = std::array<unsigned, 3>;

// X * (c0 + c1 X + c2 X^2) reduced mod f and p.
Vec3 multiply_by_x(const Vec3& v, const PrimeFieldPoly& f) {
    unsigned p = f.p;
    unsigned carry = v[2]; // coefficient of X^3 before reduction
    Vec3 r;
    r[0] = (carry * (p - f.coeffs[0] % p)) % p;
    r[1] = (v[0] + carry * (p - f.coeffs[1] % p)) % p;
    r[2] = (v[1] + carry * (p - f.coeffs[2] % p)) % p;
    return r;
}

Vec3 canonical_rep(Vec3 v, unsigned p) {
    unsigned lead = 0;
    for (unsigned c : v)
        if (c != 0) { lead = c; break; }
    if (lead == 0)
        throw std::logic_error("canonical_rep: zero vector");
    if (lead == 1) return v;
    // scale by lead^{-1} so the first nonzero coordinate becomes 1
    unsigned inv = 1;
    for (unsigned t = 1; t < p; ++t)
        if ((t * lead) % p == 1) { inv = t; break; }
    for (unsigned& c : v) c = (c * inv) % p;
    return v;
}

} // namespace

bool cubic_is_irreducible(const PrimeFieldPoly& f) {
    for (unsigned t = 0; t < f.p; ++t) {
        unsigned value = (((t * t) % f.p) * t + f.coeffs[2] * ((t * t) % f.p) +
                          f.coeffs[1] * t + f.coeffs[0]) %
                         f.p;
        if (value == 0) return false;
    }
    return true;
}

unsigned long order_of_x(const PrimeFieldPoly& f) {
    if (f.coeffs[0] % f.p == 0) return 0; // X divides f, not invertible
    unsigned long limit = static_cast<unsigned long>(f.p) * f.p * f.p - 1;
    Vec3 x{0, 1, 0};
    Vec3 acc = x;
    for (unsigned long n = 1; n <= limit; ++n) {
        if (acc[0] == 1 && acc[1] == 0 && acc[2] == 0) return n;
        acc = multiply_by_x(acc, f);
    }
    return 0; // X is a zero divisor; f was reducible
}

PrimeFieldPoly find_primitive_cubic(unsigned p) {
    if (!is_prime(p))
        throw std::invalid_argument("find_primitive_cubic: p must be prime");
    unsigned long target = static_cast<unsigned long>(p) * p * p - 1;
    for (unsigned c2 = 0; c2 < p; ++c2) {
        for (unsigned c1 = 0; c1 < p; ++c1) {
            for (unsigned c0 = 0; c0 < p; ++c0) {
                PrimeFieldPoly f{p, {c0, c1, c2}};
                if (!cubic_is_irreducible(f)) continue;
                if (order_of_x(f) == target) return f;
            }
        }
    }
    throw std::logic_error("find_primitive_cubic: none found"); // unreachable
}

PlaneModel build_plane(unsigned p) {
    if (!is_prime(p))
        throw std::invalid_argument("build_plane: p must be prime");
    if (p > 31)
        throw std::invalid_argument("build_plane: p > 31 exceeds the enumeration guard");

    PlaneModel plane;
    plane.p = p;
    plane.poly = find_primitive_cubic(p);

    // canonical representatives in lexicographic (c0,c1,c2) order
    std::map<Vec3, Point> point_id;
    for (unsigned c0 = 0; c0 < p; ++c0)
        for (unsigned c1 = 0; c1 < p; ++c1)
            for (unsigned c2 = 0; c2 < p; ++c2) {
                if (c0 == 0 && c1 == 0 && c2 == 0) continue;
                Vec3 v{c0, c1, c2};
                if (canonical_rep(v, p) != v) continue;
                plane.points.push_back(v);
                point_id[v] = static_cast<Point>(plane.points.size());
            }

    // lines are kernels of canonical functionals; same enumeration order
    for (unsigned l0 = 0; l0 < p; ++l0)
        for (unsigned l1 = 0; l1 < p; ++l1)
            for (unsigned l2 = 0; l2 < p; ++l2) {
                if (l0 == 0 && l1 == 0 && l2 == 0) continue;
                Vec3 lambda{l0, l1, l2};
                if (canonical_rep(lambda, p) != lambda) continue;
                std::vector<Point> line;
                for (std::size_t i = 0; i < plane.points.size(); ++i) {
                    const Vec3& pt = plane.points[i];
                    unsigned dot = (lambda[0] * pt[0] + lambda[1] * pt[1] + lambda[2] * pt[2]) % p;
                    if (dot == 0) line.push_back(static_cast<Point>(i + 1));
                }
                plane.lines.push_back(std::move(line));
            }

    std::vector<Point> img(plane.points.size());
    for (std::size_t i = 0; i < plane.points.size(); ++i) {
        Vec3 image = canonical_rep(multiply_by_x(plane.points[i], plane.poly), p);
        img[i] = point_id.at(image);
    }
    plane.singer = Permutation(std::move(img));
    return plane;
}

std::vector<std::vector<Point>> singer_partition(const PlaneModel& plane, unsigned a) {
    unsigned v = plane.v();
    if (a <= 1 || a >= v || v % a != 0)
        throw std::invalid_argument("singer_partition: a must be a proper divisor of p^2+p+1");

    // position of each point along the Singer orbit of point 1
    std::vector<unsigned> position(v + 1, v);
    Point current = 1;
    for (unsigned j = 0; j < v; ++j) {
        if (position[current] != v)
            throw std::logic_error("singer_partition: Singer permutation is not a single v-cycle");
        position[current] = j;
        current = plane.singer.apply(current);
    }

    std::vector<std::vector<Point>> classes(a);
    for (Point pt = 1; pt <= v; ++pt) classes[position[pt] % a].push_back(pt);
    for (auto& cls : classes) std::sort(cls.begin(), cls.end());
    return classes;
}

} // namespace design
