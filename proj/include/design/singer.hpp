#pragma once

#include "design/perm.hpp"

#include <array>
#include <vector>

namespace design {

// A monic cubic over Z_p, coefficients constant-term first (f = X^3 +
// coeffs[2] X^2 + coeffs[1] X + coeffs[0]).
struct PrimeFieldPoly {
    unsigned p = 0;
    std::array<unsigned, 3> coeffs{};
};

// Smallest monic cubic f over Z_p (ordered by (X^2, X, constant)
// coefficients) such that X has multiplicative order p^3 - 1 in
// Z_p[X]/(f). Primitivity implies irreducibility; both are verified.
PrimeFieldPoly find_primitive_cubic(unsigned p);

// True iff f has no root in Z_p (for a cubic this is irreducibility).
bool cubic_is_irreducible(const PrimeFieldPoly& f);

// Multiplicative order of X in Z_p[X]/(f); f must have invertible X
// (nonzero constant term), otherwise 0 is returned.
unsigned long order_of_x(const PrimeFieldPoly& f);

// The Desarguesian plane PG(2,p): points are the 1-dimensional subspaces of
// (Z_p)^3 and lines the 2-dimensional subspaces, built from a primitive
// cubic so that multiplication by X induces the Singer cycle on points.
struct PlaneModel {
    unsigned p = 0;
    PrimeFieldPoly poly;
    std::vector<std::array<unsigned, 3>> points; // canonical: first nonzero coord = 1
    std::vector<std::vector<Point>> lines;       // each sorted ascending
    Permutation singer;

    Point v() const { return static_cast<Point>(points.size()); }
};

// p prime, p <= 31 (full subspace enumeration).
PlaneModel build_plane(unsigned p);

// Partition of the plane's points into a classes of size (p^2+p+1)/a,
// Singer-invariant: points are identified with Z_{p^2+p+1} along the Singer
// orbit of point 1 and grouped by position mod a. Requires a to be a proper
// divisor of p^2+p+1.
std::vector<std::vector<Point>> singer_partition(const PlaneModel& plane, unsigned a);

} // namespace design
