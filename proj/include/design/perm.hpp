#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace design {

// Point ids are 1-based everywhere (ids 1..degree), matching the text file
// formats. Degrees stay small (<= 1024), so images fit in 16 bits.
using Point = std::uint16_t;

// A permutation of {1..degree}, stored as its image array:
// img[x-1] is the image of point x.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<Point> images);

    static Permutation identity(Point degree);

    Point degree() const { return static_cast<Point>(img_.size()); }
    Point apply(Point x) const { return img_[x - 1]; }
    Point operator()(Point x) const { return img_[x - 1]; }

    const std::vector<Point>& images() const { return img_; }

    bool is_identity() const;

    bool operator==(const Permutation& other) const { return img_ == other.img_; }
    bool operator!=(const Permutation& other) const { return img_ != other.img_; }
    bool operator<(const Permutation& other) const { return img_ < other.img_; }

private:
    std::vector<Point> img_;
};

// Composition applies the left factor first: compose(p,q) maps x to q(p(x)),
// so that x^(pq) = (x^p)^q in exponent notation.
Permutation compose(const Permutation& p, const Permutation& q);

Permutation inverse(const Permutation& p);

// Parses disjoint-cycle notation, e.g. "(1 2 3)(4 5)" or "(1,2,3)(4,5)".
// Points not mentioned are fixed.
Permutation parse_cycles(const std::string& text, Point degree);

std::string to_cycle_string(const Permutation& p);

} // namespace design
