#include "design/perm.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace design {

Permutation::Permutation(std::vector<Point> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size() + 1, false);
    for (Point y : img_) {
        if (y < 1 || y > img_.size() || seen[y])
            throw std::invalid_argument("Permutation: image array is not a bijection");
        seen[y] = true;
    }
}

Permutation Permutation::identity(Point degree) {
    std::vector<Point> img(degree);
    for (Point x = 1; x <= degree; ++x) img[x - 1] = x;
    return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
    for (Point x = 1; x <= degree(); ++x)
        if (img_[x - 1] != x) return false;
    return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree())
        throw std::invalid_argument("compose: degree mismatch");
    std::vector<Point> img(p.degree());
    for (Point x = 1; x <= p.degree(); ++x) img[x - 1] = q.apply(p.apply(x));
    return Permutation(std::move(img));
}

Permutation inverse(const Permutation& p) {
    std::vector<Point> img(p.degree());
    for (Point x = 1; x <= p.degree(); ++x) img[p.apply(x) - 1] = x;
    return Permutation(std::move(img));
}

Permutation parse_cycles(const std::string& text, Point degree) {
    std::vector<Point> img(degree);
    for (Point x = 1; x <= degree; ++x) img[x - 1] = x;

    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    skip_ws();
    if (i >= text.size() || text.compare(i, 2, "()") == 0)
        return Permutation(std::move(img));

    while (i < text.size()) {
        skip_ws();
        if (i >= text.size()) break;
        if (text[i] != '(')
            throw std::invalid_argument("parse_cycles: expected '(' in \"" + text + "\"");
        ++i;
        std::vector<Point> cycle;
        while (true) {
            skip_ws();
            if (i < text.size() && text[i] == ',') { ++i; continue; }
            if (i >= text.size())
                throw std::invalid_argument("parse_cycles: unterminated cycle");
            if (text[i] == ')') { ++i; break; }
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw std::invalid_argument("parse_cycles: expected point id");
            unsigned long v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                v = v * 10 + static_cast<unsigned long>(text[i++] - '0');
            if (v < 1 || v > degree)
                throw std::invalid_argument("parse_cycles: point id out of range");
            cycle.push_back(static_cast<Point>(v));
        }
        for (std::size_t j = 0; j < cycle.size(); ++j) {
            Point from = cycle[j];
            Point to = cycle[(j + 1) % cycle.size()];
            if (img[from - 1] != from)
                throw std::invalid_argument("parse_cycles: point repeated across cycles");
            img[from - 1] = to;
        }
        skip_ws();
    }
    return Permutation(std::move(img));
}

std::string to_cycle_string(const Permutation& p) {
    std::ostringstream out;
    std::vector<bool> done(p.degree() + 1, false);
    bool any = false;
    for (Point x = 1; x <= p.degree(); ++x) {
        if (done[x] || p.apply(x) == x) continue;
        any = true;
        out << '(' << x;
        done[x] = true;
        for (Point y = p.apply(x); y != x; y = p.apply(y)) {
            out << ' ' << y;
            done[y] = true;
        }
        out << ')';
    }
    if (!any) return "()";
    return out.str();
}

} // namespace design
