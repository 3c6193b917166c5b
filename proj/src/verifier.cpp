#include "design/verifier.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace design {

Design develop(const PermGroup& group, const std::vector<Point>& block) {
    std::set<std::vector<Point>> images;
    std::vector<Point> image(block.size());
    for (const Permutation& e : group.elements) {
        for (std::size_t i = 0; i < block.size(); ++i) image[i] = e.apply(block[i]);
        std::sort(image.begin(), image.end());
        images.insert(image);
    }
    Design d;
    d.v = group.degree;
    d.k = static_cast<int>(block.size());
    d.blocks.assign(images.begin(), images.end());
    return d;
}

namespace {

std::size_t tri_index(Point v, Point r, Point s) {
    if (r > s) std::swap(r, s);
    return static_cast<std::size_t>(r - 1) * (2 * v - r) / 2 + (s - r - 1);
}

} // namespace

VerificationReport verify(const Design& design, const PermGroup* group,
                          const std::vector<std::vector<std::vector<Point>>>* partitions,
                          const std::vector<std::string>* partition_names) {
    VerificationReport report;
    report.v = design.v;
    report.k = design.k;
    report.b = design.blocks.size();

    const Point v = design.v;
    std::vector<std::uint32_t> pair_cover(static_cast<std::size_t>(v) * (v - 1) / 2, 0);
    std::vector<std::uint32_t> point_cover(v + 1, 0);
    bool sizes_ok = true;
    for (const auto& block : design.blocks) {
        if (static_cast<int>(block.size()) != design.k) sizes_ok = false;
        for (std::size_t i = 0; i < block.size(); ++i) {
            ++point_cover[block[i]];
            for (std::size_t j = i + 1; j < block.size(); ++j)
                ++pair_cover[tri_index(v, block[i], block[j])];
        }
    }

    report.lambda_constant = !pair_cover.empty();
    for (std::uint32_t c : pair_cover)
        if (c != pair_cover.front()) { report.lambda_constant = false; break; }
    if (report.lambda_constant) report.lambda = pair_cover.front();

    report.replication_constant = v > 0;
    for (Point p = 1; p <= v; ++p)
        if (point_cover[p] != point_cover[1]) { report.replication_constant = false; break; }
    if (report.replication_constant) report.r = point_cover[1];

    report.is_design = sizes_ok && report.lambda_constant && report.lambda == 1;

    if (report.lambda_constant && report.lambda == 1 && report.replication_constant) {
        std::uint64_t vv = v;
        std::uint64_t kk = static_cast<std::uint64_t>(design.k);
        std::uint64_t rr = static_cast<std::uint64_t>(report.r);
        report.identities_hold = kk >= 2 && report.b * kk * (kk - 1) == vv * (vv - 1) &&
                                 report.b * kk == vv * rr && vv - 1 == rr * (kk - 1);
    }
    report.is_projective_plane = report.is_design && report.b == v;

    if (group != nullptr) {
        std::set<std::vector<Point>> block_set(design.blocks.begin(), design.blocks.end());
        bool closed = true;
        std::vector<Point> image;
        for (const Permutation& g : group->generators) {
            for (const auto& block : design.blocks) {
                image.clear();
                for (Point p : block) image.push_back(g.apply(p));
                std::sort(image.begin(), image.end());
                if (!block_set.count(image)) { closed = false; break; }
            }
            if (!closed) break;
        }
        bool one_orbit = false;
        if (closed && !design.blocks.empty()) {
            Design orbit = develop(*group, design.blocks.front());
            std::vector<std::vector<Point>> sorted_blocks = design.blocks;
            std::sort(sorted_blocks.begin(), sorted_blocks.end());
            one_orbit = orbit.blocks == sorted_blocks;
        }
        report.line_transitive = closed && one_orbit;
    }

    if (partitions != nullptr) {
        for (std::size_t pi = 0; pi < partitions->size(); ++pi) {
            const auto& partition = (*partitions)[pi];
            PartitionCheck check;
            check.name = (partition_names && pi < partition_names->size())
                             ? (*partition_names)[pi]
                             : "partition" + std::to_string(pi + 1);
            std::vector<int> class_of(v + 1, -1);
            for (std::size_t c = 0; c < partition.size(); ++c)
                for (Point p : partition[c]) class_of[p] = static_cast<int>(c);

            check.invariant = group != nullptr && partition_is_invariant(*group, partition);

            check.inner_pairs_constant = !design.blocks.empty();
            check.outer_pairs_constant = !design.blocks.empty();
            for (const auto& block : design.blocks) {
                std::int64_t inner = 0, outer = 0;
                for (std::size_t i = 0; i < block.size(); ++i)
                    for (std::size_t j = i + 1; j < block.size(); ++j) {
                        if (class_of[block[i]] == class_of[block[j]]) ++inner;
                        else ++outer;
                    }
                if (check.inner_pairs == -1) check.inner_pairs = inner;
                else if (check.inner_pairs != inner) check.inner_pairs_constant = false;
                if (check.outer_pairs == -1) check.outer_pairs = outer;
                else if (check.outer_pairs != outer) check.outer_pairs_constant = false;
            }
            if (!check.inner_pairs_constant) check.inner_pairs = -1;
            if (!check.outer_pairs_constant) check.outer_pairs = -1;
            report.partitions.push_back(std::move(check));
        }
    }
    return report;
}

std::string VerificationReport::to_text() const {
    std::ostringstream out;
    out << "v: " << v << '\n';
    out << "k: " << k << '\n';
    out << "b: " << b << '\n';
    out << "is_design: " << (is_design ? "true" : "false") << '\n';
    out << "lambda: ";
    if (lambda_constant) out << lambda;
    else out << "non-constant";
    out << '\n';
    out << "r: ";
    if (replication_constant) out << r;
    else out << "non-constant";
    out << '\n';
    out << "identities_hold: " << (identities_hold ? "true" : "false") << '\n';
    out << "is_projective_plane: " << (is_projective_plane ? "true" : "false") << '\n';
    if (line_transitive.has_value())
        out << "line_transitive: " << (*line_transitive ? "true" : "false") << '\n';
    for (const PartitionCheck& check : partitions) {
        out << "partition." << check.name << ".invariant: "
            << (check.invariant ? "true" : "false") << '\n';
        out << "partition." << check.name << ".inner_pairs: ";
        if (check.inner_pairs_constant) out << check.inner_pairs;
        else out << "non-constant";
        out << '\n';
        out << "partition." << check.name << ".outer_pairs: ";
        if (check.outer_pairs_constant) out << check.outer_pairs;
        else out << "non-constant";
        out << '\n';
    }
    return out.str();
}

bool recheck_partial_orbit_condition(const PermGroup& group, std::uint64_t b_hat,
                                     const std::vector<Point>& block) {
    using PairKey = std::pair<Point, Point>;
    std::map<PairKey, std::uint64_t> tally;       // least image -> pairs in block
    std::map<PairKey, std::uint64_t> orbit_size;  // least image -> orbit size

    for (std::size_t i = 0; i < block.size(); ++i) {
        for (std::size_t j = i + 1; j < block.size(); ++j) {
            PairKey least{block[i], block[j]};
            if (least.first > least.second) std::swap(least.first, least.second);
            std::set<PairKey> orbit;
            for (const Permutation& e : group.elements) {
                PairKey image{e.apply(block[i]), e.apply(block[j])};
                if (image.first > image.second) std::swap(image.first, image.second);
                orbit.insert(image);
                if (image < least) least = image;
            }
            ++tally[least];
            orbit_size[least] = orbit.size();
        }
    }
    for (const auto& [least, count] : tally) {
        std::uint64_t size = orbit_size[least];
        if (size % b_hat != 0) return false; // no integral target for this orbit
        if (count > size / b_hat) return false;
    }
    return true;
}

void write_block_list(std::ostream& out, const std::vector<std::vector<Point>>& blocks) {
    for (const auto& block : blocks) {
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i) out << ' ';
            out << block[i];
        }
        out << '\n';
    }
}

std::vector<std::vector<Point>> read_block_list(std::istream& in) {
    std::vector<std::vector<Point>> blocks;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::vector<Point> block;
        unsigned long p;
        while (ls >> p) block.push_back(static_cast<Point>(p));
        if (!block.empty()) blocks.push_back(std::move(block));
    }
    return blocks;
}

void write_block_list_file(const std::string& path,
                           const std::vector<std::vector<Point>>& blocks) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    write_block_list(out, blocks);
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<std::vector<Point>> read_block_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    return read_block_list(in);
}

} // namespace design
