#include "design/search.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace design {

void SearchStats::merge(const SearchStats& other) {
    candidates += other.candidates;
    nodes += other.nodes;
    prune_symmetry += other.prune_symmetry;
    prune_row += other.prune_row;
    prune_column += other.prune_column;
    prune_orbit += other.prune_orbit;
    full_vector_rejects += other.full_vector_rejects;
    full_orbit_rejects += other.full_orbit_rejects;
    full_stabilizer_rejects += other.full_stabilizer_rejects;
    found += other.found;
}

std::string SearchStats::to_text() const {
    std::ostringstream out;
    out << "candidates: " << candidates << '\n';
    out << "nodes: " << nodes << '\n';
    out << "prunes.symmetry: " << prune_symmetry << '\n';
    out << "prunes.row: " << prune_row << '\n';
    out << "prunes.column: " << prune_column << '\n';
    out << "prunes.orbit: " << prune_orbit << '\n';
    out << "full.vector_rejects: " << full_vector_rejects << '\n';
    out << "full.orbit_rejects: " << full_orbit_rejects << '\n';
    out << "full.stabilizer_rejects: " << full_stabilizer_rejects << '\n';
    out << "found: " << found << '\n';
    return out.str();
}

namespace {

enum class Outcome { Accepted, PruneSymmetry, PruneRow, PruneColumn, PruneOrbit };

enum class Mode { Search, Census };

// One backtracking frontier. Points are appended in ascending id order
// (column-major over the grid), so all columns strictly left of the latest
// added point's column have their final occupancy and can be checked against
// the exact target vector. The partial column condition elsewhere is the
// cumulative form: for every occupancy m >= 1, the number of columns holding
// at least m points may not exceed the number of target classes with final
// occupancy >= m. Both checks are monotone along ascending extensions.
class Engine {
public:
    Engine(const SearchConfig& cfg, Mode mode, int depth_limit, bool orbit_active,
           const BlockSink* sink)
        : cfg_(cfg), mode_(mode), depth_limit_(depth_limit), orbit_active_(orbit_active),
          sink_(sink) {
        validate();

        const Point degree = cfg_.geom.degree();
        row_of_.resize(degree + 1);
        col_of_.resize(degree + 1);
        for (Point p = 1; p <= degree; ++p) {
            row_of_[p] = cfg_.geom.row_of(p);
            col_of_[p] = cfg_.geom.col_of(p);
        }

        const int k = cfg_.k;
        suffix_col_.assign(static_cast<std::size_t>(k) + 2, 0);
        for (int m = k; m >= 0; --m)
            suffix_col_[m] = suffix_col_[m + 1] + cfg_.column_vector.entries[m];

        row_count_.assign(cfg_.geom.n_rows, 0);
        col_count_.assign(cfg_.geom.n_cols, 0);
        ge_count_.assign(static_cast<std::size_t>(k) + 2, 0);
        completed_count_.assign(static_cast<std::size_t>(k) + 1, 0);

        block_ = cfg_.initial_block;
        for (Point p : block_) {
            ++row_count_[row_of_[p]];
            int m = ++col_count_[col_of_[p]];
            ++ge_count_[m];
        }
        for (int m = 1; m <= k; ++m)
            if (ge_count_[m] > suffix_col_[m])
                throw std::invalid_argument("search: initial block violates the column condition");

        if (orbit_active_) {
            tally_ = PairTally(cfg_.table, cfg_.targets);
            std::vector<Point> partial;
            for (Point p : block_) {
                if (!tally_.add(p, partial))
                    throw std::invalid_argument("search: initial block violates the orbit condition");
                partial.push_back(p);
            }
        }

        // candidate points: everything whose row is still free, ascending
        for (Point p = 1; p <= degree; ++p)
            if (row_count_[row_of_[p]] == 0) candidates_.push_back(p);
    }

    const std::vector<Point>& candidates() const { return candidates_; }
    std::size_t depth() const { return block_.size(); }

    Outcome try_candidate(std::size_t idx) {
        const Point a = candidates_[idx];
        const Point row = row_of_[a];
        const Point col = col_of_[a];

        if (block_.size() == cfg_.initial_block.size() &&
            cfg_.rules.first_extension_in_row1 && row != 1)
            return Outcome::PruneSymmetry;
        if (cfg_.rules.col0_at_least_col1 && col == 1 && col_count_[1] + 1 > col_count_[0])
            return Outcome::PruneSymmetry;

        if (row_count_[row] != 0) return Outcome::PruneRow;

        const int m = col_count_[col] + 1;
        if (ge_count_[m] + 1 > suffix_col_[m]) return Outcome::PruneColumn;

        int scanned = 0;
        bool completed_ok = true;
        for (int c = completed_upto_; c < col; ++c) {
            int occ = col_count_[c];
            if (completed_count_[occ] + 1 > cfg_.column_vector.entries[occ]) {
                completed_ok = false;
                break;
            }
            ++completed_count_[occ];
            ++scanned;
        }
        if (!completed_ok) {
            for (int c = completed_upto_; scanned > 0; ++c, --scanned)
                --completed_count_[col_count_[c]];
            return Outcome::PruneColumn;
        }

        if (orbit_active_ && !tally_.add(a, block_)) {
            for (int c = completed_upto_; c < col; ++c) --completed_count_[col_count_[c]];
            return Outcome::PruneOrbit;
        }

        frames_.push_back(Frame{a, completed_upto_});
        completed_upto_ = std::max<int>(completed_upto_, col);
        ++row_count_[row];
        col_count_[col] = m;
        ++ge_count_[m];
        block_.push_back(a);
        return Outcome::Accepted;
    }

    void undo_last() {
        const Frame frame = frames_.back();
        frames_.pop_back();
        const Point a = frame.point;
        block_.pop_back();
        if (orbit_active_) tally_.remove(a, block_);
        const Point row = row_of_[a];
        const Point col = col_of_[a];
        --ge_count_[col_count_[col]];
        --col_count_[col];
        --row_count_[row];
        for (int c = frame.prev_completed_upto; c < col; ++c)
            --completed_count_[col_count_[c]];
        completed_upto_ = frame.prev_completed_upto;
    }

    void descend(std::size_t cursor) {
        for (std::size_t idx = cursor; idx < candidates_.size(); ++idx) {
            ++stats.candidates;
            switch (try_candidate(idx)) {
            case Outcome::PruneSymmetry: ++stats.prune_symmetry; continue;
            case Outcome::PruneRow: ++stats.prune_row; continue;
            case Outcome::PruneColumn: ++stats.prune_column; continue;
            case Outcome::PruneOrbit: ++stats.prune_orbit; continue;
            case Outcome::Accepted: break;
            }
            ++stats.nodes;
            if (static_cast<int>(block_.size()) == depth_limit_) handle_leaf();
            else descend(idx + 1);
            undo_last();
        }
    }

    void handle_leaf() {
        if (mode_ == Mode::Census) {
            ++census_count;
            ++stats.found;
            if (sink_) (*sink_)(sorted_block());
            return;
        }
        if (!exact_profiles()) {
            ++stats.full_vector_rejects;
            return;
        }
        if (orbit_active_ && !tally_.complete()) {
            ++stats.full_orbit_rejects;
            return;
        }
        if (cfg_.group != nullptr &&
            setwise_stabilizer_order(*cfg_.group, sorted_block()) !=
                cfg_.targets->required_stabilizer_order) {
            ++stats.full_stabilizer_rejects;
            return;
        }
        ++stats.found;
        blocks.push_back(sorted_block());
    }

    SearchStats stats;
    std::vector<std::vector<Point>> blocks;
    std::uint64_t census_count = 0;

private:
    struct Frame {
        Point point;
        int prev_completed_upto;
    };

    void validate() const {
        const auto& geom = cfg_.geom;
        if (geom.n_rows < 2 || geom.n_cols < 1)
            throw std::invalid_argument("search: bad geometry");
        if (cfg_.rules.col0_at_least_col1 && geom.n_cols < 2)
            throw std::invalid_argument("search: col0_at_least_col1 needs at least two columns");
        const int k = cfg_.k;
        if (k < 2)
            throw std::invalid_argument("search: k must be at least 2");
        if (k < static_cast<int>(cfg_.initial_block.size()))
            throw std::invalid_argument("search: k smaller than the initial block");
        if (static_cast<int>(cfg_.row_vector.entries.size()) != k + 1 ||
            static_cast<int>(cfg_.column_vector.entries.size()) != k + 1)
            throw std::invalid_argument("search: intercept vectors must have k+1 entries");

        auto check_vector = [&](const InterceptVector& vec, int classes) {
            int total = std::accumulate(vec.entries.begin(), vec.entries.end(), 0);
            int points = 0;
            for (int i = 0; i <= k; ++i) points += i * vec.entries[i];
            if (total != classes || points != k)
                throw std::invalid_argument("search: intercept vector inconsistent with geometry");
        };
        check_vector(cfg_.row_vector, geom.n_rows);
        check_vector(cfg_.column_vector, geom.n_cols);

        // the row specialization: a unique 2-row, fully occupied by the
        // initial block, and nothing above occupancy 2
        if (cfg_.row_vector.entries[2] != 1)
            throw std::invalid_argument("search: row vector must have a unique 2-class");
        for (int i = 3; i <= k; ++i)
            if (cfg_.row_vector.entries[i] != 0)
                throw std::invalid_argument("search: row occupancies above 2 are unsupported");

        std::vector<int> init_rows(geom.n_rows, 0);
        Point prev = 0;
        for (Point p : cfg_.initial_block) {
            if (p <= prev || p > geom.degree())
                throw std::invalid_argument("search: initial block must be ascending point ids");
            prev = p;
            ++init_rows[geom.row_of(p)];
        }
        int two_rows = 0;
        for (int c : init_rows) {
            if (c > 2) throw std::invalid_argument("search: initial block has a row above occupancy 2");
            if (c == 2) ++two_rows;
        }
        if (two_rows != 1)
            throw std::invalid_argument("search: initial block must occupy the unique 2-row");

        if (orbit_active_ && (cfg_.table == nullptr || cfg_.targets == nullptr))
            throw std::invalid_argument("search: orbit condition requires table and targets");
        if (cfg_.table != nullptr && cfg_.table->degree() != geom.degree())
            throw std::invalid_argument("search: orbit table degree mismatch");
        if (cfg_.group != nullptr && cfg_.group->degree != geom.degree())
            throw std::invalid_argument("search: group degree mismatch");
    }

    std::vector<Point> sorted_block() const {
        std::vector<Point> sorted(block_);
        std::sort(sorted.begin(), sorted.end());
        return sorted;
    }

    bool exact_profiles() const {
        std::vector<int> profile(static_cast<std::size_t>(cfg_.k) + 1, 0);
        for (Point f = 0; f < cfg_.geom.n_cols; ++f) ++profile[col_count_[f]];
        for (int i = 0; i <= cfg_.k; ++i)
            if (profile[i] != cfg_.column_vector.entries[i]) return false;
        std::fill(profile.begin(), profile.end(), 0);
        for (Point e = 0; e < cfg_.geom.n_rows; ++e) ++profile[row_count_[e]];
        for (int i = 0; i <= cfg_.k; ++i)
            if (profile[i] != cfg_.row_vector.entries[i]) return false;
        return true;
    }

    const SearchConfig& cfg_;
    Mode mode_;
    int depth_limit_;
    bool orbit_active_;
    const BlockSink* sink_;

    std::vector<Point> row_of_, col_of_;
    std::vector<int> suffix_col_;
    std::vector<Point> candidates_;

    std::vector<Point> block_;
    std::vector<int> row_count_, col_count_;
    std::vector<int> ge_count_;
    std::vector<int> completed_count_;
    int completed_upto_ = 0;
    PairTally tally_;
    std::vector<Frame> frames_;
};

struct TreeResult {
    std::vector<std::vector<Point>> blocks;
    SearchStats stats;
    std::uint64_t census_count = 0;
};

TreeResult run_tree(const SearchConfig& cfg, Mode mode, int depth_limit, bool orbit_active,
                    int jobs, const BlockSink* sink) {
    TreeResult result;
    Engine root(cfg, mode, depth_limit, orbit_active, sink);

    if (static_cast<int>(cfg.initial_block.size()) == depth_limit) {
        root.handle_leaf(); // the initial block is the single node at this depth
        result.blocks = std::move(root.blocks);
        result.stats = root.stats;
        result.census_count = root.census_count;
        return result;
    }

    if (jobs <= 1 || sink != nullptr) {
        root.descend(0);
        result.blocks = std::move(root.blocks);
        result.stats = root.stats;
        result.census_count = root.census_count;
        return result;
    }

    // parallel: split on the first extension point; rejected first extensions
    // are classified once here, accepted ones are replayed inside their branch
    std::vector<std::size_t> branch_indices;
    for (std::size_t idx = 0; idx < root.candidates().size(); ++idx) {
        Outcome outcome = root.try_candidate(idx);
        if (outcome == Outcome::Accepted) {
            root.undo_last();
            branch_indices.push_back(idx);
            continue;
        }
        ++root.stats.candidates;
        switch (outcome) {
        case Outcome::PruneSymmetry: ++root.stats.prune_symmetry; break;
        case Outcome::PruneRow: ++root.stats.prune_row; break;
        case Outcome::PruneColumn: ++root.stats.prune_column; break;
        case Outcome::PruneOrbit: ++root.stats.prune_orbit; break;
        case Outcome::Accepted: break;
        }
    }

    std::vector<TreeResult> slots(branch_indices.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t slot = next.fetch_add(1);
            if (slot >= branch_indices.size()) break;
            std::size_t idx = branch_indices[slot];
            Engine engine(cfg, mode, depth_limit, orbit_active, nullptr);
            ++engine.stats.candidates;
            if (engine.try_candidate(idx) != Outcome::Accepted)
                throw std::logic_error("search: branch replay diverged");
            ++engine.stats.nodes;
            if (static_cast<int>(engine.depth()) == depth_limit) engine.handle_leaf();
            else engine.descend(idx + 1);
            engine.undo_last();
            slots[slot].blocks = std::move(engine.blocks);
            slots[slot].stats = engine.stats;
            slots[slot].census_count = engine.census_count;
        }
    };

    unsigned thread_count = std::min<std::size_t>(static_cast<std::size_t>(jobs),
                                                  branch_indices.size());
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < thread_count; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();

    result.stats = root.stats;
    for (TreeResult& slot : slots) {
        result.stats.merge(slot.stats);
        result.census_count += slot.census_count;
        for (auto& block : slot.blocks) result.blocks.push_back(std::move(block));
    }
    return result;
}

} // namespace

SearchResult search(const SearchConfig& config, int jobs) {
    if (config.table == nullptr || config.targets == nullptr || config.group == nullptr)
        throw std::invalid_argument("search: group, table and targets are required");
    TreeResult tree = run_tree(config, Mode::Search, config.k, /*orbit_active=*/true,
                               std::max(jobs, 1), nullptr);
    return SearchResult{std::move(tree.blocks), tree.stats};
}

CensusResult census(const SearchConfig& config, int depth, bool with_orbit_condition,
                    int jobs, const BlockSink* sink) {
    if (depth < static_cast<int>(config.initial_block.size()) || depth > config.k)
        throw std::invalid_argument("census: depth must lie between |initial block| and k");
    TreeResult tree = run_tree(config, Mode::Census, depth, with_orbit_condition,
                               std::max(jobs, 1), sink);
    return CensusResult{tree.census_count, tree.stats};
}

Set1Result search_set1(const PermGroup& group, const PairOrbitTable& table,
                       const OrbitTargets& targets) {
    GridGeometry geom{kRows451, kCols451};
    if (group.degree != geom.degree() || table.degree() != geom.degree())
        throw std::invalid_argument("search_set1: degree mismatch");

    Set1Result result;
    std::vector<std::uint32_t> counts(table.orbit_count() + 1, 0);
    std::vector<Point> block(10);
    block[0] = geom.id(0, 0);
    block[1] = geom.id(0, 1);

    auto tallies_ok = [&](const std::vector<Point>& b) {
        std::fill(counts.begin(), counts.end(), 0);
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = i + 1; j < b.size(); ++j) {
                std::uint16_t orbit = table.orbit_of(b[i], b[j]);
                if (++counts[orbit] > targets.targets[orbit - 1]) return false;
            }
        return true;
    };

    // four 2-columns from {2..10}; the lowest carries the fixed row pair
    // {1,40}, the others ordered distinct choices of {e,41-e}, e in 2..20
    for (int f1 = 2; f1 <= 10; ++f1) {
        block[2] = geom.id(1, static_cast<Point>(f1));
        block[3] = geom.id(40, static_cast<Point>(f1));
        for (int f2 = f1 + 1; f2 <= 10; ++f2) {
            for (int f3 = f2 + 1; f3 <= 10; ++f3) {
                for (int f4 = f3 + 1; f4 <= 10; ++f4) {
                    for (int e2 = 2; e2 <= 20; ++e2) {
                        block[4] = geom.id(static_cast<Point>(e2), static_cast<Point>(f2));
                        block[5] = geom.id(static_cast<Point>(41 - e2), static_cast<Point>(f2));
                        for (int e3 = 2; e3 <= 20; ++e3) {
                            if (e3 == e2) continue;
                            block[6] = geom.id(static_cast<Point>(e3), static_cast<Point>(f3));
                            block[7] = geom.id(static_cast<Point>(41 - e3), static_cast<Point>(f3));
                            for (int e4 = 2; e4 <= 20; ++e4) {
                                if (e4 == e2 || e4 == e3) continue;
                                block[8] = geom.id(static_cast<Point>(e4), static_cast<Point>(f4));
                                block[9] = geom.id(static_cast<Point>(41 - e4), static_cast<Point>(f4));
                                ++result.candidates;
                                if (!tallies_ok(block)) continue;
                                if (setwise_stabilizer_order(group, block) !=
                                    targets.required_stabilizer_order)
                                    continue;
                                std::vector<Point> sorted(block);
                                std::sort(sorted.begin(), sorted.end());
                                result.blocks.push_back(std::move(sorted));
                            }
                        }
                    }
                }
            }
        }
    }
    std::sort(result.blocks.begin(), result.blocks.end());
    return result;
}

} // namespace design
