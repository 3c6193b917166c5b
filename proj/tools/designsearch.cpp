// Command-line front end for the starter-block design searches: parameter
// analysis, pair-orbit tables, the backtracking search and census, block
// verification, and the projective-plane control construction.

#include "design/param_spec.hpp"
#include "design/search.hpp"
#include "design/singer.hpp"
#include "design/verifier.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

using namespace design;

struct CommonOptions {
    std::string spec_path;
    std::string out_dir;
    int group_index = 0; // 0 = use the spec's index
    int vector_index = 0;
    int depth = 0;
    int jobs = 1;
    bool with_orbit_condition = false;
};

std::string out_path(const CommonOptions& opt, const ParameterSetSpec& spec,
                     const std::string& file) {
    std::string dir = !opt.out_dir.empty() ? opt.out_dir
                      : !spec.out_dir.empty() ? spec.out_dir
                                              : ".";
    std::filesystem::create_directories(dir);
    return (std::filesystem::path(dir) / file).string();
}

std::string group_tag(const ParameterSetSpec& spec, int index) {
    switch (spec.family) {
    case ParameterSetSpec::Family::Set1:
    case ParameterSetSpec::Family::Set2: return "_g" + std::to_string(index);
    case ParameterSetSpec::Family::PgTest:
    case ParameterSetSpec::Family::Inline: return "";
    }
    return "";
}

int effective_index(const CommonOptions& opt, const ParameterSetSpec& spec) {
    return opt.group_index ? opt.group_index : spec.group_index;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << text;
}

int cmd_params(const CommonOptions& opt) {
    ParameterSetSpec spec = parse_spec_file(opt.spec_path);
    ParameterShape shape = resolve_shape(spec);
    const int k = shape.k;

    std::cout << "name: " << spec.name << '\n';
    std::cout << "v: " << shape.n_rows * shape.n_cols << '\n';
    std::cout << "k: " << k << '\n';
    std::cout << "columns: " << shape.n_cols << " classes of " << shape.n_rows << '\n';
    std::cout << "rows: " << shape.n_rows << " classes of " << shape.n_cols << '\n';

    DDSolution cols = dd_solve(k, shape.n_rows, shape.n_cols);
    DDSolution rows = dd_solve(k, shape.n_cols, shape.n_rows);
    std::cout << "dd.bound: v=" << cols.v << " limit=" << cols.bound
              << (cols.bound_violated ? " DD bound violated" : " ok") << '\n';
    for (const DDParams& p : cols.params)
        std::cout << "dd.columns: x=" << p.x << " y=" << p.y << '\n';
    if (cols.params.empty()) std::cout << "dd.columns: none\n";
    for (const DDParams& p : rows.params)
        std::cout << "dd.rows: x=" << p.x << " y=" << p.y << '\n';
    if (rows.params.empty()) std::cout << "dd.rows: none\n";
    if (cols.params.size() != 1 || rows.params.size() != 1) return 0;

    auto col_vectors = intercept_vectors(k, cols.params.front().x, shape.n_cols, shape.n_rows);
    auto row_vectors = intercept_vectors(k, rows.params.front().x, shape.n_rows, shape.n_cols);
    std::cout << "column_vectors: " << col_vectors.size() << '\n';
    for (std::size_t i = 0; i < col_vectors.size(); ++i)
        std::cout << "  " << (i + 1) << ": " << col_vectors[i].to_string() << '\n';
    std::cout << "row_vectors: " << row_vectors.size() << '\n';
    for (std::size_t i = 0; i < row_vectors.size(); ++i)
        std::cout << "  " << (i + 1) << ": " << row_vectors[i].to_string() << '\n';

    if (row_vectors.size() == 1 && row_vectors.front().entries.size() > 2 &&
        row_vectors.front().entries[2] == 1) {
        std::size_t total = 0;
        std::vector<std::string> lines;
        for (std::size_t i = 0; i < col_vectors.size(); ++i) {
            auto masks = enumerate_masks(row_vectors.front(), col_vectors[i]);
            char label = 'A';
            for (const Mask& m : masks) {
                lines.push_back("  mask " + std::to_string(i + 1) + std::string(1, label++) +
                                ": column occupancies (" + std::to_string(m.m1) + "," +
                                std::to_string(m.m2) + ")");
            }
            total += masks.size();
        }
        std::cout << "masks: " << total << '\n';
        for (const std::string& line : lines) std::cout << line << '\n';
    } else {
        std::cout << "masks: unsupported shape\n";
    }
    return 0;
}

int cmd_orbits(const CommonOptions& opt) {
    ParameterSetSpec spec = parse_spec_file(opt.spec_path);
    int index = effective_index(opt, spec);
    SearchSetup setup = build_search_setup(spec, index);
    std::string path = out_path(opt, spec, spec.name + group_tag(spec, index) + ".orbits");
    write_orbit_table_file(path, setup.table);
    std::cout << "degree: " << setup.table.degree() << '\n';
    std::cout << "orbits: " << setup.table.orbit_count() << '\n';
    std::cout << "group.order: " << setup.group.order() << '\n';
    std::cout << "file: " << path << '\n';
    return 0;
}

int cmd_search(const CommonOptions& opt) {
    ParameterSetSpec spec = parse_spec_file(opt.spec_path);
    int index = effective_index(opt, spec);
    SearchSetup setup = build_search_setup(spec, index);
    if (!setup.targets.feasible) {
        std::cout << "INFEASIBLE: " << setup.targets.reason << '\n';
        return 0;
    }

    std::string base = spec.name + group_tag(spec, index);
    std::vector<std::vector<Point>> blocks;
    std::string stats_text;
    if (spec.family == ParameterSetSpec::Family::Set1) {
        Set1Result result = search_set1(setup.group, setup.table, setup.targets.targets);
        blocks = std::move(result.blocks);
        stats_text = "candidates: " + std::to_string(result.candidates) + "\nfound: " +
                     std::to_string(blocks.size()) + "\n";
        std::cout << "candidates: " << result.candidates << '\n';
    } else {
        int vector_index = opt.vector_index ? opt.vector_index : spec.vector_index;
        SearchConfig cfg = setup.config(vector_index);
        SearchResult result = search(cfg, opt.jobs);
        blocks = std::move(result.blocks);
        stats_text = result.stats.to_text();
        base += "_v" + std::to_string(vector_index);
    }
    write_block_list_file(out_path(opt, spec, base + ".blocks"), blocks);
    write_text_file(out_path(opt, spec, base + ".stats"), stats_text);
    std::cout << stats_text;
    std::cout << "FOUND " << blocks.size() << '\n';
    return 0;
}

int cmd_census(const CommonOptions& opt) {
    ParameterSetSpec spec = parse_spec_file(opt.spec_path);
    int index = effective_index(opt, spec);
    SearchSetup setup = build_search_setup(spec, index);
    bool with_orbit = opt.with_orbit_condition || spec.census_orbit_condition;
    if (with_orbit && !setup.targets.feasible) {
        std::cout << "INFEASIBLE: " << setup.targets.reason << '\n';
        return 0;
    }
    int depth = opt.depth ? opt.depth : spec.census_depth.value_or(setup.k);
    int vector_index = opt.vector_index ? opt.vector_index : spec.vector_index;
    SearchConfig cfg = setup.config(vector_index);

    std::string base = spec.name + group_tag(spec, index) + "_v" +
                       std::to_string(vector_index) + "_census_q" + std::to_string(depth) +
                       (with_orbit ? "_oc" : "");
    CensusResult result;
    if (!opt.out_dir.empty() || !spec.out_dir.empty()) {
        std::string path = out_path(opt, spec, base + ".blocks");
        std::ofstream stream(path);
        if (!stream) throw std::runtime_error("cannot open for writing: " + path);
        BlockSink sink = [&stream](const std::vector<Point>& block) {
            for (std::size_t i = 0; i < block.size(); ++i)
                stream << (i ? " " : "") << block[i];
            stream << '\n';
        };
        result = census(cfg, depth, with_orbit, opt.jobs, &sink);
        if (!stream) throw std::runtime_error("write failed: " + path);
        std::cout << "file: " << path << '\n';
    } else {
        result = census(cfg, depth, with_orbit, opt.jobs);
    }
    std::cout << result.stats.to_text();
    std::cout << "COUNT " << result.count << '\n';
    return 0;
}

int cmd_verify(const CommonOptions& opt, const std::string& blocks_path) {
    ParameterSetSpec spec = parse_spec_file(opt.spec_path);
    int index = effective_index(opt, spec);
    SearchSetup setup = build_search_setup(spec, index);
    auto blocks = read_block_list_file(blocks_path);
    std::vector<std::vector<std::vector<Point>>> partitions{
        setup.geom.row_partition(), setup.geom.column_partition()};
    std::vector<std::string> names{"rows", "columns"};

    std::size_t ok = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        Design developed = develop(setup.group, blocks[i]);
        VerificationReport report = verify(developed, &setup.group, &partitions, &names);
        std::cout << "block " << (i + 1) << ":\n" << report.to_text();
        if (report.is_design && report.lambda == 1) ++ok;
    }
    std::cout << "VERIFIED " << ok << "/" << blocks.size() << '\n';
    return 0;
}

int cmd_pg(unsigned p, const CommonOptions& opt) {
    PlaneModel plane = build_plane(p);
    ParameterSetSpec dummy;
    dummy.name = "pg" + std::to_string(p);
    dummy.out_dir = opt.out_dir;
    std::string path = out_path(opt, dummy, dummy.name + "_plane.blocks");
    write_block_list_file(path, plane.lines);

    PermGroup singer_group = enumerate_group({plane.singer});
    std::vector<std::vector<std::vector<Point>>> partitions;
    std::vector<std::string> names;
    unsigned v = plane.v();
    for (unsigned a = 2; a < v; ++a) {
        if (v % a != 0) continue;
        partitions.push_back(singer_partition(plane, a));
        names.push_back("mod" + std::to_string(a));
    }

    Design d{plane.v(), static_cast<int>(p + 1), plane.lines};
    VerificationReport report = verify(d, &singer_group, &partitions, &names);
    std::cout << "p: " << p << '\n';
    std::cout << "primitive_cubic: [" << plane.poly.coeffs[0] << "," << plane.poly.coeffs[1]
              << "," << plane.poly.coeffs[2] << "]\n";
    std::cout << report.to_text();
    std::cout << "file: " << path << '\n';
    std::cout << (report.is_projective_plane ? "PLANE ok" : "PLANE FAILED") << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Starter-block searches for line-transitive point-imprimitive designs"};
    app.require_subcommand(1);

    CommonOptions opt;
    std::string blocks_path;
    unsigned pg_prime = 7;

    auto add_common = [&](CLI::App* cmd, bool needs_spec) {
        auto* spec_opt = cmd->add_option("--spec", opt.spec_path, "parameter file");
        if (needs_spec) spec_opt->required();
        cmd->add_option("--out", opt.out_dir, "output directory");
        cmd->add_option("--group-index", opt.group_index, "group index 1..4")
            ->check(CLI::Range(1, 4));
        cmd->add_option("--vector", opt.vector_index, "column intercept vector index (1-based)");
        cmd->add_option("--jobs", opt.jobs, "worker threads")->check(CLI::PositiveNumber);
    };

    CLI::App* params = app.add_subcommand("params", "parameter and mask analysis");
    add_common(params, true);
    CLI::App* orbits = app.add_subcommand("orbits", "write the pair-orbit table");
    add_common(orbits, true);
    CLI::App* search_cmd = app.add_subcommand("search", "full starter-block search");
    add_common(search_cmd, true);
    CLI::App* census_cmd = app.add_subcommand("census", "count partial blocks at a depth");
    add_common(census_cmd, true);
    census_cmd->add_option("--depth", opt.depth, "census depth q");
    census_cmd->add_flag("--with-orbit-condition", opt.with_orbit_condition,
                         "apply the partial orbit condition");
    CLI::App* verify_cmd = app.add_subcommand("verify", "develop and verify starter blocks");
    add_common(verify_cmd, true);
    verify_cmd->add_option("blocks", blocks_path, "block list file")->required();
    CLI::App* pg_cmd = app.add_subcommand("pg", "build and verify the plane PG(2,p)");
    pg_cmd->add_option("p", pg_prime, "prime order")->required();
    pg_cmd->add_option("--out", opt.out_dir, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (params->parsed()) return cmd_params(opt);
        if (orbits->parsed()) return cmd_orbits(opt);
        if (search_cmd->parsed()) return cmd_search(opt);
        if (census_cmd->parsed()) return cmd_census(opt);
        if (verify_cmd->parsed()) return cmd_verify(opt, blocks_path);
        if (pg_cmd->parsed()) return cmd_pg(pg_prime, opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
