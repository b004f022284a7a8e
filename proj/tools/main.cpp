// vietlab command-line workbench: build complexes, run persistence, compare
// diagrams, sample metric thickenings, and run the named experiments.
//
// Exit codes: 0 success, 2 input error, 3 resource cap, 4 audit counterexample.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vietlab/audits.hpp"
#include "vietlab/complex.hpp"
#include "vietlab/experiments.hpp"
#include "vietlab/io.hpp"
#include "vietlab/local_structure.hpp"
#include "vietlab/persistence.hpp"
#include "vietlab/sampling.hpp"
#include "vietlab/thickening.hpp"

namespace {

namespace fs = std::filesystem;
using namespace vietlab;

constexpr std::size_t kComplexSimplexCap = 10'000'000;

struct ResourceCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::size_t measure_size_cap() {
    if (const char* env = std::getenv("VIETLAB_SIZE_CAP")) {
        const long long parsed = std::atoll(env);
        if (parsed > 0) return static_cast<std::size_t>(parsed);
    }
    return kDefaultSampleCap;
}

struct InputSpec {
    std::string path;
    std::string format = "points";  // points | matrix
};

struct LoadedSpace {
    std::optional<PointCloud> cloud;  // present for points input
    FiniteMetricSpace space;
};

LoadedSpace load_space(const InputSpec& input) {
    if (input.format == "points") {
        PointCloud cloud = io::load_point_cloud_csv(input.path);
        FiniteMetricSpace space = cloud.to_metric_space();
        return LoadedSpace{std::move(cloud), std::move(space)};
    }
    if (input.format == "matrix")
        return LoadedSpace{std::nullopt, io::load_distance_matrix_csv(input.path)};
    throw std::runtime_error("unknown input format: " + input.format);
}

Cover make_cover(const std::string& type, double r, const LoadedSpace& loaded,
                 const std::string& cover_file) {
    if (type == "vr") return Cover(DiameterCover{r});
    if (type == "cech") return Cover(BallCover{r});
    if (type == "cech-ambient") {
        if (!loaded.cloud)
            throw std::runtime_error("cech-ambient needs point input (coordinates)");
        return Cover(AmbientBallCover{*loaded.cloud, r});
    }
    if (type == "explicit") {
        if (cover_file.empty()) throw std::runtime_error("explicit cover needs --cover FILE");
        return Cover(io::load_explicit_cover_json(cover_file));
    }
    throw std::runtime_error("unknown cover type: " + type);
}

void print_bars(const PersistenceDiagram& diagram, int up_to_dim) {
    for (int dim = 0; dim <= up_to_dim && dim <= diagram.max_dim(); ++dim) {
        std::cout << "dim " << dim << ":";
        if (diagram.bars(dim).empty()) std::cout << " (none)";
        for (const auto& bar : diagram.bars(dim)) {
            std::cout << " (" << io::format_double(bar.birth) << ","
                      << (bar.essential() ? std::string("inf") : io::format_double(bar.death))
                      << ")";
        }
        std::cout << '\n';
    }
}

int cmd_complex(const InputSpec& input, const std::string& type, double r,
                const std::string& cover_file, int max_dim, const std::string& output) {
    const LoadedSpace loaded = load_space(input);
    const Cover cover = make_cover(type, r, loaded, cover_file);
    const SimplicialComplex complex = vietoris_complex(loaded.space, cover, max_dim);
    if (complex.simplex_count() > kComplexSimplexCap)
        throw ResourceCapError("complex exceeds simplex cap");
    const auto counts = complex.counts();
    std::cout << "counts ";
    for (std::size_t d = 0; d < counts.size(); ++d)
        std::cout << (d ? "/" : "") << counts[d];
    std::cout << '\n';
    if (!output.empty()) io::save_complex_json(output, complex);
    return 0;
}

int cmd_persist(const InputSpec& input, double r_max, int max_dim, const std::string& output) {
    const LoadedSpace loaded = load_space(input);
    // one simplex dimension above the requested homology, so top-dimension
    // classes can die
    const Filtration filtration = build_vr_filtration(loaded.space, max_dim + 1, r_max);
    if (filtration.entries().size() > kComplexSimplexCap)
        throw ResourceCapError("filtration exceeds simplex cap");
    PersistenceDiagram diagram = persistence(filtration);
    diagram.dims.resize(static_cast<std::size_t>(max_dim) + 1);
    print_bars(diagram, max_dim);
    if (!output.empty()) io::save_diagram_json(output, diagram);
    return 0;
}

int cmd_compare(const std::string& file_a, const std::string& file_b, int dim) {
    PersistenceDiagram a = io::load_diagram_json(file_a);
    PersistenceDiagram b = io::load_diagram_json(file_b);
    if (a.r_max != b.r_max) {
        std::cerr << "warning: diagrams have different r_max (" << io::format_double(a.r_max)
                  << " vs " << io::format_double(b.r_max) << "); comparing finite bars only\n";
        for (auto* diagram : {&a, &b})
            for (auto& bars : diagram->dims)
                std::erase_if(bars, [](const PersistenceBar& bar) { return bar.essential(); });
    }
    std::cout << io::format_double(bottleneck_distance(a, b, dim)) << '\n';
    return 0;
}

int cmd_thicken(const InputSpec& input, const std::string& type, double r, int grid_m,
                int max_support, const std::string& out_dir) {
    const LoadedSpace loaded = load_space(input);
    const Cover cover = make_cover(type, r, loaded, "");
    auto space = std::make_shared<FiniteMetricSpace>(loaded.space);
    const ThickeningSpec spec{space, cover, 1.0};
    const SampledThickening sample = sample_thickening(spec, grid_m, max_support, measure_size_cap());
    fs::create_directories(out_dir);
    io::save_measures_csv(fs::path(out_dir) / "measures.csv", sample.measures);
    io::save_distance_matrix_csv(fs::path(out_dir) / "distances.csv", *sample.metric);
    std::cout << "measures " << sample.measures.size() << '\n';
    return 0;
}

PointCloud experiment_cloud(const std::string& shape, int n, double noise, std::uint64_t seed,
                            const std::string& input) {
    if (shape == "circle") return circle_cloud(n, noise, seed);
    if (shape == "file") {
        if (input.empty()) throw std::runtime_error("shape=file needs --input FILE");
        return io::load_point_cloud_csv(input);
    }
    if (shape == "torus-grid")
        throw std::runtime_error("torus-grid is not supported by this experiment");
    throw std::runtime_error("unknown shape: " + shape);
}

int cmd_experiment_latschev(int n, double noise, std::uint64_t seed, int seeds, double r_max,
                            const std::string& out_dir) {
    LatschevConfig config;
    config.n = n;
    config.noise = noise;
    config.seed = seed;
    config.r_max = r_max;
    const auto results = run_latschev_sweep(config, seeds);

    nlohmann::ordered_json report;
    report["experiment"] = "latschev";
    report["n"] = n;
    report["noise"] = noise;
    report["base_seed"] = seed;
    report["r_max"] = r_max;
    auto& runs = report["runs"] = nlohmann::ordered_json::array();
    int passes = 0;
    for (const auto& result : results) {
        nlohmann::ordered_json run;
        run["seed"] = result.seed;
        run["dominant_count"] = result.dominant_count;
        run["dominant_length"] = result.dominant_length;
        run["max_minor_length"] = result.max_minor_length;
        run["sufficient_sample"] = result.sufficient_sample;
        run["pass"] = result.pass;
        auto& bars = run["h1"] = nlohmann::ordered_json::array();
        for (const auto& bar : result.h1) {
            nlohmann::ordered_json pair = nlohmann::ordered_json::array();
            pair.push_back(bar.birth);
            if (bar.essential())
                pair.push_back("inf");
            else
                pair.push_back(bar.death);
            bars.push_back(std::move(pair));
        }
        runs.push_back(std::move(run));
        passes += result.pass ? 1 : 0;
        std::cout << "seed " << result.seed << ": " << (result.pass ? "PASS" : "FAIL")
                  << " (dominant " << result.dominant_count << ", longest "
                  << io::format_double(result.dominant_length) << ")";
        if (!result.sufficient_sample) std::cout << " [insufficient sampling]";
        std::cout << '\n';
    }
    report["passes"] = passes;
    report["total"] = seeds;
    if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        std::ofstream out(fs::path(out_dir) / "latschev_report.json");
        out << report.dump(2) << '\n';
    }
    std::cout << "passes " << passes << "/" << seeds << '\n';
    return 0;
}

int cmd_experiment_probe(const std::string& shape, int n, double noise, std::uint64_t seed,
                         const std::string& input, double r, std::vector<int> grids,
                         int max_support, const std::string& out_dir) {
    const PointCloud cloud = experiment_cloud(shape, n, noise, seed, input);
    ThickeningProbeConfig config;
    config.r = r;
    if (!grids.empty()) config.grids = std::move(grids);
    config.max_support = max_support;
    config.size_cap = measure_size_cap();
    const ThickeningProbeResult result = run_thickening_probe(cloud, config);

    nlohmann::ordered_json report;
    report["experiment"] = "thickening-probe";
    report["r"] = r;
    report["max_support"] = max_support;
    report["vr_betti"] = result.vr_betti;
    auto& rows = report["grids"] = nlohmann::ordered_json::array();
    for (const auto& row : result.grids) {
        nlohmann::ordered_json item;
        item["grid_m"] = row.grid_m;
        item["measures"] = row.measure_count;
        item["resolution"] = row.resolution;
        item["window"] = {row.window_lo, row.window_hi};
        item["window_betti"] = row.window_betti;
        item["agrees"] = row.agrees;
        rows.push_back(std::move(item));
        std::cout << "grid_m " << row.grid_m << ": measures " << row.measure_count << ", window ["
                  << io::format_double(row.window_lo) << ", " << io::format_double(row.window_hi)
                  << "], betti";
        for (int b : row.window_betti) std::cout << ' ' << b;
        std::cout << (row.agrees ? " AGREE" : " DISAGREE") << '\n';
    }
    report["pass"] = result.pass;
    if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        std::ofstream out(fs::path(out_dir) / "probe_report.json");
        out << report.dump(2) << '\n';
    }
    std::cout << (result.pass ? "PASS" : "FAIL") << '\n';
    return 0;
}

int cmd_experiment_neighborhood(std::uint64_t seed, double epsilon, const std::string& out_dir) {
    if (epsilon == 0.0) {
        // strict inequalities make even the base measure fail at eps = 0
        nlohmann::ordered_json report;
        report["experiment"] = "neighborhood";
        report["note"] = "empty neighborhood: at epsilon=0 the strict basis contains no measure";
        report["pass"] = true;
        if (!out_dir.empty()) {
            fs::create_directories(out_dir);
            std::ofstream out(fs::path(out_dir) / "neighborhood_audits.json");
            out << report.dump(2) << '\n';
        }
        std::cout << report.dump(2) << '\n';
        return 0;
    }
    AuditConfig config;
    config.seed = seed;
    const auto results = run_neighborhood_audits(config);
    const std::string report = io::audit_report_json(results);
    if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        std::ofstream out(fs::path(out_dir) / "neighborhood_audits.json");
        out << report << '\n';
    }
    std::cout << report << '\n';
    return all_passed(results) ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"vietlab: Vietoris complexes, metric thickenings, and persistence"};
    app.require_subcommand(1);

    InputSpec input;
    std::string type = "vr", cover_file, output, out_dir, shape = "circle", input_file;
    double r = 1.0, r_max = 2.0, noise = 0.05, epsilon = -1.0;
    int max_dim = 2, dim = 1, grid_m = 2, max_support = 2, n = 100, seeds = 1;
    std::uint64_t seed = 0;
    std::vector<int> grids;
    std::string file_a, file_b;

    auto* complex_cmd = app.add_subcommand("complex", "Build a complex and dump it as JSON");
    complex_cmd->add_option("--input", input.path, "point or matrix CSV")->required();
    complex_cmd->add_option("--input-format", input.format, "points|matrix");
    complex_cmd->add_option("--type", type, "vr|cech|cech-ambient|explicit");
    complex_cmd->add_option("--r", r, "scale parameter");
    complex_cmd->add_option("--cover", cover_file, "explicit cover JSON");
    complex_cmd->add_option("--max-dim", max_dim, "dimension cap (default 2)");
    complex_cmd->add_option("--output", output, "complex JSON path");

    auto* persist_cmd = app.add_subcommand("persist", "VR persistence diagram");
    persist_cmd->add_option("--input", input.path, "point or matrix CSV")->required();
    persist_cmd->add_option("--input-format", input.format, "points|matrix");
    persist_cmd->add_option("--r-max", r_max, "filtration truncation")->required();
    persist_cmd->add_option("--max-dim", dim, "top homology dimension (default 1)");
    persist_cmd->add_option("--output", output, "diagram JSON path");

    auto* compare_cmd = app.add_subcommand("compare", "Bottleneck distance between diagrams");
    compare_cmd->add_option("a", file_a, "first diagram JSON")->required();
    compare_cmd->add_option("b", file_b, "second diagram JSON")->required();
    compare_cmd->add_option("--dim", dim, "homology dimension (default 1)");

    auto* thicken_cmd = app.add_subcommand("thicken", "Sample a metric thickening");
    thicken_cmd->add_option("--input", input.path, "point or matrix CSV")->required();
    thicken_cmd->add_option("--input-format", input.format, "points|matrix");
    thicken_cmd->add_option("--type", type, "vr|cech|cech-ambient");
    thicken_cmd->add_option("--r", r, "scale parameter")->required();
    thicken_cmd->add_option("--grid-m", grid_m, "weight grid resolution")->required();
    thicken_cmd->add_option("--max-support", max_support, "support size cap")->required();
    thicken_cmd->add_option("--out-dir", out_dir, "output directory")->required();

    auto* experiment_cmd = app.add_subcommand("experiment", "Named experiments");
    experiment_cmd->require_subcommand(1);

    auto* latschev_cmd = experiment_cmd->add_subcommand("latschev", "noisy-circle recovery");
    latschev_cmd->add_option("--n", n, "sample count");
    latschev_cmd->add_option("--noise", noise, "radial noise sigma");
    latschev_cmd->add_option("--seed", seed, "base seed")->required();
    latschev_cmd->add_option("--seeds", seeds, "consecutive seeds to run");
    latschev_cmd->add_option("--r-max", r_max, "filtration truncation");
    latschev_cmd->add_option("--out-dir", out_dir, "report directory");

    auto* probe_cmd =
        experiment_cmd->add_subcommand("thickening-probe", "complex vs sampled thickening");
    probe_cmd->add_option("--shape", shape, "circle|file (torus-grid reserved)");
    probe_cmd->add_option("--n", n, "sample count for circle shape");
    probe_cmd->add_option("--noise", noise, "circle noise");
    probe_cmd->add_option("--seed", seed, "seed")->required();
    probe_cmd->add_option("--input", input_file, "point CSV for shape=file");
    probe_cmd->add_option("--r", r, "cover scale")->required();
    probe_cmd->add_option("--grid-m", grids, "grid resolutions (repeatable; default 2 3 4)");
    probe_cmd->add_option("--max-support", max_support, "support size cap");
    probe_cmd->add_option("--out-dir", out_dir, "report directory");

    auto* neighborhood_cmd =
        experiment_cmd->add_subcommand("neighborhood", "randomized neighborhood audits");
    neighborhood_cmd->add_option("--seed", seed, "seed")->required();
    neighborhood_cmd->add_option("--epsilon", epsilon, "0 exercises degenerate basis");
    neighborhood_cmd->add_option("--out-dir", out_dir, "report directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(complex_cmd))
            return cmd_complex(input, type, r, cover_file, max_dim, output);
        if (app.got_subcommand(persist_cmd)) return cmd_persist(input, r_max, dim, output);
        if (app.got_subcommand(compare_cmd)) return cmd_compare(file_a, file_b, dim);
        if (app.got_subcommand(thicken_cmd))
            return cmd_thicken(input, type, r, grid_m, max_support, out_dir);
        if (experiment_cmd->got_subcommand(latschev_cmd)) {
            if (shape != "circle") throw std::runtime_error("latschev supports shape=circle only");
            return cmd_experiment_latschev(n, noise, seed, seeds, r_max, out_dir);
        }
        if (experiment_cmd->got_subcommand(probe_cmd))
            return cmd_experiment_probe(shape, n, noise, seed, input_file, r, grids, max_support,
                                        out_dir);
        if (experiment_cmd->got_subcommand(neighborhood_cmd))
            return cmd_experiment_neighborhood(seed, epsilon, out_dir);
    } catch (const SampleTooLarge& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const ResourceCapError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
