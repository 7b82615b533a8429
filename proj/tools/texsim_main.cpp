// texsim: curvelet-SVD texture similarity and retrieval benchmark CLI.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "texsim/curvelet.hpp"
#include "texsim/errors.hpp"
#include "texsim/feature_io.hpp"
#include "texsim/features.hpp"
#include "texsim/image_io.hpp"
#include "texsim/imgprep.hpp"
#include "texsim/parallel.hpp"
#include "texsim/retrieval.hpp"
#include "texsim/similarity.hpp"

namespace fs = std::filesystem;
using namespace texsim;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitNumeric = 3;

struct TransformOptions {
    std::optional<int> scales;
    std::optional<int> angles;
};

CurveletParams params_for(const GrayImage& img, const TransformOptions& opt) {
    return make_params(img.rows, img.cols, opt.scales, opt.angles);
}

fs::path default_cache_dir(const fs::path& manifest_path) {
    if (const char* env = std::getenv("TEXSIM_CACHE_DIR")) return fs::path(env);
    return manifest_path.parent_path() / "features";
}

std::vector<fs::path> list_images_sorted(const fs::path& dir) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && has_image_extension(entry.path()))
            files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    return files;
}

int cmd_prepare(const fs::path& source_dir, const std::string& kind, const fs::path& out_dir) {
    if (!fs::is_directory(source_dir)) {
        std::cerr << "error: source is not a directory: " << source_dir << "\n";
        return kExitData;
    }
    auto files = list_images_sorted(source_dir);
    if (files.empty()) {
        std::cerr << "error: no PNG/BMP images in " << source_dir << "\n";
        return kExitData;
    }
    fs::create_directories(out_dir);

    DatasetLayout layout;
    int failures = 0;
    int class_id = 0;
    for (const auto& file : files) {
        try {
            GrayImage img = load_gray(file);
            std::vector<GrayImage> patches =
                kind == "curet" ? prepare_curet(img) : prepare_pertex(img);
            for (size_t s = 0; s < patches.size(); ++s) {
                std::string name =
                    std::to_string(class_id) + "_" + std::to_string(s) + ".png";
                save_png_gray(out_dir / name, patches[s]);
                layout.entries.push_back({class_id, static_cast<int>(s), name});
            }
            ++class_id;
        } catch (const error& e) {
            std::cerr << "error: " << file.filename().string() << ": " << e.what() << "\n";
            ++failures;
        }
    }
    if (class_id == 0) {
        std::cerr << "error: no usable images in " << source_dir << "\n";
        return kExitData;
    }
    layout.class_count = class_id;
    layout.samples_per_class = kind == "curet" ? 3 : 4;
    write_manifest(layout, out_dir / "manifest.json");
    std::cout << "prepared C=" << layout.class_count
              << " S=" << layout.samples_per_class << " (" << layout.entries.size()
              << " patches) in " << out_dir.string() << "\n";
    return failures == 0 ? 0 : kExitData;
}

struct FeatureRun {
    std::vector<FeatureVector> features;
    int extracted = 0;
    int cached = 0;
    std::vector<std::string> errors;
};

// Extracts (or loads from cache) one feature vector per manifest entry.
FeatureRun ensure_features(const DatasetLayout& layout, const fs::path& image_dir,
                           const fs::path& cache_dir, const TransformOptions& opt,
                           int jobs) {
    fs::create_directories(cache_dir);
    FeatureRun run;
    run.features.resize(layout.entries.size());
    std::vector<int> extracted(layout.entries.size(), 0);
    std::vector<std::string> errors(layout.entries.size());

    parallel_for(static_cast<int>(layout.entries.size()), jobs, [&](int i) {
        try {
            GrayImage img = load_gray(image_dir / layout.entries[i].file);
            CurveletParams params = params_for(img, opt);
            fs::path cache_file = cache_dir / cache_file_name(img, params);
            if (fs::exists(cache_file)) {
                run.features[i] = to_feature_vector(read_feature_file(cache_file));
                return;
            }
            FeatureFile file =
                make_feature_file(layout.entries[i].file, forward(img, params));
            write_feature_file(cache_file, file);
            run.features[i] = to_feature_vector(file);
            extracted[i] = 1;
        } catch (const error& e) {
            errors[i] = layout.entries[i].file + ": " + e.what();
        }
    });

    for (size_t i = 0; i < layout.entries.size(); ++i) {
        if (!errors[i].empty())
            run.errors.push_back(errors[i]);
        else if (extracted[i])
            run.extracted++;
        else
            run.cached++;
    }
    return run;
}

int cmd_features(const fs::path& manifest_path, const fs::path& cache_dir,
                 const TransformOptions& opt, int jobs) {
    DatasetLayout layout = read_manifest(manifest_path);
    FeatureRun run =
        ensure_features(layout, manifest_path.parent_path(), cache_dir, opt, jobs);
    std::cout << "features: extracted " << run.extracted << ", cached " << run.cached
              << ", failed " << run.errors.size() << "\n";
    for (const auto& msg : run.errors) std::cerr << "error: " << msg << "\n";
    return run.errors.empty() ? 0 : kExitData;
}

int cmd_sim(const fs::path& image_a, const fs::path& image_b, const TransformOptions& opt) {
    GrayImage a = load_gray(image_a);
    GrayImage b = load_gray(image_b);
    if (a.rows != b.rows || a.cols != b.cols)
        throw incompatibility_error("images have different dimensions");
    CurveletParams params = params_for(a, opt);
    FeatureVector fa = extract_features(forward(a, params));
    FeatureVector fb = extract_features(forward(b, params));
    std::printf("%.6f\n", czekanowski(fa, fb).value);
    return 0;
}

int cmd_benchmark(const fs::path& manifest_path, const std::string& measure,
                  const fs::path& out_dir, const fs::path& cache_dir,
                  const TransformOptions& opt, int jobs) {
    DatasetLayout layout = read_manifest(manifest_path);
    if (layout.class_count < 2 || layout.samples_per_class < 2)
        throw config_error("benchmark needs at least 2 classes and 2 samples per class");
    fs::create_directories(out_dir);
    fs::path image_dir = manifest_path.parent_path();

    ScoreMatrix scores;
    if (measure == "mse") {
        std::vector<GrayImage> images(layout.entries.size());
        parallel_for(static_cast<int>(layout.entries.size()), jobs,
                     [&](int i) { images[i] = load_gray(image_dir / layout.entries[i].file); });
        scores = pairwise_mse(images, jobs);
    } else {
        FeatureRun run = ensure_features(layout, image_dir, cache_dir, opt, jobs);
        if (!run.errors.empty()) {
            for (const auto& msg : run.errors) std::cerr << "error: " << msg << "\n";
            return kExitData;
        }
        scores = pairwise_scores(run.features, jobs);
    }

    RetrievalReport report = evaluate(scores, layout);
    write_report_json(out_dir / "report.json", report, measure, layout);
    write_roc_csv(out_dir / "roc.csv", report.roc);
    std::printf("P@1 %.4f  MRR %.4f  MAP %.4f  AUC %.4f\n", report.p_at_1, report.mrr,
                report.map, report.auc);
    return 0;
}

int cmd_wedges(const fs::path& image_path, const TransformOptions& opt) {
    GrayImage img = load_gray(image_path);
    CurveletParams params = params_for(img, opt);
    auto energies = wedge_energies(forward(img, params));
    std::printf("scale,orientation,rows,cols,energy\n");
    for (const auto& w : energies)
        std::printf("%d,%d,%d,%d,%.12g\n", w.scale, w.orientation, w.rows, w.cols, w.energy);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Curvelet-SVD texture similarity measure and retrieval benchmark"};
    app.require_subcommand(1);

    TransformOptions opt;
    int jobs = std::max(1u, std::thread::hardware_concurrency());

    auto add_transform_flags = [&](CLI::App* cmd) {
        cmd->add_option("--scales", opt.scales, "number of curvelet scales (default: auto)");
        cmd->add_option("--angles", opt.angles,
                        "orientations at the coarsest directional scale (default: 16)");
    };

    // prepare
    std::string kind;
    fs::path source_dir, out_dir, manifest_path, cache_dir_flag, image_a, image_b;
    auto* prepare = app.add_subcommand("prepare", "cut a source directory into dataset patches");
    prepare->add_option("source", source_dir, "directory of source images")->required();
    prepare->add_option("--kind", kind, "dataset recipe")
        ->required()
        ->check(CLI::IsMember({"curet", "pertex"}));
    prepare->add_option("--out", out_dir, "output directory")->required();

    // features
    auto* features = app.add_subcommand("features", "extract and cache feature files");
    features->add_option("manifest", manifest_path, "manifest.json of a prepared dataset")
        ->required();
    features->add_option("--cache", cache_dir_flag,
                         "feature cache directory (default: $TEXSIM_CACHE_DIR or "
                         "<manifest dir>/features)");
    features->add_option("--jobs", jobs, "worker count")->check(CLI::PositiveNumber);
    add_transform_flags(features);

    // sim
    auto* sim = app.add_subcommand("sim", "similarity score between two images");
    sim->add_option("image_a", image_a)->required();
    sim->add_option("image_b", image_b)->required();
    add_transform_flags(sim);

    // benchmark (+ roc alias)
    std::string measure = "czekanowski";
    auto add_benchmark_opts = [&](CLI::App* cmd) {
        cmd->add_option("manifest", manifest_path, "manifest.json of a prepared dataset")
            ->required();
        cmd->add_option("--measure", measure, "similarity measure")
            ->check(CLI::IsMember({"czekanowski", "mse"}));
        cmd->add_option("--out", out_dir, "output directory for report.json and roc.csv")
            ->required();
        cmd->add_option("--cache", cache_dir_flag, "feature cache directory");
        cmd->add_option("--jobs", jobs, "worker count")->check(CLI::PositiveNumber);
        add_transform_flags(cmd);
    };
    auto* benchmark =
        app.add_subcommand("benchmark", "run the leave-one-out retrieval experiment");
    add_benchmark_opts(benchmark);
    auto* roc = app.add_subcommand("roc", "alias of benchmark");
    add_benchmark_opts(roc);

    // wedges (debug)
    auto* wedges = app.add_subcommand("wedges", "dump per-wedge energies as CSV");
    wedges->add_option("image", image_a)->required();
    add_transform_flags(wedges);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;  // --help parses to code 0
    }

    try {
        if (prepare->parsed()) return cmd_prepare(source_dir, kind, out_dir);
        if (features->parsed()) {
            fs::path cache = cache_dir_flag.empty() ? default_cache_dir(manifest_path)
                                                    : cache_dir_flag;
            return cmd_features(manifest_path, cache, opt, jobs);
        }
        if (sim->parsed()) return cmd_sim(image_a, image_b, opt);
        if (benchmark->parsed() || roc->parsed()) {
            fs::path cache = cache_dir_flag.empty() ? default_cache_dir(manifest_path)
                                                    : cache_dir_flag;
            return cmd_benchmark(manifest_path, measure, out_dir, cache, opt, jobs);
        }
        if (wedges->parsed()) return cmd_wedges(image_a, opt);
    } catch (const numeric_error& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const fs::filesystem_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return kExitUsage;
}
