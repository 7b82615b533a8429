#include "texsim/feature_io.hpp"

#include <fstream>

#include "json.hpp"
#include "texsim/digest.hpp"
#include "texsim/errors.hpp"

namespace texsim {

FeatureFile make_feature_file(const std::string& image_path,
                              const CurveletDecomposition& decomposition) {
    const CurveletParams& p = decomposition.params;
    FeatureFile file;
    file.image_path = image_path;
    file.image_rows = decomposition.image_rows;
    file.image_cols = decomposition.image_cols;
    file.params = p;
    for (const auto& w : decomposition.wedges) {
        bool directional = w.scale != 1 && w.scale != p.scales;
        if (directional && w.orientation > orientation_count(p, w.scale) / 2) continue;
        WedgeSpectrum ws = analyze_wedge(w.scale, w.orientation, w.coeffs);
        file.wedges.push_back({ws.scale, ws.orientation,
                               static_cast<int>(ws.effective.size()), ws.eff_rank,
                               std::move(ws.effective)});
    }
    return file;
}

void write_feature_file(const std::filesystem::path& path, const FeatureFile& file) {
    nlohmann::ordered_json doc;
    doc["version"] = 1;
    doc["image"] = {{"path", file.image_path},
                    {"height", file.image_rows},
                    {"width", file.image_cols}};
    doc["params"] = {{"scales", file.params.scales},
                     {"orientations_coarse", file.params.angles_coarse}};
    auto wedges = nlohmann::ordered_json::array();
    for (const auto& w : file.wedges) {
        wedges.push_back({{"scale", w.scale},
                          {"orientation", w.orientation},
                          {"L", w.length},
                          {"effective_rank", w.eff_rank},
                          {"effective_values", w.effective}});
    }
    doc["wedges"] = std::move(wedges);
    std::ofstream out(path);
    if (!out) throw data_error("cannot write feature file: " + path.string());
    out << doc.dump(2) << "\n";
}

FeatureFile read_feature_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw data_error("cannot read feature file: " + path.string());
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw data_error("malformed feature file " + path.string() + ": " + e.what());
    }
    FeatureFile file;
    try {
        if (doc.at("version").get<int>() != 1)
            throw data_error("unsupported feature file version in " + path.string());
        const auto& image = doc.at("image");
        file.image_path = image.at("path").get<std::string>();
        file.image_rows = image.at("height").get<int>();
        file.image_cols = image.at("width").get<int>();
        file.params.rows = file.image_rows;
        file.params.cols = file.image_cols;
        file.params.scales = doc.at("params").at("scales").get<int>();
        file.params.angles_coarse = doc.at("params").at("orientations_coarse").get<int>();
        for (const auto& w : doc.at("wedges")) {
            FeatureFileWedge wedge;
            wedge.scale = w.at("scale").get<int>();
            wedge.orientation = w.at("orientation").get<int>();
            wedge.length = w.at("L").get<int>();
            wedge.eff_rank = w.at("effective_rank").get<double>();
            wedge.effective = w.at("effective_values").get<std::vector<double>>();
            if (wedge.effective.size() != static_cast<size_t>(wedge.length))
                throw data_error("wedge length mismatch in " + path.string());
            file.wedges.push_back(std::move(wedge));
        }
    } catch (const nlohmann::json::exception& e) {
        throw data_error("malformed feature file " + path.string() + ": " + e.what());
    }
    return file;
}

FeatureVector to_feature_vector(const FeatureFile& file) {
    FeatureVector fv;
    fv.params_digest = params_digest(file.params);
    for (const auto& w : file.wedges) {
        fv.layout.push_back({w.scale, w.orientation, w.length});
        fv.values.insert(fv.values.end(), w.effective.begin(), w.effective.end());
    }
    return fv;
}

std::string content_digest(const GrayImage& img) {
    uint64_t h = fnv1a64(&img.rows, sizeof(img.rows));
    h = fnv1a64(&img.cols, sizeof(img.cols), h);
    h = fnv1a64(img.pixels.data(), img.pixels.size() * sizeof(double), h);
    return to_hex16(h);
}

std::string cache_file_name(const GrayImage& img, const CurveletParams& params) {
    return content_digest(img) + "-" + params_digest(params) + ".json";
}

}  // namespace texsim
