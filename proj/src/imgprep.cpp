#include "texsim/imgprep.hpp"

#include <fstream>
#include <map>

#include "json.hpp"
#include "texsim/errors.hpp"

namespace texsim {

void validate(const DatasetLayout& layout) {
    if (layout.class_count <= 0 || layout.samples_per_class <= 0)
        throw config_error("dataset layout needs positive class and sample counts");
    size_t expected = static_cast<size_t>(layout.class_count) * layout.samples_per_class;
    if (layout.entries.size() != expected)
        throw config_error("dataset layout entry count does not equal C*S");
    std::map<int, int> per_class;
    for (const auto& e : layout.entries) {
        if (e.class_id < 0 || e.class_id >= layout.class_count)
            throw config_error("dataset entry has out-of-range class id");
        per_class[e.class_id]++;
    }
    for (const auto& [cls, count] : per_class) {
        if (count != layout.samples_per_class)
            throw config_error("class " + std::to_string(cls) + " does not have S samples");
    }
}

GrayImage to_luminance(const RgbImage& rgb) {
    size_t n = static_cast<size_t>(rgb.rows) * rgb.cols;
    if (rgb.r.size() != n || rgb.g.size() != n || rgb.b.size() != n)
        throw dimension_error("RGB channel planes disagree in shape");
    GrayImage out(rgb.rows, rgb.cols);
    for (size_t i = 0; i < n; ++i)
        out.pixels[i] = 0.299 * rgb.r[i] + 0.587 * rgb.g[i] + 0.114 * rgb.b[i];
    return out;
}

GrayImage crop(const GrayImage& img, int row0, int col0, int rows, int cols) {
    if (row0 < 0 || col0 < 0 || row0 + rows > img.rows || col0 + cols > img.cols)
        throw dimension_error("crop region outside image bounds");
    GrayImage out(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) out.at(r, c) = img.at(row0 + r, col0 + c);
    return out;
}

GrayImage box_downsample(const GrayImage& img, int factor) {
    if (factor <= 0) throw parameter_error("downsample factor must be positive");
    if (img.rows % factor != 0 || img.cols % factor != 0)
        throw dimension_error("image dimensions not divisible by downsample factor");
    GrayImage out(img.rows / factor, img.cols / factor);
    double inv = 1.0 / (static_cast<double>(factor) * factor);
    for (int r = 0; r < out.rows; ++r) {
        for (int c = 0; c < out.cols; ++c) {
            double sum = 0.0;
            for (int dr = 0; dr < factor; ++dr)
                for (int dc = 0; dc < factor; ++dc)
                    sum += img.at(r * factor + dr, c * factor + dc);
            out.at(r, c) = sum * inv;
        }
    }
    return out;
}

std::vector<GrayImage> prepare_curet(const GrayImage& img) {
    if (img.rows < 256 || img.cols < 256)
        throw dimension_error("CUReT preparation needs at least 256x256 pixels");
    GrayImage center = crop(img, (img.rows - 256) / 2, (img.cols - 256) / 2, 256, 256);
    // Four 128x128 patches in row-major order; S = 3, so the bottom-right
    // patch is dropped.
    std::vector<GrayImage> patches;
    patches.push_back(crop(center, 0, 0, 128, 128));
    patches.push_back(crop(center, 0, 128, 128, 128));
    patches.push_back(crop(center, 128, 0, 128, 128));
    return patches;
}

std::vector<GrayImage> prepare_pertex(const GrayImage& img) {
    if (img.rows % 4 != 0 || img.cols % 4 != 0)
        throw dimension_error("PerTex preparation needs dimensions divisible by 4");
    if (img.rows / 4 != 256 || img.cols / 4 != 256)
        throw dimension_error("PerTex preparation expects a 1024x1024 source image");
    GrayImage small = box_downsample(img, 4);
    std::vector<GrayImage> patches;
    patches.push_back(crop(small, 0, 0, 128, 128));
    patches.push_back(crop(small, 0, 128, 128, 128));
    patches.push_back(crop(small, 128, 0, 128, 128));
    patches.push_back(crop(small, 128, 128, 128, 128));
    return patches;
}

void write_manifest(const DatasetLayout& layout, const std::filesystem::path& path) {
    validate(layout);
    nlohmann::ordered_json doc;
    doc["version"] = 1;
    doc["class_count"] = layout.class_count;
    doc["samples_per_class"] = layout.samples_per_class;
    auto entries = nlohmann::ordered_json::array();
    for (const auto& e : layout.entries) {
        entries.push_back({{"class", e.class_id}, {"sample", e.sample_id}, {"file", e.file}});
    }
    doc["entries"] = std::move(entries);
    std::ofstream out(path);
    if (!out) throw data_error("cannot write manifest: " + path.string());
    out << doc.dump(2) << "\n";
}

DatasetLayout read_manifest(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw data_error("cannot read manifest: " + path.string());
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw data_error("malformed manifest " + path.string() + ": " + e.what());
    }
    DatasetLayout layout;
    try {
        if (doc.at("version").get<int>() != 1)
            throw data_error("unsupported manifest version in " + path.string());
        layout.class_count = doc.at("class_count").get<int>();
        layout.samples_per_class = doc.at("samples_per_class").get<int>();
        for (const auto& e : doc.at("entries")) {
            layout.entries.push_back({e.at("class").get<int>(), e.at("sample").get<int>(),
                                      e.at("file").get<std::string>()});
        }
    } catch (const nlohmann::json::exception& e) {
        throw data_error("malformed manifest " + path.string() + ": " + e.what());
    }
    validate(layout);
    return layout;
}

}  // namespace texsim
