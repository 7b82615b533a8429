#include "texsim/feature_io.hpp"

#include <unistd.h>

#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "support.hpp"
#include "texsim/errors.hpp"

using namespace texsim;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("texsim_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(reinterpret_cast<uintptr_t>(this)));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("feature file write/read round trip") {
    TempDir tmp;
    GrayImage img = testsupport::random_image(64, 64, 3);
    CurveletParams p = make_params(64, 64);
    FeatureFile file = make_feature_file("img.png", forward(img, p));

    fs::path path = tmp.path / "feat.json";
    write_feature_file(path, file);
    FeatureFile loaded = read_feature_file(path);

    CHECK(loaded.image_path == file.image_path);
    CHECK(loaded.image_rows == file.image_rows);
    CHECK(loaded.image_cols == file.image_cols);
    CHECK(loaded.params.scales == p.scales);
    CHECK(loaded.params.angles_coarse == p.angles_coarse);
    REQUIRE(loaded.wedges.size() == file.wedges.size());
    for (size_t i = 0; i < file.wedges.size(); ++i) {
        CHECK(loaded.wedges[i].scale == file.wedges[i].scale);
        CHECK(loaded.wedges[i].orientation == file.wedges[i].orientation);
        CHECK(loaded.wedges[i].eff_rank == file.wedges[i].eff_rank);
        CHECK(loaded.wedges[i].effective == file.wedges[i].effective);
    }

    // The reconstructed vector matches direct extraction exactly.
    FeatureVector via_file = to_feature_vector(loaded);
    FeatureVector direct = extract_features(forward(img, p));
    CHECK(via_file.values == direct.values);
    CHECK(same_layout(via_file, direct));
}

TEST_CASE("content digest changes with any pixel") {
    GrayImage a = testsupport::random_image(32, 32, 9);
    GrayImage b = a;
    CHECK(content_digest(a) == content_digest(b));
    b.at(5, 5) += 1.0 / 255.0;
    CHECK(content_digest(a) != content_digest(b));
}

TEST_CASE("cache file name combines content and parameter digests") {
    GrayImage img = testsupport::random_image(32, 32, 10);
    CurveletParams p = make_params(32, 32);
    std::string name = cache_file_name(img, p);
    CHECK(name.find(content_digest(img)) == 0);
    CHECK(name.find(params_digest(p)) != std::string::npos);
    CHECK(name.substr(name.size() - 5) == ".json");

    CurveletParams p2 = make_params(32, 32, 3, 8);
    CHECK(cache_file_name(img, p2) != name);
}

TEST_CASE("feature file reader rejects bad input") {
    TempDir tmp;
    CHECK_THROWS_AS(read_feature_file(tmp.path / "missing.json"), data_error);

    fs::path garbled = tmp.path / "garbled.json";
    std::ofstream(garbled) << "{not json";
    CHECK_THROWS_AS(read_feature_file(garbled), data_error);

    fs::path wrong_version = tmp.path / "version.json";
    std::ofstream(wrong_version) << R"({"version": 2})";
    CHECK_THROWS_AS(read_feature_file(wrong_version), data_error);
}
