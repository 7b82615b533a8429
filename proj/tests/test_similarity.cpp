#include "texsim/similarity.hpp"

#include <random>

#include "doctest.h"
#include "support.hpp"
#include "texsim/curvelet.hpp"
#include "texsim/errors.hpp"

using namespace texsim;

namespace {

FeatureVector make_fv(std::vector<double> values, std::string digest = "test") {
    FeatureVector fv;
    fv.layout = {{1, 1, static_cast<int>(values.size())}};
    fv.values = std::move(values);
    fv.params_digest = std::move(digest);
    return fv;
}

}  // namespace

TEST_CASE("czekanowski of identical vectors is exactly 1") {
    auto v = make_fv({3.0, 1.0, 0.5});
    CHECK(czekanowski(v, v).value == 1.0);
}

TEST_CASE("czekanowski of disjoint-support vectors is 0") {
    CHECK(czekanowski(make_fv({1.0, 0.0}), make_fv({0.0, 1.0})).value == 0.0);
}

TEST_CASE("czekanowski frozen example") {
    // 1 - (2 + 0)/(4 + 2) = 2/3
    double s = czekanowski(make_fv({3.0, 1.0}), make_fv({1.0, 1.0})).value;
    CHECK(s == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("czekanowski of two all-zero vectors is 1") {
    CHECK(czekanowski(make_fv({0.0, 0.0}), make_fv({0.0, 0.0})).value == 1.0);
}

TEST_CASE("czekanowski rejects incompatible vectors") {
    CHECK_THROWS_AS(czekanowski(make_fv({1.0}), make_fv({1.0, 2.0})),
                    incompatibility_error);
    CHECK_THROWS_AS(czekanowski(make_fv({1.0}, "a"), make_fv({1.0}, "b")),
                    incompatibility_error);
}

TEST_CASE("czekanowski symmetry, reflexivity, range and scaling invariance") {
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> dist(0.0, 5.0);
    std::uniform_real_distribution<double> alpha_dist(0.01, 100.0);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 24);
        std::vector<double> va(n), vb(n);
        for (auto& v : va) v = dist(rng);
        for (auto& v : vb) v = dist(rng);
        auto a = make_fv(va), b = make_fv(vb);

        double ab = czekanowski(a, b).value;
        CHECK(czekanowski(b, a).value == ab);      // symmetry, exact
        CHECK(czekanowski(a, a).value == 1.0);     // reflexivity, exact
        CHECK(ab >= 0.0);
        CHECK(ab <= 1.0);

        double alpha = alpha_dist(rng);
        std::vector<double> sa(n), sb(n);
        for (int i = 0; i < n; ++i) {
            sa[i] = alpha * va[i];
            sb[i] = alpha * vb[i];
        }
        double scaled = czekanowski(make_fv(sa), make_fv(sb)).value;
        CHECK(scaled == doctest::Approx(ab).epsilon(1e-12));
    }
}

TEST_CASE("similarity of an image and its rotation stays in range") {
    GrayImage img = testsupport::random_image(64, 64, 88);
    GrayImage rot(64, 64);
    for (int r = 0; r < 64; ++r)
        for (int c = 0; c < 64; ++c) rot.at(c, 63 - r) = img.at(r, c);

    CurveletParams p = make_params(64, 64);
    double s = czekanowski(extract_features(forward(img, p)),
                           extract_features(forward(rot, p)))
                   .value;
    CHECK(s >= 0.0);
    CHECK(s <= 1.0);
}

TEST_CASE("mse of identical images is 0") {
    GrayImage img = testsupport::random_image(16, 16, 5);
    auto s = mse(img, img);
    CHECK(s.value == 0.0);
    CHECK(s.kind == ScoreKind::distance);
}

TEST_CASE("mse of all-zero vs all-one images is 1") {
    CHECK(mse(GrayImage(8, 8, 0.0), GrayImage(8, 8, 1.0)).value == 1.0);
}

TEST_CASE("mse of a half-and-half difference is 0.5") {
    GrayImage a(8, 8, 0.0);
    GrayImage b(8, 8, 0.0);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 8; ++c) b.at(r, c) = 1.0;
    CHECK(mse(a, b).value == 0.5);
}

TEST_CASE("mse rejects mismatched dimensions") {
    CHECK_THROWS_AS(mse(GrayImage(4, 4, 0.0), GrayImage(4, 5, 0.0)), incompatibility_error);
}
