#include "texsim/curvelet.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "texsim/errors.hpp"
#include "texsim/fft.hpp"

namespace texsim {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Smooth monotone step on [0, 1].
double nu(double t) {
    double s = std::sin(kPi * t / 2.0);
    return s * s;
}

// Complementary pair with wl^2 + wr^2 = 1; wr rises 0 -> 1 across [0, 1].
// The normalization makes the squared partition of unity exact regardless of
// the particular nu.
void window_pair(double t, double& wl, double& wr) {
    if (t <= 0.0) {
        wl = 1.0;
        wr = 0.0;
        return;
    }
    if (t >= 1.0) {
        wl = 0.0;
        wr = 1.0;
        return;
    }
    double a = nu(t);
    double b = nu(1.0 - t);
    double n = std::hypot(a, b);  // >= sqrt(1/2), never zero
    wl = b / n;
    wr = a / n;
}

double rising(double t) {
    double wl, wr;
    window_pair(t, wl, wr);
    return wr;
}

double falling(double t) {
    double wl, wr;
    window_pair(t, wl, wr);
    return wl;
}

// Position of a frequency-square boundary point along the perimeter,
// counterclockwise, in [0, 8): corners of [-1,1]^2 sit at s = 1, 3, 5, 7 and
// the antipodal map is s -> s + 4 (mod 8).
double perimeter_coord(double px, double py) {
    double s;
    if (px >= 1.0) {
        s = py;
    } else if (py >= 1.0) {
        s = 2.0 - px;
    } else if (px <= -1.0) {
        s = 4.0 - py;
    } else {
        s = 6.0 + px;
    }
    if (s < 0.0) s += 8.0;
    return s;
}

// Window weights below which a frequency sample is not part of a wedge.
// Discards only round-off dust; the energy it removes is ~1e-24 relative.
constexpr double kSupportEps = 1e-12;

struct GridSample {
    int fr = 0;  // centered frequency coordinates
    int fc = 0;
    double win = 0.0;
};

struct BakedSample {
    int src = 0;  // flat index into the full-grid spectrum
    int dst = 0;  // flat index into the wrap rectangle
    double win = 0.0;
};

struct WedgeWindowPlan {
    int scale = 0;
    int orientation = 0;
    int rect_rows = 0;
    int rect_cols = 0;
    std::vector<BakedSample> samples;
};

struct TilingPlan {
    CurveletParams params;
    std::vector<WedgeWindowPlan> wedges;
};

void check_params(const CurveletParams& p) {
    if (p.rows < 32 || p.cols < 32)
        throw parameter_error("image must be at least 32x32 for the curvelet transform");
    if (p.scales < 3) throw parameter_error("curvelet transform needs at least 3 scales");
    if (p.angles_coarse < 4 || p.angles_coarse % 4 != 0)
        throw parameter_error("angles_coarse must be a positive multiple of 4");
    if (std::min(p.rows, p.cols) < (1 << (p.scales + 1)))
        throw parameter_error("image too small for " + std::to_string(p.scales) + " scales");
}

int wedge_count(const CurveletParams& p) {
    int count = 2;  // coarsest + finest
    for (int j = 2; j <= p.scales - 1; ++j) count += orientation_count(p, j);
    return count;
}

// Builds the full frequency tiling for one (size, params) combination.
//
// Scales live between dyadic L-infinity radii b_m = 2^(m-J+1); each boundary
// carries a complementary radial step over [b_m/2, b_m], so the squared radial
// profiles telescope to 1. Directional coronae are split along the square
// perimeter into K(j) wedges whose squared angular windows also sum to 1.
// Wedges k > K(j)/2 are generated by mirroring wedge k - K(j)/2 through the
// origin, which makes the conjugate-pair supports exactly symmetric.
std::shared_ptr<const TilingPlan> build_plan(const CurveletParams& p) {
    check_params(p);
    const int rows = p.rows, cols = p.cols, J = p.scales;
    const double half_r = rows / 2.0, half_c = cols / 2.0;

    std::vector<double> boundary(J);  // boundary[m] = b_m for m = 1..J-1
    for (int m = 1; m <= J - 1; ++m) boundary[m] = std::exp2(m - (J - 1));

    // (scale, orientation) -> slot in canonical order
    auto plan = std::make_shared<TilingPlan>();
    plan->params = p;
    plan->wedges.resize(wedge_count(p));
    std::map<std::pair<int, int>, int> slot;
    {
        int idx = 0;
        plan->wedges[idx].scale = 1;
        plan->wedges[idx].orientation = 1;
        slot[{1, 1}] = idx++;
        for (int j = 2; j <= J - 1; ++j) {
            for (int k = 1; k <= orientation_count(p, j); ++k) {
                plan->wedges[idx].scale = j;
                plan->wedges[idx].orientation = k;
                slot[{j, k}] = idx++;
            }
        }
        plan->wedges[idx].scale = J;
        plan->wedges[idx].orientation = 1;
        slot[{J, 1}] = idx;
    }

    std::vector<std::vector<GridSample>> samples(plan->wedges.size());

    const int fr_lo = -(rows / 2), fr_hi = rows - 1 - rows / 2;
    const int fc_lo = -(cols / 2), fc_hi = cols - 1 - cols / 2;
    for (int fr = fr_lo; fr <= fr_hi; ++fr) {
        double y = fr / half_r;
        for (int fc = fc_lo; fc <= fc_hi; ++fc) {
            double x = fc / half_c;
            double r = std::max(std::fabs(x), std::fabs(y));

            for (int j = 1; j <= J; ++j) {
                double radial;
                if (j == 1) {
                    radial = falling(2.0 * r / boundary[1] - 1.0);
                } else if (j == J) {
                    radial = rising(2.0 * r / boundary[J - 1] - 1.0);
                } else {
                    radial = rising(2.0 * r / boundary[j - 1] - 1.0) *
                             falling(2.0 * r / boundary[j] - 1.0);
                }
                if (radial < kSupportEps) continue;

                if (j == 1 || j == J) {
                    samples[slot.at({j, 1})].push_back({fr, fc, radial});
                    continue;
                }

                // Directional corona: r > 0 is guaranteed here because the
                // radial window of every scale j >= 2 vanishes at the origin.
                int K = orientation_count(p, j);
                double delta = 8.0 / K;
                double s = perimeter_coord(x / r, y / r);
                int k0 = static_cast<int>(std::floor((s - 1.0) / delta));
                for (int dk = -1; dk <= 1; ++dk) {
                    int k_idx = ((k0 + dk) % K + K) % K;  // 0-based
                    if (k_idx >= K / 2) continue;          // mirrored later
                    double center = 1.0 + (k_idx + 0.5) * delta;
                    double d = std::fmod(s - center + 12.0, 8.0) - 4.0;
                    double angular = rising((d + delta) / delta) * falling(d / delta);
                    double win = radial * angular;
                    if (win < kSupportEps) continue;
                    samples[slot.at({j, k_idx + 1})].push_back({fr, fc, win});
                }
            }
        }
    }

    // Mirror the second half of each directional scale through the origin.
    for (int j = 2; j <= J - 1; ++j) {
        int K = orientation_count(p, j);
        for (int k = 1; k <= K / 2; ++k) {
            const auto& src = samples[slot.at({j, k})];
            auto& dst = samples[slot.at({j, k + K / 2})];
            dst.reserve(src.size());
            for (const auto& smp : src) dst.push_back({-smp.fr, -smp.fc, smp.win});
        }
    }

    // Wrap rectangles: smallest even box covering the support extent. The
    // per-axis extent never exceeds the rectangle, so periodization maps the
    // support injectively.
    for (size_t w = 0; w < plan->wedges.size(); ++w) {
        auto& wedge = plan->wedges[w];
        const auto& smp = samples[w];
        if (smp.empty())
            throw parameter_error("empty curvelet wedge; angles_coarse too large for image");
        int fr_min = smp[0].fr, fr_max = smp[0].fr;
        int fc_min = smp[0].fc, fc_max = smp[0].fc;
        for (const auto& s : smp) {
            fr_min = std::min(fr_min, s.fr);
            fr_max = std::max(fr_max, s.fr);
            fc_min = std::min(fc_min, s.fc);
            fc_max = std::max(fc_max, s.fc);
        }
        int ext_r = fr_max - fr_min + 1;
        int ext_c = fc_max - fc_min + 1;
        wedge.rect_rows = ext_r + (ext_r & 1);
        wedge.rect_cols = ext_c + (ext_c & 1);

        wedge.samples.reserve(smp.size());
        for (const auto& s : smp) {
            int src_r = (s.fr % rows + rows) % rows;
            int src_c = (s.fc % cols + cols) % cols;
            int dst_r = (s.fr % wedge.rect_rows + wedge.rect_rows) % wedge.rect_rows;
            int dst_c = (s.fc % wedge.rect_cols + wedge.rect_cols) % wedge.rect_cols;
            wedge.samples.push_back(
                {src_r * cols + src_c, dst_r * wedge.rect_cols + dst_c, s.win});
        }
    }
    return plan;
}

std::shared_ptr<const TilingPlan> get_plan(const CurveletParams& p) {
    static std::mutex mutex;
    static std::map<std::tuple<int, int, int, int>, std::shared_ptr<const TilingPlan>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_tuple(p.rows, p.cols, p.scales, p.angles_coarse);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto plan = build_plan(p);
    cache.emplace(key, plan);
    return plan;
}

}  // namespace

CurveletParams make_params(int rows, int cols, std::optional<int> scales,
                           std::optional<int> angles_coarse) {
    if (rows < 32 || cols < 32)
        throw parameter_error("image must be at least 32x32 for the curvelet transform");
    int min_dim = std::min(rows, cols);
    int ceil_log2 = std::bit_width(static_cast<unsigned>(min_dim - 1));
    CurveletParams p;
    p.rows = rows;
    p.cols = cols;
    p.scales = scales.value_or(std::max(3, ceil_log2 - 3));
    p.angles_coarse = angles_coarse.value_or(16);
    check_params(p);
    return p;
}

int orientation_count(const CurveletParams& params, int scale) {
    if (scale < 1 || scale > params.scales)
        throw parameter_error("scale index out of range");
    if (scale == 1 || scale == params.scales) return 1;
    return params.angles_coarse << ((scale - 1) / 2);
}

const ComplexMatrix& CurveletDecomposition::wedge(int scale, int orientation) const {
    for (const auto& w : wedges) {
        if (w.scale == scale && w.orientation == orientation) return w.coeffs;
    }
    throw structure_error("no wedge (" + std::to_string(scale) + ", " +
                          std::to_string(orientation) + ") in decomposition");
}

CurveletDecomposition forward(const RealMatrix& image, const CurveletParams& params) {
    if (image.rows != params.rows || image.cols != params.cols)
        throw dimension_error("image dimensions do not match transform parameters");
    auto plan = get_plan(params);

    const int rows = params.rows, cols = params.cols;
    const size_t n = static_cast<size_t>(rows) * cols;
    std::vector<std::complex<double>> spectrum(n);
    for (size_t i = 0; i < n; ++i) spectrum[i] = image.data[i];
    fft::dft2(spectrum.data(), rows, cols, -1);
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
    for (auto& v : spectrum) v *= inv_sqrt_n;

    CurveletDecomposition out;
    out.params = params;
    out.image_rows = rows;
    out.image_cols = cols;
    out.wedges.reserve(plan->wedges.size());
    for (const auto& wp : plan->wedges) {
        WedgeCoefficients wc;
        wc.scale = wp.scale;
        wc.orientation = wp.orientation;
        wc.coeffs = ComplexMatrix(wp.rect_rows, wp.rect_cols);
        for (const auto& s : wp.samples) wc.coeffs.data[s.dst] += s.win * spectrum[s.src];
        fft::dft2(wc.coeffs.data.data(), wp.rect_rows, wp.rect_cols, +1);
        double scale = 1.0 / std::sqrt(static_cast<double>(wc.coeffs.size()));
        for (auto& v : wc.coeffs.data) v *= scale;
        out.wedges.push_back(std::move(wc));
    }
    return out;
}

CurveletDecomposition forward(const GrayImage& image, const CurveletParams& params) {
    return forward(as_matrix(image), params);
}

RealMatrix inverse(const CurveletDecomposition& decomposition) {
    const CurveletParams& params = decomposition.params;
    if (decomposition.image_rows != params.rows || decomposition.image_cols != params.cols)
        throw structure_error("decomposition image size disagrees with its parameters");
    auto plan = get_plan(params);
    if (decomposition.wedges.size() != plan->wedges.size())
        throw structure_error("decomposition wedge count does not match parameters");

    const int rows = params.rows, cols = params.cols;
    const size_t n = static_cast<size_t>(rows) * cols;
    std::vector<std::complex<double>> spectrum(n);

    for (size_t w = 0; w < plan->wedges.size(); ++w) {
        const auto& wp = plan->wedges[w];
        const auto& wc = decomposition.wedges[w];
        if (wc.scale != wp.scale || wc.orientation != wp.orientation)
            throw structure_error("decomposition wedge order does not match parameters");
        if (wc.coeffs.rows != wp.rect_rows || wc.coeffs.cols != wp.rect_cols)
            throw structure_error("wedge coefficient matrix has unexpected shape");

        ComplexMatrix tmp = wc.coeffs;
        fft::dft2(tmp.data.data(), tmp.rows, tmp.cols, -1);
        double scale = 1.0 / std::sqrt(static_cast<double>(tmp.size()));
        for (const auto& s : wp.samples) spectrum[s.src] += s.win * scale * tmp.data[s.dst];
    }

    fft::dft2(spectrum.data(), rows, cols, +1);
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
    RealMatrix out(rows, cols);
    for (size_t i = 0; i < n; ++i) out.data[i] = spectrum[i].real() * inv_sqrt_n;
    return out;
}

std::vector<WedgeEnergy> wedge_energies(const CurveletDecomposition& decomposition) {
    std::vector<WedgeEnergy> out;
    out.reserve(decomposition.wedges.size());
    for (const auto& w : decomposition.wedges) {
        out.push_back({w.scale, w.orientation, w.coeffs.rows, w.coeffs.cols,
                       squared_norm(w.coeffs)});
    }
    return out;
}

}  // namespace texsim
