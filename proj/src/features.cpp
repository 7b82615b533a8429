#include "texsim/features.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>

#include "texsim/errors.hpp"

namespace texsim {

std::vector<double> singular_values(const ComplexMatrix& m) {
    if (m.rows <= 0 || m.cols <= 0)
        throw dimension_error("singular values of an empty matrix are undefined");
    for (const auto& v : m.data) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw numeric_error("matrix contains non-finite entries");
    }
    Eigen::MatrixXcd a(m.rows, m.cols);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) a(r, c) = m.at(r, c);
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(a);
    const auto& sv = svd.singularValues();
    return std::vector<double>(sv.data(), sv.data() + sv.size());
}

std::vector<double> sv_distribution(const std::vector<double>& sv) {
    double l1 = 0.0;
    for (double v : sv) l1 += v;
    if (l1 <= 0.0) throw zero_spectrum_error("all-zero singular value spectrum");
    std::vector<double> p(sv.size());
    for (size_t i = 0; i < sv.size(); ++i) p[i] = sv[i] / l1;
    return p;
}

double effective_rank(const std::vector<double>& sv) {
    if (sv.empty()) return 0.0;
    double top = 0.0;
    for (double v : sv) top = std::max(top, v);
    if (top <= 0.0) return 0.0;

    // Values below 1e-12 * sigma_1 are round-off, not signal; drop them
    // before forming the distribution so the entropy stays stable.
    std::vector<double> clamped(sv.size());
    double threshold = 1e-12 * top;
    for (size_t i = 0; i < sv.size(); ++i) clamped[i] = sv[i] < threshold ? 0.0 : sv[i];

    std::vector<double> p = sv_distribution(clamped);
    double entropy = 0.0;
    for (double pk : p) {
        if (pk > 0.0) entropy -= pk * std::log(pk);  // 0 log 0 = 0
    }
    return std::exp(entropy);
}

std::vector<double> truncate_to_effective(const std::vector<double>& sv, double q) {
    size_t keep = q <= 0.0 ? 0 : static_cast<size_t>(std::floor(q));
    keep = std::min(keep, sv.size());
    std::vector<double> out(sv.size(), 0.0);
    for (size_t i = 0; i < keep; ++i) out[i] = sv[i];
    return out;
}

WedgeSpectrum analyze_wedge(int scale, int orientation, const ComplexMatrix& coeffs) {
    WedgeSpectrum ws;
    ws.scale = scale;
    ws.orientation = orientation;
    ws.singular = singular_values(coeffs);
    ws.eff_rank = effective_rank(ws.singular);
    ws.effective = truncate_to_effective(ws.singular, ws.eff_rank);
    return ws;
}

FeatureVector extract_features(const CurveletDecomposition& decomposition) {
    const CurveletParams& p = decomposition.params;
    FeatureVector fv;
    fv.params_digest = params_digest(p);
    for (const auto& w : decomposition.wedges) {
        bool directional = w.scale != 1 && w.scale != p.scales;
        if (directional && w.orientation > orientation_count(p, w.scale) / 2)
            continue;  // conjugate wedges carry the same spectra
        WedgeSpectrum ws = analyze_wedge(w.scale, w.orientation, w.coeffs);
        fv.layout.push_back({ws.scale, ws.orientation, static_cast<int>(ws.effective.size())});
        fv.values.insert(fv.values.end(), ws.effective.begin(), ws.effective.end());
    }
    return fv;
}

std::string params_digest(const CurveletParams& params) {
    return std::to_string(params.rows) + "x" + std::to_string(params.cols) + "-j" +
           std::to_string(params.scales) + "-a" + std::to_string(params.angles_coarse);
}

bool same_layout(const FeatureVector& a, const FeatureVector& b) {
    return a.params_digest == b.params_digest && a.layout == b.layout;
}

}  // namespace texsim
