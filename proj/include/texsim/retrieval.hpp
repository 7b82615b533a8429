#pragma once

#include <filesystem>
#include <utility>
#include <vector>

#include "texsim/features.hpp"
#include "texsim/image.hpp"
#include "texsim/imgprep.hpp"
#include "texsim/similarity.hpp"

namespace texsim {

// Symmetric all-pairs score matrix over a dataset; the diagonal is unused.
struct ScoreMatrix {
    int n = 0;
    ScoreKind kind = ScoreKind::similarity;
    std::vector<double> values;

    double at(int i, int j) const { return values[static_cast<size_t>(i) * n + j]; }
    double& at(int i, int j) { return values[static_cast<size_t>(i) * n + j]; }
};

// Leave-one-out ranking for one query: every other image sorted best-first
// (descending similarity or ascending distance), ties broken by ascending
// dataset index. `relevant[r]` flags whether ranked[r] shares the query class.
struct RankedRetrieval {
    int query = 0;
    std::vector<int> ranked;
    std::vector<char> relevant;
};

struct RocPoint {
    double fpr = 0.0;
    double tpr = 0.0;
};

struct RetrievalReport {
    double p_at_1 = 0.0;
    double mrr = 0.0;
    double map = 0.0;
    double auc = 0.0;
    std::vector<double> average_precision;  // one AP per query
    std::vector<RocPoint> roc;
};

ScoreMatrix pairwise_scores(const std::vector<FeatureVector>& features, int jobs = 1);
ScoreMatrix pairwise_mse(const std::vector<GrayImage>& images, int jobs = 1);

std::vector<RankedRetrieval> run_experiment(const ScoreMatrix& scores,
                                            const DatasetLayout& layout);
std::vector<RankedRetrieval> run_experiment(const std::vector<FeatureVector>& features,
                                            const DatasetLayout& layout, int jobs = 1);

double precision_at_1(const std::vector<RankedRetrieval>& retrievals);
double mean_reciprocal_rank(const std::vector<RankedRetrieval>& retrievals);
double average_precision(const RankedRetrieval& retrieval, int samples_per_class);
double mean_average_precision(const std::vector<RankedRetrieval>& retrievals,
                              int samples_per_class);

// ROC over unordered pairs i < j (positive = same class), thresholds swept
// over the distinct scores; points run from (0,0) to (1,1) and the AUC is the
// trapezoidal area. Throws config_error when all pairs share one label.
std::pair<std::vector<RocPoint>, double> roc_curve(const ScoreMatrix& scores,
                                                   const DatasetLayout& layout);

RetrievalReport evaluate(const ScoreMatrix& scores, const DatasetLayout& layout);

// report.json (version 1): metrics plus per-query AP.
void write_report_json(const std::filesystem::path& path, const RetrievalReport& report,
                       const std::string& measure, const DatasetLayout& layout);
// roc.csv with header "fpr,tpr".
void write_roc_csv(const std::filesystem::path& path, const std::vector<RocPoint>& roc);

}  // namespace texsim
