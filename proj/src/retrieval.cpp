#include "texsim/retrieval.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>

#include "json.hpp"
#include "texsim/errors.hpp"
#include "texsim/parallel.hpp"

namespace texsim {

namespace {

void check_count(size_t items, const DatasetLayout& layout) {
    validate(layout);
    size_t expected = static_cast<size_t>(layout.class_count) * layout.samples_per_class;
    if (items != expected)
        throw incompatibility_error("item count does not match dataset layout");
}

}  // namespace

ScoreMatrix pairwise_scores(const std::vector<FeatureVector>& features, int jobs) {
    int n = static_cast<int>(features.size());
    for (int i = 1; i < n; ++i) {
        if (!same_layout(features[0], features[i]))
            throw incompatibility_error("feature vectors are not mutually comparable");
    }
    ScoreMatrix m;
    m.n = n;
    m.kind = ScoreKind::similarity;
    m.values.assign(static_cast<size_t>(n) * n, 0.0);
    parallel_for(n, jobs, [&](int i) {
        m.at(i, i) = 1.0;
        for (int j = i + 1; j < n; ++j) {
            double s = czekanowski(features[i], features[j]).value;
            m.at(i, j) = s;
            m.at(j, i) = s;
        }
    });
    return m;
}

ScoreMatrix pairwise_mse(const std::vector<GrayImage>& images, int jobs) {
    int n = static_cast<int>(images.size());
    ScoreMatrix m;
    m.n = n;
    m.kind = ScoreKind::distance;
    m.values.assign(static_cast<size_t>(n) * n, 0.0);
    parallel_for(n, jobs, [&](int i) {
        for (int j = i + 1; j < n; ++j) {
            double s = mse(images[i], images[j]).value;
            m.at(i, j) = s;
            m.at(j, i) = s;
        }
    });
    return m;
}

std::vector<RankedRetrieval> run_experiment(const ScoreMatrix& scores,
                                            const DatasetLayout& layout) {
    check_count(static_cast<size_t>(scores.n), layout);
    const int n = scores.n;
    const bool ascending = scores.kind == ScoreKind::distance;

    std::vector<RankedRetrieval> out(n);
    for (int i = 0; i < n; ++i) {
        RankedRetrieval& rr = out[i];
        rr.query = i;
        rr.ranked.reserve(n - 1);
        for (int j = 0; j < n; ++j) {
            if (j != i) rr.ranked.push_back(j);
        }
        std::sort(rr.ranked.begin(), rr.ranked.end(), [&](int a, int b) {
            double sa = scores.at(i, a), sb = scores.at(i, b);
            if (sa != sb) return ascending ? sa < sb : sa > sb;
            return a < b;  // ties: ascending dataset index
        });
        rr.relevant.resize(rr.ranked.size());
        int query_class = layout.entries[i].class_id;
        for (size_t r = 0; r < rr.ranked.size(); ++r)
            rr.relevant[r] = layout.entries[rr.ranked[r]].class_id == query_class ? 1 : 0;
    }
    return out;
}

std::vector<RankedRetrieval> run_experiment(const std::vector<FeatureVector>& features,
                                            const DatasetLayout& layout, int jobs) {
    check_count(features.size(), layout);
    return run_experiment(pairwise_scores(features, jobs), layout);
}

double precision_at_1(const std::vector<RankedRetrieval>& retrievals) {
    if (retrievals.empty()) throw config_error("no retrievals to evaluate");
    int hits = 0;
    for (const auto& rr : retrievals) {
        if (rr.relevant.empty()) throw config_error("retrieval with empty candidate list");
        hits += rr.relevant[0];
    }
    return static_cast<double>(hits) / static_cast<double>(retrievals.size());
}

double mean_reciprocal_rank(const std::vector<RankedRetrieval>& retrievals) {
    if (retrievals.empty()) throw config_error("no retrievals to evaluate");
    double sum = 0.0;
    for (const auto& rr : retrievals) {
        auto it = std::find(rr.relevant.begin(), rr.relevant.end(), char{1});
        if (it == rr.relevant.end())
            throw config_error("query has no relevant candidate; need S >= 2");
        sum += 1.0 / static_cast<double>(std::distance(rr.relevant.begin(), it) + 1);
    }
    return sum / static_cast<double>(retrievals.size());
}

double average_precision(const RankedRetrieval& retrieval, int samples_per_class) {
    int wanted = samples_per_class - 1;
    int total = static_cast<int>(
        std::count(retrieval.relevant.begin(), retrieval.relevant.end(), char{1}));
    if (total != wanted)
        throw config_error("query does not have exactly S-1 relevant candidates");
    double sum = 0.0;
    int found = 0;
    for (size_t r = 0; r < retrieval.relevant.size() && found < wanted; ++r) {
        if (retrieval.relevant[r]) {
            ++found;
            sum += static_cast<double>(found) / static_cast<double>(r + 1);
        }
    }
    return sum / static_cast<double>(wanted);
}

double mean_average_precision(const std::vector<RankedRetrieval>& retrievals,
                              int samples_per_class) {
    if (retrievals.empty()) throw config_error("no retrievals to evaluate");
    double sum = 0.0;
    for (const auto& rr : retrievals) sum += average_precision(rr, samples_per_class);
    return sum / static_cast<double>(retrievals.size());
}

std::pair<std::vector<RocPoint>, double> roc_curve(const ScoreMatrix& scores,
                                                   const DatasetLayout& layout) {
    check_count(static_cast<size_t>(scores.n), layout);
    const int n = scores.n;
    const double sign = scores.kind == ScoreKind::distance ? -1.0 : 1.0;

    // Unordered pairs; higher score = predicted more similar.
    std::vector<std::pair<double, char>> pairs;
    pairs.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    long positives = 0, negatives = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            char label =
                layout.entries[i].class_id == layout.entries[j].class_id ? 1 : 0;
            pairs.emplace_back(sign * scores.at(i, j), label);
            (label ? positives : negatives)++;
        }
    }
    if (positives == 0 || negatives == 0)
        throw config_error("ROC needs both positive and negative pairs");

    std::sort(pairs.begin(), pairs.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });

    std::vector<RocPoint> points;
    points.push_back({0.0, 0.0});
    long tp = 0, fp = 0;
    size_t i = 0;
    while (i < pairs.size()) {
        double threshold = pairs[i].first;
        // Everything scoring >= threshold is predicted positive; consume the
        // whole tie group before emitting a point.
        while (i < pairs.size() && pairs[i].first == threshold) {
            (pairs[i].second ? tp : fp)++;
            ++i;
        }
        points.push_back({static_cast<double>(fp) / static_cast<double>(negatives),
                          static_cast<double>(tp) / static_cast<double>(positives)});
    }
    if (points.back().fpr != 1.0 || points.back().tpr != 1.0) points.push_back({1.0, 1.0});

    double auc = 0.0;
    for (size_t k = 1; k < points.size(); ++k) {
        auc += (points[k].fpr - points[k - 1].fpr) * (points[k].tpr + points[k - 1].tpr) / 2.0;
    }
    return {std::move(points), auc};
}

RetrievalReport evaluate(const ScoreMatrix& scores, const DatasetLayout& layout) {
    auto retrievals = run_experiment(scores, layout);
    RetrievalReport report;
    report.p_at_1 = precision_at_1(retrievals);
    report.mrr = mean_reciprocal_rank(retrievals);
    report.average_precision.reserve(retrievals.size());
    for (const auto& rr : retrievals)
        report.average_precision.push_back(average_precision(rr, layout.samples_per_class));
    report.map = std::accumulate(report.average_precision.begin(),
                                 report.average_precision.end(), 0.0) /
                 static_cast<double>(report.average_precision.size());
    auto [roc, auc] = roc_curve(scores, layout);
    report.roc = std::move(roc);
    report.auc = auc;
    return report;
}

void write_report_json(const std::filesystem::path& path, const RetrievalReport& report,
                       const std::string& measure, const DatasetLayout& layout) {
    nlohmann::ordered_json doc;
    doc["version"] = 1;
    doc["measure"] = measure;
    doc["class_count"] = layout.class_count;
    doc["samples_per_class"] = layout.samples_per_class;
    doc["p_at_1"] = report.p_at_1;
    doc["mrr"] = report.mrr;
    doc["map"] = report.map;
    doc["auc"] = report.auc;
    doc["average_precision"] = report.average_precision;
    std::ofstream out(path);
    if (!out) throw data_error("cannot write report: " + path.string());
    out << doc.dump(2) << "\n";
}

void write_roc_csv(const std::filesystem::path& path, const std::vector<RocPoint>& roc) {
    std::ofstream out(path);
    if (!out) throw data_error("cannot write ROC csv: " + path.string());
    out << "fpr,tpr\n";
    char line[80];
    for (const auto& p : roc) {
        std::snprintf(line, sizeof(line), "%.12g,%.12g\n", p.fpr, p.tpr);
        out << line;
    }
}

}  // namespace texsim
