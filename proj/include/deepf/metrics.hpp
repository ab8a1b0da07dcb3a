#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "deepf/matrix.hpp"

namespace deepf {

// Per-class hard counts over a single-label multi-class evaluation.
// Ground truth for every evaluation metric; reports are recomputable
// from these counts alone.
struct ConfusionStats {
    int num_classes = 0;
    std::vector<long long> tp;
    std::vector<long long> fp;
    std::vector<long long> fn;
    long long total = 0;

    long long true_count(int k) const { return tp[k] + fn[k]; }
    long long predicted_count(int k) const { return tp[k] + fp[k]; }
};

struct MetricsReport {
    double beta = 1.0;
    double avg_precision = 0.0;
    double avg_recall = 0.0;
    double micro_f1 = 0.0;  // harmonic mean of macro-averaged precision and recall
    double avg_fbeta = 0.0;
    double accuracy = 0.0;
    int coverage = 0;
};

// Argmax decision per row; ties break to the lowest class index.
std::vector<int> argmax_predictions(const Matrix& softmax);

// Exact integer counts over all K configured classes, including classes
// absent from the split.
ConfusionStats confusion(const std::vector<int>& predictions,
                         const std::vector<int>& labels, int num_classes);

// A class with no true tokens or no predicted tokens scores 0, never NaN.
double precision_of(const ConfusionStats& stats, int k);
double recall_of(const ConfusionStats& stats, int k);

// F_beta(k) = (1+b^2)*tp / (b^2*(tp+fn) + tp+fp); 0 when tp == 0.
std::vector<double> per_class_fbeta(const ConfusionStats& stats, double beta);

// Unweighted mean of per-class F_beta over all K classes.
double average_fbeta(const ConfusionStats& stats, double beta);

// Harmonic mean of macro-averaged precision and macro-averaged recall.
// This is the definition behind the reported micro-F1 columns; it differs
// from the pooled-count micro-F1, so reports label it micro_f1_paper.
double micro_f1(const ConfusionStats& stats, double beta = 1.0);

// Number of classes with non-zero recall (tp > 0).
int coverage(const ConfusionStats& stats);

double accuracy(const ConfusionStats& stats);

MetricsReport evaluate_metrics(const ConfusionStats& stats, double beta);

}  // namespace deepf
