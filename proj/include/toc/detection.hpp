#pragma once

#include "toc/objectives.hpp"

#include <functional>
#include <limits>
#include <vector>

namespace toc::detect {

using nn::Vec;

enum class Verdict { in_distribution, semantic_shift };

// Optional rescoring hook (e.g. a reconstruction weighting); identity by
// default. Applied to the max class log-density before thresholding.
using ScoreTransform = std::function<double(double)>;

struct DetectorState {
    obj::ClassPriorMap priors;
    double threshold = -std::numeric_limits<double>::infinity();
};

// max over classes of the Gaussian log-density of z under that class prior.
double ood_score(const Vec& z, const obj::ClassPriorMap& priors,
                 const ScoreTransform& transform = nullptr);

// semantic_shift iff score < tau; the boundary score == tau is in-distribution.
Verdict decide(double score, double tau);

// Rank-based (Mann-Whitney) area under the ROC; ties count one half. Higher
// scores are treated as more in-distribution.
double auroc(const std::vector<double>& id_scores, const std::vector<double>& ood_scores);

// Largest tau with at least target_tpr of the ID scores >= tau, i.e. the
// ceil(target_tpr * n)-th largest ID score.
double choose_threshold(std::vector<double> id_scores, double target_tpr);

} // namespace toc::detect
