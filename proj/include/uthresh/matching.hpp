#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "uthresh/types.hpp"

namespace uthresh {

enum class Category { CD, FD };

struct DetectionOutcome {
    std::size_t detection_index = 0;
    Category category = Category::FD;
    std::optional<std::size_t> matched_ground_truth;
    double iou = 0.0;  // IoU of the match, or best same-class candidate for an FD
};

/// True CD/FD/MD assignment of a dataset at one IoU threshold.
struct CategorizedSet {
    double tau = 0.5;
    std::vector<DetectionOutcome> per_detection;  // one entry per detection, in order
    std::size_t cd_count = 0;
    std::size_t fd_count = 0;
    std::size_t md_count = 0;  // ground truths left unmatched
};

/// Intersection over union of two valid boxes; 0 when disjoint.
double iou(const BoundingBox& a, const BoundingBox& b);

/// COCO-style greedy matching, per image: detections in descending confidence
/// claim the unmatched ground truth of the same class with the highest IoU,
/// provided that IoU >= tau. Matching is one-to-one; cross-class pairs never
/// match. Matched detections are CDs, the rest FDs; unmatched ground truths
/// are MDs.
CategorizedSet match_and_categorize(const Dataset& dataset, double tau);

/// One CategorizedSet per threshold. cd_count is non-increasing in tau.
std::vector<CategorizedSet> categorize_sweep(const Dataset& dataset, const TauSet& taus);

}  // namespace uthresh
