#include "uthresh/matching.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace uthresh {

double iou(const BoundingBox& a, const BoundingBox& b) {
    const double ix1 = std::max(a.x1, b.x1);
    const double iy1 = std::max(a.y1, b.y1);
    const double ix2 = std::min(a.x2, b.x2);
    const double iy2 = std::min(a.y2, b.y2);
    const double iw = ix2 - ix1;
    const double ih = iy2 - iy1;
    if (iw <= 0.0 || ih <= 0.0) return 0.0;
    const double inter = iw * ih;
    const double uni = a.area() + b.area() - inter;
    return inter / uni;
}

CategorizedSet match_and_categorize(const Dataset& dataset, double tau) {
    CategorizedSet result;
    result.tau = tau;
    result.per_detection.resize(dataset.detections.size());

    // Group record indices by image so matching never crosses images.
    std::map<std::string, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> images;
    for (std::size_t i = 0; i < dataset.detections.size(); ++i)
        images[dataset.detections[i].image_id].first.push_back(i);
    for (std::size_t j = 0; j < dataset.ground_truths.size(); ++j)
        images[dataset.ground_truths[j].image_id].second.push_back(j);

    std::vector<bool> gt_matched(dataset.ground_truths.size(), false);

    for (auto& [image_id, indices] : images) {
        auto& [det_indices, gt_indices] = indices;
        // Descending confidence; index breaks ties for determinism.
        std::sort(det_indices.begin(), det_indices.end(), [&](std::size_t a, std::size_t b) {
            const double ca = dataset.detections[a].confidence;
            const double cb = dataset.detections[b].confidence;
            if (ca != cb) return ca > cb;
            return a < b;
        });

        for (std::size_t di : det_indices) {
            const DetectionRecord& det = dataset.detections[di];
            double best_iou = 0.0;
            std::optional<std::size_t> best_gt;
            for (std::size_t gj : gt_indices) {
                if (gt_matched[gj]) continue;
                const GroundTruthRecord& gt = dataset.ground_truths[gj];
                if (gt.class_id != det.class_id) continue;
                const double v = iou(det.box, gt.box);
                if (v > best_iou) {
                    best_iou = v;
                    best_gt = gj;
                }
            }

            DetectionOutcome& out = result.per_detection[di];
            out.detection_index = di;
            out.iou = best_iou;
            if (best_gt && best_iou >= tau) {
                out.category = Category::CD;
                out.matched_ground_truth = best_gt;
                gt_matched[*best_gt] = true;
                ++result.cd_count;
            } else {
                out.category = Category::FD;
                ++result.fd_count;
            }
        }
    }

    result.md_count = dataset.ground_truths.size() - result.cd_count;
    return result;
}

std::vector<CategorizedSet> categorize_sweep(const Dataset& dataset, const TauSet& taus) {
    std::vector<CategorizedSet> sets;
    sets.reserve(taus.values.size());
    for (double tau : taus.values) sets.push_back(match_and_categorize(dataset, tau));
    return sets;
}

}  // namespace uthresh
