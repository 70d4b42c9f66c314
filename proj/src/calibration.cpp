#include "uthresh/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "uthresh/errors.hpp"
#include "uthresh/uncertainty.hpp"

namespace uthresh {

std::string to_string(ClsSource s) {
    return s == ClsSource::Entropy ? "entropy" : "max_ep_cls";
}

ClsSource cls_source_from_string(const std::string& s) {
    if (s == "entropy") return ClsSource::Entropy;
    if (s == "max_ep_cls" || s == "max-ep-cls") return ClsSource::MaxEpistemicCls;
    throw ConfigError("unknown cls channel '" + s + "' (expected entropy or max-ep-cls)");
}

IsotonicModel fit_isotonic(std::span<const IsotonicPoint> points) {
    if (points.empty()) throw std::invalid_argument("fit_isotonic: empty input");
    for (const auto& p : points) {
        if (!std::isfinite(p.input) || !std::isfinite(p.target) || !std::isfinite(p.weight) ||
            p.weight <= 0.0)
            throw std::invalid_argument("fit_isotonic: non-finite point or non-positive weight");
    }

    std::vector<IsotonicPoint> sorted(points.begin(), points.end());
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const IsotonicPoint& a, const IsotonicPoint& b) { return a.input < b.input; });

    // Pool exact ties in the input before fitting.
    std::vector<IsotonicPoint> pooled;
    for (const auto& p : sorted) {
        if (!pooled.empty() && pooled.back().input == p.input) {
            IsotonicPoint& q = pooled.back();
            const double w = q.weight + p.weight;
            q.target = (q.target * q.weight + p.target * p.weight) / w;
            q.weight = w;
        } else {
            pooled.push_back(p);
        }
    }

    // Pool-adjacent-violators on the pooled sequence.
    struct Block {
        double value;
        double weight;
        std::size_t count;
    };
    std::vector<Block> blocks;
    blocks.reserve(pooled.size());
    for (const auto& p : pooled) {
        blocks.push_back({p.target, p.weight, 1});
        while (blocks.size() >= 2 && blocks[blocks.size() - 2].value > blocks.back().value) {
            const Block hi = blocks.back();
            blocks.pop_back();
            Block& lo = blocks.back();
            const double w = lo.weight + hi.weight;
            lo.value = (lo.value * lo.weight + hi.value * hi.weight) / w;
            lo.weight = w;
            lo.count += hi.count;
        }
    }

    IsotonicModel model;
    model.breakpoints.reserve(pooled.size());
    model.values.reserve(pooled.size());
    std::size_t i = 0;
    for (const auto& block : blocks) {
        for (std::size_t k = 0; k < block.count; ++k, ++i) {
            model.breakpoints.push_back(pooled[i].input);
            model.values.push_back(block.value);
        }
    }
    return model;
}

double apply_isotonic(const IsotonicModel& model, double x) {
    const auto& bp = model.breakpoints;
    const auto& val = model.values;
    if (bp.empty()) return x;  // identity for an unfitted model
    if (x <= bp.front()) return val.front();
    if (x >= bp.back()) return val.back();
    const auto it = std::upper_bound(bp.begin(), bp.end(), x);
    const std::size_t hi = static_cast<std::size_t>(it - bp.begin());
    const std::size_t lo = hi - 1;
    const double t = (x - bp[lo]) / (bp[hi] - bp[lo]);
    return val[lo] + t * (val[hi] - val[lo]);
}

namespace {

double lookup(const std::map<std::pair<int, Coordinate>, IsotonicModel>& models, int class_id,
              Coordinate c, double sigma) {
    const auto it = models.find({class_id, c});
    return it == models.end() ? sigma : apply_isotonic(it->second, sigma);
}

double coordinate_of(const BoundingBox& b, Coordinate c) {
    switch (c) {
        case Coordinate::X1: return b.x1;
        case Coordinate::Y1: return b.y1;
        case Coordinate::X2: return b.x2;
        default: return b.y2;
    }
}

}  // namespace

double CalibratorSet::calibrate_loc_al(int class_id, Coordinate c, double sigma) const {
    return lookup(loc_models_al, class_id, c, sigma);
}

double CalibratorSet::calibrate_loc_ep(int class_id, Coordinate c, double sigma) const {
    return lookup(loc_models_ep, class_id, c, sigma);
}

double CalibratorSet::calibrate_cls(int class_id, double sigma) const {
    const auto it = cls_models.find(class_id);
    return it == cls_models.end() ? sigma : apply_isotonic(it->second, sigma);
}

CalibratorSet fit_calibrators(const Dataset& dataset, const CategorizedSet& categorized,
                              ClsSource cls_source) {
    CalibratorSet set;
    set.cls_source = cls_source;

    // Localization: per (class, coordinate), input = predicted sigma, target =
    // absolute residual against the matched ground-truth coordinate, CDs only.
    std::map<std::pair<int, Coordinate>, std::vector<IsotonicPoint>> al_points;
    std::map<std::pair<int, Coordinate>, std::vector<IsotonicPoint>> ep_points;
    // Classification: per class, input = the selected scalar, target = failure
    // indicator over all detections of the class.
    std::map<int, std::vector<IsotonicPoint>> cls_points;
    std::map<int, bool> class_has_cd;

    for (const auto& out : categorized.per_detection) {
        const DetectionRecord& det = dataset.detections[out.detection_index];

        if (out.category == Category::CD) {
            class_has_cd[det.class_id] = true;
            const GroundTruthRecord& gt = dataset.ground_truths[*out.matched_ground_truth];
            for (int k = 0; k < 4; ++k) {
                const auto coord = static_cast<Coordinate>(k);
                const double residual =
                    std::abs(coordinate_of(det.box, coord) - coordinate_of(gt.box, coord));
                al_points[{det.class_id, coord}].push_back({det.sigma_al_loc[k], residual, 1.0});
                if (det.sigma_ep_loc)
                    ep_points[{det.class_id, coord}].push_back({(*det.sigma_ep_loc)[k], residual, 1.0});
            }
        }

        const double failure = out.category == Category::FD ? 1.0 : 0.0;
        if (cls_source == ClsSource::Entropy) {
            if (det.class_scores)
                cls_points[det.class_id].push_back({entropy(*det.class_scores), failure, 1.0});
        } else if (det.sigma_ep_cls) {
            cls_points[det.class_id].push_back({aggregate_cls(*det.sigma_ep_cls), failure, 1.0});
        }
    }

    for (const auto& [key, pts] : al_points) set.loc_models_al[key] = fit_isotonic(pts);
    for (const auto& [key, pts] : ep_points) set.loc_models_ep[key] = fit_isotonic(pts);
    for (const auto& [class_id, pts] : cls_points) {
        // Identity fallback when the class has no CDs: a fit on failures alone
        // carries no ranking information.
        if (!class_has_cd[class_id]) continue;
        set.cls_models[class_id] = fit_isotonic(pts);
    }
    return set;
}

}  // namespace uthresh
