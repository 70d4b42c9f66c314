#include "uthresh/types.hpp"

#include <cmath>
#include <sstream>

#include "uthresh/errors.hpp"

namespace uthresh {

namespace {

bool finite_box(const BoundingBox& b) {
    return std::isfinite(b.x1) && std::isfinite(b.y1) && std::isfinite(b.x2) &&
           std::isfinite(b.y2);
}

constexpr double kScoreSumTol = 1e-6;

}  // namespace

std::string to_string(UseCase uc) {
    return uc == UseCase::RetainCD ? "retain_cd" : "remove_fd";
}

UseCase use_case_from_string(const std::string& s) {
    if (s == "retain_cd" || s == "retain-cd") return UseCase::RetainCD;
    if (s == "remove_fd" || s == "remove-fd") return UseCase::RemoveFD;
    throw ConfigError("unknown use case '" + s + "' (expected retain-cd or remove-fd)");
}

void validate_budget(const Budget& budget) {
    if (!(budget.value > 0.0 && budget.value < 1.0)) {
        std::ostringstream os;
        os << "budget must lie strictly inside (0,1), got " << budget.value;
        throw ConfigError(os.str());
    }
}

TauSet TauSet::defaults() {
    return TauSet{{0.50, 0.55, 0.60, 0.65, 0.70, 0.75}};
}

void validate_tau_set(const TauSet& taus) {
    if (taus.values.empty()) throw ConfigError("tau set must not be empty");
    double prev = 0.0;
    for (double t : taus.values) {
        if (!(t > 0.0 && t < 1.0)) throw ConfigError("iou threshold must lie in (0,1)");
        if (t <= prev && prev != 0.0) throw ConfigError("iou thresholds must be strictly increasing");
        prev = t;
    }
}

ValidationReport validate_dataset(const Dataset& dataset) {
    ValidationReport report;
    auto add = [&report](bool is_det, std::size_t idx, std::string what) {
        report.violations.push_back({is_det, idx, std::move(what)});
    };

    const int c = dataset.class_count;
    for (std::size_t i = 0; i < dataset.detections.size(); ++i) {
        const DetectionRecord& d = dataset.detections[i];
        if (!finite_box(d.box)) {
            add(true, i, "non-finite box coordinates");
        } else {
            if (d.box.x2 <= d.box.x1 || d.box.y2 <= d.box.y1) add(true, i, "degenerate box");
        }
        if (d.class_id < 0 || d.class_id >= c) add(true, i, "class_id out of range");
        if (!(d.confidence >= 0.0 && d.confidence <= 1.0)) add(true, i, "confidence outside [0,1]");
        if (d.class_scores) {
            const auto& p = *d.class_scores;
            if (static_cast<int>(p.size()) != c) {
                add(true, i, "class_scores length mismatch");
            } else {
                double sum = 0.0;
                double max = 0.0;
                bool bad_entry = false;
                for (double v : p) {
                    if (!std::isfinite(v) || v < 0.0) bad_entry = true;
                    sum += v;
                    if (v > max) max = v;
                }
                if (bad_entry) {
                    add(true, i, "class_scores entry negative or non-finite");
                } else {
                    if (std::abs(sum - 1.0) > kScoreSumTol) {
                        std::ostringstream os;
                        os << "scores sum " << sum << " != 1";
                        add(true, i, os.str());
                    }
                    if (std::abs(max - d.confidence) > kScoreSumTol)
                        add(true, i, "confidence does not equal max class score");
                }
            }
        }
        for (double s : d.sigma_al_loc)
            if (!std::isfinite(s) || s < 0.0) {
                add(true, i, "sigma_al_loc entry negative or non-finite");
                break;
            }
        if (d.sigma_ep_loc) {
            for (double s : *d.sigma_ep_loc)
                if (!std::isfinite(s) || s < 0.0) {
                    add(true, i, "sigma_ep_loc entry negative or non-finite");
                    break;
                }
        }
        if (d.sigma_ep_cls) {
            if (static_cast<int>(d.sigma_ep_cls->size()) != c) add(true, i, "sigma_ep_cls length mismatch");
            for (double s : *d.sigma_ep_cls)
                if (!std::isfinite(s) || s < 0.0) {
                    add(true, i, "sigma_ep_cls entry negative or non-finite");
                    break;
                }
        }
    }

    for (std::size_t i = 0; i < dataset.ground_truths.size(); ++i) {
        const GroundTruthRecord& g = dataset.ground_truths[i];
        if (!finite_box(g.box)) {
            add(false, i, "non-finite box coordinates");
        } else if (g.box.x2 <= g.box.x1 || g.box.y2 <= g.box.y1) {
            add(false, i, "degenerate box");
        }
        if (g.class_id < 0 || g.class_id >= c) add(false, i, "class_id out of range");
    }
    return report;
}

}  // namespace uthresh
