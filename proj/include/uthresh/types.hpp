#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace uthresh {

/// Axis-aligned box in corner form. x2 > x1 and y2 > y1 for a valid box.
struct BoundingBox {
    double x1 = 0.0;
    double y1 = 0.0;
    double x2 = 0.0;
    double y2 = 0.0;

    double width() const { return x2 - x1; }
    double height() const { return y2 - y1; }
    double area() const { return width() * height(); }
    bool operator==(const BoundingBox&) const = default;
};

/// One post-NMS detector output. Per-coordinate uncertainties follow the
/// (x1, y1, x2, y2) corner order.
struct DetectionRecord {
    std::string image_id;
    BoundingBox box;
    int class_id = 0;
    double confidence = 0.0;
    std::optional<std::vector<double>> class_scores;  // length C, sums to 1
    std::array<double, 4> sigma_al_loc{};             // aleatoric, pixel units
    std::optional<std::array<double, 4>> sigma_ep_loc;
    std::optional<std::vector<double>> sigma_ep_cls;  // length C

    bool operator==(const DetectionRecord&) const = default;
};

struct GroundTruthRecord {
    std::string image_id;
    BoundingBox box;
    int class_id = 0;

    bool operator==(const GroundTruthRecord&) const = default;
};

struct Dataset {
    std::vector<DetectionRecord> detections;
    std::vector<GroundTruthRecord> ground_truths;
    int class_count = 0;

    bool operator==(const Dataset&) const = default;
};

enum class UseCase {
    RetainCD,  // budget bounds the fraction of correct detections to keep
    RemoveFD,  // budget bounds the fraction of false detections to remove
};

std::string to_string(UseCase uc);
UseCase use_case_from_string(const std::string& s);

/// User budget b in (0, 1). Endpoints are rejected: b=0 is vacuous and b=1
/// is generally infeasible on a finite score sweep.
struct Budget {
    double value = 0.95;
    UseCase use_case = UseCase::RetainCD;
};

/// Throws ConfigError unless 0 < b < 1.
void validate_budget(const Budget& budget);

/// Ordered IoU thresholds for the categorization sweep.
struct TauSet {
    std::vector<double> values;

    static TauSet defaults();  // {0.50, 0.55, 0.60, 0.65, 0.70, 0.75}
};

/// Throws ConfigError unless every value is in (0,1) and strictly increasing.
void validate_tau_set(const TauSet& taus);

struct Violation {
    bool is_detection = true;   // false: ground-truth record
    std::size_t record_index = 0;
    std::string what;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
};

/// Collects every invariant breach in the dataset. Never throws; callers
/// decide whether violations are fatal.
ValidationReport validate_dataset(const Dataset& dataset);

}  // namespace uthresh
