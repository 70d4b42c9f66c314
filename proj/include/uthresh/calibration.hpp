#pragma once

#include <map>
#include <span>
#include <vector>

#include "uthresh/matching.hpp"
#include "uthresh/types.hpp"

namespace uthresh {

/// Non-decreasing piecewise-linear map fitted by pool-adjacent-violators.
/// Breakpoints are strictly increasing; values non-decreasing. Inputs outside
/// the breakpoint range clamp to the end values.
struct IsotonicModel {
    std::vector<double> breakpoints;
    std::vector<double> values;
};

struct IsotonicPoint {
    double input = 0.0;
    double target = 0.0;
    double weight = 1.0;
};

/// Weighted least-squares non-decreasing fit. Ties in the inputs are pooled
/// before fitting. Throws std::invalid_argument on empty or non-finite input.
IsotonicModel fit_isotonic(std::span<const IsotonicPoint> points);

/// Evaluates the fitted map with linear interpolation between breakpoints.
double apply_isotonic(const IsotonicModel& model, double x);

enum class Coordinate { X1 = 0, Y1 = 1, X2 = 2, Y2 = 3 };

/// Which per-detection scalar feeds the classification calibrator (and later
/// the cls channel).
enum class ClsSource { Entropy, MaxEpistemicCls };

std::string to_string(ClsSource s);
ClsSource cls_source_from_string(const std::string& s);

/// Isotonic calibrators fitted on one categorized validation split:
/// per-class for the classification channel, per-class-per-coordinate for
/// each available localization channel. Missing keys fall back to identity.
struct CalibratorSet {
    ClsSource cls_source = ClsSource::Entropy;
    std::map<int, IsotonicModel> cls_models;
    std::map<std::pair<int, Coordinate>, IsotonicModel> loc_models_al;
    std::map<std::pair<int, Coordinate>, IsotonicModel> loc_models_ep;

    /// Calibrated per-coordinate sigma; identity when no model is stored.
    double calibrate_loc_al(int class_id, Coordinate c, double sigma) const;
    double calibrate_loc_ep(int class_id, Coordinate c, double sigma) const;
    double calibrate_cls(int class_id, double sigma) const;
};

/// Fits calibrators from the correct detections of `categorized`.
/// Localization targets are absolute coordinate residuals against the matched
/// ground truth; the classification target is the failure indicator (FD = 1)
/// over all detections of a class. Classes with no CDs keep the identity
/// fallback.
CalibratorSet fit_calibrators(const Dataset& dataset, const CategorizedSet& categorized,
                              ClsSource cls_source = ClsSource::Entropy);

}  // namespace uthresh
