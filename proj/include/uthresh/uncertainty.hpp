#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "uthresh/types.hpp"

namespace uthresh {

/// Per-detection scalar uncertainties, one slot per channel. sigma_cls is the
/// classification channel (softmax entropy in bits, or the max per-class
/// epistemic uncertainty); sigma_loc the aggregated aleatoric localization
/// channel; sigma_ep_loc the optional epistemic localization channel.
struct UncertaintyVector {
    double sigma_cls = 0.0;
    double sigma_loc = 0.0;
    std::optional<double> sigma_ep_loc;

    int channel_count() const { return sigma_ep_loc ? 3 : 2; }
};

/// Combination weights, one per enabled channel, each in [0,1]. Channel order
/// is (cls, ep_loc, al_loc) for three channels and (cls, al_loc) for two.
struct WeightVector {
    std::vector<double> w;

    std::size_t size() const { return w.size(); }
};

enum class CombineMode { Sum, Product };

std::string to_string(CombineMode mode);
CombineMode combine_mode_from_string(const std::string& s);

/// Numerically stable softmax (max-subtracted). Throws std::invalid_argument
/// on non-finite input or fewer than two entries.
std::vector<double> softmax(std::span<const double> logits);

/// Shannon entropy in bits; zero-probability terms contribute 0.
double entropy(std::span<const double> p);

/// Arithmetic mean of the four per-coordinate sigmas.
double aggregate_loc(const std::array<double, 4>& sigma4);

/// Maximum per-class sigma.
double aggregate_cls(std::span<const double> sigma_per_class);

/// Divides x-coordinate sigmas by box width and y-coordinate sigmas by box
/// height, in (x1, y1, x2, y2) order.
std::array<double, 4> normalize_loc(const std::array<double, 4>& sigma4, const BoundingBox& box);

/// Weighted combination of the enabled channels. Sum mode returns the dot
/// product; product mode the weighted geometric combination with each sigma
/// clamped below at 1e-12. Throws std::invalid_argument when the weight
/// dimension does not match the enabled channels.
double combine(const WeightVector& weights, const UncertaintyVector& u, CombineMode mode);

}  // namespace uthresh
