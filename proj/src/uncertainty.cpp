#include "uthresh/uncertainty.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "uthresh/errors.hpp"

namespace uthresh {

std::string to_string(CombineMode mode) {
    return mode == CombineMode::Sum ? "sum" : "product";
}

CombineMode combine_mode_from_string(const std::string& s) {
    if (s == "sum") return CombineMode::Sum;
    if (s == "product") return CombineMode::Product;
    throw ConfigError("unknown combine mode '" + s + "' (expected sum or product)");
}

std::vector<double> softmax(std::span<const double> logits) {
    if (logits.size() < 2) throw std::invalid_argument("invalid logits: need at least 2 entries");
    for (double v : logits)
        if (!std::isfinite(v)) throw std::invalid_argument("invalid logits");

    const double max = *std::max_element(logits.begin(), logits.end());
    std::vector<double> out(logits.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < logits.size(); ++i) {
        out[i] = std::exp(logits[i] - max);
        sum += out[i];
    }
    for (double& v : out) v /= sum;
    return out;
}

double entropy(std::span<const double> p) {
    double h = 0.0;
    for (double v : p)
        if (v > 0.0) h -= v * std::log2(v);
    return h;
}

double aggregate_loc(const std::array<double, 4>& sigma4) {
    return (sigma4[0] + sigma4[1] + sigma4[2] + sigma4[3]) / 4.0;
}

double aggregate_cls(std::span<const double> sigma_per_class) {
    double max = 0.0;
    for (double v : sigma_per_class) max = std::max(max, v);
    return max;
}

std::array<double, 4> normalize_loc(const std::array<double, 4>& sigma4, const BoundingBox& box) {
    const double w = box.width();
    const double h = box.height();
    return {sigma4[0] / w, sigma4[1] / h, sigma4[2] / w, sigma4[3] / h};
}

double combine(const WeightVector& weights, const UncertaintyVector& u, CombineMode mode) {
    const int channels = u.channel_count();
    if (static_cast<int>(weights.size()) != channels)
        throw std::invalid_argument("weight dimension does not match enabled channels");

    double sigmas[3];
    sigmas[0] = u.sigma_cls;
    if (channels == 3) {
        sigmas[1] = *u.sigma_ep_loc;
        sigmas[2] = u.sigma_loc;
    } else {
        sigmas[1] = u.sigma_loc;
    }

    if (mode == CombineMode::Sum) {
        double s = 0.0;
        for (int k = 0; k < channels; ++k) s += weights.w[k] * sigmas[k];
        return s;
    }
    double s = 1.0;
    for (int k = 0; k < channels; ++k) s *= std::pow(std::max(sigmas[k], 1e-12), weights.w[k]);
    return s;
}

}  // namespace uthresh
