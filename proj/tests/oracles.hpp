#pragma once

// Test-side reference implementations, written independently of the library
// code paths they check: closed-form membership curves, a fine-grid centroid
// integrator and a full inference reference for the count predictor.

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "grapheme/predictor.hpp"

namespace oracle {

enum class Kind { Gaussian, ZShaped, SShaped, Triangular };

struct Shape {
    Kind kind;
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;  // triangular right

    static Shape gaussian(double mean, double sigma) { return {Kind::Gaussian, mean, sigma, 0.0}; }
    static Shape z_shaped(double shoulder, double foot) { return {Kind::ZShaped, shoulder, foot, 0.0}; }
    static Shape s_shaped(double foot, double shoulder) { return {Kind::SShaped, foot, shoulder, 0.0}; }
    static Shape triangular(double left, double peak, double right) {
        return {Kind::Triangular, left, peak, right};
    }
};

inline double membership(const Shape& s, double x) {
    switch (s.kind) {
        case Kind::Gaussian: {
            const double d = (x - s.a) / s.b;
            return std::exp(-(d * d) / 2.0);
        }
        case Kind::ZShaped: {
            const double shoulder = s.a, foot = s.b;
            if (x <= shoulder) return 1.0;
            if (x >= foot) return 0.0;
            const double mid = (shoulder + foot) / 2.0;
            const double w = foot - shoulder;
            if (x <= mid) return 1.0 - 2.0 * std::pow((x - shoulder) / w, 2.0);
            return 2.0 * std::pow((x - foot) / w, 2.0);
        }
        case Kind::SShaped: {
            const double foot = s.a, shoulder = s.b;
            if (x <= foot) return 0.0;
            if (x >= shoulder) return 1.0;
            const double mid = (foot + shoulder) / 2.0;
            const double w = shoulder - foot;
            if (x <= mid) return 2.0 * std::pow((x - foot) / w, 2.0);
            return 1.0 - 2.0 * std::pow((x - shoulder) / w, 2.0);
        }
        case Kind::Triangular: {
            if (x < s.a || x > s.c) return 0.0;
            if (x == s.b) return 1.0;
            if (x < s.b) return (x - s.a) / (s.b - s.a);
            return (s.c - x) / (s.c - s.b);
        }
    }
    return 0.0;
}

struct ClippedSet {
    Shape shape;
    double activation = 0.0;
};

// Centroid of max_r min(activation_r, membership_r(y)) integrated on a grid.
inline double centroid(const std::vector<ClippedSet>& sets, double lo, double hi, double step) {
    double weighted = 0.0;
    double total = 0.0;
    const auto n = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
    for (long i = 0; i <= n; ++i) {
        const double y = lo + static_cast<double>(i) * step;
        double v = 0.0;
        for (const ClippedSet& s : sets) {
            const double clipped = std::min(s.activation, membership(s.shape, y));
            if (clipped > v) v = clipped;
        }
        weighted += y * v;
        total += v;
    }
    return weighted / total;
}

// Reference inference for the count predictor built from a parameter table:
// Z/Gaussian/S input sets, min conjunction, triangular consequents clipped
// and max-aggregated, fine-grid centroid.
inline double predict_crisp(const grapheme::predictor::PredictorParams& params, double chars,
                            double vowels, double cons, double step) {
    using grapheme::predictor::FeatureParams;
    const auto& rows = params.rows;
    auto feature = [&](int g, int f) -> const FeatureParams& {
        const auto& row = rows.at(g);
        return f == 0 ? row.characters : (f == 1 ? row.vowels : row.consonants);
    };
    const double inputs[3] = {chars, vowels, cons};

    std::vector<ClippedSet> sets;
    for (int g = 1; g <= 14; ++g) {
        if (g == 13) continue;
        double activation = 1.0;
        for (int f = 0; f < 3; ++f) {
            Shape shape = Shape::gaussian(0.0, 1.0);
            if (g == 1) {
                shape = Shape::z_shaped(feature(1, f).mean, feature(2, f).mean);
            } else if (g == 14) {
                shape = Shape::s_shaped(feature(12, f).mean + feature(12, f).sigma,
                                        feature(14, f).mean);
            } else {
                shape = Shape::gaussian(feature(g, f).mean, feature(g, f).sigma);
            }
            activation = std::min(activation, membership(shape, inputs[f]));
        }
        sets.push_back({Shape::triangular(g - 0.5, g, g + 0.499), activation});
    }
    return centroid(sets, params.output_lo, params.output_hi, step);
}

}  // namespace oracle
