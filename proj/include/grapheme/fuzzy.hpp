#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "grapheme/errors.hpp"

namespace grapheme::fuzzy {

// Normalized bell curve: peaks at exactly 1 when x == mean.
struct Gaussian {
    double mean;
    double sigma;  // > 0
};

// 1 left of the shoulder, 0 right of the foot, smooth spline between
// (value 1/2 at the midpoint of [shoulder, foot]).
struct ZShaped {
    double shoulder;
    double foot;  // shoulder < foot
};

// Mirror image of ZShaped: 0 left of the foot, 1 right of the shoulder.
struct SShaped {
    double foot;
    double shoulder;  // foot < shoulder
};

// Piecewise linear, 1 at the peak, 0 outside [left, right].
struct Triangular {
    double left;
    double peak;   // left <= peak <= right
    double right;
};

/// A parametric curve mapping any real input to a membership degree in [0, 1].
/// Construction validates the shape parameters; evaluation is total.
class MembershipFunction {
public:
    MembershipFunction(Gaussian g);     // NOLINT: implicit by design
    MembershipFunction(ZShaped z);      // NOLINT
    MembershipFunction(SShaped s);      // NOLINT
    MembershipFunction(Triangular t);   // NOLINT

    double evaluate(double x) const;

    template <typename Shape>
    bool is() const {
        return std::holds_alternative<Shape>(shape_);
    }

    template <typename Shape>
    const Shape& as() const {
        return std::get<Shape>(shape_);
    }

private:
    std::variant<Gaussian, ZShaped, SShaped, Triangular> shape_;
};

/// A named input or output dimension over a closed real interval, partitioned
/// into labelled fuzzy sets. Labels are unique within a variable.
class LinguisticVariable {
public:
    using Set = std::pair<std::string, MembershipFunction>;

    LinguisticVariable(std::string name, double lo, double hi, std::vector<Set> sets);

    const std::string& name() const { return name_; }
    double lo() const { return lo_; }
    double hi() const { return hi_; }
    const std::vector<Set>& sets() const { return sets_; }

    /// nullptr when the label does not exist.
    const MembershipFunction* find(std::string_view label) const;

private:
    std::string name_;
    double lo_;
    double hi_;
    std::vector<Set> sets_;
};

/// IF a1 AND a2 AND ... THEN output is label. Antecedents are ANDed (min).
struct FuzzyRule {
    struct Antecedent {
        std::string variable;
        std::string label;
    };

    std::vector<Antecedent> antecedents;
    std::string output_variable;
    std::string output_label;
};

/// A membership curve sampled on a uniform grid starting at lo.
struct SampledCurve {
    double lo = 0.0;
    double step = 0.0;
    std::vector<double> values;

    double y(std::size_t i) const { return lo + static_cast<double>(i) * step; }
};

/// Centroid (center of gravity) of a sampled aggregate:
/// sum(y_i * v_i) / sum(v_i). Throws NoRuleFired when the curve is
/// identically zero.
double defuzzify_centroid(const SampledCurve& aggregated);

/// Mamdani inference engine: min conjunction, clip implication, max
/// aggregation, centroid defuzzification. Immutable after construction;
/// every operation is a pure function of its arguments, so one engine may be
/// shared freely across threads.
class InferenceEngine {
public:
    static constexpr double kDefaultDefuzzStep = 0.005;

    InferenceEngine(std::vector<LinguisticVariable> inputs, LinguisticVariable output,
                    std::vector<FuzzyRule> rules, double defuzz_step = kDefaultDefuzzStep);

    /// Rule activation: minimum membership degree over the antecedents.
    /// crisp_inputs must cover every antecedent variable.
    double fire_rule(const FuzzyRule& rule, const std::map<std::string, double>& crisp_inputs) const;

    /// One activation per rule, in rule order.
    std::vector<double> fire_all(const std::map<std::string, double>& crisp_inputs) const;

    /// Clip each rule's consequent at its activation, take the pointwise max,
    /// sampled over the output domain at defuzz_step.
    SampledCurve aggregate(const std::vector<double>& activations) const;

    /// Full pipeline: fire_all -> aggregate -> defuzzify_centroid.
    double infer(const std::map<std::string, double>& crisp_inputs) const;

    const std::vector<LinguisticVariable>& inputs() const { return inputs_; }
    const LinguisticVariable& output() const { return output_; }
    const std::vector<FuzzyRule>& rules() const { return rules_; }
    double defuzz_step() const { return defuzz_step_; }

private:
    const LinguisticVariable* find_input(std::string_view name) const;

    std::vector<LinguisticVariable> inputs_;
    LinguisticVariable output_;
    std::vector<FuzzyRule> rules_;
    std::vector<std::size_t> consequent_set_;  // rule index -> output set index
    double defuzz_step_;
};

}  // namespace grapheme::fuzzy
