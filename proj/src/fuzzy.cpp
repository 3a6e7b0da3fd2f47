#include "grapheme/fuzzy.hpp"

#include <algorithm>
#include <cmath>

namespace grapheme::fuzzy {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw ConfigError(what);
}

bool finite(double v) { return std::isfinite(v); }

double eval_gaussian(const Gaussian& g, double x) {
    const double t = (x - g.mean) / g.sigma;
    return std::exp(-0.5 * t * t);
}

double eval_z(const ZShaped& z, double x) {
    if (x <= z.shoulder) return 1.0;
    if (x >= z.foot) return 0.0;
    const double span = z.foot - z.shoulder;
    const double mid = z.shoulder + 0.5 * span;
    if (x <= mid) {
        const double u = (x - z.shoulder) / span;
        return 1.0 - 2.0 * u * u;
    }
    const double u = (x - z.foot) / span;
    return 2.0 * u * u;
}

double eval_s(const SShaped& s, double x) {
    if (x <= s.foot) return 0.0;
    if (x >= s.shoulder) return 1.0;
    const double span = s.shoulder - s.foot;
    const double mid = s.foot + 0.5 * span;
    if (x <= mid) {
        const double u = (x - s.foot) / span;
        return 2.0 * u * u;
    }
    const double u = (x - s.shoulder) / span;
    return 1.0 - 2.0 * u * u;
}

double eval_triangular(const Triangular& t, double x) {
    if (x < t.left || x > t.right) return 0.0;
    if (x == t.peak) return 1.0;
    if (x < t.peak) return (x - t.left) / (t.peak - t.left);
    return (t.right - x) / (t.right - t.peak);
}

}  // namespace

MembershipFunction::MembershipFunction(Gaussian g) : shape_(g) {
    require(finite(g.mean) && finite(g.sigma), "gaussian parameters must be finite");
    require(g.sigma > 0.0, "gaussian sigma must be > 0");
}

MembershipFunction::MembershipFunction(ZShaped z) : shape_(z) {
    require(finite(z.shoulder) && finite(z.foot), "z-shaped parameters must be finite");
    require(z.shoulder < z.foot, "z-shaped requires shoulder < foot");
}

MembershipFunction::MembershipFunction(SShaped s) : shape_(s) {
    require(finite(s.foot) && finite(s.shoulder), "s-shaped parameters must be finite");
    require(s.foot < s.shoulder, "s-shaped requires foot < shoulder");
}

MembershipFunction::MembershipFunction(Triangular t) : shape_(t) {
    require(finite(t.left) && finite(t.peak) && finite(t.right),
            "triangular parameters must be finite");
    require(t.left <= t.peak && t.peak <= t.right, "triangular requires left <= peak <= right");
}

double MembershipFunction::evaluate(double x) const {
    return std::visit(
        [x](const auto& shape) -> double {
            using Shape = std::decay_t<decltype(shape)>;
            if constexpr (std::is_same_v<Shape, Gaussian>) return eval_gaussian(shape, x);
            if constexpr (std::is_same_v<Shape, ZShaped>) return eval_z(shape, x);
            if constexpr (std::is_same_v<Shape, SShaped>) return eval_s(shape, x);
            if constexpr (std::is_same_v<Shape, Triangular>) return eval_triangular(shape, x);
        },
        shape_);
}

LinguisticVariable::LinguisticVariable(std::string name, double lo, double hi,
                                       std::vector<Set> sets)
    : name_(std::move(name)), lo_(lo), hi_(hi), sets_(std::move(sets)) {
    require(finite(lo_) && finite(hi_) && lo_ < hi_,
            "variable '" + name_ + "': domain must satisfy lo < hi");
    for (std::size_t i = 0; i < sets_.size(); ++i) {
        for (std::size_t j = i + 1; j < sets_.size(); ++j) {
            require(sets_[i].first != sets_[j].first,
                    "variable '" + name_ + "': duplicate set label '" + sets_[i].first + "'");
        }
    }
}

const MembershipFunction* LinguisticVariable::find(std::string_view label) const {
    for (const auto& [name, mf] : sets_) {
        if (name == label) return &mf;
    }
    return nullptr;
}

double defuzzify_centroid(const SampledCurve& aggregated) {
    // Trapezoidal end weights: sets truncated at a domain edge would
    // otherwise be overweighted there by half a sample.
    double weighted = 0.0;
    double total = 0.0;
    const std::size_t n = aggregated.values.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double w = (i == 0 || i + 1 == n) ? 0.5 : 1.0;
        weighted += w * aggregated.y(i) * aggregated.values[i];
        total += w * aggregated.values[i];
    }
    if (total <= 0.0) throw NoRuleFired();
    return weighted / total;
}

InferenceEngine::InferenceEngine(std::vector<LinguisticVariable> inputs, LinguisticVariable output,
                                 std::vector<FuzzyRule> rules, double defuzz_step)
    : inputs_(std::move(inputs)),
      output_(std::move(output)),
      rules_(std::move(rules)),
      defuzz_step_(defuzz_step) {
    require(finite(defuzz_step_) && defuzz_step_ > 0.0, "defuzz_step must be > 0");
    consequent_set_.reserve(rules_.size());
    for (const auto& rule : rules_) {
        require(!rule.antecedents.empty(), "rule has no antecedents");
        for (const auto& ante : rule.antecedents) {
            const LinguisticVariable* var = find_input(ante.variable);
            require(var != nullptr, "rule references unknown input variable '" + ante.variable + "'");
            require(var->find(ante.label) != nullptr, "variable '" + ante.variable +
                                                          "' has no set labelled '" + ante.label + "'");
        }
        require(rule.output_variable == output_.name(),
                "rule consequent targets unknown output variable '" + rule.output_variable + "'");
        std::size_t set_index = output_.sets().size();
        for (std::size_t i = 0; i < output_.sets().size(); ++i) {
            if (output_.sets()[i].first == rule.output_label) {
                set_index = i;
                break;
            }
        }
        require(set_index < output_.sets().size(),
                "output variable has no set labelled '" + rule.output_label + "'");
        consequent_set_.push_back(set_index);
    }
}

const LinguisticVariable* InferenceEngine::find_input(std::string_view name) const {
    for (const auto& var : inputs_) {
        if (var.name() == name) return &var;
    }
    return nullptr;
}

double InferenceEngine::fire_rule(const FuzzyRule& rule,
                                  const std::map<std::string, double>& crisp_inputs) const {
    double activation = 1.0;
    for (const auto& ante : rule.antecedents) {
        const LinguisticVariable* var = find_input(ante.variable);
        if (var == nullptr)
            throw ConfigError("rule references unknown input variable '" + ante.variable + "'");
        const MembershipFunction* mf = var->find(ante.label);
        if (mf == nullptr)
            throw ConfigError("variable '" + ante.variable + "' has no set labelled '" +
                              ante.label + "'");
        auto it = crisp_inputs.find(ante.variable);
        if (it == crisp_inputs.end())
            throw ConfigError("no crisp input supplied for variable '" + ante.variable + "'");
        activation = std::min(activation, mf->evaluate(it->second));
    }
    return activation;
}

std::vector<double> InferenceEngine::fire_all(
    const std::map<std::string, double>& crisp_inputs) const {
    std::vector<double> activations;
    activations.reserve(rules_.size());
    for (const auto& rule : rules_) activations.push_back(fire_rule(rule, crisp_inputs));
    return activations;
}

SampledCurve InferenceEngine::aggregate(const std::vector<double>& activations) const {
    if (activations.size() != rules_.size())
        throw ConfigError("expected one activation per rule (" + std::to_string(rules_.size()) +
                          "), got " + std::to_string(activations.size()));

    SampledCurve curve;
    curve.lo = output_.lo();
    curve.step = defuzz_step_;
    const auto n = static_cast<std::size_t>(
        std::floor((output_.hi() - output_.lo()) / defuzz_step_ + 1e-9));
    curve.values.assign(n + 1, 0.0);

    for (std::size_t r = 0; r < rules_.size(); ++r) {
        const double clip = activations[r];
        if (clip <= 0.0) continue;
        const MembershipFunction& mf = output_.sets()[consequent_set_[r]].second;
        for (std::size_t i = 0; i <= n; ++i) {
            const double v = std::min(clip, mf.evaluate(curve.y(i)));
            if (v > curve.values[i]) curve.values[i] = v;
        }
    }
    return curve;
}

double InferenceEngine::infer(const std::map<std::string, double>& crisp_inputs) const {
    return defuzzify_centroid(aggregate(fire_all(crisp_inputs)));
}

}  // namespace grapheme::fuzzy
