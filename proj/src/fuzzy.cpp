#include "palettefis/fuzzy.hpp"

#include <algorithm>
#include <cmath>

#include "palettefis/errors.hpp"
#include "palettefis/kernels.hpp"

namespace palettefis {

namespace {

void check_breakpoints(std::initializer_list<double> pts) {
    double prev = -std::numeric_limits<double>::infinity();
    for (double p : pts) {
        if (!std::isfinite(p))
            throw InvalidInput("membership breakpoints must be finite");
        if (p < prev)
            throw InvalidInput("membership breakpoints must be non-decreasing");
        prev = p;
    }
}

} // namespace

MembershipFunction MembershipFunction::triangular(double a, double b, double c) {
    check_breakpoints({a, b, c});
    return MembershipFunction{MfKind::Triangular, a, b, c, c};
}

MembershipFunction MembershipFunction::trapezoidal(double a, double b, double c,
                                                   double d) {
    check_breakpoints({a, b, c, d});
    return MembershipFunction{MfKind::Trapezoidal, a, b, c, d};
}

double mf_eval(const MembershipFunction& mf, double x) {
    if (mf.kind == MfKind::Triangular) {
        if (x < mf.a || x > mf.c) return 0.0;
        if (x == mf.b) return 1.0;
        // Division is safe: x strictly between distinct breakpoints here.
        if (x < mf.b) return (x - mf.a) / (mf.b - mf.a);
        return (mf.c - x) / (mf.c - mf.b);
    }
    if (x < mf.a || x > mf.d) return 0.0;
    if (x >= mf.b && x <= mf.c) return 1.0;
    if (x < mf.b) return (x - mf.a) / (mf.b - mf.a);
    return (mf.d - x) / (mf.d - mf.c);
}

const FuzzyTerm* LinguisticVariable::find_term(std::string_view term_name) const {
    for (const FuzzyTerm& t : terms)
        if (t.name == term_name) return &t;
    return nullptr;
}

std::map<std::string, double> fuzzify(const LinguisticVariable& var, double x) {
    if (!std::isfinite(x))
        throw InvalidInput("fuzzify: non-finite input for '" + var.name + "'");
    const double clamped = std::clamp(x, var.lo, var.hi);
    std::map<std::string, double> out;
    for (const FuzzyTerm& t : var.terms) out[t.name] = mf_eval(t.mf, clamped);
    return out;
}

namespace {

void validate_variable(const LinguisticVariable& var) {
    if (var.name.empty()) throw RuleBaseError("variable with empty name");
    if (!(var.lo < var.hi))
        throw RuleBaseError("variable '" + var.name + "': empty universe");
    if (var.terms.empty())
        throw RuleBaseError("variable '" + var.name + "' has no terms");
    for (std::size_t i = 0; i < var.terms.size(); ++i) {
        const FuzzyTerm& t = var.terms[i];
        for (std::size_t j = i + 1; j < var.terms.size(); ++j)
            if (var.terms[j].name == t.name)
                throw RuleBaseError("variable '" + var.name +
                                    "': duplicate term '" + t.name + "'");
        const MembershipFunction& mf = t.mf;
        const double last = mf.kind == MfKind::Trapezoidal ? mf.d : mf.c;
        if (!(mf.a <= mf.b && mf.b <= mf.c && mf.c <= last))
            throw RuleBaseError("term '" + t.name + "' of '" + var.name +
                                "': breakpoints out of order");
        if (mf.a < var.lo || last > var.hi)
            throw RuleBaseError("term '" + t.name + "' of '" + var.name +
                                "': support outside the universe");
    }
}

} // namespace

void RuleBase::validate() const {
    if (inputs.empty()) throw RuleBaseError("rule base has no input variables");
    for (const LinguisticVariable& v : inputs) validate_variable(v);
    validate_variable(output);

    for (std::size_t i = 0; i < inputs.size(); ++i) {
        if (inputs[i].name == output.name)
            throw RuleBaseError("input and output share the name '" +
                                output.name + "'");
        for (std::size_t j = i + 1; j < inputs.size(); ++j)
            if (inputs[j].name == inputs[i].name)
                throw RuleBaseError("duplicate input variable '" +
                                    inputs[i].name + "'");
    }

    if (rules.empty()) throw RuleBaseError("rule base has no rules");
    for (std::size_t r = 0; r < rules.size(); ++r) {
        const FuzzyRule& rule = rules[r];
        const std::string where = "rule " + std::to_string(r + 1);
        if (rule.antecedents.empty())
            throw RuleBaseError(where + " has no antecedents");
        for (const auto& [var_name, term_name] : rule.antecedents) {
            const LinguisticVariable* var = nullptr;
            for (const LinguisticVariable& v : inputs)
                if (v.name == var_name) var = &v;
            if (!var)
                throw RuleBaseError(where + ": unknown input variable '" +
                                    var_name + "'");
            if (!var->find_term(term_name))
                throw RuleBaseError(where + ": variable '" + var_name +
                                    "' has no term '" + term_name + "'");
        }
        if (!output.find_term(rule.consequent))
            throw RuleBaseError(where + ": output has no term '" +
                                rule.consequent + "'");
    }
}

double rule_strength(
    const FuzzyRule& rule,
    const std::map<std::string, std::map<std::string, double>>& fuzzified) {
    if (rule.antecedents.empty())
        throw RuleBaseError("rule_strength: rule has no antecedents");
    double strength = 1.0;
    for (const auto& [var_name, term_name] : rule.antecedents) {
        const auto var_it = fuzzified.find(var_name);
        if (var_it == fuzzified.end())
            throw RuleBaseError("rule_strength: no fuzzified values for '" +
                                var_name + "'");
        const auto term_it = var_it->second.find(term_name);
        if (term_it == var_it->second.end())
            throw RuleBaseError("rule_strength: variable '" + var_name +
                                "' has no degree for term '" + term_name + "'");
        strength = fuzzy_and(strength, term_it->second);
    }
    return strength;
}

std::vector<double> aggregate(std::span<const double> strengths,
                              const RuleBase& rulebase, int samples) {
    if (samples < 2) throw InvalidInput("aggregate: need at least 2 samples");
    if (strengths.size() != rulebase.rules.size())
        throw InvalidInput("aggregate: one strength per rule required");
    for (double s : strengths)
        if (!(s >= 0.0 && s <= 1.0))
            throw InvalidInput("aggregate: strengths must lie in [0, 1]");

    const LinguisticVariable& out = rulebase.output;
    const std::size_t n = static_cast<std::size_t>(samples);
    std::vector<double> curve(n, 0.0);
    std::map<std::string, std::vector<double>> term_curves;

    for (std::size_t r = 0; r < rulebase.rules.size(); ++r) {
        if (strengths[r] == 0.0) continue; // clips to zero, max is a no-op
        const std::string& term_name = rulebase.rules[r].consequent;
        auto it = term_curves.find(term_name);
        if (it == term_curves.end()) {
            const FuzzyTerm* term = out.find_term(term_name);
            if (!term)
                throw RuleBaseError("aggregate: output has no term '" +
                                    term_name + "'");
            std::vector<double> tc(n);
            for (std::size_t i = 0; i < n; ++i) {
                const double x = out.lo + (out.hi - out.lo) *
                                              static_cast<double>(i) /
                                              static_cast<double>(n - 1);
                tc[i] = mf_eval(term->mf, x);
            }
            it = term_curves.emplace(term_name, std::move(tc)).first;
        }
        kernels::active_backend().clip_max(curve.data(), it->second.data(),
                                           strengths[r], n);
    }
    return curve;
}

double defuzz_centroid(std::span<const double> curve, double lo, double hi) {
    if (curve.size() < 2)
        throw InvalidInput("defuzz_centroid: need at least 2 samples");
    if (!(lo < hi)) throw InvalidInput("defuzz_centroid: empty interval");
    double num = 0.0;
    double den = 0.0;
    const double n1 = static_cast<double>(curve.size() - 1);
    for (std::size_t i = 0; i < curve.size(); ++i) {
        const double x = lo + (hi - lo) * static_cast<double>(i) / n1;
        num += x * curve[i];
        den += curve[i];
    }
    if (den == 0.0)
        throw NoRuleFired("aggregated output is identically zero");
    return num / den;
}

InferenceResult infer(const RuleBase& rulebase,
                      const std::map<std::string, double>& inputs,
                      int samples) {
    rulebase.validate();

    for (const auto& [name, value] : inputs) {
        (void)value;
        bool known = false;
        for (const LinguisticVariable& v : rulebase.inputs)
            known = known || v.name == name;
        if (!known)
            throw InvalidInput("infer: value given for unknown variable '" +
                               name + "'");
    }

    std::map<std::string, std::map<std::string, double>> fuzzified;
    for (const LinguisticVariable& var : rulebase.inputs) {
        const auto it = inputs.find(var.name);
        if (it == inputs.end())
            throw InvalidInput("infer: missing input for variable '" +
                               var.name + "'");
        fuzzified[var.name] = fuzzify(var, it->second);
    }

    InferenceResult result;
    result.rule_strengths.reserve(rulebase.rules.size());
    for (const FuzzyRule& rule : rulebase.rules)
        result.rule_strengths.push_back(rule_strength(rule, fuzzified));

    result.curve = aggregate(result.rule_strengths, rulebase, samples);
    result.crisp = defuzz_centroid(result.curve, rulebase.output.lo,
                                   rulebase.output.hi);
    for (double s : result.rule_strengths) result.fired = result.fired || s > 0.0;
    return result;
}

} // namespace palettefis
