#pragma once
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace palettefis {

enum class MfKind { Triangular, Trapezoidal };

// Piecewise-linear membership function. Triangular uses (a, b, c) with the
// apex at b; trapezoidal uses (a, b, c, d) with the plateau on [b, c].
// Degenerate equal breakpoints give vertical edges (crisp-ish sets).
struct MembershipFunction {
    MfKind kind = MfKind::Triangular;
    double a = 0.0, b = 0.0, c = 0.0, d = 0.0;

    static MembershipFunction triangular(double a, double b, double c);
    static MembershipFunction trapezoidal(double a, double b, double c, double d);
    bool operator==(const MembershipFunction&) const = default;
};

double mf_eval(const MembershipFunction& mf, double x);

inline double fuzzy_and(double a, double b) { return a < b ? a : b; }
inline double fuzzy_or(double a, double b) { return a > b ? a : b; }
inline double fuzzy_not(double a) { return 1.0 - a; }

struct FuzzyTerm {
    std::string name;
    MembershipFunction mf;
    bool operator==(const FuzzyTerm&) const = default;
};

struct LinguisticVariable {
    std::string name;
    double lo = 0.0, hi = 1.0; // universe of discourse [lo, hi]
    std::vector<FuzzyTerm> terms;

    const FuzzyTerm* find_term(std::string_view term_name) const;
    bool operator==(const LinguisticVariable&) const = default;
};

// Membership degree of x in every term; x is clamped to the universe first.
// Throws InvalidInput on non-finite x.
std::map<std::string, double> fuzzify(const LinguisticVariable& var, double x);

// Antecedents are (variable, term) pairs combined with AND (min);
// the consequent names a term of the output variable.
struct FuzzyRule {
    std::vector<std::pair<std::string, std::string>> antecedents;
    std::string consequent;
    bool operator==(const FuzzyRule&) const = default;
};

struct RuleBase {
    std::vector<LinguisticVariable> inputs;
    LinguisticVariable output;
    std::vector<FuzzyRule> rules;

    // Structural checks: non-empty rules, resolvable references, unique term
    // names, ordered breakpoints inside each universe. Throws RuleBaseError.
    void validate() const;
    bool operator==(const RuleBase&) const = default;
};

// Firing strength: min over antecedent degrees taken from `fuzzified`
// (keyed variable -> term -> degree). Throws RuleBaseError on a reference
// that does not resolve.
double rule_strength(
    const FuzzyRule& rule,
    const std::map<std::string, std::map<std::string, double>>& fuzzified);

inline constexpr int kDefaultFisSamples = 1001;

// Mamdani aggregation: each rule's consequent membership curve is clipped at
// the rule's strength (min) and folded into the output with max. The curve is
// sampled at `samples` points spanning [output.lo, output.hi] inclusive.
std::vector<double> aggregate(std::span<const double> strengths,
                              const RuleBase& rulebase,
                              int samples = kDefaultFisSamples);

// Discrete centroid sum(x_i * mu_i) / sum(mu_i) over the sampled curve.
// Throws NoRuleFired when the curve is identically zero.
double defuzz_centroid(std::span<const double> curve, double lo, double hi);

struct InferenceResult {
    std::vector<double> rule_strengths; // one per rule, rule order
    std::vector<double> curve;          // aggregated output membership
    double crisp = 0.0;
    bool fired = false; // any rule with strength > 0
};

// Full pipeline: fuzzify -> rule strengths -> aggregate -> centroid.
// `inputs` maps every input variable's name to its crisp value.
InferenceResult infer(const RuleBase& rulebase,
                      const std::map<std::string, double>& inputs,
                      int samples = kDefaultFisSamples);

} // namespace palettefis
