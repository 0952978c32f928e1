#pragma once
#include <filesystem>
#include <string_view>

#include "palettefis/fuzzy.hpp"

namespace palettefis {

// Line-oriented rule base format (see data/aesthetics.rules for the shipped
// default). Directives, with '#' comments and optional double quotes around
// names containing spaces:
//
//   input  "Variable" range <lo> <hi>
//   output "Variable" range <lo> <hi>
//   term   "Variable" "Term" triangle  <a> <b> <c>
//   term   "Variable" "Term" trapezoid <a> <b> <c> <d>
//   rule   "Term1" ... "TermN" => "OutputTerm"
//
// Rules are positional: one antecedent term per input variable, in input
// declaration order. Throws RuleBaseError with <origin>:<line> context; the
// returned rule base is already validated.
RuleBase parse_rulebase(std::string_view text, std::string_view origin);

// Reads and parses a rule file. Throws IoError / RuleBaseError.
RuleBase load_rulebase(const std::filesystem::path& path);

// The built-in rule base (embedded copy of data/aesthetics.rules).
const RuleBase& default_rulebase();
std::string_view default_rules_text();

} // namespace palettefis
