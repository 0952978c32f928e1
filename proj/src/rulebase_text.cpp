#include "palettefis/rulebase_io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "palettefis/errors.hpp"

namespace palettefis {

namespace {

struct Location {
    std::string_view origin;
    int line;
    std::string str() const {
        return std::string(origin) + ":" + std::to_string(line);
    }
};

[[noreturn]] void fail(const Location& loc, const std::string& what) {
    throw RuleBaseError(loc.str() + ": " + what);
}

// Whitespace-separated tokens; double quotes group words, '#' starts a
// comment outside quotes.
std::vector<std::string> tokenize(std::string_view line, const Location& loc) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        const char c = line[i];
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
        } else if (c == '#') {
            break;
        } else if (c == '"') {
            const std::size_t end = line.find('"', i + 1);
            if (end == std::string_view::npos) fail(loc, "unterminated quote");
            tokens.emplace_back(line.substr(i + 1, end - i - 1));
            i = end + 1;
        } else {
            std::size_t end = i;
            while (end < line.size() && line[end] != ' ' && line[end] != '\t' &&
                   line[end] != '\r' && line[end] != '#')
                ++end;
            tokens.emplace_back(line.substr(i, end - i));
            i = end;
        }
    }
    return tokens;
}

double parse_number(const std::string& token, const Location& loc) {
    char* end = nullptr;
    const double v = std::strtod(token.c_str(), &end);
    if (end == token.c_str() || *end != '\0')
        fail(loc, "expected a number, got '" + token + "'");
    return v;
}

struct RawRule {
    std::vector<std::string> tokens;
    Location loc;
};

} // namespace

RuleBase parse_rulebase(std::string_view text, std::string_view origin) {
    RuleBase rb;
    bool have_output = false;
    std::vector<RawRule> raw_rules;

    std::istringstream stream{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        const Location loc{origin, ++line_no};
        const std::vector<std::string> tok = tokenize(line, loc);
        if (tok.empty()) continue;
        const std::string& directive = tok[0];

        if (directive == "input" || directive == "output") {
            if (tok.size() != 5 || tok[2] != "range")
                fail(loc, "expected: " + directive + " \"Name\" range <lo> <hi>");
            LinguisticVariable var;
            var.name = tok[1];
            var.lo = parse_number(tok[3], loc);
            var.hi = parse_number(tok[4], loc);
            if (directive == "input") {
                rb.inputs.push_back(std::move(var));
            } else {
                if (have_output) fail(loc, "second output variable");
                rb.output = std::move(var);
                have_output = true;
            }
        } else if (directive == "term") {
            if (tok.size() < 4)
                fail(loc, "expected: term \"Variable\" \"Term\" <shape> <points>");
            LinguisticVariable* var = nullptr;
            for (LinguisticVariable& v : rb.inputs)
                if (v.name == tok[1]) var = &v;
            if (!var && have_output && rb.output.name == tok[1]) var = &rb.output;
            if (!var)
                fail(loc, "term for undeclared variable '" + tok[1] + "'");

            const std::string& shape = tok[3];
            try {
                if (shape == "triangle") {
                    if (tok.size() != 7) fail(loc, "triangle needs 3 points");
                    var->terms.push_back(
                        {tok[2], MembershipFunction::triangular(
                                     parse_number(tok[4], loc),
                                     parse_number(tok[5], loc),
                                     parse_number(tok[6], loc))});
                } else if (shape == "trapezoid") {
                    if (tok.size() != 8) fail(loc, "trapezoid needs 4 points");
                    var->terms.push_back(
                        {tok[2], MembershipFunction::trapezoidal(
                                     parse_number(tok[4], loc),
                                     parse_number(tok[5], loc),
                                     parse_number(tok[6], loc),
                                     parse_number(tok[7], loc))});
                } else {
                    fail(loc, "unknown shape '" + shape +
                                  "' (triangle or trapezoid)");
                }
            } catch (const InvalidInput& e) {
                fail(loc, e.what());
            }
        } else if (directive == "rule") {
            raw_rules.push_back({tok, loc});
        } else {
            fail(loc, "unknown directive '" + directive + "'");
        }
    }

    const Location eof{origin, line_no + 1};
    if (rb.inputs.empty()) fail(eof, "no input variables declared");
    if (!have_output) fail(eof, "no output variable declared");

    for (const RawRule& raw : raw_rules) {
        // rule T1 ... Tn => OUT, positional over the declared inputs
        const std::size_t n = rb.inputs.size();
        if (raw.tokens.size() != n + 3 || raw.tokens[n + 1] != "=>")
            fail(raw.loc, "expected: rule <" + std::to_string(n) +
                              " input terms> => \"OutputTerm\"");
        FuzzyRule rule;
        for (std::size_t i = 0; i < n; ++i)
            rule.antecedents.emplace_back(rb.inputs[i].name, raw.tokens[i + 1]);
        rule.consequent = raw.tokens[n + 2];
        rb.rules.push_back(std::move(rule));
    }
    if (rb.rules.empty()) fail(eof, "no rules declared");

    try {
        rb.validate();
    } catch (const RuleBaseError& e) {
        throw RuleBaseError(std::string(origin) + ": " + e.what());
    }
    return rb;
}

RuleBase load_rulebase(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open rule file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_rulebase(buf.str(), path.string());
}

} // namespace palettefis
