#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "binom/pipeline.hpp"

namespace binom::cli {
namespace {

using Json = nlohmann::ordered_json;

const std::set<std::string> kOptionKeys = {
    "seed",           "degree",        "fallback_bound", "precision_bits",
    "max_precision_bits", "witness_degree_cap", "retry_budget", "box_bits",
};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// [begin, end) of s with surrounding blanks removed.
std::pair<std::size_t, std::size_t> trim_range(std::string_view s, std::size_t begin,
                                               std::size_t end) {
    while (begin < end && is_space(s[begin]))
        ++begin;
    while (end > begin && is_space(s[end - 1]))
        --end;
    return {begin, end};
}

bool is_identifier(std::string_view s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
        return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

// Splits at commas outside parentheses; yields (begin, end) ranges.
std::vector<std::pair<std::size_t, std::size_t>> split_top_level(std::string_view s,
                                                                 std::size_t begin) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    int depth = 0;
    std::size_t start = begin;
    for (std::size_t i = begin; i < s.size(); ++i) {
        if (s[i] == '(')
            ++depth;
        else if (s[i] == ')')
            --depth;
        else if (s[i] == ',' && depth == 0) {
            out.emplace_back(start, i);
            start = i + 1;
        }
    }
    out.emplace_back(start, s.size());
    return out;
}

std::string normalize_key(std::string key) {
    std::replace(key.begin(), key.end(), '-', '_');
    return key;
}

template <typename T>
T parse_integer(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(value, &used);
        if (used != value.size())
            throw std::invalid_argument("trailing characters");
        if (v < 0 || v > static_cast<long long>(std::numeric_limits<int>::max()) * 4)
            throw std::out_of_range("range");
        return static_cast<T>(v);
    } catch (const std::exception&) {
        throw Error("option " + key + ": expected a nonnegative integer, got '" + value + "'");
    }
}

PipelineOptions effective_options(const ProblemFile& problem, const Flags& flags) {
    PipelineOptions o;
    for (const auto& [key, value] : problem.options) {
        if (key == "seed")
            o.seed = parse_integer<std::uint64_t>(key, value);
        else if (key == "fallback_bound")
            o.fallback_bound = parse_integer<int>(key, value);
        else if (key == "precision_bits")
            o.precision_bits = parse_integer<long>(key, value);
        else if (key == "max_precision_bits")
            o.max_precision_bits = parse_integer<long>(key, value);
        else if (key == "witness_degree_cap")
            o.witness_degree_cap = parse_integer<int>(key, value);
        else if (key == "retry_budget")
            o.retry_budget = parse_integer<int>(key, value);
        else if (key == "box_bits")
            o.box_bits = parse_integer<int>(key, value);
    }
    if (flags.seed)
        o.seed = *flags.seed;
    if (flags.fallback_bound)
        o.fallback_bound = *flags.fallback_bound;
    if (flags.precision_bits)
        o.precision_bits = *flags.precision_bits;
    if (o.precision_bits < 16 || o.max_precision_bits < o.precision_bits)
        throw Error("precision must be at least 16 bits and below the maximum");
    if (o.box_bits < 1 || o.box_bits > 62)
        throw Error("box_bits must lie in [1, 62]");
    return o;
}

Json lattice_json(const std::vector<ExponentVector>& rows) {
    Json out = Json::array();
    for (const auto& r : rows)
        out.push_back(std::vector<int>(r.begin(), r.end()));
    return out;
}

Json strings(const std::vector<mpq_class>& values) {
    Json out = Json::array();
    for (const auto& v : values)
        out.push_back(v.get_str());
    return out;
}

void add_part(Json& report, const BinomialPartResult& part) {
    report["laurent_status"] = to_string(part.status);
    report["lattice"] = lattice_json(part.lattice_basis);
    report["lambdas"] = strings(part.lambdas);
    Json gens = Json::array();
    for (const auto& g : part.generators)
        gens.push_back(g.to_string());
    report["generators"] = gens;
    report["certified"] = part.certified;
    report["tropical_span"] = part.tropical_span;
    report["quotient_dimension"] = part.quotient_dimension;
}

// Plain text rendering of a report object, one field per line.
void render_text(const Json& report, std::ostream& out) {
    auto scalar = [](const Json& v) -> std::string {
        if (v.is_string())
            return v.get<std::string>();
        if (v.is_boolean())
            return v.get<bool>() ? "true" : "false";
        return v.dump();
    };
    for (const auto& [key, value] : report.items()) {
        if (!value.is_array()) {
            out << key << ": " << scalar(value) << "\n";
            continue;
        }
        if (value.empty()) {
            out << key << ": (none)\n";
            continue;
        }
        bool nested = value.front().is_array();
        if (!nested && key != "generators" && key != "binomials") {
            out << key << ":";
            for (std::size_t i = 0; i < value.size(); ++i)
                out << (i ? ", " : " ") << scalar(value[i]);
            out << "\n";
            continue;
        }
        out << key << ":\n";
        for (const auto& row : value) {
            out << "  ";
            if (row.is_array())
                for (std::size_t i = 0; i < row.size(); ++i)
                    out << (i ? " " : "") << scalar(row[i]);
            else
                out << scalar(row);
            out << "\n";
        }
    }
}

IdealHandle build_ideal(const ProblemFile& problem) {
    if (problem.ring.size() + 2 > kMaxVars)
        throw InputError("at most " + std::to_string(kMaxVars - 2) + " variables are supported", 1,
                         1);
    RingPtr ring = Ring::make(problem.ring, false);
    std::vector<LaurentPoly> gens;
    for (const auto& g : problem.generators) {
        try {
            gens.push_back(parse_poly(g.text, ring));
        } catch (const ParseError& e) {
            throw InputError(e.what(), g.line, g.column + e.position());
        }
    }
    return IdealHandle(ring, std::move(gens));
}

} // namespace

InputError::InputError(const std::string& what, std::size_t line, std::size_t column)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

ProblemFile parse_problem(std::string_view text) {
    ProblemFile out;
    bool have_ring = false;
    std::size_t line_no = 0, pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos)
            nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;
        std::size_t end = std::min(line.find('#'), line.size());
        auto [b, e] = trim_range(line, 0, end);
        if (b == e) {
            if (nl == text.size())
                break;
            continue;
        }
        std::string_view body = line.substr(0, e);
        auto directive = [&](std::string_view word) {
            return body.substr(b).starts_with(word);
        };
        if (directive("ring:")) {
            if (have_ring)
                throw InputError("duplicate ring line", line_no, b + 1);
            have_ring = true;
            std::set<std::string> seen;
            for (auto [s, t] : split_top_level(body, b + 5)) {
                auto [vb, ve] = trim_range(body, s, t);
                std::string name(body.substr(vb, ve - vb));
                if (!is_identifier(name))
                    throw InputError("invalid variable name '" + name + "'", line_no, vb + 1);
                if (!seen.insert(name).second)
                    throw InputError("duplicate variable name '" + name + "'", line_no, vb + 1);
                out.ring.push_back(name);
            }
        } else if (directive("ideal:")) {
            auto parts = split_top_level(body, b + 6);
            if (parts.size() == 1 && trim_range(body, parts[0].first, parts[0].second).first ==
                                         trim_range(body, parts[0].first, parts[0].second).second)
                continue;  // "ideal:" alone adds nothing
            for (auto [s, t] : parts) {
                auto [gb, ge] = trim_range(body, s, t);
                if (gb == ge)
                    throw InputError("empty generator", line_no, gb + 1);
                out.generators.push_back({std::string(body.substr(gb, ge - gb)), line_no, gb + 1});
            }
        } else if (directive("option")) {
            std::string_view rest = body.substr(b + 6);
            std::size_t eq = rest.find('=');
            if (eq == std::string_view::npos)
                throw InputError("expected 'option key = value'", line_no, b + 1);
            std::size_t base = b + 6;
            auto [kb, ke] = trim_range(body, base, base + eq);
            auto [vb, ve] = trim_range(body, base + eq + 1, body.size());
            std::string key = normalize_key(std::string(body.substr(kb, ke - kb)));
            if (!kOptionKeys.count(key))
                throw InputError("unknown option '" + key + "'", line_no, kb + 1);
            if (vb == ve)
                throw InputError("missing option value", line_no, vb + 1);
            out.options[key] = std::string(body.substr(vb, ve - vb));
        } else {
            throw InputError("expected 'ring:', 'ideal:' or 'option'", line_no, b + 1);
        }
        if (nl == text.size())
            break;
    }
    if (!have_ring)
        throw InputError("missing ring line", 1, 1);
    if (out.ring.empty())
        throw InputError("ring has no variables", 1, 1);
    return out;
}

int run_command(const std::string& command, const ProblemFile& problem, const Flags& flags,
                std::ostream& out, std::ostream& err) {
    const auto start = std::chrono::steady_clock::now();
    Json report;
    int code = kOk;
    try {
        PipelineOptions options = effective_options(problem, flags);
        IdealHandle ideal = build_ideal(problem);
        report["command"] = command;
        report["ring"] = problem.ring;
        Json gens = Json::array();
        for (const auto& g : ideal.generators())
            gens.push_back(g.to_string());
        report["ideal"] = gens;
        report["seed"] = options.seed;

        Completeness completeness = Completeness::CertifiedTrivial;
        if (command == "bin") {
            BinomialPartResult part = binomial_part_laurent(ideal, options);
            completeness = part.completeness;
            report["status"] = to_string(part.status);
            report["completeness"] = to_string(completeness);
            add_part(report, part);
            report.erase("laurent_status");
        } else if (command == "decide") {
            BinomialDecision d = contains_binomial(ideal, options);
            completeness = d.completeness;
            report["status"] = d.contains;
            report["witness"] = d.witness ? d.witness->to_string() : "none";
            report["witness_certified"] = d.witness_certified;
            report["completeness"] = to_string(completeness);
            if (!d.diagnostic.empty())
                report["diagnostic"] = d.diagnostic;
            add_part(report, d.part);
            report["laurent_status"] = to_string(d.status);
        } else if (command == "monomial") {
            report["status"] = contains_monomial(ideal);
            report["completeness"] = to_string(completeness);
        } else if (command == "tropspan") {
            SpanBasis span = tropical_span(ideal, options.tropical());
            completeness = span.completeness;
            report["status"] = "span of dimension " + std::to_string(span.vectors.size());
            report["completeness"] = to_string(completeness);
            Json rows = Json::array();
            for (const auto& v : span.vectors)
                rows.push_back(v);
            report["basis"] = rows;
        } else if (command == "oracle") {
            int degree = flags.degree ? *flags.degree : -1;
            if (degree < 0 && problem.options.count("degree"))
                degree = parse_integer<int>("degree", problem.options.at("degree"));
            if (degree < 1)
                throw Error("oracle requires --degree D with D >= 1");
            auto found = brute_force_binomials(ideal, degree);
            report["degree"] = degree;
            report["status"] = std::to_string(found.size()) + " binomials";
            report["completeness"] = to_string(completeness);
            Json list = Json::array();
            for (const auto& b : found)
                list.push_back(b.to_poly(ideal.ring()).to_string());
            report["binomials"] = list;
        } else {
            throw Error("unknown command '" + command + "'");
        }
        if (completeness == Completeness::FallbackExhausted)
            code = kIncomplete;
    } catch (const BudgetExhausted& e) {
        err << "error: " << e.what() << "\n";
        return kIncomplete;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    if (!flags.no_timing) {
        std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
        report["time_ms"] = std::round(ms.count() * 1000.0) / 1000.0;
    }
    if (flags.json)
        out << report.dump(2) << "\n";
    else
        render_text(report, out);
    return code;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Binomials in polynomial ideals: decision, binomial parts, tropical spans",
                 "binom"};
    std::string command, path;
    Flags flags;
    std::uint64_t seed = 0;
    int degree = 0, bound = 0;
    long precision = 0;
    app.add_option("command", command, "bin | decide | monomial | tropspan | oracle")
        ->required()
        ->check(CLI::IsMember({"bin", "decide", "monomial", "tropspan", "oracle"}));
    app.add_option("file", path, "problem file, or - for standard input")->required();
    auto* seed_opt = app.add_option("--seed", seed, "seed for randomized choices");
    auto* degree_opt = app.add_option("--degree", degree, "degree bound for oracle");
    auto* bound_opt = app.add_option("--fallback-bound", bound, "entry bound of ray search");
    auto* prec_opt = app.add_option("--precision-bits", precision, "initial working precision");
    app.add_flag("--json", flags.json, "emit a JSON report");
    app.add_flag("--no-timing", flags.no_timing, "omit wall-clock time from the report");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    if (*seed_opt)
        flags.seed = seed;
    if (*degree_opt)
        flags.degree = degree;
    if (*bound_opt)
        flags.fallback_bound = bound;
    if (*prec_opt)
        flags.precision_bits = precision;

    std::string text;
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(path);
        if (!in) {
            err << "error: cannot open '" << path << "'\n";
            return kInputError;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        ProblemFile problem = parse_problem(text);
        return run_command(command, problem, flags, out, err);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

} // namespace binom::cli
