#include "beg/config.hpp"

#include "beg/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace beg {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<double> parse_list(const std::string& key, const std::string& v, std::size_t expected) {
    std::istringstream ss(v);
    std::vector<double> out;
    std::string tok;
    while (ss >> tok) out.push_back(parse_number(tok));
    if (expected && out.size() != expected)
        throw ValidationError(key + " needs " + std::to_string(expected) + " numbers");
    return out;
}

long parse_integer(const std::string& key, const std::string& v) {
    const double d = parse_number(v);
    if (d != std::floor(d) || std::abs(d) > 1e15) throw ValidationError(key + " must be an integer");
    return long(d);
}

}  // namespace

double parse_number(const std::string& text) {
    const std::string t = trim(text);
    auto one = [&](const std::string& s) {
        std::size_t pos = 0;
        double v = 0;
        try {
            v = std::stod(s, &pos);
        } catch (const std::exception&) {
            throw ValidationError("not a number: '" + t + "'");
        }
        if (pos != s.size()) throw ValidationError("not a number: '" + t + "'");
        return v;
    };
    const auto slash = t.find('/');
    if (slash == std::string::npos) return one(t);
    const double den = one(trim(t.substr(slash + 1)));
    if (den == 0) throw ValidationError("zero denominator in '" + t + "'");
    return one(trim(t.substr(0, slash))) / den;
}

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    std::array<double, 4> box{-0.25, 0.25, -0.25, 0.25};
    std::array<double, 4> cuts{0, 0, 0, 0};
    std::map<std::string, int> seen;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string l = trim(line);
        if (l.empty() || l[0] == '#') continue;
        const auto eq = l.find('=');
        if (eq == std::string::npos) throw ValidationError("line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(l.substr(0, eq));
        const std::string v = trim(l.substr(eq + 1));
        if (seen[key]++) throw ValidationError("duplicate key '" + key + "'");

        if (key == "k") cfg.params.k = parse_number(v);
        else if (key == "gamma") cfg.params.gamma = parse_number(v);
        else if (key == "zeta") cfg.params.zeta = parse_number(v);
        else if (key == "epsilon") cfg.params.epsilon = parse_number(v);
        else if (key == "minimizer") {
            if (v == "structured") cfg.flow.minimizer = MinimizerKind::Structured;
            else if (v == "brute") cfg.flow.minimizer = MinimizerKind::Brute;
            else throw ValidationError("minimizer must be structured or brute");
        } else if (key == "max_steps") cfg.flow.max_steps = int(parse_integer(key, v));
        else if (key == "width_threshold") cfg.flow.width_threshold = int(parse_integer(key, v));
        else if (key == "brute_dilation") cfg.flow.brute_dilation = int(parse_integer(key, v));
        else if (key == "initial.box") {
            const auto a = parse_list(key, v, 4);
            std::copy(a.begin(), a.end(), box.begin());
        } else if (key == "initial.cuts") {
            const auto a = parse_list(key, v, 4);
            std::copy(a.begin(), a.end(), cuts.begin());
        } else if (key == "surfactant") {
            if (v == "ring") cfg.initial.surfactant_count.reset();
            else cfg.initial.surfactant_count = parse_integer(key, v);
        } else if (key == "seed") cfg.flow.seed = std::uint64_t(parse_integer(key, v));
        else if (key == "branch") {
            if (v == "floor") cfg.branch = Branch::Floor;
            else if (v == "ceil") cfg.branch = Branch::Ceil;
            else throw ValidationError("branch must be floor or ceil");
        } else if (key == "horizon") cfg.horizon = parse_number(v);
        else if (key == "compare.epsilons") cfg.compare_epsilons = parse_list(key, v, 0);
        else throw ValidationError("unknown key '" + key + "' on line " + std::to_string(lineno));
    }
    if (!(box[0] < box[1] && box[2] < box[3])) throw ValidationError("initial.box must satisfy x0 < x1 and y0 < y1");
    for (double c : cuts)
        if (c < 0) throw ValidationError("initial.cuts must be nonnegative");
    cfg.initial.octagon = OctagonSpec::from_box(box[0], box[1], box[2], box[3], cuts);
    if (!cfg.initial.octagon.valid(1e-12)) throw ValidationError("initial.cuts are too large for initial.box");
    if (cfg.compare_epsilons.empty()) cfg.compare_epsilons = {cfg.params.epsilon};
    return cfg;
}

RunConfig load_config(const std::string& path) { return parse_config(read_text_file(path)); }

void validate_config(RunConfig& cfg) {
    cfg.params.validate();
    if (cfg.flow.max_steps < 0) throw ValidationError("max_steps must be nonnegative");
    if (cfg.flow.width_threshold < 0) throw ValidationError("width_threshold must be nonnegative");
    if (cfg.flow.brute_dilation < 0) throw ValidationError("brute_dilation must be nonnegative");
    if (!(cfg.horizon >= 0)) throw ValidationError("horizon must be nonnegative");
    for (double e : cfg.compare_epsilons)
        if (!(e > 0)) throw ValidationError("compare.epsilons must be positive");
    if (cfg.params.gamma == 2.0)
        cfg.warnings.push_back("gamma = 2 is the critical case; only the exhaustive minimizer is available");

    const Region I0 = discretize_octagon(cfg.initial.octagon, cfg.params.epsilon);
    if (I0.empty()) throw ValidationError("initial octagon contains no lattice points at this spacing");
    const long ring = long(outer_boundary(I0).size());
    if (cfg.initial.surfactant_count && *cfg.initial.surfactant_count < ring)
        throw ValidationError("surfactant count " + std::to_string(*cfg.initial.surfactant_count) +
                              " cannot ring the initial set (needs " + std::to_string(ring) + ")");
    if (cfg.params.gamma < 2) {
        // eps C >= sum (P_i + D_i / sqrt 2), in lattice units sum of side cells and diagonal steps.
        const OctagonOffsets o = OctagonOffsets::hull(I0);
        long need = 0;
        for (int v : o.side_counts()) need += v;
        for (int v : o.diagonal_steps()) need += v;
        const long C = cfg.initial.surfactant_count.value_or(ring);
        if (C < need)
            throw ValidationError("surfactant count " + std::to_string(C) +
                                  " is too small to surround the initial octagon (needs " + std::to_string(need) + ")");
    }
}

Json config_to_json(const RunConfig& cfg) {
    Json j;
    j["k"] = cfg.params.k;
    j["gamma"] = cfg.params.gamma;
    j["zeta"] = cfg.params.zeta;
    j["epsilon"] = cfg.params.epsilon;
    j["minimizer"] = to_string(cfg.flow.minimizer);
    j["max_steps"] = cfg.flow.max_steps;
    j["width_threshold"] = cfg.flow.width_threshold;
    j["brute_dilation"] = cfg.flow.brute_dilation;
    const OctagonSpec& A = cfg.initial.octagon;
    j["initial.support_p"] = {A.p[0], A.p[1], A.p[2], A.p[3]};
    j["initial.support_d"] = {A.d[0], A.d[1], A.d[2], A.d[3]};
    if (cfg.initial.surfactant_count) j["surfactant"] = *cfg.initial.surfactant_count;
    else j["surfactant"] = "ring";
    if (cfg.flow.seed) j["seed"] = *cfg.flow.seed;
    else j["seed"] = nullptr;
    j["branch"] = to_string(cfg.branch);
    j["horizon"] = cfg.horizon;
    j["compare.epsilons"] = cfg.compare_epsilons;
    j["audit_candidates"] = cfg.flow.audit;
    if (!cfg.warnings.empty()) j["warnings"] = cfg.warnings;
    return j;
}

}  // namespace beg
