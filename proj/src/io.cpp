// src/io.cpp — weight-spec parsing and JSON/CSV emission.

#include "latwce/io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace latwce::io {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void spec_error(const std::string& what) {
    throw std::domain_error("weight spec: " + what);
}

std::vector<Rational> parse_rational_list(const std::string& body) {
    std::vector<Rational> out;
    std::string inner = trim(body);
    if (inner.empty()) return out;
    std::size_t pos = 0;
    while (pos <= inner.size()) {
        std::size_t comma = inner.find(',', pos);
        std::string item = trim(comma == std::string::npos ? inner.substr(pos) : inner.substr(pos, comma - pos));
        try {
            out.push_back(rational_from_string(item));
        } catch (const std::exception& e) {
            spec_error(std::string("bad rational literal '") + item + "': " + e.what());
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

Weights weights_from_json(const json& j) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
        spec_error("expected an object with a string field \"type\"");
    std::string type = j["type"].get<std::string>();
    if (type == "product" || type == "order") {
        if (!j.contains("gammas") || !j["gammas"].is_array())
            spec_error("type \"" + type + "\" needs an array field \"gammas\"");
        std::vector<Rational> g;
        for (const auto& v : j["gammas"]) g.push_back(rational_from_json(v, "weight spec"));
        return type == "product" ? Weights::product(std::move(g)) : Weights::order_dependent(std::move(g));
    }
    if (type == "explicit") {
        if (!j.contains("d") || !j["d"].is_number_integer()) spec_error("type \"explicit\" needs an integer field \"d\"");
        if (!j.contains("entries") || !j["entries"].is_array())
            spec_error("type \"explicit\" needs an array field \"entries\"");
        int d = j["d"].get<int>();
        std::map<std::uint32_t, Rational> entries;
        for (const auto& entry : j["entries"]) {
            if (!entry.is_object() || !entry.contains("u") || !entry["u"].is_array() || !entry.contains("gamma"))
                spec_error("each entry needs fields \"u\" (array) and \"gamma\"");
            std::vector<int> u;
            for (const auto& idx : entry["u"]) {
                if (!idx.is_number_integer()) spec_error("subset indices must be integers");
                u.push_back(idx.get<int>());
            }
            std::uint32_t mask = subset_to_mask(u, d, "weight spec");
            if (!entries.emplace(mask, rational_from_json(entry["gamma"], "weight spec")).second)
                spec_error("duplicate subset in entries");
        }
        return Weights::explicit_map(d, std::move(entries));
    }
    spec_error("unknown type \"" + type + "\" (expected product, order or explicit)");
}

json lemma_to_json(const LemmaCheck& c) {
    return json{{"threshold", c.threshold}, {"count", c.count}, {"bound", c.bound}, {"pass", c.pass}};
}

json falsification_to_json(const FalsificationCheck& c) {
    return json{{"threshold", c.threshold},
                {"count", c.count_low_threshold},
                {"floor_sqrt_n", c.floor_sqrt_n},
                {"pass", c.pass}};
}

} // namespace

Rational rational_from_json(const json& v, const char* who) {
    if (v.is_string()) {
        try {
            return rational_from_string(v.get<std::string>());
        } catch (const std::exception& e) {
            throw std::domain_error(std::string(who) + ": " + e.what());
        }
    }
    if (v.is_number_integer()) return make_rational(v.get<long long>());
    if (v.is_number_unsigned()) {
        unsigned long long u = v.get<unsigned long long>();
        if (u > static_cast<unsigned long long>(std::numeric_limits<long long>::max()))
            throw std::domain_error(std::string(who) + ": integer too large");
        return make_rational(static_cast<long long>(u));
    }
    if (v.is_number_float()) return rational_from_double(v.get<double>());
    throw std::domain_error(std::string(who) + ": expected a number or a rational string, got " +
                            std::string(v.type_name()));
}

Weights parse_weight_spec(const std::string& spec) {
    std::string s = trim(spec);
    if (s.empty()) spec_error("empty spec");
    if (s[0] == '@') {
        std::string path = trim(s.substr(1));
        std::ifstream in(path, std::ios::binary);
        if (!in) spec_error("cannot read file '" + path + "'");
        std::ostringstream buffer;
        buffer << in.rdbuf();
        std::string content = trim(buffer.str());
        if (!content.empty() && content[0] == '@') spec_error("file '" + path + "' contains another @reference");
        return parse_weight_spec(content);
    }
    if (s[0] == '{') {
        json j;
        try {
            j = json::parse(s);
        } catch (const std::exception& e) {
            spec_error(std::string("malformed JSON: ") + e.what());
        }
        return weights_from_json(j);
    }
    for (const char* prefix : {"product:", "order:"}) {
        if (s.rfind(prefix, 0) == 0) {
            std::string rest = trim(s.substr(std::string(prefix).size()));
            if (rest.size() < 2 || rest.front() != '[' || rest.back() != ']')
                spec_error(std::string("expected ") + prefix + "[...]");
            std::vector<Rational> g = parse_rational_list(rest.substr(1, rest.size() - 2));
            return s[0] == 'p' ? Weights::product(std::move(g)) : Weights::order_dependent(std::move(g));
        }
    }
    spec_error("unrecognized form '" + s + "' (expected product:[...], order:[...], inline JSON or @file)");
}

json scalar_to_json(const Scalar& s) {
    if (s.is_exact()) return json(to_string(s.rational()));
    return json(s.as_double());
}

json wce_result_to_json(const WceResult& r) {
    json j;
    j["n"] = r.n;
    j["d"] = r.d;
    j["z"] = r.z ? json(*r.z) : json(nullptr);
    j["mode"] = mode_name(r.mode);
    j["method"] = wce_method_name(r.method);
    j["e2"] = scalar_to_json(r.value);
    return j;
}

json tn_value_to_json(long long n, long long kappa, const Scalar& value) {
    json j;
    j["n"] = n;
    j["kappa"] = kappa;
    j["Tn"] = scalar_to_json(value);
    return j;
}

json tn_stats_to_json(const TnTable& table) {
    TnMean mean = tn_mean(table);
    json j;
    j["n"] = table.n;
    j["mean"] = scalar_to_json(mean.empirical);
    j["mean_closed_form"] = scalar_to_json(mean.closed_form);
    j["max"] = scalar_to_json(tn_max(table));
    j["lemma"] = lemma_to_json(lemma_check(table));
    j["falsification"] = table.n >= 7 ? falsification_to_json(conjecture_falsification_check(table)) : json(nullptr);
    return j;
}

json bound_report_to_json(const BoundReport& r) {
    json j;
    j["n"] = r.n;
    j["d"] = r.d;
    j["weights"] = r.weights;
    j["e2_avg"] = r.e2_avg;
    j["proposition_rhs"] = r.prop_rhs;
    j["intermediate_rhs"] = r.intermediate_rhs;
    j["intermediate_rhs_actual_kn"] = r.intermediate_rhs_actual_kn;
    j["final_rhs"] = r.final_rhs;
    j["good_z_error_bound"] = r.good_z_error_bound;
    j["pass_avg_le_prop"] = r.pass_avg_le_prop;
    j["pass_prop_le_intermediate"] = r.pass_prop_le_intermediate;
    j["pass_intermediate_le_final"] = r.pass_intermediate_le_final;
    j["chain_pass"] = r.chain_pass;
    return j;
}

json bound_reports_to_json(std::span<const BoundReport> reports) {
    json arr = json::array();
    for (const BoundReport& r : reports) arr.push_back(bound_report_to_json(r));
    return arr;
}

json search_result_to_json(const SearchResult& r) {
    json j;
    j["method"] = search_method_name(r.method);
    j["n"] = r.best.n;
    j["d"] = r.best.dimension();
    j["z"] = r.best.z;
    j["e2"] = scalar_to_json(r.best_e2);
    if (r.best_e2_exact) j["e2_exact"] = to_string(*r.best_e2_exact);
    j["evaluations"] = r.evaluations;
    if (r.seed) j["seed"] = *r.seed;
    if (r.rng) j["rng"] = *r.rng;
    if (!r.cbc_stage_e2.empty()) j["stage_e2"] = r.cbc_stage_e2;
    return j;
}

json integrate_result_to_json(long long n, const std::vector<long long>& z, const std::string& integrand,
                              const Scalar& value, const Rational& integral) {
    json j;
    j["n"] = n;
    j["d"] = static_cast<int>(z.size());
    j["z"] = z;
    j["integrand"] = integrand;
    j["mode"] = mode_name(value.mode());
    j["value"] = scalar_to_json(value);
    j["integral"] = to_string(integral);
    double err = value.is_exact() ? std::abs(to_double(Rational(value.rational() - integral)))
                                  : std::abs(value.as_double() - to_double(integral));
    j["abs_error"] = err;
    return j;
}

json suite_report_to_json(const SuiteReport& report, const std::vector<double>* ms) {
    json j;
    j["suite"] = "latwce-verification";
    j["quick"] = report.quick;
    j["all_pass"] = report.all_pass;
    json checks = json::array();
    for (std::size_t i = 0; i < report.checks.size(); ++i) {
        const SuiteCheckOutcome& c = report.checks[i];
        json cj;
        cj["id"] = c.id;
        cj["name"] = c.name;
        cj["description"] = c.description;
        cj["pass"] = c.pass;
        cj["detail"] = c.detail;
        if (ms && i < ms->size()) cj["ms"] = (*ms)[i];
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    return j;
}

std::string points_csv(const LatticePointSet& pts, bool fractions) {
    std::ostringstream out;
    out << "i";
    for (int j = 0; j < pts.dimension(); ++j) out << ",x" << (j + 1);
    out << "\n";
    for (long long i = 0; i < pts.n(); ++i) {
        out << i;
        for (int j = 0; j < pts.dimension(); ++j) {
            out << ",";
            if (fractions)
                out << to_string(pts.coord_exact(i, j));
            else
                out << format_double(pts.coord_double(i, j));
        }
        out << "\n";
    }
    return out.str();
}

std::string tn_csv(const TnTable& table) {
    std::ostringstream out;
    out << "kappa,Tn\n";
    for (std::size_t i = 0; i < table.values.size(); ++i) {
        const Scalar& v = table.values[i];
        out << (i + 1) << "," << (v.is_exact() ? to_string(v.rational()) : format_double(v.as_double())) << "\n";
    }
    return out.str();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

} // namespace latwce::io
