#include "r13lab/model_params.hpp"

#include <cmath>
#include <limits>
#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "r13lab/errors.hpp"

namespace r13 {

namespace {

// Highest column index used in each row of the wall conditions.
constexpr std::array<int, 9> kRowLast = {0, 5, 8, 5, 8, 8, 9, 1, 1};

} // namespace

std::size_t MTable::idx(int j, int k)
{
    if (j < 1 || j > 8 || k < 1 || k > 9)
        throw ConfigError(fmt::format("m-table index m{}{} out of range", j, k));
    return static_cast<std::size_t>((j - 1) * 9 + (k - 1));
}

bool MTable::used(int j, int k)
{
    return j >= 1 && j <= 8 && k >= 1 && k <= kRowLast[j];
}

std::string MTable::key(int j, int k) { return fmt::format("m{}{}", j, k); }

std::string MolecularModel::eta_label() const
{
    if (!eta) return "infinity";
    return fmt::format("{:g}", *eta);
}

void validate_model(MolecularModel& model)
{
    for (int i = 0; i < 11; ++i) {
        if (!std::isfinite(model.k[i]))
            throw ConfigError(fmt::format("k{} must be finite", i));
        if (model.k[i] < 0.0)
            throw ConfigError(fmt::format("k{} must be nonnegative (got {:g})", i, model.k[i]));
    }
    if (!(model.l1 > 0.0)) throw ConfigError("l1 must be positive");
    if (!(model.l2 > 0.0)) throw ConfigError("l2 must be positive");
    if (!(model.chi > 0.0 && model.chi <= 1.0))
        throw ConfigError(fmt::format("chi must lie in (0, 1] (got {:g})", model.chi));
    model.chi_tilde = 2.0 * model.chi / (2.0 - model.chi);
    for (int j = 1; j <= 8; ++j)
        for (int c = 1; c <= 9; ++c)
            if (MTable::used(j, c) && !std::isfinite(model.m(j, c)))
                throw ConfigError(fmt::format("{} must be finite", MTable::key(j, c)));
}

MolecularModel load_model_text(const std::string& json_text)
{
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(fmt::format("model document is not valid JSON: {}", e.what()));
    }

    auto need = [&](const json& node, const std::string& key) -> const json& {
        if (!node.contains(key)) throw ConfigError(fmt::format("model document: missing field '{}'", key));
        return node.at(key);
    };
    auto number = [&](const json& node, const std::string& key) {
        const json& v = need(node, key);
        if (!v.is_number()) throw ConfigError(fmt::format("model document: '{}' must be a number", key));
        return v.get<double>();
    };

    MolecularModel m;
    m.name = doc.value("name", std::string("unnamed"));
    m.provenance = doc.value("provenance", std::string());
    m.maxwell = doc.value("maxwell", false);

    const json& eta = need(doc, "eta");
    if (eta.is_string()) {
        if (eta.get<std::string>() != "infinity")
            throw ConfigError("model document: 'eta' must be a number or \"infinity\"");
    } else if (eta.is_number()) {
        m.eta = eta.get<double>();
    } else {
        throw ConfigError("model document: 'eta' must be a number or \"infinity\"");
    }

    m.chi = number(doc, "chi");
    m.l1 = number(doc, "l1");
    m.l2 = number(doc, "l2");

    const json& k = need(doc, "k");
    if (!k.is_array() || k.size() != 11)
        throw ConfigError("model document: 'k' must be an array of 11 numbers (k0..k10)");
    for (int i = 0; i < 11; ++i) {
        if (!k[i].is_number()) throw ConfigError(fmt::format("model document: k{} must be a number", i));
        m.k[i] = k[i].get<double>();
    }

    const json& table = need(doc, "m");
    for (int j = 1; j <= 8; ++j)
        for (int c = 1; c <= 9; ++c)
            if (MTable::used(j, c)) m.m(j, c) = number(table, MTable::key(j, c));

    validate_model(m);
    return m;
}

MolecularModel load_model_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigError(fmt::format("cannot open model file '{}'", path));
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_model_text(ss.str());
}

std::string model_to_json(const MolecularModel& model)
{
    // Written by hand so every number carries %.17g and the key order is fixed.
    auto num = [](double v) { return fmt::format("{:.17g}", v); };
    std::string out = "{\n";
    out += fmt::format("  \"name\": \"{}\",\n", model.name);
    out += model.eta ? fmt::format("  \"eta\": {},\n", num(*model.eta)) : std::string("  \"eta\": \"infinity\",\n");
    out += fmt::format("  \"maxwell\": {},\n", model.maxwell ? "true" : "false");
    out += fmt::format("  \"chi\": {},\n", num(model.chi));
    out += "  \"k\": [";
    for (int i = 0; i < 11; ++i) out += (i ? ", " : "") + num(model.k[i]);
    out += "],\n";
    out += fmt::format("  \"l1\": {},\n  \"l2\": {},\n", num(model.l1), num(model.l2));
    out += "  \"m\": {";
    bool first = true;
    for (int j = 1; j <= 8; ++j)
        for (int c = 1; c <= 9; ++c) {
            if (!MTable::used(j, c)) continue;
            out += fmt::format("{}\n    \"{}\": {}", first ? "" : ",", MTable::key(j, c), num(model.m(j, c)));
            first = false;
        }
    out += "\n  }";
    if (!model.provenance.empty()) {
        out += ",\n  \"provenance\": " + nlohmann::json(model.provenance).dump();
    }
    out += "\n}\n";
    return out;
}

std::string to_string(ConstraintStatus s)
{
    switch (s) {
    case ConstraintStatus::strict: return "strict";
    case ConstraintStatus::boundary: return "boundary";
    case ConstraintStatus::violated: return "violated";
    case ConstraintStatus::degenerate: return "degenerate";
    }
    return "unknown";
}

namespace {

struct Pair {
    double z, w;
    ConstraintStatus status;
};

// z = prod - num, w = num / prod; a vanishing product leaves w undefined
// unless the numerator vanishes too.
Pair classify(double prod, double num)
{
    Pair p{prod - num, 0.0, ConstraintStatus::degenerate};
    if (prod == 0.0) {
        p.w = num == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
        return p;
    }
    p.w = num / prod;
    if (p.z > 0.0 && p.w < 1.0) p.status = ConstraintStatus::strict;
    else if (p.z == 0.0) p.status = ConstraintStatus::boundary;
    else p.status = ConstraintStatus::violated;
    return p;
}

} // namespace

ConstraintReport thermo_discriminants(const MolecularModel& model)
{
    const auto& k = model.k;
    const Pair a = classify(k[1] * k[10], 3.0 * k[2] * k[2]);
    const Pair b = classify(24.0 * k[3] * k[7], 25.0 * k[4] * k[4]);
    return {a.z, a.w, b.z, b.w, a.status, b.status};
}

MolecularModel maxwell_specialize(const MolecularModel& model)
{
    MolecularModel out = model;
    out.k[0] = 1.0;
    out.k[5] = 1.0;
    for (int i = 1; i <= 4; ++i) out.k[i] = 0.0;
    out.maxwell = true;
    return out;
}

} // namespace r13
