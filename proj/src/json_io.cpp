#include "mtc/json_io.hpp"

#include <fstream>

namespace mtc {

namespace {

Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2)
        throw StructuralError("complex entries must be [re, im] pairs");
    return Complex(j[0].get<double>(), j[1].get<double>());
}

Json complex_to_json(const Complex& z) {
    return Json::array({z.real(), z.imag()});
}

} // namespace

ModularData modular_data_from_json(const Json& j) {
    if (!j.contains("labels") || !j.contains("vacuum") || !j.contains("S"))
        throw StructuralError("modular data needs labels, vacuum and S");
    std::vector<std::string> labels = j.at("labels").get<std::vector<std::string>>();
    std::size_t n = labels.size();
    const Json& rows = j.at("S");
    if (!rows.is_array() || rows.size() != n)
        throw StructuralError("S must have one row per label");
    CMatrix s(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!rows[i].is_array() || rows[i].size() != n)
            throw StructuralError("S row " + std::to_string(i) + " has the wrong length");
        for (std::size_t k = 0; k < n; ++k)
            s.at(i, k) = complex_from_json(rows[i][k]);
    }
    ModularData md(labels, j.at("vacuum").get<std::size_t>(), s);
    if (j.contains("weights") && !j.at("weights").is_null()) {
        std::vector<Rational> w;
        for (const auto& e : j.at("weights"))
            w.push_back(parse_rational(e.get<std::string>()));
        if (w.size() != n)
            throw StructuralError("weights must have one entry per label");
        md.weights = w;
    }
    if (j.contains("central_charge") && !j.at("central_charge").is_null())
        md.central_charge = parse_rational(j.at("central_charge").get<std::string>());
    if (j.contains("tolerance") && !j.at("tolerance").is_null())
        md.axiom_tol = j.at("tolerance").get<double>();
    return md;
}

Json modular_data_to_json(const ModularData& md) {
    Json j;
    j["labels"] = md.labels;
    j["vacuum"] = md.vacuum;
    Json rows = Json::array();
    for (std::size_t i = 0; i < md.size(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < md.size(); ++k)
            row.push_back(complex_to_json(md.s.at(i, k)));
        rows.push_back(row);
    }
    j["S"] = rows;
    if (md.weights) {
        Json w = Json::array();
        for (const auto& r : *md.weights)
            w.push_back(to_string(r));
        j["weights"] = w;
    }
    if (md.central_charge)
        j["central_charge"] = to_string(*md.central_charge);
    j["tolerance"] = md.axiom_tol;
    return j;
}

FiniteGroup group_from_json(const Json& j) {
    std::string type = j.at("type").get<std::string>();
    if (type == "cyclic")
        return FiniteGroup::cyclic(j.at("order").get<long>());
    if (type == "table")
        return FiniteGroup::from_table(j.at("mul").get<std::vector<std::vector<int>>>());
    throw StructuralError("unknown group type '" + type + "'");
}

Json group_to_json(const FiniteGroup& g) {
    Json j;
    if (g.kind() == FiniteGroup::Kind::Cyclic) {
        j["type"] = "cyclic";
        j["order"] = g.cyclic_orders()[0];
        return j;
    }
    j["type"] = "table";
    std::vector<std::vector<int>> mul(static_cast<std::size_t>(g.order()),
                                      std::vector<int>(static_cast<std::size_t>(g.order())));
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
            mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = g.mul(a, b);
    j["mul"] = mul;
    return j;
}

TwoCocycle cocycle_from_json(const Json& j) {
    TwoCocycle c;
    c.n = j.at("n").get<long>();
    c.exp = j.at("exp").get<std::vector<std::vector<long>>>();
    if (c.n < 1)
        throw StructuralError("cocycle root order must be positive");
    for (const auto& row : c.exp)
        if (row.size() != c.exp.size())
            throw StructuralError("cocycle exponent table must be square");
    return c;
}

std::vector<ProjectiveCharacter> character_table_from_json(const Json& j) {
    std::vector<ProjectiveCharacter> out;
    for (const auto& row : j.at("rows")) {
        ProjectiveCharacter chi;
        for (const auto& e : row)
            chi.values.push_back(complex_from_json(e));
        out.push_back(std::move(chi));
    }
    return out;
}

OrbifoldDescriptor descriptor_from_json(const Json& j) {
    OrbifoldDescriptor d;
    d.group = group_from_json(j.at("group"));
    for (const auto& [key, recs] : j.at("sectors").items()) {
        int g = std::stoi(key);
        std::vector<TwistedModuleRecord> list;
        for (const auto& r : recs) {
            TwistedModuleRecord rec;
            rec.label = r.at("label").get<std::string>();
            if (r.contains("qdim") && !r.at("qdim").is_null())
                rec.qdim = r.at("qdim").get<double>();
            if (r.contains("S_MV") && !r.at("S_MV").is_null())
                rec.s_mv = complex_from_json(r.at("S_MV"));
            rec.orbit = r.at("orbit").get<int>();
            list.push_back(std::move(rec));
        }
        d.sectors[g] = std::move(list);
    }
    for (const auto& o : j.at("orbits")) {
        OrbitData od;
        od.id = o.at("id").get<int>();
        od.stabilizer_order = o.at("stabilizer_order").get<int>();
        od.irrep_dims = o.at("irrep_dims").get<std::vector<int>>();
        if (o.contains("stabilizer") && !o.at("stabilizer").is_null())
            od.stabilizer = o.at("stabilizer").get<std::vector<int>>();
        d.orbits.push_back(std::move(od));
    }
    for (const auto& [key, perm] : j.at("action_on_untwisted").items())
        d.action_on_untwisted[std::stoi(key)] = perm.get<std::vector<std::size_t>>();
    return d;
}

Json descriptor_to_json(const OrbifoldDescriptor& d) {
    Json j;
    j["group"] = group_to_json(d.group);
    Json sectors = Json::object();
    for (const auto& [g, recs] : d.sectors) {
        Json list = Json::array();
        for (const auto& r : recs) {
            Json e;
            e["label"] = r.label;
            if (r.qdim)
                e["qdim"] = *r.qdim;
            if (r.s_mv)
                e["S_MV"] = complex_to_json(*r.s_mv);
            e["orbit"] = r.orbit;
            list.push_back(e);
        }
        sectors[std::to_string(g)] = list;
    }
    j["sectors"] = sectors;
    Json orbits = Json::array();
    for (const auto& o : d.orbits) {
        Json e;
        e["id"] = o.id;
        e["stabilizer_order"] = o.stabilizer_order;
        e["irrep_dims"] = o.irrep_dims;
        if (o.stabilizer)
            e["stabilizer"] = *o.stabilizer;
        orbits.push_back(e);
    }
    j["orbits"] = orbits;
    Json action = Json::object();
    for (const auto& [g, perm] : d.action_on_untwisted)
        action[std::to_string(g)] = perm;
    j["action_on_untwisted"] = action;
    return j;
}

Json validation_report_to_json(const ValidationReport& rep) {
    Json checks = Json::array();
    for (const auto& c : rep.checks)
        checks.push_back({{"name", c.name},
                          {"deviation", c.deviation},
                          {"tolerance", c.tolerance},
                          {"pass", c.pass}});
    return Json{{"checks", checks}, {"pass", rep.pass}};
}

Json identity_report_to_json(const IdentityReport& rep) {
    Json checks = Json::array();
    for (const auto& c : rep.checks)
        checks.push_back({{"id", c.id},
                          {"lhs", c.lhs},
                          {"rhs", c.rhs},
                          {"deviation", c.deviation},
                          {"pass", c.pass}});
    return Json{{"checks", checks}, {"pass", rep.pass}};
}

Json descriptor_report_to_json(const DescriptorReport& rep) {
    Json checks = Json::array();
    for (const auto& c : rep.checks)
        checks.push_back({{"invariant", c.invariant}, {"pass", c.pass}, {"detail", c.detail}});
    return Json{{"checks", checks}, {"pass", rep.pass}};
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw StructuralError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw StructuralError(std::string("JSON syntax error in '") + path + "': " + e.what());
    }
}

} // namespace mtc
