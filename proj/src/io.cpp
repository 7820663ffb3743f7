#include "qchar/io.hpp"

#include <sstream>
#include <stdexcept>

namespace qchar::io {

json cartan_to_json(const CartanData& cd) {
    json j;
    j["name"] = cd.name();
    j["rank"] = cd.rank;
    j["matrix"] = cd.matrix;
    j["symmetrizers"] = cd.symmetrizers;
    if (cd.twist) j["twist"] = *cd.twist;
    return j;
}

CartanData cartan_from_json(const json& j) {
    if (j.is_string()) return build_cartan(j.get<std::string>());
    if (!j.is_object()) throw std::invalid_argument("cartan must be a name or an object");
    if (j.contains("name") && !j.contains("matrix")) return build_cartan(j.at("name").get<std::string>());
    if (j.contains("name")) {
        const std::string name = j.at("name").get<std::string>();
        if (name.rfind("custom", 0) != 0) return build_cartan(name);
    }
    auto matrix = j.at("matrix").get<std::vector<std::vector<int>>>();
    std::vector<int> symm;
    if (j.contains("symmetrizers")) symm = j.at("symmetrizers").get<std::vector<int>>();
    return custom_cartan(std::move(matrix), std::move(symm));
}

json diagnostics_to_json(const FmDiagnostics& d) {
    json j;
    j["converged"] = d.converged;
    j["cap_hit"] = d.cap_hit;
    j["strict_abort"] = d.strict_abort;
    j["color_consistent"] = d.color_consistent;
    j["rounds"] = d.rounds;
    j["max_grade"] = d.max_grade;
    json extra = json::array();
    for (const Monomial& m : d.extra_dominant) extra.push_back(to_string(m));
    j["extra_dominant"] = extra;
    j["notes"] = d.notes;
    return j;
}

FmDiagnostics diagnostics_from_json(const json& j) {
    FmDiagnostics d;
    d.converged = j.at("converged").get<bool>();
    d.cap_hit = j.at("cap_hit").get<bool>();
    d.strict_abort = j.at("strict_abort").get<bool>();
    d.color_consistent = j.at("color_consistent").get<bool>();
    d.rounds = j.at("rounds").get<int>();
    d.max_grade = j.at("max_grade").get<int>();
    for (const auto& s : j.at("extra_dominant")) d.extra_dominant.push_back(parse_monomial(s.get<std::string>()));
    d.notes = j.at("notes").get<std::vector<std::string>>();
    return d;
}

json character_to_json(const CartanData& cd, const QCharacter& chi) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["cartan"] = cartan_to_json(cd);
    j["head"] = to_string(chi.head());
    json terms = json::array();
    for (const GradedTerm& t : graded_terms(cd, chi)) terms.push_back({{"m", to_string(t.m)}, {"mult", t.mult}});
    j["terms"] = terms;
    j["diagnostics"] = diagnostics_to_json(chi.diagnostics());
    return j;
}

QCharacter character_from_json(const json& j) {
    if (j.value("schema_version", 0) != kSchemaVersion)
        throw std::invalid_argument("unsupported schema_version " + j.value("schema_version", json(0)).dump());
    QCharacter chi{parse_monomial(j.at("head").get<std::string>())};
    for (const auto& t : j.at("terms")) chi.add(parse_monomial(t.at("m").get<std::string>()), t.at("mult").get<Mult>());
    if (j.contains("diagnostics")) chi.diagnostics() = diagnostics_from_json(j.at("diagnostics"));
    return chi;
}

std::string character_text(const CartanData& cd, const QCharacter& chi) {
    std::ostringstream os;
    for (const GradedTerm& t : graded_terms(cd, chi)) os << to_string(t.m) << "  " << t.mult << '\n';
    return os.str();
}

json property_to_json(const PropertyResult& p) {
    json j;
    j["verdict"] = std::string(to_string(p.verdict));
    j["certificate"] = p.certificate;
    j["witness"] = p.witness ? json(to_string(*p.witness)) : json(nullptr);
    return j;
}

json report_to_json(const CartanData& cd, const PropertyReport& rep) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["cartan"] = cartan_to_json(cd);
    j["head"] = to_string(rep.head);
    j["special"] = property_to_json(rep.special);
    j["antispecial"] = property_to_json(rep.antispecial);
    j["thin"] = property_to_json(rep.thin);
    j["trusted"] = rep.trusted;
    return j;
}

namespace {

std::vector<std::vector<Monomial>> products(const json& j) {
    std::vector<std::vector<Monomial>> out;
    for (const auto& p : j) {
        std::vector<Monomial> heads;
        for (const auto& s : p) heads.push_back(parse_monomial(s.get<std::string>()));
        out.push_back(std::move(heads));
    }
    return out;
}

}  // namespace

ProductIdentity identity_from_json(const json& j) {
    ProductIdentity id;
    id.lhs = products(j.at("lhs"));
    id.rhs = products(j.at("rhs"));
    if (j.contains("expected_dominant")) id.expected_dominant = products(j.at("expected_dominant"));
    return id;
}

SkewShape shape_from_json(const json& j) {
    Partition outer(j.at("outer").get<std::vector<int>>());
    Partition inner;
    if (j.contains("inner")) inner = Partition(j.at("inner").get<std::vector<int>>());
    return SkewShape(std::move(outer), std::move(inner));
}

}  // namespace qchar::io
