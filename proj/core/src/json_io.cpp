#include "isospec/json_io.hpp"

#include "isospec/errors.hpp"

namespace isospec {

namespace {

nlohmann::json integer_to_json(const Integer& n) {
    if (n.fits_slong_p())
        return nlohmann::json(n.get_si());
    return nlohmann::json(n.get_str());
}

Integer integer_from_json(const nlohmann::json& j) {
    if (j.is_number_integer())
        return Integer(j.get<long>());
    if (j.is_string())
        return Integer(j.get<std::string>());
    throw InvalidArgumentError("expected an integer (number or decimal string)");
}

} // namespace

void to_json(nlohmann::json& j, const Place& place) {
    j = nlohmann::json{{"kind", to_string(place.kind)},
                       {"label", place.label},
                       {"orbit_id", place.orbit_id}};
}

void from_json(const nlohmann::json& j, Place& place) {
    place.kind = place_kind_from_string(j.at("kind").get<std::string>());
    place.label = j.at("label").get<std::string>();
    place.orbit_id = j.at("orbit_id").get<std::string>();
}

namespace {

// Classes are keyed by label alone; kind is inferred so archimedean
// validation still applies, and orbit_id defaults to the label (the
// universe's copy is authoritative wherever orbits matter).
Place place_from_label(const std::string& label) {
    if (label == "real")
        return Place::real_place();
    if (label == "complex")
        return Place::complex_place();
    return Place{PlaceKind::finite, label, label};
}

} // namespace

void to_json(nlohmann::json& j, const BrauerClass& c) {
    nlohmann::json invariants = nlohmann::json::object();
    for (const BrauerClass::Entry& e : c.entries())
        invariants[e.first.label] = e.second.str();
    j = nlohmann::json{{"invariants", std::move(invariants)}};
}

void from_json(const nlohmann::json& j, BrauerClass& c) {
    std::vector<BrauerClass::Entry> entries;
    for (const auto& [label, value] : j.at("invariants").items())
        entries.emplace_back(place_from_label(label),
                             LocalInvariant::from_string(value.get<std::string>()));
    c = make_class(std::move(entries));
}

void to_json(nlohmann::json& j, const Permutation& p) {
    j = nlohmann::json::array();
    for (std::size_t x : p.images())
        j.push_back(x);
}

void from_json(const nlohmann::json& j, Permutation& p) {
    p = Permutation(j.get<std::vector<std::size_t>>());
}

void to_json(nlohmann::json& j, const PlaceUniverse& u) {
    j = nlohmann::json{{"places", u.places},
                       {"nu0", u.nu0().label},
                       {"automorphism_generators", u.automorphism_generators}};
}

void from_json(const nlohmann::json& j, PlaceUniverse& u) {
    std::vector<Permutation> generators;
    if (j.contains("automorphism_generators"))
        generators = j.at("automorphism_generators").get<std::vector<Permutation>>();
    u = PlaceUniverse::make(j.at("places").get<std::vector<Place>>(),
                            j.at("nu0").get<std::string>(), std::move(generators));
}

void to_json(nlohmann::json& j, const CommensurabilityVerdict& v) {
    j = nlohmann::json{{"relation", to_string(v.relation)},
                       {"fixes_nu0", v.fixes_nu0}};
    j["witness"] = v.witness ? nlohmann::json(*v.witness) : nlohmann::json(nullptr);
}

void from_json(const nlohmann::json& j, CommensurabilityVerdict& v) {
    v.relation = ring_relation_from_string(j.at("relation").get<std::string>());
    v.fixes_nu0 = j.at("fixes_nu0").get<bool>();
    if (j.contains("witness") && !j.at("witness").is_null())
        v.witness = j.at("witness").get<Permutation>();
    else
        v.witness.reset();
}

void to_json(nlohmann::json& j, const FamilyCertificate& cert) {
    j = nlohmann::json{{"d", integer_to_json(cert.d)},
                       {"T", cert.T},
                       {"vectors", cert.vectors},
                       {"classes", cert.classes},
                       {"pairwise", cert.pairwise}};
}

void from_json(const nlohmann::json& j, FamilyCertificate& cert) {
    cert.d = integer_from_json(j.at("d"));
    cert.T = j.at("T").get<std::vector<Place>>();
    cert.vectors = j.at("vectors").get<std::vector<std::vector<int>>>();
    cert.classes = j.at("classes").get<std::vector<BrauerClass>>();
    cert.pairwise =
        j.at("pairwise").get<std::vector<std::vector<CommensurabilityVerdict>>>();
}

void to_json(nlohmann::json& j, const CertificateCheck& check) {
    j = nlohmann::json{{"ok", check.ok}, {"failures", check.failures}};
}

void to_json(nlohmann::json& j, const HilbertTable& table) {
    nlohmann::json signs = nlohmann::json::array();
    for (const auto& [place, sign] : table.signs)
        signs.push_back(nlohmann::json{{"place", place.label}, {"sign", sign}});
    j = nlohmann::json{{"a", format_rational(table.symbol.a)},
                       {"b", format_rational(table.symbol.b)},
                       {"signs", std::move(signs)}};
}

void to_json(nlohmann::json& j, const PermGroup& g) {
    j = nlohmann::json{{"degree", g.degree},
                       {"generators", g.generators},
                       {"order", g.order()}};
}

void from_json(const nlohmann::json& j, PermGroup& g) {
    g = close_group(j.at("degree").get<std::size_t>(),
                    j.at("generators").get<std::vector<Permutation>>());
}

void to_json(nlohmann::json& j, const GassmannReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const GassmannRow& row : report.rows)
        rows.push_back(nlohmann::json{{"representative", row.representative},
                                      {"cycles", row.representative.cycle_string()},
                                      {"size", row.class_size},
                                      {"h1_count", row.count_h1},
                                      {"h2_count", row.count_h2}});
    j = nlohmann::json{{"gassmann", report.gassmann}, {"classes", std::move(rows)}};
}

void to_json(nlohmann::json& j, const SchreierGraph& graph) {
    j = nlohmann::json{{"vertex_count", graph.vertex_count()},
                       {"adjacency", matrix_to_json(graph.adjacency)},
                       {"gens", graph.gens}};
}

void to_json(nlohmann::json& j, const IntPolynomial& p) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const Integer& c : p.coefficients())
        coeffs.push_back(c.get_str());
    j = nlohmann::json{{"coefficients", std::move(coeffs)}, {"pretty", p.str()}};
}

void from_json(const nlohmann::json& j, IntPolynomial& p) {
    std::vector<Integer> coeffs;
    for (const auto& c : j.at("coefficients"))
        coeffs.push_back(integer_from_json(c));
    p = IntPolynomial(std::move(coeffs));
}

void to_json(nlohmann::json& j, const IsoVerdict& v) {
    j = nlohmann::json{{"isospectral", v.isospectral},
                       {"isomorphic", to_string(v.isomorphic)},
                       {"nodes_expanded", v.nodes_expanded}};
    j["witness"] = v.witness ? nlohmann::json(*v.witness) : nlohmann::json(nullptr);
}

nlohmann::json matrix_to_json(const IntMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : m) {
        nlohmann::json r = nlohmann::json::array();
        for (const Integer& x : row)
            r.push_back(integer_to_json(x));
        rows.push_back(std::move(r));
    }
    return rows;
}

IntMatrix matrix_from_json(const nlohmann::json& j) {
    IntMatrix m;
    for (const auto& row : j) {
        std::vector<Integer> r;
        for (const auto& x : row)
            r.push_back(integer_from_json(x));
        if (!m.empty() && r.size() != m.front().size())
            throw InvalidArgumentError("matrix rows must all have the same length");
        m.push_back(std::move(r));
    }
    return m;
}

IntMatrix adjacency_from_json(const nlohmann::json& j) {
    if (j.is_array())
        return matrix_from_json(j);
    if (j.contains("adjacency"))
        return matrix_from_json(j.at("adjacency"));
    throw InvalidArgumentError("graph JSON must be a matrix or carry an "
                               "'adjacency' field");
}

Subgroup subgroup_from_json(const PermGroup& parent, const nlohmann::json& j) {
    if (j.contains("generator_indices")) {
        std::vector<Permutation> gens;
        for (std::size_t index : j.at("generator_indices").get<std::vector<std::size_t>>()) {
            if (index >= parent.generators.size())
                throw InvalidArgumentError("generator index " + std::to_string(index) +
                                           " out of range");
            gens.push_back(parent.generators[index]);
        }
        return Subgroup::from_generators(parent, gens);
    }
    if (j.contains("generators"))
        return Subgroup::from_generators(
            parent, j.at("generators").get<std::vector<Permutation>>());
    throw InvalidArgumentError("subgroup JSON must carry 'generators' or "
                               "'generator_indices'");
}

} // namespace isospec
