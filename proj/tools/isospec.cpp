#include <CLI11.hpp>

#include "isospec/errors.hpp"
#include "isospec/fixtures.hpp"
#include "isospec/json_io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace isospec;

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InvalidArgumentError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& err) {
        throw InvalidArgumentError("'" + path + "' is not valid JSON: " + err.what());
    }
}

void emit(const json& payload, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << payload.dump(2) << "\n";
        return;
    }
    std::ofstream out(output_path);
    if (!out)
        throw InvalidArgumentError("cannot write '" + output_path + "'");
    out << payload.dump(2) << "\n";
}

std::size_t node_cap_from_env() {
    const char* raw = std::getenv("ISOSPEC_NODE_CAP");
    if (raw == nullptr)
        return kDefaultNodeCap;
    try {
        return static_cast<std::size_t>(std::stoull(raw));
    } catch (const std::exception&) {
        throw InvalidArgumentError("ISOSPEC_NODE_CAP must be a nonnegative integer");
    }
}

// "p:7", "p7", or "7" -> 7 (the place-label prime, branch tags allowed:
// "p:13+" -> 13).
Integer prime_of_token(std::string token) {
    if (token.rfind("p:", 0) == 0)
        token = token.substr(2);
    else if (!token.empty() && token[0] == 'p')
        token = token.substr(1);
    if (!token.empty() && (token.back() == '+' || token.back() == '-'))
        token.pop_back();
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
        throw InvalidArgumentError("cannot read a prime from place token '" + token +
                                   "'");
    return Integer(token);
}

std::vector<Integer> first_primes(std::size_t count) {
    std::vector<Integer> primes;
    Integer p = 1;
    while (primes.size() < count) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        primes.push_back(p);
    }
    return primes;
}

// Primes mentioned by a class's finite support (labels "p:N" or "p:N+/-").
void collect_primes(const BrauerClass& c, std::vector<Integer>& primes) {
    for (const BrauerClass::Entry& e : c.entries())
        if (e.first.kind == PlaceKind::finite)
            primes.push_back(prime_of_token(e.first.label));
}

PlaceUniverse build_universe(const std::string& spec, std::vector<Integer> primes) {
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    if (spec == "Q")
        return PlaceUniverse::rationals(primes);
    if (spec == "Qi")
        return PlaceUniverse::gaussian_rationals(primes);
    return read_json_file(spec).get<PlaceUniverse>();
}

// Maps a --places token to a place of the universe: exact label match
// first, then the label of the (first listed) place above the named prime.
const Place& resolve_place(const PlaceUniverse& u, const std::string& token) {
    if (std::optional<std::size_t> index = u.index_of(token))
        return u.places[*index];
    const std::string base = "p:" + prime_of_token(token).get_str();
    for (const std::string& label : {base, base + "+"})
        if (std::optional<std::size_t> index = u.index_of(label))
            return u.places[*index];
    throw InvalidArgumentError("no place matching '" + token + "' in the universe");
}

// First t finite non-nu0 places, one per orbit, in place-list order.
std::vector<Place> default_family_places(const PlaceUniverse& u, std::size_t t) {
    std::vector<Place> places;
    std::set<std::string> orbits;
    for (const Place& place : u.places) {
        if (places.size() == t)
            break;
        if (place.kind != PlaceKind::finite || place.label == u.nu0().label)
            continue;
        if (orbits.insert(place.orbit_id).second)
            places.push_back(place);
    }
    if (places.size() < t)
        throw InvalidArgumentError("universe offers only " +
                                   std::to_string(places.size()) +
                                   " usable places, need " + std::to_string(t));
    return places;
}

int run_family(const std::string& universe_spec, long d, long m,
               const std::vector<std::string>& place_tokens,
               const std::string& output_path) {
    const int t = choose_t(Integer(m), Integer(d));
    PlaceUniverse u;
    std::vector<Place> T;
    if (place_tokens.empty()) {
        std::vector<Integer> primes = first_primes(static_cast<std::size_t>(t));
        u = build_universe(universe_spec, primes);
        T = default_family_places(u, static_cast<std::size_t>(t));
    } else {
        std::vector<Integer> primes;
        for (const std::string& token : place_tokens)
            primes.push_back(prime_of_token(token));
        u = build_universe(universe_spec, primes);
        for (const std::string& token : place_tokens)
            T.push_back(resolve_place(u, token));
    }
    FamilyCertificate cert = enumerate_family(u, Integer(d), Integer(m), T);
    emit(json(cert), output_path);
    return 0;
}

int run_classify(const std::string& universe_spec, const std::string& c1_path,
                 const std::string& c2_path, const std::string& output_path) {
    BrauerClass c1 = read_json_file(c1_path).get<BrauerClass>();
    BrauerClass c2 = read_json_file(c2_path).get<BrauerClass>();
    std::vector<Integer> primes;
    collect_primes(c1, primes);
    collect_primes(c2, primes);
    PlaceUniverse u = build_universe(universe_spec, std::move(primes));
    emit(json(decide_ring_relation(u, c1, c2)), output_path);
    return 0;
}

int run_hilbert(const std::string& a_text, const std::string& b_text,
                const std::string& output_path) {
    const Rational a = parse_rational(a_text);
    const Rational b = parse_rational(b_text);
    HilbertTable table = hilbert_table(a, b);
    json payload(table);
    payload["class"] = quaternion_class(a, b);
    emit(payload, output_path);
    return 0;
}

int run_gassmann(const std::string& group_path, const std::string& h1_path,
                 const std::string& h2_path, const std::string& output_path) {
    PermGroup g = read_json_file(group_path).get<PermGroup>();
    Subgroup h1 = subgroup_from_json(g, read_json_file(h1_path));
    Subgroup h2 = subgroup_from_json(g, read_json_file(h2_path));
    GassmannReport report = is_gassmann(g, h1, h2);
    json payload(report);
    payload["conjugate"] = are_conjugate(g, h1, h2);
    payload["group_order"] = g.order();
    payload["h1_order"] = h1.order();
    payload["h2_order"] = h2.order();
    emit(payload, output_path);
    return 0;
}

std::vector<Permutation> gens_from_json(const json& j) {
    if (j.is_array())
        return j.get<std::vector<Permutation>>();
    if (j.contains("gens"))
        return j.at("gens").get<std::vector<Permutation>>();
    throw InvalidArgumentError("generator multiset JSON must be an array or "
                               "carry a 'gens' field");
}

int run_schreier(const std::string& group_path, const std::string& h_path,
                 const std::string& gens_path, const std::string& output_path) {
    PermGroup g = read_json_file(group_path).get<PermGroup>();
    Subgroup h = subgroup_from_json(g, read_json_file(h_path));
    std::vector<Permutation> s = gens_from_json(read_json_file(gens_path));
    emit(json(schreier_graph(g, h, s)), output_path);
    return 0;
}

int run_spectrum(const std::string& graph_path, const std::string& output_path) {
    IntMatrix a = adjacency_from_json(read_json_file(graph_path));
    json payload{{"char_poly", char_poly(a)},
                 {"eigenvalues_display", eigenvalues_display(a)}};
    emit(payload, output_path);
    return 0;
}

int run_compare(const std::string& g1_path, const std::string& g2_path,
                const std::string& output_path) {
    IntMatrix a = adjacency_from_json(read_json_file(g1_path));
    IntMatrix b = adjacency_from_json(read_json_file(g2_path));
    emit(json(compare_graphs(a, b, node_cap_from_env())), output_path);
    return 0;
}

int run_demo(long m, bool corrupt, const std::string& output_path) {
    json payload;
    bool pass = true;

    PermGroup g = fixtures::fano_group();
    Subgroup h1 = Subgroup::from_generators(g, fixtures::fano_point_stabilizer_generators());
    std::vector<Permutation> h2_gens = fixtures::fano_plane_stabilizer_generators();
    if (corrupt) {
        // swap one stabilizer generator for an order-7 element: the
        // "plane stabilizer" silently becomes the whole group
        h2_gens[1] = fixtures::fano_group_generators()[0];
    }
    Subgroup h2 = Subgroup::from_generators(g, h2_gens);

    GassmannReport report = is_gassmann(g, h1, h2);
    payload["gassmann"] = report;
    payload["conjugate"] = are_conjugate(g, h1, h2);
    pass = pass && report.gassmann && !payload["conjugate"].get<bool>();

    std::vector<Permutation> s = fixtures::fano_schreier_multiset();
    SchreierGraph x1 = schreier_graph(g, h1, s);
    SchreierGraph x2 = schreier_graph(g, h2, s);
    payload["schreier"] = json{{"x1", x1}, {"x2", x2}};
    payload["char_poly_x1"] = char_poly(x1.adjacency);
    payload["char_poly_x2"] = char_poly(x2.adjacency);
    const bool spectra_equal = isospectral(x1, x2);
    payload["isospectral"] = spectra_equal;
    pass = pass && spectra_equal;

    IsoVerdict verdict = compare_graphs(x1, x2, node_cap_from_env());
    payload["isomorphism"] = verdict;

    const Integer d = 3;
    const int t = choose_t(Integer(m), d);
    PlaceUniverse u = PlaceUniverse::rationals(first_primes(static_cast<std::size_t>(t)));
    FamilyCertificate cert =
        enumerate_family(u, d, Integer(m), default_family_places(u, static_cast<std::size_t>(t)));
    CertificateCheck check = verify_certificate(u, cert);
    payload["family"] = cert;
    payload["family_check"] = check;
    pass = pass && check.ok;

    payload["pass"] = pass;
    emit(payload, output_path);
    return pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Brauer-class arithmetic, commensurability certificates, "
                 "and Gassmann/Schreier isospectrality checks"};
    app.require_subcommand(1);

    std::string universe = "Q";
    std::string output_path;
    long d = 3, m = 4;  // m = 4 is the demo default; family requires --m
    std::vector<std::string> place_tokens;
    std::string c1_path, c2_path;
    std::string a_text, b_text;
    std::string group_path, h1_path, h2_path, h_path, gens_path;
    std::string graph_path, g1_path, g2_path;
    bool corrupt = false;

    CLI::App* family = app.add_subcommand("family",
        "enumerate a certified family of pairwise non-commensurable classes");
    family->add_option("--d", d, "degree of the division algebras (>= 3)")->required();
    family->add_option("--m", m, "number of classes")->required();
    family->add_option("--places", place_tokens,
                       "comma-separated ramification places (default: first primes)")
        ->delimiter(',');
    family->add_option("--universe", universe, "Q, Qi, or a universe JSON file");
    family->add_option("-o,--output", output_path, "write JSON here instead of stdout");

    CLI::App* classify = app.add_subcommand("classify",
        "decide ring isomorphism / anti-isomorphism of two classes");
    classify->add_option("--c1", c1_path, "first class JSON")->required();
    classify->add_option("--c2", c2_path, "second class JSON")->required();
    classify->add_option("--universe", universe, "Q, Qi, or a universe JSON file");
    classify->add_option("-o,--output", output_path, "write JSON here instead of stdout");

    CLI::App* hilbert = app.add_subcommand("hilbert",
        "Hilbert symbol table and Brauer class of a quaternion symbol (a, b)");
    hilbert->add_option("--a", a_text, "nonzero rational")->required();
    hilbert->add_option("--b", b_text, "nonzero rational")->required();
    hilbert->add_option("-o,--output", output_path, "write JSON here instead of stdout");

    CLI::App* gassmann = app.add_subcommand("gassmann",
        "per-conjugacy-class intersection counts for two subgroups");
    gassmann->add_option("--group", group_path, "group JSON (degree + generators)")->required();
    gassmann->add_option("--h1", h1_path, "first subgroup JSON")->required();
    gassmann->add_option("--h2", h2_path, "second subgroup JSON")->required();
    gassmann->add_option("-o,--output", output_path, "write JSON here instead of stdout");

    CLI::App* schreier = app.add_subcommand("schreier",
        "Schreier coset graph of a subgroup under a generator multiset");
    // the subgroup flag is --h, so help must not claim the short -h
    schreier->set_help_flag("--help", "print this help message and exit");
    schreier->add_option("--group", group_path, "group JSON")->required();
    schreier->add_option("--h", h_path, "subgroup JSON")->required();
    schreier->add_option("--gens", gens_path, "generator multiset JSON")->required();
    schreier->add_option("-o,--output", output_path, "write JSON here instead of stdout");

    CLI::App* spectrum = app.add_subcommand("spectrum",
        "exact characteristic polynomial of a graph adjacency matrix");
    spectrum->add_option("--graph", graph_path, "graph JSON")->required();
    spectrum->add_option("-o,--output", output_path, "write JSON here instead of stdout");

    CLI::App* compare = app.add_subcommand("compare",
        "isospectrality and isomorphism verdict for two graphs");
    compare->add_option("--g1", g1_path, "first graph JSON")->required();
    compare->add_option("--g2", g2_path, "second graph JSON")->required();
    compare->add_option("-o,--output", output_path, "write JSON here instead of stdout");

    CLI::App* demo = app.add_subcommand("demo",
        "end-to-end run over the bundled order-168 fixtures plus a family");
    demo->add_option("--m", m, "family size for the second half (default 4)");
    demo->add_flag("--corrupt", corrupt, "alter one bundled generator (negative control)");
    demo->add_option("-o,--output", output_path, "write JSON here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success))
            return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (family->parsed())
            return run_family(universe, d, m, place_tokens, output_path);
        if (classify->parsed())
            return run_classify(universe, c1_path, c2_path, output_path);
        if (hilbert->parsed())
            return run_hilbert(a_text, b_text, output_path);
        if (gassmann->parsed())
            return run_gassmann(group_path, h1_path, h2_path, output_path);
        if (schreier->parsed())
            return run_schreier(group_path, h_path, gens_path, output_path);
        if (spectrum->parsed())
            return run_spectrum(graph_path, output_path);
        if (compare->parsed())
            return run_compare(g1_path, g2_path, output_path);
        if (demo->parsed())
            return run_demo(m, corrupt, output_path);
        return 2;
    } catch (const DomainError& err) {
        std::cout << json{{"error", err.name()}, {"message", err.what()}}.dump(2)
                  << "\n";
        return 1;
    } catch (const std::exception& err) {
        std::cout << json{{"error", "Internal"}, {"message", err.what()}}.dump(2)
                  << "\n";
        return 1;
    }
}
