#include <doctest.h>

#include "isospec/errors.hpp"
#include "isospec/fixtures.hpp"
#include "isospec/json_io.hpp"

#include <nlohmann/json.hpp>

using namespace isospec;
using nlohmann::json;

TEST_CASE("Place round trip") {
    for (const Place& v : {Place::finite_prime(7), Place::real_place(),
                           Place::complex_place()}) {
        json j = v;
        Place back = j.get<Place>();
        CHECK(back == v);
    }
    json j = Place::finite_prime(5);
    CHECK(j.at("kind") == "finite");
    CHECK(j.at("label") == "p:5");
}

TEST_CASE("BrauerClass serialization uses reduced fraction strings") {
    BrauerClass c = make_class({{Place::finite_prime(2), LocalInvariant(1, 3)},
                                {Place::finite_prime(3), LocalInvariant(2, 3)}});
    json j = c;
    REQUIRE(j.contains("invariants"));
    CHECK(j.at("invariants").at("p:2") == "1/3");
    CHECK(j.at("invariants").at("p:3") == "2/3");
    CHECK(j.at("invariants").size() == 2);

    BrauerClass back = j.get<BrauerClass>();
    CHECK(back == c);
}

TEST_CASE("BrauerClass deserialization re-validates") {
    json bad = {{"invariants", {{"p:2", "1/3"}}}};
    CHECK_THROWS_AS(bad.get<BrauerClass>(), SumNonZeroError);
    json arch = {{"invariants", {{"real", "1/3"}, {"p:2", "2/3"}}}};
    CHECK_THROWS_AS(arch.get<BrauerClass>(), ArchimedeanViolationError);
}

TEST_CASE("trivial class round trips") {
    BrauerClass c;
    json j = c;
    CHECK(j.at("invariants").empty());
    CHECK(j.get<BrauerClass>() == c);
}

TEST_CASE("Permutation round trip as one-line image array") {
    Permutation p({2, 0, 1});
    json j = p;
    CHECK(j == json::array({2, 0, 1}));
    CHECK(j.get<Permutation>() == p);
    json bad = json::array({0, 0, 1});
    CHECK_THROWS_AS(bad.get<Permutation>(), InvalidArgumentError);
}

TEST_CASE("PlaceUniverse round trip") {
    for (const PlaceUniverse& u : {PlaceUniverse::rationals({2, 3, 5}),
                                   PlaceUniverse::gaussian_rationals({2, 5, 13})}) {
        json j = u;
        PlaceUniverse back = j.get<PlaceUniverse>();
        CHECK(back.places == u.places);
        CHECK(back.nu0_index == u.nu0_index);
        CHECK(back.automorphism_generators == u.automorphism_generators);
        CHECK(back.automorphisms == u.automorphisms);  // re-closed on read
    }
}

TEST_CASE("CommensurabilityVerdict serialization") {
    PlaceUniverse u = PlaceUniverse::rationals({2, 3});
    BrauerClass c = make_class({{u.places[0], LocalInvariant(1, 3)},
                                {u.places[1], LocalInvariant(2, 3)}});
    CommensurabilityVerdict verdict = decide_ring_relation(u, c, c);
    json j = verdict;
    CHECK(j.at("relation") == "isomorphic");
    CHECK(j.at("fixes_nu0") == true);
    REQUIRE(j.at("witness").is_array());
    CommensurabilityVerdict back = j.get<CommensurabilityVerdict>();
    CHECK(back.relation == verdict.relation);
    CHECK(back.witness == verdict.witness);
    CHECK(back.fixes_nu0 == verdict.fixes_nu0);

    CommensurabilityVerdict neither;
    json jn = neither;
    CHECK(jn.at("relation") == "neither");
    CHECK(jn.at("witness").is_null());
    CHECK(jn.get<CommensurabilityVerdict>().relation == RingRelation::neither);
}

TEST_CASE("FamilyCertificate round trip") {
    PlaceUniverse u = PlaceUniverse::rationals({2, 3, 5, 7, 11, 13});
    std::vector<Place> T;
    for (std::size_t i = 0; i + 1 < u.places.size(); ++i) T.push_back(u.places[i]);
    FamilyCertificate cert = enumerate_family(u, 3, 4, T);
    json j = cert;
    FamilyCertificate back = j.get<FamilyCertificate>();
    CHECK(back.d == cert.d);
    CHECK(back.T == cert.T);
    CHECK(back.vectors == cert.vectors);
    CHECK(back.classes == cert.classes);
    REQUIRE(back.pairwise.size() == cert.pairwise.size());
    for (std::size_t i = 0; i < back.pairwise.size(); ++i)
        for (std::size_t k = 0; k < back.pairwise[i].size(); ++k) {
            CHECK(back.pairwise[i][k].relation == cert.pairwise[i][k].relation);
            CHECK(back.pairwise[i][k].witness == cert.pairwise[i][k].witness);
        }
    // the round-tripped certificate still verifies
    CHECK(verify_certificate(u, back));

    // byte stability: dumping twice gives identical bytes
    CHECK(json(cert).dump(2) == j.dump(2));
    CHECK(json(back).dump(2) == j.dump(2));
}

TEST_CASE("CertificateCheck serialization") {
    CertificateCheck ok;
    json j = ok;
    CHECK(j.at("ok") == true);
    CHECK(j.at("failures").empty());

    CertificateCheck bad;
    bad.ok = false;
    bad.failures = {"first", "second"};
    json jb = bad;
    CHECK(jb.at("ok") == false);
    CHECK(jb.at("failures").size() == 2);
}

TEST_CASE("HilbertTable serialization") {
    HilbertTable table = hilbert_table(-1, -1);
    json j = table;
    CHECK(j.at("a") == "-1");
    CHECK(j.at("b") == "-1");
    REQUIRE(j.at("signs").is_array());
    REQUIRE(j.at("signs").size() == table.signs.size());
    CHECK(j.at("signs").front().at("place") == "p:2");
    CHECK(j.at("signs").front().at("sign") == -1);
    CHECK(j.at("signs").back().at("place") == "real");
}

TEST_CASE("PermGroup round trip recloses the group") {
    PermGroup g = fixtures::fano_group();
    json j = g;
    CHECK(j.at("degree") == 7);
    CHECK(j.at("order") == 168);
    REQUIRE(j.at("generators").is_array());
    PermGroup back = j.get<PermGroup>();
    CHECK(back.degree == 7);
    CHECK(back.order() == 168);
    CHECK(back.elements == g.elements);
}

TEST_CASE("GassmannReport serialization") {
    PermGroup g = fixtures::fano_group();
    Subgroup h1 = Subgroup::from_generators(g, fixtures::fano_point_stabilizer_generators());
    Subgroup h2 = Subgroup::from_generators(g, fixtures::fano_plane_stabilizer_generators());
    GassmannReport report = is_gassmann(g, h1, h2);
    json j = report;
    CHECK(j.at("gassmann") == true);
    REQUIRE(j.at("classes").is_array());
    CHECK(j.at("classes").size() == 6);
    std::size_t total = 0;
    for (const json& row : j.at("classes")) {
        CHECK(row.at("h1_count") == row.at("h2_count"));
        total += row.at("size").get<std::size_t>();
    }
    CHECK(total == 168);
    CHECK(j.at("classes").front().at("cycles") == "()");
}

TEST_CASE("SchreierGraph serialization and adjacency readback") {
    PermGroup g = fixtures::fano_group();
    Subgroup h = Subgroup::from_generators(g, fixtures::fano_point_stabilizer_generators());
    SchreierGraph graph = schreier_graph(g, h, fixtures::fano_schreier_multiset());
    json j = graph;
    CHECK(j.at("vertex_count") == 7);
    REQUIRE(j.at("adjacency").is_array());
    CHECK(matrix_from_json(j.at("adjacency")) == graph.adjacency);
    CHECK(adjacency_from_json(j) == graph.adjacency);

    // a bare adjacency object reads the same way
    json bare = {{"adjacency", j.at("adjacency")}};
    CHECK(adjacency_from_json(bare) == graph.adjacency);
}

TEST_CASE("IntPolynomial round trip with big coefficients") {
    // coefficients exceeding 2^63 survive the string encoding
    Integer big = Integer(1) << 80;
    IntPolynomial p({big, -big, 1});
    json j = p;
    REQUIRE(j.at("coefficients").is_array());
    CHECK(j.at("coefficients")[0].get<std::string>() == big.get_str());
    CHECK(j.get<IntPolynomial>() == p);
    CHECK(j.contains("pretty"));
}

TEST_CASE("IsoVerdict serialization") {
    IntMatrix a = matrix_from_json(json::parse("[[0,1],[1,0]]"));
    IsoVerdict verdict = compare_graphs(a, a);
    json j = verdict;
    CHECK(j.at("isospectral") == true);
    CHECK(j.at("isomorphic") == "yes");
    REQUIRE(j.at("witness").is_array());
}

TEST_CASE("subgroup_from_json accepts indices and explicit generators") {
    PermGroup g = fixtures::fano_group();
    json by_index = {{"generator_indices", {0}}};
    Subgroup h1 = subgroup_from_json(g, by_index);
    CHECK(h1.order() == 7);  // the order-7 generator alone

    json explicit_gens = json::object();
    explicit_gens["generators"] = json::array();
    for (const Permutation& p : fixtures::fano_point_stabilizer_generators())
        explicit_gens["generators"].push_back(json(p));
    Subgroup h2 = subgroup_from_json(g, explicit_gens);
    CHECK(h2.order() == 24);

    json bad_index = {{"generator_indices", {9}}};
    CHECK_THROWS_AS(subgroup_from_json(g, bad_index), InvalidArgumentError);
}

TEST_CASE("matrix readback rejects ragged input") {
    CHECK_THROWS_AS(matrix_from_json(json::parse("[[0,1],[1]]")), InvalidArgumentError);
}
