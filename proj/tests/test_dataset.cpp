#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "africa3/dataset.hpp"
#include "africa3/errors.hpp"
#include "africa3/graph.hpp"
#include "africa3/rng.hpp"
#include "testutil.hpp"

using namespace africa3;

TEST_CASE("load_countries parses a row") {
    std::istringstream in(
        "id,name,sub_region,lat,lon,population,dc_count\n"
        "nigeria, Nigeria, Western, 9.5941, 8.0894, 200963599, 10\n");
    auto ds = load_countries(in);
    REQUIRE(ds.size() == 1);
    const auto& c = ds.at("nigeria");
    CHECK(c.name == "Nigeria");
    CHECK(c.sub_region == SubRegion::Western);
    CHECK(c.population == 200963599ULL);
    CHECK(c.dc_count == 10);
    CHECK(c.centroid.lat == doctest::Approx(9.5941));
}

TEST_CASE("load_countries empty stream") {
    std::istringstream in("id,name,sub_region,lat,lon,population,dc_count\n");
    CHECK(load_countries(in).size() == 0);
}

TEST_CASE("load_countries error paths") {
    std::istringstream short_row("h\nnigeria,Nigeria,Western,9.0\n");
    CHECK_THROWS_WITH_AS(load_countries(short_row), doctest::Contains("row 2"), ValidationError);

    std::istringstream dup(
        "h\n"
        "togo,Togo,Western,8.5,0.9,6191155,0\n"
        "togo,Togo,Western,8.5,0.9,6191155,0\n");
    CHECK_THROWS_AS(load_countries(dup), ValidationError);

    std::istringstream bad_lat("h\nx,X,Western,95.0,0.9,1,0\n");
    CHECK_THROWS_AS(load_countries(bad_lat), ValidationError);

    std::istringstream bad_region("h\nx,X,Northwestern,9.0,0.9,1,0\n");
    CHECK_THROWS_AS(load_countries(bad_region), ValidationError);
}

TEST_CASE("reference dataset loads 55 countries, dc sum 74") {
    auto ds = load_countries_file("data/countries.csv");
    CHECK(ds.size() == 55);
    int dc = 0;
    for (const auto& c : ds.countries()) dc += c.dc_count;
    // hand sum of the bundled table's dc column
    CHECK(dc == 74);
    std::uint64_t lo = UINT64_MAX, hi = 0;
    std::string lo_id, hi_id;
    for (const auto& c : ds.countries()) {
        if (c.population < lo) { lo = c.population; lo_id = c.id; }
        if (c.population > hi) { hi = c.population; hi_id = c.id; }
    }
    CHECK(lo_id == "seychelles");
    CHECK(hi_id == "nigeria");
}

TEST_CASE("export round-trips the reference file byte for byte") {
    std::ifstream f("data/countries.csv");
    REQUIRE(f.good());
    std::stringstream orig;
    orig << f.rdbuf();
    auto ds = load_countries_file("data/countries.csv");
    std::ostringstream out;
    export_countries(ds, out);
    CHECK(out.str() == orig.str());
}

TEST_CASE("load_cables basics") {
    std::istringstream one("name,countries\nTEAMS,kenya\n");
    auto recs = load_cables(one);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].name == "TEAMS");
    CHECK(recs[0].countries_touched == std::vector<std::string>{"kenya"});

    std::istringstream vacuous("name,countries\nNordCable,\n");
    auto r2 = load_cables(vacuous);
    REQUIRE(r2.size() == 1);
    CHECK(r2[0].countries_touched.empty());

    std::istringstream bad("name,countries\nno-comma-here\n");
    CHECK_THROWS_WITH_AS(load_cables(bad), doctest::Contains("row 2"), ValidationError);
}

TEST_CASE("reference cables: 15 records, published landing counts") {
    auto cables = load_cables_file("data/cables.csv");
    CHECK(cables.size() == 15);
    auto landings = landings_per_country(cables);
    CHECK(landings["egypt"] == 15);
    CHECK(landings["djibouti"] == 9);
    CHECK(landings["nigeria"] == 8);
    CHECK(landings["south_africa"] == 8);
    CHECK(landings["cameroon"] == 6);
    CHECK(landings["kenya"] == 6);
    CHECK(landings["algeria"] == 5);
    CHECK(landings["libya"] == 5);
    CHECK(landings["ghana"] == 3);

    CHECK(landings_per_country({}).empty());

    auto ds = load_countries_file("data/countries.csv");
    CHECK(unresolved_cable_ids(cables, ds).empty());
}

TEST_CASE("landing counts are invariant to record order") {
    auto cables = load_cables_file("data/cables.csv");
    auto base = landings_per_country(cables);
    Rng rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        for (std::size_t i = cables.size(); i > 1; --i)
            std::swap(cables[i - 1], cables[rng.below(i)]);
        CHECK(landings_per_country(cables) == base);
    }
}

TEST_CASE("complete adjacency has n*(n-1)/2 edges") {
    auto ds = load_countries_file("data/countries.csv");
    auto g = build_adjacency(ds, AdjacencyMode::Complete, {}, {});
    CHECK(g.edges().size() == 55 * 54 / 2);
}

TEST_CASE("borders mode contains the benin-nigeria land border") {
    auto ds = load_countries_file("data/countries.csv");
    auto g = testutil::reference_graph(ds);
    CHECK(g.has_edge("benin", "nigeria"));
    CHECK(g.has_edge("nigeria", "benin"));
    CHECK_FALSE(g.has_edge("morocco", "nigeria"));
}

TEST_CASE("reference borders graph is connected (maritime links included)") {
    auto ds = load_countries_file("data/countries.csv");
    auto g = testutil::reference_graph(ds);
    // independent breadth-first search over the edge set
    std::map<std::string, std::vector<std::string>> adj;
    for (const auto& [a, b] : g.edges()) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::set<std::string> seen{"algeria"};
    std::vector<std::string> queue{"algeria"};
    while (!queue.empty()) {
        auto u = queue.back();
        queue.pop_back();
        for (const auto& v : adj[u])
            if (seen.insert(v).second) queue.push_back(v);
    }
    CHECK(seen.size() == ds.size());
    CHECK(g.connected());

    // without maritime links the island nations are unreachable
    auto land_only = build_adjacency(ds, AdjacencyMode::Borders,
                                     load_edge_list_file("data/borders.csv"), {});
    CHECK_FALSE(land_only.connected());
}

TEST_CASE("build_adjacency rejects unresolved endpoints") {
    auto ds = load_countries_file("data/countries.csv");
    EdgeList bad{{"atlantis", "ghana"}};
    CHECK_THROWS_AS(build_adjacency(ds, AdjacencyMode::Borders, bad, {}), ValidationError);
}
