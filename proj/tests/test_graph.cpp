#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "artifact/graph.hpp"

using namespace artifact;

TEST_CASE("builtin graphs") {
    Graph ico = builtin_graph("icosahedron");
    CHECK(ico.n() == 12);
    CHECK(ico.edge_count() == 30);
    for (int v = 0; v < 12; ++v) CHECK(ico.degree(v) == 5);
    CHECK(builtin_graph("cycle_5").edge_count() == 5);
    CHECK(builtin_graph("path_4").edge_count() == 3);
    CHECK(builtin_graph("complete_5").edge_count() == 10);
    CHECK_THROWS_AS(builtin_graph("no_such"), GraphError);
}

TEST_CASE("planarity with certificates") {
    Graph ico = builtin_graph("icosahedron");
    CHECK(is_planar(ico).planar);
    CHECK(verify_rotation_system(ico, is_planar(ico).rotation));

    Graph k5 = builtin_graph("complete_5");
    PlanarityResult p5 = is_planar(k5);
    CHECK_FALSE(p5.planar);
    CHECK(verify_kuratowski_witness(k5, p5));

    Graph k33(std::vector<std::string>{"a", "b", "c", "d", "e", "f"});
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j) k33.add_edge(i, j);
    PlanarityResult p33 = is_planar(k33);
    CHECK_FALSE(p33.planar);
    CHECK(p33.witness_kind == "K33");
    CHECK(verify_kuratowski_witness(k33, p33));

    // grid: planar
    std::vector<std::string> lab;
    for (int i = 0; i < 16; ++i) lab.push_back("g" + std::to_string(i));
    Graph grid(lab);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            int v = 4 * r + c;
            if (c < 3) grid.add_edge(v, v + 1);
            if (r < 3) grid.add_edge(v, v + 4);
        }
    CHECK(is_planar(grid).planar);

    // Petersen: non-planar, max degree 3 forces a K33 subdivision
    std::vector<std::string> pl;
    for (int i = 0; i < 10; ++i) pl.push_back("p" + std::to_string(i));
    Graph pet(pl);
    for (int i = 0; i < 5; ++i) {
        pet.add_edge(i, (i + 1) % 5);
        pet.add_edge(i, i + 5);
        pet.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    PlanarityResult pp = is_planar(pet);
    CHECK_FALSE(pp.planar);
    CHECK(pp.witness_kind == "K33");
    CHECK(verify_kuratowski_witness(pet, pp));
}

TEST_CASE("icosahedron complement is non-planar with a verified witness") {
    Graph co = complement(builtin_graph("icosahedron"));
    CHECK(co.edge_count() == 36);
    PlanarityResult pc = is_planar(co);
    CHECK_FALSE(pc.planar);
    CHECK(verify_kuratowski_witness(co, pc));
}

TEST_CASE("isomorphism search") {
    Graph ico = builtin_graph("icosahedron");
    std::vector<std::string> lab;
    for (int i = 0; i < 12; ++i) lab.push_back("x" + std::to_string(i));
    Graph h(lab);
    std::vector<int> pi{4, 7, 1, 11, 0, 9, 2, 5, 10, 3, 8, 6};
    for (auto [u, v] : ico.edges()) h.add_edge(pi[u], pi[v]);
    auto iso = is_isomorphic(ico, h);
    REQUIRE(iso.has_value());
    for (int u = 0; u < 12; ++u)
        for (int v = 0; v < 12; ++v)
            CHECK(ico.has_edge(u, v) == h.has_edge((*iso)[u], (*iso)[v]));
    CHECK_FALSE(is_isomorphic(ico, builtin_graph("cycle_12")).has_value());
}

TEST_CASE("json round trip") {
    Graph ico = builtin_graph("icosahedron");
    CHECK(graph_from_json(graph_to_json(ico)) == ico);
}
