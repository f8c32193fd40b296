#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "../tools/harness.hpp"

using namespace artifact;

TEST_CASE("presentation checker: free, commuting, non-commuting") {
    Graph g = builtin_graph("path_3");  // a-b, b-c edges

    Presentation free_p{{"x", "y"}, {}};
    std::map<std::string, ArtinWord> img{{"x", word_from_text(g, "a")},
                                         {"y", word_from_text(g, "c")}};
    CHECK(check_presentation_hom(free_p, img, g).passed());

    Presentation z2{{"x", "y"}, {"x y x^-1 y^-1"}};
    std::map<std::string, ArtinWord> good{{"x", word_from_text(g, "a")},
                                          {"y", word_from_text(g, "b")}};
    CHECK(check_presentation_hom(z2, good, g).passed());

    std::map<std::string, ArtinWord> bad{{"x", word_from_text(g, "a")},
                                         {"y", word_from_text(g, "c")}};
    ExperimentReport rep = check_presentation_hom(z2, bad, g);
    CHECK_FALSE(rep.passed());
    REQUIRE(rep.verdicts.size() == 1);
    CHECK(rep.verdicts[0].detail.find("x y x^-1 y^-1") != std::string::npos);

    CHECK_THROWS_AS(check_presentation_hom(z2, {{"x", word_from_text(g, "a")}}, g), WordError);
    Presentation undeclared{{"x"}, {"x q"}};
    CHECK_THROWS_AS(check_presentation_hom(undeclared, {{"x", word_from_text(g, "a")}}, g),
                    WordError);
}

TEST_CASE("least squares line fit") {
    LineFit f = fit_line({1, 2, 3, 4}, {3, 5, 7, 9});
    CHECK(f.slope == doctest::Approx(2));
    CHECK(f.intercept == doctest::Approx(1));
    CHECK(f.r2 == doctest::Approx(1));
    LineFit g = fit_line({1, 2, 3, 4}, {1, 4, 2, 5});
    CHECK(g.r2 < 1);
    CHECK(g.r2 > 0);
}

TEST_CASE("the eleven four-vertex graphs are pairwise non-isomorphic") {
    std::vector<Graph> gs = all_four_vertex_graphs();
    REQUIRE(gs.size() == 11);
    for (size_t i = 0; i < gs.size(); ++i)
        for (size_t j = i + 1; j < gs.size(); ++j)
            CHECK_FALSE(is_isomorphic(gs[i], gs[j]).has_value());
}

TEST_CASE("normal-form audit agrees at small scale") {
    CHECK(raag_oracle_check(builtin_graph("path_3"), 4).passed());
    Graph k4 = all_four_vertex_graphs().back();
    CHECK(raag_oracle_check(k4, 4).passed());
}

TEST_CASE("reports are deterministic per seed") {
    Graph g = builtin_graph("cycle_5");
    ExperimentReport a = cox_experiment(g, 10, 50, 20, 99);
    ExperimentReport b = cox_experiment(g, 10, 50, 20, 99);
    CHECK(a.tsv() == b.tsv());
    CHECK(a.json() == b.json());
    ExperimentReport c = cox_experiment(g, 10, 50, 20, 100);
    CHECK(a.tsv() != c.tsv());
    CHECK(a.passed());
}

TEST_CASE("diagram check report") {
    ExperimentReport rep = diagram_check(builtin_diagram("pentagon_c5"), "pentagon_c5", "cycle_5");
    CHECK(rep.passed());
    ExperimentReport ico = diagram_check(builtin_diagram("icosa"), "icosa", "icosahedron");
    CHECK_FALSE(ico.passed());  // best-known realization misses 6 of 66 relations
    bool index_ok = false;
    for (const auto& row : ico.rows)
        if (row[0] == "commutator_index" && row[1] == "4096") index_ok = true;
    CHECK(index_ok);
}

TEST_CASE("lowerbound experiment is sound on a small run") {
    ExperimentReport rep = lowerbound_experiment(5, 20, 50, 3);
    CHECK(rep.passed());
}
