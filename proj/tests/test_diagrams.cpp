#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "chevk1/weight_diagram.hpp"

using namespace chevk1;

namespace {

DiagramPtr diag(const char *label, int fundamental) {
    return WeightDiagram::build(RootSystem::build(label), fundamental);
}

Root scaled(const Root &a, int k) {
    Root r = a;
    for (int &c : r)
        c *= k;
    return r;
}

} // namespace

TEST_CASE("weight counts of the supported minuscule pairs") {
    CHECK(diag("E6", 1)->size() == 27);
    CHECK(diag("E7", 7)->size() == 56);
    CHECK(diag("D5", 1)->size() == 10);
    CHECK(diag("D6", 1)->size() == 12);
    CHECK(diag("A1", 1)->size() == 2);
    CHECK(diag("A5", 1)->size() == 6);
    CHECK_THROWS_AS(diag("E6", 2), not_minuscule);
    CHECK_THROWS_AS(diag("E7", 1), not_minuscule);
    CHECK_THROWS_AS(diag("D5", 3), not_minuscule);
}

TEST_CASE("node 0 is the highest weight with a single outgoing edge") {
    auto d = diag("E6", 1);
    CHECK(d->weight(0) == Weight(6, 0));
    std::size_t out = 0;
    for (const DiagramEdge &e : d->edges())
        if (e.parent == 0) {
            ++out;
            CHECK(e.label == 1);
        }
    CHECK(out == 1);

    auto a1 = diag("A1", 1);
    CHECK(a1->edges().size() == 1);
    CHECK(a1->edges()[0].label == 1);
}

TEST_CASE("diagram is a connected graded Hasse diagram") {
    for (auto d : {diag("E6", 1), diag("E7", 7), diag("D5", 1)}) {
        std::vector<bool> has_in(d->size(), false);
        std::vector<bool> reached(d->size(), false);
        reached[0] = true;
        for (const DiagramEdge &e : d->edges()) {
            has_in[e.child] = true;
            int dp = std::accumulate(d->weight(e.parent).begin(),
                                     d->weight(e.parent).end(), 0);
            int dc = std::accumulate(d->weight(e.child).begin(),
                                     d->weight(e.child).end(), 0);
            CHECK(dc == dp + 1);
        }
        for (std::size_t n = 1; n < d->size(); ++n)
            CHECK(has_in[n]);
        // edges go parent->child in node order thanks to depth grading
        for (const DiagramEdge &e : d->edges())
            if (reached[e.parent])
                reached[e.child] = true;
        CHECK(std::all_of(reached.begin(), reached.end(),
                          [](bool b) { return b; }));
    }
}

TEST_CASE("root strings through weights have length at most one") {
    for (auto d : {diag("E6", 1), diag("E7", 7)}) {
        auto sys = d->system();
        for (std::size_t n = 0; n < d->size(); ++n)
            for (const Root &a : sys->roots())
                if (d->shift(n, a))
                    CHECK_FALSE(d->shift(n, scaled(a, 2)));
    }
}

TEST_CASE("parallelogram rule holds exhaustively") {
    for (auto d : {diag("E6", 1), diag("E7", 7)}) {
        auto sys = d->system();
        int l = sys->rank();
        for (std::size_t n = 0; n < d->size(); ++n)
            for (int i = 1; i <= l; ++i)
                for (int j = i + 1; j <= l; ++j) {
                    auto up_i = d->shift(n, sys->simple(i));
                    auto up_j = d->shift(n, sys->simple(j));
                    if (!up_i || !up_j)
                        continue;
                    auto corner = d->shift(*up_i, sys->simple(j));
                    CHECK(corner.has_value());
                    CHECK(corner == d->shift(*up_j, sys->simple(i)));
                }
    }
}

TEST_CASE("pairing takes minuscule values and matches shifts") {
    for (auto d : {diag("E6", 1), diag("D5", 1)}) {
        auto sys = d->system();
        for (std::size_t n = 0; n < d->size(); ++n)
            for (const Root &a : sys->roots()) {
                int p = d->pairing(n, a);
                CHECK(p >= -1);
                CHECK(p <= 1);
                // lambda + a is a weight iff <lambda, a^vee> = -1
                CHECK(d->shift(n, a).has_value() == (p == -1));
            }
    }
}

TEST_CASE("level decompositions") {
    auto e6 = diag("E6", 1);
    auto levels = level_decomposition(*e6, 1);
    REQUIRE(levels.size() == 3);
    CHECK(levels[0].size() == 1);
    CHECK(levels[1].size() == 16);
    CHECK(levels[2].size() == 10);
    CHECK(levels[0][0] == 0);

    auto e7 = diag("E7", 7);
    auto l7 = level_decomposition(*e7, 7);
    REQUIRE(l7.size() == 4);
    CHECK(l7[0].size() == 1);
    CHECK(l7[1].size() == 27);
    CHECK(l7[2].size() == 27);
    CHECK(l7[3].size() == 1);

    auto a1 = diag("A1", 1);
    auto la = level_decomposition(*a1, 1);
    REQUIRE(la.size() == 2);
    CHECK(la[0].size() == 1);
    CHECK(la[1].size() == 1);
}

TEST_CASE("suborbits of subsystems") {
    auto d = diag("E6", 1);
    auto sys = d->system();

    SubsystemEmbedding a5 = subsystem(sys, {1, 3, 4, 5, 6}, {}, "A5");
    CHECK(suborbit(*d, a5, 0).size() == 6);

    SubsystemEmbedding d5 = subsystem(sys, {2, 3, 4, 5, 6}, {}, "D5");
    auto levels = level_decomposition(*d, 1);
    std::size_t top_l2 = levels[2].front();
    auto orbit = suborbit(*d, d5, top_l2);
    CHECK(orbit.size() == 10);
    std::set<std::size_t> l2(levels[2].begin(), levels[2].end());
    for (std::size_t n : orbit)
        CHECK(l2.count(n) == 1);

    // mu is fixed by D5 = <alpha_2..6>
    CHECK(suborbit(*d, d5, 0) == std::vector<std::size_t>{0});
}

TEST_CASE("E7 edge labels are balanced under diagram symmetry") {
    auto d = diag("E7", 7);
    std::map<int, int> counts;
    for (const DiagramEdge &e : d->edges())
        ++counts[e.label];
    int total = 0;
    for (auto &[label, c] : counts)
        total += c;
    CHECK(total == static_cast<int>(d->edges().size()));
    CHECK(counts.size() == 7);
}

TEST_CASE("dot output names every node") {
    auto d = diag("D5", 1);
    std::string dot = to_dot(*d);
    CHECK(dot.find("digraph") != std::string::npos);
    for (std::size_t n = 0; n < d->size(); ++n)
        CHECK(dot.find("n" + std::to_string(n)) != std::string::npos);
}
