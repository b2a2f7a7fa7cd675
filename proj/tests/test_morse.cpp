#include <catch_amalgamated.hpp>

#include <algorithm>

#include "indcx/complex.hpp"
#include "indcx/grid.hpp"
#include "indcx/homology.hpp"
#include "indcx/morse.hpp"
#include "support.hpp"

using namespace indcx;
using testing_support::fib;

namespace {

// Homotopy types as (dimension of the spheres, number of them).
std::pair<int, long long> expected_spheres(TreeFamily f, int m) {
    switch (f) {
        case TreeFamily::SquareCyl2: return {(m + 1) / 2 - 1, 1};
        case TreeFamily::SquareCyl3:
            if (m % 3 == 0) return {2 * m / 3 - 1, 1};
            if (m % 3 == 1) return {2 * (m - 1) / 3, 2};
            return {2 * (m - 2) / 3 + 1, 1};
        case TreeFamily::SquareCyl4: return {m - 1, m % 2 ? m : m + 1};
        case TreeFamily::SquareCyl5: return {m % 2 ? m : m - 1, 1};
        case TreeFamily::HexCyl2: return {m, fib(m + 2)};
    }
    return {0, 0};
}

bool matching_is_partial_pairing(const FaceMatching& fm) {
    std::vector<Face> seen;
    for (auto [u, l] : fm.pairs) {
        if ((u & l) != l || face_size(u) != face_size(l) + 1) return false;
        seen.push_back(u);
        seen.push_back(l);
    }
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

}  // namespace

TEST_CASE("generated trees are valid and their matchings acyclic", "[morse]") {
    for (TreeFamily f : {TreeFamily::SquareCyl2, TreeFamily::SquareCyl3, TreeFamily::SquareCyl4,
                         TreeFamily::SquareCyl5, TreeFamily::HexCyl2}) {
        int top = f == TreeFamily::HexCyl2 ? 4 : (f == TreeFamily::SquareCyl5 ? 3 : 5);
        for (int m = 1; m <= top; ++m) {
            INFO(tree_family_name(f) << " m=" << m);
            auto gt = tree_generator(f, m);
            auto vc = validate_tree(gt.graph, gt.tree);
            CHECK(vc.ok);
            auto ev = evaluate_tree(gt.graph, gt.tree);
            CHECK(matching_is_partial_pairing(ev.matching));
            auto predicted = gt.predicted_critical;
            std::sort(predicted.begin(), predicted.end());
            CHECK(ev.critical == predicted);

            auto c = independence_complex(gt.graph);
            CHECK(ev.face_count == c.face_count());
            auto a = check_acyclic(c, ev.matching);
            auto b = check_acyclic_global(c, ev.matching);
            CHECK(a.ok);
            CHECK(a.ok == b.ok);
            CHECK(unmatched_faces(c, ev.matching) == ev.critical);

            auto [dim, count] = expected_spheres(f, m);
            long long at_dim = 0;
            for (Face x : ev.critical) {
                CHECK(face_size(x) - 1 == dim);
                at_dim += face_size(x) - 1 == dim;
            }
            CHECK(at_dim == count);
            auto h = homology_profile(c);
            CHECK(h.betti(dim) == count);
            CHECK(h.euler() == (dim % 2 ? -count : count));
        }
    }
}

TEST_CASE("a cyclic matching on a hollow triangle is caught", "[morse]") {
    auto c = SimplicialComplex::downward_closure(3, {face_from({0, 1}), face_from({1, 2}), face_from({0, 2})});
    FaceMatching fm;
    fm.pairs = {{face_from({0, 1}), bit(0)}, {face_from({1, 2}), bit(1)}, {face_from({0, 2}), bit(2)}};
    auto a = check_acyclic(c, fm);
    auto b = check_acyclic_global(c, fm);
    CHECK_FALSE(a.ok);
    CHECK_FALSE(b.ok);
    CHECK(a.is_matching);
    REQUIRE(a.cycle.size() >= 6);
    // alternate up along matched pairs and down along the Hasse diagram
    for (Face f : a.cycle) CHECK(c.contains(f));

    // pairing the empty face instead opens the cycle
    fm.pairs[2] = {bit(2), Face{0}};
    CHECK(check_acyclic(c, fm).ok);
}

TEST_CASE("a face used twice is not a matching", "[morse]") {
    auto c = SimplicialComplex::downward_closure(3, {face_from({0, 1}), face_from({0, 2})});
    FaceMatching fm;
    fm.pairs = {{face_from({0, 1}), bit(0)}, {face_from({0, 2}), bit(0)}};
    auto a = check_acyclic(c, fm);
    CHECK_FALSE(a.is_matching);
    CHECK_FALSE(a.ok);
}

TEST_CASE("M_O leaves exactly the faces where no vertex of O is free", "[morse]") {
    for (int n : {4, 6, 8}) {
        Graph g = build_square_cyl(2, n);
        Face O = checkerboard_odd(g);
        auto fm = mo_matching(g, O);
        auto c = independence_complex(g);
        auto dec = gamma_delta_O(g, O);
        CHECK(unmatched_faces(c, fm) == dec.X);
        CHECK(check_acyclic(c, fm).ok);
        CHECK(matching_is_partial_pairing(fm));
    }
}

TEST_CASE("Morse consistency report", "[morse]") {
    auto gt = tree_generator(TreeFamily::SquareCyl4, 3);
    auto c = independence_complex(gt.graph);
    auto ev = evaluate_tree(gt.graph, gt.tree);
    auto r = morse_consistency(c, ev.matching);
    CHECK(r.inequalities_hold);
    CHECK(r.euler_holds);
    CHECK(r.critical_euler == r.homology.euler());
}

TEST_CASE("tree json round trip", "[morse]") {
    auto gt = tree_generator(TreeFamily::SquareCyl3, 4);
    auto t = MatchingTree::from_json(gt.tree.to_json());
    REQUIRE(t.size() == gt.tree.size());
    CHECK(t.root() == gt.tree.root());
    for (std::size_t i = 0; i < t.size(); ++i) {
        CHECK(t.node(i).kind == gt.tree.node(i).kind);
        CHECK(t.node(i).pivot == gt.tree.node(i).pivot);
        CHECK(t.node(i).children == gt.tree.node(i).children);
    }
    CHECK(evaluate_tree(gt.graph, t).critical == evaluate_tree(gt.graph, gt.tree).critical);
}

TEST_CASE("three-row ladder example keeps one edge", "[morse]") {
    auto gt = example_tree_s32();
    CHECK(validate_tree(gt.graph, gt.tree).ok);
    auto ev = evaluate_tree(gt.graph, gt.tree);
    REQUIRE(ev.critical.size() == 1);
    CHECK(face_size(ev.critical[0]) == 2);
    auto h = homology_profile(independence_complex(gt.graph));
    CHECK(h.table_entry() == "(1,1)");
}

TEST_CASE("structurally broken trees are rejected", "[morse]") {
    Graph g = build_square_rect(1, 3);
    MatchingTree adj;
    // matching on two neighbours along one path
    adj.set_root(adj.add_match(0, adj.add_match(1, adj.add_leaf())));
    auto vc = validate_tree(g, adj);
    CHECK_FALSE(vc.ok);
    CHECK(vc.path == std::vector<int>{0, 1});

    MatchingTree rep;
    rep.set_root(rep.add_split(2, rep.add_leaf(), rep.add_match(2, rep.add_leaf())));
    CHECK_FALSE(validate_tree(g, rep).ok);

    CHECK_FALSE(validate_tree(g, MatchingTree{}).ok);
}
