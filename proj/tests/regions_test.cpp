#include <doctest.h>

#include <set>
#include <vector>

#include "dinfty/any_oracle.hpp"
#include "dinfty/regions.hpp"

using namespace dinfty;

namespace {

ClusterObject dom(const Label& x) { return domain_object(x); }

std::set<Label> label_set(const std::vector<ClusterObject>& v) {
    std::set<Label> out;
    for (const auto& c : v) out.insert(c.label);
    return out;
}

std::set<ClusterObject> to_set(const std::vector<ClusterObject>& v) {
    return {v.begin(), v.end()};
}

HomEngine& shared_engine() {
    static HomEngine engine(make_oracle("gfp", 1009, 14));
    return engine;
}

std::set<ClusterObject> expected_forward_p0(int n) {
    std::set<ClusterObject> e;
    for (int i = 3; i <= n; i += 2)
        for (int j = i + 2; j <= n; j += 2) e.insert(dom(label_b(i, j)));
    for (int l = 5; l <= n; l += 2) {
        e.insert(dom(label_a0(l)));
        e.insert(dom(label_a1(l)));
    }
    e.insert(dom(label_a0(3)));
    return e;
}

std::set<ClusterObject> expected_backward_p0(int n) {
    std::set<ClusterObject> e;
    for (int i = 2; i <= n; i += 2)
        for (int j = i + 2; j <= n; j += 2) e.insert(dom(label_b(i, j)));
    for (int l = 4; l <= n; l += 2) {
        e.insert(dom(label_a0(l)));
        e.insert(dom(label_a1(l)));
    }
    e.insert(dom(label_a1(2)));
    return e;
}

std::set<ClusterObject> expected_forward_p5(int n) {
    std::set<ClusterObject> e;
    for (int i = 1; i <= n; i += 2)
        for (int j = std::max(i + 2, 7); j <= n; j += 2) e.insert(dom(label_b(i, j)));
    for (int l = 7; l <= n; l += 2) e.insert(dom(label_a(3, l)));
    for (int l = 7; l <= n; l += 2) {
        e.insert(dom(label_a0(l)));
        e.insert(dom(label_a1(l)));
    }
    return e;
}

std::set<ClusterObject> expected_backward_p5(int n) {
    std::set<ClusterObject> e;
    // Two-socle part: all B(i,j)[-1] with j > 5, with no lower bound tying i
    // to the orbit index (the bound only enters through i < j).
    for (int i = 2; i <= n; i += 2)
        for (int j = std::max(i + 2, 6); j <= n; j += 2) e.insert(dom(label_b(i, j)));
    for (int k = 2; k <= 4; k += 2)
        for (int l = std::max(k, 6); l <= n; l += 2) e.insert(dom(label_a(k, l)));
    for (int l = 6; l <= n; l += 2) {
        e.insert(dom(label_a0(l)));
        e.insert(dom(label_a1(l)));
    }
    return e;
}

}  // namespace

TEST_CASE("quiver arrows agree with the sequence catalog") {
    for (const Label& x : labels_in_window(10)) {
        const ClusterObject cx = dom(x);
        const auto succ = ar_successors(cx);
        const auto pred = ar_predecessors(cx);

        if (!is_injective(x)) {
            auto s = catalog().sequence_starting_at(x);
            REQUIRE(s.has_value());
            CHECK(label_set(succ) ==
                  std::set<Label>(s->middle.begin(), s->middle.end()));
            for (const auto& c : succ) CHECK(c.shift == cx.shift);
        }
        if (!is_projective(x)) {
            auto s = catalog().sequence_ending_at(x);
            REQUIRE(s.has_value());
            CHECK(label_set(pred) ==
                  std::set<Label>(s->middle.begin(), s->middle.end()));
            for (const auto& c : pred) CHECK(c.shift == cx.shift);
        }
    }
}

TEST_CASE("arrow sets are mesh-dual to the translation") {
    for (const Label& x : labels_in_window(9)) {
        const ClusterObject cx = dom(x);
        CHECK(ar_successors(cx) == ar_predecessors(tau_cluster(cx, -1)));
        CHECK(ar_predecessors(cx) == ar_successors(tau_cluster(cx, 1)));
    }
}

TEST_CASE("seam meshes: radical plus socle-quotient middles, additive dimensions") {
    for (int t = 0; t <= 12; ++t) {
        const Label p = projective_label(t);
        const Label i = injective_label(t);
        std::set<ClusterObject> expected;
        for (const Label& r : radical_summands(t)) expected.insert({r, 0});
        for (const Label& q : socle_quotient_summands(t)) expected.insert({q, -1});

        const auto mids = ar_predecessors(dom(p));
        CHECK(to_set(mids) == expected);
        CHECK(to_set(ar_successors(ClusterObject{i, -1})) == expected);

        int signed_sum = 0;
        for (const auto& c : mids)
            signed_sum += (c.shift == 0 ? 1 : -1) * total_dim(c.label);
        CHECK(signed_sum == total_dim(p) - total_dim(i));
    }

    // The translation successor of A(2,2)[-1] is P2 = B(1,3); P0 is an arrow
    // successor through the glued mesh, not the translation image.
    const ClusterObject i2{label_a(2, 2), -1};
    CHECK(tau_cluster(i2, -1) == dom(label_b(1, 3)));
    const auto succ = to_set(ar_successors(i2));
    CHECK(succ == std::set<ClusterObject>{dom(label_a1(1)), dom(label_a0(1)),
                                          dom(label_a(3, 3))});
}

TEST_CASE("module-level arrows and boundary representations") {
    CHECK(rep_successors(label_a1(1)) == std::vector<Label>{label_b(1, 3)});
    CHECK(rep_predecessors(label_a(2, 2)) ==
          std::vector<Label>({label_a0(2), label_a1(2), label_a(2, 4)}));
    CHECK(rep_successors(label_a(2, 2)).empty());
    CHECK(rep_predecessors(label_b(1, 3)) ==
          std::vector<Label>({label_a0(1), label_a1(1), label_a(3, 3)}));

    CHECK(is_boundary_representation(label_a0(1)));
    CHECK(is_boundary_representation(label_a1(4)));
    CHECK(is_boundary_representation(label_b(1, 2)));   // quasi-simple
    CHECK(is_boundary_representation(label_a(5, 6)));   // quasi-simple
    CHECK(!is_boundary_representation(label_b(1, 3)));
    CHECK(!is_boundary_representation(label_a(2, 2)));
    CHECK(!is_boundary_representation(label_a(3, 3)));
    CHECK(!is_boundary_representation(label_b(2, 3)));
}

TEST_CASE("windowed arrow queries refuse to truncate") {
    const Window w{15};
    const auto arrows = ar_arrows(dom(label_b(1, 2)), w);
    CHECK(to_set(arrows.successors) ==
          std::set<ClusterObject>{dom(label_b(2, 3))});
    CHECK(to_set(arrows.predecessors) ==
          std::set<ClusterObject>{dom(label_b(1, 4))});

    CHECK_THROWS_AS(ar_arrows(dom(label_b(1, 2)), Window{2}), WindowUnderflow);
    CHECK_THROWS_AS(ar_arrows(dom(label_a(9, 9)), Window{5}), WindowUnderflow);
    CHECK_THROWS_AS(successors_in_window(dom(label_a(9, 9)), Window{5}),
                    WindowUnderflow);
}

TEST_CASE("regular reachability has a rectangle-free closed form") {
    for (int p = -3; p <= 3; ++p)
        for (int q = 1; q <= 5; ++q)
            for (int pp = -3; pp <= 3; ++pp)
                for (int qq = 1; qq <= 5; ++qq) {
                    const ClusterObject x = dom(regular_label(p, q));
                    const ClusterObject y = dom(regular_label(pp, qq));
                    const bool expected = pp >= p && pp + qq >= p + q;
                    CHECK(reachable(x, y) == expected);
                }
}

TEST_CASE("connecting reachability fixtures") {
    const ClusterObject p0 = dom(label_a1(1));
    CHECK(reachable(p0, p0));
    CHECK(reachable(p0, dom(label_b(1, 3))));
    CHECK(!reachable(dom(label_b(1, 3)), p0));
    // Level-preserving steps go from sinks to adjacent sources only.
    CHECK(reachable(dom(label_a(3, 3)), dom(label_b(1, 3))));
    CHECK(reachable(dom(label_a(3, 3)), dom(label_a(3, 5))));
    CHECK(!reachable(dom(label_a(3, 3)), dom(label_a(5, 5))));
    // No arrows cross between the connecting and regular components.
    CHECK(!reachable(p0, dom(label_b(1, 2))));
    CHECK(!reachable(dom(label_b(1, 2)), p0));
    // Arrow implies reachable; reachability is transitive along arrows.
    for (const Label& x : labels_in_window(8)) {
        const ClusterObject cx = dom(x);
        for (const ClusterObject& y : ar_successors(cx)) {
            CHECK(reachable(cx, y));
            for (const ClusterObject& z : ar_successors(y)) CHECK(reachable(cx, z));
        }
    }
}

TEST_CASE("sectional path fixtures") {
    const ClusterObject p0 = dom(label_a1(1));
    CHECK(is_sectional_successor(p0, p0));
    CHECK(is_sectional_successor(p0, dom(label_b(1, 3))));
    CHECK(!is_sectional_successor(p0, dom(label_a0(3))));
    CHECK(is_sectional_successor(p0, dom(label_a1(3))));

    const ClusterObject p5 = dom(label_a(5, 5));
    CHECK(is_sectional_successor(p5, p5));
    CHECK(is_sectional_successor(p5, dom(label_b(3, 5))));
    CHECK(!is_sectional_successor(p5, dom(label_b(3, 7))));

    // Sectional implies reachable.
    for (const Label& x : labels_in_window(7)) {
        for (const Label& y : labels_in_window(7)) {
            const ClusterObject cx = dom(x), cy = dom(y);
            if (is_sectional_successor(cx, cy)) CHECK(reachable(cx, cy));
        }
    }
}

TEST_CASE("boundary objects are the one-predecessor vertices") {
    for (int t = 0; t <= 8; ++t)
        for (int z = -5; z <= 5; ++z)
            CHECK(is_boundary_object(connecting_object(t, z)) == (t <= 1));
    for (int p = -4; p <= 4; ++p)
        for (int q = 1; q <= 5; ++q)
            CHECK(is_boundary_object(dom(regular_label(p, q))) == (q == 1));
}

TEST_CASE("boundary neighbors along sectional paths") {
    for (int t : {3, 5, 7}) {
        const ClusterObject pt = dom(projective_label(t));
        const auto succ = boundary_successors(pt);
        REQUIRE(succ.size() == 2);
        CHECK(succ[0] == dom(label_a0(t)));
        CHECK(succ[1] == dom(label_a1(t)));
    }
    for (int t : {3, 5}) {
        const ClusterObject x = tau_cluster(dom(projective_label(t)), 2);
        const auto pred = boundary_predecessors(x);
        CHECK(std::count(pred.begin(), pred.end(), dom(label_a0(t + 3))) == 1);
        REQUIRE(pred.size() == 2);
    }
    // Regular: the feet of the two extreme sectional diagonals.
    const ClusterObject x = dom(label_b(2, 5));  // coordinates (0, 3)
    CHECK(boundary_successors(x) ==
          std::vector<ClusterObject>{dom(regular_label(2, 1))});
    CHECK(boundary_predecessors(x) ==
          std::vector<ClusterObject>{dom(regular_label(0, 1))});
}

TEST_CASE("forbidden path regions match their closed-form descriptions") {
    const Window w12{12};
    CHECK(forward_forbidden(dom(label_a1(1)), w12) == expected_forward_p0(12));
    CHECK(backward_forbidden(dom(label_a1(1)), w12) == expected_backward_p0(12));

    const Window w11{11};
    CHECK(forward_forbidden(dom(label_a(5, 5)), w11) == expected_forward_p5(11));
    CHECK(backward_forbidden(dom(label_a(5, 5)), w11) == expected_backward_p5(11));
}

TEST_CASE("nonzero-extension region equals the path region away from the boundary") {
    HomEngine& engine = shared_engine();
    const Window w{10};

    // Interior orbit: the extension-supporting objects in the connecting
    // component are exactly the non-sectional successors and predecessors.
    for (int t : {2, 3}) {
        const ClusterObject pt = dom(projective_label(t));
        std::set<ClusterObject> paths = forward_forbidden(pt, w);
        for (const auto& c : backward_forbidden(pt, w)) paths.insert(c);
        std::set<ClusterObject> ext;
        for (const auto& y : forbidden_region(engine, pt, w))
            if (in_connecting_component(y)) ext.insert(y);
        CHECK(ext == paths);
    }

    // Boundary orbit: the path region overshoots by the exceptional set.
    for (const Label& start : {label_a1(1), label_a0(1)}) {
        const ClusterObject p = dom(start);
        std::set<ClusterObject> paths = forward_forbidden(p, w);
        for (const auto& c : backward_forbidden(p, w)) paths.insert(c);
        for (const auto& c : exceptional_set(p, w)) {
            CHECK(paths.count(c) == 1);
            paths.erase(c);
        }
        std::set<ClusterObject> ext;
        for (const auto& y : forbidden_region(engine, p, w))
            if (in_connecting_component(y)) ext.insert(y);
        CHECK(ext == paths);
    }
}

TEST_CASE("regular part of the forbidden region is a pair of wings") {
    HomEngine& engine = shared_engine();
    // For an interior odd orbit the regular objects pairing nontrivially
    // against P_t fill the wings over the translated bracketing quasi-simples.
    for (int t : {5, 7}) {
        const ClusterObject pt = dom(label_a(t, t));
        const Label left = quasi_simple(-(t - 3) / 2);   // tau^{-1} A(t,t+1)
        const Label right = quasi_simple((t + 1) / 2);   // A(t+1,t+2)
        CHECK(left == tau_rep_inv(label_a(t, t + 1)));
        CHECK(right == label_a(t + 1, t + 2));
        for (const Label& y : labels_in_window(9)) {
            if (component_of(y) != Component::Regular) continue;
            const bool in_wings = wing_contains(left, y) || wing_contains(right, y);
            CHECK(in_wings == (engine.ext1_cluster(dom(y), pt).dim != 0));
        }
    }
}

TEST_CASE("pseudo-rectangle of a preprojective source") {
    const Label p5 = label_a(5, 5);
    CHECK(in_pseudo_rectangle(p5, label_b(1, 7)));
    CHECK(in_pseudo_rectangle(p5, label_a(3, 5)));
    CHECK(!in_pseudo_rectangle(p5, label_b(5, 7)));

    std::set<Label> expected;
    for (int i = 1; i < 5; i += 2)
        for (int j = 5; j <= 11; j += 2) expected.insert(label_b(i, j));
    for (int k = 3; k <= 5; k += 2)
        for (int l = 5; l <= 11; l += 2)
            if (k <= l) expected.insert(label_a(k, l));
    std::set<Label> got;
    for (const Label& y : labels_in_window(11))
        if (in_pseudo_rectangle(p5, y)) got.insert(y);
    CHECK(got == expected);

    // Membership forces a one-dimensional morphism space from the source.
    HomEngine& engine = shared_engine();
    for (const Label& y : expected) CHECK(engine.hom_rep(p5, y).dim == 1);
    CHECK(engine.hom_rep(p5, label_b(5, 7)).dim == 2);
}
