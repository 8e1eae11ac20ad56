#pragma once

// AR-quiver structure on the fundamental domain: arrows, path reachability,
// sectional paths, boundary notions, and the forbidden regions attached to an
// object.
//
// The connecting component is a translation quiver over the base quiver: a
// vertex pair (t, z) for every orbit index t and level z, with arrows
//   (y, z) -> (x, z)      for every base arrow x -> y, and
//   (x, z) -> (y, z + 1)  for every base arrow x -> y.
// The regular component is a translation quiver over a half-infinite line:
// (p, q) -> (p, q + 1) and, for q >= 2, (p, q) -> (p + 1, q - 1).
//
// Path searches run over boxes padded far enough that no path between the two
// query points can leave the box, so the answers are exact for the infinite
// quiver even though the search is finite.

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dinfty/derived.hpp"
#include "dinfty/hom.hpp"

namespace dinfty {

struct Window {
    int max_support = 15;
};

struct WindowUnderflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline bool window_contains(const Window& w, const Label& x) {
    return max_support(x) <= w.max_support;
}

inline bool window_contains(const Window& w, const ClusterObject& c) {
    return window_contains(w, c.label);
}

// The fundamental-domain object whose underlying label is x.
inline ClusterObject domain_object(const Label& x) {
    return {x, component_of(x) == Component::Preinjective ? -1 : 0};
}

inline std::vector<ClusterObject> domain_objects_in_window(const Window& w) {
    std::vector<ClusterObject> out;
    for (const Label& x : labels_in_window(w.max_support))
        out.push_back(domain_object(x));
    return out;
}

namespace detail {

inline std::vector<int> q_sources_into(int t) {
    if (t == 0 || t == 1) return {2};
    if (t % 2 == 1) return {t - 1, t + 1};  // odd sinks >= 3
    return {};                              // even vertices are sources
}

inline std::vector<int> q_targets_from(int t) {
    if (t == 2) return {0, 1, 3};
    if (t >= 4 && t % 2 == 0) return {t - 1, t + 1};
    return {};
}

using Node = std::pair<int, int>;

inline std::vector<Node> connecting_succ(Node v) {
    std::vector<Node> out;
    for (int s : q_sources_into(v.first)) out.emplace_back(s, v.second);
    for (int d : q_targets_from(v.first)) out.emplace_back(d, v.second + 1);
    return out;
}

inline std::vector<Node> connecting_pred(Node v) {
    std::vector<Node> out;
    for (int d : q_targets_from(v.first)) out.emplace_back(d, v.second);
    for (int s : q_sources_into(v.first)) out.emplace_back(s, v.second - 1);
    return out;
}

inline std::vector<Node> regular_succ(Node v) {
    std::vector<Node> out{{v.first, v.second + 1}};
    if (v.second >= 2) out.emplace_back(v.first + 1, v.second - 1);
    return out;
}

inline std::vector<Node> regular_pred(Node v) {
    std::vector<Node> out;
    if (v.second >= 2) out.emplace_back(v.first, v.second - 1);
    out.emplace_back(v.first - 1, v.second + 1);
    return out;
}

// Exact path search between two nodes of one component, on a padded box.
struct PathSearch {
    std::function<std::vector<Node>(Node)> succ;
    std::function<Node(Node)> tau_inv;  // for the sectional condition
    std::function<bool(Node)> in_box;

    bool reachable(Node from, Node to) const {
        if (from == to) return true;
        std::set<Node> seen{from};
        std::queue<Node> queue;
        queue.push(from);
        while (!queue.empty()) {
            const Node v = queue.front();
            queue.pop();
            for (const Node& n : succ(v)) {
                if (!in_box(n) || seen.count(n)) continue;
                if (n == to) return true;
                seen.insert(n);
                queue.push(n);
            }
        }
        return false;
    }

    // Is there a path from `from` to `to` all of whose consecutive arrow
    // pairs a -> b -> c avoid c = tau^{-1}(a)?
    bool sectional(Node from, Node to) const {
        if (from == to) return true;
        std::set<std::pair<Node, Node>> seen;  // visited arrows (prev, cur)
        std::queue<std::pair<Node, Node>> queue;
        for (const Node& n : succ(from)) {
            if (!in_box(n)) continue;
            if (n == to) return true;
            seen.insert({from, n});
            queue.push({from, n});
        }
        while (!queue.empty()) {
            const auto [a, b] = queue.front();
            queue.pop();
            const Node forbidden = tau_inv(a);
            for (const Node& c : succ(b)) {
                if (c == forbidden || !in_box(c)) continue;
                if (c == to) return true;
                if (seen.insert({b, c}).second) queue.push({b, c});
            }
        }
        return false;
    }
};

inline PathSearch connecting_search(Node from, Node to) {
    const int dz = to.second - from.second;
    const int t_max = std::max(from.first, to.first) + 2 * std::max(dz, 0) + 4;
    const int z_lo = from.second, z_hi = to.second;
    return PathSearch{
        connecting_succ,
        [](Node v) { return Node{v.first, v.second + 1}; },
        [=](Node v) {
            return v.first >= 0 && v.first <= t_max && v.second >= z_lo &&
                   v.second <= z_hi;
        }};
}

inline PathSearch regular_search(Node from, Node to) {
    const int q_max = from.second + to.second + std::max(to.first - from.first, 0) + 2;
    const int p_lo = from.first, p_hi = to.first;
    return PathSearch{
        regular_succ,
        [](Node v) { return Node{v.first + 1, v.second}; },
        [=](Node v) {
            return v.first >= p_lo && v.first <= p_hi && v.second >= 1 &&
                   v.second <= q_max;
        }};
}

inline Node node_of(const ClusterObject& x) {
    if (in_connecting_component(x)) {
        const ConnectingPos c = connecting_position(x);
        return {c.t, c.z};
    }
    const RegularCoords c = regular_coords(x.label);
    return {c.p, c.q};
}

inline ClusterObject object_at(bool connecting, Node v) {
    if (connecting) return connecting_object(v.first, v.second);
    return {regular_label(v.first, v.second), 0};
}

}  // namespace detail

inline std::vector<ClusterObject> ar_successors(const ClusterObject& x) {
    const bool conn = in_connecting_component(x);
    const auto nodes = conn ? detail::connecting_succ(detail::node_of(x))
                            : detail::regular_succ(detail::node_of(x));
    std::vector<ClusterObject> out;
    for (const auto& n : nodes) out.push_back(detail::object_at(conn, n));
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<ClusterObject> ar_predecessors(const ClusterObject& x) {
    const bool conn = in_connecting_component(x);
    const auto nodes = conn ? detail::connecting_pred(detail::node_of(x))
                            : detail::regular_pred(detail::node_of(x));
    std::vector<ClusterObject> out;
    for (const auto& n : nodes) out.push_back(detail::object_at(conn, n));
    std::sort(out.begin(), out.end());
    return out;
}

struct ArArrows {
    std::vector<ClusterObject> successors;
    std::vector<ClusterObject> predecessors;
};

// Immediate neighbors, guaranteed to lie inside the window; if the object or
// any neighbor falls outside, the window cannot faithfully describe the local
// quiver and we refuse rather than truncate.
inline ArArrows ar_arrows(const ClusterObject& x, const Window& w) {
    if (!window_contains(w, x))
        throw WindowUnderflow("window underflow: " + to_string(x) +
                              " outside window " + std::to_string(w.max_support));
    ArArrows out{ar_successors(x), ar_predecessors(x)};
    for (const auto& list : {out.successors, out.predecessors})
        for (const ClusterObject& y : list)
            if (!window_contains(w, y))
                throw WindowUnderflow("window underflow: neighbor " + to_string(y) +
                                      " of " + to_string(x) + " outside window " +
                                      std::to_string(w.max_support));
    return out;
}

// ---------------------------------------------------------------------------
// Module-level arrow structure (no shifts)
// ---------------------------------------------------------------------------

// Indecomposable summands of the radical of the t-th projective.
inline std::vector<Label> radical_summands(int t) {
    if (t == 2) return {projective_label(0), projective_label(1), projective_label(3)};
    if (t >= 4 && t % 2 == 0) return {projective_label(t - 1), projective_label(t + 1)};
    return {};
}

// Indecomposable summands of the t-th injective modulo its socle.
inline std::vector<Label> socle_quotient_summands(int t) {
    if (t == 0 || t == 1) return {injective_label(2)};
    if (t >= 3 && t % 2 == 1) return {injective_label(t - 1), injective_label(t + 1)};
    return {};
}

inline std::vector<Label> rep_successors(const Label& x) {
    std::set<Label> out;
    if (auto s = catalog().sequence_starting_at(x))
        out.insert(s->middle.begin(), s->middle.end());
    else if (auto idx = injective_index(x))
        for (const Label& q : socle_quotient_summands(*idx)) out.insert(q);
    // Arrows into projectives come from radical inclusions.
    if (component_of(x) == Component::Preprojective) {
        for (int t = 2; t <= max_support(x) + 3; ++t)
            for (const Label& r : radical_summands(t))
                if (r == x) out.insert(projective_label(t));
    }
    return {out.begin(), out.end()};
}

inline std::vector<Label> rep_predecessors(const Label& x) {
    std::set<Label> out;
    if (auto s = catalog().sequence_ending_at(x))
        out.insert(s->middle.begin(), s->middle.end());
    else if (auto idx = projective_index(x))
        for (const Label& r : radical_summands(*idx)) out.insert(r);
    if (component_of(x) == Component::Preinjective) {
        for (int t = 0; t <= max_support(x) + 3; ++t)
            for (const Label& q : socle_quotient_summands(t))
                if (q == x) out.insert(injective_label(t));
    }
    return {out.begin(), out.end()};
}

// At most one direct predecessor and at most one direct successor in the
// module-category AR quiver.
inline bool is_boundary_representation(const Label& x) {
    return rep_predecessors(x).size() <= 1 && rep_successors(x).size() <= 1;
}

// Exactly one immediate predecessor in the orbit-category AR quiver.
inline bool is_boundary_object(const ClusterObject& x) {
    return ar_predecessors(x).size() == 1;
}

// ---------------------------------------------------------------------------
// Paths
// ---------------------------------------------------------------------------

inline bool reachable(const ClusterObject& x, const ClusterObject& y) {
    if (in_connecting_component(x) != in_connecting_component(y)) return false;
    const detail::Node from = detail::node_of(x);
    const detail::Node to = detail::node_of(y);
    if (in_connecting_component(x)) {
        if (to.second < from.second) return false;
        return detail::connecting_search(from, to).reachable(from, to);
    }
    if (to.first < from.first) return false;
    return detail::regular_search(from, to).reachable(from, to);
}

inline bool is_sectional_successor(const ClusterObject& x, const ClusterObject& y) {
    if (in_connecting_component(x) != in_connecting_component(y)) return false;
    const detail::Node from = detail::node_of(x);
    const detail::Node to = detail::node_of(y);
    if (in_connecting_component(x)) {
        if (to.second < from.second) return false;
        return detail::connecting_search(from, to).sectional(from, to);
    }
    if (to.first < from.first) return false;
    return detail::regular_search(from, to).sectional(from, to);
}

inline std::vector<ClusterObject> successors_in_window(const ClusterObject& x,
                                                       const Window& w) {
    if (!window_contains(w, x))
        throw WindowUnderflow("window underflow: " + to_string(x) +
                              " outside window " + std::to_string(w.max_support));
    std::vector<ClusterObject> out;
    for (const ClusterObject& y : domain_objects_in_window(w))
        if (reachable(x, y)) out.push_back(y);
    return out;
}

// The boundary objects admitting a sectional path from x (respectively to x),
// searched within a translation range that covers the window in use.
inline std::vector<ClusterObject> boundary_successors(const ClusterObject& x,
                                                      int range = 24) {
    std::vector<ClusterObject> out;
    const detail::Node v = detail::node_of(x);
    if (in_connecting_component(x)) {
        for (int t = 0; t <= 1; ++t)
            for (int z = v.second; z <= v.second + range; ++z) {
                const ClusterObject b = connecting_object(t, z);
                if (is_sectional_successor(x, b)) out.push_back(b);
            }
    } else {
        for (int p = v.first; p <= v.first + range; ++p) {
            const ClusterObject b{quasi_simple(p), 0};
            if (is_sectional_successor(x, b)) out.push_back(b);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<ClusterObject> boundary_predecessors(const ClusterObject& x,
                                                        int range = 24) {
    std::vector<ClusterObject> out;
    const detail::Node v = detail::node_of(x);
    if (in_connecting_component(x)) {
        for (int t = 0; t <= 1; ++t)
            for (int z = v.second - range; z <= v.second; ++z) {
                const ClusterObject b = connecting_object(t, z);
                if (is_sectional_successor(b, x)) out.push_back(b);
            }
    } else {
        for (int p = v.first - range; p <= v.first; ++p) {
            const ClusterObject b{quasi_simple(p), 0};
            if (is_sectional_successor(b, x)) out.push_back(b);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Forbidden regions
// ---------------------------------------------------------------------------

// All window objects with a nonzero extension pairing against x.
inline std::set<ClusterObject> forbidden_region(HomEngine& engine,
                                                const ClusterObject& x,
                                                const Window& w) {
    std::set<ClusterObject> out;
    for (const ClusterObject& y : domain_objects_in_window(w))
        if (engine.ext1_cluster(y, x).dim != 0) out.insert(y);
    return out;
}

// Window successors of x reachable only along non-sectional paths.
inline std::set<ClusterObject> forward_forbidden(const ClusterObject& x,
                                                 const Window& w) {
    std::set<ClusterObject> out;
    for (const ClusterObject& y : domain_objects_in_window(w)) {
        if (in_connecting_component(y) != in_connecting_component(x)) continue;
        if (reachable(x, y) && !is_sectional_successor(x, y)) out.insert(y);
    }
    return out;
}

inline std::set<ClusterObject> backward_forbidden(const ClusterObject& x,
                                                  const Window& w) {
    std::set<ClusterObject> out;
    for (const ClusterObject& y : domain_objects_in_window(w)) {
        if (in_connecting_component(y) != in_connecting_component(x)) continue;
        if (reachable(y, x) && !is_sectional_successor(y, x)) out.insert(y);
    }
    return out;
}

// For a boundary-orbit source (unshifted, orbit index 0 or 1) the forbidden
// region misses some same-boundary objects that path arguments alone would
// admit; this is that correction set.
inline std::set<ClusterObject> exceptional_set(const ClusterObject& x,
                                               const Window& w) {
    if (!in_connecting_component(x) || x.shift != 0)
        throw std::invalid_argument("exceptional_set: expected an unshifted " \
                                    "boundary-orbit object");
    const Label lab = x.label;
    if (lab.kind != LabelKind::A0 && lab.kind != LabelKind::A1)
        throw std::invalid_argument("exceptional_set: " + to_string(x) +
                                    " is not in a boundary orbit");
    const int l = lab.m;
    std::set<ClusterObject> out;
    for (int lp = 1; lp <= w.max_support; lp += 2) {
        if (std::abs(lp - l) < 4) continue;
        out.insert(domain_object(Label{lab.kind, 0, lp}));
    }
    const LabelKind other = lab.kind == LabelKind::A0 ? LabelKind::A1 : LabelKind::A0;
    for (int lp = 2; lp <= w.max_support; lp += 2) {
        if (lp < 5 - l) continue;
        out.insert(domain_object(Label{other, 0, lp}));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Pseudo-rectangle of a preprojective source
// ---------------------------------------------------------------------------

// The region of preprojective targets reached through exactly one wall of the
// source's orbit: translated two-socle labels straddling t and line labels
// covering t.
inline bool in_pseudo_rectangle(const Label& x, const Label& y) {
    if (component_of(x) != Component::Preprojective ||
        component_of(y) != Component::Preprojective)
        return false;
    if (x.kind == LabelKind::A0 || x.kind == LabelKind::A1) return false;
    const OrbitPosition px = preprojective_position(x);
    const OrbitPosition py = preprojective_position(y);
    if (py.s < px.s) return false;
    const Label z = preprojective_orbit_label(py.t, py.s - px.s);
    const int t = px.t;
    if (z.kind == LabelKind::B) return z.n < t && t <= z.m;
    if (z.kind == LabelKind::A) return z.n <= t && t <= z.m;
    return false;
}

}  // namespace dinfty
