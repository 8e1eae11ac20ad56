#pragma once

// Morphism-space dimensions, by closed-form rules where available and by the
// matrix oracle otherwise.
//
// Coverage of the closed forms on rep(Q):
//   - source preinjective, target not:        0
//   - source regular, target preprojective:   0
//   - both regular:                           forward-rectangle membership
//   - both preprojective:                     orbit-position case split
//   - source preprojective, target regular:   count of wings containing the
//                                             translated target
// Pairs with a preinjective target fall back to the oracle.
//
// Derived/orbit-category dimensions are assembled from these via the shift
// rule (only shift differences 0 and 1 contribute) and the orbit sum over
// powers of F.

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dinfty/any_oracle.hpp"
#include "dinfty/catalog.hpp"
#include "dinfty/coords.hpp"
#include "dinfty/derived.hpp"
#include "dinfty/labels.hpp"

namespace dinfty {

enum class HomMethod { Formula, ZeroRule, OracleFallback };

inline std::string to_string(HomMethod m) {
    switch (m) {
        case HomMethod::Formula: return "formula";
        case HomMethod::ZeroRule: return "zero-rule";
        case HomMethod::OracleFallback: return "oracle-fallback";
    }
    return "?";
}

struct HomAnswer {
    int dim = 0;
    HomMethod method = HomMethod::Formula;

    friend bool operator==(const HomAnswer&, const HomAnswer&) = default;
};

// Wing vertices governing maps out of the t-th projective orbit into the
// regular component.
inline std::vector<Label> wing_anchors(int t) {
    if (t <= 1) return {label_b(1, 2)};
    if (t == 2) return {label_b(1, 2), label_a(2, 3)};
    return {label_a(t, t + 1), label_a(t - 1, t)};
}

namespace detail {

// Both arguments preprojective.
inline int hom_pp(const Label& x, const Label& y) {
    if (x.kind == LabelKind::A0 || x.kind == LabelKind::A1) {
        // Boundary orbit: maps go to the same boundary row and to every
        // two-dimensional-socle label starting no lower.
        if (y.kind == LabelKind::B) return y.n >= x.m ? 1 : 0;
        if (y.kind == LabelKind::A) return 0;
        return (y.m >= x.m && y.kind == x.kind) ? 1 : 0;
    }
    const OrbitPosition px = preprojective_position(x);
    const OrbitPosition py = preprojective_position(y);
    if (py.s < px.s) return 0;
    const Label z = preprojective_orbit_label(py.t, py.s - px.s);
    const int t = px.t;  // >= 2 here
    switch (z.kind) {
        case LabelKind::A0:
        case LabelKind::A1:
            return z.m >= t ? 1 : 0;
        case LabelKind::B:
            if (z.n >= t) return 2;
            return t <= z.m ? 1 : 0;
        case LabelKind::A:
            return (z.n <= t && t <= z.m) ? 1 : 0;
    }
    return 0;
}

// Source preprojective, target regular.
inline int hom_pr(const Label& x, const Label& y) {
    const OrbitPosition px = preprojective_position(x);
    RegularCoords c = regular_coords(y);
    c.p -= px.s;  // translate the target back to compare against the orbit root
    int dim = 0;
    for (const Label& anchor : wing_anchors(px.t)) {
        const int ps = regular_coords(anchor).p;
        if (c.p <= ps && c.p + c.q >= ps + 1) ++dim;
    }
    return dim;
}

}  // namespace detail

class HomEngine {
   public:
    explicit HomEngine(AnyOracle oracle) : oracle_(std::move(oracle)) {}

    AnyOracle& oracle() { return oracle_; }

    HomAnswer hom_rep(const Label& x, const Label& y) {
        const auto key = std::make_pair(x, y);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        const HomAnswer a = compute_rep(x, y);
        memo_.emplace(key, a);
        return a;
    }

    HomAnswer ext1_rep(const Label& x, const Label& y) {
        const auto tx = tau_rep(x);
        if (!tx) return {0, HomMethod::ZeroRule};
        return hom_rep(y, *tx);
    }

    HomAnswer hom_derived(const DerivedObject& x, const DerivedObject& y) {
        const int d = y.shift - x.shift;
        if (d == 0) return hom_rep(x.label, y.label);
        if (d == 1) return ext1_rep(x.label, y.label);
        return {0, HomMethod::ZeroRule};
    }

    HomAnswer hom_cluster(const ClusterObject& x, const ClusterObject& y) {
        // Orbit-category morphisms: sum over F-orbit representatives of the
        // target.  Each F application raises the shift by at least one, so a
        // fixed small range of powers exhausts the contributing summands.
        const DerivedObject dx = as_derived(x);
        HomAnswer total{0, HomMethod::ZeroRule};
        for (int i = -5; i <= 5; ++i) {
            const DerivedObject fy = apply_f(as_derived(y), i);
            const int d = fy.shift - dx.shift;
            if (d != 0 && d != 1) continue;
            const HomAnswer a = hom_derived(dx, fy);
            total.dim += a.dim;
            total.method = merge(total.method, a.method);
        }
        return total;
    }

    HomAnswer ext1_cluster(const ClusterObject& x, const ClusterObject& y) {
        return hom_cluster(x, tau_cluster(y));
    }

    HomAnswer hom_cluster(const Label& x, const Label& y) {
        return hom_cluster(cluster_of(x), cluster_of(y));
    }

    HomAnswer ext1_cluster(const Label& x, const Label& y) {
        return ext1_cluster(cluster_of(x), cluster_of(y));
    }

   private:
    static HomMethod merge(HomMethod a, HomMethod b) {
        if (a == HomMethod::OracleFallback || b == HomMethod::OracleFallback)
            return HomMethod::OracleFallback;
        if (a == HomMethod::Formula || b == HomMethod::Formula)
            return HomMethod::Formula;
        return HomMethod::ZeroRule;
    }

    HomAnswer compute_rep(const Label& x, const Label& y) {
        validate(x);
        validate(y);
        const Component cx = component_of(x);
        const Component cy = component_of(y);
        if (cx == Component::Preinjective && cy != Component::Preinjective)
            return {0, HomMethod::ZeroRule};
        if (cx == Component::Regular && cy == Component::Preprojective)
            return {0, HomMethod::ZeroRule};
        if (cy == Component::Preinjective)
            return {oracle_.hom(x, y), HomMethod::OracleFallback};
        if (cx == Component::Preprojective && cy == Component::Preprojective)
            return {detail::hom_pp(x, y), HomMethod::Formula};
        if (cx == Component::Preprojective && cy == Component::Regular)
            return {detail::hom_pr(x, y), HomMethod::Formula};
        return {in_forward_rectangle(x, y) ? 1 : 0, HomMethod::Formula};
    }

    AnyOracle oracle_;
    std::map<std::pair<Label, Label>, HomAnswer> memo_;
};

}  // namespace dinfty
