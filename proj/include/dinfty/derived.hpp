#pragma once

// Objects of the bounded derived category (label + homological shift) and the
// orbit-category normal form.
//
// The orbit construction quotients by F = tau_D^{-1} o [1].  A fundamental
// domain consists of the connecting component (unshifted preprojectives glued
// to preinjectives at shift -1) together with the unshifted regulars; every
// object is F-equivalent to exactly one normal form.

#include <optional>
#include <stdexcept>
#include <string>

#include "dinfty/catalog.hpp"
#include "dinfty/coords.hpp"
#include "dinfty/labels.hpp"

namespace dinfty {

struct DerivedObject {
    Label label;
    int shift = 0;

    friend auto operator<=>(const DerivedObject&, const DerivedObject&) = default;
};

inline std::string to_string(const DerivedObject& x) {
    if (x.shift == 0) return to_string(x.label);
    return to_string(x.label) + "[" + std::to_string(x.shift) + "]";
}

inline DerivedObject parse_derived(const std::string& text) {
    const auto open = text.find('[');
    if (open == std::string::npos) return {parse_label(text), 0};
    if (text.empty() || text.back() != ']')
        throw ParseError("expected closing ']'", text.size());
    const std::string inner = text.substr(open + 1, text.size() - open - 2);
    if (inner.empty()) throw ParseError("empty shift", open + 1);
    std::size_t used = 0;
    int shift = 0;
    try {
        shift = std::stoi(inner, &used);
    } catch (const std::exception&) {
        throw ParseError("invalid shift", open + 1);
    }
    if (used != inner.size()) throw ParseError("invalid shift", open + 1 + used);
    return {parse_label(text.substr(0, open)), shift};
}

// One application of the derived translation (power may be negative).
inline DerivedObject tau_derived(DerivedObject x, int power = 1) {
    while (power > 0) {
        if (auto t = tau_rep(x.label)) {
            x.label = *t;
        } else {
            x.label = injective_label(*projective_index(x.label));
            x.shift -= 1;
        }
        --power;
    }
    while (power < 0) {
        if (auto t = tau_rep_inv(x.label)) {
            x.label = *t;
        } else {
            x.label = projective_label(*injective_index(x.label));
            x.shift += 1;
        }
        ++power;
    }
    return x;
}

// F = tau_D^{-1} o [1]; the orbit category identifies X with F X.
inline DerivedObject apply_f(DerivedObject x, int power = 1) {
    while (power > 0) {
        x.shift += 1;
        x = tau_derived(x, -1);
        --power;
    }
    while (power < 0) {
        x = tau_derived(x, +1);
        x.shift -= 1;
        ++power;
    }
    return x;
}

inline bool is_cluster_normal_form(const DerivedObject& x) {
    switch (component_of(x.label)) {
        case Component::Preprojective:
            return x.shift == 0;
        case Component::Preinjective:
            return x.shift == -1;
        case Component::Regular:
            return x.shift == 0;
    }
    return false;
}

// An object of the orbit category in fundamental-domain normal form.
struct ClusterObject {
    Label label;
    int shift = 0;  // 0, except -1 on the preinjective side

    friend auto operator<=>(const ClusterObject&, const ClusterObject&) = default;
};

inline std::string to_string(const ClusterObject& x) {
    return to_string(DerivedObject{x.label, x.shift});
}

inline DerivedObject as_derived(const ClusterObject& x) { return {x.label, x.shift}; }

inline ClusterObject normalize_cluster(DerivedObject x) {
    while (!is_cluster_normal_form(x)) {
        const bool too_high =
            x.shift > 0 ||
            (x.shift == 0 && component_of(x.label) == Component::Preinjective);
        x = apply_f(x, too_high ? -1 : +1);
    }
    return {x.label, x.shift};
}

inline ClusterObject parse_cluster(const std::string& text) {
    return normalize_cluster(parse_derived(text));
}

inline ClusterObject cluster_of(const Label& x) {
    return normalize_cluster(DerivedObject{x, 0});
}

// The orbit-category translation restricted to normal forms; bijective.
inline ClusterObject tau_cluster(const ClusterObject& x, int power = 1) {
    return normalize_cluster(tau_derived(as_derived(x), power));
}

// Index of the projective/injective orbit a connecting object belongs to.
inline std::optional<int> orbit_index(const ClusterObject& x) {
    switch (component_of(x.label)) {
        case Component::Preprojective:
            return preprojective_position(x.label).t;
        case Component::Preinjective:
            return preinjective_position(x.label).t;
        case Component::Regular:
            return std::nullopt;
    }
    return std::nullopt;
}

inline bool in_connecting_component(const ClusterObject& x) {
    return component_of(x.label) != Component::Regular;
}

// Coordinates on the connecting component: the orbit index t together with a
// level z that decreases by one under the translation.  The s-th inverse
// translate of the t-th projective sits at z = s >= 0; the s-th translate of
// the t-th injective (at shift -1) sits at z = -1 - s < 0.
struct ConnectingPos {
    int t;
    int z;

    friend auto operator<=>(const ConnectingPos&, const ConnectingPos&) = default;
};

inline ConnectingPos connecting_position(const ClusterObject& x) {
    switch (component_of(x.label)) {
        case Component::Preprojective: {
            const OrbitPosition p = preprojective_position(x.label);
            return {p.t, p.s};
        }
        case Component::Preinjective: {
            const OrbitPosition p = preinjective_position(x.label);
            return {p.t, -1 - p.s};
        }
        case Component::Regular:
            break;
    }
    throw std::invalid_argument("connecting_position: " + to_string(x) +
                                " is regular");
}

inline ClusterObject connecting_object(const ConnectingPos& pos) {
    if (pos.z >= 0) return {preprojective_orbit_label(pos.t, pos.z), 0};
    return {preinjective_orbit_label(pos.t, -1 - pos.z), -1};
}

inline ClusterObject connecting_object(int t, int z) {
    return connecting_object(ConnectingPos{t, z});
}

}  // namespace dinfty
