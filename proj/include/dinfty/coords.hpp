#pragma once

// Coordinate systems on the AR quiver components.
//
// Regular component: a copy of ZA-infinity.  Each regular label gets integer
// coordinates (p, q) where q >= 1 is the quasi-length (row), p indexes the
// tau-orbit position within the row, and the translation acts by
// (p, q) -> (p - 1, q).  The bottom row q = 1 consists of the quasi-simples.
//
// Connecting orbits: closed-form labels for iterated translates of the
// projectives and injectives.  These are derived data; the tests certify them
// against iterated catalog lookup.

#include <stdexcept>

#include "dinfty/labels.hpp"

namespace dinfty {

struct RegularCoords {
    int p;
    int q;  // quasi-length, >= 1

    friend auto operator<=>(const RegularCoords&, const RegularCoords&) = default;
};

inline RegularCoords regular_coords(const Label& x) {
    validate(x);
    if (component_of(x) != Component::Regular)
        throw std::invalid_argument("regular_coords: " + to_string(x) +
                                    " is not regular");
    if (x.kind == LabelKind::A) {
        const int q = (x.m - x.n + 1) / 2;
        const int p = (x.n % 2 == 0) ? x.n / 2 : -(x.m - 2) / 2;
        return {p, q};
    }
    const int q = (x.n + x.m - 1) / 2;
    const int p = (x.n % 2 == 1) ? -(x.m - 2) / 2 : -(x.n - 2) / 2;
    return {p, q};
}

inline Label regular_label(const RegularCoords& c) {
    if (c.q < 1) throw std::invalid_argument("regular_label: quasi-length < 1");
    if (c.p >= 1) return label_a(2 * c.p, 2 * c.p + 2 * c.q - 1);
    if (c.p == 0) return c.q == 1 ? label_b(1, 2) : label_b(2, 2 * c.q - 1);
    const int r = -c.p;
    if (c.q <= r) return label_a(2 * (r - c.q) + 3, 2 * r + 2);
    if (c.q <= 2 * r + 1) return label_b(2 * (c.q - r) - 1, 2 * r + 2);
    return label_b(2 * r + 2, 2 * (c.q - r) - 1);
}

inline Label regular_label(int p, int q) { return regular_label(RegularCoords{p, q}); }

inline int quasi_length(const Label& x) { return regular_coords(x).q; }

inline bool is_quasi_simple(const Label& x) {
    return component_of(x) == Component::Regular && regular_coords(x).q == 1;
}

inline Label quasi_simple(int p) { return regular_label(p, 1); }

// The infinite wing below-and-right of nothing: W(S) for a quasi-simple S at
// (p, 1) consists of the Y whose bottom-row shadow [p_Y, p_Y + q_Y - 1]
// contains p, i.e. the upward cone over S.
inline bool wing_contains(const Label& s, const Label& y) {
    const RegularCoords cs = regular_coords(s);
    if (cs.q != 1)
        throw std::invalid_argument("wing_contains: " + to_string(s) +
                                    " is not quasi-simple");
    const RegularCoords cy = regular_coords(y);
    return cy.p <= cs.p && cy.p + cy.q >= cs.p + 1;
}

// Nonzero-morphism region between regular labels: Y lies in the forward
// rectangle of X when p_X <= p_Y <= p_X + q_X - 1 and p_Y + q_Y >= p_X + q_X.
inline bool in_forward_rectangle(const Label& x, const Label& y) {
    const RegularCoords a = regular_coords(x);
    const RegularCoords b = regular_coords(y);
    return a.p <= b.p && b.p <= a.p + a.q - 1 && b.p + b.q >= a.p + a.q;
}

inline bool in_backward_rectangle(const Label& x, const Label& y) {
    return in_forward_rectangle(y, x);
}

// Label of the s-th inverse translate of the t-th projective, s >= 0.
inline Label preprojective_orbit_label(int t, int s) {
    if (t < 0 || s < 0) throw std::invalid_argument("orbit label: t, s must be >= 0");
    if (t == 0) return s % 2 == 0 ? label_a1(2 * s + 1) : label_a0(2 * s + 1);
    if (t == 1) return s % 2 == 0 ? label_a0(2 * s + 1) : label_a1(2 * s + 1);
    if (t == 2) return label_b(2 * s + 1, 2 * s + 3);
    if (t % 2 == 1) {
        if (2 * s <= t - 3) return label_a(t - 2 * s, t + 2 * s);
        return label_b(2 * s - t + 2, 2 * s + t);
    }
    if (2 * s <= t - 4) return label_a(t - 1 - 2 * s, t + 1 + 2 * s);
    return label_b(2 * s - t + 3, 2 * s + t + 1);
}

// Label of the s-th translate of the t-th injective, s >= 0.
inline Label preinjective_orbit_label(int t, int s) {
    if (t < 0 || s < 0) throw std::invalid_argument("orbit label: t, s must be >= 0");
    if (t == 0) return s % 2 == 0 ? label_a1(2 * s + 2) : label_a0(2 * s + 2);
    if (t == 1) return s % 2 == 0 ? label_a0(2 * s + 2) : label_a1(2 * s + 2);
    if (t == 2) return s == 0 ? label_a(2, 2) : label_b(2 * s, 2 * s + 2);
    if (t % 2 == 1) {
        if (2 * s <= t - 3) return label_a(t - 1 - 2 * s, t + 1 + 2 * s);
        return label_b(2 * s - t + 3, 2 * s + t + 1);
    }
    if (2 * s <= t - 2) return label_a(t - 2 * s, t + 2 * s);
    return label_b(2 * s - t + 2, 2 * s + t);
}

struct OrbitPosition {
    int t;  // orbit: index of the projective / injective generating it
    int s;  // number of translation steps away from it

    friend auto operator<=>(const OrbitPosition&, const OrbitPosition&) = default;
};

// Inverse of preprojective_orbit_label.
inline OrbitPosition preprojective_position(const Label& x) {
    validate(x);
    if (component_of(x) != Component::Preprojective)
        throw std::invalid_argument("preprojective_position: " + to_string(x) +
                                    " is not preprojective");
    switch (x.kind) {
        case LabelKind::A0: {
            const int s = (x.m - 1) / 2;
            return {s % 2 == 0 ? 1 : 0, s};
        }
        case LabelKind::A1: {
            const int s = (x.m - 1) / 2;
            return {s % 2 == 0 ? 0 : 1, s};
        }
        case LabelKind::A: {
            const int t = (x.n + x.m) / 2;
            const int s = (x.m - x.n) % 4 == 0 ? (x.m - x.n) / 4 : (x.m - x.n - 2) / 4;
            return {t, s};
        }
        case LabelKind::B: {
            const int t = (x.m - x.n + 2) / 2;
            int s;
            if (t == 2)
                s = (x.n - 1) / 2;
            else if (t % 2 == 1)
                s = (x.n + t - 2) / 2;
            else
                s = (x.n + t - 3) / 2;
            return {t, s};
        }
    }
    throw std::logic_error("unreachable");
}

// Inverse of preinjective_orbit_label.
inline OrbitPosition preinjective_position(const Label& x) {
    validate(x);
    if (component_of(x) != Component::Preinjective)
        throw std::invalid_argument("preinjective_position: " + to_string(x) +
                                    " is not preinjective");
    switch (x.kind) {
        case LabelKind::A0: {
            const int s = (x.m - 2) / 2;
            return {s % 2 == 0 ? 1 : 0, s};
        }
        case LabelKind::A1: {
            const int s = (x.m - 2) / 2;
            return {s % 2 == 0 ? 0 : 1, s};
        }
        case LabelKind::A: {
            const int t = (x.n + x.m) / 2;
            const int s = (x.m - x.n) % 4 == 0 ? (x.m - x.n) / 4 : (x.m - x.n - 2) / 4;
            return {t, s};
        }
        case LabelKind::B: {
            const int t = (x.m - x.n + 2) / 2;
            int s;
            if (t == 2)
                s = x.n / 2;
            else if (t % 2 == 1)
                s = (x.n + t - 3) / 2;
            else
                s = (x.n + t - 2) / 2;
            return {t, s};
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace dinfty
