#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Core>

/// Core combinatorics of the infinite zigzag quiver of type D:
/// vertices 0,1,2,3,... with arrows 2->0, 2->1, 2->3 and, for every even
/// v >= 4, v->v-1 and v->v+1.  Even vertices >= 2 are sources, vertex 0
/// and the odd vertices are sinks.  The indecomposable representations
/// are named by four label families (A0, A1, A, B) defined by their
/// dimension vectors below.
namespace dinfty {

// ---------------------------------------------------------------------------
// Quiver
// ---------------------------------------------------------------------------

/// True when v emits arrows (v = 2 or any even v >= 4).
inline bool is_source_vertex(int v) { return v >= 2 && v % 2 == 0; }

/// All arrows x->y of the truncated quiver on vertices {0..n_max}.
inline std::vector<std::pair<int, int>> quiver_arrows(int n_max) {
    std::vector<std::pair<int, int>> arrows;
    if (n_max >= 2) {
        arrows.emplace_back(2, 0);
        arrows.emplace_back(2, 1);
        if (n_max >= 3) arrows.emplace_back(2, 3);
    }
    for (int v = 4; v <= n_max; v += 2) {
        arrows.emplace_back(v, v - 1);
        if (v + 1 <= n_max) arrows.emplace_back(v, v + 1);
    }
    return arrows;
}

// ---------------------------------------------------------------------------
// Labels
// ---------------------------------------------------------------------------

/// The four families of indecomposable representations.
enum class LabelKind : std::uint8_t { A0 = 0, A1 = 1, A = 2, B = 3 };

/// Name of one indecomposable representation.
///
///   A0(m) : dim 1 on vertices 1..m           (m >= 1)
///   A1(m) : dim 1 on {0} and 2..m            (m >= 1)
///   A(n,m): dim 1 on vertices n..m           (2 <= n <= m)
///   B(n,m): dim 2 on 2..n, dim 1 on {0,1} and n+1..m   (1 <= n < m)
///
/// One-parameter families keep n = 0.
struct Label {
    LabelKind kind;
    int n;
    int m;

    friend auto operator<=>(const Label&, const Label&) = default;
};

inline Label label_a0(int m) { return {LabelKind::A0, 0, m}; }
inline Label label_a1(int m) { return {LabelKind::A1, 0, m}; }
inline Label label_a(int n, int m) { return {LabelKind::A, n, m}; }
inline Label label_b(int n, int m) { return {LabelKind::B, n, m}; }

inline bool is_valid(const Label& x) {
    switch (x.kind) {
        case LabelKind::A0:
        case LabelKind::A1: return x.n == 0 && x.m >= 1;
        case LabelKind::A: return 2 <= x.n && x.n <= x.m;
        case LabelKind::B: return 1 <= x.n && x.n < x.m;
    }
    return false;
}

/// Throws std::invalid_argument naming the offending label.
inline void validate(const Label& x);

inline std::string to_string(const Label& x) {
    switch (x.kind) {
        case LabelKind::A0: return "A0(" + std::to_string(x.m) + ")";
        case LabelKind::A1: return "A1(" + std::to_string(x.m) + ")";
        case LabelKind::A:
            return "A(" + std::to_string(x.n) + "," + std::to_string(x.m) + ")";
        case LabelKind::B:
            return "B(" + std::to_string(x.n) + "," + std::to_string(x.m) + ")";
    }
    return "?";
}

inline void validate(const Label& x) {
    if (!is_valid(x)) throw std::invalid_argument("invalid label " + to_string(x));
}

/// Smallest vertex carrying a nonzero space.
inline int min_support(const Label& x) {
    switch (x.kind) {
        case LabelKind::A0: return 1;
        case LabelKind::A1: return 0;
        case LabelKind::A: return x.n;
        case LabelKind::B: return 0;
    }
    return 0;
}

/// Largest vertex carrying a nonzero space.
inline int max_support(const Label& x) { return x.m; }

/// Dimension vector on vertices 0..n_max (label support must fit).
inline Eigen::VectorXi dim_vector(const Label& x, int n_max) {
    validate(x);
    if (max_support(x) > n_max)
        throw std::invalid_argument("dim_vector: truncation " + std::to_string(n_max) +
                                    " too small for " + to_string(x));
    Eigen::VectorXi d = Eigen::VectorXi::Zero(n_max + 1);
    switch (x.kind) {
        case LabelKind::A0:
            for (int i = 1; i <= x.m; ++i) d[i] = 1;
            break;
        case LabelKind::A1:
            d[0] = 1;
            for (int i = 2; i <= x.m; ++i) d[i] = 1;
            break;
        case LabelKind::A:
            for (int i = x.n; i <= x.m; ++i) d[i] = 1;
            break;
        case LabelKind::B:
            d[0] = 1;
            d[1] = 1;
            for (int i = 2; i <= x.n; ++i) d[i] = 2;
            for (int i = x.n + 1; i <= x.m; ++i) d[i] = 1;
            break;
    }
    return d;
}

inline int total_dim(const Label& x) {
    switch (x.kind) {
        case LabelKind::A0:
        case LabelKind::A1: return x.m;
        case LabelKind::A: return x.m - x.n + 1;
        case LabelKind::B: return x.m + x.n;  // 2 + 2(n-1) + (m-n)
    }
    return 0;
}

// ---------------------------------------------------------------------------
// Component classification
// ---------------------------------------------------------------------------

enum class Component : std::uint8_t { Preprojective, Regular, Preinjective };

inline std::string to_string(Component c) {
    switch (c) {
        case Component::Preprojective: return "preprojective";
        case Component::Regular: return "regular";
        case Component::Preinjective: return "preinjective";
    }
    return "?";
}

/// Which Auslander-Reiten component the label lies in: two-parameter
/// families are preprojective when both parameters are odd, preinjective
/// when both are even, regular when mixed; one-parameter families follow
/// the parity of m.
inline Component component_of(const Label& x) {
    validate(x);
    switch (x.kind) {
        case LabelKind::A0:
        case LabelKind::A1:
            return (x.m % 2 != 0) ? Component::Preprojective : Component::Preinjective;
        case LabelKind::A:
        case LabelKind::B: {
            const bool n_odd = x.n % 2 != 0;
            const bool m_odd = x.m % 2 != 0;
            if (n_odd && m_odd) return Component::Preprojective;
            if (!n_odd && !m_odd) return Component::Preinjective;
            return Component::Regular;
        }
    }
    return Component::Regular;
}

// ---------------------------------------------------------------------------
// Projective / injective dictionaries
// ---------------------------------------------------------------------------

/// Label of the indecomposable projective at vertex t.
inline Label projective_label(int t) {
    if (t < 0) throw std::invalid_argument("projective_label: negative vertex");
    if (t == 0) return label_a1(1);
    if (t == 1) return label_a0(1);
    if (t == 2) return label_b(1, 3);
    if (t % 2 != 0) return label_a(t, t);
    return label_a(t - 1, t + 1);
}

/// Label of the indecomposable injective at vertex t.
inline Label injective_label(int t) {
    if (t < 0) throw std::invalid_argument("injective_label: negative vertex");
    if (t == 0) return label_a1(2);
    if (t == 1) return label_a0(2);
    if (t == 2) return label_a(2, 2);
    if (t % 2 != 0) return label_a(t - 1, t + 1);
    return label_a(t, t);
}

/// Vertex t with projective_label(t) == x, if any.
inline std::optional<int> projective_index(const Label& x) {
    switch (x.kind) {
        case LabelKind::A1: return x.m == 1 ? std::optional<int>(0) : std::nullopt;
        case LabelKind::A0: return x.m == 1 ? std::optional<int>(1) : std::nullopt;
        case LabelKind::B: return (x.n == 1 && x.m == 3) ? std::optional<int>(2) : std::nullopt;
        case LabelKind::A:
            if (x.n == x.m && x.n % 2 != 0 && x.n >= 3) return x.n;
            if (x.m == x.n + 2 && x.n % 2 != 0 && x.n >= 3) return x.n + 1;
            return std::nullopt;
    }
    return std::nullopt;
}

/// Vertex t with injective_label(t) == x, if any.
inline std::optional<int> injective_index(const Label& x) {
    switch (x.kind) {
        case LabelKind::A1: return x.m == 2 ? std::optional<int>(0) : std::nullopt;
        case LabelKind::A0: return x.m == 2 ? std::optional<int>(1) : std::nullopt;
        case LabelKind::B: return std::nullopt;
        case LabelKind::A:
            if (x.n == x.m && x.n % 2 == 0 && x.n >= 2) return x.n;
            if (x.m == x.n + 2 && x.n % 2 == 0 && x.n >= 2) return x.n + 1;
            return std::nullopt;
    }
    return std::nullopt;
}

inline bool is_projective(const Label& x) { return projective_index(x).has_value(); }
inline bool is_injective(const Label& x) { return injective_index(x).has_value(); }

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

/// Parse failure; `pos` is the 0-based offset of the offending character.
struct ParseError : std::runtime_error {
    std::size_t pos;
    ParseError(const std::string& what, std::size_t p) : std::runtime_error(what), pos(p) {}
};

namespace detail {

struct Cursor {
    std::string_view s;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& expected) const {
        std::string got = pos < s.size() ? ("'" + std::string(1, s[pos]) + "'") : "end of input";
        throw ParseError("expected " + expected + " at position " + std::to_string(pos) +
                             ", got " + got,
                         pos);
    }
    bool at_end() const { return pos >= s.size(); }
    char peek() const { return pos < s.size() ? s[pos] : '\0'; }
    void expect(char c) {
        if (at_end() || s[pos] != c) fail(std::string("'") + c + "'");
        ++pos;
    }
    int integer() {
        if (at_end() || s[pos] < '0' || s[pos] > '9') fail("digit");
        long v = 0;
        while (!at_end() && s[pos] >= '0' && s[pos] <= '9') {
            v = v * 10 + (s[pos] - '0');
            if (v > 1000000) fail("smaller integer");
            ++pos;
        }
        return static_cast<int>(v);
    }
};

inline Label parse_label_at(Cursor& c) {
    if (c.at_end() || (c.peek() != 'A' && c.peek() != 'B')) c.fail("'A' or 'B'");
    const char fam = c.peek();
    ++c.pos;
    LabelKind kind;
    if (fam == 'B') {
        kind = LabelKind::B;
    } else if (c.peek() == '0') {
        ++c.pos;
        kind = LabelKind::A0;
    } else if (c.peek() == '1') {
        ++c.pos;
        kind = LabelKind::A1;
    } else {
        kind = LabelKind::A;
    }
    c.expect('(');
    Label x{kind, 0, 0};
    if (kind == LabelKind::A0 || kind == LabelKind::A1) {
        x.m = c.integer();
    } else {
        x.n = c.integer();
        c.expect(',');
        x.m = c.integer();
    }
    c.expect(')');
    if (!is_valid(x)) throw ParseError("parameters out of range in " + to_string(x), c.pos);
    return x;
}

}  // namespace detail

/// Parse "A0(m)", "A1(m)", "A(n,m)" or "B(n,m)" (exact ASCII, no spaces).
inline Label parse_label(std::string_view s) {
    detail::Cursor c{s};
    Label x = detail::parse_label_at(c);
    if (!c.at_end()) c.fail("end of input");
    return x;
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

/// All valid labels with max support <= n_max, sorted by (kind, n, m):
/// A0 first, then A1, A, B, each family ordered lexicographically.
inline std::vector<Label> labels_in_window(int n_max) {
    std::vector<Label> out;
    for (int m = 1; m <= n_max; ++m) out.push_back(label_a0(m));
    for (int m = 1; m <= n_max; ++m) out.push_back(label_a1(m));
    for (int n = 2; n <= n_max; ++n)
        for (int m = n; m <= n_max; ++m) out.push_back(label_a(n, m));
    for (int n = 1; n <= n_max; ++n)
        for (int m = n + 1; m <= n_max; ++m) out.push_back(label_b(n, m));
    return out;
}

}  // namespace dinfty
