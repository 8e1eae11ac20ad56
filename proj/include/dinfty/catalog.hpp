#pragma once

// Almost-split (Auslander-Reiten) sequence catalog for rep(Q).
//
// The catalog is a finite list of parametrized families, instantiated lazily
// up to a support bound.  Every other translation-like operation (tau on
// labels, AR-quiver arrows, orbit walks) is *derived* from this one table by
// lookup, so there is a single point of truth for the mesh structure.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dinfty/labels.hpp"

namespace dinfty {

struct ARSequence {
    Label left;
    std::vector<Label> middle;  // 1..3 summands, kept sorted (A0 < A1 < A < B)
    Label right;

    friend auto operator<=>(const ARSequence&, const ARSequence&) = default;
};

inline ARSequence make_sequence(const Label& left, std::vector<Label> middle,
                                const Label& right) {
    validate(left);
    validate(right);
    if (middle.empty() || middle.size() > 3)
        throw std::invalid_argument("sequence middle must have 1..3 summands");
    for (const Label& m : middle) validate(m);
    std::sort(middle.begin(), middle.end());
    return ARSequence{left, std::move(middle), right};
}

inline std::string to_string(const ARSequence& s) {
    std::string out = "0 -> " + to_string(s.left) + " -> ";
    for (std::size_t i = 0; i < s.middle.size(); ++i) {
        if (i) out += " (+) ";
        out += to_string(s.middle[i]);
    }
    out += " -> " + to_string(s.right) + " -> 0";
    return out;
}

// All catalog instances in which every parameter stays small enough that at
// least one term has support inside [0, bound].  Since the supports of the
// terms of one sequence differ by at most 4, this criterion makes the list
// complete for any query about a label supported within the bound.
inline std::vector<ARSequence> generate_sequences(int bound) {
    std::vector<ARSequence> out;
    auto add = [&](const Label& l, std::vector<Label> mid, const Label& r) {
        ARSequence s = make_sequence(l, std::move(mid), r);
        int lo = max_support(s.left);
        for (const Label& m : s.middle) lo = std::min(lo, max_support(m));
        lo = std::min(lo, max_support(s.right));
        if (lo <= bound) out.push_back(std::move(s));
    };

    // Sequences among labels with odd parameters.
    for (int i = 1; i <= bound; i += 2) {
        add(label_a0(i), {label_b(i, i + 2)}, label_a1(i + 2));
        add(label_a1(i), {label_b(i, i + 2)}, label_a0(i + 2));
        add(label_b(i, i + 2), {label_a0(i + 2), label_a1(i + 2), label_b(i, i + 4)},
            label_b(i + 2, i + 4));
    }
    for (int i = 3; i <= bound; i += 2)
        add(label_a(3, i), {label_b(1, i), label_a(3, i + 2)}, label_b(1, i + 2));
    for (int j = 5; j <= bound; j += 2)
        for (int i = 5; i <= j; i += 2)
            add(label_a(i, j), {label_a(i - 2, j), label_a(i, j + 2)},
                label_a(i - 2, j + 2));
    for (int j = 5; j <= bound; j += 2)
        for (int i = 1; i < j - 2; i += 2)
            add(label_b(i, j), {label_b(i + 2, j), label_b(i, j + 2)},
                label_b(i + 2, j + 2));

    // Sequences among labels with even parameters.
    if (bound >= 2)
        add(label_b(2, 4), {label_a0(2), label_a1(2), label_a(2, 4)}, label_a(2, 2));
    for (int i = 2; i <= bound; i += 2) {
        add(label_a0(i + 2), {label_b(i, i + 2)}, label_a1(i));
        add(label_a1(i + 2), {label_b(i, i + 2)}, label_a0(i));
        add(label_b(i + 2, i + 4), {label_a0(i + 2), label_a1(i + 2), label_b(i, i + 4)},
            label_b(i, i + 2));
    }
    for (int i = 4; i <= bound; i += 2)
        add(label_b(2, i + 2), {label_b(2, i), label_a(2, i + 2)}, label_a(2, i));
    for (int j = 4; j <= bound; j += 2)
        for (int i = 4; i <= j; i += 2)
            add(label_a(i - 2, j + 2), {label_a(i - 2, j), label_a(i, j + 2)},
                label_a(i, j));
    for (int j = 6; j <= bound; j += 2)
        for (int i = 2; i < j - 2; i += 2)
            add(label_b(i + 2, j + 2), {label_b(i + 2, j), label_b(i, j + 2)},
                label_b(i, j));

    // Sequences among labels with mixed-parity parameters.
    if (bound >= 2) {
        add(label_a(3, 4), {label_b(1, 4)}, label_b(1, 2));
        add(label_b(1, 2), {label_b(2, 3)}, label_a(2, 3));
    }
    for (int i = 1; i <= bound; i += 2)
        add(label_b(i, i + 3), {label_b(i + 2, i + 3), label_b(i, i + 1)},
            label_b(i + 1, i + 2));
    for (int i = 2; i <= bound; i += 2)
        add(label_b(i + 1, i + 2), {label_b(i + 2, i + 3), label_b(i, i + 1)},
            label_b(i, i + 3));
    for (int i = 3; i <= bound; i += 2)
        add(label_a(i + 2, i + 3), {label_a(i, i + 3)}, label_a(i, i + 1));
    for (int i = 2; i <= bound; i += 2)
        add(label_a(i, i + 1), {label_a(i, i + 3)}, label_a(i + 2, i + 3));
    for (int j = 4; j <= bound; j += 2)
        for (int i = 3; i <= j - 3; i += 2)
            add(label_a(i + 2, j + 2), {label_a(i, j + 2), label_a(i + 2, j)},
                label_a(i, j));
    for (int j = 5; j <= bound; j += 2)
        for (int i = 2; i <= j - 3; i += 2)
            add(label_a(i, j), {label_a(i, j + 2), label_a(i + 2, j)},
                label_a(i + 2, j + 2));
    for (int j = 4; j <= bound; j += 2)
        add(label_a(3, j + 2), {label_b(1, j + 2), label_a(3, j)}, label_b(1, j));
    for (int j = 3; j <= bound; j += 2)
        add(label_b(2, j), {label_b(2, j + 2), label_a(2, j)}, label_a(2, j + 2));
    for (int j = 4; j <= bound; j += 2)
        for (int i = 3; i < j; i += 2)
            add(label_b(i - 2, j + 2), {label_b(i, j + 2), label_b(i - 2, j)},
                label_b(i, j));
    for (int j = 5; j <= bound; j += 2)
        for (int i = 4; i < j; i += 2)
            add(label_b(i, j), {label_b(i, j + 2), label_b(i - 2, j)},
                label_b(i - 2, j + 2));

    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Lazily grown, single-valued index over the catalog.
class Catalog {
   public:
    // Every catalog instance with at least one term supported within bound.
    std::vector<ARSequence> sequences(int bound) {
        ensure(bound);
        std::vector<ARSequence> res;
        for (const ARSequence& s : seqs_) {
            int lo = max_support(s.left);
            for (const Label& m : s.middle) lo = std::min(lo, max_support(m));
            lo = std::min(lo, max_support(s.right));
            if (lo <= bound) res.push_back(s);
        }
        return res;
    }

    // Sequences having x as left, middle, or right term.
    std::vector<ARSequence> through(const Label& x) {
        validate(x);
        ensure(max_support(x));
        std::vector<ARSequence> res;
        for (const ARSequence& s : seqs_) {
            const bool hit = s.left == x || s.right == x ||
                             std::find(s.middle.begin(), s.middle.end(), x) !=
                                 s.middle.end();
            if (hit) res.push_back(s);
        }
        return res;
    }

    // Left term of the sequence ending at x; empty iff x is projective.
    std::optional<Label> tau(const Label& x) {
        validate(x);
        ensure(max_support(x));
        auto it = by_right_.find(x);
        if (it == by_right_.end()) {
            if (!is_projective(x))
                throw std::logic_error("catalog not total: no sequence ends at " +
                                       to_string(x));
            return std::nullopt;
        }
        return seqs_[it->second].left;
    }

    // Right term of the sequence starting at x; empty iff x is injective.
    std::optional<Label> tau_inv(const Label& x) {
        validate(x);
        ensure(max_support(x));
        auto it = by_left_.find(x);
        if (it == by_left_.end()) {
            if (!is_injective(x))
                throw std::logic_error("catalog not total: no sequence starts at " +
                                       to_string(x));
            return std::nullopt;
        }
        return seqs_[it->second].right;
    }

    // The sequence ending at x, if any.
    std::optional<ARSequence> sequence_ending_at(const Label& x) {
        validate(x);
        ensure(max_support(x));
        auto it = by_right_.find(x);
        if (it == by_right_.end()) return std::nullopt;
        return seqs_[it->second];
    }

    std::optional<ARSequence> sequence_starting_at(const Label& x) {
        validate(x);
        ensure(max_support(x));
        auto it = by_left_.find(x);
        if (it == by_left_.end()) return std::nullopt;
        return seqs_[it->second];
    }

   private:
    void ensure(int bound) {
        // Headroom so that a sequence *through* a label near the bound is
        // present even when its defining parameter is a little larger.
        bound = std::max(bound + 4, 8);
        if (bound <= bound_) return;
        seqs_ = generate_sequences(bound);
        by_right_.clear();
        by_left_.clear();
        for (std::size_t idx = 0; idx < seqs_.size(); ++idx) {
            const ARSequence& s = seqs_[idx];
            auto [rit, rnew] = by_right_.emplace(s.right, idx);
            if (!rnew)
                throw std::logic_error("catalog not single-valued at right term " +
                                       to_string(s.right));
            auto [lit, lnew] = by_left_.emplace(s.left, idx);
            if (!lnew)
                throw std::logic_error("catalog not single-valued at left term " +
                                       to_string(s.left));
            if (is_projective(s.right))
                throw std::logic_error("catalog sequence ends at projective " +
                                       to_string(s.right));
            if (is_injective(s.left))
                throw std::logic_error("catalog sequence starts at injective " +
                                       to_string(s.left));
        }
        bound_ = bound;
    }

    int bound_ = 0;
    std::vector<ARSequence> seqs_;
    std::map<Label, std::size_t> by_right_;
    std::map<Label, std::size_t> by_left_;
};

inline Catalog& catalog() {
    static Catalog c;
    return c;
}

inline std::vector<ARSequence> ar_sequences_through(const Label& x) {
    return catalog().through(x);
}

inline std::optional<Label> tau_rep(const Label& x) { return catalog().tau(x); }

inline std::optional<Label> tau_rep_inv(const Label& x) {
    return catalog().tau_inv(x);
}

// Iterated translation; power may be negative.  Throws when the orbit leaves
// the module category (walks past a projective or injective).
inline Label tau_rep_power(Label x, int power) {
    while (power > 0) {
        auto t = tau_rep(x);
        if (!t) throw std::invalid_argument("tau undefined on projective " + to_string(x));
        x = *t;
        --power;
    }
    while (power < 0) {
        auto t = tau_rep_inv(x);
        if (!t) throw std::invalid_argument("tau inverse undefined on injective " + to_string(x));
        x = *t;
        ++power;
    }
    return x;
}

}  // namespace dinfty
