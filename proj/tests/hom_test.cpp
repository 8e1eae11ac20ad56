#include <doctest.h>

#include "dinfty/hom.hpp"

using namespace dinfty;

namespace {
HomEngine& engine() {
    static HomEngine e(make_oracle("gfp", 1009, 12));
    return e;
}
}  // namespace

TEST_CASE("rep-level dimensions, pinned examples") {
    auto& e = engine();
    CHECK(e.hom_rep(label_a1(1), label_a0(3)) == HomAnswer{0, HomMethod::Formula});
    CHECK(e.hom_rep(label_a(5, 5), label_b(5, 7)) == HomAnswer{2, HomMethod::Formula});
    CHECK(e.hom_rep(label_a(5, 5), label_a(7, 8)) == HomAnswer{0, HomMethod::Formula});
    CHECK(e.hom_rep(label_a1(1), label_b(1, 2)) == HomAnswer{1, HomMethod::Formula});
    CHECK(e.hom_rep(label_b(1, 3), label_b(3, 5)).dim == 2);
    CHECK(e.hom_rep(label_b(1, 2), label_b(2, 3)).dim == 1);
    CHECK(e.ext1_rep(label_a(2, 3), label_b(1, 2)).dim == 1);
    CHECK(e.ext1_rep(label_a1(1), label_b(1, 2)) ==
          HomAnswer{0, HomMethod::ZeroRule});
}

TEST_CASE("zero rules and fallback routing") {
    auto& e = engine();
    CHECK(e.hom_rep(label_a1(2), label_a1(1)) == HomAnswer{0, HomMethod::ZeroRule});
    CHECK(e.hom_rep(label_a(2, 2), label_b(1, 2)) ==
          HomAnswer{0, HomMethod::ZeroRule});
    CHECK(e.hom_rep(label_b(1, 2), label_a1(1)) == HomAnswer{0, HomMethod::ZeroRule});
    const HomAnswer into_inj = e.hom_rep(label_a1(1), label_a1(2));
    CHECK(into_inj.method == HomMethod::OracleFallback);
    CHECK(into_inj.dim == 1);
}

TEST_CASE("closed forms agree with the oracle on a window") {
    auto& e = engine();
    AnyOracle o = make_oracle("gfp", 1009, 12);
    int formula_pairs = 0;
    for (const Label& x : labels_in_window(10)) {
        for (const Label& y : labels_in_window(10)) {
            const HomAnswer a = e.hom_rep(x, y);
            if (a.method == HomMethod::OracleFallback) continue;
            INFO(to_string(x), " -> ", to_string(y));
            CHECK(a.dim == o.hom(x, y));
            ++formula_pairs;
        }
    }
    CHECK(formula_pairs > 5000);
}

TEST_CASE("regular-to-regular spaces are at most one dimensional") {
    auto& e = engine();
    for (const Label& x : labels_in_window(9)) {
        if (component_of(x) != Component::Regular) continue;
        for (const Label& y : labels_in_window(9)) {
            if (component_of(y) != Component::Regular) continue;
            CHECK(e.hom_rep(x, y).dim <= 1);
        }
    }
}
