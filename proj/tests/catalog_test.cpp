#include <doctest.h>

#include "dinfty/catalog.hpp"
#include "dinfty/oracle.hpp"

using namespace dinfty;

TEST_CASE("catalog spot checks") {
    auto& cat = catalog();

    auto end_b12 = cat.sequence_ending_at(label_b(1, 2));
    REQUIRE(end_b12.has_value());
    CHECK(to_string(*end_b12) == "0 -> A(3,4) -> B(1,4) -> B(1,2) -> 0");

    CHECK(tau_rep(label_b(1, 2)) == label_a(3, 4));
    CHECK_FALSE(tau_rep(label_a(5, 5)).has_value());
    CHECK(tau_rep(label_a(2, 2)) == label_b(2, 4));
    CHECK(tau_rep_inv(label_a(3, 4)) == label_b(1, 2));
    CHECK_FALSE(tau_rep_inv(label_a1(2)).has_value());
    CHECK(tau_rep_inv(label_b(1, 3)) == label_b(3, 5));
    CHECK(tau_rep(label_b(2, 4)) == label_b(4, 6));
    CHECK(tau_rep_power(label_a(3, 7), 1) == label_a(5, 5));

    auto start_p0 = cat.sequence_starting_at(label_a1(1));
    REQUIRE(start_p0.has_value());
    CHECK(to_string(*start_p0) == "0 -> A1(1) -> B(1,3) -> A0(3) -> 0");

    auto end_a22 = cat.sequence_ending_at(label_a(2, 2));
    REQUIRE(end_a22.has_value());
    CHECK(to_string(*end_a22) ==
          "0 -> B(2,4) -> A0(2) (+) A1(2) (+) A(2,4) -> A(2,2) -> 0");

    // B(1,2) occurs as a right term, a left term, and a middle summand.
    auto through = ar_sequences_through(label_b(1, 2));
    CHECK(through.size() == 3);
}

TEST_CASE("translation is total, single-valued, and component preserving") {
    for (const Label& x : labels_in_window(14)) {
        if (is_projective(x)) {
            CHECK_FALSE(tau_rep(x).has_value());
        } else {
            auto t = tau_rep(x);
            REQUIRE(t.has_value());
            CHECK(component_of(*t) == component_of(x));
            CHECK(tau_rep_inv(*t) == x);
        }
        if (is_injective(x)) {
            CHECK_FALSE(tau_rep_inv(x).has_value());
        } else {
            auto u = tau_rep_inv(x);
            REQUIRE(u.has_value());
            CHECK(component_of(*u) == component_of(x));
            CHECK(tau_rep(*u) == x);
        }
    }
}

TEST_CASE("every cataloged sequence passes the oracle checks") {
    Oracle<GfpField> o(GfpField{1009}, 16);
    int count = 0;
    for (const ARSequence& s : catalog().sequences(10)) {
        CheckReport r = o.validate_sequence(s.left, s.middle, s.right);
        INFO(to_string(s), ": ", r.detail);
        CHECK(r.pass);
        ++count;
    }
    CHECK(count > 100);
}

TEST_CASE("ext agrees with the translation formula") {
    Oracle<GfpField> o(GfpField{1009}, 13);
    for (const Label& x : labels_in_window(9)) {
        if (is_projective(x)) continue;
        const Label tx = *tau_rep(x);
        for (const Label& y : labels_in_window(9))
            CHECK(o.ext1(x, y) == o.hom(y, tx));
    }
}

TEST_CASE("hom dimensions are translation invariant") {
    Oracle<GfpField> o(GfpField{1009}, 13);
    for (const Label& x : labels_in_window(9)) {
        if (is_injective(x)) continue;
        for (const Label& y : labels_in_window(9)) {
            if (is_injective(y)) continue;
            CHECK(o.hom(x, y) == o.hom(*tau_rep_inv(x), *tau_rep_inv(y)));
        }
    }
}
