#include <doctest.h>

#include "octobil/catalog.hpp"
#include "octobil/restriction.hpp"
#include "test_support.hpp"

using namespace octobil;
using octobil::testing::random_vector;

TEST_CASE("slot pattern dimensions and indices") {
    const struct {
        const char* token;
        int dim;
        std::vector<int> indices;
    } shapes[] = {
        {"0", 0, {}},
        {"r", 1, {0}},
        {"z", 2, {0, 1}},
        {"q", 4, {0, 1, 2, 3}},
        {"o", 8, {0, 1, 2, 3, 4, 5, 6, 7}},
        {"rq", 5, {0, 4, 5, 6, 7}},
        {"rz", 3, {0, 4, 5}},
        {"rzq", 7, {0, 2, 3, 4, 5, 6, 7}},
    };
    for (const auto& s : shapes) {
        const auto p = SlotPattern::parse(s.token);
        CAPTURE(s.token);
        CHECK(p.dim() == s.dim);
        CHECK(p.indices() == s.indices);
        CHECK(p.token() == s.token);
    }
    CHECK_THROWS_AS(SlotPattern::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(SlotPattern::parse("qr"), std::invalid_argument);

    const auto sp = SubspacePattern::parse("rq,o,o,0");
    CHECK(sp.dim() == 21);
    CHECK(sp.str() == "rq,o,o,0");
    const auto idx = sp.coordinate_indices(8);
    CHECK(idx.size() == 21);
    CHECK(idx[0] == 0);
    CHECK(idx[1] == 4);   // second doubling half of slot 0
    CHECK(idx[5] == 8);   // slot 1 starts
    CHECK(idx.back() == 23);
}

TEST_CASE("image span dimensions") {
    CHECK(image_span(*builtin("commutator_map")).dimension == 7);
    CHECK(image_span(*builtin("octonion_mul")).dimension == 8);
    CHECK(image_span(*builtin("complex_mul")).dimension == 2);
    CHECK(image_span(*builtin("quaternion_mul")).dimension == 4);
    CHECK(image_span(*builtin("real_mul")).dimension == 1);
    CHECK(image_span(*builtin("poly_mul(3,3)")).dimension == 5);
    CHECK(image_span(*builtin("main_f")).dimension == 55);

    // never exceeds the codomain; exact equality for the algebra products
    for (const auto& id : builtin_ids()) {
        const auto m = builtin(id);
        CAPTURE(id);
        CHECK(image_span(*m).dimension <= m->k());
    }
}

TEST_CASE("restriction computes dims and inherits evaluation") {
    const auto main_f = builtin("main_f");

    RestrictedMap r1(main_f, SubspacePattern::parse("o,o,o,0"), SubspacePattern::parse("o,o,o,o"));
    CHECK(r1.r() == 24);
    CHECK(r1.s() == 32);
    CHECK(r1.k() == 47);

    RestrictedMap r7(main_f, SubspacePattern::parse("z,o,o,o"), SubspacePattern::parse("z,o,o,o"));
    CHECK(r7.r() == 26);
    CHECK(r7.s() == 26);
    CHECK(r7.k() == 48);

    // restricted evaluation is the parent evaluation on embedded inputs
    CounterRng rng(301, 0);
    const auto x = random_vector(rng, r1.r());
    const auto y = random_vector(rng, r1.s());
    CHECK(r1.evaluate_raw(x, y) == main_f->evaluate(r1.embed_a(x), r1.embed_b(y)));

    // a full-pattern restriction only compresses the codomain
    RestrictedMap full(main_f, SubspacePattern::full(4), SubspacePattern::full(4));
    CHECK(full.r() == 32);
    CHECK(full.s() == 32);
    CHECK(full.k() == 55);

    CHECK_THROWS_AS(RestrictedMap(main_f, SubspacePattern::parse("o,o,o"), SubspacePattern::full(4)),
                    std::invalid_argument);
}

TEST_CASE("compression soundness: raw output lies in the span and round-trips") {
    const auto main_f = builtin("main_f");
    RestrictedMap rm(main_f, SubspacePattern::parse("rq,o,o,0"), SubspacePattern::parse("rq,o,o,o"));
    const auto& span = rm.codomain_span();

    IncrementalSpan check(main_f->k());
    for (int i = 0; i < span.basis.rows(); ++i) check.add(span.basis.row(i));

    CounterRng rng(303, 0);
    for (int t = 0; t < 200; ++t) {
        const auto x = random_vector(rng, rm.r());
        const auto y = random_vector(rng, rm.s());
        const auto raw = rm.evaluate_raw(x, y);
        CHECK(check.contains(raw));
        CHECK(rm.expand(rm.evaluate(x, y)) == raw);
    }
}

TEST_CASE("adding coordinates to a pattern never shrinks the span") {
    const auto main_f = builtin("main_f");
    const char* chain[] = {"r,o,o,0", "rz,o,o,0", "rzq,o,o,0", "o,o,o,0", "o,o,o,o"};
    int prev = 0;
    for (const char* a : chain) {
        RestrictedMap rm(main_f, SubspacePattern::parse(a), SubspacePattern::full(4));
        CHECK(rm.k() >= prev);
        prev = rm.k();
    }
    CHECK(prev == 55);
}

TEST_CASE("newnbl table rows") {
    const auto rows = newnbl_table();
    REQUIRE(rows.size() == 7);

    const struct {
        const char* id;
        int r, s, k;
        bool match;
    } expected[] = {
        {"r1", 24, 32, 47, true},  {"r2", 21, 29, 43, true}, {"r3", 19, 27, 41, true},
        {"r4", 19, 31, 45, true},  {"r5", 23, 29, 47, false}, {"r6", 29, 29, 51, true},
        {"r7", 26, 26, 48, true},
    };
    for (size_t i = 0; i < rows.size(); ++i) {
        CAPTURE(rows[i].row_id);
        CHECK(rows[i].row_id == expected[i].id);
        CHECK(rows[i].computed_r == expected[i].r);
        CHECK(rows[i].computed_s == expected[i].s);
        CHECK(rows[i].computed_k == expected[i].k);
        CHECK(rows[i].match == expected[i].match);
    }

    // the mismatching row reports the discrepancy and the alternative reading
    const auto& r5 = rows[4];
    CHECK(r5.claimed_s == 27);
    CHECK(r5.claimed_k == 45);
    CHECK(r5.note.find("differs from claimed") != std::string::npos);
    CHECK(r5.note.find("rz") != std::string::npos);

    const auto alt = newnbl_r5_alternative();
    REQUIRE(alt.has_value());
    CHECK(alt->computed_r == 23);
    CHECK(alt->computed_s == 27);
    CHECK(alt->computed_k == 45);
}

TEST_CASE("restricted maps stay nonsingular on sampled points") {
    // spot check: a restriction of a nonsingular map cannot hit zero on
    // nonzero pairs; sampled here, fuzzed at scale in the acceptance suite
    const auto rows = newnbl_table();
    CounterRng rng(307, 0);
    for (const auto& row : rows) {
        for (int t = 0; t < 25; ++t) {
            std::vector<Rational> x, y;
            do {
                x = random_vector(rng, row.map->r());
            } while (octobil::testing::is_zero_vector(x));
            do {
                y = random_vector(rng, row.map->s());
            } while (octobil::testing::is_zero_vector(y));
            CAPTURE(row.row_id);
            CHECK(!octobil::testing::is_zero_vector(row.map->evaluate(x, y)));
        }
    }
}
