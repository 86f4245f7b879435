#include "lenspec/lens.hpp"
#include "lenspec/serialize.hpp"

#include "testutil.hpp"

#include <doctest.h>

#include <algorithm>
#include <optional>
#include <random>
#include <set>

using namespace lenspec;
using namespace lenspec::testutil;

TEST_CASE("parameters fold into [0, q/2] and validate the gcd")
{
    LensParams L(11, {3, 15, -4});
    CHECK(L.s() == std::vector<unsigned>{3, 4, 4});

    CHECK_THROWS_AS(LensParams(6, {2, 4}), input_error); // gcd 2
    CHECK_THROWS_AS(LensParams(4, {0, 2}), input_error); // gcd 2
    CHECK_THROWS_AS(LensParams(5, {1}), input_error);    // n = 1
    CHECK_NOTHROW(LensParams(1, {0, 0}));                // sphere
    CHECK_NOTHROW(LensParams(2, {1, 0}));
}

TEST_CASE("canonical form of the named small examples")
{
    CHECK(canonical_form(LensParams(11, {3, 4, 5})).s ==
          std::vector<unsigned>{1, 2, 4});
    CHECK(canonical_form(LensParams(11, {2, 4, 5})).s ==
          std::vector<unsigned>{1, 2, 3});
    // The q = 13 family members.
    CHECK(canonical_form(LensParams(13, {3, 4, 5, 6})).s ==
          std::vector<unsigned>{1, 2, 3, 6});
    CHECK(canonical_form(LensParams(13, {2, 4, 5, 6})).s ==
          std::vector<unsigned>{1, 2, 3, 4});
    CHECK(canonical_form(LensParams(13, {2, 3, 4, 6})).s ==
          std::vector<unsigned>{1, 2, 3, 5});
}

TEST_CASE("negating one parameter never changes the class")
{
    std::uniform_int_distribution<unsigned> qd(1, 30);
    for (int iter = 0; iter < 100; ++iter) {
        unsigned q = qd(rng());
        std::uniform_int_distribution<long> sd(0, q);
        std::vector<long> s{sd(rng()), sd(rng()), sd(rng())};
        LensParams L = [&] {
            try {
                return LensParams(q, s);
            } catch (const input_error&) {
                return LensParams(q, {1, sd(rng()), sd(rng())});
            }
        }();
        std::vector<long> flipped(L.s().begin(), L.s().end());
        flipped[0] = static_cast<long>(L.q()) - flipped[0];
        CHECK(canonical_form(L) == canonical_form(LensParams(L.q(), flipped)));
    }
}

TEST_CASE("canonical form is constant on isometry orbits")
{
    std::uniform_int_distribution<unsigned> qd(2, 24);
    int done = 0;
    while (done < 200) {
        unsigned q = qd(rng());
        std::uniform_int_distribution<long> sd(0, q - 1);
        std::vector<long> s{sd(rng()), sd(rng()), sd(rng())};
        LensParams L = [&]() -> LensParams {
            try {
                return LensParams(q, s);
            } catch (const input_error&) {
                return LensParams(q, {1, sd(rng()), sd(rng())});
            }
        }();
        // Random (t, sigma, eps) transform of the raw parameters.
        std::uniform_int_distribution<unsigned> td(1, q);
        unsigned t = td(rng());
        while (std::gcd(t, q) != 1)
            t = td(rng());
        std::vector<long> moved;
        for (unsigned v : L.s()) {
            long w = static_cast<long>((static_cast<unsigned long>(t) * v) % q);
            if (rng()() & 1)
                w = static_cast<long>(q) - w;
            moved.push_back(w);
        }
        std::shuffle(moved.begin(), moved.end(), rng());
        LensParams M(q, moved);
        CHECK(canonical_form(L) == canonical_form(M));
        CHECK(is_isometric(L, M));
        ++done;
    }
}

TEST_CASE("canonical_form is idempotent")
{
    for (unsigned q : {4u, 7u, 11u, 12u, 36u}) {
        for (const auto& c : enumerate_classes(q, 3, false)) {
            CanonicalLens again = canonical_form(c.params());
            CHECK(again == c);
        }
    }
}

TEST_CASE("isometry decisions from the data")
{
    CHECK(is_isometric(LensParams(36, {1, 3, 5, 17}),
                       LensParams(36, {1, 7, 11, 15})));
    CHECK_FALSE(is_isometric(LensParams(15, {1, 2}), LensParams(15, {1, 4})));
    LensParams self(20, {1, 3, 7});
    CHECK(is_isometric(self, self));

    CHECK_THROWS_AS(is_isometric(LensParams(5, {1, 2}), LensParams(7, {1, 2})),
                    order_mismatch);
    CHECK_THROWS_AS(
        is_isometric(LensParams(5, {1, 2}), LensParams(5, {1, 2, 2})),
        dimension_mismatch);
}

TEST_CASE("isometry agrees with the transform-search definition")
{
    std::uniform_int_distribution<unsigned> qd(2, 16);
    for (int iter = 0; iter < 300; ++iter) {
        unsigned q = qd(rng());
        std::uniform_int_distribution<long> sd(0, q - 1);
        auto make = [&]() -> std::optional<LensParams> {
            std::vector<long> s{sd(rng()), sd(rng())};
            try {
                return LensParams(q, s);
            } catch (const input_error&) {
                return std::nullopt;
            }
        };
        auto a = make();
        auto b = make();
        if (!a || !b)
            continue;
        CHECK(is_isometric(*a, *b) == isometric_by_definition(*a, *b));
    }
}

TEST_CASE("enumerate_classes on the pinned examples")
{
    CHECK(enumerate_classes(1, 2, false).size() == 1);
    CHECK(enumerate_classes(1, 4, true).size() == 1);

    auto spaces_q4 = enumerate_classes(4, 2, true);
    REQUIRE(spaces_q4.size() == 1);
    CHECK(spaces_q4[0].s == std::vector<unsigned>{1, 1});

    auto q4n3 = enumerate_classes(4, 3, false);
    bool found = false;
    for (const auto& c : q4n3)
        if (c.s == std::vector<unsigned>{0, 1, 2})
            found = true;
    CHECK(found);
}

TEST_CASE("enumerate_classes q=11 n=3 lens spaces: count via orbit oracle")
{
    auto classes = enumerate_classes(11, 3, true);
    // Independent count: orbits of sorted folded triples over {1..5} under
    // the unit action, counted by explicit orbit closure.
    std::set<std::vector<unsigned>> seen;
    size_t orbits = 0;
    std::vector<unsigned> v(3);
    for (v[0] = 1; v[0] <= 5; ++v[0])
        for (v[1] = v[0]; v[1] <= 5; ++v[1])
            for (v[2] = v[1]; v[2] <= 5; ++v[2]) {
                if (seen.count(v))
                    continue;
                ++orbits;
                for (unsigned t = 1; t <= 10; ++t) {
                    std::vector<unsigned> w(3);
                    for (int j = 0; j < 3; ++j) {
                        unsigned m = (t * v[j]) % 11;
                        w[j] = std::min(m, 11 - m);
                    }
                    std::sort(w.begin(), w.end());
                    seen.insert(w);
                }
            }
    CHECK(classes.size() == orbits);
    // The two classes named in the q = 11 walkthrough.
    auto has = [&](std::vector<unsigned> s) {
        return std::any_of(classes.begin(), classes.end(),
                           [&](const CanonicalLens& c) { return c.s == s; });
    };
    CHECK(has({1, 2, 3}));
    CHECK(has({1, 2, 4}));
}

TEST_CASE("enumerate_classes is closed and duplicate-free (q <= 20, n <= 3)")
{
    for (unsigned n = 2; n <= 3; ++n)
        for (unsigned q = 1; q <= 20; ++q) {
            auto classes = enumerate_classes(q, n, false);
            std::set<CanonicalLens> set(classes.begin(), classes.end());
            CHECK(set.size() == classes.size());
            CHECK(std::is_sorted(classes.begin(), classes.end()));
            // Closure: every valid raw vector canonicalizes into the list.
            std::vector<long> s(n, 0);
            bool more = true;
            while (more) {
                try {
                    LensParams L(q, s);
                    CHECK(set.count(canonical_form(L)) == 1);
                } catch (const input_error&) {
                }
                int j = static_cast<int>(n) - 1;
                while (j >= 0 && s[j] == static_cast<long>(q) - 1)
                    --j;
                if (j < 0) {
                    more = false;
                } else {
                    ++s[j];
                    for (size_t i = j + 1; i < n; ++i)
                        s[i] = 0;
                }
            }
        }
}

TEST_CASE("isometric classes share the isotropy profile")
{
    for (unsigned q : {8u, 12u, 15u}) {
        auto classes = enumerate_classes(q, 3, false);
        for (const auto& c : classes) {
            LensParams L = c.params();
            for (unsigned t = 1; t < q; ++t) {
                if (std::gcd(t, q) != 1)
                    continue;
                std::vector<long> moved;
                for (unsigned v : L.s())
                    moved.push_back(
                        static_cast<long>((static_cast<unsigned long>(t) * v) % q));
                CHECK(isotropy_profile(LensParams(q, moved)) ==
                      isotropy_profile(L));
            }
        }
    }
}

TEST_CASE("isotropy profiles of the worked examples")
{
    CHECK(isotropy_profile(LensParams(4, {1, 0})) ==
          std::vector<unsigned>{1, 4});
    CHECK(isotropy_profile(LensParams(4, {0, 1, 2})) ==
          std::vector<unsigned>{1, 2, 4});
    CHECK(isotropy_profile(LensParams(7, {1, 2, 3})) ==
          std::vector<unsigned>{1, 1, 1});
    CHECK(is_lens_space(LensParams(7, {1, 2, 3})));
    CHECK_FALSE(is_lens_space(LensParams(4, {1, 0})));
}

TEST_CASE("covers")
{
    LensParams L(49, {1, 6, 15});
    CHECK(canonical_form(cover(L, 49)) == canonical_form(L));
    CHECK(cover(L, 1).q() == 1);
    CHECK(canonical_form(cover(L, 7)).s == std::vector<unsigned>{1, 1, 1});
    CHECK_THROWS_AS(cover(L, 5), not_a_divisor);
}

TEST_CASE("text and json forms")
{
    LensParams L = parse_lens("L(12; 1, 5, -3)");
    CHECK(L.q() == 12);
    CHECK(L.s() == std::vector<unsigned>{1, 5, 3});
    CHECK(format_lens(L) == canonical_form(L).to_string());
    CHECK_THROWS_AS(parse_lens("garbage"), input_error);
    CHECK_THROWS_AS(parse_lens("L(12)"), input_error);

    LensParams M = lens_from_json(lens_to_json(L));
    CHECK(M == L);
}
