#include "kklab/poly.hpp"

#include "kklab/unipoly.hpp"

#include "doctest.h"

#include <random>

using namespace kklab;

namespace {

MultiPoly rand_hom(std::mt19937_64& rng, Field f, uint32_t nvars, uint32_t d) {
    auto mons = monomials_of_degree(nvars, d);
    std::uniform_int_distribution<uint64_t> dist(0, f.size() - 1);
    for (;;) {
        MultiPoly p = multipoly_zero(f, nvars);
        for (const auto& m : mons) {
            uint64_t r = dist(rng);
            if (r) p.add_term(m, FieldElem(f, r));
        }
        if (!p.is_zero()) return p;
    }
}

} // namespace

TEST_CASE("substitution examples") {
    Field f3 = make_field(3, 1);
    // identity substitution
    std::mt19937_64 rng0(3);
    MultiPoly x0 = multipoly_variable(f3, 1, 0);
    MultiPoly g = rand_hom(rng0, f3, 2, 2);
    CHECK(substitute(x0, {g}) == g);

    // (X0^2+X1^2) with both replacements, expanded
    MultiPoly sq = multipoly_zero(f3, 2);
    sq.add_term({2, 0}, FieldElem::one(f3));
    sq.add_term({0, 2}, FieldElem::one(f3));
    MultiPoly a = multipoly_zero(f3, 4);
    a.add_term({2, 0, 0, 0}, FieldElem::one(f3));
    a.add_term({0, 2, 0, 0}, FieldElem::one(f3));
    MultiPoly b = multipoly_zero(f3, 4);
    b.add_term({0, 0, 2, 0}, FieldElem::one(f3));
    b.add_term({0, 0, 0, 2}, FieldElem::one(f3));
    MultiPoly expect = a * a + b * b;
    CHECK(substitute(sq, {a, b}) == expect);

    // X0*X1 over F_2 with [T0+T1, T0] -> T0^2 + T0*T1
    Field f2 = make_field(2, 1);
    MultiPoly prod = multipoly_zero(f2, 2);
    prod.add_term({1, 1}, FieldElem::one(f2));
    MultiPoly t0 = multipoly_variable(f2, 2, 0);
    MultiPoly t1 = multipoly_variable(f2, 2, 1);
    MultiPoly out = substitute(prod, {t0 + t1, t0});
    MultiPoly expect2 = multipoly_zero(f2, 2);
    expect2.add_term({2, 0}, FieldElem::one(f2));
    expect2.add_term({1, 1}, FieldElem::one(f2));
    CHECK(out == expect2);

    // zero replacements drop the terms they annihilate
    MultiPoly mixed = multipoly_zero(f2, 2);
    mixed.add_term({1, 1}, FieldElem::one(f2));
    mixed.add_term({0, 2}, FieldElem::one(f2));
    MultiPoly killed = substitute(mixed, {multipoly_zero(f2, 2), t0});
    CHECK(killed == multipoly_zero(f2, 2) + t0 * t0);

    CHECK_THROWS_AS(substitute(sq, {a}), Error); // arity
    MultiPoly inhom = a + multipoly_variable(f3, 4, 0);
    CHECK_THROWS_AS(substitute(sq, {a, inhom}), Error);
    try {
        substitute(sq, {a, inhom});
    } catch (const Error& e) {
        CHECK(e.code() == Errc::InhomogeneousReplacement);
    }
}

TEST_CASE("evaluation examples") {
    Field f3 = make_field(3, 1), f9 = make_field(3, 2);
    MultiPoly sq = multipoly_zero(f3, 2);
    sq.add_term({2, 0}, FieldElem::one(f3));
    sq.add_term({0, 2}, FieldElem::one(f3));
    CHECK(sq.evaluate({FieldElem::one(f3), FieldElem::one(f3)}) == FieldElem::from_int(f3, 2));

    MultiPoly sq9 = embed_poly(f9, sq);
    FieldElem y = FieldElem::from_coeffs(f9, {0, 1});
    CHECK(sq9.evaluate({y, FieldElem::one(f9)}).is_zero());
    CHECK(sq.evaluate({FieldElem::zero(f3), FieldElem::zero(f3)}).is_zero());
}

TEST_CASE("substitute commutes with evaluation") {
    for (uint32_t p : {2u, 3u}) {
        Field f = make_field(p, 1);
        std::mt19937_64 rng(100 + p);
        std::uniform_int_distribution<uint64_t> dist(0, p - 1);
        for (int i = 0; i < 200; ++i) {
            uint32_t tv = 2, rv = 3, d = 1 + i % 2;
            MultiPoly target = rand_hom(rng, f, tv, 1 + (i / 2) % 2);
            std::vector<MultiPoly> repl;
            for (uint32_t j = 0; j < tv; ++j) repl.push_back(rand_hom(rng, f, rv, d));
            MultiPoly sub = substitute(target, repl);
            std::vector<FieldElem> x;
            for (uint32_t j = 0; j < rv; ++j) x.emplace_back(f, dist(rng));
            std::vector<FieldElem> inner;
            for (const auto& r : repl) inner.push_back(r.evaluate(x));
            REQUIRE(sub.evaluate(x) == target.evaluate(inner));
        }
    }
}

TEST_CASE("ring axioms on random triples") {
    Field f5 = make_field(5, 1);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        MultiPoly a = rand_hom(rng, f5, 3, 2);
        MultiPoly b = rand_hom(rng, f5, 3, 2);
        MultiPoly c = rand_hom(rng, f5, 3, 1);
        CHECK(a * b == b * a);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a - a).is_zero());
        CHECK(a * (b * c) == (a * b) * c);
    }
}

TEST_CASE("homogenize") {
    Field f3 = make_field(3, 1), f2 = make_field(2, 1), f5 = make_field(5, 1);
    MultiPoly h = homogenize(UniPoly::from_ranks(f3, {1, 0, 1}));
    MultiPoly expect = multipoly_zero(f3, 2);
    expect.add_term({2, 0}, FieldElem::one(f3));
    expect.add_term({0, 2}, FieldElem::one(f3));
    CHECK(h == expect);

    CHECK(homogenize(UniPoly::from_ranks(f2, {1, 1, 1})) ==
          parse_multipoly("2^1:[1]*X0^2 + 2^1:[1]*X0^1*X1^1 + 2^1:[1]*X1^2", f2, 2));

    // linear case: y - c
    MultiPoly lin = homogenize(UniPoly::from_ranks(f5, {3, 1})); // y + 3 = y - 2
    MultiPoly lexpect = multipoly_zero(f5, 2);
    lexpect.add_term({1, 0}, FieldElem::one(f5));
    lexpect.add_term({0, 1}, FieldElem::from_int(f5, 3));
    CHECK(lin == lexpect);

    // F(a, 1) = minpoly(a) for all a
    for (uint64_t r = 0; r < 5; ++r) {
        UniPoly mp = UniPoly::from_ranks(f5, {2, 3, 1});
        FieldElem a(f5, r);
        CHECK(homogenize(mp).evaluate({a, FieldElem::one(f5)}) == mp.evaluate(a));
    }

    CHECK_THROWS_AS(homogenize(UniPoly::zero(f3)), Error);
}

TEST_CASE("serialization round trip") {
    Field f3 = make_field(3, 1), f9 = make_field(3, 2);
    std::mt19937_64 rng(42);
    for (int i = 0; i < 20; ++i) {
        MultiPoly p = rand_hom(rng, f3, 3, 2);
        CHECK(parse_multipoly(to_string(p), f3, 3) == p);
        MultiPoly q = rand_hom(rng, f9, 2, 3);
        CHECK(parse_multipoly(to_string(q), f9, 2) == q);
    }
    CHECK(to_string(multipoly_zero(f3, 2)) == "0");
    CHECK(parse_multipoly("0", f3, 2).is_zero());

    // malformed literals are configuration errors
    for (const char* bad : {"3^1:[1]*X5^2", "nonsense", "3^1:[1]*Y0^1", "2^1:[1]*X0^1"}) {
        CHECK_THROWS_AS(parse_multipoly(bad, f3, 2), Error);
    }
    try {
        parse_multipoly("3^1:[1]*X5^2", f3, 2);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ConfigInvalid);
    }
}

TEST_CASE("hypersurface invariants") {
    Field f3 = make_field(3, 1);
    CHECK_THROWS_AS(Hypersurface(multipoly_zero(f3, 2)), Error);
    MultiPoly inhom = multipoly_variable(f3, 2, 0);
    inhom.add_term({2, 0}, FieldElem::one(f3));
    CHECK_THROWS_AS(Hypersurface{inhom}, Error);
    MultiPoly c = multipoly_constant(f3, 2, FieldElem::one(f3));
    CHECK_THROWS_AS(Hypersurface{c}, Error);
    Hypersurface ok(parse_multipoly("3^1:[1]*X0^2 + 3^1:[1]*X1^2", f3, 2));
    CHECK(ok.degree() == 2);
    CHECK(ok.ambient_dim() == 1);
}

TEST_CASE("monomial enumeration") {
    CHECK(monomials_of_degree(3, 2).size() == 6);
    CHECK(monomials_of_degree(4, 3).size() == 20);
    CHECK(monomials_of_degree(2, 1).size() == 2);
}
