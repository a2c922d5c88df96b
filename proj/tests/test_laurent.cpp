#include "kklab/laurent.hpp"

#include "doctest.h"

#include <random>

using namespace kklab;

TEST_CASE("series arithmetic") {
    Field f3 = make_field(3, 1);
    TruncatedSeries a = TruncatedSeries::from_ranks(f3, 0, {1, 1}, 5); // 1 + t
    TruncatedSeries inv = a.inverse();
    CHECK((a * inv).congruent_mod(TruncatedSeries::one(f3, 5), 5));
    // 1/(1+t) = 1 - t + t^2 - ...
    CHECK(inv.coeff(0).is_one());
    CHECK(inv.coeff(1) == FieldElem::from_int(f3, 2));
    CHECK(inv.coeff(2).is_one());

    TruncatedSeries t = TruncatedSeries::from_ranks(f3, 1, {1}, 5);
    CHECK((t * t).valuation() == 2);
    CHECK((a - a).precision() == 5);
    CHECK_THROWS_AS((a - a).valuation(), Error);
    try {
        (a - a).valuation();
    } catch (const Error& e) {
        CHECK(e.code() == Errc::UnknownValuation);
    }

    // precision tracking through multiplication by t^2
    TruncatedSeries t2 = TruncatedSeries::from_ranks(f3, 2, {1}, 8);
    CHECK((a * t2).precision() == 7); // min(5 + 2, 8 + 0)
    CHECK(a.truncate(3).to_string() == "val:0 prec:3 [3^1:[1],3^1:[1],3^1:[0]]");
    // truncating below the valuation leaves a zero-to-precision series
    CHECK(!t2.truncate(1).known_nonzero());
    CHECK(t2.truncate(1).precision() == 1);
}

TEST_CASE("unramified norms of series") {
    Field f3 = make_field(3, 1), f9 = make_field(3, 2);
    TruncatedSeries beta = TruncatedSeries::from_ranks(f9, 0, {1, 2}, 3); // 1 + 2t
    TruncatedSeries n = unramified_norm(f9, f3, beta);
    CHECK(n.field() == f3);
    CHECK(n.coeff(0).is_one());
    CHECK(n.coeff(1).is_one());
    CHECK(n.coeff(2).is_one()); // (1+2t)^2 = 1 + 4t + 4t^2 = 1 + t + t^2

    // constant series: the field norm
    FieldElem yp1 = FieldElem::from_coeffs(f9, {1, 1});
    TruncatedSeries c = TruncatedSeries::from_coeffs(f9, 0, {yp1}, 4);
    TruncatedSeries nc = unramified_norm(f9, f3, c);
    CHECK(nc.coeff(0) == norm(f9, f3, yp1));
    CHECK(nc.coeff(1).is_zero());

    CHECK(unramified_norm(f9, f3, TruncatedSeries::one(f9, 4))
              .congruent_mod(TruncatedSeries::one(f3, 4), 4));
}

TEST_CASE("trace solve") {
    Field f3 = make_field(3, 1), f9 = make_field(3, 2);
    Field f2 = make_field(2, 1), f4 = make_field(2, 2);
    CHECK(trace_solve(f9, f3, FieldElem::one(f3)) == FieldElem::from_int(f9, 2));
    CHECK(trace_solve(f9, f3, FieldElem::zero(f3)).is_zero());
    CHECK(trace_solve(f4, f2, FieldElem::one(f2)) == FieldElem::from_coeffs(f4, {0, 1}));
    // postcondition on every base element
    for (uint64_t r = 0; r < 3; ++r) {
        FieldElem b(f3, r);
        CHECK(trace(f9, f3, trace_solve(f9, f3, b)) == b);
    }
}

TEST_CASE("hensel lift examples") {
    Field f3 = make_field(3, 1), f9 = make_field(3, 2);
    TruncatedSeries alpha = TruncatedSeries::from_ranks(f3, 0, {1, 1}, 3); // 1 + t
    TruncatedSeries beta = hensel_norm_lift(f9, f3, alpha, 3);
    // deterministic: beta = (1 + 2t)(1 + t^2) mod t^3
    CHECK(beta.coeff(0).is_one());
    CHECK(beta.coeff(1) == FieldElem::from_int(f9, 2));
    CHECK(beta.coeff(2).is_one());
    CHECK(unramified_norm(f9, f3, beta).congruent_mod(alpha, 3));

    // alpha = 1 lifts to 1
    TruncatedSeries one = TruncatedSeries::one(f3, 6);
    CHECK(hensel_norm_lift(f9, f3, one, 6).congruent_mod(TruncatedSeries::one(f9, 6), 6));

    // F_4/F_2 at precision 2: beta = 1 + w t
    Field f2 = make_field(2, 1), f4 = make_field(2, 2);
    TruncatedSeries a2 = TruncatedSeries::from_ranks(f2, 0, {1, 1}, 2);
    TruncatedSeries b2 = hensel_norm_lift(f4, f2, a2, 2);
    CHECK(b2.coeff(1) == FieldElem::from_coeffs(f4, {0, 1}));

    // not a principal unit
    TruncatedSeries bad = TruncatedSeries::from_ranks(f3, 0, {2, 1}, 3);
    CHECK_THROWS_AS(hensel_norm_lift(f9, f3, bad, 3), Error);
    try {
        hensel_norm_lift(f9, f3, bad, 3);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotPrincipalUnit);
    }
    CHECK_THROWS_AS(hensel_norm_lift(f9, f3, alpha, 5), Error); // known only mod t^3
}

TEST_CASE("lift truncation consistency") {
    Field f3 = make_field(3, 1), f27 = make_field(3, 3);
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<uint64_t> dist(0, 2);
    for (int t = 0; t < 20; ++t) {
        std::vector<uint64_t> ranks(10, 0);
        ranks[0] = 1;
        for (size_t i = 1; i < ranks.size(); ++i) ranks[i] = dist(rng);
        TruncatedSeries alpha = TruncatedSeries::from_ranks(f3, 0, ranks, 10);
        TruncatedSeries full = hensel_norm_lift(f27, f3, alpha, 10);
        CHECK(unramified_norm(f27, f3, full).congruent_mod(alpha, 10));
        for (int64_t pp : {4, 7}) {
            TruncatedSeries direct = hensel_norm_lift(f27, f3, alpha.truncate(pp), pp);
            REQUIRE(direct.congruent_mod(full.truncate(pp), pp));
        }
    }
}

TEST_CASE("residue and specialization of series symbols") {
    Field f3 = make_field(3, 1);
    TruncatedSeries t = TruncatedSeries::from_ranks(f3, 1, {1}, 4);
    TruncatedSeries two = TruncatedSeries::from_ranks(f3, 0, {2}, 4);
    TruncatedSeries one_plus_t = TruncatedSeries::from_ranks(f3, 0, {1, 1}, 4);

    // {t, 2}: residue = class of 2, not a unit symbol
    auto a = residue_and_specialize({t, two});
    CHECK(a.q == 2);
    REQUIRE(a.residue.has_value());
    CHECK(a.residue->value() == FieldElem::from_int(f3, 2));
    CHECK(!a.residue_trivial);
    CHECK(a.level == UnitLevel::Full);
    CHECK(a.specialization_symbol.empty());

    // {2, 1+t}: residue trivial, specialization {2, 1} trivial, certified U_2^1
    auto b = residue_and_specialize({two, one_plus_t});
    CHECK(b.residue_trivial);
    CHECK(b.specialization_trivial);
    CHECK(b.level == UnitLevel::PrincipalUnits);
    CHECK(!b.principal_presentation.empty());

    // single units: nontrivial specialization sits in U_1 \ U_1^1
    auto c = residue_and_specialize({two});
    CHECK(c.q == 1);
    CHECK(c.residue_valuation == 0);
    REQUIRE(c.specialization.has_value());
    CHECK(!c.specialization->is_trivial());
    CHECK(c.level == UnitLevel::Units);

    auto d = residue_and_specialize({one_plus_t});
    CHECK(d.level == UnitLevel::PrincipalUnits);

    auto e = residue_and_specialize({t});
    CHECK(e.residue_valuation == 1);
    CHECK(e.level == UnitLevel::Full);

    // unknown valuation
    CHECK_THROWS_AS(residue_and_specialize({TruncatedSeries::zero(f3, 4)}), Error);
}

TEST_CASE("residue is multiplicative in each entry") {
    Field f5 = make_field(5, 1);
    std::mt19937_64 rng(72);
    std::uniform_int_distribution<uint64_t> dist(0, 4);
    std::uniform_int_distribution<int64_t> vdist(-2, 2);
    auto rand_series = [&]() {
        for (;;) {
            std::vector<uint64_t> c(4);
            for (auto& v : c) v = dist(rng);
            TruncatedSeries s = TruncatedSeries::from_ranks(f5, vdist(rng), c, 6);
            if (s.known_nonzero()) return s;
        }
    };
    for (int t = 0; t < 100; ++t) {
        TruncatedSeries f1 = rand_series(), f2 = rand_series(), g = rand_series();
        auto r12 = residue_and_specialize({f1 * f2, g});
        auto r1 = residue_and_specialize({f1, g});
        auto r2 = residue_and_specialize({f2, g});
        REQUIRE(r12.residue->exp == (r1.residue->exp + r2.residue->exp) % 4);
    }
}

TEST_CASE("certified principal symbols with known divisors stay certified") {
    // finite shadow of l-divisibility: sigma = {alpha^l, beta} has the known
    // l-th root {alpha, beta}; both certify as principal-unit symbols
    Field f3 = make_field(3, 1);
    std::mt19937_64 rng(90);
    std::uniform_int_distribution<uint64_t> dist(0, 2);
    for (uint32_t ell : {2u, 3u}) {
        for (int t = 0; t < 20; ++t) {
            std::vector<uint64_t> ar(5, 0), br(5, 0);
            ar[0] = 1;
            br[0] = 1;
            for (size_t i = 1; i < 5; ++i) {
                ar[i] = dist(rng);
                br[i] = dist(rng);
            }
            TruncatedSeries alpha = TruncatedSeries::from_ranks(f3, 0, ar, 5);
            TruncatedSeries beta = TruncatedSeries::from_ranks(f3, 0, br, 5);
            TruncatedSeries alpha_ell = alpha;
            for (uint32_t i = 1; i < ell; ++i) alpha_ell = alpha_ell * alpha;
            auto root = residue_and_specialize({alpha, beta});
            auto power = residue_and_specialize({alpha_ell.truncate(5), beta});
            REQUIRE(root.level == UnitLevel::PrincipalUnits);
            REQUIRE(power.level == UnitLevel::PrincipalUnits);
        }
    }
}
