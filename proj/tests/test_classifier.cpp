#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "albert/classifier.hpp"
#include "albert/field.hpp"
#include "testutil.hpp"

using namespace albert;
using namespace albert::cls;
using albert::testutil::Rng;

namespace {

aut::TorusElement t_of(const FieldSpec& k, long a, long b, long c, long d) {
    return aut::TorusElement(Scalar(k, a), Scalar(k, b), Scalar(k, c), Scalar(k, d));
}

} // namespace

TEST_CASE("invariant_of reads the literal identifications off the torus") {
    FieldSpec q = FieldSpec::rationals();
    InvolutionInvariant inv = invariant_of(t_of(q, 1, 1, 1, 1));
    CHECK(inv.pfister.zeta == one(q));
    CHECK(inv.pfister.eta == one(q));
    CHECK(inv.gamma == GammaTriple(one(q), one(q), one(q)));

    InvolutionInvariant inv2 = invariant_of(t_of(q, 1, 1, -1, 1));
    CHECK(inv2.pfister.zeta == Scalar(q, -1));
    CHECK(inv2.pfister.eta == Scalar(q, -1));

    InvolutionInvariant inv3 = invariant_of(t_of(q, 2, 3, 5, 7));
    CHECK(inv3.pfister.zeta == Scalar(q, 5));
    CHECK(inv3.pfister.eta == Scalar(q, 7) / Scalar(q, 5));
    CHECK(inv3.gamma == GammaTriple(Scalar(q, 3), one(q) / Scalar(q, 6), Scalar(q, 2)));
}

TEST_CASE("the p-adic division representative carries the expected invariant") {
    for (std::uint32_t p : {3u, 5u, 7u}) {
        FieldSpec k = FieldSpec::padics(p);
        long z = static_cast<long>(least_nonresidue(p));
        aut::TorusElement t = t_of(k, 1, 1, -static_cast<long>(p), -z);
        InvolutionInvariant inv = invariant_of(t);
        CHECK(inv.pfister.zeta == Scalar(k, -static_cast<long>(p)));
        // The literal eta is Z_p / p, the same quaternion symbol as (-p, Z_p).
        CHECK(pfister_equivalent(inv.pfister, Pfister2(Scalar(k, -static_cast<long>(p)),
                                                       Scalar(k, z))));
        CHECK_FALSE(inv.quaternion_is_split());
    }
}

TEST_CASE("classification over finite fields is always the split class") {
    for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
        FieldSpec k = FieldSpec::finite(p);
        Rng rng(p);
        for (int trial = 0; trial < 10; ++trial) {
            aut::TorusElement t(testutil::random_nonzero(rng, k), testutil::random_nonzero(rng, k),
                                testutil::random_nonzero(rng, k),
                                testutil::random_nonzero(rng, k));
            InvolutionClass c = classify(t);
            CHECK(c.kind == InvolutionClass::Kind::TypeISplit);
            CHECK(c.label() == "TypeI(split)");
        }
    }
}

TEST_CASE("the three real classes land on the documented labels") {
    FieldSpec r = FieldSpec::reals();
    InvolutionClass split = classify(t_of(r, 1, 1, -1, 1));
    InvolutionClass definite = classify(t_of(r, 1, 1, 1, 1));
    InvolutionClass indefinite = classify(t_of(r, -1, 1, 1, 1));

    CHECK(split.kind == InvolutionClass::Kind::TypeISplit);
    CHECK(definite.kind == InvolutionClass::Kind::TypeIDivision);
    CHECK(indefinite.kind == InvolutionClass::Kind::TypeIDivision);

    REQUIRE(definite.gamma_class.has_value());
    REQUIRE(indefinite.gamma_class.has_value());
    CHECK(gamma_equivalent(*definite.gamma_class, GammaTriple(one(r), one(r), one(r)),
                           NormGroup::PositiveOnly));
    CHECK(gamma_equivalent(*indefinite.gamma_class, GammaTriple(Scalar(r, -1), one(r), one(r)),
                           NormGroup::PositiveOnly));

    CHECK(split != definite);
    CHECK(split != indefinite);
    CHECK(definite != indefinite);
}

TEST_CASE("representatives are pairwise distinct and count matches class_count") {
    std::vector<FieldSpec> fields = {FieldSpec::alg_closed(), FieldSpec::finite(7),
                                     FieldSpec::reals(),      FieldSpec::padics(2),
                                     FieldSpec::padics(3),    FieldSpec::padics(5),
                                     FieldSpec::padics(7)};
    for (const FieldSpec& k : fields) {
        std::vector<aut::TorusElement> reps = representatives(k);
        ClassCount cnt = class_count(k, InvolutionKind::TypeI);
        REQUIRE_FALSE(cnt.infinite);
        CHECK(reps.size() == cnt.count);
        std::vector<InvolutionClass> classes;
        for (const aut::TorusElement& t : reps)
            classes.push_back(classify(t)); // includes the first-principles cross-check
        for (std::size_t i = 0; i < classes.size(); ++i)
            for (std::size_t j = i + 1; j < classes.size(); ++j)
                CHECK(classes[i] != classes[j]);
    }
    CHECK_THROWS_AS(representatives(FieldSpec::rationals()), InfiniteClassCount);
    CHECK(class_count(FieldSpec::rationals(), InvolutionKind::TypeI).infinite);
    for (const FieldSpec& k : fields)
        CHECK(class_count(k, InvolutionKind::TypeII).count == 1);
    CHECK(class_count(FieldSpec::rationals(), InvolutionKind::TypeII).count == 1);
}

TEST_CASE("classification is invariant under square rescalings of the torus") {
    struct Case {
        FieldSpec k;
        std::vector<long> squares;
    };
    for (const Case& c : {Case{FieldSpec::finite(7), {1, 2, 3}},
                          Case{FieldSpec::padics(5), {1, 2, 3}},
                          Case{FieldSpec::reals(), {1, 2, 5}},
                          Case{FieldSpec::rationals(), {1, 2, 3}}}) {
        Rng rng(c.k.p + 99);
        for (int trial = 0; trial < 5; ++trial) {
            Scalar u1 = testutil::random_nonzero(rng, c.k);
            Scalar u2 = testutil::random_nonzero(rng, c.k);
            Scalar v1 = testutil::random_nonzero(rng, c.k);
            Scalar v2 = testutil::random_nonzero(rng, c.k);
            InvolutionClass base = classify(aut::TorusElement(u1, u2, v1, v2));
            for (long s : c.squares) {
                Scalar sq = Scalar(c.k, s) * Scalar(c.k, s);
                InvolutionClass scaled = classify(
                    aut::TorusElement(u1 * sq, u2 * sq, v1 * sq, v2 * sq));
                CHECK(base == scaled);
            }
        }
    }
}

TEST_CASE("over Q_p the gamma orbit collapses: any unit rescale of u keeps the class") {
    FieldSpec k = FieldSpec::padics(5);
    aut::TorusElement division = t_of(k, 1, 1, -5, -2);
    InvolutionClass base = classify(division);
    CHECK(base.kind == InvolutionClass::Kind::TypeIDivision);
    for (long d : {2, 3, 5, 10}) {
        aut::TorusElement moved = aut::TorusElement(Scalar(k, d), Scalar(k, d) * Scalar(k, 1),
                                                    division.v1, division.v2);
        CHECK(classify(moved) == base);
    }
}

TEST_CASE("census over F3 and F5 collapses to a single class with fixed dims 15") {
    CensusOptions opt;
    opt.exhaustive = true;
    opt.keep_rows = true;

    CensusResult f3 = census(FieldSpec::finite(3), opt);
    CHECK(f3.total == 16);
    REQUIRE(f3.histogram.size() == 1);
    CHECK(f3.histogram[0].first.kind == InvolutionClass::Kind::TypeISplit);
    CHECK(f3.histogram[0].second == 16);
    CHECK(f3.all_fixed_dim_15);
    REQUIRE(f3.rows.size() == 16);
    for (const CensusRow& row : f3.rows) {
        CHECK(row.label == "TypeI(split)");
        CHECK(row.fixed_dim == 15);
    }

    opt.keep_rows = false;
    CensusResult f5 = census(FieldSpec::finite(5), opt);
    CHECK(f5.total == 256);
    REQUIRE(f5.histogram.size() == 1);
    CHECK(f5.histogram[0].second == 256);
    CHECK(f5.all_fixed_dim_15);
}

TEST_CASE("sampled census is deterministic and parallel-merge-stable") {
    CensusOptions opt;
    opt.exhaustive = false;
    opt.samples = 200;
    opt.seed = 42;
    opt.jobs = 1;
    opt.keep_rows = true;
    CensusResult serial = census(FieldSpec::finite(11), opt);
    opt.jobs = 3;
    CensusResult parallel = census(FieldSpec::finite(11), opt);

    CHECK(serial.total == 200);
    REQUIRE(serial.histogram.size() == 1);
    CHECK(serial.histogram[0].first.kind == InvolutionClass::Kind::TypeISplit);
    CHECK(serial.all_fixed_dim_15);
    REQUIRE(parallel.histogram.size() == 1);
    CHECK(parallel.histogram[0].second == serial.histogram[0].second);
    REQUIRE(parallel.rows.size() == serial.rows.size());
    for (std::size_t i = 0; i < serial.rows.size(); ++i) {
        CHECK(parallel.rows[i].torus == serial.rows[i].torus);
        CHECK(parallel.rows[i].label == serial.rows[i].label);
    }
}

TEST_CASE("census rejects unsupported configurations") {
    CensusOptions opt;
    CHECK_THROWS_AS(census(FieldSpec::rationals(), opt), std::invalid_argument);
    CHECK_THROWS_AS(census(FieldSpec::finite(2), opt), std::invalid_argument);
    opt.exhaustive = true;
    CHECK_THROWS_AS(census(FieldSpec::finite(17), opt), std::invalid_argument);
    opt.exhaustive = false;
    opt.samples = 5;
    CHECK(census(FieldSpec::finite(17), opt).total == 5); // sampled mode is fine
}

TEST_CASE("the rational family of primes 3 mod 4 is pairwise distinct") {
    CHECK(rational_distinct_family({}).empty());

    std::vector<InvolutionClass> two = rational_distinct_family({3, 7});
    REQUIRE(two.size() == 2);
    CHECK(two[0] != two[1]);

    std::vector<InvolutionClass> four = rational_distinct_family({3, 7, 11, 19});
    REQUIRE(four.size() == 4);
    for (std::size_t i = 0; i < four.size(); ++i) {
        CHECK(four[i].kind == InvolutionClass::Kind::TypeIDivision);
        for (std::size_t j = i + 1; j < four.size(); ++j)
            CHECK(four[i] != four[j]);
    }
    // The symbols are (-1, p): pairwise inequivalent as Pfister forms.
    for (std::size_t i = 0; i < four.size(); ++i)
        for (std::size_t j = i + 1; j < four.size(); ++j)
            CHECK_FALSE(pfister_equivalent(*four[i].symbol, *four[j].symbol));

    CHECK_THROWS_AS(rational_distinct_family({5}), std::invalid_argument);  // 1 mod 4
    CHECK_THROWS_AS(rational_distinct_family({15}), std::invalid_argument); // composite
    CHECK_THROWS_AS(rational_distinct_family({3, 3}), std::invalid_argument);
}

TEST_CASE("type 2 classes are a single label per field") {
    InvolutionClass a = type2_class(FieldSpec::finite(5));
    InvolutionClass b = type2_class(FieldSpec::finite(5));
    CHECK(a == b);
    CHECK(a.label() == "TypeII");
    CHECK(a != classify(t_of(FieldSpec::finite(5), 1, 1, 1, 1)));
}
