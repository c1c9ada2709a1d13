// Acceptance gate: twelve exact-arithmetic criteria, one pass/fail line each.
// Exits with the number of failed criteria (0 on full pass).

#include <chrono>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "albert/automorphism.hpp"
#include "albert/classifier.hpp"
#include "albert/derivations.hpp"
#include "albert/field.hpp"
#include "albert/hermitian.hpp"
#include "albert/kac.hpp"
#include "albert/linalg.hpp"
#include "albert/octonion.hpp"
#include "albert/tits.hpp"
#include "testutil.hpp"

namespace {

using namespace albert;
using testutil::Rng;
using Clock = std::chrono::steady_clock;

int failures = 0;

// Dimensions observed by criterion 8, compared against Kac data in criterion 11.
std::size_t observed_type1_centralizer = 0;
std::size_t observed_type2_centralizer = 0;

template <typename Body>
void criterion(int number, double budget_seconds, Body&& body) {
    auto start = Clock::now();
    bool pass = false;
    std::string note;
    try {
        pass = body(note);
    } catch (const std::exception& e) {
        pass = false;
        note = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (pass && budget_seconds > 0.0 && seconds > budget_seconds) {
        pass = false;
        note = "over time budget";
    }
    std::printf("[criterion %2d] %s  (%.2fs)%s%s\n", number, pass ? "PASS" : "FAIL", seconds,
                note.empty() ? "" : " -- ", note.c_str());
    std::fflush(stdout);
    if (!pass)
        ++failures;
}

bool fail_note(std::string& note, const std::string& message) {
    note = message;
    return false;
}

aut::TorusElement random_torus(Rng& rng, const FieldSpec& k) {
    return aut::TorusElement(testutil::random_nonzero(rng, k), testutil::random_nonzero(rng, k),
                             testutil::random_nonzero(rng, k), testutil::random_nonzero(rng, k));
}

herm::Element random_primitive_idempotent(Rng& rng, const herm::Algebra& alg,
                                          const oct::QuaternionSubalgebra& D) {
    for (;;) {
        std::array<oct::Octonion, 3> v = {testutil::random_octonion(rng, alg.octonions),
                                          testutil::random_octonion(rng, alg.octonions),
                                          testutil::random_octonion(rng, alg.octonions)};
        // Keep entries inside D so the rank-one construction applies.
        for (oct::Octonion& x : v) {
            Vec c = x.coords();
            x = D.element({c[0], c[1], c[2], c[3]});
        }
        try {
            return herm::primitive_idempotent_from_vector(alg, D, v);
        } catch (const std::invalid_argument&) {
            continue; // zero trace or zero vector; redraw
        } catch (const herm::NotPrimitive&) {
            continue;
        }
    }
}

// ---------- criterion bodies ----------

bool criterion_1(std::string& note) {
    FieldSpec k = FieldSpec::parse("Fp:101");
    tits::Algebra alg(k);
    Rng rng(0xacce9701ULL);
    for (int i = 0; i < 100; ++i) {
        Mat3 u = testutil::random_sl3(rng, k);
        Mat3 v = testutil::random_sl3(rng, k);
        aut::CheckResult r = aut::check_automorphism(aut::f_uv(alg, u, v));
        if (!r.pass)
            return fail_note(note, "SL3 pair rejected: " + r.reason);
    }
    for (int i = 0; i < 20; ++i) {
        Mat3 u = testutil::random_invertible_mat3(rng, k);
        Mat3 v = testutil::random_invertible_mat3(rng, k);
        if (i % 2 == 0)
            u = testutil::random_non_sl3(rng, k);
        else
            v = testutil::random_non_sl3(rng, k);
        aut::CheckResult r = aut::check_automorphism(aut::f_uv(alg, u, v));
        if (r.pass)
            return fail_note(note, "non-SL3 pair accepted");
        if (!r.witness.has_value() || r.witness->size() != 27)
            return fail_note(note, "failure without an explicit witness");
    }
    return true;
}

bool criterion_2(std::string& note) {
    Rng rng(0xacce9702ULL);
    for (const char* name : {"Fp:5", "Fp:7", "Q"}) {
        FieldSpec k = FieldSpec::parse(name);
        tits::Algebra talg(k);
        herm::Algebra halg = herm::Algebra::standard(k);
        for (int i = 0; i < 200; ++i) {
            tits::Element x = testutil::random_tits(rng, talg);
            tits::Element y = testutil::random_tits(rng, talg);
            tits::Element xy = tits::tits_mul(x, y);
            if (xy != tits::tits_mul(y, x))
                return fail_note(note, std::string("Tits commutativity over ") + name);
            tits::Element x2 = tits::tits_mul(x, x);
            if (tits::tits_mul(xy, x2) != tits::tits_mul(x, tits::tits_mul(y, x2)))
                return fail_note(note, std::string("Tits Jordan identity over ") + name);

            herm::Element a = testutil::random_hermitian(rng, halg);
            herm::Element b = testutil::random_hermitian(rng, halg);
            herm::Element ab = herm::jordan_mul(a, b);
            if (ab != herm::jordan_mul(b, a))
                return fail_note(note, std::string("Hermitian commutativity over ") + name);
            herm::Element a2 = herm::jordan_mul(a, a);
            if (herm::jordan_mul(ab, a2) != herm::jordan_mul(a, herm::jordan_mul(b, a2)))
                return fail_note(note, std::string("Hermitian Jordan identity over ") + name);
        }
    }
    FieldSpec q = FieldSpec::parse("Q");
    tits::Algebra talg(q);
    for (int i = 0; i < 200; ++i) {
        if (!tits::degree3_identity_holds(testutil::random_tits(rng, talg)))
            return fail_note(note, "degree-3 identity");
    }
    return true;
}

bool criterion_3(std::string& note) {
    FieldSpec f3 = FieldSpec::parse("Fp:3");
    FieldSpec q = FieldSpec::parse("Q");

    auto axioms_hold = [](const tits::Element& x, const tits::Element& y) {
        const tits::Algebra& alg = x.algebra();
        tits::Element e = tits::Element::one(alg);
        bool adjoint = tits::tits_sharp(tits::tits_sharp(x)) == x.scaled(tits_norm(x));
        bool trace_compat =
            tits::norm_directional(x, y) == tits::trace_bilinear(tits::tits_sharp(x), y);
        bool basepoint = tits::tits_norm(e) == one(alg.field) && tits::tits_sharp(e) == e &&
                         tits::sharp_cross(e, x) == e.scaled(tits::tits_trace(x)) - x;
        return adjoint && trace_compat && basepoint;
    };

    // Spanning set over F3: the 27 coordinate basis elements and all pairwise sums.
    tits::Algebra a3(f3);
    std::vector<tits::Element> span;
    for (std::size_t i = 0; i < 27; ++i)
        span.push_back(tits::Element::basis(a3, i));
    for (std::size_t i = 0; i < 27; ++i)
        for (std::size_t j = i + 1; j < 27; ++j)
            span.push_back(tits::Element::basis(a3, i) + tits::Element::basis(a3, j));
    for (const tits::Element& x : span) {
        for (std::size_t j = 0; j < 27; ++j)
            if (!axioms_hold(x, tits::Element::basis(a3, j)))
                return fail_note(note, "cubic axiom on the F3 spanning set");
    }

    Rng rng(0xacce9703ULL);
    tits::Algebra aq(q);
    for (int i = 0; i < 100; ++i) {
        if (!axioms_hold(testutil::random_tits(rng, aq), testutil::random_tits(rng, aq)))
            return fail_note(note, "cubic axiom on a random rational sample");
    }

    // Associative (matrix-level) identities.
    std::vector<Mat3> mats;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            Mat3 m = Mat3::zero(f3);
            m.at(r, c) = one(f3);
            mats.push_back(m);
        }
    std::size_t nmats = mats.size();
    for (std::size_t i = 0; i < nmats; ++i)
        for (std::size_t j = i + 1; j < nmats; ++j)
            mats.push_back(mats[i] + mats[j]);
    for (const Mat3& m : mats)
        if (!tits::associative_cubic_checks(m).all())
            return fail_note(note, "associative identity on the F3 spanning set");
    for (int i = 0; i < 100; ++i)
        if (!tits::associative_cubic_checks(testutil::random_mat3(rng, q)).all())
            return fail_note(note, "associative identity on a random rational sample");
    return true;
}

bool criterion_4(std::string& note) {
    Rng rng(0xacce9704ULL);
    for (const char* name : {"Fp:5", "Q"}) {
        FieldSpec k = FieldSpec::parse(name);
        herm::Algebra alg = herm::Algebra::standard(k);
        // Exhaustive scan: diagonal idempotents have 0/1 diagonal; skip 0 and e.
        for (int mask = 1; mask < 7; ++mask) {
            herm::Element w = herm::Element::diag(alg, Scalar(k, (mask >> 0) & 1),
                                                  Scalar(k, (mask >> 1) & 1),
                                                  Scalar(k, (mask >> 2) & 1));
            herm::IdempotentReport report = herm::idempotent_lemma_report(w);
            if (!report.all())
                return fail_note(note, std::string("diagonal idempotent over ") + name);
            Scalar qw = herm::quadratic_norm(w);
            if (qw != Scalar(k, 1) && qw * Scalar(k, 2) != Scalar(k, 1))
                return fail_note(note, "Q(w) outside {1/2, 1}");
            if (herm::is_primitive_idempotent(w) != (qw * Scalar(k, 2) == Scalar(k, 1)))
                return fail_note(note, "primitive <=> Q(w) = 1/2 failed");
        }
        oct::QuaternionSubalgebra D = oct::embed_quaternion(alg.octonions, one(k), one(k));
        for (int i = 0; i < 25; ++i) {
            herm::Element w = random_primitive_idempotent(rng, alg, D);
            herm::Element rest = herm::Element::identity(alg) - w; // Q = 1 idempotent
            if (!herm::idempotent_lemma_report(w).all() ||
                !herm::idempotent_lemma_report(rest).all())
                return fail_note(note, std::string("conjugated idempotent over ") + name);
        }
    }
    return true;
}

bool criterion_5(std::string& note) {
    Rng rng(0xacce9705ULL);
    for (const char* name : {"Fp:5", "Q"}) {
        FieldSpec k = FieldSpec::parse(name);
        herm::Algebra alg = herm::Algebra::standard(k);
        oct::QuaternionSubalgebra D = oct::embed_quaternion(alg.octonions, one(k), one(k));
        std::set<std::string> seen;
        std::size_t checked = 0;
        while (checked < 10) {
            herm::Element w = random_primitive_idempotent(rng, alg, D);
            std::string key;
            for (const Scalar& c : w.coords())
                key += c.to_string() + ",";
            if (!seen.insert(key).second)
                continue; // duplicate draw; 10 distinct idempotents wanted
            herm::PeirceDecomposition peirce = herm::peirce_decompose(w);
            if (peirce.basis_e0.size() != 9 || peirce.basis_e1.size() != 16)
                return fail_note(note, std::string("Peirce dimensions over ") + name);
            if (checked == 0) {
                std::size_t fixed = aut::type2_involution(alg, w).fixed_dimension;
                if (fixed != 1 + 1 + peirce.basis_e0.size() || fixed != 11)
                    return fail_note(note, "TypeII fixed dimension is not 1+1+9");
            }
            ++checked;
        }
    }
    return true;
}

bool criterion_6(std::string& note) {
    for (const char* name : {"C", "Fp:7", "R", "Qp:2", "Qp:3", "Qp:5", "Qp:7"}) {
        FieldSpec k = FieldSpec::parse(name);
        tits::Algebra alg(k);
        for (const aut::TorusElement& t : cls::representatives(k)) {
            if (aut::type1_involution(alg, t).fixed_dimension != 15)
                return fail_note(note,
                                 std::string("representative fixed dimension over ") + name);
        }
    }
    FieldSpec f7 = FieldSpec::parse("Fp:7");
    tits::Algebra alg7(f7);
    Rng rng(0xacce9706ULL);
    for (int i = 0; i < 100; ++i) {
        if (aut::type1_involution(alg7, random_torus(rng, f7)).fixed_dimension != 15)
            return fail_note(note, "random torus fixed dimension over F7");
    }
    for (const char* name : {"Fp:7", "R"}) {
        FieldSpec k = FieldSpec::parse(name);
        herm::Algebra halg = herm::Algebra::standard(k);
        herm::Element w = herm::Element::diag(halg, one(k), zero(k), zero(k));
        if (aut::type2_involution(halg, w).fixed_dimension != 11)
            return fail_note(note, std::string("sigma fixed dimension over ") + name);
    }
    return true;
}

bool criterion_7(std::string& note) {
    Rng rng(0xacce9707ULL);
    for (const char* name : {"C", "Fp:7", "Q", "R", "Qp:5"}) {
        FieldSpec k = FieldSpec::parse(name);
        tits::Algebra alg(k);
        for (int i = 0; i < 100; ++i) {
            aut::AlgebraMap g = aut::theta(alg).after(aut::f_torus(alg, random_torus(rng, k)));
            if (!g.after(g).is_identity())
                return fail_note(note, std::string("(g_t)^2 != id over ") + name);
        }
    }
    return true;
}

bool criterion_8(std::string& note) {
    FieldSpec q = FieldSpec::parse("Q");
    FieldSpec f101 = FieldSpec::parse("Fp:101");
    tits::Algebra tq(q);
    tits::Algebra t101(f101);
    if (der::derivations(tq).dimension() != 52)
        return fail_note(note, "dim Der != 52 over Q");
    if (der::derivations(t101).dimension() != 52)
        return fail_note(note, "dim Der != 52 over F101");

    aut::TorusElement t(one(q), one(q), one(q), one(q));
    aut::InvolutionDescriptor type1 = aut::type1_involution(tq, t);
    der::CentralizerSplit s1 = der::centralizer_split(type1.realized);
    if (s1.fixed_dim != 24 || s1.anti_dim != 28 || s1.fixed_dim + s1.anti_dim != 52)
        return fail_note(note, "TypeI centralizer split is not (24, 28)");

    herm::Algebra hq = herm::Algebra::standard(q);
    herm::Element w = herm::Element::diag(hq, one(q), zero(q), zero(q));
    aut::InvolutionDescriptor type2 = aut::type2_involution(hq, w);
    der::CentralizerSplit s2 = der::centralizer_split(type2.realized);
    if (s2.fixed_dim != 36 || s2.anti_dim != 16 || s2.fixed_dim + s2.anti_dim != 52)
        return fail_note(note, "TypeII centralizer split is not (36, 16)");

    observed_type1_centralizer = s1.fixed_dim;
    observed_type2_centralizer = s2.fixed_dim;
    return true;
}

bool criterion_9(std::string& note) {
    for (const char* name : {"Fp:3", "Fp:5"}) {
        FieldSpec k = FieldSpec::parse(name);
        cls::CensusOptions options;
        options.exhaustive = true;
        options.jobs = 2;
        cls::CensusResult result = cls::census(k, options);
        std::size_t expected = (k.p - 1) * (k.p - 1) * (k.p - 1) * (k.p - 1);
        if (result.total != expected || result.histogram.size() != 1 ||
            result.histogram[0].second != expected || !result.all_fixed_dim_15)
            return fail_note(note, std::string("census did not collapse over ") + name);
    }

    FieldSpec r = FieldSpec::parse("R");
    std::vector<cls::InvolutionClass> real_classes;
    for (const aut::TorusElement& t : cls::representatives(r))
        real_classes.push_back(cls::classify(t));
    if (real_classes.size() != 3)
        return fail_note(note, "expected 3 real representatives");
    for (std::size_t i = 0; i < real_classes.size(); ++i)
        for (std::size_t j = i + 1; j < real_classes.size(); ++j)
            if (real_classes[i] == real_classes[j])
                return fail_note(note, "real representatives collide");

    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        FieldSpec qp = FieldSpec::parse("Qp:" + std::to_string(p));
        std::vector<aut::TorusElement> reps = cls::representatives(qp);
        if (reps.size() != 2)
            return fail_note(note, "expected 2 p-adic representatives");
        if (cls::classify(reps[0]) == cls::classify(reps[1]))
            return fail_note(note, "p-adic representatives collide at p=" + std::to_string(p));
    }

    std::vector<cls::InvolutionClass> family = cls::rational_distinct_family({3, 7, 11, 19});
    if (family.size() != 4)
        return fail_note(note, "rational family size");
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j)
            if (family[i] == family[j])
                return fail_note(note, "rational family classes collide");
    return true;
}

bool criterion_10(std::string& note) {
    FieldSpec k = FieldSpec::parse("Fp:5");
    herm::Algebra alg = herm::Algebra::standard(k);
    oct::QuaternionSubalgebra D = oct::embed_quaternion(alg.octonions, one(k), one(k));
    std::vector<herm::Element> hbasis = herm::hermitian_d_basis(alg, D);
    std::vector<herm::SkewElement> sbasis = herm::skew_basis(alg, D);
    Rng rng(0xacce9710ULL);

    auto random_h = [&] {
        herm::Element x = herm::Element::zero(alg);
        for (const herm::Element& b : hbasis)
            x = x + b.scaled(testutil::random_scalar(rng, k));
        return x;
    };
    auto random_s = [&] {
        oct::OctMat3 y = oct::OctMat3::zeros(alg.octonions);
        for (const herm::SkewElement& b : sbasis)
            y = y + b.y.scaled(testutil::random_scalar(rng, k));
        return herm::SkewElement::make(D, alg.gamma, y);
    };

    for (int i = 0; i < 100; ++i) {
        herm::Element x = random_h();
        herm::Element u = random_h();
        herm::SkewElement yy = random_s();
        herm::SkewElement v = random_s();

        herm::SkewElement xv = herm::bullet_product(x, v, D);
        herm::SkewElement uy = herm::bullet_product(u, yy, D);
        herm::Element yv = herm::star_product(yy, v, alg, D);
        if (!herm::is_gamma_skew_over(xv.y, D, alg.gamma) ||
            !herm::is_gamma_skew_over(uy.y, D, alg.gamma))
            return fail_note(note, "bullet product left Skew3(D, gamma)");
        if (!herm::entries_in(yv.matrix(), D) ||
            !herm::is_gamma_hermitian_over(yv.matrix(), D, alg.gamma))
            return fail_note(note, "star product left H3(D, gamma)");

        herm::Element lhs = herm::jordan_mul(herm::embed_decomposition(x, yy, D),
                                             herm::embed_decomposition(u, v, D));
        herm::Element rhs =
            herm::embed_decomposition(herm::jordan_mul(x, u) + yv, xv + uy, D);
        if (lhs != rhs)
            return fail_note(note, "decomposition product identity failed");
    }
    return true;
}

bool criterion_11(std::string& note) {
    std::vector<kac::KacSolution> solutions = kac::enumerate(2);
    if (solutions.size() != 2 || solutions[0].rho != std::array<unsigned, 5>{0, 1, 0, 0, 0} ||
        solutions[1].rho != std::array<unsigned, 5>{0, 0, 0, 0, 1})
        return fail_note(note, "enumerate(2) mismatch");
    kac::DynkinType first = kac::centralizer_subdiagram(solutions[0]);
    kac::DynkinType second = kac::centralizer_subdiagram(solutions[1]);
    if (first.name() != "A1xC3" || second.name() != "B4")
        return fail_note(note, "subdiagram types mismatch");
    std::size_t dim1 = kac::centralizer_group_dimension(solutions[0]);
    std::size_t dim2 = kac::centralizer_group_dimension(solutions[1]);
    if (dim1 != 24 || dim2 != 36)
        return fail_note(note, "Kac dimensions are not 24/36");
    if (dim1 != observed_type1_centralizer || dim2 != observed_type2_centralizer)
        return fail_note(note, "Kac dimensions disagree with the derivation centralizers");
    return true;
}

bool criterion_12(std::string& note) {
    Rng rng(0xacce9712ULL);
    for (const char* name : {"Qp:3", "Qp:5", "Qp:2", "R"}) {
        FieldSpec k = FieldSpec::parse(name);
        auto draw = [&] {
            Scalar x = testutil::random_nonzero(rng, k);
            if (k.kind == FieldKind::PAdics) {
                // Mix in powers of p to exercise valuations.
                Scalar p(k, static_cast<long>(k.p));
                int e = static_cast<int>(rng() % 5) - 2;
                for (int i = 0; i < e; ++i)
                    x = x * p;
                for (int i = 0; i < -e; ++i)
                    x = x / p;
            }
            return x;
        };
        for (int i = 0; i < 500; ++i) {
            Scalar a = draw(), b = draw(), c = draw();
            if (hilbert_symbol(a * b, c) != hilbert_symbol(a, c) * hilbert_symbol(b, c))
                return fail_note(note, std::string("bimultiplicativity (left) over ") + name);
            if (hilbert_symbol(a, b * c) != hilbert_symbol(a, b) * hilbert_symbol(a, c))
                return fail_note(note, std::string("bimultiplicativity (right) over ") + name);
            if (hilbert_symbol(a, -a) != 1)
                return fail_note(note, std::string("hilbert(a, -a) != 1 over ") + name);
        }
    }

    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
        FieldSpec k = FieldSpec::parse("Fp:" + std::to_string(p));
        for (std::uint32_t z = 1; z < p; ++z) {
            for (std::uint32_t e = 1; e < p; ++e) {
                Scalar zeta(k, static_cast<long>(z));
                Scalar eta(k, static_cast<long>(e));
                // <<zeta,eta>> = x0^2 - zeta x1^2 - eta x2^2 + zeta eta x3^2.
                bool isotropic = false;
                for (std::uint32_t x0 = 0; x0 < p && !isotropic; ++x0)
                    for (std::uint32_t x1 = 0; x1 < p && !isotropic; ++x1)
                        for (std::uint32_t x2 = 0; x2 < p && !isotropic; ++x2)
                            for (std::uint32_t x3 = 0; x3 < p && !isotropic; ++x3) {
                                if (x0 == 0 && x1 == 0 && x2 == 0 && x3 == 0)
                                    continue;
                                Scalar v0(k, static_cast<long>(x0));
                                Scalar v1(k, static_cast<long>(x1));
                                Scalar v2(k, static_cast<long>(x2));
                                Scalar v3(k, static_cast<long>(x3));
                                Scalar value = v0 * v0 - zeta * v1 * v1 - eta * v2 * v2 +
                                               zeta * eta * v3 * v3;
                                isotropic = value.is_zero();
                            }
                if (pfister_is_split(Pfister2(zeta, eta)) != isotropic)
                    return fail_note(note, "pfister_is_split disagrees with isotropy at p=" +
                                               std::to_string(p));
            }
        }
    }
    return true;
}

} // namespace

int main() {
    criterion(1, 10.0, criterion_1);
    criterion(2, 10.0, criterion_2);
    criterion(3, 0.0, criterion_3);
    criterion(4, 0.0, criterion_4);
    criterion(5, 0.0, criterion_5);
    criterion(6, 0.0, criterion_6);
    criterion(7, 0.0, criterion_7);
    criterion(8, 60.0, criterion_8);
    criterion(9, 0.0, criterion_9);
    criterion(10, 0.0, criterion_10);
    criterion(11, 0.0, criterion_11);
    criterion(12, 0.0, criterion_12);
    if (failures == 0)
        std::printf("all 12 criteria passed\n");
    else
        std::printf("%d criterion(s) failed\n", failures);
    return failures;
}
