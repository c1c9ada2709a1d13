#include <cstdint>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "albert/automorphism.hpp"
#include "albert/classifier.hpp"
#include "albert/derivations.hpp"
#include "albert/hermitian.hpp"
#include "albert/kac.hpp"
#include "albert/serialization.hpp"
#include "albert/tits.hpp"

namespace {

using namespace albert;
using OrderedJson = nlohmann::ordered_json;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        parts.push_back(item);
    return parts;
}

aut::TorusElement parse_torus(const FieldSpec& k, const std::string& s) {
    std::vector<std::string> parts = split(s, ',');
    if (parts.size() != 4)
        throw std::invalid_argument("--torus wants u1,u2,v1,v2");
    return aut::TorusElement(Scalar::parse(k, parts[0]), Scalar::parse(k, parts[1]),
                             Scalar::parse(k, parts[2]), Scalar::parse(k, parts[3]));
}

Mat3 parse_mat3(const FieldSpec& k, const std::string& s) {
    std::vector<std::string> parts = split(s, ',');
    if (parts.size() != 9)
        throw std::invalid_argument("a 3x3 matrix wants 9 comma-separated entries");
    Mat3 m = Mat3::zero(k);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            m.at(r, c) = Scalar::parse(k, parts[static_cast<std::size_t>(3 * r + c)]);
    return m;
}

Scalar random_scalar(std::mt19937_64& rng, const FieldSpec& k) {
    if (k.modular())
        return Scalar(k, static_cast<long>(rng() % k.p));
    long num = static_cast<long>(rng() % 19) - 9;
    long den = static_cast<long>(rng() % 4) + 1;
    return Scalar(k, num) / Scalar(k, den);
}

tits::Element random_tits(std::mt19937_64& rng, const tits::Algebra& alg) {
    Vec v(27, zero(alg.field));
    for (Scalar& x : v)
        x = random_scalar(rng, alg.field);
    return tits::Element::from_coords(alg, v);
}

herm::Element random_herm(std::mt19937_64& rng, const herm::Algebra& alg) {
    Vec v(27, zero(alg.field()));
    for (Scalar& x : v)
        x = random_scalar(rng, alg.field());
    return herm::Element::from_coords(alg, v);
}

void emit(const OrderedJson& j) { std::cout << j.dump(2) << "\n"; }

// ---------- subcommand bodies ----------

int run_verify_algebra(const FieldSpec& k, std::size_t samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    tits::Algebra talg(k);
    herm::Algebra halg = herm::Algebra::standard(k);
    std::vector<std::pair<std::string, bool>> checks;

    bool tits_comm = true, tits_jordan = true, tits_deg3 = true;
    for (std::size_t i = 0; i < samples; ++i) {
        tits::Element x = random_tits(rng, talg);
        tits::Element y = random_tits(rng, talg);
        tits_comm = tits_comm && tits::tits_mul(x, y) == tits::tits_mul(y, x);
        tits::Element x2 = tits::tits_mul(x, x);
        tits_jordan = tits_jordan && tits::tits_mul(tits::tits_mul(x, y), x2) ==
                                         tits::tits_mul(x, tits::tits_mul(y, x2));
        tits_deg3 = tits_deg3 && tits::degree3_identity_holds(x);
    }
    checks.emplace_back("tits_commutative", tits_comm);
    checks.emplace_back("tits_jordan_identity", tits_jordan);
    checks.emplace_back("tits_degree3_identity", tits_deg3);

    bool herm_comm = true, herm_jordan = true;
    for (std::size_t i = 0; i < samples; ++i) {
        herm::Element x = random_herm(rng, halg);
        herm::Element y = random_herm(rng, halg);
        herm_comm = herm_comm && herm::jordan_mul(x, y) == herm::jordan_mul(y, x);
        herm::Element x2 = herm::jordan_mul(x, x);
        herm_jordan = herm_jordan && herm::jordan_mul(herm::jordan_mul(x, y), x2) ==
                                         herm::jordan_mul(x, herm::jordan_mul(y, x2));
    }
    checks.emplace_back("hermitian_commutative", herm_comm);
    checks.emplace_back("hermitian_jordan_identity", herm_jordan);

    bool lemma = true;
    for (int slot = 1; slot <= 3; ++slot) {
        herm::Element w = herm::Element::diag(halg, slot == 1 ? one(k) : zero(k),
                                              slot == 2 ? one(k) : zero(k),
                                              slot == 3 ? one(k) : zero(k));
        lemma = lemma && herm::idempotent_lemma_report(w).all();
    }
    checks.emplace_back("idempotent_lemma_diagonal", lemma);

    bool pass = true;
    OrderedJson jchecks = OrderedJson::array();
    for (const auto& [name, ok] : checks) {
        pass = pass && ok;
        jchecks.push_back(OrderedJson{{"name", name}, {"pass", ok}});
    }
    emit(OrderedJson{{"field", k.to_string()},
                     {"samples", samples},
                     {"seed", seed},
                     {"checks", std::move(jchecks)},
                     {"pass", pass}});
    return pass ? 0 : 1;
}

int run_check_aut(const FieldSpec& k, const std::string& torus_str, const std::string& uv_str,
                  bool with_theta) {
    tits::Algebra alg(k);
    aut::AlgebraMap map = aut::AlgebraMap::identity(alg);
    if (!torus_str.empty()) {
        map = aut::f_torus(alg, parse_torus(k, torus_str));
    } else if (!uv_str.empty()) {
        std::vector<std::string> halves = split(uv_str, ';');
        if (halves.size() != 2)
            throw std::invalid_argument("--uv wants 'u11,...,u33;v11,...,v33'");
        map = aut::f_uv(alg, parse_mat3(k, halves[0]), parse_mat3(k, halves[1]));
    } else {
        throw std::invalid_argument("check-aut wants --torus or --uv");
    }
    if (with_theta)
        map = aut::theta(alg).after(map);

    aut::CheckResult result = aut::check_automorphism(map);
    OrderedJson j;
    aut::to_json(j, result);
    if (result.pass && map.after(map).is_identity())
        j["fixed_dim"] = aut::fixed_subspace(map).dimension;
    emit(j);
    return result.pass ? 0 : 1;
}

int run_classify(const FieldSpec& k, const std::string& torus_str, const std::string& format) {
    tits::Algebra alg(k);
    aut::TorusElement t = parse_torus(k, torus_str);
    cls::InvolutionInvariant inv = cls::invariant_of(t);
    cls::InvolutionClass c = cls::classify(t);
    std::size_t fixed_dim = aut::type1_involution(alg, t).fixed_dimension;
    if (format == "tsv") {
        std::cout << k.to_string() << "\t" << (c.kind == cls::InvolutionClass::Kind::TypeII
                                                   ? "TypeII"
                                                   : "TypeI")
                  << "\t" << c.label() << "\t" << inv.pfister.zeta.to_string() << "\t"
                  << inv.pfister.eta.to_string() << "\t" << inv.gamma.g1.to_string() << "\t"
                  << inv.gamma.g2.to_string() << "\t" << inv.gamma.g3.to_string() << "\t"
                  << fixed_dim << "\n";
        return 0;
    }
    emit(cls::classification_json(k, t, inv, c, fixed_dim));
    return 0;
}

int run_representatives(const FieldSpec& k, const std::string& format) {
    std::vector<aut::TorusElement> reps = cls::representatives(k); // throws over Q
    OrderedJson out = OrderedJson::array();
    for (const aut::TorusElement& t : reps) {
        cls::InvolutionClass c = cls::classify(t);
        if (format == "tsv") {
            std::cout << t.u1.to_string() << "," << t.u2.to_string() << "," << t.v1.to_string()
                      << "," << t.v2.to_string() << "\t" << c.label() << "\n";
            continue;
        }
        OrderedJson torus;
        aut::to_json(torus, t);
        out.push_back(OrderedJson{{"torus", std::move(torus)}, {"class_label", c.label()}});
    }
    if (format != "tsv")
        emit(out);
    return 0;
}

int run_census(const FieldSpec& k, const cls::CensusOptions& options, const std::string& format) {
    cls::CensusResult result = cls::census(k, options);
    if (format == "tsv") {
        for (const cls::CensusRow& row : result.rows)
            std::cout << row.torus[0] << "\t" << row.torus[1] << "\t" << row.torus[2] << "\t"
                      << row.torus[3] << "\t" << row.label << "\t" << row.fixed_dim << "\n";
        return 0;
    }
    OrderedJson j;
    cls::to_json(j, result);
    OrderedJson out = OrderedJson{{"field", k.to_string()}};
    out.update(j);
    emit(out);
    return 0;
}

int run_kac(unsigned order) {
    OrderedJson out = OrderedJson::array();
    for (const kac::KacSolution& s : kac::enumerate(order)) {
        kac::DynkinType type = kac::centralizer_subdiagram(s);
        OrderedJson js;
        kac::to_json(js, s);
        js["type"] = type.name();
        js["dimension"] = kac::centralizer_group_dimension(s);
        out.push_back(std::move(js));
    }
    emit(out);
    return 0;
}

int run_report(const FieldSpec& k) {
    OrderedJson j{{"field", k.to_string()}};
    cls::ClassCount c1 = cls::class_count(k, cls::InvolutionKind::TypeI);
    j["type1_classes"] = c1.infinite ? OrderedJson("infinite") : OrderedJson(c1.count);
    j["type2_classes"] = cls::class_count(k, cls::InvolutionKind::TypeII).count;

    herm::Algebra halg = herm::Algebra::standard(k);
    herm::Element w = herm::Element::diag(halg, one(k), zero(k), zero(k));
    j["type2_fixed_dim"] = aut::type2_involution(halg, w).fixed_dimension;

    if (!c1.infinite) {
        OrderedJson reps = OrderedJson::array();
        for (const aut::TorusElement& t : cls::representatives(k)) {
            OrderedJson torus;
            aut::to_json(torus, t);
            reps.push_back(OrderedJson{{"torus", std::move(torus)},
                                       {"class_label", cls::classify(t).label()}});
        }
        j["representatives"] = std::move(reps);
    } else {
        OrderedJson family = OrderedJson::array();
        for (const cls::InvolutionClass& c : cls::rational_distinct_family({3, 7, 11, 19}))
            family.push_back(c.label());
        j["rational_family_sample"] = std::move(family);
    }

    if (k.kind == FieldKind::AlgClosedModel) {
        OrderedJson kac_json;
        kac::to_json(kac_json, kac::cross_check_with_classifier(k));
        j["kac"] = std::move(kac_json);
    }
    emit(j);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"split Albert algebras: construction, automorphism checks, and "
                 "involution classification"};
    app.require_subcommand(1);

    std::string field_str = "Q";
    std::string torus_str;
    std::string uv_str;
    std::string format = "json";
    std::size_t samples = 50;
    std::uint64_t seed = 12345;
    unsigned jobs = 1;
    unsigned order = 2;
    bool exhaustive = false;
    bool with_theta = false;

    CLI::App* verify = app.add_subcommand("verify-algebra", "run the algebra property suite");
    verify->add_option("--field", field_str, "field spec: C | Fp:<p> | Q | R | Qp:<p>");
    verify->add_option("--samples", samples, "random draws per property");
    verify->add_option("--seed", seed, "RNG seed");

    CLI::App* check = app.add_subcommand("check-aut", "verify a candidate automorphism");
    check->add_option("--field", field_str, "field spec");
    check->add_option("--torus", torus_str, "torus element u1,u2,v1,v2");
    check->add_option("--uv", uv_str, "pair of 3x3 matrices 'u11,...,u33;v11,...,v33'");
    check->add_flag("--with-theta", with_theta, "compose with the transpose automorphism");

    CLI::App* classify = app.add_subcommand("classify", "classify the involution of a torus element");
    classify->add_option("--field", field_str, "field spec");
    classify->add_option("--torus", torus_str, "torus element u1,u2,v1,v2")->required();
    classify->add_option("--format", format, "json or tsv");

    CLI::App* reps = app.add_subcommand("representatives", "list class representatives");
    reps->add_option("--field", field_str, "field spec");
    reps->add_option("--format", format, "json or tsv");

    CLI::App* census_cmd = app.add_subcommand("census", "classify torus elements en masse");
    census_cmd->add_option("--field", field_str, "finite field spec Fp:<p>");
    census_cmd->add_flag("--exhaustive", exhaustive, "all (p-1)^4 torus elements (p <= 13)");
    census_cmd->add_option("--samples", samples, "sample count when not exhaustive");
    census_cmd->add_option("--seed", seed, "RNG seed for sampling");
    census_cmd->add_option("--jobs", jobs, "worker threads");
    census_cmd->add_option("--format", format, "json or tsv");

    CLI::App* kac_cmd = app.add_subcommand("kac", "enumerate Kac coordinates for a given order");
    kac_cmd->add_option("--order", order, "element order kappa")->required();

    CLI::App* report = app.add_subcommand("report", "field-level classification summary");
    report->add_option("--field", field_str, "field spec");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        FieldSpec k = FieldSpec::parse(field_str);
        if (format != "json" && format != "tsv")
            throw std::invalid_argument("--format wants json or tsv");
        if (verify->parsed())
            return run_verify_algebra(k, samples, seed);
        if (check->parsed())
            return run_check_aut(k, torus_str, uv_str, with_theta);
        if (classify->parsed())
            return run_classify(k, torus_str, format);
        if (reps->parsed())
            return run_representatives(k, format);
        if (census_cmd->parsed()) {
            cls::CensusOptions options;
            options.exhaustive = exhaustive;
            options.samples = samples;
            options.seed = seed;
            options.jobs = jobs;
            options.keep_rows = format == "tsv";
            return run_census(k, options, format);
        }
        if (kac_cmd->parsed())
            return run_kac(order);
        if (report->parsed())
            return run_report(k);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
