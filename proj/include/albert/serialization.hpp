#pragma once

// JSON serializers for the CLI and any embedding tools. All scalars are
// emitted as exact decimal strings ("5", "-3/4"); matrices are row-major.

#include <string>

#include "json.hpp"

#include "albert/automorphism.hpp"
#include "albert/classifier.hpp"
#include "albert/field.hpp"
#include "albert/kac.hpp"
#include "albert/linalg.hpp"

namespace albert {

using OrderedJson = nlohmann::ordered_json;

inline void to_json(OrderedJson& j, const Scalar& s) { j = s.to_string(); }

inline OrderedJson json_of_vec(const Vec& v) {
    OrderedJson arr = OrderedJson::array();
    for (const Scalar& s : v)
        arr.push_back(s.to_string());
    return arr;
}

inline OrderedJson json_of_mat(const Mat& m) {
    OrderedJson rows = OrderedJson::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        OrderedJson row = OrderedJson::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(m.at(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline void to_json(OrderedJson& j, const GammaTriple& g) {
    j = OrderedJson::array({g.g1.to_string(), g.g2.to_string(), g.g3.to_string()});
}

inline void to_json(OrderedJson& j, const Pfister2& f) {
    j = OrderedJson::array({f.zeta.to_string(), f.eta.to_string()});
}

} // namespace albert

namespace albert::aut {

inline void to_json(OrderedJson& j, const TorusElement& t) {
    j = OrderedJson::array(
        {t.u1.to_string(), t.u2.to_string(), t.v1.to_string(), t.v2.to_string()});
}

inline void to_json(OrderedJson& j, const AlgebraMap& m) {
    j = OrderedJson{
        {"presentation", m.presentation() == Presentation::Tits ? "tits" : "hermitian"},
        {"field", m.field().to_string()},
        {"matrix", json_of_mat(m.matrix)},
    };
}

inline void to_json(OrderedJson& j, const CheckResult& r) {
    j = OrderedJson{{"pass", r.pass}};
    if (!r.pass) {
        j["reason"] = r.reason;
        if (r.witness)
            j["witness"] = json_of_vec(*r.witness);
        if (r.witness_second)
            j["witness_second"] = json_of_vec(*r.witness_second);
    }
}

inline void to_json(OrderedJson& j, const InvolutionDescriptor& d) {
    OrderedJson params;
    if (d.torus)
        to_json(params, *d.torus);
    else if (d.idempotent)
        params = json_of_vec(d.idempotent->coords());
    j = OrderedJson{
        {"kind", d.kind == InvolutionDescriptor::Kind::TypeI ? "TypeI" : "TypeII"},
        {"params", std::move(params)},
        {"fixed_dim", d.fixed_dimension},
    };
}

} // namespace albert::aut

namespace albert::cls {

inline void to_json(OrderedJson& j, const InvolutionClass& c) {
    j = OrderedJson{{"label", c.label()}};
}

// The CLI-facing classification record.
inline OrderedJson classification_json(const FieldSpec& k, const aut::TorusElement& t,
                                       const InvolutionInvariant& inv,
                                       const InvolutionClass& cls, std::size_t fixed_dim) {
    OrderedJson torus;
    aut::to_json(torus, t);
    return OrderedJson{
        {"field", k.to_string()},
        {"kind", cls.kind == InvolutionClass::Kind::TypeII ? "TypeII" : "TypeI"},
        {"class_label", cls.label()},
        {"torus", std::move(torus)},
        {"pfister", OrderedJson::array(
                        {inv.pfister.zeta.to_string(), inv.pfister.eta.to_string()})},
        {"gamma", OrderedJson::array({inv.gamma.g1.to_string(), inv.gamma.g2.to_string(),
                                      inv.gamma.g3.to_string()})},
        {"fixed_dim", fixed_dim},
    };
}

inline void to_json(OrderedJson& j, const CensusResult& r) {
    OrderedJson hist = OrderedJson::array();
    for (const auto& [cls, count] : r.histogram)
        hist.push_back(OrderedJson{{"label", cls.label()}, {"count", count}});
    j = OrderedJson{
        {"total", r.total},
        {"all_fixed_dim_15", r.all_fixed_dim_15},
        {"histogram", std::move(hist)},
    };
}

} // namespace albert::cls

namespace albert::kac {

inline void to_json(OrderedJson& j, const KacSolution& s) {
    j = OrderedJson{
        {"rho", OrderedJson::array({s.rho[0], s.rho[1], s.rho[2], s.rho[3], s.rho[4]})},
        {"order", s.order},
    };
}

inline void to_json(OrderedJson& j, const CrossCheckEntry& e) {
    OrderedJson sol;
    to_json(sol, e.solution);
    j = OrderedJson{
        {"solution", std::move(sol)},
        {"type", e.type},
        {"kac_dimension", e.kac_dimension},
        {"involution_dimension", e.involution_dimension},
    };
}

inline void to_json(OrderedJson& j, const CrossCheckReport& r) {
    OrderedJson entries = OrderedJson::array();
    for (const CrossCheckEntry& e : r.entries) {
        OrderedJson ej;
        to_json(ej, e);
        entries.push_back(std::move(ej));
    }
    j = OrderedJson{{"consistent", r.consistent}, {"entries", std::move(entries)}};
}

} // namespace albert::kac
