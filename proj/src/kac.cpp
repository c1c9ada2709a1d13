#include "albert/kac.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "albert/automorphism.hpp"
#include "albert/classifier.hpp"
#include "albert/derivations.hpp"
#include "albert/hermitian.hpp"
#include "albert/tits.hpp"

namespace albert::kac {

std::vector<KacSolution> enumerate(unsigned kappa) {
    if (kappa == 0)
        throw std::invalid_argument("the element order must be positive");
    const auto& marks = AffineF4Diagram::marks;
    std::vector<KacSolution> out;
    std::array<unsigned, 5> rho{};
    for (rho[0] = 0; marks[0] * rho[0] <= kappa; ++rho[0])
        for (rho[1] = 0; marks[0] * rho[0] + marks[1] * rho[1] <= kappa; ++rho[1])
            for (rho[2] = 0;
                 marks[0] * rho[0] + marks[1] * rho[1] + marks[2] * rho[2] <= kappa; ++rho[2])
                for (rho[3] = 0; marks[0] * rho[0] + marks[1] * rho[1] + marks[2] * rho[2] +
                                     marks[3] * rho[3] <=
                                 kappa;
                     ++rho[3]) {
                    unsigned partial = marks[0] * rho[0] + marks[1] * rho[1] +
                                       marks[2] * rho[2] + marks[3] * rho[3];
                    unsigned rest = kappa - partial;
                    if (rest % marks[4] != 0)
                        continue;
                    rho[4] = rest / marks[4];
                    unsigned g = kappa;
                    for (unsigned r : rho)
                        g = std::gcd(g, r);
                    if (g != 1)
                        continue;
                    out.push_back(KacSolution{rho, kappa});
                }
    std::sort(out.begin(), out.end(),
              [](const KacSolution& a, const KacSolution& b) { return a.rho > b.rho; });
    return out;
}

std::string DynkinComponent::name() const { return family + std::to_string(rank); }

std::size_t DynkinComponent::root_count() const {
    switch (family) {
    case 'A':
        return static_cast<std::size_t>(rank) * (rank + 1);
    case 'B':
    case 'C':
        return 2 * static_cast<std::size_t>(rank) * rank;
    case 'F':
        return 48;
    default:
        throw std::logic_error("unknown Dynkin family");
    }
}

std::size_t DynkinComponent::group_dimension() const { return root_count() + rank; }

std::string DynkinType::name() const {
    if (components.empty())
        return "1";
    std::string s;
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (i)
            s += "x";
        s += components[i].name();
    }
    return s;
}

std::size_t DynkinType::root_count() const {
    std::size_t n = 0;
    for (const DynkinComponent& c : components)
        n += c.root_count();
    return n;
}

DynkinType centralizer_subdiagram(const KacSolution& s) {
    std::vector<std::size_t> zeros;
    for (std::size_t i = 0; i < 5; ++i)
        if (s.rho[i] == 0)
            zeros.push_back(i);

    // Induced subgraph of a path is a disjoint union of paths: split the
    // sorted zero set into runs of consecutive vertices.
    std::vector<std::vector<std::size_t>> runs;
    for (std::size_t v : zeros) {
        if (!runs.empty() && AffineF4Diagram::adjacent(runs.back().back(), v))
            runs.back().push_back(v);
        else
            runs.push_back({v});
    }

    DynkinType type;
    for (const auto& run : runs) {
        unsigned shorts = 0, longs = 0;
        bool has_double = false;
        for (std::size_t i = 0; i < run.size(); ++i) {
            (AffineF4Diagram::is_short[run[i]] ? shorts : longs) += 1;
            if (i + 1 < run.size() && AffineF4Diagram::double_edge(run[i], run[i + 1]))
                has_double = true;
        }
        unsigned rank = static_cast<unsigned>(run.size());
        DynkinComponent comp{'A', rank};
        if (has_double) {
            if (shorts == 2 && longs == 2)
                comp = DynkinComponent{'F', 4};
            else if (shorts == 1 && longs >= 1)
                comp = DynkinComponent{'B', rank};
            else if (longs == 1 && shorts >= 1)
                comp = DynkinComponent{'C', rank};
            else
                throw std::logic_error("unrecognized component shape in affine F4");
        }
        type.components.push_back(comp);
    }
    std::sort(type.components.begin(), type.components.end(),
              [](const DynkinComponent& a, const DynkinComponent& b) {
                  return a.family != b.family ? a.family < b.family : a.rank < b.rank;
              });
    return type;
}

std::size_t centralizer_group_dimension(const KacSolution& s) {
    return 4 + centralizer_subdiagram(s).root_count();
}

CrossCheckReport cross_check_with_classifier(const FieldSpec& k) {
    if (k.kind != FieldKind::AlgClosedModel)
        throw std::invalid_argument("the Kac cross-check runs over the algebraically "
                                    "closed model field");
    std::vector<KacSolution> sols = enumerate(2);

    // Realize one involution of each kind and measure its derivation
    // centralizer; TypeI pairs with A1xC3, TypeII with B4.
    tits::Algebra tits_alg(k);
    aut::TorusElement t(one(k), one(k), one(k), one(k));
    std::size_t dim_type1 = der::centralizer_dimension(aut::type1_involution(tits_alg, t));

    herm::Algebra herm_alg = herm::Algebra::standard(k);
    herm::Element w = herm::Element::diag(herm_alg, one(k), zero(k), zero(k));
    std::size_t dim_type2 = der::centralizer_dimension(aut::type2_involution(herm_alg, w));

    CrossCheckReport report;
    report.consistent = sols.size() == 2;
    for (const KacSolution& s : sols) {
        DynkinType type = centralizer_subdiagram(s);
        CrossCheckEntry entry;
        entry.solution = s;
        entry.type = type.name();
        entry.kac_dimension = 4 + type.root_count();
        if (type.name() == "A1xC3")
            entry.involution_dimension = dim_type1;
        else if (type.name() == "B4")
            entry.involution_dimension = dim_type2;
        else
            entry.involution_dimension = 0;
        report.consistent =
            report.consistent && entry.involution_dimension == entry.kac_dimension;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

} // namespace albert::kac
