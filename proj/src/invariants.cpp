#include "hyperarr/invariants.hpp"

#include <algorithm>

#include "hyperarr/matroid.hpp"
#include "hyperarr/poincare.hpp"

namespace hyperarr {

FilterCheck check_filter(const std::vector<SubsetMask>& k, unsigned m) {
    const SubsetMask full = (1u << m) - 1;
    auto in = [&](SubsetMask s) { return std::binary_search(k.begin(), k.end(), s); };
    FilterCheck c;
    c.contains_full = in(full);
    c.excludes_empty = !in(0);
    c.complement_law = true;
    c.closed_under_intersection = true;
    for (SubsetMask s = 0; s <= full; ++s)
        if (in(s) == in(full & ~s)) c.complement_law = false;
    for (auto s : k)
        for (auto t : k)
            if (!in(s & t)) c.closed_under_intersection = false;
    for (unsigned h = 1; h <= m; ++h) {
        bool principal = true;
        for (SubsetMask s = 0; s <= full && principal; ++s)
            principal = in(s) == (((s >> (h - 1)) & 1u) != 0);
        if (principal) c.principal = h;
    }
    return c;
}

bool unanimity_holds(const std::vector<AdmissibleMap>& maps) {
    for (const auto& map : maps)
        for (const auto& c : map.chambers->chambers()) {
            const std::vector<std::size_t> diagonal(map.family.m, c.id);
            if (induced_phi(*map.chambers, map.family, diagonal) != c.address) return false;
        }
    return true;
}

std::vector<InvariantResult> run_invariant_suite(const Arrangement& a, unsigned m, const AdmissibleOptions& options) {
    std::vector<InvariantResult> out;
    auto record = [&](std::string name, bool ok, std::string detail) {
        out.push_back({std::move(name), ok, std::move(detail)});
    };

    ChamberOptions copts;
    copts.exec = options.exec;
    const auto chambers = enumerate_chambers(a, copts);
    const auto pi = poincare(a);
    const BigInt pi1 = pi.evaluate(BigInt(1));
    record("zaslavsky", pi1 == static_cast<unsigned long>(chambers->size()),
           "pi(1) = " + pi1.get_str() + ", chambers = " + std::to_string(chambers->size()));
    record("poincare-vanishes-at-minus-one", pi.evaluate(BigInt(-1)) == 0, "pi(t) = " + pi.to_string());

    bool antipodal = true;
    for (const auto& c : chambers->chambers()) antipodal = antipodal && chambers->find(-c.address).has_value();
    record("antipodal-closure", antipodal, std::to_string(chambers->size()) + " chambers");

    // The remaining checks enumerate subsets of hyperplanes.
    if (a.size() <= 16) {
        const auto brute = enumerate_chambers_bruteforce(a);
        bool same = brute->size() == chambers->size();
        for (std::size_t i = 0; same && i < brute->size(); ++i)
            same = (*brute)[i].address == (*chambers)[i].address;
        record("incremental-vs-bruteforce", same, std::to_string(brute->size()) + " sign vectors realizable");

        const auto cs = circuits(a);
        bool minimal = true;
        for (const auto& c : cs) minimal = minimal && is_circuit(a, c.indices);
        record("circuits-minimally-dependent", minimal, std::to_string(cs.size()) + " circuits");

        const auto d = decompose(a);
        const bool by_graph = d.decomposable();
        const bool by_poly = divisible_by_one_plus_t_squared(pi);
        const bool by_brute = is_decomposable_bruteforce(a);
        record("decomposability-agreement", by_graph == by_poly && by_poly == by_brute,
               std::string("graph=") + (by_graph ? "decomposable" : "indecomposable") +
                   " poincare=" + (by_poly ? "decomposable" : "indecomposable") +
                   " bipartition=" + (by_brute ? "decomposable" : "indecomposable"));

        const auto maps = enumerate_admissible(chambers, m, options);
        const auto profile = block_profile(a);
        const BigInt formula = count_admissible_formula(profile.singletons, profile.large, m);
        record("admissible-count-formula", formula == static_cast<unsigned long>(maps.size()),
               "enumerated " + std::to_string(maps.size()) + ", formula " + formula.get_str() + " (a=" +
                   std::to_string(profile.singletons) + ", b=" + std::to_string(profile.large) + ", m=" +
                   std::to_string(m) + ")");
        record("unanimity", unanimity_holds(maps), std::to_string(maps.size()) + " maps");

        if (!by_graph && a.size() >= 3) {
            bool laws = true;
            for (const auto& map : maps) {
                const auto h = is_projective(map);
                for (std::size_t j = 0; j < a.size(); ++j)
                    for (Sign s : {Sign::Plus, Sign::Minus}) {
                        const auto fc = check_filter(filter_set_K(map.family, j, s), m);
                        laws = laws && fc.ok() && h && fc.principal == h;
                    }
            }
            record("filter-laws", laws, "every K_j^sigma is {S : h in S}");
        }
    }
    return out;
}

}  // namespace hyperarr
