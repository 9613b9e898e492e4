#include "hyperarr/arrow.hpp"

#include <algorithm>
#include <sstream>

#include "hyperarr/errors.hpp"

namespace hyperarr {

std::size_t ArrowReport::non_projective() const {
    return static_cast<std::size_t>(
        std::count_if(maps.begin(), maps.end(), [](const Entry& e) { return !e.dictator.has_value(); }));
}

ArrowReport arrow_report(std::size_t ell, unsigned m, const AdmissibleOptions& options) {
    if (ell < 2) throw Error(ErrorKind::MalformedInput, "ell must be at least 2");
    const Arrangement braid = builtin_braid(ell);
    ChamberOptions copts;
    copts.exec = options.exec;
    const auto chambers = enumerate_chambers(braid, copts);

    ArrowReport r;
    r.ell = ell;
    r.m = m;
    r.hyperplane_labels = braid.labels();
    for (const auto& c : chambers->chambers()) r.orders.emplace_back(c.address, permutation_label(ell, c.address));
    for (const auto& map : enumerate_admissible(chambers, m, options))
        r.maps.push_back({map.family, is_projective(map)});
    r.profile = block_profile(braid);
    r.formula_count = count_admissible_formula(r.profile.singletons, r.profile.large, m);
    return r;
}

std::string summary_line(const ArrowReport& r) {
    std::ostringstream os;
    os << r.maps.size() << " admissible map" << (r.maps.size() == 1 ? "" : "s");
    if (r.all_dictatorships())
        os << ", all dictatorships";
    else
        os << ", " << r.non_projective() << " of which " << (r.non_projective() == 1 ? "is" : "are")
           << " non-projective";
    return os.str();
}

std::string render_text(const ArrowReport& r) {
    std::ostringstream os;
    os << "braid arrangement: ell=" << r.ell << ", " << r.hyperplane_labels.size() << " hyperplane"
       << (r.hyperplane_labels.size() == 1 ? "" : "s") << ", m=" << r.m << " voter" << (r.m == 1 ? "" : "s")
       << "\n";
    os << "preference orders (" << r.orders.size() << " chambers):\n";
    for (std::size_t id = 0; id < r.orders.size(); ++id)
        os << "  " << id << "\t" << r.orders[id].first.to_string() << "\t" << r.orders[id].second << "\n";
    os << "admissible maps:\n";
    for (std::size_t k = 0; k < r.maps.size(); ++k) {
        os << "  map " << (k + 1) << ":";
        for (std::size_t j = 0; j < r.maps[k].family.size(); ++j)
            os << " " << r.hyperplane_labels[j] << "=" << r.maps[k].family.plus_fns[j].hex();
        if (r.maps[k].dictator)
            os << "  dictatorship of voter " << *r.maps[k].dictator;
        else
            os << "  non-projective";
        os << "\n";
    }
    os << "formula count: " << r.formula_count.get_str() << " (a=" << r.profile.singletons
       << ", b=" << r.profile.large << "), enumerated " << r.maps.size()
       << (r.counts_agree() ? ", agree" : ", MISMATCH") << "\n";
    os << summary_line(r) << "\n";
    return os.str();
}

}  // namespace hyperarr
