#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperarr/admissible.hpp"

namespace hyperarr {

/// Social-welfare reading of the admissible maps of a braid arrangement: chambers
/// are preference orders of ell options, a map aggregates m voters.
struct ArrowReport {
    struct Entry {
        PhiFamily family;
        std::optional<unsigned> dictator;
    };

    std::size_t ell = 0;
    unsigned m = 0;
    std::vector<std::string> hyperplane_labels;
    std::vector<std::pair<SignVector, std::string>> orders;  // chamber id -> (address, order)
    std::vector<Entry> maps;
    BlockProfile profile;
    BigInt formula_count;

    std::size_t non_projective() const;
    bool counts_agree() const { return formula_count == static_cast<unsigned long>(maps.size()); }
    bool all_dictatorships() const { return non_projective() == 0; }
    /// Counts agree, and for ell >= 3 every map is a dictatorship.
    bool passed() const { return counts_agree() && (ell < 3 || all_dictatorships()); }
};

ArrowReport arrow_report(std::size_t ell, unsigned m, const AdmissibleOptions& options = {});

std::string render_text(const ArrowReport& report);

/// Human-readable summary, e.g. "2 admissible maps, all dictatorships".
std::string summary_line(const ArrowReport& report);

}  // namespace hyperarr
