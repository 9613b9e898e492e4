#pragma once

#include <string>
#include <vector>

#include "hyperarr/admissible.hpp"

namespace hyperarr {

struct InvariantResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Filter laws on K = K_j^sigma of an admissible family: the full set belongs to
/// K, exactly one of S and its complement does, and K is closed under
/// intersection. Returns the dictator h if additionally K = {S : h in S}.
struct FilterCheck {
    bool contains_full = false;
    bool complement_law = false;
    bool closed_under_intersection = false;
    bool excludes_empty = false;
    std::optional<unsigned> principal;  // h with K = {S : h in S}
    bool ok() const { return contains_full && complement_law && closed_under_intersection && excludes_empty; }
};
FilterCheck check_filter(const std::vector<SubsetMask>& k, unsigned m);

/// Every enumerated map fixes each diagonal tuple (C, ..., C).
bool unanimity_holds(const std::vector<AdmissibleMap>& maps);

/// Cross-module checks on one arrangement: chamber count against pi(A, 1),
/// incremental against brute-force enumeration, antipodal closure, pi(A, -1) = 0,
/// circuit minimality, the three decomposability criteria, and the admissible
/// map count against the product formula together with unanimity and filter laws.
std::vector<InvariantResult> run_invariant_suite(const Arrangement& a, unsigned m,
                                                 const AdmissibleOptions& options = {});

}  // namespace hyperarr
