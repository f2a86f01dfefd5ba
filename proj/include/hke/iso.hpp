#pragma once

#include <map>
#include <optional>
#include <string>

#include "hke/family.hpp"

namespace hke {

/// Label map from ⋃F1 onto ⋃F2 carrying members onto members.
struct FamilyBijection {
    std::map<std::string, std::string> forward;
};

/// Whether `g` is a bijection ⋃F1 → ⋃F2 with g[S] ∈ F2 for S ∈ F1 and
/// g⁻¹[T] ∈ F1 for T ∈ F2.
bool is_family_bijection(const SetFamily& f1, const SetFamily& f2, const FamilyBijection& g);

/// First witnessing bijection in backtracking order (elements of F1 in table
/// order, candidates in F2 table order), or nullopt.
std::optional<FamilyBijection> are_isomorphic(const SetFamily& f1, const SetFamily& f2);

/// Constructive isomorphism between maximal hke families of equal α: the
/// first members are matched in canonical order and the rest follows duals.
FamilyBijection maximal_iso(const SetFamily& f1, const SetFamily& f2);

/// Relabeling-invariant text (|⋃F| ≤ 12): the least render of F over all
/// relabelings by 0..n-1 reachable through colour refinement.
std::string canonical_form(const SetFamily& family);

} // namespace hke
