#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hke/family.hpp"

namespace hke {

/// Partition of ⋃F into α two-element classes of the dual relation.
/// Class members are element indices of the owning family's table.
struct DualPairing {
    std::size_t alpha = 0;
    std::vector<std::pair<std::size_t, std::size_t>> classes;
};

/// D ↦ A ∩ D for a fixed base member A.
struct RestrictionMap {
    std::size_t base = 0;
    std::vector<ElementSet> values; // values[j] = A ∩ F[j]
    bool injective = false;
    bool surjective = false; // onto every subset of A
};

/// All S ⊆ {1..2α} with i ∈ S ⇔ i+α ∉ S, labels "1".."2α", members in
/// lexicographic order. 1 ≤ α ≤ 7.
SetFamily typical_collection(std::size_t alpha);

RestrictionMap restriction_map(const SetFamily& family, std::size_t base);

/// Unordered pairs {x, y}, x ≠ y, with A − D = {x} and D − A = {y} for some
/// members A, D. Each pair is ordered by canonical label order; the list is
/// sorted by the first label.
std::vector<std::pair<std::size_t, std::size_t>> dual_relation(const SetFamily& family);

/// Validated pairing for a maximal hke family; NotMaximal otherwise.
DualPairing as_dual_pairing(const SetFamily& family);

/// The constructed set D together with the ground table it lives in (the
/// family's table plus any fresh labels).
struct Extension {
    SetFamily base_family; // the input members over the (possibly grown) table
    ElementSet added;
    ElementSet fresh;      // labels created for D

    SetFamily extended() const { return base_family.with_member(added); }
};

/// Builds D with A ∩ D = E, F ∪ {D} hke and |D − ⋃F| = |⋂F − E|, for
/// A = F[base] and E ⊆ A.
Extension extend(const SetFamily& family, std::size_t base, const ElementSet& subset);

struct Completion {
    SetFamily family;              // original members first, additions after
    std::size_t original_size = 0;
    std::size_t fresh_labels = 0;  // ground elements created along the way
    bool core_stripped = false;    // whether a ⋂F-clearing set was added first
};

/// Grows an hke family to a maximal one (2^α members). α ≤ 7.
Completion complete_to_maximal(const SetFamily& family);

/// |F| = 2^α for hke F.
bool is_maximal(const SetFamily& family);

/// |⋃F| = 2α, the dual relation splits ⋃F into α pairs, and F is exactly the
/// family of α-sets meeting every pair. Needs only relevance.
bool characterize_maximal(const SetFamily& family);

/// x ≈ y in a maximal hke family; cross-checked against "every member meets
/// {x, y}" and "no member holds both".
bool dual_membership_test(const SetFamily& family, const std::string& x, const std::string& y);

} // namespace hke
