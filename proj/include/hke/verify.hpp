#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <variant>

#include "hke/family.hpp"

namespace hke {

enum class CheckMode { Ke, Definition, Pairwise, Partition };

std::string_view mode_name(CheckMode mode) noexcept;
/// Inverse of mode_name(); throws PreconditionFailed for unknown names.
CheckMode mode_from_name(std::string_view name);

/// A subcollection Γ violating |⋃Γ| + |⋂Γ| = 2α.
struct GammaWitness {
    Selector gamma;
    bool operator==(const GammaWitness&) const = default;
};

/// Disjoint subcollections (Γ1, Γ2) violating |⋂Γ1 − ⋃Γ2| = |⋂Γ2 − ⋃Γ1|.
struct PairWitness {
    Selector gamma1;
    Selector gamma2;
    bool operator==(const PairWitness&) const = default;
};

using Witness = std::variant<std::monostate, GammaWitness, PairWitness>;

struct HkeVerdict {
    bool holds = false;
    std::optional<std::size_t> alpha; // present iff the family is relevant
    Witness witness;                  // monostate iff holds
    CheckMode mode = CheckMode::Definition;
};

/// |⋃F| + |⋂F| = 2α for the whole family only.
HkeVerdict check_ke(const SetFamily& family);

/// Every non-empty Γ ⊆ F satisfies |⋃Γ| + |⋂Γ| = 2α. Witness: smallest failing mask.
HkeVerdict check_hke_definition(const SetFamily& family);

/// Equality-1 for every pair of disjoint non-empty subcollections. At most 16 members.
HkeVerdict check_hke_pairwise(const SetFamily& family);

/// Equality-1 for every two-block partition of F. Does not assume relevance;
/// relevance of a passing family is confirmed afterwards.
HkeVerdict check_hke_partition(const SetFamily& family);

/// |⋂Γ1 − ⋃Γ2| = |⋂Γ2 − ⋃Γ1| for disjoint non-empty selectors.
bool equality1_holds(const SetFamily& family, const Selector& g1, const Selector& g2);

/// Replays a failing verdict's witness against the family; true when the
/// recorded equality is indeed violated.
bool witness_reproduces(const SetFamily& family, const HkeVerdict& verdict);

/// Exact hke test with no size limit. An element lies in ⋂Γ − ⋃(F−Γ) exactly
/// when Γ is its membership pattern, so the partition condition reduces to
/// balancing complementary pattern counts.
bool is_hke(const SetFamily& family);

/// Throws NotHke when is_hke() fails.
void require_hke(const SetFamily& family);

/// Whether F ∪ {D} is hke, for hke F and A = F[base]. Checks |D| = α and the
/// add-one-set partition condition over F − {A}.
bool can_add(const SetFamily& family, std::size_t base, const ElementSet& candidate);

namespace detail {
/// can_add without validating the family; `members` must be hke with common size alpha.
bool can_add_unchecked(std::span<const ElementSet> members, std::size_t base, const ElementSet& candidate,
                       std::size_t alpha, std::size_t universe_size);
} // namespace detail

/// |A−B−C| = |B∩C−A| over ordered distinct triples, and, with four or more
/// members, |A∩B−C−D| = |C∩D−A−B| over ordered distinct quadruples.
bool exercise1_identities(const SetFamily& family);

} // namespace hke
