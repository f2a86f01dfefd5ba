#pragma once

#include <cstddef>
#include <cstdint>

#include "hke/family.hpp"

namespace hke {

/// Size of a largest hke family found for (α, n) together with one family
/// attaining it.
struct CountResult {
    std::size_t alpha = 0;
    std::size_t n = 0;
    std::uint64_t max_size = 0;
    SetFamily witness;
    std::uint64_t formula_value = 0;
};

/// 2^(n−α); RangeError unless 1 ≤ α ≤ n ≤ 2α.
std::uint64_t a_formula(std::size_t alpha, std::size_t n);

/// Exhaustive maximum over hke families of α-subsets of {1..n} covering all
/// n elements. The first member is fixed to {1..α}, later members are taken
/// in increasing lexicographic order. n ≤ 8 and n − α ≤ 4.
CountResult a_search(std::size_t alpha, std::size_t n);

/// typical(n − α) with 2α − n common elements added to every member; the
/// single set {1..α} when n = α.
SetFamily padded_typical(std::size_t alpha, std::size_t n);

/// {A ∪ C : A ∈ F} for d fresh labels C.
SetFamily pad_with_core(const SetFamily& family, std::size_t d);

/// {A − C : A ∈ F}, C the d canonically lowest elements of ⋂F, which are
/// also dropped from the ground table.
SetFamily strip_core(const SetFamily& family, std::size_t d);

/// 2^⌊n/2⌋, n ≥ 1.
std::uint64_t c_of(std::size_t n);

/// Maximum of a_search over every α with α ≤ n ≤ 2α (smallest α on ties),
/// checked against c_of. n ≤ 7.
CountResult c_search(std::size_t n);

} // namespace hke
