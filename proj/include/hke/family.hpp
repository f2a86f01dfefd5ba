#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ranges>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hke/element_set.hpp"
#include "hke/error.hpp"

namespace hke {

/// Canonical label order: integer labels first, by value; everything else
/// after, lexicographically.
bool label_less(std::string_view a, std::string_view b);

/// Bijection between element labels and dense indices 0..n-1, in insertion
/// order.
class ElementTable {
public:
    ElementTable() = default;
    explicit ElementTable(const std::vector<std::string>& labels);

    /// Returns the index of `label`, interning it if new.
    std::size_t intern(std::string_view label);
    std::optional<std::size_t> find(std::string_view label) const;
    /// Like find(), but throws UnknownLabel.
    std::size_t at(std::string_view label) const;

    const std::string& label(std::size_t i) const { return labels_.at(i); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::size_t size() const { return labels_.size(); }

    /// Smallest non-negative integer whose decimal form is not yet a label.
    std::string fresh_label() const;
    /// Interns `count` fresh labels and returns their indices as a set.
    ElementSet add_fresh(std::size_t count);

    /// Indices of `s` sorted by canonical label order.
    std::vector<std::size_t> canonical_indices(const ElementSet& s) const;
    /// Labels of `s` in canonical order.
    std::vector<std::string> labels_of(const ElementSet& s) const;
    /// The set of the given labels; throws UnknownLabel.
    ElementSet set_of(const std::vector<std::string>& labels) const;

    bool operator==(const ElementTable& o) const { return labels_ == o.labels_; }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// Mask over member positions of a SetFamily.
struct Selector {
    std::uint64_t mask = 0;

    bool empty() const { return mask == 0; }
    bool contains(std::size_t i) const { return (mask >> i) & 1U; }
    std::vector<std::size_t> positions() const;

    static Selector of(std::initializer_list<std::size_t> positions);
    static Selector all(std::size_t n) { return {n >= 64 ? ~0ULL : (1ULL << n) - 1}; }

    bool operator==(const Selector&) const = default;
};

/// Ordered collection of distinct non-empty sets over one element table.
/// Immutable once built.
class SetFamily {
public:
    /// Validates: at least one member, members non-empty and distinct, every
    /// member inside the table.
    SetFamily(ElementTable table, std::vector<ElementSet> members);

    /// Builds a family from label lists; `extra` declares ground elements
    /// outside every member.
    static SetFamily from_labels(const std::vector<std::vector<std::string>>& members,
                                 const std::vector<std::string>& extra = {});

    const ElementTable& table() const { return table_; }
    std::span<const ElementSet> members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    const ElementSet& operator[](std::size_t i) const { return members_[i]; }

    /// Every index in the table, including declared extras.
    ElementSet universe() const { return ElementSet::prefix(table_.size()); }
    ElementSet union_all() const;
    ElementSet intersection_all() const;

    std::optional<std::size_t> position_of(const ElementSet& s) const;
    bool contains(const ElementSet& s) const { return position_of(s).has_value(); }

    /// F ∪ {s}; returns a copy of *this when s is already a member.
    SetFamily with_member(const ElementSet& s) const;
    /// Same members over a table grown by `count` fresh labels; the new
    /// labels' indices are written to `fresh`.
    SetFamily with_fresh_labels(std::size_t count, ElementSet& fresh) const;
    /// Keeps only the selected members (selector over positions).
    SetFamily subfamily(const Selector& sel) const;
    /// Applies a label renaming; `rename` must be injective on the table.
    SetFamily relabeled(const std::unordered_map<std::string, std::string>& rename) const;

    std::vector<std::vector<std::string>> as_labels() const;

    /// Label-level equality: same ground labels, same member sets in the same
    /// order. Index assignment is irrelevant.
    bool operator==(const SetFamily& o) const;
    /// Same ground labels and same member sets, in any order.
    bool same_members(const SetFamily& o) const;

private:
    ElementTable table_;
    std::vector<ElementSet> members_;
};

/// Reads the family file format: one member per line as whitespace-separated
/// labels, '#' comments, blank lines ignored, optional leading
/// "universe: ..." line declaring extra ground elements.
SetFamily parse_family(std::string_view text);
/// Canonical text: members in stored order, labels in canonical order, one
/// space between labels, '\n' after every line.
std::string render_family(const SetFamily& family);

ElementSet union_of(const SetFamily& family, const Selector& sel);
ElementSet intersection_of(const SetFamily& family, const Selector& sel);

/// Common member cardinality; throws NotRelevant naming the first offending pair.
std::size_t alpha_of(const SetFamily& family);
/// Positions (0, j) of the first member whose size differs from member 0.
std::optional<std::pair<std::size_t, std::size_t>> irrelevant_pair(const SetFamily& family);

inline constexpr std::size_t kMaxEnumeratedMembers = 24;

/// Selectors in increasing mask order: 1..2^n-1 (or 0..2^n-1 when empty
/// selections are allowed).
inline auto enumerate_subcollections(const SetFamily& family, bool require_nonempty) {
    if (family.size() > kMaxEnumeratedMembers) {
        throw Error(Errc::TooLarge, "subcollection enumeration limited to 24 members");
    }
    const std::uint64_t end = 1ULL << family.size();
    return std::views::iota(require_nonempty ? 1ULL : 0ULL, end) |
           std::views::transform([](std::uint64_t m) { return Selector{m}; });
}

/// For every element index, the positions of the members containing it
/// (one bit per member, packed into 64-bit words).
using MemberPattern = std::vector<std::uint64_t>;
std::vector<MemberPattern> membership_patterns(std::span<const ElementSet> members, std::size_t universe_size);

/// Sort key for sets: lexicographic on the ascending index sequence.
bool lex_less(const ElementSet& a, const ElementSet& b);

} // namespace hke
