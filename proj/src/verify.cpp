#include "hke/verify.hpp"

#include <map>
#include <string>
#include <vector>

namespace hke {

std::string_view mode_name(CheckMode mode) noexcept {
    switch (mode) {
    case CheckMode::Ke: return "ke";
    case CheckMode::Definition: return "definition";
    case CheckMode::Pairwise: return "pairwise";
    case CheckMode::Partition: return "partition";
    }
    return "unknown";
}

CheckMode mode_from_name(std::string_view name) {
    for (auto m : {CheckMode::Ke, CheckMode::Definition, CheckMode::Pairwise, CheckMode::Partition}) {
        if (mode_name(m) == name) return m;
    }
    throw Error(Errc::PreconditionFailed, "unknown check mode '" + std::string(name) + "'");
}

namespace {

constexpr std::size_t kMaxPairwiseMembers = 16;

// Union and intersection of any member subset in O(1), from two half tables.
class SubfamilyAlgebra {
public:
    SubfamilyAlgebra(const SetFamily& family, const ElementSet& ground)
        : low_bits_(std::min<std::size_t>(family.size(), 12)) {
        const std::size_t high_bits = family.size() - low_bits_;
        build(family, 0, low_bits_, ground, low_union_, low_inter_);
        build(family, low_bits_, high_bits, ground, high_union_, high_inter_);
    }

    ElementSet union_of(std::uint64_t mask) const {
        return low_union_[mask & low_mask()] | high_union_[mask >> low_bits_];
    }
    ElementSet intersection_of(std::uint64_t mask) const {
        return low_inter_[mask & low_mask()] & high_inter_[mask >> low_bits_];
    }

private:
    std::uint64_t low_mask() const { return (1ULL << low_bits_) - 1; }

    static void build(const SetFamily& family, std::size_t offset, std::size_t bits, const ElementSet& ground,
                      std::vector<ElementSet>& uni, std::vector<ElementSet>& inter) {
        const std::size_t n = std::size_t{1} << bits;
        uni.assign(n, ElementSet{});
        inter.assign(n, ground);
        for (std::size_t m = 1; m < n; ++m) {
            const std::size_t low = static_cast<std::size_t>(std::countr_zero(m));
            const std::size_t rest = m & (m - 1);
            uni[m] = uni[rest] | family[offset + low];
            inter[m] = inter[rest] & family[offset + low];
        }
    }

    std::size_t low_bits_;
    std::vector<ElementSet> low_union_, low_inter_, high_union_, high_inter_;
};

void guard_size(const SetFamily& family, std::size_t limit, const char* what) {
    if (family.size() > limit) {
        throw Error(Errc::TooLarge, std::string(what) + " checker accepts at most " + std::to_string(limit) +
                                        " members, got " + std::to_string(family.size()));
    }
}

std::uint64_t full_mask(std::size_t n) { return n >= 64 ? ~0ULL : (1ULL << n) - 1; }

} // namespace

HkeVerdict check_ke(const SetFamily& family) {
    const std::size_t alpha = alpha_of(family);
    HkeVerdict v{.alpha = alpha, .mode = CheckMode::Ke};
    v.holds = family.union_all().count() + family.intersection_all().count() == 2 * alpha;
    if (!v.holds) v.witness = GammaWitness{Selector::all(family.size())};
    return v;
}

HkeVerdict check_hke_definition(const SetFamily& family) {
    const std::size_t alpha = alpha_of(family);
    guard_size(family, kMaxEnumeratedMembers, "definition");
    HkeVerdict v{.holds = true, .alpha = alpha, .mode = CheckMode::Definition};
    const SubfamilyAlgebra algebra(family, family.universe());
    const std::uint64_t end = 1ULL << family.size();
    for (std::uint64_t m = 1; m < end; ++m) {
        if (algebra.union_of(m).count() + algebra.intersection_of(m).count() != 2 * alpha) {
            v.holds = false;
            v.witness = GammaWitness{Selector{m}};
            break;
        }
    }
    return v;
}

HkeVerdict check_hke_pairwise(const SetFamily& family) {
    const std::size_t alpha = alpha_of(family);
    guard_size(family, kMaxPairwiseMembers, "pairwise");
    HkeVerdict v{.holds = true, .alpha = alpha, .mode = CheckMode::Pairwise};
    const SubfamilyAlgebra algebra(family, family.universe());
    const std::uint64_t full = full_mask(family.size());
    for (std::uint64_t m1 = 1; m1 <= full; ++m1) {
        const std::uint64_t rest = full & ~m1;
        const ElementSet i1 = algebra.intersection_of(m1);
        const ElementSet u1 = algebra.union_of(m1);
        // Non-empty submasks of `rest` in increasing order.
        for (std::uint64_t m2 = (0 - rest) & rest; m2 != 0; m2 = (m2 - rest) & rest) {
            if ((i1 - algebra.union_of(m2)).count() != (algebra.intersection_of(m2) - u1).count()) {
                v.holds = false;
                v.witness = PairWitness{Selector{m1}, Selector{m2}};
                return v;
            }
        }
    }
    return v;
}

HkeVerdict check_hke_partition(const SetFamily& family) {
    guard_size(family, kMaxEnumeratedMembers, "partition");
    HkeVerdict v{.holds = true, .mode = CheckMode::Partition};
    const SubfamilyAlgebra algebra(family, family.universe());
    const std::uint64_t full = full_mask(family.size());
    for (std::uint64_t m1 = 1; m1 < full; ++m1) {
        const std::uint64_t m2 = full & ~m1;
        if ((algebra.intersection_of(m1) - algebra.union_of(m2)).count() !=
            (algebra.intersection_of(m2) - algebra.union_of(m1)).count()) {
            v.holds = false;
            v.witness = PairWitness{Selector{m1}, Selector{m2}};
            break;
        }
    }
    if (!irrelevant_pair(family)) v.alpha = family[0].count();
    if (v.holds) {
        // A passing family is forced to be relevant with α = (|⋃F| + |⋂F|) / 2.
        const std::size_t twice = family.union_all().count() + family.intersection_all().count();
        for (const auto& m : family.members()) {
            if (2 * m.count() != twice) {
                throw Error(Errc::TheoremViolation, "partition condition holds but the family is not relevant");
            }
        }
    }
    return v;
}

bool equality1_holds(const SetFamily& family, const Selector& g1, const Selector& g2) {
    if (g1.empty() || g2.empty()) throw Error(Errc::EmptySelector, "both subcollections must be non-empty");
    if ((g1.mask & g2.mask) != 0) throw Error(Errc::OverlappingSelectors, "subcollections share a member");
    const ElementSet lhs = intersection_of(family, g1) - union_of(family, g2);
    const ElementSet rhs = intersection_of(family, g2) - union_of(family, g1);
    return lhs.count() == rhs.count();
}

bool witness_reproduces(const SetFamily& family, const HkeVerdict& verdict) {
    if (verdict.holds) return false;
    if (const auto* g = std::get_if<GammaWitness>(&verdict.witness)) {
        if (!verdict.alpha) return false;
        return union_of(family, g->gamma).count() + intersection_of(family, g->gamma).count() != 2 * *verdict.alpha;
    }
    if (const auto* p = std::get_if<PairWitness>(&verdict.witness)) {
        return !equality1_holds(family, p->gamma1, p->gamma2);
    }
    return false;
}

namespace {

MemberPattern complement(const MemberPattern& p, std::size_t members) {
    MemberPattern c(p.size());
    for (std::size_t w = 0; w < p.size(); ++w) {
        const std::size_t bits = std::min<std::size_t>(64, members - 64 * w);
        c[w] = ~p[w] & full_mask(bits);
    }
    return c;
}

bool is_zero(const MemberPattern& p) {
    for (auto w : p) {
        if (w) return false;
    }
    return true;
}

} // namespace

bool is_hke(const SetFamily& family) {
    if (irrelevant_pair(family)) return false;
    const std::size_t n = family.size();
    const auto patterns = membership_patterns(family.members(), family.table().size());
    std::map<MemberPattern, std::size_t> counts;
    for (const auto& p : patterns) {
        if (!is_zero(p)) ++counts[p];
    }
    for (const auto& [p, c] : counts) {
        const MemberPattern comp = complement(p, n);
        if (is_zero(comp)) continue; // ⋂F contributes to no partition
        auto it = counts.find(comp);
        if (it == counts.end() || it->second != c) return false;
    }
    return true;
}

void require_hke(const SetFamily& family) {
    if (!is_hke(family)) throw Error(Errc::NotHke, "the family is not an hke collection");
}

namespace detail {

bool can_add_unchecked(std::span<const ElementSet> members, std::size_t base, const ElementSet& candidate,
                       std::size_t alpha, std::size_t universe_size) {
    if (candidate.count() != alpha) return false;
    std::vector<ElementSet> others;
    others.reserve(members.size());
    for (std::size_t j = 0; j < members.size(); ++j) {
        if (j != base) others.push_back(members[j]);
    }
    if (others.empty()) return true;
    const ElementSet& a = members[base];
    const auto patterns = membership_patterns(others, universe_size);

    // For Γ1 ⊊ F−{A} with Γ2 its complement:
    //   #{x ∈ A∩D : pattern(x) = Γ1} = #{x ∉ A∪D : pattern(x) = Γ2}.
    std::map<MemberPattern, std::pair<std::size_t, std::size_t>> tally; // keyed by Γ1
    for (std::size_t x = 0; x < universe_size; ++x) {
        const bool in_a = a.test(x);
        const bool in_d = candidate.test(x);
        if (in_a && in_d) {
            ++tally[patterns[x]].first;
        } else if (!in_a && !in_d && !is_zero(patterns[x])) {
            ++tally[complement(patterns[x], others.size())].second;
        }
    }
    for (const auto& [gamma1, counts] : tally) {
        if (is_zero(complement(gamma1, others.size()))) continue; // Γ2 = ∅ is not constrained
        if (counts.first != counts.second) return false;
    }
    return true;
}

} // namespace detail

bool can_add(const SetFamily& family, std::size_t base, const ElementSet& candidate) {
    if (base >= family.size()) throw Error(Errc::IndexOutOfRange, "base member index out of range");
    if (!candidate.subset_of(family.universe())) throw Error(Errc::UnknownLabel, "candidate leaves the ground set");
    require_hke(family);
    return detail::can_add_unchecked(family.members(), base, candidate, family[0].count(), family.table().size());
}

bool exercise1_identities(const SetFamily& family) {
    require_hke(family);
    const std::size_t n = family.size();
    if (n < 3) throw Error(Errc::TooSmall, "identities need at least three members");
    const auto f = family.members();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            for (std::size_t c = 0; c < n; ++c) {
                if (a == b || b == c || a == c) continue;
                if ((f[a] - f[b] - f[c]).count() != ((f[b] & f[c]) - f[a]).count()) return false;
                for (std::size_t d = 0; d < n; ++d) {
                    if (d == a || d == b || d == c) continue;
                    if (((f[a] & f[b]) - f[c] - f[d]).count() != ((f[c] & f[d]) - f[a] - f[b]).count()) return false;
                }
            }
        }
    }
    return true;
}

} // namespace hke
