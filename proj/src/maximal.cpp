#include "hke/maximal.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "hke/verify.hpp"

namespace hke {

namespace {

constexpr std::size_t kMaxTypicalAlpha = 7;

bool has_power_size(const SetFamily& family, std::size_t alpha) {
    return alpha < 63 && family.size() == (std::size_t{1} << alpha);
}

void require_maximal(const SetFamily& family) {
    if (!is_hke(family)) throw Error(Errc::NotMaximal, "the family is not an hke collection");
    if (!has_power_size(family, family[0].count())) {
        throw Error(Errc::NotMaximal, "an hke family with " + std::to_string(family.size()) +
                                          " members and alpha " + std::to_string(family[0].count()) +
                                          " is not maximal");
    }
}

// Dual pairs without any hke precondition.
std::vector<std::pair<std::size_t, std::size_t>> dual_pairs(const SetFamily& family) {
    const auto& table = family.table();
    auto before = [&](std::size_t a, std::size_t b) { return label_less(table.label(a), table.label(b)); };
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& a : family.members()) {
        for (const auto& d : family.members()) {
            const ElementSet ad = a - d;
            const ElementSet da = d - a;
            if (ad.count() != 1 || da.count() != 1) continue;
            std::size_t x = ad.lowest();
            std::size_t y = da.lowest();
            if (before(y, x)) std::swap(x, y);
            pairs.emplace(x, y);
        }
    }
    std::vector<std::pair<std::size_t, std::size_t>> out(pairs.begin(), pairs.end());
    std::sort(out.begin(), out.end(), [&](const auto& p, const auto& q) {
        if (p.first != q.first) return before(p.first, q.first);
        return before(p.second, q.second);
    });
    return out;
}

// Whether `pairs` split `ground` into disjoint two-element classes.
bool partitions(const std::vector<std::pair<std::size_t, std::size_t>>& pairs, const ElementSet& ground) {
    ElementSet covered;
    for (const auto& [x, y] : pairs) {
        if (x == y || covered.test(x) || covered.test(y)) return false;
        covered.set(x);
        covered.set(y);
    }
    return covered == ground;
}

} // namespace

SetFamily typical_collection(std::size_t alpha) {
    if (alpha < 1 || alpha > kMaxTypicalAlpha) {
        throw Error(Errc::AlphaOutOfRange, "typical collection needs 1 <= alpha <= 7");
    }
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= 2 * alpha; ++i) labels.push_back(std::to_string(i));
    std::vector<ElementSet> members;
    for (std::size_t choice = 0; choice < (std::size_t{1} << alpha); ++choice) {
        ElementSet s;
        for (std::size_t i = 0; i < alpha; ++i) s.set((choice >> i) & 1U ? i + alpha : i);
        members.push_back(s);
    }
    std::sort(members.begin(), members.end(), lex_less);
    return SetFamily(ElementTable(labels), std::move(members));
}

RestrictionMap restriction_map(const SetFamily& family, std::size_t base) {
    if (base >= family.size()) throw Error(Errc::IndexOutOfRange, "base member index out of range");
    require_hke(family);
    RestrictionMap map{.base = base};
    const ElementSet& a = family[base];
    std::unordered_set<ElementSet, ElementSetHash> seen;
    for (const auto& d : family.members()) {
        map.values.push_back(a & d);
        seen.insert(a & d);
    }
    map.injective = seen.size() == family.size();
    map.surjective = has_power_size(family, a.count()) && map.injective;
    return map;
}

std::vector<std::pair<std::size_t, std::size_t>> dual_relation(const SetFamily& family) {
    require_hke(family);
    return dual_pairs(family);
}

DualPairing as_dual_pairing(const SetFamily& family) {
    require_maximal(family);
    DualPairing pairing{.alpha = family[0].count(), .classes = dual_pairs(family)};
    if (pairing.classes.size() != pairing.alpha || !partitions(pairing.classes, family.union_all())) {
        throw Error(Errc::NotMaximal, "the dual relation does not pair up the ground set");
    }
    return pairing;
}

Extension extend(const SetFamily& family, std::size_t base, const ElementSet& subset) {
    if (base >= family.size()) throw Error(Errc::IndexOutOfRange, "base member index out of range");
    require_hke(family);
    const ElementSet& a = family[base];
    if (!subset.subset_of(a)) throw Error(Errc::NotASubset, "E must be a subset of the base member");

    const std::size_t n = family.size();
    const ElementSet ground = family.union_all();
    const ElementSet core = family.intersection_all();
    const auto patterns = membership_patterns(family.members(), family.table().size());

    // e_Γ for every Γ ∋ A with Γ ≠ F, keyed by the membership pattern Γ.
    std::map<MemberPattern, std::size_t> demand;
    subset.for_each([&](std::size_t x) {
        if (!core.test(x)) ++demand[patterns[x]];
    });

    // E_Γ: the e_Γ canonically lowest elements whose pattern is exactly F − Γ.
    ElementSet removed;
    for (const auto& [gamma, count] : demand) {
        MemberPattern dual(gamma.size());
        for (std::size_t w = 0; w < gamma.size(); ++w) {
            const std::size_t bits = std::min<std::size_t>(64, n - 64 * w);
            dual[w] = ~gamma[w] & (bits == 64 ? ~0ULL : (1ULL << bits) - 1);
        }
        ElementSet target;
        (ground - a).for_each([&](std::size_t y) {
            if (patterns[y] == dual) target.set(y);
        });
        const auto ordered = family.table().canonical_indices(target);
        if (ordered.size() < count) {
            throw Error(Errc::TheoremViolation, "dual atom too small for the requested extension");
        }
        for (std::size_t k = 0; k < count; ++k) removed.set(ordered[k]);
    }

    Extension ext{.base_family = family, .added = {}, .fresh = {}};
    ext.base_family = family.with_fresh_labels((core - subset).count(), ext.fresh);
    ext.added = subset | (ground - a - removed) | ext.fresh;

    const auto& grown = ext.base_family;
    if ((a & ext.added) != subset || (ext.added - ground).count() != (core - subset).count() ||
        !detail::can_add_unchecked(grown.members(), base, ext.added, a.count(), grown.table().size())) {
        throw Error(Errc::TheoremViolation, "constructed extension failed its own postconditions");
    }
    return ext;
}

Completion complete_to_maximal(const SetFamily& family) {
    require_hke(family);
    const std::size_t alpha = family[0].count();
    if (alpha > kMaxTypicalAlpha) throw Error(Errc::AlphaOutOfRange, "completion supports alpha <= 7");

    Completion out{.family = family, .original_size = family.size()};
    const ElementSet core = family.intersection_all();
    if (!core.empty()) {
        // B = A ∪ C − ⋂F with C fresh, |C| = |⋂F|.
        ElementSet fresh;
        SetFamily grown = family.with_fresh_labels(core.count(), fresh);
        out.family = grown.with_member((family[0] | fresh) - core);
        out.fresh_labels += fresh.count();
        out.core_stripped = true;
        if (!out.family.intersection_all().empty() || !is_hke(out.family)) {
            throw Error(Errc::TheoremViolation, "clearing the common core did not yield an hke family");
        }
    }

    const std::size_t target = std::size_t{1} << alpha;
    while (out.family.size() < target) {
        const ElementSet& a = out.family[0];
        std::unordered_set<ElementSet, ElementSetHash> image;
        for (const auto& d : out.family.members()) image.insert(a & d);

        const auto elems = a.indices();
        ElementSet missing;
        bool found = false;
        for (std::size_t k = 0; k < (std::size_t{1} << alpha) && !found; ++k) {
            ElementSet e;
            for (std::size_t b = 0; b < alpha; ++b) {
                if ((k >> b) & 1U) e.set(elems[b]);
            }
            if (!image.contains(e)) {
                missing = e;
                found = true;
            }
        }
        if (!found) throw Error(Errc::TheoremViolation, "restriction map is onto but the family is not full");

        const Extension ext = extend(out.family, 0, missing);
        if (ext.base_family.contains(ext.added)) {
            throw Error(Errc::TheoremViolation, "extension returned an existing member");
        }
        out.fresh_labels += ext.fresh.count();
        out.family = ext.extended();
    }
    return out;
}

bool is_maximal(const SetFamily& family) {
    require_hke(family);
    return has_power_size(family, family[0].count());
}

bool characterize_maximal(const SetFamily& family) {
    const std::size_t alpha = alpha_of(family);
    const ElementSet ground = family.union_all();
    if (ground.count() != 2 * alpha) return false;
    const auto pairs = dual_pairs(family);
    if (pairs.size() != alpha || !partitions(pairs, ground)) return false;
    if (!has_power_size(family, alpha)) return false;
    // Distinct α-sets meeting all α classes; with 2^α of them F is every such set.
    for (const auto& m : family.members()) {
        for (const auto& [x, y] : pairs) {
            if (!m.test(x) && !m.test(y)) return false;
        }
    }
    return true;
}

bool dual_membership_test(const SetFamily& family, const std::string& x, const std::string& y) {
    require_maximal(family);
    const std::size_t ix = family.table().at(x);
    const std::size_t iy = family.table().at(y);
    if (ix == iy) throw Error(Errc::PreconditionFailed, "x and y must differ");
    const ElementSet ground = family.union_all();
    if (!ground.test(ix) || !ground.test(iy)) throw Error(Errc::UnknownLabel, "labels must lie in the union");

    const auto pairs = dual_pairs(family);
    const bool related = std::any_of(pairs.begin(), pairs.end(), [&](const auto& p) {
        return (p.first == ix && p.second == iy) || (p.first == iy && p.second == ix);
    });
    bool all_meet = true;
    bool none_hold_both = true;
    for (const auto& m : family.members()) {
        all_meet = all_meet && (m.test(ix) || m.test(iy));
        none_hold_both = none_hold_both && !(m.test(ix) && m.test(iy));
    }
    if (related != all_meet || related != none_hold_both) {
        throw Error(Errc::TheoremViolation, "dual relation disagrees with membership conditions");
    }
    return related;
}

} // namespace hke
