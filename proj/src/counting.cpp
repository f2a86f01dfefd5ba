#include "hke/counting.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <string>
#include <vector>

#include "hke/maximal.hpp"
#include "hke/verify.hpp"

namespace hke {

namespace {

constexpr std::size_t kMaxSearchN = 8;
constexpr std::size_t kMaxSearchGap = 4;
constexpr std::size_t kMaxCoverN = 7;
constexpr std::uint64_t kNodeBudget = 20'000'000;

void require_range(std::size_t alpha, std::size_t n) {
    if (alpha < 1 || n < alpha || n > 2 * alpha) {
        throw Error(Errc::RangeError, "need 1 <= alpha <= n <= 2*alpha, got alpha=" + std::to_string(alpha) +
                                          ", n=" + std::to_string(n));
    }
}

ElementTable numbered(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    return ElementTable(labels);
}

// α-subsets of {0..n-1} in lexicographic order.
std::vector<ElementSet> subsets_of_size(std::size_t n, std::size_t k) {
    std::vector<ElementSet> out;
    for (std::uint32_t m = 0; m < (1U << n); ++m) {
        if (static_cast<std::size_t>(std::popcount(m)) != k) continue;
        ElementSet s;
        for (std::size_t i = 0; i < n; ++i) {
            if ((m >> i) & 1U) s.set(i);
        }
        out.push_back(s);
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

class CountSearch {
public:
    CountSearch(std::size_t alpha, std::size_t n)
        : alpha_(alpha), n_(n), full_(ElementSet::prefix(n)), candidates_(subsets_of_size(n, alpha)) {}

    std::vector<ElementSet> run() {
        chosen_.push_back(candidates_.front());
        go(1, candidates_.front());
        return best_;
    }

private:
    void go(std::size_t next, const ElementSet& covered) {
        if (++nodes_ > kNodeBudget) throw Error(Errc::BudgetExceeded, "a(alpha, n) search exceeded its node budget");
        if (covered == full_ && chosen_.size() > best_.size()) best_ = chosen_;
        for (std::size_t k = next; k < candidates_.size(); ++k) {
            if (chosen_.size() + (candidates_.size() - k) <= best_.size()) return;
            if (!detail::can_add_unchecked(chosen_, 0, candidates_[k], alpha_, n_)) continue;
            chosen_.push_back(candidates_[k]);
            go(k + 1, covered | candidates_[k]);
            chosen_.pop_back();
        }
    }

    std::size_t alpha_, n_;
    ElementSet full_;
    std::vector<ElementSet> candidates_;
    std::vector<ElementSet> chosen_, best_;
    std::uint64_t nodes_ = 0;
};

} // namespace

std::uint64_t a_formula(std::size_t alpha, std::size_t n) {
    require_range(alpha, n);
    return std::uint64_t{1} << (n - alpha);
}

CountResult a_search(std::size_t alpha, std::size_t n) {
    require_range(alpha, n);
    if (n > kMaxSearchN || n - alpha > kMaxSearchGap) {
        throw Error(Errc::BudgetExceeded, "a(alpha, n) search supports n <= 8 and n - alpha <= 4");
    }
    auto best = CountSearch(alpha, n).run();
    if (best.empty()) throw Error(Errc::TheoremViolation, "no hke family covers all n elements");
    const std::uint64_t size = best.size();
    return CountResult{.alpha = alpha,
                       .n = n,
                       .max_size = size,
                       .witness = SetFamily(numbered(n), std::move(best)),
                       .formula_value = a_formula(alpha, n)};
}

SetFamily padded_typical(std::size_t alpha, std::size_t n) {
    require_range(alpha, n);
    if (n == alpha) return SetFamily(numbered(n), {ElementSet::prefix(n)});
    const SetFamily base = typical_collection(n - alpha);
    return n == 2 * alpha ? base : pad_with_core(base, 2 * alpha - n);
}

SetFamily pad_with_core(const SetFamily& family, std::size_t d) {
    require_hke(family);
    if (d == 0) throw Error(Errc::PreconditionFailed, "padding needs d >= 1");
    ElementSet fresh;
    const SetFamily grown = family.with_fresh_labels(d, fresh);
    std::vector<ElementSet> members;
    for (const auto& m : grown.members()) members.push_back(m | fresh);
    return SetFamily(grown.table(), std::move(members));
}

SetFamily strip_core(const SetFamily& family, std::size_t d) {
    require_hke(family);
    if (d == 0) throw Error(Errc::PreconditionFailed, "stripping needs d >= 1");
    const ElementSet core = family.intersection_all();
    if (d > core.count()) {
        throw Error(Errc::CoreTooSmall, "cannot strip " + std::to_string(d) + " elements from a common core of " +
                                            std::to_string(core.count()));
    }
    if (d == family[0].count()) throw Error(Errc::PreconditionFailed, "stripping would empty every member");

    const auto ordered = family.table().canonical_indices(core);
    ElementSet drop;
    for (std::size_t k = 0; k < d; ++k) drop.set(ordered[k]);

    ElementTable table;
    std::vector<std::size_t> to(family.table().size(), 0);
    for (std::size_t i = 0; i < family.table().size(); ++i) {
        if (!drop.test(i)) to[i] = table.intern(family.table().label(i));
    }
    std::vector<ElementSet> members;
    for (const auto& m : family.members()) {
        ElementSet s;
        (m - drop).for_each([&](std::size_t i) { s.set(to[i]); });
        members.push_back(s);
    }
    return SetFamily(std::move(table), std::move(members));
}

std::uint64_t c_of(std::size_t n) {
    if (n < 1) throw Error(Errc::RangeError, "c(n) needs n >= 1");
    if (n / 2 >= 64) throw Error(Errc::RangeError, "c(n) overflows 64 bits");
    return std::uint64_t{1} << (n / 2);
}

CountResult c_search(std::size_t n) {
    const std::uint64_t expected = c_of(n);
    if (n > kMaxCoverN) throw Error(Errc::BudgetExceeded, "c(n) search supports n <= 7");
    std::optional<CountResult> best;
    for (std::size_t alpha = (n + 1) / 2; alpha <= n; ++alpha) {
        CountResult r = a_search(alpha, n);
        if (!best || r.max_size > best->max_size) best = std::move(r);
    }
    best->formula_value = expected;
    if (best->max_size != expected) {
        throw Error(Errc::TheoremViolation, "c(" + std::to_string(n) + ") search found " +
                                                std::to_string(best->max_size) + ", expected " +
                                                std::to_string(expected));
    }
    return std::move(*best);
}

} // namespace hke
