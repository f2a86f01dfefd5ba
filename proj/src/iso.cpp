#include "hke/iso.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <vector>

#include "hke/maximal.hpp"
#include "hke/verify.hpp"

namespace hke {

namespace {

// F re-expressed over 0..n-1, where n = |⋃F| and local order follows the table.
struct Compact {
    std::vector<std::size_t> to_table; // local index -> table index
    std::vector<ElementSet> members;
};

Compact compact(const SetFamily& family) {
    Compact c;
    const ElementSet ground = family.union_all();
    std::vector<std::size_t> to_local(family.table().size(), 0);
    ground.for_each([&](std::size_t i) {
        to_local[i] = c.to_table.size();
        c.to_table.push_back(i);
    });
    for (const auto& m : family.members()) {
        ElementSet s;
        m.for_each([&](std::size_t i) { s.set(to_local[i]); });
        c.members.push_back(s);
    }
    return c;
}

std::vector<std::vector<std::size_t>> element_signatures(const Compact& c) {
    std::vector<std::vector<std::size_t>> sig(c.to_table.size());
    for (const auto& m : c.members) {
        m.for_each([&](std::size_t x) { sig[x].push_back(m.count()); });
    }
    for (auto& s : sig) std::sort(s.begin(), s.end());
    return sig;
}

class IsoSearch {
public:
    IsoSearch(const Compact& a, const Compact& b) : a_(a), b_(b), map_(a.to_table.size()), used_(b.to_table.size()) {
        sig_a_ = element_signatures(a);
        sig_b_ = element_signatures(b);
        target_ = b.members;
    }

    bool run() { return assign(0); }
    const std::vector<std::size_t>& mapping() const { return map_; }

private:
    // Restrictions of F1 to the mapped prefix, carried over, must match the
    // restrictions of F2 to the image, as multisets.
    bool consistent(std::size_t assigned) const {
        ElementSet img;
        for (std::size_t x = 0; x < assigned; ++x) img.set(map_[x]);
        std::vector<ElementSet> lhs, rhs;
        lhs.reserve(a_.members.size());
        rhs.reserve(b_.members.size());
        for (const auto& s : a_.members) {
            ElementSet t;
            s.for_each([&](std::size_t x) {
                if (x < assigned) t.set(map_[x]);
            });
            lhs.push_back(t);
        }
        for (const auto& t : target_) rhs.push_back(t & img);
        std::sort(lhs.begin(), lhs.end());
        std::sort(rhs.begin(), rhs.end());
        return lhs == rhs;
    }

    bool assign(std::size_t x) {
        if (x == map_.size()) return true;
        for (std::size_t y = 0; y < used_.size(); ++y) {
            if (used_[y] || sig_a_[x] != sig_b_[y]) continue;
            map_[x] = y;
            used_[y] = true;
            if (consistent(x + 1) && assign(x + 1)) return true;
            used_[y] = false;
        }
        return false;
    }

    const Compact& a_;
    const Compact& b_;
    std::vector<std::size_t> map_;
    std::vector<bool> used_;
    std::vector<std::vector<std::size_t>> sig_a_, sig_b_;
    std::vector<ElementSet> target_;
};

} // namespace

bool is_family_bijection(const SetFamily& f1, const SetFamily& f2, const FamilyBijection& g) {
    const ElementSet g1 = f1.union_all();
    const ElementSet g2 = f2.union_all();
    if (g.forward.size() != g1.count() || f1.size() != f2.size()) return false;

    std::vector<std::size_t> to(f1.table().size(), 0);
    ElementSet image;
    for (const auto& [from, onto] : g.forward) {
        const auto i = f1.table().find(from);
        const auto j = f2.table().find(onto);
        if (!i || !j || !g1.test(*i) || !g2.test(*j) || image.test(*j)) return false;
        to[*i] = *j;
        image.set(*j);
    }
    if (image != g2) return false;

    std::set<ElementSet> mapped;
    for (const auto& s : f1.members()) {
        ElementSet t;
        s.for_each([&](std::size_t i) { t.set(to[i]); });
        if (!f2.contains(t)) return false;
        mapped.insert(t);
    }
    // Injective on members, equal counts: every member of F2 has its preimage.
    return mapped.size() == f2.size();
}

std::optional<FamilyBijection> are_isomorphic(const SetFamily& f1, const SetFamily& f2) {
    if (f1.size() != f2.size()) return std::nullopt;
    const Compact a = compact(f1);
    const Compact b = compact(f2);
    if (a.to_table.size() != b.to_table.size()) return std::nullopt;
    std::vector<std::size_t> sa, sb;
    for (const auto& m : a.members) sa.push_back(m.count());
    for (const auto& m : b.members) sb.push_back(m.count());
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;

    IsoSearch search(a, b);
    if (!search.run()) return std::nullopt;
    FamilyBijection g;
    const auto& map = search.mapping();
    for (std::size_t x = 0; x < map.size(); ++x) {
        g.forward.emplace(f1.table().label(a.to_table[x]), f2.table().label(b.to_table[map[x]]));
    }
    return g;
}

FamilyBijection maximal_iso(const SetFamily& f1, const SetFamily& f2) {
    for (const auto* f : {&f1, &f2}) {
        if (!is_hke(*f) || !is_maximal(*f)) throw Error(Errc::NotMaximal, "both families must be maximal hke");
    }
    if (f1[0].count() != f2[0].count()) throw Error(Errc::AlphaMismatch, "families have different alpha");

    auto partner_of = [](const SetFamily& f) {
        std::vector<std::size_t> partner(f.table().size(), 0);
        for (const auto& [x, y] : as_dual_pairing(f).classes) {
            partner[x] = y;
            partner[y] = x;
        }
        return partner;
    };
    const auto p1 = partner_of(f1);
    const auto p2 = partner_of(f2);
    const auto a1 = f1.table().canonical_indices(f1[0]);
    const auto a2 = f2.table().canonical_indices(f2[0]);

    FamilyBijection g;
    for (std::size_t k = 0; k < a1.size(); ++k) {
        g.forward.emplace(f1.table().label(a1[k]), f2.table().label(a2[k]));
        g.forward.emplace(f1.table().label(p1[a1[k]]), f2.table().label(p2[a2[k]]));
    }
    if (!is_family_bijection(f1, f2, g)) {
        throw Error(Errc::TheoremViolation, "dual-preserving map is not an isomorphism");
    }
    return g;
}

// ---------------------------------------------------------------- canonical form

namespace {

constexpr std::size_t kMaxCanonicalElements = 12;

class Canonicalizer {
public:
    explicit Canonicalizer(const Compact& c) : members_(c.members), n_(c.to_table.size()) {}

    std::vector<std::uint32_t> run() {
        std::vector<std::size_t> ec(n_, 0);
        std::vector<std::size_t> mc(members_.size(), 0);
        refine(ec, mc);
        search(ec, mc);
        return best_;
    }

private:
    template <class Sig>
    static std::size_t rerank(std::vector<Sig>& sigs, std::vector<std::size_t>& colors) {
        std::vector<Sig> uniq = sigs;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        for (std::size_t i = 0; i < sigs.size(); ++i) {
            colors[i] = static_cast<std::size_t>(std::lower_bound(uniq.begin(), uniq.end(), sigs[i]) - uniq.begin());
        }
        return uniq.size();
    }

    // Colour refinement on the element/member incidence structure.
    void refine(std::vector<std::size_t>& ec, std::vector<std::size_t>& mc) const {
        std::size_t classes = 0;
        for (;;) {
            using Sig = std::pair<std::size_t, std::vector<std::size_t>>;
            std::vector<Sig> es(n_);
            for (std::size_t x = 0; x < n_; ++x) es[x].first = ec[x];
            for (std::size_t j = 0; j < members_.size(); ++j) {
                members_[j].for_each([&](std::size_t x) { es[x].second.push_back(mc[j]); });
            }
            for (auto& s : es) std::sort(s.second.begin(), s.second.end());
            const std::size_t ne = rerank(es, ec);

            std::vector<Sig> ms(members_.size());
            for (std::size_t j = 0; j < members_.size(); ++j) {
                ms[j].first = mc[j];
                members_[j].for_each([&](std::size_t x) { ms[j].second.push_back(ec[x]); });
                std::sort(ms[j].second.begin(), ms[j].second.end());
            }
            const std::size_t nm = rerank(ms, mc);
            if (ne + nm == classes) return;
            classes = ne + nm;
        }
    }

    void search(const std::vector<std::size_t>& ec, const std::vector<std::size_t>& mc) {
        std::vector<std::size_t> size(n_, 0);
        for (auto c : ec) ++size[c];
        std::size_t cell = n_;
        for (std::size_t c = 0; c < n_; ++c) {
            if (size[c] > 1) {
                cell = c;
                break;
            }
        }
        if (cell == n_) {
            leaf(ec);
            return;
        }
        for (std::size_t x = 0; x < n_; ++x) {
            if (ec[x] != cell) continue;
            std::vector<std::size_t> e2(n_);
            for (std::size_t y = 0; y < n_; ++y) e2[y] = 2 * ec[y] + ((ec[y] == cell && y != x) ? 1 : 0);
            std::vector<std::size_t> m2 = mc;
            refine(e2, m2);
            search(e2, m2);
        }
    }

    void leaf(const std::vector<std::size_t>& ec) {
        std::vector<std::uint32_t> cert;
        cert.reserve(members_.size());
        for (const auto& m : members_) {
            std::uint32_t t = 0;
            m.for_each([&](std::size_t x) { t |= 1U << ec[x]; });
            cert.push_back(t);
        }
        std::sort(cert.begin(), cert.end());
        if (best_.empty() || cert < best_) best_ = std::move(cert);
    }

    const std::vector<ElementSet>& members_;
    std::size_t n_;
    std::vector<std::uint32_t> best_;
};

} // namespace

std::string canonical_form(const SetFamily& family) {
    const Compact c = compact(family);
    if (c.to_table.size() > kMaxCanonicalElements) {
        throw Error(Errc::TooLarge, "canonical form supports at most 12 ground elements");
    }
    const auto cert = Canonicalizer(c).run();
    std::ostringstream out;
    out << "n " << c.to_table.size() << '\n';
    for (auto mask : cert) {
        bool first = true;
        for (std::size_t x = 0; x < c.to_table.size(); ++x) {
            if ((mask >> x) & 1U) {
                out << (first ? "" : " ") << x;
                first = false;
            }
        }
        out << '\n';
    }
    return out.str();
}

} // namespace hke
