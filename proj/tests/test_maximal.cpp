#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include <set>

#include "hke/iso.hpp"
#include "hke/maximal.hpp"
#include "hke/verify.hpp"
#include "oracle.hpp"

using namespace hke;

namespace {

// All S ⊆ {1..2α} with i ∈ S ⇔ i+α ∉ S, built by filtering every subset.
std::set<oracle::Set> typical_by_filter(int alpha) {
    std::set<oracle::Set> out;
    for (int m = 0; m < (1 << (2 * alpha)); ++m) {
        bool ok = true;
        for (int i = 0; i < alpha; ++i) ok = ok && (((m >> i) & 1) != ((m >> (i + alpha)) & 1));
        if (!ok) continue;
        oracle::Set s;
        for (int i = 0; i < 2 * alpha; ++i) {
            if ((m >> i) & 1) s.insert(i + 1);
        }
        out.insert(s);
    }
    return out;
}

} // namespace

TEST_CASE("typical collection") {
    CHECK(render_family(typical_collection(2)) == "1 2\n1 4\n2 3\n3 4\n");
    for (int alpha = 1; alpha <= 4; ++alpha) {
        const SetFamily t = typical_collection(static_cast<std::size_t>(alpha));
        const oracle::Fam o = oracle::from_family(t);
        CHECK(std::set<oracle::Set>(o.begin(), o.end()) == typical_by_filter(alpha));
        CHECK(t.size() == (1U << alpha));
        CHECK(oracle::hke(o));
    }
    CHECK(is_hke(typical_collection(7)));
    CHECK_ERRC(typical_collection(0), Errc::AlphaOutOfRange);
    CHECK_ERRC(typical_collection(8), Errc::AlphaOutOfRange);
}

TEST_CASE("restriction map: injective on hke families, onto exactly for maximal ones") {
    for_each_family(5, 4, true, [](const SetFamily& f) {
        if (!is_hke(f)) return;
        const bool maximal = f.size() == (1U << f[0].count());
        for (std::size_t base = 0; base < f.size(); ++base) {
            const RestrictionMap r = restriction_map(f, base);
            CHECK(r.injective);
            CHECK(r.surjective == maximal);
            CHECK(r.values[base] == f[base]);
        }
    });
    const RestrictionMap t = restriction_map(typical_collection(3), 5);
    CHECK(t.injective);
    CHECK(t.surjective);
    CHECK_ERRC(restriction_map(fam(kNotHke), 0), Errc::NotHke);
    CHECK_ERRC(restriction_map(fam(kWorkedExample), 5), Errc::IndexOutOfRange);
}

TEST_CASE("dual relation") {
    const SetFamily t = typical_collection(3);
    const auto pairs = dual_relation(t);
    REQUIRE(pairs.size() == 3);
    for (std::size_t k = 0; k < 3; ++k) {
        CHECK(t.table().label(pairs[k].first) == std::to_string(k + 1));
        CHECK(t.table().label(pairs[k].second) == std::to_string(k + 4));
    }
    const DualPairing p = as_dual_pairing(t);
    CHECK(p.alpha == 3);
    CHECK(p.classes == pairs);
    CHECK_ERRC(as_dual_pairing(fam(kWorkedExample)), Errc::NotMaximal);
    CHECK_ERRC(as_dual_pairing(fam(kNotHke)), Errc::NotMaximal);
    CHECK_ERRC(dual_relation(fam(kNotHke)), Errc::NotHke);
}

TEST_CASE("extension of the worked example") {
    const SetFamily f = fam(kWorkedExample);
    for (std::size_t base = 0; base < f.size(); ++base) {
        for (std::uint32_t k = 0; k < 8; ++k) {
            const auto idx = f[base].indices();
            ElementSet e;
            for (std::size_t b = 0; b < 3; ++b) {
                if ((k >> b) & 1U) e.set(idx[b]);
            }
            const Extension ext = extend(f, base, e);
            CHECK((ext.added & f[base]) == e);
            CHECK((ext.added - f.union_all()).count() == (f.intersection_all() - e).count());
            CHECK(oracle::hke(oracle::from_family(ext.extended())));
        }
    }
    CHECK_ERRC(extend(f, 0, ElementSet::of({3})), Errc::NotASubset);
    CHECK_ERRC(extend(fam(kNotHke), 0, ElementSet{}), Errc::NotHke);
}

TEST_CASE("extension uses fresh labels for the common core") {
    const SetFamily f = fam("1 2\n1 3\n");
    const Extension ext = extend(f, 0, ElementSet{});
    CHECK(ext.fresh.count() == 1);
    CHECK(ext.base_family.table().labels_of(ext.added) == std::vector<std::string>{"0", "3"});
    CHECK(is_hke(ext.extended()));
}

TEST_CASE("completion reaches 2^alpha members and the typical shape") {
    const Completion c = complete_to_maximal(fam(kWorkedExample));
    CHECK(c.family.size() == 8);
    CHECK(c.original_size == 5);
    CHECK_FALSE(c.core_stripped);
    CHECK(c.family.intersection_all().empty());
    CHECK(oracle::hke(oracle::from_family(c.family)));
    CHECK(oracle::isomorphic(oracle::from_family(c.family), oracle::from_family(typical_collection(3))));
    for (std::size_t i = 0; i < 5; ++i) CHECK(c.family.table().labels_of(c.family[i]) == fam(kWorkedExample).as_labels()[i]);

    const Completion d = complete_to_maximal(fam("1 2 3\n1 2 4\n"));
    CHECK(d.core_stripped);
    CHECK(d.family.size() == 8);
    CHECK(d.family.intersection_all().empty());
    CHECK(is_hke(d.family));
    CHECK(are_isomorphic(d.family, typical_collection(3)).has_value());

    const Completion single = complete_to_maximal(fam("a b\n"));
    CHECK(single.family.size() == 4);
    CHECK(is_maximal(single.family));
    CHECK_ERRC(complete_to_maximal(fam(kNotHke)), Errc::NotHke);
}

TEST_CASE("maximality characterisations agree") {
    for_each_family(4, 4, true, [](const SetFamily& f) {
        const bool expected = oracle::hke(oracle::from_family(f)) && f.size() == (1U << f[0].count());
        CHECK(characterize_maximal(f) == expected);
        if (is_hke(f)) CHECK(is_maximal(f) == expected);
    });
    CHECK(characterize_maximal(typical_collection(3)));
    CHECK_FALSE(characterize_maximal(fam(kWorkedExample)));
    CHECK_ERRC(is_maximal(fam(kNotHke)), Errc::NotHke);
    CHECK_ERRC(characterize_maximal(fam("1\n2 3\n")), Errc::NotRelevant);
}

TEST_CASE("dual membership") {
    const SetFamily t = typical_collection(2);
    CHECK(dual_membership_test(t, "1", "3"));
    CHECK(dual_membership_test(t, "4", "2"));
    CHECK_FALSE(dual_membership_test(t, "1", "2"));
    CHECK_ERRC(dual_membership_test(t, "1", "1"), Errc::PreconditionFailed);
    CHECK_ERRC(dual_membership_test(t, "1", "9"), Errc::UnknownLabel);
    CHECK_ERRC(dual_membership_test(fam(kWorkedExample), "1", "2"), Errc::NotMaximal);
}
