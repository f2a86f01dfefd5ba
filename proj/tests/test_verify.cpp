#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include <random>

#include "hke/maximal.hpp"
#include "hke/verify.hpp"
#include "oracle.hpp"

using namespace hke;

TEST_CASE("worked example is hke under every checker") {
    const SetFamily f = fam(kWorkedExample);
    for (const auto& v : {check_hke_definition(f), check_hke_pairwise(f), check_hke_partition(f)}) {
        CHECK(v.holds);
        CHECK(v.alpha == 3);
        CHECK(std::holds_alternative<std::monostate>(v.witness));
    }
    CHECK(check_ke(f).holds);
    CHECK(is_hke(f));
}

TEST_CASE("non-hke family: smallest failing subcollection, yet KE as a whole") {
    const SetFamily f = fam(kNotHke);
    const HkeVerdict v = check_hke_definition(f);
    CHECK_FALSE(v.holds);
    REQUIRE(std::holds_alternative<GammaWitness>(v.witness));
    CHECK(std::get<GammaWitness>(v.witness).gamma == Selector::of({0, 1, 2}));
    CHECK(witness_reproduces(f, v));
    CHECK(check_ke(f).holds);
    CHECK_FALSE(is_hke(f));

    const HkeVerdict p = check_hke_pairwise(f);
    CHECK_FALSE(p.holds);
    CHECK(witness_reproduces(f, p));
    const HkeVerdict q = check_hke_partition(f);
    CHECK_FALSE(q.holds);
    CHECK(witness_reproduces(f, q));
}

TEST_CASE("preconditions") {
    CHECK_ERRC(check_hke_definition(fam("1 2\n3\n")), Errc::NotRelevant);
    CHECK_ERRC(check_hke_pairwise(fam("1 2\n3\n")), Errc::NotRelevant);
    CHECK_ERRC(check_ke(fam("1 2\n3\n")), Errc::NotRelevant);
    std::string many;
    for (int i = 0; i < 17; ++i) many += std::to_string(i) + "\n";
    CHECK_ERRC(check_hke_pairwise(fam(many)), Errc::TooLarge);
    CHECK(check_hke_definition(fam(many)).holds == false);

    const SetFamily f = fam(kWorkedExample);
    CHECK_ERRC(equality1_holds(f, Selector{}, Selector::of({1})), Errc::EmptySelector);
    CHECK_ERRC(equality1_holds(f, Selector::of({0, 1}), Selector::of({1})), Errc::OverlappingSelectors);
    CHECK_ERRC(mode_from_name("fast"), Errc::PreconditionFailed);
    CHECK(mode_from_name("pairwise") == CheckMode::Pairwise);
}

TEST_CASE("partition checker needs no relevance and rejects irrelevant families") {
    const HkeVerdict v = check_hke_partition(fam("1\n1 2\n"));
    CHECK_FALSE(v.holds);
    CHECK_FALSE(v.alpha.has_value());
    CHECK(witness_reproduces(fam("1\n1 2\n"), v));
}

TEST_CASE("every checker matches the brute-force oracle on small universes") {
    std::size_t seen = 0;
    for_each_family(4, 4, true, [&](const SetFamily& f) {
        const bool expected = oracle::hke(oracle::from_family(f));
        CHECK(check_hke_definition(f).holds == expected);
        CHECK(check_hke_pairwise(f).holds == expected);
        CHECK(check_hke_partition(f).holds == expected);
        CHECK(is_hke(f) == expected);
        CHECK(check_ke(f).holds == oracle::ke(oracle::from_family(f)));
        for (const auto& v : {check_hke_definition(f), check_hke_pairwise(f), check_hke_partition(f)}) {
            if (!v.holds) CHECK(witness_reproduces(f, v));
        }
        ++seen;
    });
    CHECK(seen == 87);
}

TEST_CASE("partition checker and is_hke on mixed-size families") {
    for_each_family(4, 3, false, [](const SetFamily& f) {
        const bool expected = oracle::hke(oracle::from_family(f));
        CHECK(check_hke_partition(f).holds == expected);
        CHECK(is_hke(f) == expected);
    });
}

TEST_CASE("equality 1 against the oracle") {
    const SetFamily f = fam("1 2 3\n1 2 4\n1 5 6\n2 5 6\n");
    const oracle::Fam o = oracle::from_family(f);
    for (std::uint64_t a = 1; a < 16; ++a) {
        for (std::uint64_t b = 1; b < 16; ++b) {
            if (a & b) continue;
            const bool expected =
                oracle::minus(oracle::meet(o, a), oracle::unite(o, b)).size() ==
                oracle::minus(oracle::meet(o, b), oracle::unite(o, a)).size();
            CHECK(equality1_holds(f, Selector{a}, Selector{b}) == expected);
        }
    }
}

TEST_CASE("can_add agrees with re-verifying the grown family") {
    std::mt19937_64 rng(7);
    for_each_family(5, 3, true, [&](const SetFamily& f) {
        if (!is_hke(f) || rng() % 4 != 0) return;
        const std::size_t alpha = f[0].count();
        for (std::uint32_t m = 1; m < 32; ++m) {
            ElementSet d;
            for (std::size_t i = 0; i < 5; ++i) {
                if ((m >> i) & 1U) d.set(i);
            }
            if (f.contains(d)) continue;
            const bool expected = d.count() == alpha && oracle::hke(oracle::from_family(f.with_member(d)));
            for (std::size_t base = 0; base < f.size(); ++base) CHECK(can_add(f, base, d) == expected);
        }
    });
    CHECK_ERRC(can_add(fam(kNotHke), 0, ElementSet::of({0, 1})), Errc::NotHke);
    CHECK_ERRC(can_add(fam(kWorkedExample), 9, ElementSet::of({0})), Errc::IndexOutOfRange);
    CHECK_ERRC(can_add(fam("1 2\n"), 0, ElementSet::of({5})), Errc::UnknownLabel);
}

TEST_CASE("is_hke handles families too large for enumeration") {
    const SetFamily t5 = typical_collection(5);
    CHECK(t5.size() == 32);
    CHECK(is_hke(t5));
    CHECK_ERRC(check_hke_definition(t5), Errc::TooLarge);
    CHECK(check_hke_partition(typical_collection(4)).holds);
    std::vector<ElementSet> members(t5.members().begin(), t5.members().end());
    members.back() = ElementSet::of({0, 1, 2, 3, 5});
    REQUIRE_FALSE(t5.contains(members.back()));
    CHECK_FALSE(is_hke(SetFamily(t5.table(), members)));
}

TEST_CASE("triple and quadruple identities on hke families") {
    std::size_t tested = 0;
    for_each_family(5, 4, true, [&](const SetFamily& f) {
        if (f.size() < 3 || !is_hke(f)) return;
        CHECK(exercise1_identities(f));
        ++tested;
    });
    CHECK(tested > 0);
    CHECK_ERRC(exercise1_identities(fam("1 2\n3 4\n")), Errc::TooSmall);
    CHECK_ERRC(exercise1_identities(fam(kNotHke)), Errc::NotHke);
}
