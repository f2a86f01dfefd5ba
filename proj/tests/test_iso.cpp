#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <unordered_map>

#include "hke/iso.hpp"
#include "hke/maximal.hpp"
#include "oracle.hpp"

using namespace hke;

namespace {

// Renames labels "1".."u" by a random permutation of "u+1".."2u" so the
// two families share no labels.
SetFamily shuffled(const SetFamily& f, std::mt19937_64& rng) {
    const auto& labels = f.table().labels();
    std::vector<std::string> targets;
    for (std::size_t i = 0; i < labels.size(); ++i) targets.push_back(std::to_string(labels.size() + 1 + i));
    std::shuffle(targets.begin(), targets.end(), rng);
    std::unordered_map<std::string, std::string> rename;
    for (std::size_t i = 0; i < labels.size(); ++i) rename[labels[i]] = targets[i];
    return f.relabeled(rename);
}

std::vector<std::size_t> size_profile(const SetFamily& f) {
    std::vector<std::size_t> p;
    for (const auto& m : f.members()) p.push_back(m.count());
    std::sort(p.begin(), p.end());
    p.push_back(f.union_all().count());
    return p;
}

// Families over {1..u} bucketed by an isomorphism invariant.
std::map<std::vector<std::size_t>, std::vector<SetFamily>> buckets(std::size_t u, std::size_t max_members, bool equal_size) {
    std::map<std::vector<std::size_t>, std::vector<SetFamily>> out;
    for_each_family(u, max_members, equal_size, [&](const SetFamily& f) { out[size_profile(f)].push_back(f); });
    return out;
}

} // namespace

TEST_CASE("bijection validation") {
    const SetFamily f = fam("1 2\n2 3\n");
    const SetFamily g = fam("a b\nb c\n");
    CHECK(is_family_bijection(f, g, {{{"1", "a"}, {"2", "b"}, {"3", "c"}}}));
    CHECK_FALSE(is_family_bijection(f, g, {{{"1", "b"}, {"2", "a"}, {"3", "c"}}}));
    CHECK_FALSE(is_family_bijection(f, g, {{{"1", "a"}, {"2", "b"}}}));
    CHECK_FALSE(is_family_bijection(f, g, {{{"1", "a"}, {"2", "a"}, {"3", "c"}}}));
    CHECK_FALSE(is_family_bijection(f, g, {{{"1", "a"}, {"2", "b"}, {"x", "c"}}}));
}

TEST_CASE("isomorphism search agrees with the permutation oracle") {
    std::mt19937_64 rng(11);
    std::size_t pairs = 0;
    for (const auto& [profile, group] : buckets(4, 3, false)) {
        for (const auto& f : group) {
            const SetFamily g = shuffled(f, rng);
            const auto found = are_isomorphic(f, g);
            REQUIRE(found.has_value());
            CHECK(is_family_bijection(f, g, *found));
        }
        for (std::size_t i = 0; i < group.size(); ++i) {
            for (std::size_t j = i; j < group.size(); ++j) {
                const bool expected = oracle::isomorphic(oracle::from_family(group[i]), oracle::from_family(group[j]));
                const auto found = are_isomorphic(group[i], group[j]);
                CHECK(found.has_value() == expected);
                if (found) CHECK(is_family_bijection(group[i], group[j], *found));
                ++pairs;
            }
        }
    }
    CHECK(pairs > 1000);
    CHECK_FALSE(are_isomorphic(fam("1 2\n"), fam("1 2\n3 4\n")).has_value());
    CHECK_FALSE(are_isomorphic(fam("1 2\n"), fam("1\n")).has_value());
}

TEST_CASE("identity is found first for equal families") {
    const SetFamily f = fam(kWorkedExample);
    const auto g = are_isomorphic(f, f);
    REQUIRE(g.has_value());
    for (const auto& [from, onto] : g->forward) CHECK(from == onto);
}

TEST_CASE("canonical form is a complete invariant on small families") {
    std::mt19937_64 rng(5);
    auto check_group = [&](const std::vector<SetFamily>& group) {
        std::vector<std::string> forms;
        for (const auto& f : group) {
            forms.push_back(canonical_form(f));
            CHECK(canonical_form(shuffled(f, rng)) == forms.back());
        }
        for (std::size_t i = 0; i < group.size(); ++i) {
            for (std::size_t j = i + 1; j < group.size(); ++j) {
                const bool expected = oracle::isomorphic(oracle::from_family(group[i]), oracle::from_family(group[j]));
                CHECK((forms[i] == forms[j]) == expected);
            }
        }
    };
    for (const auto& [profile, group] : buckets(4, 4, false)) check_group(group);
    for (const auto& [profile, group] : buckets(5, 3, true)) check_group(group);
}

TEST_CASE("canonical form text") {
    CHECK(canonical_form(fam("x y\n")) == "n 2\n0 1\n");
    CHECK(canonical_form(typical_collection(2)) == canonical_form(fam("a b\nb c\nc d\nd a\n")));
    std::string wide;
    for (int i = 0; i < 13; ++i) wide += std::to_string(i) + " ";
    CHECK_ERRC(canonical_form(fam(wide + "\n")), Errc::TooLarge);
}

TEST_CASE("isomorphism between maximal families follows the dual pairing") {
    std::mt19937_64 rng(3);
    for (std::size_t alpha = 1; alpha <= 4; ++alpha) {
        const SetFamily t = typical_collection(alpha);
        const SetFamily s = shuffled(t, rng);
        CHECK(is_family_bijection(t, s, maximal_iso(t, s)));
        CHECK(is_family_bijection(s, t, maximal_iso(s, t)));
    }
    CHECK_ERRC(maximal_iso(typical_collection(2), typical_collection(3)), Errc::AlphaMismatch);
    CHECK_ERRC(maximal_iso(fam(kWorkedExample), typical_collection(3)), Errc::NotMaximal);
}
