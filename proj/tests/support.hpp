#pragma once

#include <doctest.h>

#include <string>

#include "hke/error.hpp"
#include "hke/family.hpp"

// Checks that `expr` throws hke::Error carrying `errc`.
#define CHECK_ERRC(expr, errc)                                                                   \
    do {                                                                                         \
        bool thrown_ = false;                                                                    \
        try {                                                                                    \
            (void)(expr);                                                                        \
        } catch (const hke::Error& e) {                                                          \
            thrown_ = true;                                                                      \
            CHECK_MESSAGE(e.code() == (errc), "got " << hke::errc_name(e.code()) << ": " << e.what()); \
        }                                                                                        \
        CHECK_MESSAGE(thrown_, #expr " did not throw");                                          \
    } while (false)

inline hke::SetFamily fam(const std::string& text) { return hke::parse_family(text); }

inline const char* const kWorkedExample = "1 3 5\n1 4 6\n2 3 5\n2 4 5\n2 4 6\n";
inline const char* const kNotHke = "1 2\n1 3\n2 3\n1 4\n";

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

/// Ground table "1".."u".
inline hke::ElementTable numbered_table(std::size_t u) {
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= u; ++i) labels.push_back(std::to_string(i));
    return hke::ElementTable(labels);
}

/// Calls `fn` on every family of 1..max_members distinct non-empty subsets of
/// {1..u} (members listed in increasing bitmask order). With `equal_size`,
/// only families whose members share one cardinality.
inline void for_each_family(std::size_t u, std::size_t max_members, bool equal_size,
                            const std::function<void(const hke::SetFamily&)>& fn) {
    const hke::ElementTable table = numbered_table(u);
    std::vector<hke::ElementSet> pool;
    for (std::uint32_t m = 1; m < (1U << u); ++m) {
        hke::ElementSet s;
        for (std::size_t i = 0; i < u; ++i) {
            if ((m >> i) & 1U) s.set(i);
        }
        pool.push_back(s);
    }
    std::vector<hke::ElementSet> chosen;
    std::function<void(std::size_t)> go = [&](std::size_t next) {
        if (!chosen.empty()) fn(hke::SetFamily(table, chosen));
        if (chosen.size() == max_members) return;
        for (std::size_t k = next; k < pool.size(); ++k) {
            if (equal_size && !chosen.empty() && pool[k].count() != chosen[0].count()) continue;
            chosen.push_back(pool[k]);
            go(k + 1);
            chosen.pop_back();
        }
    };
    go(0);
}
