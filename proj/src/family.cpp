#include "hke/family.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace hke {

namespace {

bool is_integer(std::string_view s) {
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

// Numeric comparison of two integer tokens without overflow.
int compare_integers(std::string_view a, std::string_view b) {
    const bool na = a.front() == '-';
    const bool nb = b.front() == '-';
    if (na != nb) return na ? -1 : 1;
    if (na) {
        a.remove_prefix(1);
        b.remove_prefix(1);
    }
    auto strip = [](std::string_view s) {
        while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
        return s;
    };
    a = strip(a);
    b = strip(b);
    int c = 0;
    if (a.size() != b.size()) {
        c = a.size() < b.size() ? -1 : 1;
    } else if (a != b) {
        c = a < b ? -1 : 1;
    }
    return na ? -c : c;
}

} // namespace

bool label_less(std::string_view a, std::string_view b) {
    const bool ia = is_integer(a);
    const bool ib = is_integer(b);
    if (ia != ib) return ia;
    if (ia) {
        if (int c = compare_integers(a, b); c != 0) return c < 0;
    }
    return a < b;
}

// ---------------------------------------------------------------- ElementTable

ElementTable::ElementTable(const std::vector<std::string>& labels) {
    for (const auto& l : labels) {
        if (index_.contains(l)) throw Error(Errc::ParseError, "duplicate label '" + l + "' in element table");
        intern(l);
    }
}

std::size_t ElementTable::intern(std::string_view label) {
    std::string key(label);
    if (auto it = index_.find(key); it != index_.end()) return it->second;
    if (labels_.size() >= ElementSet::kCapacity) {
        throw Error(Errc::UniverseTooLarge, "more than 128 ground elements");
    }
    const std::size_t i = labels_.size();
    labels_.push_back(key);
    index_.emplace(std::move(key), i);
    return i;
}

std::optional<std::size_t> ElementTable::find(std::string_view label) const {
    if (auto it = index_.find(std::string(label)); it != index_.end()) return it->second;
    return std::nullopt;
}

std::size_t ElementTable::at(std::string_view label) const {
    if (auto i = find(label)) return *i;
    throw Error(Errc::UnknownLabel, "label '" + std::string(label) + "' is not in the ground set");
}

std::string ElementTable::fresh_label() const {
    for (std::size_t k = 0;; ++k) {
        std::string s = std::to_string(k);
        if (!index_.contains(s)) return s;
    }
}

ElementSet ElementTable::add_fresh(std::size_t count) {
    ElementSet out;
    for (std::size_t k = 0; k < count; ++k) out.set(intern(fresh_label()));
    return out;
}

std::vector<std::size_t> ElementTable::canonical_indices(const ElementSet& s) const {
    auto idx = s.indices();
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return label_less(labels_[a], labels_[b]); });
    return idx;
}

std::vector<std::string> ElementTable::labels_of(const ElementSet& s) const {
    std::vector<std::string> out;
    for (auto i : canonical_indices(s)) out.push_back(labels_[i]);
    return out;
}

ElementSet ElementTable::set_of(const std::vector<std::string>& labels) const {
    ElementSet s;
    for (const auto& l : labels) s.set(at(l));
    return s;
}

// ---------------------------------------------------------------- Selector

std::vector<std::size_t> Selector::positions() const {
    std::vector<std::size_t> out;
    for (std::uint64_t m = mask; m != 0; m &= m - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    return out;
}

Selector Selector::of(std::initializer_list<std::size_t> positions) {
    Selector s;
    for (auto p : positions) s.mask |= 1ULL << p;
    return s;
}

// ---------------------------------------------------------------- SetFamily

SetFamily::SetFamily(ElementTable table, std::vector<ElementSet> members)
    : table_(std::move(table)), members_(std::move(members)) {
    if (members_.empty()) throw Error(Errc::EmptyFamily, "a family needs at least one member");
    const ElementSet ground = universe();
    std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
    for (std::size_t i = 0; i < members_.size(); ++i) {
        const auto& m = members_[i];
        if (m.empty()) throw Error(Errc::EmptySet, "member " + std::to_string(i) + " is empty");
        if (!m.subset_of(ground)) throw Error(Errc::UnknownLabel, "member " + std::to_string(i) + " leaves the table");
        if (auto [it, fresh] = seen.emplace(m, i); !fresh) {
            throw Error(Errc::DuplicateSet,
                        "members " + std::to_string(it->second) + " and " + std::to_string(i) + " are equal");
        }
    }
}

SetFamily SetFamily::from_labels(const std::vector<std::vector<std::string>>& members,
                                 const std::vector<std::string>& extra) {
    ElementTable table;
    std::vector<ElementSet> sets;
    for (const auto& m : members) {
        ElementSet s;
        for (const auto& l : m) s.set(table.intern(l));
        sets.push_back(s);
    }
    for (const auto& l : extra) table.intern(l);
    return SetFamily(std::move(table), std::move(sets));
}

ElementSet SetFamily::union_all() const {
    ElementSet u;
    for (const auto& m : members_) u |= m;
    return u;
}

ElementSet SetFamily::intersection_all() const {
    ElementSet x = members_.front();
    for (const auto& m : members_) x &= m;
    return x;
}

std::optional<std::size_t> SetFamily::position_of(const ElementSet& s) const {
    auto it = std::find(members_.begin(), members_.end(), s);
    if (it == members_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - members_.begin());
}

SetFamily SetFamily::with_member(const ElementSet& s) const {
    if (contains(s)) return *this;
    auto members = members_;
    members.push_back(s);
    return SetFamily(table_, std::move(members));
}

SetFamily SetFamily::with_fresh_labels(std::size_t count, ElementSet& fresh) const {
    ElementTable table = table_;
    fresh = table.add_fresh(count);
    return SetFamily(std::move(table), members_);
}

SetFamily SetFamily::subfamily(const Selector& sel) const {
    std::vector<ElementSet> members;
    for (auto p : sel.positions()) {
        if (p >= members_.size()) throw Error(Errc::IndexOutOfRange, "selector exceeds family size");
        members.push_back(members_[p]);
    }
    return SetFamily(table_, std::move(members));
}

SetFamily SetFamily::relabeled(const std::unordered_map<std::string, std::string>& rename) const {
    std::vector<std::string> labels;
    for (const auto& l : table_.labels()) {
        auto it = rename.find(l);
        labels.push_back(it == rename.end() ? l : it->second);
    }
    return SetFamily(ElementTable(labels), members_);
}

std::vector<std::vector<std::string>> SetFamily::as_labels() const {
    std::vector<std::vector<std::string>> out;
    for (const auto& m : members_) out.push_back(table_.labels_of(m));
    return out;
}

namespace {

std::set<std::string> label_set(const ElementTable& t) { return {t.labels().begin(), t.labels().end()}; }

} // namespace

bool SetFamily::operator==(const SetFamily& o) const {
    if (size() != o.size() || table_.size() != o.table_.size()) return false;
    if (label_set(table_) != label_set(o.table_)) return false;
    for (std::size_t i = 0; i < size(); ++i) {
        if (table_.labels_of(members_[i]) != o.table_.labels_of(o.members_[i])) return false;
    }
    return true;
}

bool SetFamily::same_members(const SetFamily& o) const {
    if (size() != o.size() || label_set(table_) != label_set(o.table_)) return false;
    auto a = as_labels();
    auto b = o.as_labels();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

// ---------------------------------------------------------------- text format

SetFamily parse_family(std::string_view text) {
    ElementTable table;
    std::vector<ElementSet> members;
    std::vector<std::size_t> member_lines;
    std::size_t line_no = 0;
    bool seen_member = false;

    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        // Tokenize, remembering 1-based columns.
        std::vector<std::pair<std::string_view, std::size_t>> tokens;
        for (std::size_t i = 0; i < line.size();) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            const std::size_t start = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            if (i > start) tokens.emplace_back(line.substr(start, i - start), start + 1);
        }
        if (tokens.empty()) continue;

        auto where = [&](std::size_t col) {
            return "line " + std::to_string(line_no) + ", column " + std::to_string(col);
        };

        if (tokens.front().first == "universe:") {
            if (seen_member) throw Error(Errc::ParseError, where(tokens.front().second) + ": universe header after members");
            for (std::size_t t = 1; t < tokens.size(); ++t) table.intern(tokens[t].first);
            continue;
        }
        seen_member = true;
        ElementSet s;
        for (const auto& [tok, col] : tokens) {
            const std::size_t i = table.intern(tok);
            if (s.test(i)) throw Error(Errc::ParseError, where(col) + ": label '" + std::string(tok) + "' repeated in one set");
            s.set(i);
        }
        for (std::size_t k = 0; k < members.size(); ++k) {
            if (members[k] == s) {
                throw Error(Errc::DuplicateSet, "line " + std::to_string(line_no) + " repeats the set on line " +
                                                    std::to_string(member_lines[k]));
            }
        }
        members.push_back(s);
        member_lines.push_back(line_no);
    }
    if (members.empty()) throw Error(Errc::EmptyFamily, "input holds no member sets");
    return SetFamily(std::move(table), std::move(members));
}

std::string render_family(const SetFamily& family) {
    std::ostringstream out;
    const ElementSet extras = family.universe() - family.union_all();
    if (!extras.empty()) {
        out << "universe:";
        for (const auto& l : family.table().labels_of(extras)) out << ' ' << l;
        out << '\n';
    }
    for (const auto& m : family.members()) {
        const auto labels = family.table().labels_of(m);
        for (std::size_t i = 0; i < labels.size(); ++i) out << (i ? " " : "") << labels[i];
        out << '\n';
    }
    return out.str();
}

// ---------------------------------------------------------------- algebra

namespace {

void check_selector(const SetFamily& family, const Selector& sel) {
    if (sel.empty()) throw Error(Errc::EmptySelector, "selector is empty");
    if (family.size() < 64 && (sel.mask >> family.size()) != 0) {
        throw Error(Errc::IndexOutOfRange, "selector names a member past the end of the family");
    }
}

} // namespace

ElementSet union_of(const SetFamily& family, const Selector& sel) {
    check_selector(family, sel);
    ElementSet u;
    for (auto p : sel.positions()) u |= family[p];
    return u;
}

ElementSet intersection_of(const SetFamily& family, const Selector& sel) {
    check_selector(family, sel);
    ElementSet x = family.universe();
    for (auto p : sel.positions()) x &= family[p];
    return x;
}

std::optional<std::pair<std::size_t, std::size_t>> irrelevant_pair(const SetFamily& family) {
    const std::size_t k = family[0].count();
    for (std::size_t j = 1; j < family.size(); ++j) {
        if (family[j].count() != k) return std::pair{std::size_t{0}, j};
    }
    return std::nullopt;
}

std::size_t alpha_of(const SetFamily& family) {
    if (auto pair = irrelevant_pair(family)) {
        throw Error(Errc::NotRelevant, "members " + std::to_string(pair->first) + " and " +
                                           std::to_string(pair->second) + " differ in size");
    }
    return family[0].count();
}

std::vector<MemberPattern> membership_patterns(std::span<const ElementSet> members, std::size_t universe_size) {
    const std::size_t words = (members.size() + 63) / 64;
    std::vector<MemberPattern> out(universe_size, MemberPattern(words, 0));
    for (std::size_t j = 0; j < members.size(); ++j) {
        members[j].for_each([&](std::size_t x) { out[x][j >> 6] |= 1ULL << (j & 63); });
    }
    return out;
}

bool lex_less(const ElementSet& a, const ElementSet& b) {
    const auto ia = a.indices();
    const auto ib = b.indices();
    return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
}

} // namespace hke
