#pragma once

#include <mdlg/grammar.hpp>

#include <cstddef>
#include <functional>
#include <set>
#include <vector>

namespace mdlg {

inline constexpr std::size_t default_enumeration_limit = 1'000'000;

using Language = std::set<Sentence>;

// Generates every sentence derivable from a rule body. Each class name is
// bound to one alternative for the whole derivation, including occurrences
// nested inside other definitions; anonymous inline classes choose freely at
// every occurrence.
class Expander {
public:
    explicit Expander(const DefIndex& defs, std::size_t limit = default_enumeration_limit)
        : defs_(defs), limit_(limit) { }

    // Distinct sentences of `body`, sorted by SentenceIdLess.
    std::vector<Sentence> expand(const Sequence& body);
    // Calls `f` on every derivation's sentence (repeats possible) until it
    // returns false. Returns false if stopped early. Ignores the limit.
    bool for_each(const Sequence& body, const std::function<bool(const Sentence&)>& f);
    // True iff `body` derives `target`; prunes on the first mismatching symbol.
    bool matches(const Sequence& body, const Sentence& target);

private:
    struct Item {
        enum class Kind { terminal, inline_class, class_name };
        Kind kind;
        const InlineClass* cls = nullptr;
        Symbol sym;
            };

    void run(const Sequence& body);
    void step();
    void push_term(const Term& t);
    void push_sequence(const Sequence& seq);
    void emit();

    const DefIndex& defs_;
    std::size_t limit_;

    std::vector<Item> pending_;
    Sentence out_;
    std::vector<std::pair<Symbol, std::size_t>> bindings_;
    const Sentence* target_ = nullptr;
    bool found_ = false;
    const std::function<bool(const Sentence&)>* visit_ = nullptr;
    bool stopped_ = false;
};

// All sentences of the grammar. Throws LimitExceeded past `limit`.
Language enumerate_language(const Grammar& g, std::size_t limit = default_enumeration_limit);

// Language of one rule, sorted by SentenceIdLess (for set algebra).
std::vector<Sentence> rule_language(const DefIndex& defs, const Rule& r,
                                    std::size_t limit = default_enumeration_limit);

bool derives(const Grammar& g, const Sentence& s);

struct CoverageReport {
    std::vector<Sentence> covered;
    std::vector<Sentence> missing;
    std::vector<Sentence> extra;
};

CoverageReport coverage(const Grammar& g, const Corpus& c,
                        std::size_t limit = default_enumeration_limit);

} // namespace mdlg
