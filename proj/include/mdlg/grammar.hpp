#pragma once

#include <mdlg/errors.hpp>
#include <mdlg/symbol.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

namespace mdlg {

// A grammar term: either a run of alphabet symbols or a class variable.
struct Term {
    enum class Kind { symbols, class_ref };

    Kind kind = Kind::symbols;
    std::vector<Symbol> symbols; // for class_ref: exactly one entry, the class name

    static Term word(Symbol s) { return {Kind::symbols, {s}}; }
    static Term sequence(std::vector<Symbol> s) { return {Kind::symbols, std::move(s)}; }
    static Term ref(Symbol name) { return {Kind::class_ref, {name}}; }

    bool is_ref() const { return kind == Kind::class_ref; }
    // Single-token term, i.e. something that can act as a class operand.
    bool is_unit() const { return symbols.size() == 1; }
    Symbol head() const { return symbols.front(); }

    friend bool operator==(const Term&, const Term&) = default;
};

// `{ t | t | ... }`
struct InlineClass {
    std::vector<Term> alternatives;

    static InlineClass of(Term t) { return {{std::move(t)}}; }
    bool is_singleton() const { return alternatives.size() == 1 && alternatives.front().is_unit(); }

    friend bool operator==(const InlineClass&, const InlineClass&) = default;
};

using Sequence = std::vector<InlineClass>;

struct Alternatives { InlineClass cls; friend bool operator==(const Alternatives&, const Alternatives&) = default; };
struct Concatenation { Sequence parts; friend bool operator==(const Concatenation&, const Concatenation&) = default; };
struct Rename { Symbol target; friend bool operator==(const Rename&, const Rename&) = default; };

// `X = { t | ... }`, `X = {A}{B}...` or `X = Y`.
struct ClassDef {
    Symbol name;
    std::variant<Alternatives, Concatenation, Rename> body;

    const Alternatives* alternatives() const { return std::get_if<Alternatives>(&body); }
    const Concatenation* concatenation() const { return std::get_if<Concatenation>(&body); }
    const Rename* rename() const { return std::get_if<Rename>(&body); }

    friend bool operator==(const ClassDef&, const ClassDef&) = default;
};

struct Rule {
    Sequence body;
    friend bool operator==(const Rule&, const Rule&) = default;
};

struct Grammar {
    std::vector<ClassDef> defs;
    std::vector<Rule> rules;

    const ClassDef* find(Symbol name) const;
    friend bool operator==(const Grammar&, const Grammar&) = default;
};

// Unordered bag of sentences. Distinct sentences define grammars; the
// multiplicities are kept but never enter a description length.
class Corpus {
public:
    Corpus() = default;
    Corpus(std::initializer_list<Sentence> sentences);

    void add(Sentence s, std::size_t count = 1);
    bool empty() const { return counts_.empty(); }
    std::size_t distinct_size() const { return counts_.size(); }
    std::size_t total_size() const;
    std::size_t count(const Sentence& s) const;
    bool contains(const Sentence& s) const { return counts_.count(s) != 0; }

    // Sorted by symbol text.
    const std::map<Sentence, std::size_t>& counts() const { return counts_; }
    std::vector<Sentence> distinct() const;

    friend bool operator==(const Corpus&, const Corpus&) = default;

private:
    std::map<Sentence, std::size_t> counts_;
};

// name -> definition lookup, built once per pass over a grammar.
class DefIndex {
public:
    DefIndex() = default;
    explicit DefIndex(const Grammar& g);
    DefIndex(const std::vector<ClassDef>& defs);
    // `base` plus one extra definition, without copying `base`.
    DefIndex(const DefIndex& base, const ClassDef& extra) : base_(&base), extra_(&extra) { }

    const ClassDef* find(Symbol name) const
    {
        if (extra_ && extra_->name == name) return extra_;
        if (base_) return base_->find(name);
        auto it = map_.find(name);
        return it == map_.end() ? nullptr : it->second;
    }

private:
    std::unordered_map<Symbol, const ClassDef*, SymbolHash> map_;
    const DefIndex* base_ = nullptr;
    const ClassDef* extra_ = nullptr;
};

struct Diagnostic {
    enum class Kind { undefined_ref, cycle, duplicate_name, empty_class, duplicate_alternative,
                      bad_concatenation, empty_rule, bad_symbol, name_clash };
    Kind kind;
    std::string message;
};

struct ValidationReport {
    std::vector<Diagnostic> diagnostics;
    bool ok() const { return diagnostics.empty(); }
    std::vector<std::string> messages() const;
};

ValidationReport validate(const Grammar& g);
// Throws ValidationError when the report is non-empty.
void require_valid(const Grammar& g);

// One rule holding a single class with one alternative per distinct sentence.
Grammar listing_grammar(const Corpus& c);

struct CanonicalizeOptions {
    bool rename = false;           // renumber classes C1, C2, ... in creation order
    std::size_t limit = 1'000'000; // per-rule enumeration bound for subsumption checks
};

// Language-preserving normal form: duplicate and subsumed rules dropped,
// unreferenced defs dropped, singly referenced defs inlined where that
// shortens the grammar.
Grammar canonicalize(const Grammar& g, const CanonicalizeOptions& opts = {});

using RefCounts = std::unordered_map<Symbol, std::size_t, SymbolHash>;

// Occurrences of each class name as a reference (terms and rename targets).
RefCounts reference_counts(const Grammar& g);
void count_references(const Sequence& seq, RefCounts& out, long sign = 1);
void count_references(const ClassDef& d, RefCounts& out, long sign = 1);
bool references(const Sequence& seq, Symbol name);
bool references(const ClassDef& d, Symbol name);

// Inline the body of `d` at its single reference inside `seq` / `cls`.
// Returns nothing when `d` is not referenced there in an inlinable position.
std::optional<Sequence> inline_into(const Sequence& seq, const ClassDef& d);
std::optional<ClassDef> inline_into(const ClassDef& host, const ClassDef& d);

// Rule bodies as seen by simplify_defs. Lets a caller that holds a sparse,
// copy-on-write view of a grammar run the same simplification as
// canonicalize without materializing every rule.
class RuleStore {
public:
    virtual ~RuleStore() = default;
    // Some live rule referencing `name`; only asked for names referenced once.
    virtual std::optional<std::size_t> sole_rule_referencing(Symbol name) const = 0;
    virtual const Sequence& body(std::size_t rule) const = 0;
    virtual void replace(std::size_t rule, Sequence body) = 0;
};

// The def-level half of canonicalize: repeatedly drop unreferenced defs and
// inline singly referenced ones when that is strictly shorter. `refs` must
// hold the reference counts of the whole grammar and is kept up to date.
bool simplify_defs(std::vector<ClassDef>& defs, RefCounts& refs, RuleStore& rules);

// Drop repeated alternatives, keeping the first occurrence.
void dedup_alternatives(InlineClass& c);

// Renumber defs C1..Cn in order, skipping names used as terminals.
Grammar rename_classes(const Grammar& g, std::string_view prefix = "C");

// A class name not used anywhere in `g`.
Symbol fresh_class_name(const Grammar& g, std::string_view prefix = "C");

// Every terminal symbol in the grammar (rule bodies and def bodies).
std::vector<Symbol> terminals(const Grammar& g);

} // namespace mdlg
