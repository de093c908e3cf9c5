#pragma once

// Compositional semantics read off a grammar whose rules pair a two-word
// form with a meaning, e.g.
//     { V } { N } { action } { V } { object } { N }
// The words of position p get a category (`cat_p`, or `cat_p_nonid` when
// the word is not idiomatic there); a rule whose meaning repeats both form
// constituents becomes a combination rule for ⊕, and every other rule is a
// specific pair with a fixed meaning (an idiom).

#include <mdlg/grammar.hpp>
#include <mdlg/tuple.hpp>

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace mdlg {

inline constexpr std::string_view nonid_suffix = "_nonid";

// A row of μ: the item (a word, or any tuple for whole-sentence tables) and
// its meaning, e.g. v_1 -> [v_1,verb_nonid].
struct MeaningEntry {
    Tuple key;
    Tuple meaning;
};

class MeaningFunction {
public:
    void set(Symbol word, Symbol category);
    void add(Tuple key, Tuple meaning);

    const std::vector<MeaningEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    // Category of a word entry [w,category], if any.
    std::optional<Symbol> category(Symbol word) const;
    // Rows [key,meaning] in entry order.
    std::vector<Tuple> table() const;

private:
    std::vector<MeaningEntry> entries_;
    std::unordered_map<Symbol, std::size_t, SymbolHash> words_;
};

// The meaning side of a combination rule: constants and references to the
// left (slot 0) or right (slot 1) constituent.
struct MeaningTemplate {
    struct Item {
        bool is_slot = false;
        std::size_t slot = 0;
        Sentence constant;
        friend bool operator==(const Item&, const Item&) = default;
    };
    std::vector<Item> items;

    Sentence apply(Symbol left, Symbol right) const;
    friend bool operator==(const MeaningTemplate&, const MeaningTemplate&) = default;
};

// Groups a flat meaning into attribute pairs when it has even length:
// `action die object nil` -> [[action,die],[object,nil]].
Tuple meaning_tuple(const Sentence& meaning);

struct OplusRule {
    Symbol left;  // category
    Symbol right; // category
    MeaningTemplate result;
};

struct SpecificPair {
    Symbol left;
    Symbol right;
    Sentence meaning;
    std::string rule; // the grammar rule that defines it
};

struct OplusTable {
    std::vector<OplusRule> rules;
    // Word pairs with a meaning of their own. Outside the domain of ⊕
    // unless `overrides` is set, in which case they take precedence.
    std::vector<SpecificPair> exclusions;
    bool overrides = false;

    const OplusRule* rule_for(Symbol left_category, Symbol right_category) const;
    const SpecificPair* specific(Symbol left, Symbol right) const;
};

// ⊕(μ(left), μ(right)), if defined.
std::optional<Sentence> combine(const MeaningFunction& mu, const OplusTable& oplus, Symbol left, Symbol right);

struct Semantics {
    MeaningFunction mu;
    OplusTable oplus;
};

struct SemanticsOptions {
    std::array<std::string, 2> categories{"cat0", "cat1"};
    // Always use idiomaticity markers, even when a general rule also
    // derives a specific pair.
    bool force_markers = false;
};

// Throws ShapeError unless form_width is 2 and every rule splits into a
// two-word form and a meaning made of constants and form constituents.
Semantics extract_semantics(const Grammar& g, std::size_t form_width, const SemanticsOptions& opts = {});

struct CompositionalityReport {
    std::size_t domain_sentences = 0; // corpus sentences inside the domain of ⊕
    std::size_t corpus_sentences = 0; // distinct sentences with a two-word form
    std::vector<Sentence> violations; // μ(s.t) differs from μ(s) ⊕ μ(t)
    double coverage() const
    {
        return corpus_sentences ? static_cast<double>(domain_sentences) / static_cast<double>(corpus_sentences) : 0.0;
    }
};

CompositionalityReport check_compositional(const MeaningFunction& mu, const OplusTable& oplus, const Corpus& corpus,
                                           std::size_t form_width = 2);

// Drops idiomaticity markers one form position at a time, last position
// first, keeping a drop when the corpus has no violations, the domain does
// not shrink and the encoding does not grow.
Semantics maximal_extension(const MeaningFunction& mu, const OplusTable& oplus, const Corpus& corpus,
                            std::size_t form_width = 2);

struct IdiomReport {
    std::vector<Sentence> sentences;
    std::vector<Symbol> items;
    std::vector<std::string> justification; // per sentence: its specific rule
    bool empty() const { return sentences.empty() && items.empty(); }
};

IdiomReport idiom_items(const Grammar& g, const Corpus& corpus, std::size_t form_width,
                        const SemanticsOptions& opts = {});

struct CompositionalityScore {
    std::size_t domain = 0;   // words and word pairs with a meaning
    std::size_t encoding = 0; // symbols of the μ table and the ⊕ rules
};

// Larger domain first, then shorter encoding.
bool more_compositional(const CompositionalityScore& a, const CompositionalityScore& b);
inline bool operator==(const CompositionalityScore& a, const CompositionalityScore& b)
{
    return a.domain == b.domain && a.encoding == b.encoding;
}

CompositionalityScore compositionality_score(const MeaningFunction& mu, const OplusTable& oplus);

struct LambdaReport {
    std::vector<std::string> definitions;
    std::size_t definition_size = 0;
    std::size_t domain_size = 0;
};

// The λ-style encoding: one λX.[cat,X] per form position, one λ for the
// combination rule and one per specific pair. Throws ShapeError for more
// than one combination rule.
LambdaReport lambda_encoding_report(const MeaningFunction& mu, const OplusTable& oplus);

// Tokens of a λ expression: λ, '.', '[', ']', ',' and names each count 1.
std::size_t lambda_token_count(std::string_view expr);

} // namespace mdlg
