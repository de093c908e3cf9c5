#pragma once

// Greedy MDL grammar induction: start from one rule per sentence, then
// repeatedly apply the class merge or concatenation that shortens the
// description most, until nothing shortens it.

#include <mdlg/dl.hpp>
#include <mdlg/generator.hpp>
#include <mdlg/grammar.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mdlg {

enum class Variant {
    very_greedy, // substitute a merged class everywhere or not at all
    partial,     // substitute only where the language stays exact
    overgen,     // also accept extra sentences, charged `penalty` each
};

std::string_view to_string(Variant v);
// Accepts "very-greedy", "partial", "overgen". Throws Error otherwise.
Variant parse_variant(std::string_view text);

enum class Kernel { serial, parallel };

struct InductionConfig {
    Variant variant = Variant::very_greedy;
    std::size_t penalty = default_penalty;
    std::size_t limit = default_enumeration_limit;
    Kernel kernel = Kernel::parallel;
    bool rename = true; // renumber the final grammar's classes C1, C2, ...
};

// An operand: a word class `{w}` or a named def.
struct ClassOperand {
    Symbol name;
    bool is_def = false;
    friend bool operator==(const ClassOperand&, const ClassOperand&) = default;
};

struct CandidateOp {
    enum class Kind { merge, concat };
    Kind kind = Kind::merge;
    ClassOperand a;
    ClassOperand b;
    // Tie-break key: merge before concat, then operand creation indices.
    std::size_t index_a = 0;
    std::size_t index_b = 0;

    std::string describe() const;
    friend bool operator==(const CandidateOp&, const CandidateOp&) = default;
};

bool tie_break_less(const CandidateOp& x, const CandidateOp& y);

struct TraceRecord {
    std::size_t iteration = 0;
    CandidateOp op;
    long dl_before = 0; // totals: grammar DL plus penalty per extra sentence
    long dl_after = 0;
    long delta = 0;
    std::size_t overgen_count = 0;
    std::size_t rules_before = 0;
    std::size_t rules_after = 0;
};

using InductionTrace = std::vector<TraceRecord>;

struct InductionResult {
    Grammar grammar;
    InductionTrace trace;
    DLReport report;
};

// One rule per distinct sentence, each word a singleton class.
Grammar initial_grammar(const Corpus& corpus);

// Current operand classes, word classes first (in symbol order), then defs
// in definition order. The position is the class-creation index.
std::vector<ClassOperand> candidate_classes(const Grammar& g);

std::vector<CandidateOp> merge_candidates(const Grammar& g);
std::vector<CandidateOp> concat_candidates(const Grammar& g);

// Outcome of evaluating one candidate against a grammar.
struct Evaluation {
    bool accepted = false;
    std::string reason;          // why it was rejected
    long delta = 0;              // total DL after minus before
    std::size_t grammar_dl = 0;  // after
    std::size_t overgen_count = 0;
    std::size_t rules_after = 0;
    // Rules (indices into the input grammar) that received the substitution.
    std::vector<std::size_t> substituted;
};

// Exact delta of one operation; rejected operations have accepted == false.
// `g` must be canonical and cover `corpus`.
Evaluation evaluate(const Grammar& g, const CandidateOp& op, const Corpus& corpus,
                    const InductionConfig& config);

// The grammar after `op`, canonicalized (without renaming). Throws Error
// if the operation is rejected under `config`.
Grammar apply_op(const Grammar& g, const CandidateOp& op, const Corpus& corpus,
                 const InductionConfig& config);

// Substitute `op` into exactly the listed rules and canonicalize, without
// any of the bookkeeping used by evaluate. A slow reference for tests.
Grammar apply_naive(const Grammar& g, const CandidateOp& op, const std::vector<std::size_t>& rules);

struct ScoredCandidate {
    CandidateOp op;
    Evaluation eval;
};

// Every merge and concat candidate of `g` with its evaluation, in candidate
// order. The kernel choice never changes the result.
std::vector<ScoredCandidate> evaluate_all(const Grammar& g, const Corpus& corpus,
                                          const InductionConfig& config);

// The candidate with the most negative delta (ties by tie_break_less), if
// any delta is negative.
std::optional<ScoredCandidate> best_candidate(const std::vector<ScoredCandidate>& scored);

InductionResult induce(const Corpus& corpus, const InductionConfig& config = {});

} // namespace mdlg
