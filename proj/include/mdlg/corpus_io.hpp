#pragma once

// Text formats.
//
// Corpus: whitespace-separated symbols, one sentence per line; a `+` token
// also ends a sentence. Lines starting with `#` are comments, blank lines
// are skipped. A line may end in `= N` to give the sentence multiplicity N.
//
// Grammar: one definition or rule per line. `{ } | =` are tokens of their
// own and need no surrounding spaces.
//     X = { a | b }          alternatives
//     Y = { X } { c }        concatenation
//     Z = X                  renaming
//     { X } { X | d }        rule
// A name is a class reference exactly when some line defines it.
//
// Trace: tab-separated records, one per accepted operation, after a `#`
// header line.

#include <mdlg/grammar.hpp>
#include <mdlg/induction.hpp>

#include <iosfwd>
#include <string>
#include <string_view>

namespace mdlg {

Corpus parse_corpus(std::string_view text);
// Sorted distinct sentences, ` = N` appended when N > 1.
std::string serialize_corpus(const Corpus& c);

// Throws ParseError (with line and column), or ValidationError when the
// text parses but describes an invalid grammar.
Grammar parse_grammar(std::string_view text);
std::string serialize_grammar(const Grammar& g);
// One rule body in grammar syntax, e.g. `{ V } { n_1 }`.
std::string serialize_sequence(const Sequence& seq);

// Number of tokens of a grammar text under the description-length rules;
// equals grammar_dl of the parsed grammar.
std::size_t count_grammar_tokens(std::string_view text);

std::string trace_header();
std::string serialize_trace(const InductionTrace& trace);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

} // namespace mdlg
