#pragma once

// Description lengths by symbol counting. Every symbol, class name, brace,
// bar, equals sign, bracket and comma costs 1; line breaks cost nothing.

#include <mdlg/generator.hpp>
#include <mdlg/grammar.hpp>
#include <mdlg/tuple.hpp>

#include <cstddef>
#include <span>

namespace mdlg {

std::size_t term_dl(const Term& t);
std::size_t term_dl(const InlineClass& c);
std::size_t term_dl(const Sequence& s);
std::size_t term_dl(const ClassDef& d);
std::size_t term_dl(const Rule& r);

std::size_t defs_dl(std::span<const ClassDef> defs);
// Validates first; throws ValidationError.
std::size_t grammar_dl(const Grammar& g);

std::size_t tuple_dl(const Tuple& t);
std::size_t table_dl(std::span<const Tuple> table);

inline constexpr std::size_t default_penalty = 10;

struct DLReport {
    std::size_t grammar_dl = 0;
    std::size_t overgen_count = 0;
    std::size_t penalty = 0;
    std::size_t total = 0;
};

// Two-part total: grammar symbols plus `penalty` per generated sentence that
// is not in the corpus. Throws CoverageError if a corpus sentence is not
// generated, LimitExceeded if the language is too large to enumerate.
DLReport total_dl(const Grammar& g, const Corpus& c, std::size_t penalty = default_penalty,
                  std::size_t limit = default_enumeration_limit);

} // namespace mdlg
