#pragma once

// Shared test helpers: independent oracles and random inputs.

#include <mdlg/grammar.hpp>

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace mdlg::testing {

Sentence words(const std::string& text);
std::set<Sentence> sentences(const std::vector<std::string>& texts);

// Language by brute force: every assignment of the class names reachable
// from a rule is enumerated explicitly, then each body is expanded. Shares
// no code with the library's Expander.
std::set<Sentence> oracle_language(const Grammar& g);

// Description length by counting the characters-turned-tokens of a
// hand-rendered grammar text; shares no code with the library's metric.
std::size_t oracle_dl(const Grammar& g);

// Equal up to class names: classes are matched by the language they
// generate, then defs and rules are compared as sets (alternative order
// ignored).
bool isomorphic(const Grammar& a, const Grammar& b, std::string* why = nullptr);

// Small random corpus: at most 40 sentences over at most 12 symbols. Even
// seeds give slot-structured corpora (a random subset of a product of word
// sets), odd seeds unstructured ones.
Corpus random_corpus(std::uint32_t seed);

} // namespace mdlg::testing
