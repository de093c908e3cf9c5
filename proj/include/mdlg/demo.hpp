#pragma once

// Built-in corpora, grammars and meaning tables used by the CLI and tests.

#include <mdlg/grammar.hpp>
#include <mdlg/tuple.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mdlg::demo {

// Verb j: v_0 is "kick", the rest v_1 .. v_9. Noun i: n_0 is "bucket".
Symbol verb(int j);
Symbol noun(int i);
inline constexpr int verb_count = 10;
inline constexpr int noun_count = 100;

Sentence kick_bucket_sentence(int verb_index, int noun_index);
Sentence idiom_sentence();

std::vector<std::string> corpus_names();
// xyz1, xyz2, kick-bucket. Throws Error on an unknown name.
Corpus corpus(std::string_view name);

std::vector<std::string> grammar_names();
std::optional<Grammar> grammar(std::string_view name);

// [w,[category,w]] rows for verbs / nouns and the full per-sentence table.
std::vector<Tuple> verb_table();
std::vector<Tuple> noun_table();
std::vector<Tuple> sentence_table();

} // namespace mdlg::demo
