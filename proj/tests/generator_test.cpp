#include "support.hpp"

#include <mdlg/corpus_io.hpp>
#include <mdlg/demo.hpp>
#include <mdlg/generator.hpp>

#include <doctest.h>

using namespace mdlg;
using mdlg::testing::oracle_language;
using mdlg::testing::sentences;
using mdlg::testing::words;

namespace {

std::set<Sentence> lang(const Grammar& g, std::size_t limit = default_enumeration_limit)
{
    const Language l = enumerate_language(g, limit);
    return {l.begin(), l.end()};
}

} // namespace

TEST_SUITE("generator") {

TEST_CASE("a class variable takes one value per derivation")
{
    const Grammar g = parse_grammar("X = { a | b }\n{ X } { X | d }\n");
    CHECK(lang(g) == sentences({"a a", "a d", "b b", "b d"}));
    CHECK_FALSE(derives(g, words("a b")));
    CHECK(lang(parse_grammar("X = { a | b }\n{ X } { X }\n")) == sentences({"a a", "b b"}));
}

TEST_CASE("anonymous classes choose freely")
{
    CHECK(lang(parse_grammar("{ a | b } { a | b }\n")) == sentences({"a a", "a b", "b a", "b b"}));
}

TEST_CASE("bindings reach through nested definitions")
{
    const Grammar g = parse_grammar("V1 = { b | c }\n"
                                    "V0 = { a | V1 }\n"
                                    "{ V0 } { x } { V0 }\n"
                                    "{ V1 } { y } { V0 }\n");
    // V0 may pick a while V1 is bound, so "b y a" belongs too.
    const auto expected = sentences({"a x a", "b x b", "c x c", "b y a", "b y b", "c y a", "c y c"});
    CHECK(lang(g) == expected);
    CHECK(oracle_language(g) == expected);
}

TEST_CASE("a renamed class varies independently")
{
    const Grammar g = parse_grammar("N = { a | b }\nN1 = N\n{ N } { N1 }\n");
    CHECK(lang(g) == sentences({"a a", "a b", "b a", "b b"}));
}

TEST_CASE("concatenation classes")
{
    const Grammar g = parse_grammar("A = { a | b }\nX = { A } { c | d }\n{ X } { A }\n");
    const auto expected = sentences({"a c a", "a d a", "b c b", "b d b"});
    CHECK(lang(g) == expected);
    CHECK(oracle_language(g) == expected);
}

TEST_CASE("a single terminal")
{
    CHECK(lang(parse_grammar("{ a }\n")) == sentences({"a"}));
}

TEST_CASE("the kick-bucket grammars")
{
    const Corpus kb = demo::corpus("kick-bucket");
    const auto distinct = kb.distinct();
    const auto corpus_set = std::set<Sentence>(distinct.begin(), distinct.end());
    const Grammar v1n1 = *demo::grammar("g-v1n1");
    const auto l = lang(v1n1);
    CHECK(l.size() == 1000);
    CHECK(l == corpus_set);

    const Grammar v0n0 = *demo::grammar("g-v0n0");
    CHECK(derives(v0n0, demo::idiom_sentence()));
    CHECK(derives(v0n0, words("kick bucket action kick object bucket")));
    CHECK_FALSE(derives(v1n1, words("kick bucket action kick object bucket")));

    const CoverageReport a = coverage(v1n1, kb);
    CHECK(a.missing.empty());
    CHECK(a.extra.empty());
    CHECK(a.covered.size() == 1000);
    const CoverageReport b = coverage(v0n0, kb);
    CHECK(b.missing.empty());
    REQUIRE(b.extra.size() == 1);
    CHECK(b.extra.front() == words("kick bucket action kick object bucket"));

    const Corpus xyz1 = demo::corpus("xyz1");
    const CoverageReport c = coverage(listing_grammar(xyz1), xyz1);
    CHECK(c.missing.empty());
    CHECK(c.extra.empty());
}

TEST_CASE("every built-in grammar agrees with the oracle")
{
    for (const auto& name : demo::grammar_names()) {
        if (name == "g0") continue; // 1000 single-sentence rules; covered above
        CAPTURE(name);
        const Grammar g = *demo::grammar(name);
        const auto l = lang(g);
        CHECK(l == oracle_language(g));
        for (const Sentence& s : l) CHECK(derives(g, s));
    }
}

TEST_CASE("derives rejects near misses")
{
    const Grammar g = *demo::grammar("g-v0n1");
    CHECK_FALSE(derives(g, words("kick bucket action die object")));
    CHECK_FALSE(derives(g, words("kick bucket action die object nil nil")));
    CHECK_FALSE(derives(g, words("v_1 n_2 action v_2 object n_2")));
    CHECK_FALSE(derives(g, {}));
    CHECK(derives(g, words("v_1 n_2 action v_1 object n_2")));
}

TEST_CASE("the enumeration limit")
{
    const Grammar g = parse_grammar("A = { a | b | c }\nB = { a | b | c }\n{ A } { B } { a | b }\n");
    CHECK(lang(g, 18).size() == 18);
    try {
        enumerate_language(g, 17);
        FAIL("expected LimitExceeded");
    } catch (const LimitExceeded& e) {
        CHECK(e.limit() == 17);
        CHECK(e.partial_count() > 17);
    }
    const DefIndex defs(g);
    CHECK_THROWS_AS(rule_language(defs, g.rules[0], 10), LimitExceeded);
    CHECK(rule_language(defs, g.rules[0], 18).size() == 18);
}

TEST_CASE("early stop of the visitor")
{
    const Grammar g = parse_grammar("A = { a | b | c }\n{ A } { a | b | c }\n");
    const DefIndex defs(g);
    Expander ex(defs);
    std::size_t seen = 0;
    const bool finished = ex.for_each(g.rules[0].body, [&](const Sentence&) { return ++seen < 4; });
    CHECK_FALSE(finished);
    CHECK(seen == 4);
    seen = 0;
    CHECK(ex.for_each(g.rules[0].body, [&](const Sentence&) { return ++seen > 0; }));
    CHECK(seen == 9);
}

} // TEST_SUITE
