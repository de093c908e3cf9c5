#include <mdlg/demo.hpp>
#include <mdlg/errors.hpp>

namespace mdlg::demo {
namespace {

Symbol sym(std::string_view s) { return Symbol(s); }

InlineClass word(Symbol s) { return InlineClass::of(Term::word(s)); }
InlineClass ref(Symbol s) { return InlineClass::of(Term::ref(s)); }

// {a}{b}{action}{a}{object}{b} with each position either a word or a class.
Rule semantic_rule(InlineClass v, InlineClass n)
{
    return Rule{{v, n, word(sym("action")), v, word(sym("object")), n}};
}

Rule idiom_rule()
{
    return Rule{{word(verb(0)), word(noun(0)), word(sym("action")), word(sym("die")),
                 word(sym("object")), word(sym("nil"))}};
}

ClassDef range_def(std::string_view name, Symbol (*item)(int), int from, int to)
{
    InlineClass c;
    for (int i = from; i < to; ++i) c.alternatives.push_back(Term::word(item(i)));
    return ClassDef{sym(name), Alternatives{std::move(c)}};
}

ClassDef union_def(std::string_view name, Symbol first, std::string_view rest)
{
    return ClassDef{sym(name), Alternatives{InlineClass{{Term::word(first), Term::ref(sym(rest))}}}};
}

Sentence chars(std::string_view s)
{
    Sentence out;
    for (char c : s) out.push_back(Symbol(std::string(1, c)));
    return out;
}

Grammar xyz2_three_row()
{
    auto cls = [](std::string_view letters) {
        InlineClass c;
        for (char ch : letters) c.alternatives.push_back(Term::word(Symbol(std::string(1, ch))));
        return c;
    };
    Grammar g;
    g.rules.push_back(Rule{{cls("XYZW"), cls("ab"), cls("0")}});
    g.rules.push_back(Rule{{cls("Y"), cls("c"), cls("1")}});
    g.rules.push_back(Rule{{cls("XZW"), cls("c"), cls("0")}});
    return g;
}

} // namespace

Symbol verb(int j) { return j == 0 ? Symbol("kick") : Symbol("v_" + std::to_string(j)); }
Symbol noun(int i) { return i == 0 ? Symbol("bucket") : Symbol("n_" + std::to_string(i)); }

Sentence kick_bucket_sentence(int j, int i)
{
    if (j == 0 && i == 0) return idiom_sentence();
    return {verb(j), noun(i), sym("action"), verb(j), sym("object"), noun(i)};
}

Sentence idiom_sentence()
{
    return {verb(0), noun(0), sym("action"), sym("die"), sym("object"), sym("nil")};
}

std::vector<std::string> corpus_names() { return {"xyz1", "xyz2", "kick-bucket"}; }

Corpus corpus(std::string_view name)
{
    Corpus c;
    if (name == "xyz1" || name == "xyz2") {
        for (auto s : {"Xa0", "Yc1", "Xb0", "Xc0", "Ya0", "Yb0"}) c.add(chars(s));
        if (name == "xyz2")
            for (auto s : {"Za0", "Wc0", "Zb0", "Zc0", "Wa0", "Wb0"}) c.add(chars(s));
        return c;
    }
    if (name == "kick-bucket") {
        for (int j = 0; j < verb_count; ++j)
            for (int i = 0; i < noun_count; ++i) c.add(kick_bucket_sentence(j, i));
        return c;
    }
    throw Error("unknown demo corpus '" + std::string(name) + "'");
}

std::vector<std::string> grammar_names()
{
    return {"listing-xyz1", "listing-xyz2", "xyz2-three-row", "xxd", "g0",
            "g-v1", "g-v1n1", "g-v0", "g-v0n1", "g-v1n0", "g-v0n0"};
}

std::optional<Grammar> grammar(std::string_view name)
{
    const Symbol v1 = sym("V(1)"), v0 = sym("V(0)"), n1 = sym("N(1)"), n0 = sym("N(0)");
    Grammar g;
    if (name == "listing-xyz1") return listing_grammar(corpus("xyz1"));
    if (name == "listing-xyz2") return listing_grammar(corpus("xyz2"));
    if (name == "xyz2-three-row") return xyz2_three_row();
    if (name == "xxd") {
        g.defs.push_back(ClassDef{sym("X"), Alternatives{InlineClass{{Term::word(sym("a")), Term::word(sym("b"))}}}});
        g.rules.push_back(Rule{{ref(sym("X")), InlineClass{{Term::ref(sym("X")), Term::word(sym("d"))}}}});
        return g;
    }
    if (name == "g0") {
        const Corpus c = corpus("kick-bucket");
        for (const auto& [s, n] : c.counts()) {
            Rule r;
            for (Symbol w : s) r.body.push_back(word(w));
            g.rules.push_back(std::move(r));
        }
        return g;
    }
    if (name == "g-v1") {
        g.defs.push_back(range_def("V(1)", verb, 1, verb_count));
        for (int i = 0; i < noun_count; ++i) g.rules.push_back(semantic_rule(ref(v1), word(noun(i))));
        g.rules.push_back(idiom_rule());
        for (int i = 1; i < noun_count; ++i) g.rules.push_back(semantic_rule(word(verb(0)), word(noun(i))));
        return g;
    }
    if (name == "g-v1n1") {
        g.defs.push_back(range_def("V(1)", verb, 1, verb_count));
        g.defs.push_back(range_def("N(1)", noun, 1, noun_count));
        g.rules.push_back(semantic_rule(ref(v1), word(noun(0))));
        g.rules.push_back(semantic_rule(ref(v1), ref(n1)));
        g.rules.push_back(idiom_rule());
        g.rules.push_back(semantic_rule(word(verb(0)), ref(n1)));
        return g;
    }
    if (name == "g-v0") {
        g.defs.push_back(range_def("V(1)", verb, 1, verb_count));
        g.defs.push_back(union_def("V(0)", verb(0), "V(1)"));
        g.rules.push_back(semantic_rule(ref(v1), word(noun(0))));
        for (int i = 1; i < noun_count; ++i) g.rules.push_back(semantic_rule(ref(v0), word(noun(i))));
        g.rules.push_back(idiom_rule());
        return g;
    }
    if (name == "g-v0n1") {
        g.defs.push_back(union_def("V(0)", verb(0), "V(1)"));
        g.defs.push_back(range_def("V(1)", verb, 1, verb_count));
        g.defs.push_back(range_def("N(1)", noun, 1, noun_count));
        g.rules.push_back(semantic_rule(ref(v0), ref(n1)));
        g.rules.push_back(semantic_rule(ref(v1), word(noun(0))));
        g.rules.push_back(idiom_rule());
        return g;
    }
    if (name == "g-v1n0") {
        g.defs.push_back(range_def("V(1)", verb, 1, verb_count));
        g.defs.push_back(range_def("N(1)", noun, 1, noun_count));
        g.defs.push_back(union_def("N(0)", noun(0), "N(1)"));
        g.rules.push_back(semantic_rule(ref(v1), ref(n0)));
        g.rules.push_back(semantic_rule(word(verb(0)), ref(n1)));
        g.rules.push_back(idiom_rule());
        return g;
    }
    if (name == "g-v0n0") {
        g.defs.push_back(range_def("V", verb, 0, verb_count));
        g.defs.push_back(range_def("N", noun, 0, noun_count));
        g.rules.push_back(semantic_rule(ref(sym("V")), ref(sym("N"))));
        g.rules.push_back(idiom_rule());
        return g;
    }
    return std::nullopt;
}

std::vector<Tuple> verb_table()
{
    std::vector<Tuple> out;
    for (int j = 0; j < verb_count; ++j)
        out.push_back(Tuple::list({verb(j), Tuple::list({sym("verb"), verb(j)})}));
    return out;
}

std::vector<Tuple> noun_table()
{
    std::vector<Tuple> out;
    for (int i = 0; i < noun_count; ++i)
        out.push_back(Tuple::list({noun(i), Tuple::list({sym("noun"), noun(i)})}));
    return out;
}

std::vector<Tuple> sentence_table()
{
    std::vector<Tuple> out;
    for (int j = 0; j < verb_count; ++j) {
        for (int i = 0; i < noun_count; ++i) {
            const bool idiom = (j == 0 && i == 0);
            Tuple form = Tuple::list({Tuple::list({sym("verb"), verb(j)}), Tuple::list({sym("noun"), noun(i)})});
            Tuple meaning = Tuple::list({Tuple::list({sym("action"), idiom ? sym("die") : verb(j)}),
                                         Tuple::list({sym("object"), idiom ? sym("nil") : noun(i)})});
            out.push_back(Tuple::list({form, meaning}));
        }
    }
    return out;
}

} // namespace mdlg::demo
