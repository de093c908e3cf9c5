#include "support.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>

namespace mdlg::testing {

Sentence words(const std::string& text)
{
    Sentence s;
    std::istringstream in(text);
    for (std::string w; in >> w;) s.emplace_back(w);
    return s;
}

std::set<Sentence> sentences(const std::vector<std::string>& texts)
{
    std::set<Sentence> out;
    for (const auto& t : texts) out.insert(words(t));
    return out;
}

namespace {

using Choice = std::map<Symbol, std::size_t>;

const ClassDef& def_of(const Grammar& g, Symbol name)
{
    for (const ClassDef& d : g.defs)
        if (d.name == name) return d;
    throw Error("oracle: undefined " + name.text());
}

void reachable(const Grammar& g, const InlineClass& c, std::set<Symbol>& out);

void reachable(const Grammar& g, Symbol name, std::set<Symbol>& out)
{
    if (!out.insert(name).second) return;
    const ClassDef& d = def_of(g, name);
    if (auto a = d.alternatives()) reachable(g, a->cls, out);
    if (auto c = d.concatenation())
        for (const InlineClass& p : c->parts) reachable(g, p, out);
    if (auto r = d.rename()) reachable(g, r->target, out);
}

void reachable(const Grammar& g, const InlineClass& c, std::set<Symbol>& out)
{
    for (const Term& t : c.alternatives)
        if (t.is_ref()) reachable(g, t.head(), out);
}

std::set<Sentence> product(const std::set<Sentence>& a, const std::set<Sentence>& b)
{
    std::set<Sentence> out;
    for (const Sentence& x : a)
        for (const Sentence& y : b) {
            Sentence s = x;
            s.insert(s.end(), y.begin(), y.end());
            out.insert(std::move(s));
        }
    return out;
}

std::set<Sentence> expand_class(const Grammar& g, const InlineClass& c, const Choice& choice);

std::set<Sentence> expand_term(const Grammar& g, const Term& t, const Choice& choice)
{
    if (!t.is_ref()) return {t.symbols};
    const ClassDef& d = def_of(g, t.head());
    if (auto a = d.alternatives()) return expand_term(g, a->cls.alternatives.at(choice.at(d.name)), choice);
    if (auto r = d.rename()) return expand_term(g, Term::ref(r->target), choice);
    std::set<Sentence> acc{Sentence{}};
    for (const InlineClass& p : d.concatenation()->parts) acc = product(acc, expand_class(g, p, choice));
    return acc;
}

std::set<Sentence> expand_class(const Grammar& g, const InlineClass& c, const Choice& choice)
{
    std::set<Sentence> out;
    for (const Term& t : c.alternatives) {
        auto part = expand_term(g, t, choice);
        out.insert(part.begin(), part.end());
    }
    return out;
}

} // namespace

std::set<Sentence> oracle_language(const Grammar& g)
{
    std::set<Sentence> lang;
    for (const Rule& r : g.rules) {
        std::set<Symbol> names;
        for (const InlineClass& c : r.body) reachable(g, c, names);
        std::vector<Symbol> order(names.begin(), names.end());
        Choice choice;
        for (Symbol n : order) choice[n] = 0;
        for (;;) {
            std::set<Sentence> acc{Sentence{}};
            for (const InlineClass& c : r.body) acc = product(acc, expand_class(g, c, choice));
            lang.insert(acc.begin(), acc.end());
            // Odometer over the alternative indices.
            std::size_t i = 0;
            for (; i < order.size(); ++i) {
                const ClassDef& d = def_of(g, order[i]);
                const std::size_t n = d.alternatives() ? d.alternatives()->cls.alternatives.size() : 1;
                if (++choice[order[i]] < n) break;
                choice[order[i]] = 0;
            }
            if (i == order.size()) break;
        }
    }
    return lang;
}

namespace {

std::string render(const InlineClass& c)
{
    std::string s = "{";
    for (std::size_t i = 0; i < c.alternatives.size(); ++i) {
        if (i) s += " |";
        for (Symbol w : c.alternatives[i].symbols) s += " " + w.text();
    }
    return s + " }";
}

std::string render(const Sequence& seq)
{
    std::string s;
    for (const InlineClass& c : seq) s += render(c) + " ";
    return s;
}

std::string render(const ClassDef& d)
{
    std::string s = d.name.text() + " = ";
    if (auto a = d.alternatives()) s += render(a->cls);
    if (auto c = d.concatenation()) s += render(c->parts);
    if (auto r = d.rename()) s += r->target.text();
    return s;
}

} // namespace

std::size_t oracle_dl(const Grammar& g)
{
    std::string text;
    for (const ClassDef& d : g.defs) text += render(d) + "\n";
    for (const Rule& r : g.rules) text += render(r.body) + "\n";
    std::istringstream in(text);
    std::size_t n = 0;
    for (std::string tok; in >> tok;) ++n;
    return n;
}

namespace {

std::set<Sentence> class_language(const Grammar& g, Symbol name)
{
    Grammar probe = g;
    probe.rules = {Rule{{InlineClass::of(Term::ref(name))}}};
    return oracle_language(probe);
}

InlineClass normalized(InlineClass c, const std::map<Symbol, Symbol>& rename)
{
    for (Term& t : c.alternatives)
        if (t.is_ref()) t.symbols[0] = rename.at(t.head());
    std::sort(c.alternatives.begin(), c.alternatives.end(), [](const Term& x, const Term& y) {
        return std::tie(x.kind, x.symbols) < std::tie(y.kind, y.symbols);
    });
    return c;
}

std::multiset<std::string> shape(const Grammar& g, const std::map<Symbol, Symbol>& rename)
{
    std::multiset<std::string> out;
    for (const ClassDef& d : g.defs) {
        ClassDef n = d;
        n.name = rename.at(d.name);
        if (auto a = std::get_if<Alternatives>(&n.body)) a->cls = normalized(a->cls, rename);
        if (auto c = std::get_if<Concatenation>(&n.body))
            for (InlineClass& p : c->parts) p = normalized(p, rename);
        if (auto r = std::get_if<Rename>(&n.body)) r->target = rename.at(r->target);
        out.insert(render(n));
    }
    for (const Rule& r : g.rules) {
        Sequence body;
        for (const InlineClass& c : r.body) body.push_back(normalized(c, rename));
        out.insert(render(body));
    }
    return out;
}

} // namespace

bool isomorphic(const Grammar& a, const Grammar& b, std::string* why)
{
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (a.defs.size() != b.defs.size()) return fail("different number of defs");
    if (a.rules.size() != b.rules.size()) return fail("different number of rules");
    std::map<Symbol, Symbol> to_b, identity;
    for (const ClassDef& db : b.defs) identity[db.name] = db.name;
    for (const ClassDef& da : a.defs) {
        const auto la = class_language(a, da.name);
        bool found = false;
        for (const ClassDef& db : b.defs) {
            if (class_language(b, db.name) == la) {
                to_b[da.name] = db.name;
                found = true;
                break;
            }
        }
        if (!found) return fail("no class matching " + da.name.text());
    }
    if (shape(a, to_b) != shape(b, identity)) return fail("defs or rules differ after matching classes");
    return true;
}

Corpus random_corpus(std::uint32_t seed)
{
    std::mt19937 rng(seed);
    auto pick = [&](std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    };
    const std::size_t alphabet = pick(3, 12);
    std::vector<Symbol> sym;
    for (std::size_t i = 0; i < alphabet; ++i) sym.emplace_back("s" + std::to_string(i));

    Corpus c;
    const std::size_t target = pick(1, 40);
    if (seed % 2 == 0) {
        // Slots, each with a small word set; sentences drawn from the product.
        const std::size_t slots = pick(1, 4);
        std::vector<std::vector<Symbol>> sets(slots);
        for (auto& s : sets) {
            const std::size_t k = pick(1, std::min<std::size_t>(4, alphabet));
            for (std::size_t i = 0; i < k; ++i) s.push_back(sym[pick(0, alphabet - 1)]);
        }
        for (std::size_t n = 0; n < target * 2 && c.distinct_size() < target; ++n) {
            Sentence s;
            for (const auto& set : sets) s.push_back(set[pick(0, set.size() - 1)]);
            // Occasionally repeat a word to exercise unification.
            if (slots >= 2 && pick(0, 5) == 0) s.push_back(s.front());
            c.add(std::move(s));
        }
    } else {
        for (std::size_t n = 0; n < target; ++n) {
            Sentence s;
            const std::size_t len = pick(1, 4);
            for (std::size_t i = 0; i < len; ++i) s.push_back(sym[pick(0, alphabet - 1)]);
            c.add(std::move(s), pick(1, 2));
        }
    }
    return c;
}

} // namespace mdlg::testing
