#include <mdlg/dl.hpp>
#include <mdlg/generator.hpp>
#include <mdlg/grammar.hpp>

#include <algorithm>
#include <functional>
#include <unordered_set>

namespace mdlg {

const ClassDef* Grammar::find(Symbol name) const
{
    auto it = std::find_if(defs.begin(), defs.end(), [&](const ClassDef& d) { return d.name == name; });
    return it == defs.end() ? nullptr : &*it;
}

Corpus::Corpus(std::initializer_list<Sentence> sentences)
{
    for (const Sentence& s : sentences) add(s);
}

void Corpus::add(Sentence s, std::size_t count)
{
    if (count == 0) throw Error("corpus multiplicity must be at least 1");
    counts_[std::move(s)] += count;
}

std::size_t Corpus::total_size() const
{
    std::size_t n = 0;
    for (const auto& [s, k] : counts_) n += k;
    return n;
}

std::size_t Corpus::count(const Sentence& s) const
{
    auto it = counts_.find(s);
    return it == counts_.end() ? 0 : it->second;
}

std::vector<Sentence> Corpus::distinct() const
{
    std::vector<Sentence> out;
    out.reserve(counts_.size());
    for (const auto& [s, k] : counts_) out.push_back(s);
    return out;
}

DefIndex::DefIndex(const Grammar& g) : DefIndex(g.defs) { }

DefIndex::DefIndex(const std::vector<ClassDef>& defs)
{
    for (const ClassDef& d : defs) map_.emplace(d.name, &d);
}

// ---------------------------------------------------------------------------
// validation

std::vector<std::string> ValidationReport::messages() const
{
    std::vector<std::string> out;
    for (const auto& d : diagnostics) out.push_back(d.message);
    return out;
}

namespace {

struct Validator {
    const Grammar& g;
    std::unordered_set<Symbol, SymbolHash> names;
    ValidationReport rep;

    void add(Diagnostic::Kind k, std::string msg) { rep.diagnostics.push_back({k, std::move(msg)}); }

    void check_class(const InlineClass& c, const std::string& where)
    {
        if (c.alternatives.empty()) {
            add(Diagnostic::Kind::empty_class, where + ": empty class");
            return;
        }
        for (std::size_t i = 0; i < c.alternatives.size(); ++i) {
            const Term& t = c.alternatives[i];
            if (t.symbols.empty()) {
                add(Diagnostic::Kind::empty_class, where + ": empty term");
                continue;
            }
            for (std::size_t j = 0; j < i; ++j) {
                if (c.alternatives[j] == t) {
                    add(Diagnostic::Kind::duplicate_alternative, where + ": repeated alternative");
                }
            }
            if (t.is_ref()) {
                if (t.symbols.size() != 1) {
                    add(Diagnostic::Kind::undefined_ref, where + ": malformed class reference");
                } else if (!names.count(t.head())) {
                    add(Diagnostic::Kind::undefined_ref, where + ": undefined class " + t.head().text());
                }
                continue;
            }
            for (Symbol s : t.symbols) {
                if (!s.valid() || !is_valid_symbol_text(s.text())) {
                    add(Diagnostic::Kind::bad_symbol, where + ": invalid symbol '" + (s.valid() ? s.text() : "") + "'");
                } else if (names.count(s)) {
                    add(Diagnostic::Kind::name_clash, where + ": symbol " + s.text() + " is also a class name");
                }
            }
        }
    }

    void check_sequence(const Sequence& seq, const std::string& where)
    {
        for (const InlineClass& c : seq) check_class(c, where);
    }

    void check_cycles()
    {
        DefIndex idx(g);
        enum class Mark { none, active, done };
        std::unordered_map<Symbol, Mark, SymbolHash> mark;
        std::function<bool(const ClassDef&)> visit = [&](const ClassDef& d) -> bool {
            auto& m = mark[d.name];
            if (m == Mark::done) return false;
            if (m == Mark::active) return true;
            m = Mark::active;
            std::vector<Symbol> next;
            auto collect = [&](const Sequence& seq) {
                for (const auto& c : seq)
                    for (const auto& t : c.alternatives)
                        if (t.is_ref() && t.is_unit()) next.push_back(t.head());
            };
            if (const auto* a = d.alternatives()) collect({a->cls});
            if (const auto* c = d.concatenation()) collect(c->parts);
            if (const auto* r = d.rename()) next.push_back(r->target);
            for (Symbol n : next) {
                if (const ClassDef* nd = idx.find(n); nd && visit(*nd)) return true;
            }
            mark[d.name] = Mark::done;
            return false;
        };
        for (const ClassDef& d : g.defs) {
            if (mark[d.name] == Mark::none && visit(d)) {
                add(Diagnostic::Kind::cycle, "cyclic definition through " + d.name.text());
                return;
            }
        }
    }

    ValidationReport run()
    {
        for (const ClassDef& d : g.defs) {
            if (!d.name.valid() || !is_valid_symbol_text(d.name.text())) {
                add(Diagnostic::Kind::bad_symbol, "invalid class name");
                continue;
            }
            if (!names.insert(d.name).second) {
                add(Diagnostic::Kind::duplicate_name, "class " + d.name.text() + " defined twice");
            }
        }
        for (const ClassDef& d : g.defs) {
            if (!d.name.valid()) continue;
            const std::string where = "def " + d.name.text();
            if (const auto* a = d.alternatives()) check_class(a->cls, where);
            if (const auto* c = d.concatenation()) {
                if (c->parts.size() < 2) add(Diagnostic::Kind::bad_concatenation, where + ": concatenation needs two or more classes");
                check_sequence(c->parts, where);
            }
            if (const auto* r = d.rename()) {
                if (!names.count(r->target)) add(Diagnostic::Kind::undefined_ref, where + ": undefined class " + (r->target.valid() ? r->target.text() : ""));
            }
        }
        for (std::size_t i = 0; i < g.rules.size(); ++i) {
            const std::string where = "rule " + std::to_string(i + 1);
            if (g.rules[i].body.empty()) add(Diagnostic::Kind::empty_rule, where + ": empty rule");
            check_sequence(g.rules[i].body, where);
        }
        check_cycles();
        return std::move(rep);
    }
};

} // namespace

ValidationReport validate(const Grammar& g) { return Validator{g, {}, {}}.run(); }

void require_valid(const Grammar& g)
{
    auto rep = validate(g);
    if (!rep.ok()) throw ValidationError("invalid grammar: " + rep.diagnostics.front().message, rep.messages());
}

Grammar listing_grammar(const Corpus& c)
{
    if (c.empty()) throw EmptyInputError("empty corpus");
    InlineClass cls;
    for (const auto& [s, n] : c.counts()) cls.alternatives.push_back(Term::sequence(s));
    Grammar g;
    g.rules.push_back(Rule{{std::move(cls)}});
    return g;
}

// ---------------------------------------------------------------------------
// references and inlining

void count_references(const Sequence& seq, RefCounts& out, long sign)
{
    for (const InlineClass& c : seq)
        for (const Term& t : c.alternatives)
            if (t.is_ref()) out[t.head()] += static_cast<std::size_t>(sign);
}

void count_references(const ClassDef& d, RefCounts& out, long sign)
{
    if (const auto* a = d.alternatives()) {
        for (const Term& t : a->cls.alternatives)
            if (t.is_ref()) out[t.head()] += static_cast<std::size_t>(sign);
    } else if (const auto* c = d.concatenation()) {
        count_references(c->parts, out, sign);
    } else {
        out[d.rename()->target] += static_cast<std::size_t>(sign);
    }
}

RefCounts reference_counts(const Grammar& g)
{
    RefCounts out;
    for (const ClassDef& d : g.defs) count_references(d, out);
    for (const Rule& r : g.rules) count_references(r.body, out);
    return out;
}

namespace {

bool class_references(const InlineClass& c, Symbol name)
{
    return std::any_of(c.alternatives.begin(), c.alternatives.end(),
                       [&](const Term& t) { return t.is_ref() && t.head() == name; });
}

} // namespace

bool references(const Sequence& seq, Symbol name)
{
    return std::any_of(seq.begin(), seq.end(), [&](const InlineClass& c) { return class_references(c, name); });
}

bool references(const ClassDef& d, Symbol name)
{
    if (const auto* a = d.alternatives()) return class_references(a->cls, name);
    if (const auto* c = d.concatenation()) return references(c->parts, name);
    return d.rename()->target == name;
}

void dedup_alternatives(InlineClass& c)
{
    std::vector<Term> out;
    out.reserve(c.alternatives.size());
    for (Term& t : c.alternatives) {
        if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(std::move(t));
    }
    c.alternatives = std::move(out);
}

namespace {

// Replace the reference to `d` among the alternatives of `c` by d's own
// alternatives.
std::optional<InlineClass> splice_alternatives(const InlineClass& c, const ClassDef& d)
{
    const auto* da = d.alternatives();
    if (!da) return std::nullopt;
    InlineClass out;
    bool hit = false;
    for (const Term& t : c.alternatives) {
        if (!hit && t.is_ref() && t.head() == d.name) {
            hit = true;
            for (const Term& x : da->cls.alternatives) out.alternatives.push_back(x);
        } else {
            out.alternatives.push_back(t);
        }
    }
    if (!hit) return std::nullopt;
    dedup_alternatives(out);
    return out;
}

} // namespace

std::optional<Sequence> inline_into(const Sequence& seq, const ClassDef& d)
{
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const InlineClass& c = seq[i];
        if (!class_references(c, d.name)) continue;
        Sequence out;
        out.reserve(seq.size() + 2);
        out.insert(out.end(), seq.begin(), seq.begin() + static_cast<long>(i));
        if (c.alternatives.size() == 1) {
            if (const auto* a = d.alternatives()) {
                out.push_back(a->cls);
            } else if (const auto* cat = d.concatenation()) {
                out.insert(out.end(), cat->parts.begin(), cat->parts.end());
            } else {
                return std::nullopt;
            }
        } else {
            auto spliced = splice_alternatives(c, d);
            if (!spliced) return std::nullopt;
            out.push_back(std::move(*spliced));
        }
        out.insert(out.end(), seq.begin() + static_cast<long>(i) + 1, seq.end());
        return out;
    }
    return std::nullopt;
}

std::optional<ClassDef> inline_into(const ClassDef& host, const ClassDef& d)
{
    if (const auto* a = host.alternatives()) {
        auto spliced = splice_alternatives(a->cls, d);
        if (!spliced) return std::nullopt;
        return ClassDef{host.name, Alternatives{std::move(*spliced)}};
    }
    if (const auto* c = host.concatenation()) {
        auto seq = inline_into(c->parts, d);
        if (!seq) return std::nullopt;
        return ClassDef{host.name, Concatenation{std::move(*seq)}};
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// def simplification

namespace {

bool drop_unreferenced(std::vector<ClassDef>& defs, RefCounts& refs)
{
    bool any = false;
    for (;;) {
        auto it = std::find_if(defs.begin(), defs.end(), [&](const ClassDef& d) { return refs[d.name] == 0; });
        if (it == defs.end()) return any;
        count_references(*it, refs, -1);
        defs.erase(it);
        any = true;
    }
}

// Inline the first def that is referenced exactly once, if that shortens
// the grammar. The single reference decides the host; no other placement is
// tried.
bool flatten_once(std::vector<ClassDef>& defs, RefCounts& refs, RuleStore& rules)
{
    for (std::size_t k = 0; k < defs.size(); ++k) {
        const ClassDef& d = defs[k];
        if (refs[d.name] != 1) continue;
        const std::size_t d_dl = term_dl(d);
        auto host = std::find_if(defs.begin(), defs.end(), [&](const ClassDef& h) { return &h != &d && references(h, d.name); });
        if (host != defs.end()) {
            auto merged = inline_into(*host, d);
            if (!merged || term_dl(*merged) >= term_dl(*host) + d_dl) continue;
            count_references(*host, refs, -1);
            count_references(d, refs, -1);
            count_references(*merged, refs);
            *host = std::move(*merged);
            defs.erase(defs.begin() + static_cast<long>(k));
            return true;
        }
        auto r = rules.sole_rule_referencing(d.name);
        if (!r) continue;
        const Sequence& old = rules.body(*r);
        auto body = inline_into(old, d);
        if (!body || term_dl(*body) >= term_dl(old) + d_dl) continue;
        count_references(old, refs, -1);
        count_references(d, refs, -1);
        count_references(*body, refs);
        rules.replace(*r, std::move(*body));
        defs.erase(defs.begin() + static_cast<long>(k));
        return true;
    }
    return false;
}

} // namespace

bool simplify_defs(std::vector<ClassDef>& defs, RefCounts& refs, RuleStore& rules)
{
    bool any = false;
    for (bool changed = true; changed;) {
        changed = drop_unreferenced(defs, refs);
        changed |= flatten_once(defs, refs, rules);
        any |= changed;
    }
    return any;
}

// ---------------------------------------------------------------------------
// canonicalization

namespace {

// Rule i is dropped iff another rule j generates a strict superset of its
// language, or the same language and comes first.
std::vector<bool> subsumed_rules(const Grammar& g, std::size_t limit)
{
    DefIndex idx(g);
    std::vector<std::vector<Sentence>> langs;
    langs.reserve(g.rules.size());
    std::unordered_map<Sentence, std::vector<std::size_t>, SentenceHash> by_sentence;
    for (std::size_t i = 0; i < g.rules.size(); ++i) {
        langs.push_back(rule_language(idx, g.rules[i], limit));
        for (const Sentence& s : langs.back()) by_sentence[s].push_back(i);
    }
    std::vector<bool> drop(g.rules.size(), false);
    for (std::size_t i = 0; i < g.rules.size(); ++i) {
        if (langs[i].empty()) continue;
        for (std::size_t j : by_sentence[langs[i].front()]) {
            if (j == i) continue;
            if (langs[j].size() < langs[i].size()) continue;
            if (langs[j].size() == langs[i].size() && j > i) continue;
            if (std::includes(langs[j].begin(), langs[j].end(), langs[i].begin(), langs[i].end(), SentenceIdLess{})) {
                drop[i] = true;
                break;
            }
        }
    }
    return drop;
}

class GrammarRules : public RuleStore {
public:
    explicit GrammarRules(Grammar& g) : g_(g) { }
    std::optional<std::size_t> sole_rule_referencing(Symbol name) const override
    {
        for (std::size_t i = 0; i < g_.rules.size(); ++i)
            if (references(g_.rules[i].body, name)) return i;
        return std::nullopt;
    }
    const Sequence& body(std::size_t i) const override { return g_.rules[i].body; }
    void replace(std::size_t i, Sequence body) override { g_.rules[i].body = std::move(body); }

private:
    Grammar& g_;
};

} // namespace

Grammar canonicalize(const Grammar& input, const CanonicalizeOptions& opts)
{
    require_valid(input);
    Grammar g = input;
    for (bool changed = true; changed;) {
        changed = false;
        const auto drop = subsumed_rules(g, opts.limit);
        if (std::find(drop.begin(), drop.end(), true) != drop.end()) {
            std::vector<Rule> kept;
            for (std::size_t i = 0; i < g.rules.size(); ++i)
                if (!drop[i]) kept.push_back(std::move(g.rules[i]));
            g.rules = std::move(kept);
            changed = true;
        }
        auto refs = reference_counts(g);
        GrammarRules store(g);
        changed |= simplify_defs(g.defs, refs, store);
    }
    if (opts.rename) g = rename_classes(g);
    return g;
}

std::vector<Symbol> terminals(const Grammar& g)
{
    std::set<Symbol> out;
    auto scan = [&](const InlineClass& c) {
        for (const Term& t : c.alternatives)
            if (!t.is_ref()) out.insert(t.symbols.begin(), t.symbols.end());
    };
    for (const ClassDef& d : g.defs) {
        if (const auto* a = d.alternatives()) scan(a->cls);
        if (const auto* c = d.concatenation()) for (const auto& p : c->parts) scan(p);
    }
    for (const Rule& r : g.rules) for (const auto& c : r.body) scan(c);
    return {out.begin(), out.end()};
}

Symbol fresh_class_name(const Grammar& g, std::string_view prefix)
{
    std::unordered_set<Symbol, SymbolHash> used;
    for (Symbol s : terminals(g)) used.insert(s);
    for (const ClassDef& d : g.defs) used.insert(d.name);
    for (std::size_t k = 1;; ++k) {
        Symbol s(std::string(prefix) + std::to_string(k));
        if (!used.count(s)) return s;
    }
}

Grammar rename_classes(const Grammar& g, std::string_view prefix)
{
    std::unordered_set<Symbol, SymbolHash> taken;
    for (Symbol s : terminals(g)) taken.insert(s);
    std::unordered_map<Symbol, Symbol, SymbolHash> map;
    std::size_t k = 0;
    for (const ClassDef& d : g.defs) {
        Symbol name;
        do {
            name = Symbol(std::string(prefix) + std::to_string(++k));
        } while (taken.count(name));
        map[d.name] = name;
    }
    auto fix_class = [&](InlineClass& c) {
        for (Term& t : c.alternatives)
            if (t.is_ref()) t.symbols.front() = map.at(t.head());
    };
    Grammar out = g;
    for (ClassDef& d : out.defs) {
        d.name = map.at(d.name);
        if (auto* a = std::get_if<Alternatives>(&d.body)) fix_class(a->cls);
        if (auto* c = std::get_if<Concatenation>(&d.body)) for (auto& p : c->parts) fix_class(p);
        if (auto* r = std::get_if<Rename>(&d.body)) r->target = map.at(r->target);
    }
    for (Rule& r : out.rules) for (auto& c : r.body) fix_class(c);
    return out;
}

} // namespace mdlg
