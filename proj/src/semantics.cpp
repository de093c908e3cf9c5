#include <mdlg/semantics.hpp>

#include <mdlg/corpus_io.hpp>
#include <mdlg/dl.hpp>
#include <mdlg/generator.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

namespace mdlg {

void MeaningFunction::set(Symbol word, Symbol category)
{
    Tuple meaning = Tuple::list({Tuple(word), Tuple(category)});
    auto it = words_.find(word);
    if (it != words_.end()) {
        entries_[it->second].meaning = std::move(meaning);
        return;
    }
    words_.emplace(word, entries_.size());
    entries_.push_back({Tuple(word), std::move(meaning)});
}

void MeaningFunction::add(Tuple key, Tuple meaning)
{
    if (key.is_atom()) {
        const Symbol w = key.symbol();
        if (words_.count(w)) throw Error("duplicate meaning entry for '" + w.text() + "'");
        words_.emplace(w, entries_.size());
    }
    entries_.push_back({std::move(key), std::move(meaning)});
}

std::optional<Symbol> MeaningFunction::category(Symbol word) const
{
    auto it = words_.find(word);
    if (it == words_.end()) return std::nullopt;
    const Tuple& m = entries_[it->second].meaning;
    if (m.is_atom() || m.items().size() != 2 || !m.items()[1].is_atom()) return std::nullopt;
    return m.items()[1].symbol();
}

std::vector<Tuple> MeaningFunction::table() const
{
    std::vector<Tuple> rows;
    rows.reserve(entries_.size());
    for (const MeaningEntry& e : entries_) rows.push_back(Tuple::list({e.key, e.meaning}));
    return rows;
}

Sentence MeaningTemplate::apply(Symbol left, Symbol right) const
{
    Sentence out;
    for (const Item& it : items) {
        if (it.is_slot) {
            out.push_back(it.slot == 0 ? left : right);
        } else {
            out.insert(out.end(), it.constant.begin(), it.constant.end());
        }
    }
    return out;
}

Tuple meaning_tuple(const Sentence& meaning)
{
    std::vector<Tuple> items;
    if (meaning.size() % 2 == 0) {
        for (std::size_t i = 0; i < meaning.size(); i += 2)
            items.push_back(Tuple::list({Tuple(meaning[i]), Tuple(meaning[i + 1])}));
    } else {
        for (Symbol s : meaning) items.emplace_back(s);
    }
    return Tuple(std::move(items));
}

const OplusRule* OplusTable::rule_for(Symbol left_category, Symbol right_category) const
{
    for (const OplusRule& r : rules)
        if (r.left == left_category && r.right == right_category) return &r;
    return nullptr;
}

const SpecificPair* OplusTable::specific(Symbol left, Symbol right) const
{
    for (const SpecificPair& p : exclusions)
        if (p.left == left && p.right == right) return &p;
    return nullptr;
}

std::optional<Sentence> combine(const MeaningFunction& mu, const OplusTable& oplus, Symbol left, Symbol right)
{
    if (oplus.overrides) {
        if (const SpecificPair* p = oplus.specific(left, right)) return p->meaning;
    }
    const auto cl = mu.category(left);
    const auto cr = mu.category(right);
    if (!cl || !cr) return std::nullopt;
    const OplusRule* r = oplus.rule_for(*cl, *cr);
    if (!r) return std::nullopt;
    return r->result.apply(left, right);
}

namespace {

using WordPair = std::pair<Symbol, Symbol>;

struct WordPairHash {
    std::size_t operator()(const WordPair& p) const noexcept
    {
        return SymbolHash{}(p.first) * 31 + SymbolHash{}(p.second);
    }
};

bool has_marker(Symbol category)
{
    const std::string& t = category.text();
    return t.size() > nonid_suffix.size() && t.ends_with(nonid_suffix);
}

Symbol strip_marker(Symbol category)
{
    if (!has_marker(category)) return category;
    const std::string& t = category.text();
    return Symbol(std::string_view(t).substr(0, t.size() - nonid_suffix.size()));
}

Symbol with_marker(const std::string& base) { return Symbol(base + std::string(nonid_suffix)); }

struct RuleShape {
    bool general = false;
    MeaningTemplate tmpl;
};

RuleShape classify(const Rule& r)
{
    if (r.body.size() < 2) throw ShapeError("rule '" + serialize_sequence(r.body) + "' has no two-word form");
    RuleShape shape;
    bool uses[2] = {false, false};
    for (std::size_t i = 2; i < r.body.size(); ++i) {
        const InlineClass& c = r.body[i];
        MeaningTemplate::Item item;
        bool slot = false;
        for (std::size_t p = 0; p < 2 && !slot; ++p) {
            if (c == r.body[p] && c.is_singleton()) {
                item.is_slot = slot = true;
                item.slot = p;
                uses[p] = true;
            }
        }
        if (!slot) {
            if (c.alternatives.size() != 1 || c.alternatives.front().is_ref())
                throw ShapeError("meaning part of '" + serialize_sequence(r.body) +
                                 "' is neither a constant nor a form constituent");
            item.constant = c.alternatives.front().symbols;
        }
        shape.tmpl.items.push_back(std::move(item));
    }
    shape.general = uses[0] && uses[1];
    return shape;
}

} // namespace

Semantics extract_semantics(const Grammar& g, std::size_t form_width, const SemanticsOptions& opts)
{
    if (form_width != 2) throw ShapeError("form width must be 2");
    require_valid(g);
    const DefIndex defs(g);
    Expander ex(defs);

    std::set<Symbol> words[2];
    std::unordered_set<WordPair, WordPairHash> general_pairs;
    std::optional<MeaningTemplate> general_tmpl;
    std::vector<SpecificPair> specific;
    std::unordered_set<WordPair, WordPairHash> specific_pairs;
    std::set<Symbol> idiomatic[2];

    for (const Rule& r : g.rules) {
        const RuleShape shape = classify(r);
        const Sequence form{r.body[0], r.body[1]};
        for (const Sentence& s : ex.expand(form)) {
            if (s.size() != 2) throw ShapeError("form of '" + serialize_sequence(r.body) + "' is not two words");
            words[0].insert(s[0]);
            words[1].insert(s[1]);
            if (shape.general) general_pairs.insert({s[0], s[1]});
        }
        if (shape.general) {
            if (general_tmpl && !(*general_tmpl == shape.tmpl))
                throw ShapeError("general rules build different meanings");
            general_tmpl = shape.tmpl;
            continue;
        }
        const std::string text = serialize_sequence(r.body);
        for (const Sentence& s : ex.expand(r.body)) {
            if (!specific_pairs.insert({s[0], s[1]}).second) continue;
            idiomatic[0].insert(s[0]);
            idiomatic[1].insert(s[1]);
            specific.push_back({s[0], s[1], Sentence(s.begin() + 2, s.end()), text});
        }
    }
    for (Symbol w : words[0])
        if (words[1].count(w)) throw ShapeError("word '" + w.text() + "' appears at both form positions");

    auto covers = [&](const std::set<Symbol>& left, const std::set<Symbol>& right) {
        if (left.empty() || right.empty()) return false;
        for (Symbol l : left)
            for (Symbol r : right)
                if (!general_pairs.count({l, r})) return false;
        return true;
    };

    const Symbol base[2] = {Symbol(opts.categories[0]), Symbol(opts.categories[1])};
    std::sort(specific.begin(), specific.end(), [](const SpecificPair& a, const SpecificPair& b) {
        return std::tie(a.left, a.right) < std::tie(b.left, b.right);
    });

    Semantics out;
    out.oplus.exclusions = specific;

    bool overlap = false;
    for (const SpecificPair& p : specific) overlap |= general_pairs.count({p.left, p.right}) != 0;
    if (!opts.force_markers && overlap && covers(words[0], words[1])) {
        // A general rule covers everything; the idioms override it.
        for (std::size_t p = 0; p < 2; ++p)
            for (Symbol w : words[p]) out.mu.set(w, base[p]);
        out.oplus.rules.push_back({base[0], base[1], *general_tmpl});
        out.oplus.overrides = true;
        return out;
    }

    std::set<Symbol> plain[2];
    for (std::size_t p = 0; p < 2; ++p) {
        const Symbol marked = with_marker(opts.categories[p]);
        for (Symbol w : words[p]) {
            if (idiomatic[p].count(w)) {
                out.mu.set(w, base[p]);
            } else {
                out.mu.set(w, marked);
                plain[p].insert(w);
            }
        }
    }
    if (general_tmpl && covers(plain[0], plain[1]))
        out.oplus.rules.push_back({with_marker(opts.categories[0]), with_marker(opts.categories[1]), *general_tmpl});
    return out;
}

CompositionalityReport check_compositional(const MeaningFunction& mu, const OplusTable& oplus, const Corpus& corpus,
                                           std::size_t form_width)
{
    if (form_width != 2) throw ShapeError("form width must be 2");
    CompositionalityReport rep;
    for (const auto& [s, n] : corpus.counts()) {
        if (s.size() < form_width) continue;
        ++rep.corpus_sentences;
        const auto m = combine(mu, oplus, s[0], s[1]);
        if (!m) continue;
        ++rep.domain_sentences;
        if (!std::equal(m->begin(), m->end(), s.begin() + 2, s.end())) rep.violations.push_back(s);
    }
    return rep;
}

namespace {

// Replaces the marked category of position `pos` by its base everywhere.
// Returns nothing when the position carries no marker or the drop would
// make two combination rules collide.
std::optional<Semantics> drop_marker(const Semantics& s, std::size_t pos)
{
    std::map<Symbol, Symbol> rename;
    for (const OplusRule& r : s.oplus.rules) {
        const Symbol c = pos == 0 ? r.left : r.right;
        if (has_marker(c)) rename.emplace(c, strip_marker(c));
    }
    if (rename.empty()) return std::nullopt;
    auto renamed = [&](Symbol c) {
        auto it = rename.find(c);
        return it == rename.end() ? c : it->second;
    };

    Semantics out;
    out.oplus.exclusions = s.oplus.exclusions;
    out.oplus.overrides = s.oplus.overrides;
    for (const OplusRule& r : s.oplus.rules) {
        OplusRule n = r;
        (pos == 0 ? n.left : n.right) = renamed(pos == 0 ? r.left : r.right);
        if (const OplusRule* prev = out.oplus.rule_for(n.left, n.right)) {
            if (!(prev->result == n.result)) return std::nullopt;
            continue;
        }
        out.oplus.rules.push_back(std::move(n));
    }
    for (const MeaningEntry& e : s.mu.entries()) {
        if (e.key.is_atom()) {
            if (const auto c = s.mu.category(e.key.symbol())) {
                out.mu.set(e.key.symbol(), renamed(*c));
                continue;
            }
        }
        out.mu.add(e.key, e.meaning);
    }
    return out;
}

} // namespace

Semantics maximal_extension(const MeaningFunction& mu, const OplusTable& oplus, const Corpus& corpus,
                            std::size_t form_width)
{
    Semantics cur{mu, oplus};
    auto rep = check_compositional(cur.mu, cur.oplus, corpus, form_width);
    auto score = compositionality_score(cur.mu, cur.oplus);
    for (std::size_t pos = form_width; pos-- > 0;) {
        auto next = drop_marker(cur, pos);
        if (!next) continue;
        auto next_rep = check_compositional(next->mu, next->oplus, corpus, form_width);
        auto next_score = compositionality_score(next->mu, next->oplus);
        if (!next_rep.violations.empty() || next_rep.domain_sentences < rep.domain_sentences ||
            next_score.encoding > score.encoding)
            continue;
        cur = std::move(*next);
        rep = std::move(next_rep);
        score = next_score;
    }
    return cur;
}

IdiomReport idiom_items(const Grammar& g, const Corpus& corpus, std::size_t form_width, const SemanticsOptions& opts)
{
    SemanticsOptions marked = opts;
    marked.force_markers = true;
    const Semantics initial = extract_semantics(g, form_width, marked);
    const Semantics max = maximal_extension(initial.mu, initial.oplus, corpus, form_width);

    IdiomReport rep;
    std::set<Sentence> seen;
    for (const SpecificPair& p : max.oplus.exclusions) {
        Sentence s{p.left, p.right};
        s.insert(s.end(), p.meaning.begin(), p.meaning.end());
        if (!seen.insert(s).second) continue;
        rep.sentences.push_back(std::move(s));
        rep.justification.push_back(p.rule);
    }

    for (std::size_t pos = 0; pos < 2; ++pos) {
        const Symbol base(opts.categories[pos]);
        const Symbol marker = with_marker(opts.categories[pos]);
        bool had = false;
        bool has = false;
        for (const MeaningEntry& e : initial.mu.entries())
            had |= e.key.is_atom() && initial.mu.category(e.key.symbol()) == marker;
        for (const MeaningEntry& e : max.mu.entries())
            has |= e.key.is_atom() && max.mu.category(e.key.symbol()) == marker;
        if (had && !has) continue; // dropped: every word here is compositional
        std::set<Symbol> items;
        for (const MeaningEntry& e : max.mu.entries())
            if (e.key.is_atom() && max.mu.category(e.key.symbol()) == base) items.insert(e.key.symbol());
        rep.items.insert(rep.items.end(), items.begin(), items.end());
    }
    return rep;
}

bool more_compositional(const CompositionalityScore& a, const CompositionalityScore& b)
{
    if (a.domain != b.domain) return a.domain > b.domain;
    return a.encoding < b.encoding;
}

namespace {

Tuple rule_tuple(const OplusRule& r)
{
    return Tuple::list({Tuple::list({Tuple(r.left), Tuple(r.right)}),
                        meaning_tuple(r.result.apply(Symbol("$1"), Symbol("$2")))});
}

Tuple pair_tuple(const SpecificPair& p)
{
    return Tuple::list({Tuple::list({Tuple(p.left), Tuple(p.right)}), meaning_tuple(p.meaning)});
}

} // namespace

CompositionalityScore compositionality_score(const MeaningFunction& mu, const OplusTable& oplus)
{
    CompositionalityScore s;
    std::unordered_map<Symbol, std::size_t, SymbolHash> per_category;
    for (const MeaningEntry& e : mu.entries())
        if (e.key.is_atom())
            if (auto c = mu.category(e.key.symbol())) ++per_category[*c];
    auto count = [&](Symbol c) {
        auto it = per_category.find(c);
        return it == per_category.end() ? std::size_t{0} : it->second;
    };

    s.domain = mu.size();
    for (const OplusRule& r : oplus.rules) s.domain += count(r.left) * count(r.right);
    if (oplus.overrides) {
        for (const SpecificPair& p : oplus.exclusions) {
            const auto cl = mu.category(p.left);
            const auto cr = mu.category(p.right);
            if (!cl || !cr || !oplus.rule_for(*cl, *cr)) ++s.domain;
        }
    }

    const auto table = mu.table();
    s.encoding = table_dl(table);
    for (const OplusRule& r : oplus.rules) s.encoding += tuple_dl(rule_tuple(r));
    for (const SpecificPair& p : oplus.exclusions) s.encoding += tuple_dl(pair_tuple(p));
    return s;
}

LambdaReport lambda_encoding_report(const MeaningFunction& mu, const OplusTable& oplus)
{
    LambdaReport rep;
    if (mu.empty() && oplus.rules.empty() && oplus.exclusions.empty()) return rep;
    if (oplus.rules.size() > 1) throw ShapeError("more than one combination rule");

    std::optional<Symbol> base[2];
    auto note = [&](std::size_t pos, std::optional<Symbol> c) {
        if (!c) throw ShapeError("a word of a specific pair has no meaning");
        const Symbol b = strip_marker(*c);
        if (base[pos] && *base[pos] != b) throw ShapeError("mixed categories at one form position");
        base[pos] = b;
    };
    if (!oplus.rules.empty()) {
        note(0, oplus.rules.front().left);
        note(1, oplus.rules.front().right);
    }
    for (const SpecificPair& p : oplus.exclusions) {
        note(0, mu.category(p.left));
        note(1, mu.category(p.right));
    }
    for (const MeaningEntry& e : mu.entries()) {
        if (!e.key.is_atom() || !mu.category(e.key.symbol()))
            throw ShapeError("meaning entry is not of the form [word,category]");
    }
    if (!base[0] || !base[1]) throw ShapeError("no combination rule and no specific pair");

    const std::string verb = base[0]->text();
    const std::string noun = base[1]->text();
    rep.definitions.push_back("λX.[" + noun + ",X]");
    rep.definitions.push_back("λY.[" + verb + ",Y]");
    if (!oplus.rules.empty()) {
        const Tuple body = meaning_tuple(oplus.rules.front().result.apply(Symbol("Y"), Symbol("X")));
        rep.definitions.push_back("λ[" + verb + ",Y][" + noun + ",X]." + to_string(body));
    }
    for (const SpecificPair& p : oplus.exclusions) {
        rep.definitions.push_back("λ[" + verb + "," + p.left.text() + "][" + noun + "," + p.right.text() + "]." +
                                  to_string(meaning_tuple(p.meaning)));
    }
    for (const std::string& d : rep.definitions) rep.definition_size += lambda_token_count(d);
    rep.domain_size = mu.size();
    return rep;
}

std::size_t lambda_token_count(std::string_view expr)
{
    static constexpr std::string_view lambda = "λ";
    std::size_t n = 0;
    std::size_t i = 0;
    auto punct = [](char c) { return c == '.' || c == '[' || c == ']' || c == ','; };
    auto blank = [](char c) { return c == ' ' || c == '\t' || c == '\n'; };
    while (i < expr.size()) {
        if (blank(expr[i])) {
            ++i;
        } else if (expr.substr(i).starts_with(lambda)) {
            ++n;
            i += lambda.size();
        } else if (punct(expr[i])) {
            ++n;
            ++i;
        } else {
            ++n;
            while (i < expr.size() && !blank(expr[i]) && !punct(expr[i]) && !expr.substr(i).starts_with(lambda)) ++i;
        }
    }
    return n;
}

} // namespace mdlg
