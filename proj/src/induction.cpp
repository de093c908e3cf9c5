#include <mdlg/induction.hpp>

#include <algorithm>
#include <exception>
#include <map>
#include <set>
#include <unordered_set>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mdlg {

std::string_view to_string(Variant v)
{
    switch (v) {
    case Variant::very_greedy: return "very-greedy";
    case Variant::partial: return "partial";
    case Variant::overgen: return "overgen";
    }
    return "?";
}

Variant parse_variant(std::string_view text)
{
    for (Variant v : {Variant::very_greedy, Variant::partial, Variant::overgen})
        if (to_string(v) == text) return v;
    throw Error("unknown variant '" + std::string(text) + "' (expected very-greedy, partial or overgen)");
}

std::string CandidateOp::describe() const
{
    return std::string(kind == Kind::merge ? "merge" : "concat") + "(" + a.name.text() + "," + b.name.text() + ")";
}

bool tie_break_less(const CandidateOp& x, const CandidateOp& y)
{
    return std::tuple(x.kind, x.index_a, x.index_b) < std::tuple(y.kind, y.index_a, y.index_b);
}

Grammar initial_grammar(const Corpus& corpus)
{
    if (corpus.empty()) throw EmptyInputError("empty corpus");
    Grammar g;
    for (const auto& [s, n] : corpus.counts()) {
        Rule r;
        for (Symbol w : s) r.body.push_back(InlineClass::of(Term::word(w)));
        g.rules.push_back(std::move(r));
    }
    return g;
}

namespace {

Term operand_term(const ClassOperand& o) { return o.is_def ? Term::ref(o.name) : Term::word(o.name); }

bool is_operand(const Term& t, const ClassOperand& o)
{
    return t.is_unit() && t.head() == o.name && t.is_ref() == o.is_def;
}

std::optional<ClassOperand> singleton_operand(const InlineClass& c)
{
    if (c.alternatives.size() != 1 || !c.alternatives.front().is_unit()) return std::nullopt;
    const Term& t = c.alternatives.front();
    return ClassOperand{t.head(), t.is_ref()};
}

// Unit terms naming either operand become references to `m`.
Sequence substitute_merge(const Sequence& body, const ClassOperand& a, const ClassOperand& b, Symbol m, bool& changed)
{
    Sequence out = body;
    changed = false;
    for (InlineClass& c : out) {
        bool hit = false;
        for (Term& t : c.alternatives) {
            if (is_operand(t, a) || is_operand(t, b)) {
                t = Term::ref(m);
                hit = true;
            }
        }
        if (hit) dedup_alternatives(c);
        changed |= hit;
    }
    return out;
}

// Every `{a}{b}` becomes `{x}`. Fails unless each occurrence of either
// operand is part of such a pair.
std::optional<Sequence> substitute_concat(const Sequence& body, const ClassOperand& a, const ClassOperand& b, Symbol x)
{
    auto mentions = [&](const InlineClass& c) {
        for (const Term& t : c.alternatives)
            for (Symbol s : t.symbols)
                if (s == a.name || s == b.name) return true;
        return false;
    };
    Sequence out;
    out.reserve(body.size());
    for (std::size_t p = 0; p < body.size(); ++p) {
        const InlineClass& c = body[p];
        if (!mentions(c)) {
            out.push_back(c);
            continue;
        }
        auto op = singleton_operand(c);
        if (!op || !(*op == a) || p + 1 == body.size()) return std::nullopt;
        auto next = singleton_operand(body[p + 1]);
        if (!next || !(*next == b)) return std::nullopt;
        out.push_back(InlineClass::of(Term::ref(x)));
        ++p;
    }
    return out;
}

ClassDef merge_def(Symbol m, const CandidateOp& op)
{
    return ClassDef{m, Alternatives{InlineClass{{operand_term(op.a), operand_term(op.b)}}}};
}

ClassDef concat_def(Symbol x, const CandidateOp& op)
{
    return ClassDef{x, Concatenation{{InlineClass::of(operand_term(op.a)), InlineClass::of(operand_term(op.b))}}};
}

using Lang = std::vector<Sentence>; // sorted by SentenceIdLess

bool subset(const Lang& small, const Lang& big)
{
    return std::includes(big.begin(), big.end(), small.begin(), small.end(), SentenceIdLess{});
}

// Everything the evaluation of candidates on one grammar shares: rule
// languages, occurrence indices and reference counts. Read-only after
// construction, so candidates can be evaluated concurrently.
class Workspace {
public:
    Workspace(const Grammar& g, const Corpus& corpus, const InductionConfig& cfg);

    long total() const { return static_cast<long>(grammar_dl_ + cfg_.penalty * extras_.size()); }
    std::size_t grammar_dl() const { return grammar_dl_; }
    std::size_t overgen_count() const { return extras_.size(); }
    Evaluation evaluate(const CandidateOp& op) const;
    Grammar materialize(const CandidateOp& op) const;

private:
    struct Touch {
        std::size_t rule;
        Sequence body;
        Lang lang;
        std::vector<Sentence> extras; // not in the corpus and not generated before
        bool contains_old;
    };

    struct Plan {
        std::map<std::size_t, Sequence> bodies; // rules whose body changes
        std::vector<std::size_t> substituted;
        std::set<std::size_t> removed;
        std::optional<std::vector<ClassDef>> defs; // unset: old defs plus `added`
        std::optional<ClassDef> added;
        std::size_t grammar_dl = 0;
        std::size_t overgen = 0;
        long total = 0;
    };

    std::optional<Plan> plan(const CandidateOp& op, std::string& reason) const;
    std::optional<Plan> plan_merge(const CandidateOp& op, std::string& reason) const;
    std::optional<Plan> plan_concat(const CandidateOp& op, std::string& reason) const;
    Plan finish(const std::vector<const Touch*>& kept, const ClassDef& added) const;
    std::vector<std::size_t> rules_mentioning(Symbol a, Symbol b) const;

    friend class PlanRules;

    const Grammar& g_;
    InductionConfig cfg_;
    DefIndex defs_;
    std::unordered_set<Sentence, SentenceHash> corpus_;
    std::vector<Lang> langs_;
    std::vector<std::size_t> rule_dl_;
    std::size_t grammar_dl_ = 0;
    std::size_t defs_dl_ = 0;
    std::unordered_map<Sentence, std::vector<std::size_t>, SentenceHash> first_;
    std::unordered_map<Sentence, std::vector<std::size_t>, SentenceHash> containing_;
    std::unordered_set<Sentence, SentenceHash> extras_;
    std::unordered_map<Symbol, std::vector<std::size_t>, SymbolHash> mentions_;
    std::unordered_set<Symbol, SymbolHash> in_defs_;
    RefCounts refs_;
    Symbol fresh_;
};

Workspace::Workspace(const Grammar& g, const Corpus& corpus, const InductionConfig& cfg)
    : g_(g), cfg_(cfg), defs_(g)
{
    require_valid(g);
    for (const auto& [s, n] : corpus.counts()) corpus_.insert(s);
    langs_.reserve(g.rules.size());
    for (std::size_t i = 0; i < g.rules.size(); ++i) {
        const Rule& r = g.rules[i];
        langs_.push_back(rule_language(defs_, r, cfg.limit));
        rule_dl_.push_back(term_dl(r));
        grammar_dl_ += rule_dl_.back();
        if (!langs_.back().empty()) first_[langs_.back().front()].push_back(i);
        for (const Sentence& s : langs_.back()) {
            containing_[s].push_back(i);
            if (!corpus_.count(s)) extras_.insert(s);
        }
        for (const InlineClass& c : r.body)
            for (const Term& t : c.alternatives)
                for (Symbol s : t.symbols) {
                    auto& v = mentions_[s];
                    if (v.empty() || v.back() != i) v.push_back(i);
                }
    }
    for (const auto& [s, n] : corpus.counts()) {
        if (!containing_.count(s)) throw CoverageError("grammar does not generate the corpus", {to_string(s)});
    }
    defs_dl_ = defs_dl(g.defs);
    grammar_dl_ += defs_dl_;
    for (const ClassDef& d : g.defs) {
        if (const auto* a = d.alternatives()) {
            for (const Term& t : a->cls.alternatives) in_defs_.insert(t.symbols.begin(), t.symbols.end());
        } else if (const auto* c = d.concatenation()) {
            for (const auto& part : c->parts)
                for (const Term& t : part.alternatives) in_defs_.insert(t.symbols.begin(), t.symbols.end());
        } else {
            in_defs_.insert(d.rename()->target);
        }
    }
    refs_ = reference_counts(g);
    fresh_ = fresh_class_name(g);
}

std::vector<std::size_t> Workspace::rules_mentioning(Symbol a, Symbol b) const
{
    std::vector<std::size_t> out;
    auto ia = mentions_.find(a), ib = mentions_.find(b);
    static const std::vector<std::size_t> none;
    const auto& va = ia == mentions_.end() ? none : ia->second;
    const auto& vb = ib == mentions_.end() ? none : ib->second;
    std::set_union(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(out));
    return out;
}

std::optional<Workspace::Plan> Workspace::plan(const CandidateOp& op, std::string& reason) const
{
    if (op.a == op.b) {
        reason = "identical operands";
        return std::nullopt;
    }
    return op.kind == CandidateOp::Kind::merge ? plan_merge(op, reason) : plan_concat(op, reason);
}

std::optional<Workspace::Plan> Workspace::plan_merge(const CandidateOp& op, std::string& reason) const
{
    const ClassDef m = merge_def(fresh_, op);
    const DefIndex idx(defs_, m);

    // A rule is dropped from every plan as soon as its extras make it
    // unkeepable, so its expansion can stop there.
    const bool strict = cfg_.variant != Variant::overgen;
    std::vector<Touch> touched;
    Expander ex(idx);
    for (std::size_t i : rules_mentioning(op.a.name, op.b.name)) {
        bool changed = false;
        Sequence body = substitute_merge(g_.rules[i].body, op.a, op.b, m.name, changed);
        if (!changed) continue;
        Lang lang;
        std::unordered_set<Sentence, SentenceHash> extras;
        std::size_t check_at = cfg_.limit;
        bool over_limit = false;
        auto keepable = [&] { return strict ? extras.empty() : extras.size() * cfg_.penalty < rule_dl_[i]; };
        const bool complete = ex.for_each(body, [&](const Sentence& s) {
            lang.push_back(s);
            if (lang.size() > check_at) {
                std::sort(lang.begin(), lang.end(), SentenceIdLess{});
                lang.erase(std::unique(lang.begin(), lang.end()), lang.end());
                if (lang.size() > cfg_.limit) {
                    over_limit = true;
                    return false;
                }
                check_at = std::max(cfg_.limit, 2 * lang.size());
            }
            if (!corpus_.count(s) && !extras_.count(s)) extras.insert(s);
            return keepable();
        });
        if (over_limit) {
            reason = "enumeration limit exceeded";
            return std::nullopt;
        }
        if (!complete) {
            if (cfg_.variant == Variant::very_greedy) {
                reason = "substitution overgenerates";
                return std::nullopt;
            }
            touched.push_back(Touch{i, {}, {}, {}, false});
            continue;
        }
        std::sort(lang.begin(), lang.end(), SentenceIdLess{});
        lang.erase(std::unique(lang.begin(), lang.end()), lang.end());
        Touch t{i, std::move(body), std::move(lang), {extras.begin(), extras.end()}, false};
        t.contains_old = subset(langs_[i], t.lang);
        if (cfg_.variant == Variant::very_greedy && !t.contains_old) {
            reason = "substitution loses sentences";
            return std::nullopt;
        }
        touched.push_back(std::move(t));
    }
    if (touched.empty()) {
        reason = "no occurrences in rules";
        return std::nullopt;
    }

    auto select = [&](auto keep) {
        std::vector<const Touch*> out;
        for (const Touch& t : touched)
            if (t.contains_old && keep(t)) out.push_back(&t);
        return out;
    };
    std::vector<std::vector<const Touch*>> options;
    switch (cfg_.variant) {
    case Variant::very_greedy:
        options.push_back(select([](const Touch&) { return true; }));
        break;
    case Variant::partial:
        options.push_back(select([](const Touch& t) { return t.extras.empty(); }));
        break;
    case Variant::overgen:
        // Either revert every rule that adds extras, or keep those whose
        // extras cost less than the rule itself (the most a rule can save
        // by being absorbed). Touches that stopped early are never kept.
        options.push_back(select([](const Touch& t) { return t.extras.empty(); }));
        options.push_back(select([](const Touch&) { return true; }));
        break;
    }

    std::optional<Plan> best;
    std::vector<const Touch*> best_kept;
    for (auto& kept : options) {
        if (kept.empty() || (best && kept == best_kept)) continue;
        Plan p = finish(kept, m);
        if (!best || p.total < best->total) {
            best = std::move(p);
            best_kept = kept;
        }
    }
    if (!best) reason = "every substitution reverted";
    return best;
}

std::optional<Workspace::Plan> Workspace::plan_concat(const CandidateOp& op, std::string& reason) const
{
    if (in_defs_.count(op.a.name) || in_defs_.count(op.b.name)) {
        reason = "operand used inside a definition";
        return std::nullopt;
    }
    const ClassDef x = concat_def(fresh_, op);
    std::vector<Touch> touched;
    for (std::size_t i : rules_mentioning(op.a.name, op.b.name)) {
        auto body = substitute_concat(g_.rules[i].body, op.a, op.b, x.name);
        if (!body) {
            reason = "operands do not always occur as an adjacent pair";
            return std::nullopt;
        }
        touched.push_back(Touch{i, std::move(*body), langs_[i], {}, true});
    }
    if (touched.empty()) {
        reason = "no occurrences in rules";
        return std::nullopt;
    }
    std::vector<const Touch*> kept;
    for (const Touch& t : touched) kept.push_back(&t);
    return finish(kept, x);
}

// Rule access for simplify_defs over the input grammar plus a plan's edits.
class PlanRules : public RuleStore {
public:
    PlanRules(const Workspace& ws, std::map<std::size_t, Sequence>& bodies,
              const std::set<std::size_t>& removed, std::size_t& dl)
        : ws_(ws), bodies_(bodies), removed_(removed), dl_(dl) { }

    std::optional<std::size_t> sole_rule_referencing(Symbol name) const override
    {
        std::optional<std::size_t> found;
        auto consider = [&](std::size_t i) {
            if (!removed_.count(i) && references(body(i), name) && (!found || i < *found)) found = i;
        };
        for (const auto& [i, b] : bodies_) consider(i);
        if (auto it = ws_.mentions_.find(name); it != ws_.mentions_.end())
            for (std::size_t i : it->second) consider(i);
        return found;
    }

    const Sequence& body(std::size_t i) const override
    {
        auto it = bodies_.find(i);
        return it == bodies_.end() ? ws_.g_.rules[i].body : it->second;
    }

    void replace(std::size_t i, Sequence b) override
    {
        dl_ = dl_ - term_dl(body(i)) + term_dl(b);
        bodies_[i] = std::move(b);
    }

private:
    const Workspace& ws_;
    std::map<std::size_t, Sequence>& bodies_;
    const std::set<std::size_t>& removed_;
    std::size_t& dl_;
};

Workspace::Plan Workspace::finish(const std::vector<const Touch*>& kept, const ClassDef& added) const
{
    Plan p;
    std::unordered_map<std::size_t, const Lang*> new_lang;
    std::unordered_set<Sentence, SentenceHash> new_extras;
    // Few changed rules are compared pairwise; many go through an index.
    const bool indexed = kept.size() > 16;
    std::unordered_map<Sentence, std::vector<const Touch*>, SentenceHash> kept_containing;
    for (const Touch* t : kept) {
        new_lang[t->rule] = &t->lang;
        p.substituted.push_back(t->rule);
        new_extras.insert(t->extras.begin(), t->extras.end());
        if (indexed)
            for (const Sentence& s : t->lang) kept_containing[s].push_back(t);
    }
    auto lang_of = [&](std::size_t i) -> const Lang& {
        auto it = new_lang.find(i);
        return it == new_lang.end() ? langs_[i] : *it->second;
    };
    // Same test as canonicalize: strictly smaller, or equal and later.
    auto subsumed_by = [&](std::size_t i, std::size_t j) {
        const Lang& li = lang_of(i);
        const Lang& lj = lang_of(j);
        if (lj.size() < li.size() || (lj.size() == li.size() && j > i)) return false;
        return subset(li, lj);
    };

    // Changed rules against every rule sharing their first sentence.
    for (const Touch* t : kept) {
        const std::size_t i = t->rule;
        if (t->lang.empty()) continue;
        const Sentence& s = t->lang.front();
        bool dropped = false;
        if (auto it = containing_.find(s); it != containing_.end())
            for (std::size_t j : it->second)
                if (j != i && !new_lang.count(j) && subsumed_by(i, j)) { dropped = true; break; }
        if (!dropped) {
            auto shares = [&](const Touch* o) {
                return indexed || std::binary_search(o->lang.begin(), o->lang.end(), s, SentenceIdLess{});
            };
            for (const Touch* o : indexed ? kept_containing[s] : kept)
                if (o != t && shares(o) && subsumed_by(i, o->rule)) { dropped = true; break; }
        }
        if (dropped) p.removed.insert(i);
    }
    // Unchanged rules can only be swallowed by a changed one.
    for (const Touch* t : kept) {
        for (const Sentence& s : t->lang) {
            auto it = first_.find(s);
            if (it == first_.end()) continue;
            for (std::size_t u : it->second)
                if (!new_lang.count(u) && !p.removed.count(u) && subsumed_by(u, t->rule)) p.removed.insert(u);
        }
    }

    std::size_t rules_dl = grammar_dl_ - defs_dl_;
    RefCounts refs = refs_;
    for (const Touch* t : kept) {
        count_references(g_.rules[t->rule].body, refs, -1);
        if (p.removed.count(t->rule)) {
            rules_dl -= rule_dl_[t->rule];
            continue;
        }
        count_references(t->body, refs);
        rules_dl = rules_dl - rule_dl_[t->rule] + term_dl(t->body);
        p.bodies[t->rule] = t->body;
    }
    for (std::size_t u : p.removed) {
        if (new_lang.count(u)) continue;
        count_references(g_.rules[u].body, refs, -1);
        rules_dl -= rule_dl_[u];
    }
    count_references(added, refs);
    // Nothing to simplify unless some def lost its references or is down
    // to one; the common case then avoids copying every definition.
    auto settled = [&](const ClassDef& d) { auto it = refs.find(d.name); return it != refs.end() && it->second > 1; };
    std::size_t defs_dl_after = defs_dl_ + term_dl(added);
    if (!settled(added) || !std::all_of(g_.defs.begin(), g_.defs.end(), settled)) {
        p.defs = g_.defs;
        p.defs->push_back(added);
        PlanRules store(*this, p.bodies, p.removed, rules_dl);
        simplify_defs(*p.defs, refs, store);
        defs_dl_after = defs_dl(*p.defs);
    } else {
        p.added = added;
    }

    p.grammar_dl = rules_dl + defs_dl_after;
    p.overgen = extras_.size() + new_extras.size();
    p.total = static_cast<long>(p.grammar_dl + cfg_.penalty * p.overgen);
    return p;
}

Evaluation Workspace::evaluate(const CandidateOp& op) const
{
    Evaluation e;
    auto p = plan(op, e.reason);
    if (!p) return e;
    e.accepted = true;
    e.delta = p->total - total();
    e.grammar_dl = p->grammar_dl;
    e.overgen_count = p->overgen;
    e.rules_after = g_.rules.size() - p->removed.size();
    e.substituted = std::move(p->substituted);
    return e;
}

Grammar Workspace::materialize(const CandidateOp& op) const
{
    std::string reason;
    auto p = plan(op, reason);
    if (!p) throw Error(op.describe() + " rejected: " + reason);
    Grammar out;
    if (p->defs) {
        out.defs = std::move(*p->defs);
    } else {
        out.defs = g_.defs;
        out.defs.push_back(*p->added);
    }
    for (std::size_t i = 0; i < g_.rules.size(); ++i) {
        if (p->removed.count(i)) continue;
        auto it = p->bodies.find(i);
        out.rules.push_back(Rule{it == p->bodies.end() ? g_.rules[i].body : std::move(it->second)});
    }
    return out;
}

std::vector<Evaluation> evaluate_serial(const Workspace& ws, const std::vector<CandidateOp>& ops)
{
    std::vector<Evaluation> out(ops.size());
    for (std::size_t i = 0; i < ops.size(); ++i) out[i] = ws.evaluate(ops[i]);
    return out;
}

std::vector<Evaluation> evaluate_parallel(const Workspace& ws, const std::vector<CandidateOp>& ops)
{
    std::vector<Evaluation> out(ops.size());
    std::exception_ptr failure;
    const long n = static_cast<long>(ops.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (long i = 0; i < n; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = ws.evaluate(ops[static_cast<std::size_t>(i)]);
        } catch (...) {
#pragma omp critical(mdlg_eval_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

std::vector<CandidateOp> all_candidates(const Grammar& g)
{
    auto ops = merge_candidates(g);
    auto cat = concat_candidates(g);
    ops.insert(ops.end(), cat.begin(), cat.end());
    return ops;
}

std::vector<ScoredCandidate> score(const Workspace& ws, const Grammar& g, const InductionConfig& config)
{
    const auto ops = all_candidates(g);
    const auto evals = config.kernel == Kernel::parallel ? evaluate_parallel(ws, ops) : evaluate_serial(ws, ops);
    std::vector<ScoredCandidate> out;
    out.reserve(ops.size());
    for (std::size_t i = 0; i < ops.size(); ++i) out.push_back({ops[i], evals[i]});
    return out;
}

} // namespace

std::vector<ClassOperand> candidate_classes(const Grammar& g)
{
    std::set<Symbol> words;
    for (const Rule& r : g.rules)
        for (const InlineClass& c : r.body)
            if (auto op = singleton_operand(c); op && !op->is_def) words.insert(op->name);
    std::vector<ClassOperand> out;
    for (Symbol w : words) out.push_back({w, false});
    for (const ClassDef& d : g.defs) out.push_back({d.name, true});
    return out;
}

std::vector<CandidateOp> merge_candidates(const Grammar& g)
{
    const auto classes = candidate_classes(g);
    std::vector<CandidateOp> out;
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = i + 1; j < classes.size(); ++j)
            out.push_back({CandidateOp::Kind::merge, classes[i], classes[j], i, j});
    return out;
}

std::vector<CandidateOp> concat_candidates(const Grammar& g)
{
    const auto classes = candidate_classes(g);
    std::unordered_map<Symbol, std::size_t, SymbolHash> index;
    for (std::size_t i = 0; i < classes.size(); ++i) index[classes[i].name] = i;
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (const Rule& r : g.rules) {
        for (std::size_t p = 0; p + 1 < r.body.size(); ++p) {
            auto x = singleton_operand(r.body[p]);
            auto y = singleton_operand(r.body[p + 1]);
            if (x && y) pairs.emplace(index.at(x->name), index.at(y->name));
        }
    }
    std::vector<CandidateOp> out;
    for (auto [i, j] : pairs) out.push_back({CandidateOp::Kind::concat, classes[i], classes[j], i, j});
    return out;
}

Evaluation evaluate(const Grammar& g, const CandidateOp& op, const Corpus& corpus, const InductionConfig& config)
{
    return Workspace(g, corpus, config).evaluate(op);
}

Grammar apply_op(const Grammar& g, const CandidateOp& op, const Corpus& corpus, const InductionConfig& config)
{
    Grammar out = Workspace(g, corpus, config).materialize(op);
    return canonicalize(out, {false, config.limit});
}

Grammar apply_naive(const Grammar& g, const CandidateOp& op, const std::vector<std::size_t>& rules)
{
    Grammar out = g;
    const Symbol name = fresh_class_name(g);
    for (std::size_t i : rules) {
        Sequence& body = out.rules.at(i).body;
        if (op.kind == CandidateOp::Kind::merge) {
            bool changed = false;
            body = substitute_merge(body, op.a, op.b, name, changed);
        } else {
            auto s = substitute_concat(body, op.a, op.b, name);
            if (!s) throw Error(op.describe() + " does not apply to rule " + std::to_string(i + 1));
            body = std::move(*s);
        }
    }
    out.defs.push_back(op.kind == CandidateOp::Kind::merge ? merge_def(name, op) : concat_def(name, op));
    return canonicalize(out);
}

std::vector<ScoredCandidate> evaluate_all(const Grammar& g, const Corpus& corpus, const InductionConfig& config)
{
    Workspace ws(g, corpus, config);
    return score(ws, g, config);
}

std::optional<ScoredCandidate> best_candidate(const std::vector<ScoredCandidate>& scored)
{
    const ScoredCandidate* best = nullptr;
    for (const ScoredCandidate& c : scored) {
        if (!c.eval.accepted || c.eval.delta >= 0) continue;
        if (!best || c.eval.delta < best->eval.delta
            || (c.eval.delta == best->eval.delta && tie_break_less(c.op, best->op)))
            best = &c;
    }
    if (!best) return std::nullopt;
    return *best;
}

InductionResult induce(const Corpus& corpus, const InductionConfig& config)
{
    InductionResult res;
    Grammar g = canonicalize(initial_grammar(corpus), {false, config.limit});
    for (std::size_t iteration = 1;; ++iteration) {
        Workspace ws(g, corpus, config);
        auto best = best_candidate(score(ws, g, config));
        if (!best) break;
        Grammar next = canonicalize(ws.materialize(best->op), {false, config.limit});
        if (grammar_dl(next) != best->eval.grammar_dl)
            throw Error("internal: evaluated and applied grammar differ after " + best->op.describe());
        TraceRecord rec;
        rec.iteration = iteration;
        rec.op = best->op;
        rec.dl_before = ws.total();
        rec.delta = best->eval.delta;
        rec.dl_after = rec.dl_before + rec.delta;
        rec.overgen_count = best->eval.overgen_count;
        rec.rules_before = g.rules.size();
        rec.rules_after = next.rules.size();
        res.trace.push_back(rec);
        g = std::move(next);
    }
    res.grammar = config.rename ? rename_classes(g) : g;
    res.report = total_dl(res.grammar, corpus, config.penalty, config.limit);
    return res;
}

} // namespace mdlg
