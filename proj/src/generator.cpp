#include <mdlg/generator.hpp>

#include <algorithm>
#include <unordered_set>

namespace mdlg {

void Expander::push_term(const Term& t)
{
    if (t.is_ref()) {
        pending_.push_back({Item::Kind::class_name, nullptr, t.head()});
        return;
    }
    for (auto it = t.symbols.rbegin(); it != t.symbols.rend(); ++it) {
        pending_.push_back({Item::Kind::terminal, nullptr, *it});
    }
}

void Expander::push_sequence(const Sequence& seq)
{
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
        pending_.push_back({Item::Kind::inline_class, &*it, Symbol{}});
    }
}

void Expander::emit()
{
    if (target_) {
        if (out_.size() == target_->size()) found_ = true;
        return;
    }
    if (!(*visit_)(out_)) stopped_ = found_ = true;
}

void Expander::step()
{
    if (found_) return;
    if (pending_.empty()) {
        emit();
        return;
    }
    const Item item = pending_.back();
    pending_.pop_back();
    const std::size_t mark = pending_.size();

    switch (item.kind) {
    case Item::Kind::terminal:
        if (target_ && (out_.size() >= target_->size() || (*target_)[out_.size()] != item.sym)) break;
        out_.push_back(item.sym);
        step();
        out_.pop_back();
        break;

    case Item::Kind::inline_class:
        for (const Term& t : item.cls->alternatives) {
            push_term(t);
            step();
            pending_.resize(mark);
            if (found_) break;
        }
        break;

    case Item::Kind::class_name: {
        const Symbol key = item.sym;
        const ClassDef* d = defs_.find(key);
        while (d && d->rename()) d = defs_.find(d->rename()->target);
        if (!d) break;
        if (const auto* cat = d->concatenation()) {
            push_sequence(cat->parts);
            step();
            pending_.resize(mark);
            break;
        }
        const auto& alts = d->alternatives()->cls.alternatives;
        auto bound = std::find_if(bindings_.begin(), bindings_.end(),
                                  [&](const auto& b) { return b.first == key; });
        if (bound != bindings_.end()) {
            push_term(alts[bound->second]);
            step();
            pending_.resize(mark);
            break;
        }
        bindings_.emplace_back(key, 0);
        for (std::size_t i = 0; i < alts.size() && !found_; ++i) {
            bindings_.back().second = i;
            push_term(alts[i]);
            step();
            pending_.resize(mark);
        }
        bindings_.pop_back();
        break;
    }
    }
    pending_.push_back(item);
}

void Expander::run(const Sequence& body)
{
    pending_.clear();
    out_.clear();
    bindings_.clear();
    found_ = false;
    push_sequence(body);
    step();
}

bool Expander::for_each(const Sequence& body, const std::function<bool(const Sentence&)>& f)
{
    target_ = nullptr;
    visit_ = &f;
    stopped_ = false;
    run(body);
    visit_ = nullptr;
    return !stopped_;
}

std::vector<Sentence> Expander::expand(const Sequence& body)
{
    std::vector<Sentence> out;
    std::size_t check_at = limit_;
    auto dedup = [&] {
        std::sort(out.begin(), out.end(), SentenceIdLess{});
        out.erase(std::unique(out.begin(), out.end()), out.end());
    };
    for_each(body, [&](const Sentence& s) {
        out.push_back(s);
        if (out.size() > check_at) {
            dedup();
            if (out.size() > limit_) throw LimitExceeded(limit_, out.size());
            check_at = std::max(limit_, 2 * out.size());
        }
        return true;
    });
    dedup();
    return out;
}

bool Expander::matches(const Sequence& body, const Sentence& target)
{
    target_ = &target;
    run(body);
    target_ = nullptr;
    return found_;
}

std::vector<Sentence> rule_language(const DefIndex& defs, const Rule& r, std::size_t limit)
{
    return Expander(defs, limit).expand(r.body);
}

Language enumerate_language(const Grammar& g, std::size_t limit)
{
    require_valid(g);
    DefIndex defs(g);
    std::unordered_set<Sentence, SentenceHash> all;
    for (const Rule& r : g.rules) {
        Expander ex(defs, limit);
        for (auto& s : ex.expand(r.body)) {
            all.insert(std::move(s));
            if (all.size() > limit) throw LimitExceeded(limit, all.size());
        }
    }
    return Language(all.begin(), all.end());
}

bool derives(const Grammar& g, const Sentence& s)
{
    require_valid(g);
    DefIndex defs(g);
    Expander ex(defs);
    return std::any_of(g.rules.begin(), g.rules.end(),
                       [&](const Rule& r) { return ex.matches(r.body, s); });
}

CoverageReport coverage(const Grammar& g, const Corpus& c, std::size_t limit)
{
    const Language lang = enumerate_language(g, limit);
    CoverageReport rep;
    for (const auto& [s, n] : c.counts()) {
        (lang.count(s) ? rep.covered : rep.missing).push_back(s);
    }
    for (const Sentence& s : lang) {
        if (!c.contains(s)) rep.extra.push_back(s);
    }
    return rep;
}

} // namespace mdlg
