#include <mdlg/dl.hpp>

namespace mdlg {

std::size_t term_dl(const Term& t) { return t.symbols.size(); }

std::size_t term_dl(const InlineClass& c)
{
    std::size_t n = 2 + (c.alternatives.empty() ? 0 : c.alternatives.size() - 1);
    for (const Term& t : c.alternatives) n += term_dl(t);
    return n;
}

std::size_t term_dl(const Sequence& s)
{
    std::size_t n = 0;
    for (const InlineClass& c : s) n += term_dl(c);
    return n;
}

std::size_t term_dl(const ClassDef& d)
{
    // name and '='
    std::size_t n = 2;
    if (const auto* a = d.alternatives()) return n + term_dl(a->cls);
    if (const auto* c = d.concatenation()) return n + term_dl(c->parts);
    return n + 1;
}

std::size_t term_dl(const Rule& r) { return term_dl(r.body); }

std::size_t defs_dl(std::span<const ClassDef> defs)
{
    std::size_t n = 0;
    for (const ClassDef& d : defs) n += term_dl(d);
    return n;
}

std::size_t grammar_dl(const Grammar& g)
{
    require_valid(g);
    std::size_t n = defs_dl(g.defs);
    for (const Rule& r : g.rules) n += term_dl(r);
    return n;
}

std::size_t tuple_dl(const Tuple& t)
{
    if (t.is_atom()) return 1;
    const auto& items = t.items();
    std::size_t n = 2 + (items.empty() ? 0 : items.size() - 1);
    for (const Tuple& i : items) n += tuple_dl(i);
    return n;
}

std::size_t table_dl(std::span<const Tuple> table)
{
    std::size_t n = 0;
    for (const Tuple& t : table) n += tuple_dl(t);
    return n;
}

DLReport total_dl(const Grammar& g, const Corpus& c, std::size_t penalty, std::size_t limit)
{
    DLReport rep;
    rep.grammar_dl = grammar_dl(g);
    rep.penalty = penalty;
    const CoverageReport cov = coverage(g, c, limit);
    if (!cov.missing.empty()) {
        std::vector<std::string> missing;
        for (const Sentence& s : cov.missing) missing.push_back(to_string(s));
        const std::string what =
            "grammar does not generate " + std::to_string(missing.size()) + " corpus sentence(s)";
        throw CoverageError(what, std::move(missing));
    }
    rep.overgen_count = cov.extra.size();
    rep.total = rep.grammar_dl + penalty * rep.overgen_count;
    return rep;
}

} // namespace mdlg
