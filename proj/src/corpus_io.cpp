#include <mdlg/corpus_io.hpp>
#include <mdlg/dl.hpp>

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace mdlg {
namespace {

struct Token {
    std::string text;
    std::size_t column; // 1-based
};

bool special(char c) { return c == '{' || c == '}' || c == '|' || c == '='; }
bool space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

// Whitespace splitting; with `grammar` set, `{ } | =` are tokens on their own.
std::vector<Token> tokenize(std::string_view line, bool grammar)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (space(line[i])) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (grammar && special(line[i])) {
            ++i;
        } else {
            while (i < line.size() && !space(line[i]) && !(grammar && special(line[i]))) ++i;
        }
        out.push_back({std::string(line.substr(start, i - start)), start + 1});
    }
    return out;
}

template <class F>
void for_each_line(std::string_view text, F f)
{
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        std::size_t first = 0;
        while (first < line.size() && space(line[first])) ++first;
        if (first == line.size() || line[first] == '#') continue;
        f(line, line_no);
    }
}

std::optional<std::size_t> parse_count(const std::string& s)
{
    std::size_t n = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
    if (ec != std::errc{} || p != s.data() + s.size() || n == 0) return std::nullopt;
    return n;
}

} // namespace

Corpus parse_corpus(std::string_view text)
{
    Corpus c;
    for_each_line(text, [&](std::string_view line, std::size_t line_no) {
        auto toks = tokenize(line, false);
        std::size_t count = 1;
        if (toks.size() >= 2 && toks[toks.size() - 2].text == "=") {
            auto n = parse_count(toks.back().text);
            if (!n) throw ParseError("multiplicity must be a positive integer", line_no, toks.back().column);
            count = *n;
            toks.resize(toks.size() - 2);
        }
        std::vector<Sentence> sentences(1);
        for (const Token& t : toks) {
            if (t.text == "+") {
                if (!sentences.back().empty()) sentences.emplace_back();
                continue;
            }
            if (!is_valid_symbol_text(t.text))
                throw ParseError("reserved character in symbol '" + t.text + "'", line_no, t.column);
            sentences.back().emplace_back(t.text);
        }
        for (Sentence& s : sentences)
            if (!s.empty()) c.add(std::move(s), count);
    });
    return c;
}

std::string serialize_corpus(const Corpus& c)
{
    std::string out;
    for (const auto& [s, n] : c.counts()) {
        out += to_string(s);
        if (n > 1) out += " = " + std::to_string(n);
        out += '\n';
    }
    return out;
}

namespace {

class GrammarParser {
public:
    GrammarParser(std::vector<Token> toks, std::size_t line, const std::unordered_set<std::string>& names)
        : toks_(std::move(toks)), line_(line), names_(names) { }

    Sequence groups()
    {
        Sequence out;
        while (pos_ < toks_.size()) out.push_back(group());
        return out;
    }

    ClassDef def()
    {
        ClassDef d;
        d.name = Symbol(toks_[0].text);
        pos_ = 2;
        if (pos_ == toks_.size()) fail("missing definition body");
        if (toks_[pos_].text != "{") {
            d.body = Rename{symbol(toks_[pos_])};
            if (++pos_ != toks_.size()) fail("unexpected token after renamed class");
            return d;
        }
        Sequence parts = groups();
        if (parts.size() == 1) {
            d.body = Alternatives{std::move(parts.front())};
        } else {
            d.body = Concatenation{std::move(parts)};
        }
        return d;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const
    {
        const std::size_t col = pos_ < toks_.size() ? toks_[pos_].column : 0;
        throw ParseError(msg, line_, col);
    }

    Symbol symbol(const Token& t) const
    {
        if (!is_valid_symbol_text(t.text)) throw ParseError("unexpected '" + t.text + "'", line_, t.column);
        return Symbol(t.text);
    }

    InlineClass group()
    {
        if (toks_[pos_].text != "{") fail("expected '{'");
        ++pos_;
        InlineClass c;
        for (;;) {
            Term t;
            while (pos_ < toks_.size() && !special(toks_[pos_].text[0])) t.symbols.push_back(symbol(toks_[pos_++]));
            if (pos_ == toks_.size()) fail("unbalanced '{'");
            if (t.symbols.empty()) fail("empty alternative");
            if (t.symbols.size() == 1 && names_.count(t.symbols.front().text())) t.kind = Term::Kind::class_ref;
            c.alternatives.push_back(std::move(t));
            const std::string& sep = toks_[pos_].text;
            ++pos_;
            if (sep == "}") return c;
            if (sep != "|") {
                --pos_;
                fail("unexpected '" + sep + "' inside braces");
            }
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::size_t line_;
    const std::unordered_set<std::string>& names_;
};

} // namespace

Grammar parse_grammar(std::string_view text)
{
    std::vector<std::pair<std::vector<Token>, std::size_t>> lines;
    std::unordered_set<std::string> names;
    for_each_line(text, [&](std::string_view line, std::size_t line_no) {
        auto toks = tokenize(line, true);
        const bool is_def = toks.size() >= 2 && toks[1].text == "=";
        if (is_def) {
            if (!is_valid_symbol_text(toks[0].text))
                throw ParseError("bad class name '" + toks[0].text + "'", line_no, toks[0].column);
            names.insert(toks[0].text);
        } else if (toks.front().text != "{") {
            throw ParseError("expected '{' or a definition", line_no, toks.front().column);
        }
        lines.emplace_back(std::move(toks), line_no);
    });
    Grammar g;
    for (auto& [toks, line_no] : lines) {
        const bool is_def = toks.size() >= 2 && toks[1].text == "=";
        GrammarParser p(std::move(toks), line_no, names);
        if (is_def) {
            g.defs.push_back(p.def());
        } else {
            g.rules.push_back(Rule{p.groups()});
        }
    }
    require_valid(g);
    return g;
}

namespace {

void write_class(std::string& out, const InlineClass& c)
{
    out += '{';
    for (std::size_t i = 0; i < c.alternatives.size(); ++i) {
        out += i ? " | " : " ";
        out += to_string(c.alternatives[i].symbols);
    }
    out += " }";
}

void write_sequence(std::string& out, const Sequence& seq)
{
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i) out += ' ';
        write_class(out, seq[i]);
    }
}

} // namespace

std::string serialize_sequence(const Sequence& seq)
{
    std::string out;
    write_sequence(out, seq);
    return out;
}

std::string serialize_grammar(const Grammar& g)
{
    std::string out;
    for (const ClassDef& d : g.defs) {
        out += d.name.text() + " = ";
        if (const auto* a = d.alternatives()) write_class(out, a->cls);
        if (const auto* c = d.concatenation()) write_sequence(out, c->parts);
        if (const auto* r = d.rename()) out += r->target.text();
        out += '\n';
    }
    for (const Rule& r : g.rules) {
        write_sequence(out, r.body);
        out += '\n';
    }
    return out;
}

std::size_t count_grammar_tokens(std::string_view text)
{
    std::size_t n = 0;
    for_each_line(text, [&](std::string_view line, std::size_t) { n += tokenize(line, true).size(); });
    return n;
}

std::string trace_header()
{
    return "# iteration\top\ta\tb\tdl_before\tdl_after\tdelta\tovergen\trules_before\trules_after\n";
}

std::string serialize_trace(const InductionTrace& trace)
{
    std::ostringstream out;
    out << trace_header();
    for (const TraceRecord& r : trace) {
        out << r.iteration << '\t' << (r.op.kind == CandidateOp::Kind::merge ? "merge" : "concat") << '\t'
            << r.op.a.name.text() << '\t' << r.op.b.name.text() << '\t' << r.dl_before << '\t' << r.dl_after
            << '\t' << r.delta << '\t' << r.overgen_count << '\t' << r.rules_before << '\t' << r.rules_after
            << '\n';
    }
    return out.str();
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("cannot read '" + path + "'");
    return buf.str();
}

void write_file(const std::string& path, std::string_view text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw IoError("cannot write '" + path + "'");
}

} // namespace mdlg
