#include <mdlg/errors.hpp>
#include <mdlg/tuple.hpp>

#include <cctype>

namespace mdlg {

std::string to_string(const Tuple& t)
{
    if (t.is_atom()) return t.symbol().text();
    std::string out = "[";
    const auto& items = t.items();
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += ',';
        out += to_string(items[i]);
    }
    out += ']';
    return out;
}

namespace {

struct TupleParser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws()
    {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, 1, pos + 1); }

    Tuple parse()
    {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of tuple");
        if (text[pos] == '[') {
            ++pos;
            std::vector<Tuple> items;
            skip_ws();
            if (pos < text.size() && text[pos] == ']') {
                ++pos;
                return Tuple(std::move(items));
            }
            for (;;) {
                items.push_back(parse());
                skip_ws();
                if (pos >= text.size()) fail("unterminated tuple");
                if (text[pos] == ',') { ++pos; continue; }
                if (text[pos] == ']') { ++pos; break; }
                fail("expected ',' or ']'");
            }
            return Tuple(std::move(items));
        }
        const std::size_t start = pos;
        while (pos < text.size() && text[pos] != ',' && text[pos] != '[' && text[pos] != ']'
               && !std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
        if (start == pos) fail("empty atom");
        return Tuple(Symbol(text.substr(start, pos - start)));
    }
};

} // namespace

Tuple parse_tuple(std::string_view text)
{
    TupleParser p{text};
    Tuple t = p.parse();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing characters after tuple");
    return t;
}

} // namespace mdlg
