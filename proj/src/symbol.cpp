#include <mdlg/symbol.hpp>

#include <mutex>
#include <sstream>
#include <unordered_set>

namespace mdlg {
namespace {

struct Interner {
    std::mutex mutex;
    std::unordered_set<std::string> strings; // node-based: addresses are stable
};

Interner& interner()
{
    static Interner instance;
    return instance;
}

} // namespace

Symbol::Symbol(std::string_view text)
{
    auto& in = interner();
    std::lock_guard lock(in.mutex);
    text_ = &*in.strings.emplace(text).first;
}

bool is_valid_symbol_text(std::string_view text)
{
    if (text.empty()) return false;
    for (char c : text) {
        switch (c) {
        case '{': case '}': case '|': case '=': case '#':
        case ' ': case '\t': case '\n': case '\r': case '\v': case '\f':
            return false;
        default:
            break;
        }
    }
    return true;
}

std::string to_string(const Sentence& s)
{
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ' ';
        out += s[i].text();
    }
    return out;
}

Sentence sentence_from_words(std::string_view text)
{
    Sentence out;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) out.emplace_back(tok);
    return out;
}

} // namespace mdlg
