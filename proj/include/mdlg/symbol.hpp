#pragma once

#include <compare>
#include <cstdint>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace mdlg {

// An atomic token. Interned process-wide: equality and hashing are by
// identity, ordering is by text so that sorted output never depends on the
// order in which symbols were first seen.
class Symbol {
public:
    Symbol() = default;
    explicit Symbol(std::string_view text);

    const std::string& text() const { return *text_; }
    bool valid() const { return text_ != nullptr; }
    const void* key() const { return text_; }

    friend bool operator==(Symbol a, Symbol b) { return a.text_ == b.text_; }
    friend std::strong_ordering operator<=>(Symbol a, Symbol b)
    {
        if (a.text_ == b.text_) return std::strong_ordering::equal;
        return a.text() <=> b.text();
    }

private:
    const std::string* text_ = nullptr;
};

using Sentence = std::vector<Symbol>;

// True when `text` can be used as a symbol: non-empty, no whitespace, none
// of the reserved grammar characters `{ } | = #`.
bool is_valid_symbol_text(std::string_view text);

std::string to_string(const Sentence& s);
Sentence sentence_from_words(std::string_view text);

struct SymbolHash {
    std::size_t operator()(Symbol s) const noexcept { return std::hash<const void*>{}(s.key()); }
};

struct SentenceHash {
    std::size_t operator()(const Sentence& s) const noexcept
    {
        std::size_t h = 0xcbf29ce484222325ull;
        for (Symbol sym : s) {
            h ^= reinterpret_cast<std::uintptr_t>(sym.key());
            h *= 0x100000001b3ull;
        }
        return h;
    }
};

// Identity order; fast, stable within a process, used for set algebra only.
struct SentenceIdLess {
    bool operator()(const Sentence& a, const Sentence& b) const noexcept
    {
        const std::size_t n = a.size() < b.size() ? a.size() : b.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i].key() != b[i].key()) return std::less<const void*>{}(a[i].key(), b[i].key());
        }
        return a.size() < b.size();
    }
};

} // namespace mdlg
