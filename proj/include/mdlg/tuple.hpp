#pragma once

#include <mdlg/symbol.hpp>

#include <initializer_list>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace mdlg {

// Bracketed tuple of symbols, e.g. `[v_1,[verb,v_1]]`.
struct Tuple {
    std::variant<Symbol, std::vector<Tuple>> value;

    Tuple() : value(std::vector<Tuple>{}) { }
    Tuple(Symbol s) : value(s) { }
    Tuple(std::vector<Tuple> items) : value(std::move(items)) { }
    static Tuple atom(std::string_view text) { return Tuple(Symbol(text)); }
    static Tuple list(std::initializer_list<Tuple> items) { return Tuple(std::vector<Tuple>(items)); }

    bool is_atom() const { return std::holds_alternative<Symbol>(value); }
    Symbol symbol() const { return std::get<Symbol>(value); }
    const std::vector<Tuple>& items() const { return std::get<std::vector<Tuple>>(value); }

    friend bool operator==(const Tuple&, const Tuple&) = default;
};

std::string to_string(const Tuple& t);
// Parses `[a,[b,c]]`; whitespace is ignored. Throws ParseError.
Tuple parse_tuple(std::string_view text);

} // namespace mdlg
