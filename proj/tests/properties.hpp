#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mdlg::testing {

inline constexpr std::uint32_t property_corpora = 100;

// Every property of the induction pipeline on random_corpus(seed); returns
// one message per violation.
std::vector<std::string> check_properties(std::uint32_t seed);

} // namespace mdlg::testing
