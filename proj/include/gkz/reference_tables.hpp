#pragma once

// The published values of the three beta tables, keyed by isogeny-class label.
//   table 1: (label, a_E(2), beta_{-N})   N = 3 (mod 4), a_E(2) even
//   table 2: (label, a_E(2), beta_{-N})   N = 3 (mod 4), a_E(2) odd
//   table 3: (label, beta_{-4}, beta_{-4N}) N = 1 (mod 4)

#include <optional>
#include <span>
#include <string_view>

namespace gkz {

struct ReferenceRow {
    std::string_view label;
    int first;
    int second;
};

std::span<const ReferenceRow> reference_table(int which);
std::optional<ReferenceRow> find_reference(int which, std::string_view label);

}  // namespace gkz
