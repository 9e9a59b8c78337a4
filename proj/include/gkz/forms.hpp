#pragma once

// Positive definite binary quadratic forms, class representatives of
// imaginary quadratic orders, and the Heegner forms of level N.

#include <cstdint>
#include <string>
#include <vector>

#include "gkz/mp.hpp"

namespace gkz {

/// a x^2 + b xy + c y^2.
struct QuadForm {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;

    std::int64_t discriminant() const { return b * b - 4 * a * c; }
    bool operator==(const QuadForm&) const = default;
    auto operator<=>(const QuadForm&) const = default;
    std::string str() const;
};

/// The unique reduced form equivalent to f: |b| <= a <= c and b >= 0 when
/// |b| == a or a == c. Throws std::invalid_argument for non-primitive or
/// indefinite input.
QuadForm reduce(const QuadForm& f);

/// Reduced primitive forms of discriminant d, ascending by (a, b).
std::vector<QuadForm> class_representatives(std::int64_t d);

/// One Heegner form per class of Pic(O_D): N | a, b = r (mod 2N),
/// b^2 - 4ac = D. forms[i] is equivalent to class_representatives(D)[i].
struct HeegnerSystem {
    std::int64_t level = 0;
    std::int64_t disc = 0;
    std::int64_t r = 0;
    std::vector<QuadForm> forms;
    int u = 1;
};

enum class SearchOrder { ascending, descending };

/// Searches forms (kN, b, c) by increasing k, keeping the first hit per
/// class. With SearchOrder::descending the b-values for each k are scanned
/// from the top, which can select different representatives.
HeegnerSystem heegner_forms(std::int64_t d, std::int64_t r, std::int64_t n,
                            SearchOrder order = SearchOrder::ascending);

/// Root of f in the upper half plane: (-b + i sqrt|D|) / (2a).
mp::Complex tau(const QuadForm& f, mp::Bits bits);

/// 3 for D = -3, 2 for D = -4, 2 when N | D, else 1.
int u_weight(std::int64_t d, std::int64_t n);

}  // namespace gkz
