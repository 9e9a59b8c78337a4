#include "gkz/forms.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "gkz/arith.hpp"

namespace gkz {

std::string QuadForm::str() const {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

QuadForm reduce(const QuadForm& f) {
    const std::int64_t d = f.discriminant();
    if (d >= 0 || f.a <= 0) throw std::invalid_argument("reduce: form " + f.str() + " is not positive definite");
    if (std::gcd(std::gcd(f.a, f.b), f.c) != 1)
        throw std::invalid_argument("reduce: form " + f.str() + " is not primitive");
    std::int64_t a = f.a, b = f.b, c = f.c;
    for (;;) {
        if (b <= -a || b > a) {
            const std::int64_t k = (a - b) >= 0 ? (a - b) / (2 * a) : -((b - a + 2 * a - 1) / (2 * a));
            b += 2 * k * a;
            c = (b * b - d) / (4 * a);
        }
        if (a > c) {
            std::swap(a, c);
            b = -b;
            continue;
        }
        if (a == c && b < 0) b = -b;
        return {a, b, c};
    }
}

std::vector<QuadForm> class_representatives(std::int64_t d) {
    if (!is_discriminant(d))
        throw std::invalid_argument("class_representatives: " + std::to_string(d) +
                                    " is not a negative discriminant");
    std::vector<QuadForm> out;
    for (std::int64_t a = 1; 3 * a * a <= -d; ++a) {
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            if (mod(b - d, 2) != 0) continue;
            const std::int64_t num = b * b - d;
            if (num % (4 * a) != 0) continue;
            const std::int64_t c = num / (4 * a);
            if (c < a || (c == a && b < 0)) continue;
            if (std::gcd(std::gcd(a, b), c) != 1) continue;
            out.push_back({a, b, c});
        }
    }
    return out;
}

HeegnerSystem heegner_forms(std::int64_t d, std::int64_t r, std::int64_t n, SearchOrder order) {
    if (!is_discriminant(d))
        throw std::invalid_argument("heegner_forms: " + std::to_string(d) + " is not a discriminant");
    if (mod(r * r - d, 4 * n) != 0)
        throw std::invalid_argument("heegner_forms: r^2 != D (mod 4N) for D = " + std::to_string(d) +
                                    ", r = " + std::to_string(r));
    if (order_conductor(d) % n == 0)
        throw std::invalid_argument("heegner_forms: order conductor shares a factor with N");

    const auto reps = class_representatives(d);
    std::map<QuadForm, std::size_t> index;
    for (std::size_t i = 0; i < reps.size(); ++i) index.emplace(reps[i], i);

    HeegnerSystem sys{n, d, mod(r, 2 * n), std::vector<QuadForm>(reps.size()), u_weight(d, n)};
    std::vector<bool> found(reps.size(), false);
    std::size_t remaining = reps.size();

    double bound = 64.0 * static_cast<double>(n) * std::sqrt(static_cast<double>(-d));
    int doublings = 0;
    const std::int64_t two_n = 2 * n;
    for (std::int64_t k = 1; remaining > 0; ++k) {
        const std::int64_t a = k * n;
        while (static_cast<double>(a) > bound) {
            if (++doublings > 16)
                throw std::runtime_error("heegner_forms: search bound exhausted for D = " +
                                         std::to_string(d));
            bound *= 2;
        }
        // b = r (mod 2N) in (-a, a]; there are exactly k such values.
        std::int64_t lo = sys.r - two_n * ((sys.r + a) / two_n);
        while (lo <= -a) lo += two_n;
        std::vector<std::int64_t> bs;
        for (std::int64_t b = lo; b <= a; b += two_n) bs.push_back(b);
        if (order == SearchOrder::descending) std::reverse(bs.begin(), bs.end());
        for (std::int64_t b : bs) {
            const std::int64_t num = b * b - d;
            if (num % (4 * a) != 0) continue;
            const QuadForm f{a, b, num / (4 * a)};
            if (std::gcd(std::gcd(f.a, f.b), f.c) != 1) continue;
            const std::size_t i = index.at(reduce(f));
            if (found[i]) continue;
            found[i] = true;
            sys.forms[i] = f;
            --remaining;
        }
    }
    return sys;
}

mp::Complex tau(const QuadForm& f, mp::Bits bits) {
    const mp::Real two_a(static_cast<long>(2 * f.a), bits);
    return {mp::Real(static_cast<long>(-f.b), bits) / two_a,
            mp::sqrt(mp::Real(static_cast<long>(-f.discriminant()), bits)) / two_a};
}

int u_weight(std::int64_t d, std::int64_t n) {
    if (d == -3) return 3;
    if (d == -4) return 2;
    if (d % n == 0) return 2;
    return 1;
}

}  // namespace gkz
