#include "gkz/arith.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gkz {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod_u(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod_u(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod_u(r, b, m);
        b = mulmod_u(b, b, m);
        e >>= 1;
    }
    return r;
}

bool is_squarefree(std::int64_t n) {
    for (const auto& [p, k] : factorize(n).factors)
        if (k > 1) return false;
    return true;
}

}  // namespace

std::int64_t mod(std::int64_t a, std::int64_t m) {
    if (m < 0) m = -m;
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t powmod(std::int64_t base, std::int64_t e, std::int64_t m) {
    if (e < 0) throw std::invalid_argument("powmod: negative exponent");
    return static_cast<std::int64_t>(
        powmod_u(static_cast<std::uint64_t>(mod(base, m)), static_cast<std::uint64_t>(e),
                 static_cast<std::uint64_t>(m < 0 ? -m : m)));
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    const auto un = static_cast<std::uint64_t>(n);
    std::uint64_t d = un - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These bases are sufficient for n < 3.3 * 10^24.
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = powmod_u(a, d, un);
        if (x == 1 || x == un - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u(x, x, un);
            if (x == un - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Factorization factorize(std::int64_t n) {
    if (n == 0) throw std::invalid_argument("factorize: zero has no factorization");
    Factorization f;
    f.value = n;
    std::int64_t m = n < 0 ? -n : n;
    for (std::int64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p) continue;
        int k = 0;
        while (m % p == 0) {
            m /= p;
            ++k;
        }
        f.factors.emplace_back(p, k);
    }
    if (m > 1) f.factors.emplace_back(m, 1);
    return f;
}

int kronecker(std::int64_t a, std::int64_t n) {
    if (n == 0) throw std::invalid_argument("kronecker: n must be nonzero");
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    while (n % 2 == 0) {
        n /= 2;
        if (a % 2 == 0) return 0;
        const std::int64_t r8 = mod(a, 8);
        if (r8 == 3 || r8 == 5) result = -result;
    }
    // Jacobi symbol (a/n) for odd positive n.
    std::int64_t x = mod(a, n);
    while (x != 0) {
        while (x % 2 == 0) {
            x /= 2;
            const std::int64_t r8 = n % 8;
            if (r8 == 3 || r8 == 5) result = -result;
        }
        std::swap(x, n);
        if (x % 4 == 3 && n % 4 == 3) result = -result;
        x %= n;
    }
    return n == 1 ? result : 0;
}

std::optional<std::int64_t> sqrt_mod_prime(std::int64_t a, std::int64_t p) {
    if (p <= 2 || !is_prime(p))
        throw std::invalid_argument("sqrt_mod_prime: modulus " + std::to_string(p) +
                                    " is not an odd prime");
    a = mod(a, p);
    if (a == 0) return 0;
    if (powmod(a, (p - 1) / 2, p) != 1) return std::nullopt;

    std::int64_t q = p - 1;
    int s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    std::int64_t z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;

    auto mul = [p](std::int64_t x, std::int64_t y) {
        return static_cast<std::int64_t>(mulmod_u(static_cast<std::uint64_t>(x),
                                                  static_cast<std::uint64_t>(y),
                                                  static_cast<std::uint64_t>(p)));
    };
    std::int64_t m = s;
    std::int64_t c = powmod(z, q, p);
    std::int64_t t = powmod(a, q, p);
    std::int64_t r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        std::int64_t i = 0;
        std::int64_t t2 = t;
        while (t2 != 1) {
            t2 = mul(t2, t2);
            ++i;
        }
        std::int64_t b = c;
        for (std::int64_t j = 0; j < m - i - 1; ++j) b = mul(b, b);
        m = i;
        c = mul(b, b);
        t = mul(t, c);
        r = mul(r, b);
    }
    return std::min(r, p - r);
}

bool is_discriminant(std::int64_t d) {
    const std::int64_t r = mod(d, 4);
    return d < 0 && (r == 0 || r == 1);
}

bool is_fundamental(std::int64_t d) {
    if (d == 0 || d == 1) return false;
    const std::int64_t r = mod(d, 4);
    if (r == 1) return is_squarefree(d);
    if (r != 0) return false;
    const std::int64_t m = d / 4;
    const std::int64_t rm = mod(m, 4);
    return (rm == 2 || rm == 3) && is_squarefree(m);
}

std::int64_t order_conductor(std::int64_t d) {
    if (!is_discriminant(d))
        throw std::invalid_argument("order_conductor: " + std::to_string(d) +
                                    " is not a negative discriminant");
    const auto es = square_divisors(d);
    for (auto it = es.rbegin(); it != es.rend(); ++it) {
        const std::int64_t k = d / (*it * *it);
        if (is_discriminant(k) && is_fundamental(k)) return *it;
    }
    throw std::logic_error("order_conductor: no fundamental part found");
}

std::optional<std::int64_t> heegner_r(std::int64_t d, std::int64_t n) {
    if (!is_discriminant(d))
        throw std::invalid_argument("heegner_r: " + std::to_string(d) +
                                    " is not a negative discriminant");
    if (n <= 2 || !is_prime(n))
        throw std::invalid_argument("heegner_r: level must be an odd prime");
    if (order_conductor(d) % n == 0) return std::nullopt;
    const auto s = sqrt_mod_prime(d, n);
    if (!s) return std::nullopt;

    const std::int64_t four_n = 4 * n;
    std::optional<std::int64_t> best;
    // CRT over the residues mod 4 and the two roots mod N.
    for (std::int64_t r4 = 0; r4 < 4; ++r4) {
        if (mod(r4 * r4 - d, 4) != 0) continue;
        for (std::int64_t rn : {*s, mod(-*s, n)}) {
            // r = r4 (mod 4), r = rn (mod N)
            std::int64_t r = rn;
            while (mod(r, 4) != r4) r += n;
            r = mod(r, four_n);
            if (mod(r * r - d, four_n) != 0) continue;
            r = mod(r, 2 * n);
            if (!best || r < *best) best = r;
        }
    }
    return best;
}

std::vector<std::int64_t> square_divisors(std::int64_t d) {
    if (d == 0) throw std::invalid_argument("square_divisors: zero");
    std::vector<std::int64_t> out{1};
    for (const auto& [p, k] : factorize(d).factors) {
        const std::size_t base = out.size();
        std::int64_t pe = 1;
        for (int j = 1; j <= k / 2; ++j) {
            pe *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pe);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace gkz
