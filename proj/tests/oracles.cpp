#include "oracles.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace brauerlab::testing {

namespace {

long long mod_reduce(__int128 v, long long m) {
    long long r = static_cast<long long>(v % m);
    return r < 0 ? r + m : r;
}

// z^2 - a x^2 - b y^2 mod m
long long form_value(long long a, long long b, long long x, long long y, long long z,
                     long long m) {
    __int128 v = static_cast<__int128>(z) * z - static_cast<__int128>(a) * x * x -
                 static_cast<__int128>(b) * y * y;
    return mod_reduce(v, m);
}

struct LiftSearch {
    long long a, b, p;
    int target_level;
    long long nodes = 0;

    bool extend(long long x, long long y, long long z, int level, long long mod) {
        if (level == target_level) return true;
        if (++nodes > 200000)
            throw std::runtime_error("lift oracle: search budget exceeded");
        long long next_mod = mod * p;
        for (long long s = 0; s < p; ++s)
            for (long long t = 0; t < p; ++t)
                for (long long u = 0; u < p; ++u) {
                    long long x2 = x + s * mod, y2 = y + t * mod, z2 = z + u * mod;
                    if (form_value(a, b, x2, y2, z2, next_mod) != 0) continue;
                    if (extend(x2, y2, z2, level + 1, next_mod)) return true;
                }
        return false;
    }
};

}  // namespace

bool solvable_mod_odd_prime_power(long long a, long long b, long long p, int k) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("oracle: odd prime required");
    LiftSearch search{a, b, p, k, 0};
    for (long long x = 0; x < p; ++x)
        for (long long y = 0; y < p; ++y)
            for (long long z = 0; z < p; ++z) {
                if (x == 0 && y == 0 && z == 0) continue;
                if (form_value(a, b, x, y, z, p) != 0) continue;
                if (search.extend(x, y, z, 1, p)) return true;
            }
    return false;
}

bool solvable_mod_256(long long a, long long b) {
    constexpr long long m = 256;
    std::array<bool, 256> square{}, odd_square{};
    for (long long z = 0; z < m; ++z) {
        square[static_cast<size_t>(z * z % m)] = true;
        if (z % 2 == 1) odd_square[static_cast<size_t>(z * z % m)] = true;
    }
    for (long long x = 0; x < m; ++x)
        for (long long y = 0; y < m; ++y) {
            long long r = mod_reduce(static_cast<__int128>(a) * x * x +
                                         static_cast<__int128>(b) * y * y,
                                     m);
            if (x % 2 == 1 || y % 2 == 1) {
                if (square[static_cast<size_t>(r)]) return true;  // any z works
            } else {
                if (odd_square[static_cast<size_t>(r)]) return true;  // z must be odd
            }
        }
    return false;
}

int oracle_hilbert_symbol(long long a, long long b, long long p) {
    bool solvable = p == 2 ? solvable_mod_256(a, b) : solvable_mod_odd_prime_power(a, b, p, 4);
    return solvable ? 1 : -1;
}

}  // namespace brauerlab::testing
