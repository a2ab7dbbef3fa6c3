#include <echcap/oracle.hpp>

#include <echcap/errors.hpp>

#include <algorithm>

namespace echcap {

std::vector<Rational> ellipsoid_sequence(const Rational& a, const Rational& b, int K) {
    if (a <= 0 || b <= 0) {
        throw PreconditionError("ellipsoid_sequence: parameters must be positive");
    }
    if (K < 0) {
        throw PreconditionError("ellipsoid_sequence: K must be nonnegative");
    }
    // The K+1 smallest elements of {ma + nb} all have m, n <= K.
    std::vector<Rational> pool;
    pool.reserve(static_cast<std::size_t>(K + 1) * static_cast<std::size_t>(K + 1));
    for (int m = 0; m <= K; ++m) {
        for (int n = 0; n <= K; ++n) {
            pool.push_back(a * m + b * n);
        }
    }
    std::sort(pool.begin(), pool.end());
    pool.resize(static_cast<std::size_t>(K) + 1);
    return pool;
}

std::vector<Rational> polydisk_sequence(const Rational& a, const Rational& b, int K) {
    if (a <= 0 || b <= 0) {
        throw PreconditionError("polydisk_sequence: parameters must be positive");
    }
    if (K < 0) {
        throw PreconditionError("polydisk_sequence: K must be nonnegative");
    }
    std::vector<Rational> out;
    for (int k = 0; k <= K; ++k) {
        Rational best = -1;
        for (int m = 0; m <= k; ++m) {
            for (int n = 0; n <= k; ++n) {
                if ((m + 1) * (n + 1) < k + 1) continue;
                const Rational v = a * m + b * n;
                if (best < 0 || v < best) best = v;
            }
        }
        out.push_back(best);
    }
    return out;
}

IntersectionR intersection_R(const IntersectionParams& p) {
    if (p.a <= 0 || p.b <= 0 || p.c <= 0 || p.d <= 0) {
        throw PreconditionError("intersection_R: parameters must be positive");
    }
    if (!(p.a < p.b)) {
        throw PreconditionError("intersection_R: requires a < b");
    }
    if (!(p.c > p.d)) {
        throw PreconditionError("intersection_R: requires c > d");
    }
    const Rational denom = p.b * p.c - p.a * p.d;
    if (denom == 0) {
        throw PreconditionError("intersection_R: requires bc != ad");
    }
    IntersectionR out;
    out.R = (p.a * p.b * p.c + p.b * p.c * p.d - p.a * p.c * p.d - p.a * p.b * p.d) / denom;
    out.corner = {(p.a * p.b * p.c - p.a * p.c * p.d) / denom,
                  (p.b * p.c * p.d - p.a * p.b * p.d) / denom};
    out.hypothesis_met = (2 * p.a >= out.R) && (2 * p.d >= out.R);
    return out;
}

}  // namespace echcap
