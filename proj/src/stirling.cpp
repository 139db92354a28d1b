#include "degen/stirling.hpp"

#include "degen/gf_oracle.hpp"
#include "degen/sequences.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

namespace degen {

namespace {

// Identity grids re-query the same triangles heavily, so tables are cached
// per (kind, lambda, lambda1) behind a mutex. Tables are immutable once
// built; a larger request replaces the cached entry.
enum class Kind { S1, S2, S2Deg, S1Deg };

struct Table {
    Index max_n;
    std::vector<std::vector<Rational>> rows; // rows[n][k], 0 <= k <= n
};

using Key = std::tuple<Kind, Rational, Rational>;

std::shared_ptr<const Table> build_table(Kind kind, const Rational& lambda, Index max_n) {
    auto t = std::make_shared<Table>();
    t->max_n = max_n;
    t->rows.resize(max_n + 1);
    switch (kind) {
    case Kind::S1:
        // (x)_{n+1} = (x)_n (x - n)  =>  S1(n+1,k) = S1(n,k-1) - n S1(n,k)
        for (Index n = 0; n <= max_n; ++n) {
            t->rows[n].assign(n + 1, Rational(0));
            if (n == 0) {
                t->rows[0][0] = 1;
                continue;
            }
            for (Index k = 1; k <= n; ++k) t->rows[n][k] = t->rows[n - 1][k - 1];
            for (Index k = 0; k < n; ++k)
                t->rows[n][k] -= Rational(n - 1) * t->rows[n - 1][k];
        }
        break;
    case Kind::S2:
    case Kind::S2Deg: {
        const Rational lam = (kind == Kind::S2) ? Rational(0) : lambda;
        for (Index n = 0; n <= max_n; ++n) {
            t->rows[n].assign(n + 1, Rational(0));
            for (Index k = 0; k <= n; ++k) {
                Rational sum(0);
                for (Index j = 0; j <= k; ++j) {
                    Rational term = binomial(k, j) * falling_lambda(Rational(j), n, lam);
                    if ((k - j) % 2 == 1) term = -term;
                    sum += term;
                }
                t->rows[n][k] = sum / Rational(factorial(k));
            }
        }
        break;
    }
    case Kind::S1Deg: {
        // Read the triangle off kernel powers built once to full order.
        for (Index n = 0; n <= max_n; ++n) t->rows[n].assign(n + 1, Rational(0));
        for (Index k = 0; k <= max_n; ++k) {
            const TruncatedSeries s =
                gf_build({.family = GfFamily::S1Deg, .k = k, .lambda = lambda}, max_n);
            for (Index n = k; n <= max_n; ++n) t->rows[n][k] = s.egf_coefficient(n);
        }
        break;
    }
    }
    return t;
}

std::shared_ptr<const Table> table_for(Kind kind, const Rational& lambda, Index n) {
    static std::mutex mutex;
    static std::map<Key, std::shared_ptr<const Table>> cache;
    const Index want = std::max<Index>(n, 16);
    const Key key{kind, lambda, 0};
    {
        std::scoped_lock lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end() && it->second->max_n >= n) return it->second;
    }
    auto built = build_table(kind, lambda, want);
    std::scoped_lock lock(mutex);
    auto& slot = cache[key];
    if (!slot || slot->max_n < built->max_n) slot = std::move(built);
    return slot;
}

Rational lookup(Kind kind, const Rational& lambda, Index n, Index k) {
    if (k > n) return Rational(0);
    return table_for(kind, lambda, n)->rows[n][k];
}

} // namespace

Rational s2_classical(Index n, Index k) { return lookup(Kind::S2, Rational(0), n, k); }

Rational s1_classical(Index n, Index k) { return lookup(Kind::S1, Rational(0), n, k); }

Rational s2_deg(Index n, Index k, const Rational& lambda) {
    return lookup(Kind::S2Deg, lambda, n, k);
}

Rational s1_deg(Index n, Index k, const Rational& lambda) {
    return lookup(Kind::S1Deg, lambda, n, k);
}

Rational apostol_s2(Index m, Index n, const Rational& lambda1) {
    Rational sum(0);
    for (Index j = 0; j <= n; ++j) {
        Rational term = binomial(n, j) * pow_int(lambda1, j) *
                        falling_lambda(Rational(j), m, Rational(0));
        if (j % 2 == 1) term = -term;
        sum += term;
    }
    if (n % 2 == 1) sum = -sum;
    return sum / Rational(factorial(n));
}

} // namespace degen
