// Small independent oracles shared by the unit suites.
#ifndef FINDIM_TEST_ORACLE_HPP
#define FINDIM_TEST_ORACLE_HPP

#include <numeric>
#include <random>
#include <vector>

#include "findim/engine.hpp"

namespace oracle {

using findim::Integer;
using findim::Rational;

inline Integer igcd(Integer a, Integer b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0)
    {
        Integer r = a % b;
        a = b;
        b = r;
    }
    return a;
}

/** Determinant by cofactor expansion; fine for k <= 4. */
inline Integer det(const std::vector<std::vector<Integer>>& m)
{
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Integer d = 0;
    for (std::size_t j = 0; j < n; ++j)
    {
        std::vector<std::vector<Integer>> minor;
        for (std::size_t i = 1; i < n; ++i)
        {
            minor.emplace_back();
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) minor.back().push_back(m[i][c]);
        }
        const Integer t = m[0][j] * det(minor);
        d += (j % 2 ? -t : t);
    }
    return d;
}

inline void choose(std::size_t n, std::size_t k, std::size_t from, std::vector<std::size_t>& cur,
                   std::vector<std::vector<std::size_t>>& out)
{
    if (cur.size() == k)
    {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = from; i < n; ++i)
    {
        cur.push_back(i);
        choose(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

/** Invariant factors from determinantal divisors d_k = gcd of k x k minors. */
inline std::vector<Integer> invariant_factors(const std::vector<std::vector<Integer>>& a)
{
    const std::size_t r = a.size(), c = r ? a[0].size() : 0;
    std::vector<Integer> out;
    Integer prev = 1;
    for (std::size_t k = 1; k <= std::min(r, c); ++k)
    {
        std::vector<std::vector<std::size_t>> rs, cs;
        std::vector<std::size_t> cur;
        choose(r, k, 0, cur, rs);
        choose(c, k, 0, cur, cs);
        Integer g = 0;
        for (const auto& ri : rs)
            for (const auto& ci : cs)
            {
                std::vector<std::vector<Integer>> m;
                for (auto i : ri)
                {
                    m.emplace_back();
                    for (auto j : ci) m.back().push_back(a[i][j]);
                }
                g = igcd(g, det(m));
            }
        if (g == 0) break;
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

/** Rank over Q by fraction-exact elimination. */
inline std::size_t rank(std::vector<std::vector<Rational>> a)
{
    std::size_t rk = 0;
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    for (std::size_t col = 0; col < cols && rk < rows; ++col)
    {
        std::size_t p = rk;
        while (p < rows && a[p][col] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[rk]);
        for (std::size_t i = 0; i < rows; ++i)
            if (i != rk && a[i][col] != 0)
            {
                const Rational f = a[i][col] / a[rk][col];
                for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[rk][j];
            }
        ++rk;
    }
    return rk;
}

inline long long binomial(int n, int k)
{
    long long b = 1;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

}   // namespace oracle

#endif
