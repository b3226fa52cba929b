#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <vector>

#include "springergreen/symfunc.hpp"

namespace sg {

// ---------------------------------------------------------------------------
// Symmetric group character tables via Murnaghan-Nakayama.
// ---------------------------------------------------------------------------

namespace {

std::mutex table_mutex;

std::vector<std::unique_ptr<CharTableA>>& a_tables() {
    static std::vector<std::unique_ptr<CharTableA>> tables;
    return tables;
}

CharTableA build_a_table(int n) {
    CharTableA t;
    t.n = n;
    t.parts = enumerate_partitions(n);
    for (int i = 0; i < static_cast<int>(t.parts.size()); ++i) t.index.emplace(t.parts[i], i);
    t.chi.assign(t.parts.size(), std::vector<Int>(t.parts.size(), Int(0)));
    if (n == 0) {
        t.chi[0][0] = 1;
        return t;
    }
    for (size_t ri = 0; ri < t.parts.size(); ++ri) {
        const Partition& rho = t.parts[ri];
        const int r = rho.part(1);
        std::vector<int> rest_parts(rho.parts().begin() + 1, rho.parts().end());
        const Partition rest(std::move(rest_parts));
        const CharTableA& sub = a_char_table(n - r);
        for (size_t mi = 0; mi < t.parts.size(); ++mi) {
            Int v = 0;
            for (const StripResult& sr : border_strips_remove(t.parts[mi], r)) {
                const Int& inner = sub.at(sr.shape, rest);
                v += (sr.height % 2 == 0) ? inner : -inner;
            }
            t.chi[mi][ri] = v;
        }
    }
    return t;
}

} // namespace

const Int& CharTableA::at(const Partition& mu, const Partition& rho) const {
    return chi[index.at(mu)][index.at(rho)];
}

const CharTableA& a_char_table(int n) {
    if (n < 0) throw Error("a_char_table: negative degree");
    {
        std::lock_guard lock(table_mutex);
        if (n < static_cast<int>(a_tables().size()) && a_tables()[n]) return *a_tables()[n];
    }
    // Build outside the lock; dependencies recurse into lower degrees.
    for (int k = 0; k <= n; ++k) {
        {
            std::lock_guard lock(table_mutex);
            if (k < static_cast<int>(a_tables().size()) && a_tables()[k]) continue;
        }
        auto built = std::make_unique<CharTableA>(build_a_table(k));
        std::lock_guard lock(table_mutex);
        if (static_cast<int>(a_tables().size()) <= k) a_tables().resize(k + 1);
        if (!a_tables()[k]) a_tables()[k] = std::move(built);
    }
    std::lock_guard lock(table_mutex);
    return *a_tables()[n];
}

Int sym_char(const Partition& mu, const Partition& rho) {
    if (mu.size() != rho.size())
        throw SizeMismatch("sym_char: |mu| != |rho|: " + mu.str() + " vs " + rho.str());
    return a_char_table(mu.size()).at(mu, rho);
}

// ---------------------------------------------------------------------------
// Charge and Kostka-Foulkes polynomials.
// ---------------------------------------------------------------------------

int charge(const std::vector<int>& word) {
    // The content must be a partition (checked lightly: letters 1..L present
    // with weakly decreasing multiplicities).
    std::vector<int> w = word;
    int total = 0;
    while (!w.empty()) {
        const int n = static_cast<int>(w.size());
        std::vector<bool> taken(n, false);
        // Rightmost 1, then scan leftward (cyclically) for 2, 3, ...
        int pos = -1;
        for (int i = n - 1; i >= 0; --i)
            if (w[i] == 1) {
                pos = i;
                break;
            }
        if (pos < 0) throw Error("charge: word content is not a partition");
        taken[pos] = true;
        std::vector<int> positions{pos};
        int letter = 2;
        while (true) {
            bool exists = false;
            for (int i = 0; i < n; ++i)
                if (!taken[i] && w[i] == letter) exists = true;
            if (!exists) break;
            int found = -1;
            for (int step = 1; step <= n; ++step) {
                const int i = ((pos - step) % n + n) % n;
                if (!taken[i] && w[i] == letter) {
                    found = i;
                    break;
                }
            }
            taken[found] = true;
            positions.push_back(found);
            pos = found;
            ++letter;
        }
        int index = 0;
        for (size_t v = 1; v < positions.size(); ++v) {
            if (positions[v] > positions[v - 1]) ++index;
            total += index;
        }
        std::vector<int> next;
        for (int i = 0; i < n; ++i)
            if (!taken[i]) next.push_back(w[i]);
        w = std::move(next);
    }
    return total;
}

namespace {

// Enumerate semistandard tableaux of shape mu and content lambda; calls f with
// the reading word (rows bottom to top, left to right within each row).
void for_each_ssyt(const Partition& mu, const Partition& lambda,
                   const std::function<void(const std::vector<int>&)>& f) {
    const int rows = mu.length();
    const int letters = lambda.length();
    std::vector<int> remaining(letters + 1, 0);
    for (int i = 1; i <= letters; ++i) remaining[i] = lambda.part(i);
    std::vector<std::vector<int>> grid(rows);
    for (int r = 0; r < rows; ++r) grid[r].assign(mu.part(r + 1), 0);

    std::function<void(int, int)> rec = [&](int r, int c) {
        if (r == rows) {
            std::vector<int> word;
            word.reserve(mu.size());
            for (int i = rows - 1; i >= 0; --i)
                for (int v : grid[i]) word.push_back(v);
            f(word);
            return;
        }
        if (c == static_cast<int>(grid[r].size())) {
            rec(r + 1, 0);
            return;
        }
        const int lo = std::max(c > 0 ? grid[r][c - 1] : 1,
                                (r > 0 && c < static_cast<int>(grid[r - 1].size())) ? grid[r - 1][c] + 1 : 1);
        for (int v = lo; v <= letters; ++v) {
            if (remaining[v] == 0) continue;
            --remaining[v];
            grid[r][c] = v;
            rec(r, c + 1);
            ++remaining[v];
        }
        grid[r][c] = 0;
    };
    rec(0, 0);
}

std::vector<std::unique_ptr<KostkaTable>>& k_tables() {
    static std::vector<std::unique_ptr<KostkaTable>> tables;
    return tables;
}

KostkaTable build_kostka_table(int n) {
    KostkaTable t;
    t.n = n;
    t.parts = enumerate_partitions(n);
    const int m = static_cast<int>(t.parts.size());
    for (int i = 0; i < m; ++i) t.index.emplace(t.parts[i], i);
    t.poly.assign(m, std::vector<IntPoly>(m));
    t.at_one.assign(m, std::vector<Int>(m, Int(0)));
    t.at_minus_one.assign(m, std::vector<Int>(m, Int(0)));
    for (int li = 0; li < m; ++li) {
        const Partition& lambda = t.parts[li];
        for (int mi = 0; mi <= li; ++mi) {
            // K_{mu,lambda} != 0 requires mu >= lambda in dominance, hence
            // mu at or before lambda in the canonical order.
            const Partition& mu = t.parts[mi];
            if (!dominance_geq(mu, lambda)) continue;
            std::vector<Int> coeffs(weight_b(lambda) + 1, Int(0));
            for_each_ssyt(mu, lambda, [&](const std::vector<int>& word) { ++coeffs[charge(word)]; });
            IntPoly p{std::move(coeffs)};
            t.at_one[mi][li] = p.evaluate(1);
            t.at_minus_one[mi][li] = p.evaluate(-1);
            t.poly[mi][li] = std::move(p);
        }
    }
    return t;
}

} // namespace

const IntPoly& KostkaTable::at(const Partition& mu, const Partition& lambda) const {
    return poly[index.at(mu)][index.at(lambda)];
}

const KostkaTable& kostka_table(int n) {
    if (n < 0) throw Error("kostka_table: negative degree");
    {
        std::lock_guard lock(table_mutex);
        if (n < static_cast<int>(k_tables().size()) && k_tables()[n]) return *k_tables()[n];
    }
    auto built = std::make_unique<KostkaTable>(build_kostka_table(n));
    std::lock_guard lock(table_mutex);
    if (static_cast<int>(k_tables().size()) <= n) k_tables().resize(n + 1);
    if (!k_tables()[n]) k_tables()[n] = std::move(built);
    return *k_tables()[n];
}

IntPoly kostka_foulkes(const Partition& mu, const Partition& lambda) {
    if (mu.size() != lambda.size())
        throw SizeMismatch("kostka_foulkes: |mu| != |lambda|: " + mu.str() + " vs " + lambda.str());
    return kostka_table(mu.size()).at(mu, lambda);
}

Int kostka_number(const Partition& mu, const Partition& lambda) {
    if (mu.size() != lambda.size())
        throw SizeMismatch("kostka_number: |mu| != |lambda|");
    const KostkaTable& t = kostka_table(mu.size());
    return t.at_one[t.index.at(mu)][t.index.at(lambda)];
}

} // namespace sg
