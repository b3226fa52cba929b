#include "springergreen/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace sg {

Int to_int(const Rat& q) {
    Rat c = q;
    c.canonicalize();
    if (c.get_den() != 1) throw InternalError("expected integral value, got " + c.get_str());
    return c.get_num();
}

LieType parse_lie_type(const std::string& s) {
    if (s == "A" || s == "a") return LieType::A;
    if (s == "B" || s == "b") return LieType::B;
    if (s == "C" || s == "c") return LieType::C;
    if (s == "D" || s == "d") return LieType::D;
    throw ParseError("unknown Lie type: " + s);
}

std::string to_string(LieType t) {
    switch (t) {
        case LieType::A: return "A";
        case LieType::B: return "B";
        case LieType::C: return "C";
        case LieType::D: return "D";
    }
    return "?";
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int x : parts_)
        if (x < 0) throw Error("negative part in partition");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition Partition::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty() || s == "-") return {};
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw ParseError("empty entry in partition: \"" + text + "\"");
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw ParseError("bad partition entry: \"" + item + "\"");
        }
        if (pos != item.size() || v <= 0) throw ParseError("bad partition entry: \"" + item + "\"");
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

std::string Partition::str() const {
    if (parts_.empty()) return "-";
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
    if (i < 1 || i > length()) return 0;
    return parts_[i - 1];
}

int Partition::multiplicity(int i) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

bool part_order_less(const Partition& a, const Partition& b) {
    return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                        a.parts().begin(), a.parts().end());
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << "(" << p.str() << ")";
}

SkewShape::SkewShape(Partition out, Partition in) : outer(std::move(out)), inner(std::move(in)) {
    if (!contains(outer, inner))
        throw Error("skew shape " + outer.str() + "/" + inner.str() + ": inner not contained");
}

Partition conjugate(const Partition& p) {
    std::vector<int> out;
    for (int j = 1; j <= p.part(1); ++j) {
        int cnt = 0;
        for (int x : p.parts()) cnt += (x >= j);
        out.push_back(cnt);
    }
    return Partition(std::move(out));
}

Partition union_parts(const Partition& a, const Partition& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    return Partition(std::move(parts));
}

Partition scale(int k, const Partition& p) {
    if (k < 1) throw Error("scale: k must be >= 1");
    std::vector<int> parts = p.parts();
    for (int& x : parts) x *= k;
    return Partition(std::move(parts));
}

Partition replace(const Partition& p, const std::vector<int>& from, const std::vector<int>& to) {
    std::vector<int> parts = p.parts();
    for (int f : from) {
        auto it = std::find(parts.begin(), parts.end(), f);
        if (it == parts.end())
            throw PartNotPresent("replace: part " + std::to_string(f) + " not present in " + p.str());
        parts.erase(it);
    }
    for (int t : to) {
        if (t < 0) throw Error("replace: negative target part");
        if (t > 0) parts.push_back(t);
    }
    return Partition(std::move(parts));
}

int weight_b(const Partition& p) {
    int b = 0;
    for (int i = 1; i <= p.length(); ++i) b += (i - 1) * p.part(i);
    return b;
}

Int z_factor(const Partition& p) {
    Int z = 1;
    std::map<int, int> mult;
    for (int x : p.parts()) ++mult[x];
    for (auto [i, m] : mult) {
        for (int j = 0; j < m; ++j) z *= i;
        z *= factorial(m);
    }
    return z;
}

int sign_eps(const Partition& p) {
    return weight_b(p) % 2 == 0 ? 1 : -1;
}

int height(const SkewShape& s) {
    int rows = 0;
    for (int i = 1; i <= s.outer.length(); ++i) rows += (s.outer.part(i) > s.inner.part(i));
    if (rows == 0) throw EmptyShape("height of empty skew shape");
    return rows - 1;
}

namespace {

// beta[i] = p_i + m - i for i = 1..m (weakly >= 0, strictly decreasing).
std::vector<int> beta_numbers(const Partition& p, int m) {
    std::vector<int> beta(m);
    for (int i = 1; i <= m; ++i) beta[i - 1] = p.part(i) + m - i;
    return beta;
}

Partition from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>());
    const int m = static_cast<int>(beta.size());
    std::vector<int> parts(m);
    for (int i = 1; i <= m; ++i) parts[i - 1] = beta[i - 1] - (m - i);
    return Partition(std::move(parts));
}

int even_beta_length(const Partition& p) {
    int m = p.length();
    return m % 2 == 0 ? m : m + 1;
}

} // namespace

Partition two_core(const Partition& p) {
    const int m = even_beta_length(p);
    auto beta = beta_numbers(p, m);
    int evens = 0;
    for (int b : beta) evens += (b % 2 == 0);
    const int odds = m - evens;
    // Pushing beta numbers down within their parity class removes dominoes.
    std::vector<int> core;
    for (int i = 0; i < evens; ++i) core.push_back(2 * i);
    for (int i = 0; i < odds; ++i) core.push_back(2 * i + 1);
    return from_beta(std::move(core));
}

std::array<Partition, 2> two_quotient(const Partition& p) {
    const int m = even_beta_length(p);
    auto beta = beta_numbers(p, m);
    std::vector<int> ev, od;
    for (int b : beta) (b % 2 == 0 ? ev : od).push_back(b / 2);
    std::sort(ev.begin(), ev.end(), std::greater<>());
    std::sort(od.begin(), od.end(), std::greater<>());
    auto strip = [](const std::vector<int>& v) {
        const int s = static_cast<int>(v.size());
        std::vector<int> parts(s);
        for (int i = 1; i <= s; ++i) parts[i - 1] = v[i - 1] - (s - i);
        return Partition(std::move(parts));
    };
    return {strip(ev), strip(od)};
}

bool has_minimal_two_core(const Partition& p) {
    const Partition core = two_core(p);
    return p.size() % 2 == 0 ? core.empty() : core == Partition{1};
}

namespace {

struct SkewGrid {
    // Cells (r, c) of the skew shape, row-major.
    std::vector<std::pair<int, int>> cells;
    std::map<std::pair<int, int>, int> index;

    explicit SkewGrid(const SkewShape& s) {
        for (int r = 1; r <= s.outer.length(); ++r)
            for (int c = s.inner.part(r) + 1; c <= s.outer.part(r); ++c) {
                index[{r, c}] = static_cast<int>(cells.size());
                cells.emplace_back(r, c);
            }
    }

    int at(int r, int c) const {
        auto it = index.find({r, c});
        return it == index.end() ? -1 : it->second;
    }
};

// Enumerates domino tilings; visit(vertical_count, column_use) per tiling.
// column_use maps column -> number of dominoes meeting it.  Stops early once
// `visit` returns false.
void for_each_tiling(const SkewGrid& g, const std::function<bool(int, const std::map<int, int>&)>& visit) {
    const int n = static_cast<int>(g.cells.size());
    if (n % 2 != 0) return;
    std::vector<bool> used(n, false);
    std::map<int, int> column_use;
    bool stop = false;
    std::function<void(int, int)> rec = [&](int from, int verticals) {
        if (stop) return;
        int i = from;
        while (i < n && used[i]) ++i;
        if (i == n) {
            if (!visit(verticals, column_use)) stop = true;
            return;
        }
        auto [r, c] = g.cells[i];
        const int right = g.at(r, c + 1);
        if (right >= 0 && !used[right]) {
            used[i] = used[right] = true;
            ++column_use[c];
            ++column_use[c + 1];
            rec(i + 1, verticals);
            --column_use[c];
            --column_use[c + 1];
            used[i] = used[right] = false;
        }
        const int below = g.at(r + 1, c);
        if (below >= 0 && !used[below]) {
            used[i] = used[below] = true;
            ++column_use[c];
            rec(i + 1, verticals + 1);
            --column_use[c];
            used[i] = used[below] = false;
        }
    };
    rec(0, 0);
}

} // namespace

int two_sign(const SkewShape& s) {
    if (s.size() % 2 != 0) return 0;
    if (s.size() == 0) return 1;
    SkewGrid g(s);
    int result = 0;
    for_each_tiling(g, [&](int verticals, const std::map<int, int>&) {
        result = verticals % 2 == 0 ? 1 : -1;
        return false; // the parity is tiling-independent
    });
    return result;
}

int column_disjoint_domino_tilings(const SkewShape& s) {
    if (s.size() % 2 != 0) return 0;
    if (s.size() == 0) return 1;
    SkewGrid g(s);
    const int n = static_cast<int>(g.cells.size());
    std::vector<bool> used(n, false);
    std::set<int> columns_taken;
    int count = 0;
    // Unlike the full tiling walk, prune as soon as a column is claimed twice.
    std::function<void(int)> rec = [&](int from) {
        int i = from;
        while (i < n && used[i]) ++i;
        if (i == n) {
            ++count;
            return;
        }
        auto [r, c] = g.cells[i];
        const int right = g.at(r, c + 1);
        if (right >= 0 && !used[right] && !columns_taken.count(c) && !columns_taken.count(c + 1)) {
            used[i] = used[right] = true;
            columns_taken.insert(c);
            columns_taken.insert(c + 1);
            rec(i + 1);
            columns_taken.erase(c);
            columns_taken.erase(c + 1);
            used[i] = used[right] = false;
        }
        const int below = g.at(r + 1, c);
        if (below >= 0 && !used[below] && !columns_taken.count(c)) {
            used[i] = used[below] = true;
            columns_taken.insert(c);
            rec(i + 1);
            columns_taken.erase(c);
            used[i] = used[below] = false;
        }
    };
    rec(0);
    return count;
}

bool column_disjoint_domino_cover(const SkewShape& s) {
    return column_disjoint_domino_tilings(s) == 1;
}

std::vector<StripResult> border_strips_add(const Partition& nu, int k) {
    if (k < 1) throw Error("border_strips_add: k must be >= 1");
    const int m = nu.length() + k;
    auto beta = beta_numbers(nu, m);
    std::set<int> present(beta.begin(), beta.end());
    std::vector<StripResult> out;
    for (int a : beta) {
        if (present.count(a + k)) continue;
        int h = 0;
        for (int b : beta) h += (a < b && b < a + k);
        std::vector<int> moved = beta;
        *std::find(moved.begin(), moved.end(), a) = a + k;
        out.push_back({from_beta(std::move(moved)), h});
    }
    std::sort(out.begin(), out.end(),
              [](const StripResult& x, const StripResult& y) { return part_order_less(x.shape, y.shape); });
    return out;
}

std::vector<StripResult> border_strips_remove(const Partition& mu, int k) {
    if (k < 1) throw Error("border_strips_remove: k must be >= 1");
    const int m = mu.length();
    auto beta = beta_numbers(mu, m);
    std::set<int> present(beta.begin(), beta.end());
    std::vector<StripResult> out;
    for (int a : beta) {
        if (a - k < 0 || present.count(a - k)) continue;
        int h = 0;
        for (int b : beta) h += (a - k < b && b < a);
        std::vector<int> moved = beta;
        *std::find(moved.begin(), moved.end(), a) = a - k;
        out.push_back({from_beta(std::move(moved)), h});
    }
    std::sort(out.begin(), out.end(),
              [](const StripResult& x, const StripResult& y) { return part_order_less(x.shape, y.shape); });
    return out;
}

bool dominance_geq(const Partition& a, const Partition& b) {
    if (a.size() != b.size())
        throw SizeMismatch("dominance on unequal sizes: " + a.str() + " vs " + b.str());
    int sa = 0, sb = 0;
    const int len = std::max(a.length(), b.length());
    for (int i = 1; i <= len; ++i) {
        sa += a.part(i);
        sb += b.part(i);
        if (sa < sb) return false;
    }
    return true;
}

bool contains(const Partition& a, const Partition& b) {
    for (int i = 1; i <= b.length(); ++i)
        if (a.part(i) < b.part(i)) return false;
    return true;
}

bool valid_jordan_type(LieType type, int n, const Partition& lambda) {
    auto even_parts_even_mult = [&] {
        for (int i = 2; i <= lambda.part(1); i += 2)
            if (lambda.multiplicity(i) % 2 != 0) return false;
        return true;
    };
    auto odd_parts_even_mult = [&] {
        for (int i = 1; i <= lambda.part(1); i += 2)
            if (lambda.multiplicity(i) % 2 != 0) return false;
        return true;
    };
    switch (type) {
        case LieType::A: return lambda.size() == n;
        case LieType::B: return lambda.size() == 2 * n + 1 && even_parts_even_mult();
        case LieType::C: return lambda.size() == 2 * n && odd_parts_even_mult();
        case LieType::D: return lambda.size() == 2 * n && even_parts_even_mult();
    }
    return false;
}

bool is_very_even(const Partition& lambda) {
    for (int x : lambda.parts())
        if (x % 2 != 0) return false;
    for (int i = 2; i <= lambda.part(1); i += 2)
        if (lambda.multiplicity(i) % 2 != 0) return false;
    return true;
}

Partition very_even_half(const Partition& lambda) {
    if (!is_very_even(lambda)) throw Error("very_even_half: " + lambda.str() + " is not very even");
    std::vector<int> parts;
    for (int i = 0; i < lambda.length(); i += 2) parts.push_back(lambda.parts()[i] / 2);
    return Partition(std::move(parts));
}

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw Error("enumerate_partitions: negative n");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int first = std::min(rest, maxpart); first >= 1; --first) {
            cur.push_back(first);
            rec(rest - first, first);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<std::pair<Partition, int>> enumerate_jordan_types(LieType type, int n) {
    const int size = type == LieType::A ? n : (type == LieType::B ? 2 * n + 1 : 2 * n);
    std::vector<std::pair<Partition, int>> out;
    for (const Partition& p : enumerate_partitions(size)) {
        if (!valid_jordan_type(type, n, p)) continue;
        if (type == LieType::D && is_very_even(p)) {
            out.emplace_back(p, +1);
            out.emplace_back(p, -1);
        } else {
            out.emplace_back(p, 0);
        }
    }
    return out;
}

} // namespace sg
