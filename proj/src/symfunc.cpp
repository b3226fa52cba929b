#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <vector>

#include "springergreen/symfunc.hpp"

namespace sg {

// ---------------------------------------------------------------------------
// SymFunc / SymFunc2 basics
// ---------------------------------------------------------------------------

SymFunc SymFunc::schur(const Partition& p, IntPoly c) {
    SymFunc f;
    f.degree = p.size();
    f.add_term(p, std::move(c));
    return f;
}

void SymFunc::add_term(const Partition& p, IntPoly c) {
    if (p.size() != degree) throw SizeMismatch("SymFunc::add_term: wrong degree key " + p.str());
    if (c.is_zero()) return;
    auto it = terms.find(p);
    if (it == terms.end()) {
        terms.emplace(p, std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

const IntPoly& SymFunc::coeff(const Partition& p) const {
    static const IntPoly zero;
    auto it = terms.find(p);
    return it == terms.end() ? zero : it->second;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
    if (degree != o.degree) throw SizeMismatch("SymFunc addition: degree mismatch");
    for (const auto& [p, c] : o.terms) add_term(p, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
    if (degree != o.degree) throw SizeMismatch("SymFunc subtraction: degree mismatch");
    for (const auto& [p, c] : o.terms) add_term(p, -c);
    return *this;
}

SymFunc& SymFunc::operator*=(const IntPoly& c) {
    if (c.is_zero()) {
        terms.clear();
        return *this;
    }
    for (auto& [p, v] : terms) v *= c;
    return *this;
}

SymFunc SymFunc::operator-() const {
    SymFunc r = *this;
    for (auto& [p, v] : r.terms) v = -v;
    return r;
}

std::string SymFunc::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c << ")*s[" << p.str() << "]";
    }
    return os.str();
}

SymFunc2 SymFunc2::unit() {
    SymFunc2 f;
    f.add_term({}, {}, 1);
    return f;
}

void SymFunc2::add_term(const Partition& a, const Partition& b, IntPoly c) {
    if (a.size() + b.size() != degree)
        throw SizeMismatch("SymFunc2::add_term: wrong degree key");
    if (c.is_zero()) return;
    const auto key = std::make_pair(a, b);
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(key, std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

const IntPoly& SymFunc2::coeff(const Partition& a, const Partition& b) const {
    static const IntPoly zero;
    auto it = terms.find({a, b});
    return it == terms.end() ? zero : it->second;
}

SymFunc2& SymFunc2::operator+=(const SymFunc2& o) {
    if (degree != o.degree) throw SizeMismatch("SymFunc2 addition: degree mismatch");
    for (const auto& [k, c] : o.terms) add_term(k.first, k.second, c);
    return *this;
}

SymFunc2& SymFunc2::operator-=(const SymFunc2& o) {
    if (degree != o.degree) throw SizeMismatch("SymFunc2 subtraction: degree mismatch");
    for (const auto& [k, c] : o.terms) add_term(k.first, k.second, -c);
    return *this;
}

SymFunc2& SymFunc2::operator*=(const IntPoly& c) {
    if (c.is_zero()) {
        terms.clear();
        return *this;
    }
    for (auto& [k, v] : terms) v *= c;
    return *this;
}

// ---------------------------------------------------------------------------
// p and h expansions
// ---------------------------------------------------------------------------

SymFunc schur_expand_p(const Partition& rho) {
    SymFunc f = SymFunc::unit();
    for (int k : rho.parts()) {
        SymFunc next = SymFunc::zero(f.degree + k);
        for (const auto& [mu, c] : f.terms)
            for (const StripResult& sr : border_strips_add(mu, k))
                next.add_term(sr.shape, sr.height % 2 == 0 ? c : -c);
        f = std::move(next);
    }
    return f;
}

SymFunc h_to_schur(const Partition& lambda) {
    const KostkaTable& t = kostka_table(lambda.size());
    SymFunc f = SymFunc::zero(lambda.size());
    const int li = t.index.at(lambda);
    for (size_t mi = 0; mi < t.parts.size(); ++mi) {
        const Int& k = t.at_one[mi][li];
        if (k != 0) f.add_term(t.parts[mi], Int(k));
    }
    return f;
}

// ---------------------------------------------------------------------------
// Hall-Littlewood and Green polynomials
// ---------------------------------------------------------------------------

SymFunc qprime(const Partition& lambda) {
    const KostkaTable& t = kostka_table(lambda.size());
    SymFunc f = SymFunc::zero(lambda.size());
    const int li = t.index.at(lambda);
    for (size_t mi = 0; mi < t.parts.size(); ++mi)
        f.add_term(t.parts[mi], t.poly[mi][li]);
    return f;
}

SymFunc qprime_at(const Partition& lambda, const Int& v) {
    return evaluate_t(qprime(lambda), v);
}

namespace {

std::mutex hl_mutex;

const std::vector<SymFunc>& hl_table(int n) {
    static std::vector<std::unique_ptr<std::vector<SymFunc>>> tables;
    {
        std::lock_guard lock(hl_mutex);
        if (n < static_cast<int>(tables.size()) && tables[n]) return *tables[n];
    }
    const KostkaTable& kt = kostka_table(n);
    const int m = static_cast<int>(kt.parts.size());
    auto table = std::make_unique<std::vector<SymFunc>>(m);
    // K is unitriangular for the canonical order; back substitution from the
    // bottom (index m-1 is (1^n)).
    for (int li = m - 1; li >= 0; --li) {
        SymFunc p = SymFunc::schur(kt.parts[li]);
        for (int lj = li + 1; lj < m; ++lj) {
            const IntPoly& k = kt.poly[li][lj];
            if (k.is_zero()) continue;
            p -= (*table)[lj] * k;
        }
        (*table)[li] = std::move(p);
    }
    std::lock_guard lock(hl_mutex);
    if (static_cast<int>(tables.size()) <= n) tables.resize(n + 1);
    if (!tables[n]) tables[n] = std::move(table);
    return *tables[n];
}

} // namespace

SymFunc hall_littlewood_P(const Partition& lambda) {
    const KostkaTable& kt = kostka_table(lambda.size());
    return hl_table(lambda.size())[kt.index.at(lambda)];
}

IntPoly green_X(const Partition& lambda, const Partition& rho) {
    if (lambda.size() != rho.size())
        throw SizeMismatch("green_X: |lambda| != |rho|");
    const int n = lambda.size();
    const KostkaTable& kt = kostka_table(n);
    const CharTableA& ct = a_char_table(n);
    const int li = kt.index.at(lambda);
    const int ri = ct.index.at(rho);
    IntPoly x;
    for (size_t mi = 0; mi < kt.parts.size(); ++mi) {
        const IntPoly& k = kt.poly[mi][li];
        if (k.is_zero()) continue;
        x += k * IntPoly(ct.chi[mi][ri]);
    }
    return x;
}

IntPoly green(const Partition& lambda, const Partition& rho) {
    return green_X(lambda, rho).reversed(weight_b(lambda));
}

Int green_at(const Partition& lambda, const Partition& rho, const Int& v) {
    if (lambda.size() != rho.size())
        throw SizeMismatch("green_at: |lambda| != |rho|");
    if (v == 1 || v == -1) {
        const int n = lambda.size();
        const KostkaTable& kt = kostka_table(n);
        const CharTableA& ct = a_char_table(n);
        const int li = kt.index.at(lambda);
        const int ri = ct.index.at(rho);
        const auto& col = (v == 1) ? kt.at_one : kt.at_minus_one;
        Int x = 0;
        for (size_t mi = 0; mi < kt.parts.size(); ++mi) x += col[mi][li] * ct.chi[mi][ri];
        // gr(t) = t^b X(1/t), so gr(1) = X(1) and gr(-1) = eps(lambda) X(-1).
        if (v == -1 && sign_eps(lambda) < 0) x = -x;
        return x;
    }
    return green(lambda, rho).evaluate(v);
}

// ---------------------------------------------------------------------------
// Scalar product, omega, Littlewood-Richardson
// ---------------------------------------------------------------------------

IntPoly scalar(const SymFunc& f, const SymFunc& g) {
    if (f.degree != g.degree) throw SizeMismatch("scalar: degree mismatch");
    IntPoly out;
    const SymFunc& small = f.terms.size() <= g.terms.size() ? f : g;
    const SymFunc& large = f.terms.size() <= g.terms.size() ? g : f;
    for (const auto& [p, c] : small.terms) {
        const IntPoly& d = large.coeff(p);
        if (!d.is_zero()) out += c * d;
    }
    return out;
}

SymFunc omega(const SymFunc& f) {
    SymFunc r = SymFunc::zero(f.degree);
    for (const auto& [p, c] : f.terms) r.add_term(conjugate(p), c);
    return r;
}

namespace {

// Counts Littlewood-Richardson fillings of lambda/mu.  With `content`
// non-null, only fillings of exactly that content are counted; otherwise
// `collect` receives each filling's content.
void lr_enumerate(const Partition& lambda, const Partition& mu, const Partition* content,
                  const std::function<void(const std::vector<int>&)>& collect) {
    const int total = lambda.size() - mu.size();
    const int rows = lambda.length();
    std::vector<int> counts(total + 2, 0);
    std::vector<int> limit(total + 2, 0);
    if (content) {
        for (int v = 1; v <= content->length(); ++v) limit[v] = content->part(v);
    } else {
        for (int v = 1; v <= total + 1; ++v) limit[v] = total;
    }
    // grid values for filled cells, addressed by (row, col), 1-indexed cols.
    std::vector<std::vector<int>> grid(rows + 1);
    for (int r = 1; r <= rows; ++r) grid[r].assign(lambda.part(r) + 1, 0);

    // Fill rows top to bottom, right to left inside each row: this is the
    // reverse reading order, so the lattice condition can be checked on the
    // fly: placing v requires count[v-1] > count[v] (v >= 2).
    std::function<void(int, int)> rec = [&](int r, int c) {
        if (r > rows) {
            std::vector<int> cnt(counts.begin() + 1, counts.begin() + 1 + total + 1);
            collect(cnt);
            return;
        }
        if (c <= mu.part(r)) {
            rec(r + 1, lambda.part(r + 1));
            return;
        }
        const int right = (c < lambda.part(r)) ? grid[r][c + 1] : total + 1;
        const int above = (r > 1 && c > mu.part(r - 1) && c <= lambda.part(r - 1)) ? grid[r - 1][c] : 0;
        for (int v = above + 1; v <= std::min(right, total); ++v) {
            if (counts[v] >= limit[v]) continue;
            if (v >= 2 && counts[v - 1] <= counts[v]) continue;
            ++counts[v];
            grid[r][c] = v;
            rec(r, c - 1);
            --counts[v];
        }
        grid[r][c] = 0;
    };
    if (rows == 0)
        collect(std::vector<int>(1, 0));
    else
        rec(1, lambda.part(1));
}

struct LrKey {
    Partition lambda, mu, nu;
    bool operator<(const LrKey& o) const {
        if (lambda != o.lambda) return part_order_less(lambda, o.lambda);
        if (mu != o.mu) return part_order_less(mu, o.mu);
        return part_order_less(nu, o.nu);
    }
};

std::mutex lr_mutex;
std::map<LrKey, Int>& lr_cache() {
    static std::map<LrKey, Int> cache;
    return cache;
}

} // namespace

Int lr_coeff(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.size() != mu.size() + nu.size() || !contains(lambda, mu)) return 0;
    LrKey key{lambda, mu, nu};
    {
        std::lock_guard lock(lr_mutex);
        auto it = lr_cache().find(key);
        if (it != lr_cache().end()) return it->second;
    }
    Int count = 0;
    lr_enumerate(lambda, mu, &nu, [&](const std::vector<int>& cnt) {
        for (int v = 1; v <= nu.length(); ++v)
            if (cnt[v - 1] != nu.part(v)) return;
        ++count;
    });
    std::lock_guard lock(lr_mutex);
    lr_cache().emplace(std::move(key), count);
    return count;
}

SymFunc skew_schur(const Partition& lambda, const Partition& mu) {
    if (!contains(lambda, mu))
        return SymFunc::zero(std::max(lambda.size() - mu.size(), 0));
    SymFunc out = SymFunc::zero(lambda.size() - mu.size());
    lr_enumerate(lambda, mu, nullptr, [&](const std::vector<int>& cnt) {
        std::vector<int> parts;
        for (int c : cnt)
            if (c > 0) parts.push_back(c);
        out.add_term(Partition(std::move(parts)), 1);
    });
    return out;
}

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
    SymFunc out = SymFunc::zero(f.degree + g.degree);
    if (f.is_zero() || g.is_zero()) return out;
    const auto candidates = enumerate_partitions(out.degree);
    for (const Partition& lambda : candidates) {
        IntPoly c;
        for (const auto& [mu, a] : f.terms) {
            if (!contains(lambda, mu)) continue;
            for (const auto& [nu, b] : g.terms) {
                const Int lr = lr_coeff(lambda, mu, nu);
                if (lr != 0) c += a * b * IntPoly(lr);
            }
        }
        out.add_term(lambda, std::move(c));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Frobenius (plethysm by p_2) and Verschiebung
// ---------------------------------------------------------------------------

namespace {

std::mutex pleth_mutex;

// M[I][J] = <s_{nu_J}[p_2], s_{mu_I}> for mu_I |- 2n, nu_J |- n.
const std::vector<std::vector<Int>>& pleth_matrix(int n) {
    static std::vector<std::unique_ptr<std::vector<std::vector<Int>>>> tables;
    {
        std::lock_guard lock(pleth_mutex);
        if (n < static_cast<int>(tables.size()) && tables[n]) return *tables[n];
    }
    const CharTableA& low = a_char_table(n);
    const CharTableA& high = a_char_table(2 * n);
    const int rows = static_cast<int>(high.parts.size());
    const int cols = static_cast<int>(low.parts.size());
    auto m = std::make_unique<std::vector<std::vector<Int>>>(rows, std::vector<Int>(cols, Int(0)));
    for (int j = 0; j < cols; ++j) {
        for (int i = 0; i < rows; ++i) {
            Rat acc = 0;
            for (size_t r = 0; r < low.parts.size(); ++r) {
                const Partition& rho = low.parts[r];
                const Partition two_rho = scale(2, rho);
                acc += Rat(low.chi[j][r] * high.at(high.parts[i], two_rho)) / Rat(z_factor(rho));
            }
            (*m)[i][j] = to_int(acc);
        }
    }
    std::lock_guard lock(pleth_mutex);
    if (static_cast<int>(tables.size()) <= n) tables.resize(n + 1);
    if (!tables[n]) tables[n] = std::move(m);
    return *tables[n];
}

} // namespace

SymFunc plethysm_p2(const SymFunc& f) {
    const int n = f.degree;
    const auto& m = pleth_matrix(n);
    const CharTableA& low = a_char_table(n);
    const CharTableA& high = a_char_table(2 * n);
    SymFunc out = SymFunc::zero(2 * n);
    for (size_t i = 0; i < high.parts.size(); ++i) {
        IntPoly c;
        for (const auto& [nu, a] : f.terms) {
            const Int& coeff = m[i][low.index.at(nu)];
            if (coeff != 0) c += a * IntPoly(coeff);
        }
        out.add_term(high.parts[i], std::move(c));
    }
    return out;
}

SymFunc verschiebung(const SymFunc& f) {
    if (f.degree % 2 != 0) return SymFunc::zero(f.degree / 2);
    const int n = f.degree / 2;
    const auto& m = pleth_matrix(n);
    const CharTableA& low = a_char_table(n);
    const CharTableA& high = a_char_table(2 * n);
    SymFunc out = SymFunc::zero(n);
    for (size_t j = 0; j < low.parts.size(); ++j) {
        IntPoly c;
        for (const auto& [mu, a] : f.terms) {
            const Int& coeff = m[high.index.at(mu)][j];
            if (coeff != 0) c += a * IntPoly(coeff);
        }
        out.add_term(low.parts[j], std::move(c));
    }
    return out;
}

SymFunc skew_by_p(int k, const SymFunc& f) {
    if (k < 1) throw Error("skew_by_p: k must be >= 1");
    if (f.degree < k)
        throw DegreeTooSmall("skew_by_p: degree " + std::to_string(f.degree) +
                             " smaller than k = " + std::to_string(k));
    SymFunc out = SymFunc::zero(f.degree - k);
    for (const auto& [mu, c] : f.terms)
        for (const StripResult& sr : border_strips_remove(mu, k))
            out.add_term(sr.shape, sr.height % 2 == 0 ? c : -c);
    return out;
}

SymFunc evaluate_t(const SymFunc& f, const Int& v) {
    SymFunc out = SymFunc::zero(f.degree);
    for (const auto& [p, c] : f.terms) out.add_term(p, c.evaluate(v));
    return out;
}

// ---------------------------------------------------------------------------
// Lambda(x) tensor Lambda(y)
// ---------------------------------------------------------------------------

SymFunc2 sf2_from_pair(const Partition& alpha, const Partition& beta, IntPoly c) {
    SymFunc2 f;
    f.degree = alpha.size() + beta.size();
    f.add_term(alpha, beta, std::move(c));
    return f;
}

namespace {

// Multiply F by p_r(x) (side 0) or p_r(y) (side 1).
SymFunc2 sf2_mul_p(const SymFunc2& f, int r, int side) {
    SymFunc2 out = SymFunc2::zero(f.degree + r);
    for (const auto& [key, c] : f.terms) {
        const Partition& grow = side == 0 ? key.first : key.second;
        for (const StripResult& sr : border_strips_add(grow, r)) {
            const IntPoly v = sr.height % 2 == 0 ? c : -c;
            if (side == 0)
                out.add_term(sr.shape, key.second, v);
            else
                out.add_term(key.first, sr.shape, v);
        }
    }
    return out;
}

} // namespace

SymFunc2 sf2_p(const Partition& rho, const Partition& sigma) {
    SymFunc2 f = SymFunc2::unit();
    for (int r : rho.parts()) {
        SymFunc2 next = sf2_mul_p(f, r, 0);
        next += sf2_mul_p(f, r, 1);
        f = std::move(next);
    }
    for (int s : sigma.parts()) {
        SymFunc2 next = sf2_mul_p(f, s, 0);
        next -= sf2_mul_p(f, s, 1);
        f = std::move(next);
    }
    return f;
}

SymFunc sf2_nabla(const SymFunc2& F) {
    SymFunc out = SymFunc::zero(F.degree);
    for (const auto& [key, c] : F.terms) {
        SymFunc prod = multiply(SymFunc::schur(key.first), SymFunc::schur(key.second));
        prod *= c;
        out += prod;
    }
    return out;
}

SymFunc2 sf2_delta(const SymFunc& f) {
    SymFunc2 out = SymFunc2::zero(f.degree);
    for (const auto& [lambda, c] : f.terms) {
        for (int m = 0; m <= lambda.size(); ++m) {
            for (const Partition& mu : enumerate_partitions(m)) {
                if (!contains(lambda, mu)) continue;
                const SymFunc skew = skew_schur(lambda, mu);
                for (const auto& [nu, d] : skew.terms) out.add_term(mu, nu, c * d);
            }
        }
    }
    return out;
}

IntPoly sf2_scalar(const SymFunc2& F, const SymFunc2& G) {
    if (F.degree != G.degree) throw SizeMismatch("sf2_scalar: degree mismatch");
    IntPoly out;
    const SymFunc2& small = F.terms.size() <= G.terms.size() ? F : G;
    const SymFunc2& large = F.terms.size() <= G.terms.size() ? G : F;
    for (const auto& [key, c] : small.terms) {
        const IntPoly& d = large.coeff(key.first, key.second);
        if (!d.is_zero()) out += c * d;
    }
    return out;
}

} // namespace sg
