#include "springergreen/weylchar.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <sstream>

namespace sg {

WeylFamily family_of(LieType t) {
    switch (t) {
        case LieType::A: return WeylFamily::A;
        case LieType::B:
        case LieType::C: return WeylFamily::BC;
        case LieType::D: return WeylFamily::D;
    }
    return WeylFamily::A;
}

std::string to_string(WeylFamily f) {
    switch (f) {
        case WeylFamily::A: return "A";
        case WeylFamily::BC: return "BC";
        case WeylFamily::D: return "D";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Labels
// ---------------------------------------------------------------------------

std::string ClassLabel::str(WeylFamily f) const {
    if (f == WeylFamily::A) return rho.str();
    std::string out = rho.str() + ";" + sigma.str();
    if (split > 0) out += ";+";
    if (split < 0) out += ";-";
    return out;
}

ClassLabel ClassLabel::parse(const std::string& text, WeylFamily f) {
    std::vector<std::string> fields;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, ';')) fields.push_back(item);
    if (text.empty()) fields.push_back("");
    ClassLabel label;
    if (f == WeylFamily::A) {
        if (fields.size() != 1) throw ParseError("type A class label is a single partition");
        label.rho = Partition::parse(fields[0]);
        return label;
    }
    if (fields.empty() || fields.size() > 3)
        throw ParseError("class label must be \"rho;sigma\" or \"rho;sigma;+|-\": " + text);
    // "-" doubles as the empty partition, so it only reads as a split marker
    // in the three-field form; "+" is never a partition.
    if (fields.back() == "+" || (fields.back() == "-" && fields.size() == 3)) {
        label.split = fields.back() == "+" ? 1 : -1;
        fields.pop_back();
    }
    if (fields.size() == 2) {
        label.rho = Partition::parse(fields[0]);
        label.sigma = Partition::parse(fields[1]);
    } else if (fields.size() == 1) {
        // "rho" or "rho,-" with an explicitly empty sigma
        std::string rho = fields[0];
        if (rho.size() >= 2 && rho.substr(rho.size() - 2) == ",-")
            rho = rho.substr(0, rho.size() - 2);
        label.rho = Partition::parse(rho);
    } else {
        throw ParseError("class label must be \"rho;sigma\" or \"rho;sigma;+|-\": " + text);
    }
    return label;
}

namespace {

int split_rank(int s) {
    // canonical order: plain, plus, minus
    return s == 0 ? 0 : (s > 0 ? 1 : 2);
}

} // namespace

bool ClassLabelLess::operator()(const ClassLabel& a, const ClassLabel& b) const {
    if (a.sigma.size() != b.sigma.size()) return a.sigma.size() < b.sigma.size();
    if (a.sigma != b.sigma) return part_order_less(a.sigma, b.sigma);
    if (a.rho != b.rho) return part_order_less(a.rho, b.rho);
    return split_rank(a.split) < split_rank(b.split);
}

std::string IrrLabel::str(WeylFamily f) const {
    if (f == WeylFamily::A) return alpha.str();
    if (f == WeylFamily::BC) return "(" + alpha.str() + "|" + beta.str() + ")";
    std::string out = "{" + alpha.str() + "|" + beta.str() + "}";
    if (split > 0) out += "+";
    if (split < 0) out += "-";
    return out;
}

bool IrrLabelLess::operator()(const IrrLabel& a, const IrrLabel& b) const {
    if (a.beta.size() != b.beta.size()) return a.beta.size() < b.beta.size();
    if (a.beta != b.beta) return part_order_less(a.beta, b.beta);
    if (a.alpha != b.alpha) return part_order_less(a.alpha, b.alpha);
    return split_rank(a.split) < split_rank(b.split);
}

IrrLabel make_d_irr(const Partition& a, const Partition& b, int split) {
    IrrLabel label;
    const bool swap = b.parts() < a.parts();
    label.alpha = swap ? b : a;
    label.beta = swap ? a : b;
    if (label.alpha == label.beta) {
        if (split == 0) throw InvalidLabel("equal-pair D label needs a split marker");
        label.split = split;
    } else if (split != 0) {
        throw InvalidLabel("split marker only allowed when alpha == beta");
    }
    return label;
}

int WeylTable::cindex(const ClassLabel& c) const {
    auto it = class_index.find(c);
    if (it == class_index.end())
        throw InvalidLabel("no class " + c.str(family) + " in " + to_string(family) +
                           std::to_string(n));
    return it->second;
}

int WeylTable::iindex(const IrrLabel& i) const {
    auto it = irrep_index.find(i);
    if (it == irrep_index.end())
        throw InvalidLabel("no irreducible " + i.str(family) + " in " + to_string(family) +
                           std::to_string(n));
    return it->second;
}

// ---------------------------------------------------------------------------
// Character values
// ---------------------------------------------------------------------------

namespace {

// chi^{(alpha,beta)}(w_{(rho,sigma)}) by distributing the parts of rho and
// sigma over the two variable sets; a sigma part sent to the y side
// contributes a factor -1.
Int chi_bc_value(const Partition& alpha, const Partition& beta, const Partition& rho,
                 const Partition& sigma) {
    struct Item {
        int part;
        bool negative;
    };
    std::vector<Item> items;
    for (int r : rho.parts()) items.push_back({r, false});
    for (int s : sigma.parts()) items.push_back({s, true});
    const int asize = alpha.size();
    const int bsize = beta.size();
    const CharTableA& ta = a_char_table(asize);
    const CharTableA& tb = a_char_table(bsize);

    Int total = 0;
    std::vector<int> xparts, yparts;
    std::function<void(size_t, int, int, int)> rec = [&](size_t i, int xs, int ys, int sign) {
        if (xs > asize || ys > bsize) return;
        if (i == items.size()) {
            const Int& cx = ta.at(alpha, Partition(xparts));
            const Int& cy = tb.at(beta, Partition(yparts));
            total += sign * cx * cy;
            return;
        }
        xparts.push_back(items[i].part);
        rec(i + 1, xs + items[i].part, ys, sign);
        xparts.pop_back();
        yparts.push_back(items[i].part);
        rec(i + 1, xs, ys + items[i].part, items[i].negative ? -sign : sign);
        yparts.pop_back();
    };
    rec(0, 0, 0, 1);
    return total;
}

// ---------------------------------------------------------------------------
// Table construction
// ---------------------------------------------------------------------------

WeylTable build_a_table(int n) {
    WeylTable t;
    t.family = WeylFamily::A;
    t.n = n;
    t.order = factorial(n);
    const CharTableA& ct = a_char_table(n);
    for (const Partition& rho : ct.parts) {
        ClassData cd;
        cd.label = ClassLabel{rho, {}, 0};
        cd.centralizer_order = z_factor(rho);
        cd.class_size = t.order / cd.centralizer_order;
        t.classes.push_back(std::move(cd));
    }
    for (const Partition& mu : ct.parts) t.irreps.push_back(IrrLabel{mu, {}, 0});
    t.chi = ct.chi;
    return t;
}

WeylTable build_bc_table(int n) {
    WeylTable t;
    t.family = WeylFamily::BC;
    t.n = n;
    t.order = pow2(n) * factorial(n);
    for (int s = 0; s <= n; ++s) {
        for (const Partition& sigma : enumerate_partitions(s)) {
            for (const Partition& rho : enumerate_partitions(n - s)) {
                ClassData cd;
                cd.label = ClassLabel{rho, sigma, 0};
                cd.centralizer_order =
                    z_factor(rho) * z_factor(sigma) * pow2(rho.length() + sigma.length());
                cd.class_size = t.order / cd.centralizer_order;
                t.classes.push_back(std::move(cd));
            }
        }
    }
    for (int b = 0; b <= n; ++b)
        for (const Partition& beta : enumerate_partitions(b))
            for (const Partition& alpha : enumerate_partitions(n - b))
                t.irreps.push_back(IrrLabel{alpha, beta, 0});

    t.chi.assign(t.irreps.size(), std::vector<Int>(t.classes.size(), Int(0)));
    for (size_t i = 0; i < t.irreps.size(); ++i)
        for (size_t c = 0; c < t.classes.size(); ++c)
            t.chi[i][c] = chi_bc_value(t.irreps[i].alpha, t.irreps[i].beta,
                                       t.classes[c].label.rho, t.classes[c].label.sigma);
    return t;
}

// Ind_{S_m}^W 1 computed from class fusion alone (no character values of W),
// so it can gate the D table during construction.  marker picks S_{n+}/S_{n-}
// when m == n.
ClassFunction ind_sym_trivial_raw(const WeylTable& t, int m, int marker) {
    ClassFunction f;
    f.family = t.family;
    f.n = t.n;
    f.values.assign(t.classes.size(), Rat(0));
    for (const Partition& tau : enumerate_partitions(m)) {
        std::vector<int> parts = tau.parts();
        for (int i = 0; i < t.n - m; ++i) parts.push_back(1);
        const Partition fused(std::move(parts));
        ClassLabel label{fused, {}, 0};
        if (t.family == WeylFamily::D) {
            bool even = !fused.empty();
            for (int x : fused.parts()) even = even && (x % 2 == 0);
            if (even) label.split = marker;
        }
        const int ci = t.class_index.at(label);
        f.values[ci] += Rat(t.classes[ci].centralizer_order) / Rat(z_factor(tau));
    }
    return f;
}

void index_table(WeylTable& t) {
    for (int i = 0; i < static_cast<int>(t.classes.size()); ++i)
        t.class_index.emplace(t.classes[i].label, i);
    for (int i = 0; i < static_cast<int>(t.irreps.size()); ++i) t.irrep_index.emplace(t.irreps[i], i);
    Int total = 0;
    for (const ClassData& cd : t.classes) {
        if (cd.centralizer_order * cd.class_size != t.order)
            throw InternalError("class size bookkeeping failed");
        total += cd.class_size;
    }
    if (total != t.order) throw InternalError("class sizes do not sum to the group order");
}

void check_orthogonality(const WeylTable& t) {
    const size_t m = t.irreps.size();
    if (m != t.classes.size()) throw InternalError("table is not square");
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = i; j < m; ++j) {
            Int acc = 0;
            for (size_t c = 0; c < m; ++c) acc += t.classes[c].class_size * t.chi[i][c] * t.chi[j][c];
            const Int want = i == j ? t.order : Int(0);
            if (acc != want)
                throw Error("character table " + to_string(t.family) + std::to_string(t.n) +
                            " fails row orthogonality at " + t.irreps[i].str(t.family) + ", " +
                            t.irreps[j].str(t.family));
        }
    }
    for (size_t c = 0; c < m; ++c) {
        for (size_t d = c; d < m; ++d) {
            Int acc = 0;
            for (size_t i = 0; i < m; ++i) acc += t.chi[i][c] * t.chi[i][d];
            const Int want = c == d ? t.classes[c].centralizer_order : Int(0);
            if (acc != want)
                throw Error("character table " + to_string(t.family) + std::to_string(t.n) +
                            " fails column orthogonality");
        }
    }
}

WeylTable build_d_table(int n) {
    if (n < 2) throw RankTooSmall("W(D_n) needs n >= 2");
    const WeylTable& bc = weyl_table(WeylFamily::BC, n);
    WeylTable t;
    t.family = WeylFamily::D;
    t.n = n;
    t.order = pow2(n - 1) * factorial(n);

    for (const ClassData& cd : bc.classes) {
        const Partition& rho = cd.label.rho;
        const Partition& sigma = cd.label.sigma;
        if (sigma.length() % 2 != 0) continue;
        bool rho_even = !rho.empty();
        for (int x : rho.parts()) rho_even = rho_even && (x % 2 == 0);
        if (sigma.empty() && rho_even) {
            for (int s : {+1, -1}) {
                ClassData dd;
                dd.label = ClassLabel{rho, sigma, s};
                dd.centralizer_order = z_factor(rho) * pow2(rho.length());
                dd.class_size = t.order / dd.centralizer_order;
                t.classes.push_back(std::move(dd));
            }
        } else {
            ClassData dd;
            dd.label = cd.label;
            dd.centralizer_order =
                z_factor(rho) * z_factor(sigma) * pow2(rho.length() + sigma.length() - 1);
            dd.class_size = t.order / dd.centralizer_order;
            t.classes.push_back(std::move(dd));
        }
    }

    for (int b = 0; b <= n; ++b) {
        for (const Partition& alpha : enumerate_partitions(b)) {
            for (const Partition& beta : enumerate_partitions(n - b)) {
                if (beta.parts() < alpha.parts()) continue; // keep alpha <= beta
                if (alpha == beta) {
                    t.irreps.push_back(IrrLabel{alpha, beta, +1});
                    t.irreps.push_back(IrrLabel{alpha, beta, -1});
                } else {
                    t.irreps.push_back(IrrLabel{alpha, beta, 0});
                }
            }
        }
    }
    std::sort(t.irreps.begin(), t.irreps.end(), [](const IrrLabel& a, const IrrLabel& b) {
        return IrrLabelLess{}(a, b);
    });

    t.chi.assign(t.irreps.size(), std::vector<Int>(t.classes.size(), Int(0)));
    for (size_t i = 0; i < t.irreps.size(); ++i) {
        const IrrLabel& ir = t.irreps[i];
        for (size_t c = 0; c < t.classes.size(); ++c) {
            const ClassLabel& cl = t.classes[c].label;
            const Int base = bc.chi[bc.iindex(IrrLabel{ir.alpha, ir.beta, 0})][bc.cindex(
                ClassLabel{cl.rho, cl.sigma, 0})];
            if (ir.split == 0) {
                t.chi[i][c] = base;
            } else if (cl.split == 0) {
                t.chi[i][c] = to_int(Rat(base) / 2);
            } else {
                // difference character on the split class (2 tau, empty)+/-
                std::vector<int> half;
                for (int x : cl.rho.parts()) half.push_back(x / 2);
                const Partition tau(std::move(half));
                const Int delta = pow2(tau.length()) * sym_char(ir.alpha, tau);
                t.chi[i][c] = to_int(Rat(base + ir.split * cl.split * delta) / 2);
            }
        }
    }
    return t;
}

// The D gate: orthogonality plus the sign-pinning characterization
// <Ind_{S_{n+}} 1, chi^{{a,a}-}> = 0 = <Ind_{S_{n-}} 1, chi^{{a,a}+}>.
// A pinning failure flips the offending pair once before giving up.
void gate_d_table(WeylTable& t) {
    check_orthogonality(t);
    const ClassFunction plus = ind_sym_trivial_raw(t, t.n, +1);
    const ClassFunction minus = ind_sym_trivial_raw(t, t.n, -1);
    auto pair_inner = [&](const ClassFunction& f, size_t irrep) {
        Rat acc = 0;
        for (size_t c = 0; c < t.classes.size(); ++c)
            acc += Rat(t.classes[c].class_size) * f.values[c] * Rat(t.chi[irrep][c]);
        return Rat(acc / Rat(t.order));
    };
    for (size_t i = 0; i < t.irreps.size(); ++i) {
        const IrrLabel& ir = t.irreps[i];
        if (ir.split != +1) continue;
        const size_t j = t.iindex(IrrLabel{ir.alpha, ir.beta, -1});
        if (pair_inner(plus, j) != 0 || pair_inner(minus, i) != 0) {
            std::swap(t.chi[i], t.chi[j]);
            if (pair_inner(plus, j) != 0 || pair_inner(minus, i) != 0)
                throw Error("sign pinning failed for D" + std::to_string(t.n) + " pair " +
                            ir.str(WeylFamily::D) + " under both conventions");
        }
    }
}

std::mutex weyl_mutex;
std::map<std::pair<int, int>, std::unique_ptr<WeylTable>>& weyl_cache() {
    static std::map<std::pair<int, int>, std::unique_ptr<WeylTable>> cache;
    return cache;
}

} // namespace

const WeylTable& weyl_table(WeylFamily f, int n) {
    if (n < 0 || (f == WeylFamily::D && n < 2))
        throw RankTooSmall("no Weyl group " + to_string(f) + std::to_string(n));
    const auto key = std::make_pair(static_cast<int>(f), n);
    {
        std::lock_guard lock(weyl_mutex);
        auto it = weyl_cache().find(key);
        if (it != weyl_cache().end()) return *it->second;
    }
    WeylTable built;
    switch (f) {
        case WeylFamily::A: built = build_a_table(n); break;
        case WeylFamily::BC: built = build_bc_table(n); break;
        case WeylFamily::D: built = build_d_table(n); break;
    }
    index_table(built);
    if (f == WeylFamily::D) gate_d_table(built);
    auto ptr = std::make_unique<WeylTable>(std::move(built));
    std::lock_guard lock(weyl_mutex);
    auto [it, fresh] = weyl_cache().emplace(key, std::move(ptr));
    return *it->second;
}

bool verify_table_orthogonal(WeylFamily f, int n) {
    try {
        check_orthogonality(weyl_table(f, n));
        return true;
    } catch (const Error&) {
        return false;
    }
}

Int group_order(LieType t, int n) {
    const WeylFamily f = family_of(t);
    if (n < 1 || (f == WeylFamily::D && n < 2))
        throw RankTooSmall("rank too small for type " + to_string(t));
    switch (f) {
        case WeylFamily::A: return factorial(n);
        case WeylFamily::BC: return pow2(n) * factorial(n);
        case WeylFamily::D: return pow2(n - 1) * factorial(n);
    }
    return 0;
}

std::vector<ClassData> classes(LieType t, int n) {
    group_order(t, n); // rank validation
    return weyl_table(family_of(t), n).classes;
}

// ---------------------------------------------------------------------------
// Class functions
// ---------------------------------------------------------------------------

ClassFunction ClassFunction::zero(WeylFamily f, int n) {
    ClassFunction cf;
    cf.family = f;
    cf.n = n;
    cf.values.assign(weyl_table(f, n).classes.size(), Rat(0));
    return cf;
}

ClassFunction ClassFunction::trivial(WeylFamily f, int n) {
    ClassFunction cf = zero(f, n);
    for (Rat& v : cf.values) v = 1;
    return cf;
}

const Rat& ClassFunction::at(const ClassLabel& c) const {
    return values[weyl_table(family, n).cindex(c)];
}

Rat& ClassFunction::at(const ClassLabel& c) {
    return values[weyl_table(family, n).cindex(c)];
}

Rat ClassFunction::dimension() const {
    ClassLabel id;
    id.rho = Partition(std::vector<int>(n, 1));
    return n == 0 ? values.at(0) : at(id);
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
    if (family != o.family || n != o.n) throw SizeMismatch("class function addition mismatch");
    for (size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
    return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
    if (family != o.family || n != o.n) throw SizeMismatch("class function subtraction mismatch");
    for (size_t i = 0; i < values.size(); ++i) values[i] -= o.values[i];
    return *this;
}

ClassFunction& ClassFunction::operator*=(const Rat& c) {
    for (Rat& v : values) v *= c;
    return *this;
}

ClassFunction irreducible_char(WeylFamily f, int n, const IrrLabel& label) {
    const WeylTable& t = weyl_table(f, n);
    ClassFunction cf = ClassFunction::zero(f, n);
    const int i = t.iindex(label);
    for (size_t c = 0; c < t.classes.size(); ++c) cf.values[c] = t.chi[i][c];
    return cf;
}

Rat inner(const ClassFunction& f, const ClassFunction& g) {
    if (f.family != g.family || f.n != g.n) throw SizeMismatch("inner product mismatch");
    const WeylTable& t = weyl_table(f.family, f.n);
    Rat acc = 0;
    for (size_t c = 0; c < t.classes.size(); ++c)
        acc += Rat(t.classes[c].class_size) * f.values[c] * g.values[c];
    return Rat(acc / Rat(t.order));
}

std::map<IrrLabel, Rat, IrrLabelLess> decompose(const ClassFunction& f) {
    const WeylTable& t = weyl_table(f.family, f.n);
    std::map<IrrLabel, Rat, IrrLabelLess> out;
    for (size_t i = 0; i < t.irreps.size(); ++i) {
        Rat acc = 0;
        for (size_t c = 0; c < t.classes.size(); ++c)
            acc += Rat(t.classes[c].class_size) * f.values[c] * Rat(t.chi[i][c]);
        acc /= Rat(t.order);
        if (acc != 0) out.emplace(t.irreps[i], acc);
    }
    return out;
}

ClassFunction bc_char(int n, const Partition& alpha, const Partition& beta) {
    if (alpha.size() + beta.size() != n) throw SizeMismatch("bc_char: |alpha|+|beta| != n");
    return irreducible_char(WeylFamily::BC, n, IrrLabel{alpha, beta, 0});
}

ClassFunction d_char(int n, const IrrLabel& label) {
    if (label.alpha.size() + label.beta.size() != n)
        throw InvalidLabel("d_char: |alpha|+|beta| != n");
    return irreducible_char(WeylFamily::D, n, label);
}

// ---------------------------------------------------------------------------
// Fusion, induction, restriction
// ---------------------------------------------------------------------------

namespace {

ClassLabel fuse(const Partition& tau, const ClassLabel& sub) {
    ClassLabel out;
    out.rho = union_parts(tau, sub.rho);
    out.sigma = sub.sigma;
    if (sub.split != 0) {
        bool tau_even = true;
        for (int x : tau.parts()) tau_even = tau_even && (x % 2 == 0);
        out.split = tau_even ? sub.split : 0;
    }
    return out;
}

} // namespace

ProductValues restrict_product(const ClassFunction& f, int k) {
    if (k < 1 || k > f.n) throw InvalidParabolic("restrict_product: bad k");
    const int m = f.n - k;
    if (f.family == WeylFamily::D && m < 2)
        throw InvalidParabolic("restrict_product: D factor needs rank >= 2");
    const WeylTable& ta = weyl_table(WeylFamily::A, k);
    const WeylTable& tsub = weyl_table(f.family, m);
    ProductValues out(ta.classes.size(), std::vector<Rat>(tsub.classes.size()));
    for (size_t i = 0; i < ta.classes.size(); ++i)
        for (size_t j = 0; j < tsub.classes.size(); ++j)
            out[i][j] = f.at(fuse(ta.classes[i].label.rho, tsub.classes[j].label));
    return out;
}

ClassFunction induce_product(const ClassFunction& f_sym, const ClassFunction& f_sub,
                             WeylFamily target) {
    if (f_sym.family != WeylFamily::A) throw InvalidParabolic("induce_product: first factor is S_k");
    if (f_sub.family != target && !(f_sub.family == WeylFamily::A && target == WeylFamily::A))
        throw InvalidParabolic("induce_product: family mismatch");
    const int n = f_sym.n + f_sub.n;
    const WeylTable& t = weyl_table(target, n);
    const WeylTable& ta = weyl_table(WeylFamily::A, f_sym.n);
    const WeylTable& tsub = weyl_table(f_sub.family, f_sub.n);
    ClassFunction out = ClassFunction::zero(target, n);
    for (size_t i = 0; i < ta.classes.size(); ++i) {
        for (size_t j = 0; j < tsub.classes.size(); ++j) {
            const Rat v = f_sym.values[i] * f_sub.values[j];
            if (v == 0) continue;
            const int ci = t.cindex(fuse(ta.classes[i].label.rho, tsub.classes[j].label));
            out.values[ci] +=
                v / Rat(ta.classes[i].centralizer_order * tsub.classes[j].centralizer_order);
        }
    }
    for (size_t c = 0; c < t.classes.size(); ++c)
        out.values[c] *= Rat(t.classes[c].centralizer_order);
    return out;
}

Rat inner_product_values(const ProductValues& a, const ProductValues& b, int k, WeylFamily f,
                         int n_sub) {
    const WeylTable& ta = weyl_table(WeylFamily::A, k);
    const WeylTable& tsub = weyl_table(f, n_sub);
    Rat acc = 0;
    for (size_t i = 0; i < ta.classes.size(); ++i)
        for (size_t j = 0; j < tsub.classes.size(); ++j)
            acc += a[i][j] * b[i][j] /
                   Rat(ta.classes[i].centralizer_order * tsub.classes[j].centralizer_order);
    return acc;
}

ClassFunction induce_from_symmetric(WeylFamily f, int n, const ClassFunction& f_sym, int marker) {
    if (f_sym.family != WeylFamily::A || f_sym.n > n)
        throw InvalidParabolic("induce_from_symmetric: bad symmetric factor");
    if (f == WeylFamily::D && f_sym.n == n && marker == 0)
        throw InvalidParabolic("induce_from_symmetric: S_n in W(D_n) needs a +/- marker");
    const WeylTable& t = weyl_table(f, n);
    const WeylTable& ta = weyl_table(WeylFamily::A, f_sym.n);
    ClassFunction out = ClassFunction::zero(f, n);
    for (size_t i = 0; i < ta.classes.size(); ++i) {
        if (f_sym.values[i] == 0) continue;
        const Partition& tau = ta.classes[i].label.rho;
        std::vector<int> parts = tau.parts();
        for (int a = 0; a < n - f_sym.n; ++a) parts.push_back(1);
        const Partition fused(std::move(parts));
        ClassLabel label{fused, {}, 0};
        if (f == WeylFamily::D) {
            bool even = !fused.empty();
            for (int x : fused.parts()) even = even && (x % 2 == 0);
            if (even) label.split = marker;
        }
        const int ci = t.cindex(label);
        out.values[ci] += f_sym.values[i] / Rat(ta.classes[i].centralizer_order);
    }
    for (size_t c = 0; c < t.classes.size(); ++c)
        out.values[c] *= Rat(t.classes[c].centralizer_order);
    return out;
}

ClassFunction restrict_bc_to_d(const ClassFunction& f) {
    if (f.family != WeylFamily::BC) throw InvalidParabolic("restrict_bc_to_d: not a BC function");
    const WeylTable& td = weyl_table(WeylFamily::D, f.n);
    ClassFunction out = ClassFunction::zero(WeylFamily::D, f.n);
    for (size_t c = 0; c < td.classes.size(); ++c) {
        const ClassLabel& cl = td.classes[c].label;
        out.values[c] = f.at(ClassLabel{cl.rho, cl.sigma, 0});
    }
    return out;
}

ClassFunction restrict_coset(const ClassFunction& f, int k) {
    if (k < 1 || k > f.n) throw InvalidParabolic("restrict_coset: bad k");
    const int m = f.n - k;
    if (f.family == WeylFamily::D && m < 2)
        throw InvalidParabolic("restrict_coset: use restrict_coset_value when W' is trivial");
    const WeylTable& tsub = weyl_table(f.family, m);
    ClassFunction out = ClassFunction::zero(f.family, m);
    const Partition cycle{k};
    for (size_t j = 0; j < tsub.classes.size(); ++j)
        out.values[j] = f.at(fuse(cycle, tsub.classes[j].label));
    return out;
}

Rat restrict_coset_value(const ClassFunction& f, int k, int which) {
    if (k < 1 || k > f.n) throw InvalidParabolic("restrict_coset_value: bad k");
    std::vector<int> parts{k};
    for (int i = 0; i < f.n - k; ++i) parts.push_back(1);
    const Partition fused(std::move(parts));
    ClassLabel label{fused, {}, 0};
    if (f.family == WeylFamily::D) {
        bool even = true;
        for (int x : fused.parts()) even = even && (x % 2 == 0);
        if (even) {
            if (which == 0)
                throw InvalidLabel("restrict_coset_value: split class needs a +/- branch");
            label.split = which;
        } else if (which != 0) {
            throw InvalidLabel("restrict_coset_value: class does not split");
        }
    } else if (which != 0) {
        throw InvalidLabel("restrict_coset_value: split branches only exist in type D");
    }
    return f.at(label);
}

// ---------------------------------------------------------------------------
// Frobenius characteristic maps
// ---------------------------------------------------------------------------

SymFunc frobenius_A(const ClassFunction& f) {
    if (f.family != WeylFamily::A) throw SizeMismatch("frobenius_A: not a type A function");
    const WeylTable& t = weyl_table(WeylFamily::A, f.n);
    const CharTableA& ct = a_char_table(f.n);
    SymFunc out = SymFunc::zero(f.n);
    for (size_t mi = 0; mi < ct.parts.size(); ++mi) {
        Rat acc = 0;
        for (size_t c = 0; c < t.classes.size(); ++c)
            acc += f.values[c] * Rat(ct.chi[mi][c]) / Rat(t.classes[c].centralizer_order);
        if (acc != 0) out.add_term(ct.parts[mi], IntPoly(to_int(acc)));
    }
    return out;
}

ClassFunction frobenius_A_inv(const SymFunc& F) {
    const CharTableA& ct = a_char_table(F.degree);
    ClassFunction out = ClassFunction::zero(WeylFamily::A, F.degree);
    for (const auto& [mu, c] : F.terms) {
        if (!c.is_constant()) throw Error("frobenius_A_inv: coefficients must be t-free");
        const int mi = ct.index.at(mu);
        for (size_t cl = 0; cl < out.values.size(); ++cl)
            out.values[cl] += Rat(c.coeff(0)) * Rat(ct.chi[mi][cl]);
    }
    return out;
}

SymFunc2 frobenius_BC(const ClassFunction& f) {
    if (f.family != WeylFamily::BC) throw SizeMismatch("frobenius_BC: not a BC function");
    const WeylTable& t = weyl_table(WeylFamily::BC, f.n);
    SymFunc2 out = SymFunc2::zero(f.n);
    for (size_t i = 0; i < t.irreps.size(); ++i) {
        Rat acc = 0;
        for (size_t c = 0; c < t.classes.size(); ++c)
            acc += Rat(t.classes[c].class_size) * f.values[c] * Rat(t.chi[i][c]);
        acc /= Rat(t.order);
        if (acc != 0) out.add_term(t.irreps[i].alpha, t.irreps[i].beta, IntPoly(to_int(acc)));
    }
    return out;
}

ClassFunction frobenius_BC_inv(const SymFunc2& F) {
    const WeylTable& t = weyl_table(WeylFamily::BC, F.degree);
    ClassFunction out = ClassFunction::zero(WeylFamily::BC, F.degree);
    for (const auto& [key, c] : F.terms) {
        if (!c.is_constant()) throw Error("frobenius_BC_inv: coefficients must be t-free");
        const int i = t.iindex(IrrLabel{key.first, key.second, 0});
        for (size_t cl = 0; cl < out.values.size(); ++cl)
            out.values[cl] += Rat(c.coeff(0)) * Rat(t.chi[i][cl]);
    }
    return out;
}

} // namespace sg
