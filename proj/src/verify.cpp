#include "springergreen/verify.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

namespace sg {

bool Report::all_pass() const {
    for (const CaseResult& c : cases)
        if (!c.pass) return false;
    return true;
}

int Report::fail_count() const {
    int f = 0;
    for (const CaseResult& c : cases) f += !c.pass;
    return f;
}

std::string Report::summary() const {
    std::ostringstream os;
    os << "suite " << suite;
    if (!type.empty()) os << " type " << type;
    if (n > 0) os << " n=" << n;
    os << ": " << (cases.size() - fail_count()) << "/" << cases.size() << " pass";
    os.setf(std::ios::fixed);
    os.precision(2);
    os << " (" << seconds << "s)";
    return os.str();
}

namespace {

using clock_type = std::chrono::steady_clock;

double elapsed_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

std::string rat_str(const Rat& q) {
    Rat c = q;
    c.canonicalize();
    return c.get_str();
}

// Deterministic parallel map: worker(i) fills slot i.
std::vector<CaseResult> run_cases(int jobs, int count,
                                  const std::function<CaseResult(int)>& worker) {
    std::vector<CaseResult> results(count);
    if (jobs <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) results[i] = worker(i);
        return results;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> threads;
    const int nthreads = std::min(jobs, count);
    threads.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) {
        threads.emplace_back([&] {
            for (;;) {
                const int i = next.fetch_add(1);
                if (i >= count) return;
                results[i] = worker(i);
            }
        });
    }
    for (auto& t : threads) t.join();
    return results;
}

CaseResult compare_class_functions(std::string lambda, std::string param, const ClassFunction& lhs,
                                   const ClassFunction& rhs) {
    CaseResult cr;
    cr.lambda = std::move(lambda);
    cr.param = std::move(param);
    cr.pass = lhs.values == rhs.values;
    if (!cr.pass) {
        const WeylTable& t = weyl_table(lhs.family, lhs.n);
        for (size_t c = 0; c < lhs.values.size(); ++c) {
            if (lhs.values[c] != rhs.values[c]) {
                cr.witness = t.classes[c].label.str(t.family);
                cr.lhs = rat_str(lhs.values[c]);
                cr.rhs = rat_str(rhs.values[c]);
                break;
            }
        }
    }
    return cr;
}

CaseResult compare_values(std::string lambda, std::string param, const Rat& lhs, const Rat& rhs) {
    CaseResult cr;
    cr.lambda = std::move(lambda);
    cr.param = std::move(param);
    cr.pass = lhs == rhs;
    if (!cr.pass) {
        cr.lhs = rat_str(lhs);
        cr.rhs = rat_str(rhs);
    }
    return cr;
}

// One replacement term of the border-strip restriction/recursion identities.
// extra_parity carries the column-sum exponent that appears in the
// Hall-Littlewood form of the identity and vanishes for valid Jordan types.
struct RTerm {
    Int coeff;
    Partition replaced;
    int extra_parity = 0;
};

std::vector<RTerm> restriction_terms(const Partition& lam, int k) {
    std::vector<RTerm> out;
    const Partition lamc = conjugate(lam);
    auto colsum = [&](int from, int to) {
        int s = 0;
        for (int a = from; a <= to; ++a) s += lamc.part(a);
        return s;
    };
    // Parity of the number of parts strictly between lo and hi: the lowered
    // part hops over each of them, and each hop contributes a sign.  (This is
    // the height exponent of the restriction identities; it equals the sum
    // m_{hi-2} + m_{hi-4} + ... for valid Jordan types.)
    auto hops = [&](int lo, int hi) {
        int c = 0;
        for (int x : lam.parts()) c += (lo < x && x < hi);
        return c;
    };
    std::set<int> values(lam.parts().begin(), lam.parts().end());
    for (int i : values) {
        const int mi = lam.multiplicity(i);
        if (i >= k && mi >= 2)
            out.push_back({Int(2 * (mi / 2)), replace(lam, {i, i}, {i - k, i - k}), 0});
        if (i >= 2 * k && mi % 2 == 1) {
            const Partition rep = replace(lam, {i}, {i - 2 * k});
            const int h = hops(i - 2 * k, i);
            out.push_back({h % 2 == 0 ? Int(1) : Int(-1), rep, colsum(i - 2 * k + 1, i) % 2});
        }
        for (int j : values) {
            if (j >= i) continue;
            const int mj = lam.multiplicity(j);
            if (mi % 2 == 0 || mj % 2 == 0) continue;
            if (!(0 < i - j && i - j < 2 * k && 2 * k <= i + j)) continue;
            if ((i + j) % 2 != 0)
                throw InternalError("odd-multiplicity parts of mixed parity in restriction terms");
            const int half = (i + j) / 2 - k;
            const Partition rep = replace(lam, {i, j}, {half, half});
            const int h = hops(j, i);
            out.push_back({h % 2 == 0 ? Int(2) : Int(-2), rep, colsum(j + 1, i) % 2});
        }
    }
    return out;
}

int lie_size(LieType type, int n) {
    return type == LieType::A ? n : (type == LieType::B ? 2 * n + 1 : 2 * n);
}

bool all_even(const Partition& p) {
    for (int x : p.parts())
        if (x % 2 != 0) return false;
    return true;
}

ClassFunction scaled(ClassFunction f, const Rat& c) {
    f *= c;
    return f;
}

// Expected value of the type D restriction at an (n-1)-cycle (delta display).
Rat d_expected_at_n_minus_1(const Partition& lam, int n) {
    if (n == 2) {
        if (lam == Partition{1, 1, 1, 1}) return 4;
        if (lam == Partition{2, 2}) return 2;
        if (lam == Partition{3, 1}) return 1;
        return 0;
    }
    Rat v = 0;
    if (lam == Partition{n - 1, n - 1, 1, 1}) v += 2;
    if (lam == Partition{n, n}) v += 2;
    if (lam == Partition{2 * n - 1, 1}) v += 1;
    for (int i = 2 * n - 3; 2 * i > 2 * n - 2; i -= 2) {
        const int j = 2 * n - 2 - i;
        if (j >= 1 && j % 2 == 1 && i > j && lam == Partition{i, j, 1, 1}) v += 2;
    }
    for (int i = 2 * n - 1; 2 * i > 2 * n; i -= 2) {
        const int j = 2 * n - i;
        if (j > 1 && j % 2 == 1 && i > j && lam == Partition{i, j}) v += 2;
    }
    return v;
}

// Expected value at an n-cycle c_{branch} per the Lagrangian-route displays.
Rat d_expected_at_n(const Partition& lam, int lam_split, int n, int branch) {
    const bool pair_sum_2n = [&] {
        if (lam.length() != 2) return false;
        const int i = lam.part(1), j = lam.part(2);
        return i > j && i % 2 == 1 && j % 2 == 1 && i + j == 2 * n;
    }();
    if (n % 2 == 0) {
        if (pair_sum_2n) return 1;
        if (lam == Partition{n, n}) return lam_split == branch ? 2 : 0;
        return 0;
    }
    if (pair_sum_2n) return 1;
    if (lam == Partition{n, n}) return 1;
    return 0;
}

} // namespace

// ---------------------------------------------------------------------------
// Restriction suites
// ---------------------------------------------------------------------------

Report verify_restriction(LieType type, int n, int jobs) {
    const auto start = clock_type::now();
    Report rep;
    rep.suite = "restriction";
    rep.type = to_string(type);
    rep.n = n;
    if (type == LieType::A) throw InvalidParabolic("restriction suite covers types B, C, D");

    struct Task {
        Partition lambda;
        int split;
        int k;
        int branch; // split branch of the n-cycle class for D, k = n
    };
    std::vector<Task> tasks;
    for (const auto& [lam, split] : enumerate_jordan_types(type, n)) {
        for (int k = 1; k <= n; ++k) {
            if (type == LieType::D && k == n && n % 2 == 0) {
                tasks.push_back({lam, split, k, +1});
                tasks.push_back({lam, split, k, -1});
            } else {
                tasks.push_back({lam, split, k, 0});
            }
        }
    }

    auto worker = [&](int idx) -> CaseResult {
        const Task& task = tasks[idx];
        const NilpotentLabel nl{type, n, task.lambda, task.split};
        const ClassFunction total = total_char(nl);
        std::string param = "k=" + std::to_string(task.k);
        if (task.branch > 0) param += ",c+";
        if (task.branch < 0) param += ",c-";

        if (type != LieType::D) {
            const ClassFunction lhs = restrict_coset(total, task.k);
            ClassFunction rhs = ClassFunction::zero(WeylFamily::BC, n - task.k);
            for (const RTerm& t : restriction_terms(task.lambda, task.k))
                rhs += scaled(gue(type, t.replaced), Rat(t.coeff));
            return compare_class_functions(nl.str(), param, lhs, rhs);
        }

        // type D
        if (task.k <= n - 2) {
            const ClassFunction lhs = restrict_coset(total, task.k);
            ClassFunction rhs = ClassFunction::zero(WeylFamily::D, n - task.k);
            const bool lam_ve = is_very_even(task.lambda);
            for (const RTerm& t : restriction_terms(task.lambda, task.k)) {
                const int m = n - task.k;
                if (!is_very_even(t.replaced)) {
                    rhs += scaled(d_total(NilpotentLabel{LieType::D, m, t.replaced, 0}),
                                  Rat(t.coeff));
                } else if (lam_ve) {
                    rhs += scaled(d_total(NilpotentLabel{LieType::D, m, t.replaced, task.split}),
                                  Rat(t.coeff));
                } else {
                    ClassFunction both = d_total(NilpotentLabel{LieType::D, m, t.replaced, +1});
                    both += d_total(NilpotentLabel{LieType::D, m, t.replaced, -1});
                    rhs += scaled(std::move(both), Rat(t.coeff) / 2);
                }
            }
            return compare_class_functions(nl.str(), param, lhs, rhs);
        }
        if (task.k == n - 1) {
            const Rat lhs = restrict_coset_value(total, task.k, 0);
            return compare_values(nl.str(), param, lhs, d_expected_at_n_minus_1(task.lambda, n));
        }
        // k == n
        const int branch = n % 2 == 0 ? task.branch : 0;
        const Rat lhs = restrict_coset_value(total, n, branch);
        const Rat rhs = d_expected_at_n(task.lambda, task.split, n, branch);
        return compare_values(nl.str(), param, lhs, rhs);
    };
    rep.cases = run_cases(jobs, static_cast<int>(tasks.size()), worker);
    rep.seconds = elapsed_since(start);
    return rep;
}

// ---------------------------------------------------------------------------
// Induction suites
// ---------------------------------------------------------------------------

Report verify_induction(LieType type, int n, int jobs) {
    const auto start = clock_type::now();
    Report rep;
    rep.suite = "induction";
    rep.type = to_string(type);
    rep.n = n;
    if (type == LieType::A) throw InvalidParabolic("induction suite covers types B, C, D");

    struct Task {
        Partition lambda; // lower-rank Jordan type; lambda cup (k,k) is tested
        int k;
        int special;      // 0 generic, 1: (n-1,n-1,1,1), 2: (n,n)
    };
    std::vector<Task> tasks;
    if (type != LieType::D) {
        for (int k = 1; k <= n; ++k) {
            std::set<std::string> seen;
            for (const auto& [lam, split] : enumerate_jordan_types(type, n - k)) {
                (void)split;
                if (seen.insert(lam.str()).second) tasks.push_back({lam, k, 0});
            }
        }
    } else {
        for (int k = 1; k <= n - 2; ++k) {
            std::set<std::string> seen;
            for (const auto& [lam, split] : enumerate_jordan_types(type, n - k)) {
                (void)split;
                if (seen.insert(lam.str()).second) tasks.push_back({lam, k, 0});
            }
        }
        tasks.push_back({{}, 0, 1});
        tasks.push_back({{}, 0, 2});
    }

    auto worker = [&](int idx) -> CaseResult {
        const Task& task = tasks[idx];
        if (task.special == 1) {
            const Partition lam{n - 1, n - 1, 1, 1};
            ClassFunction two = ClassFunction::trivial(WeylFamily::A, n - 1);
            two *= 2;
            const ClassFunction rhs = induce_from_symmetric(WeylFamily::D, n, two, 0);
            return compare_class_functions(lam.str(), "Ind_S(n-1) 2", ague(lam), rhs);
        }
        if (task.special == 2) {
            const Partition lam{n, n};
            const ClassFunction one = ClassFunction::trivial(WeylFamily::A, n);
            ClassFunction rhs = induce_from_symmetric(WeylFamily::D, n, one, +1);
            rhs += induce_from_symmetric(WeylFamily::D, n, one, -1);
            return compare_class_functions(lam.str(), "Ind_S(n+)1 + Ind_S(n-)1", ague(lam), rhs);
        }
        const Partition big = union_parts(task.lambda, Partition{task.k, task.k});
        const ClassFunction one_k = ClassFunction::trivial(WeylFamily::A, task.k);
        const std::string param = "k=" + std::to_string(task.k);
        if (type != LieType::D) {
            const ClassFunction rhs =
                induce_product(one_k, gue(type, task.lambda), WeylFamily::BC);
            return compare_class_functions(big.str(), param, gue(type, big), rhs);
        }
        const ClassFunction rhs = induce_product(one_k, ague(task.lambda), WeylFamily::D);
        return compare_class_functions(big.str(), param, ague(big), rhs);
    };
    rep.cases = run_cases(jobs, static_cast<int>(tasks.size()), worker);
    rep.seconds = elapsed_since(start);
    return rep;
}

// ---------------------------------------------------------------------------
// Green-value consistency of the total characters
// ---------------------------------------------------------------------------

Report verify_main_consistency(LieType type, int n, int jobs) {
    const auto start = clock_type::now();
    Report rep;
    rep.suite = "main-consistency";
    rep.type = to_string(type);
    rep.n = n;
    if (type == LieType::A) throw InvalidParabolic("main consistency covers types B, C, D");

    struct Task {
        Partition lambda;
        int split;
        Partition rho;     // empty length-0 means: difference cross-check task
        int branch;
        Partition tau;     // for the cross-check
        bool cross = false;
    };
    std::vector<Task> tasks;
    for (const auto& [lam, split] : enumerate_jordan_types(type, n)) {
        for (const Partition& rho : enumerate_partitions(n)) {
            if (type == LieType::D && all_even(rho)) {
                tasks.push_back({lam, split, rho, +1, {}, false});
                tasks.push_back({lam, split, rho, -1, {}, false});
            } else {
                tasks.push_back({lam, split, rho, 0, {}, false});
            }
        }
        if (type == LieType::D && is_very_even(lam) && split == +1) {
            for (const Partition& tau : enumerate_partitions(n / 2))
                tasks.push_back({lam, split, {}, 0, tau, true});
        }
    }

    auto worker = [&](int idx) -> CaseResult {
        const Task& task = tasks[idx];
        const NilpotentLabel nl{type, n, task.lambda, task.split};
        if (task.cross) {
            // sum over mu of K_{mu, lambda-half} 2^{l(tau)} chi^mu(tau)
            // equals gr^lambda_{4 tau}(-1)
            const Partition lam_half = very_even_half(task.lambda);
            Int lhs = 0;
            for (const Partition& mu : enumerate_partitions(lam_half.size()))
                lhs += kostka_number(mu, lam_half) * sym_char(mu, task.tau);
            lhs *= pow2(task.tau.length());
            const Int rhs = green_at(task.lambda, scale(4, task.tau), -1);
            return compare_values(nl.str(), "tau=" + task.tau.str(), Rat(lhs), Rat(rhs));
        }
        const ClassFunction total = total_char(nl);
        const ClassLabel cl{task.rho, {}, task.branch};
        const Rat lhs = total.at(cl);
        const Rat rhs = Rat(green_value(nl, task.rho, task.branch));
        return compare_values(nl.str(), "class=" + cl.str(family_of(type)), lhs, rhs);
    };
    rep.cases = run_cases(jobs, static_cast<int>(tasks.size()), worker);
    rep.seconds = elapsed_since(start);
    return rep;
}

// ---------------------------------------------------------------------------
// Difference pairing
// ---------------------------------------------------------------------------

Report verify_difference_pairing(int n, int jobs) {
    const auto start = clock_type::now();
    if (n < 2 || n % 2 != 0) throw Error("difference pairing needs even n >= 2");
    Report rep;
    rep.suite = "difference";
    rep.type = "D";
    rep.n = n;

    const auto halves = enumerate_partitions(n / 2);
    struct Task {
        Partition lam, mu;
        int kind; // 0: pairing with irreducibles, 1: <D_lam, D_mu> = 2<h,h>
    };
    std::vector<Task> tasks;
    for (const Partition& lam : halves)
        for (const Partition& mu : halves) {
            tasks.push_back({lam, mu, 0});
            tasks.push_back({lam, mu, 1});
        }

    auto d_lambda = [&](const Partition& lam_half) {
        const Partition lam = union_parts(scale(2, lam_half), scale(2, lam_half));
        ClassFunction d = d_total(NilpotentLabel{LieType::D, n, lam, +1});
        d -= d_total(NilpotentLabel{LieType::D, n, lam, -1});
        return d;
    };

    auto worker = [&](int idx) -> CaseResult {
        const Task& task = tasks[idx];
        const ClassFunction dl = d_lambda(task.lam);
        if (task.kind == 0) {
            const ClassFunction plus =
                irreducible_char(WeylFamily::D, n, make_d_irr(task.mu, task.mu, +1));
            const ClassFunction minus =
                irreducible_char(WeylFamily::D, n, make_d_irr(task.mu, task.mu, -1));
            const Rat cp = inner(dl, plus);
            const Rat cm = inner(dl, minus);
            const Rat want = Rat(kostka_number(task.mu, task.lam));
            CaseResult cr = compare_values("D_" + task.lam.str(), "mu=" + task.mu.str(), cp, want);
            if (cr.pass && cm != -want) {
                cr.pass = false;
                cr.witness = "minus component";
                cr.lhs = rat_str(cm);
                cr.rhs = rat_str(Rat(-want));
            }
            return cr;
        }
        const Rat lhs = inner(dl, d_lambda(task.mu));
        const IntPoly hh = scalar(h_to_schur(task.lam), h_to_schur(task.mu));
        return compare_values("D_" + task.lam.str(), "D_" + task.mu.str(), lhs,
                              Rat(2 * hh.coeff(0)));
    };
    rep.cases = run_cases(jobs, static_cast<int>(tasks.size()), worker);

    // unitriangularity of the pairing matrix in dominance order
    for (const Partition& lam : halves) {
        const ClassFunction dl = d_lambda(lam);
        for (const Partition& mu : halves) {
            const Rat m = inner(dl, irreducible_char(WeylFamily::D, n, make_d_irr(mu, mu, +1)));
            CaseResult cr;
            cr.lambda = "D_" + lam.str();
            cr.param = "triangular mu=" + mu.str();
            cr.pass = (m == 0 || dominance_geq(mu, lam)) && (mu != lam || m == 1);
            if (!cr.pass) cr.lhs = rat_str(m);
            rep.cases.push_back(cr);
        }
    }
    rep.seconds = elapsed_since(start);
    return rep;
}

// ---------------------------------------------------------------------------
// Triangularity
// ---------------------------------------------------------------------------

Report verify_triangularity(LieType type, int n, int jobs) {
    const auto start = clock_type::now();
    Report rep;
    rep.suite = "triangularity";
    rep.type = to_string(type);
    rep.n = n;
    if (type == LieType::A) throw InvalidParabolic("triangularity covers types B, C, D");

    const auto labels = enumerate_jordan_types(type, n);
    auto worker = [&](int idx) -> CaseResult {
        const auto& [lam, split] = labels[idx];
        const NilpotentLabel nl{type, n, lam, split};
        const ClassFunction total = total_char(nl);
        CaseResult cr;
        cr.lambda = nl.str();
        cr.param = "";
        cr.pass = true;
        for (const auto& [irr, mult] : decompose(total)) {
            if (mult == 0) continue;
            for (const Partition& mu :
                 springer_label_preimages(type, lie_size(type, n), irr)) {
                if (lam.part(1) > mu.part(1)) {
                    cr.pass = false;
                    cr.witness = irr.str(family_of(type));
                    cr.lhs = "lambda_1=" + std::to_string(lam.part(1));
                    cr.rhs = "mu=" + mu.str();
                    return cr;
                }
            }
        }
        return cr;
    };
    rep.cases = run_cases(jobs, static_cast<int>(labels.size()), worker);
    rep.seconds = elapsed_since(start);
    return rep;
}

// ---------------------------------------------------------------------------
// Orthogonality and table structure
// ---------------------------------------------------------------------------

Report verify_orthogonality(LieType type, int n) {
    const auto start = clock_type::now();
    Report rep;
    rep.suite = "orthogonality";
    rep.type = to_string(type);
    rep.n = n;
    const WeylFamily fam = family_of(type);

    auto push = [&](const std::string& what, bool ok, std::string detail = "") {
        CaseResult cr;
        cr.lambda = what;
        cr.pass = ok;
        cr.witness = std::move(detail);
        rep.cases.push_back(cr);
    };

    try {
        const WeylTable& t = weyl_table(fam, n); // D gate runs here
        const size_t m = t.irreps.size();
        bool rows = true, cols = true;
        for (size_t i = 0; i < m && rows; ++i)
            for (size_t j = i; j < m && rows; ++j) {
                Int acc = 0;
                for (size_t c = 0; c < m; ++c)
                    acc += t.classes[c].class_size * t.chi[i][c] * t.chi[j][c];
                rows = acc == (i == j ? t.order : Int(0));
            }
        push("row-orthogonality", rows);
        for (size_t c = 0; c < m && cols; ++c)
            for (size_t d = c; d < m && cols; ++d) {
                Int acc = 0;
                for (size_t i = 0; i < m; ++i) acc += t.chi[i][c] * t.chi[i][d];
                cols = acc == (c == d ? t.classes[c].centralizer_order : Int(0));
            }
        push("column-orthogonality", cols);
        Int sq = 0;
        const int id = t.cindex(ClassLabel{Partition(std::vector<int>(n, 1)), {}, 0});
        for (size_t i = 0; i < m; ++i) sq += t.chi[i][id] * t.chi[i][id];
        push("sum-of-squares", sq == t.order, "sum=" + to_dec(sq));

        if (fam == WeylFamily::D) {
            const ClassFunction one = ClassFunction::trivial(WeylFamily::A, n);
            const ClassFunction ind_plus = induce_from_symmetric(fam, n, one, +1);
            const ClassFunction ind_minus = induce_from_symmetric(fam, n, one, -1);
            bool pinned = true;
            std::string bad;
            for (const IrrLabel& ir : t.irreps) {
                if (ir.split != +1) continue;
                const IrrLabel neg{ir.alpha, ir.beta, -1};
                if (inner(ind_plus, irreducible_char(fam, n, neg)) != 0 ||
                    inner(ind_minus, irreducible_char(fam, n, ir)) != 0) {
                    pinned = false;
                    bad = ir.str(fam);
                    break;
                }
            }
            push("sign-pinning", pinned, bad);
        }
    } catch (const Error& e) {
        push("table-construction", false, e.what());
    }
    rep.seconds = elapsed_since(start);
    return rep;
}

// ---------------------------------------------------------------------------
// Symmetric function identities
// ---------------------------------------------------------------------------

Report verify_symfunc_identities(int max_size, int jobs) {
    const auto start = clock_type::now();
    Report rep;
    rep.suite = "symfunc-identities";
    rep.n = max_size;

    struct Task {
        int kind; // 0 LLT, 1 Q'(k,k), 2 domino pairing, 3 skew identity, 4 adjunction
        Partition a, b;
        int k;
    };
    std::vector<Task> tasks;
    // (a) LLT factorization at t = -1
    for (int k = 1; 2 * k <= max_size; ++k)
        for (int m = 0; m + 2 * k <= max_size; ++m)
            for (const Partition& lam : enumerate_partitions(m)) tasks.push_back({0, lam, {}, k});
    // (b) Q'_{(k,k)}(-1) = (-1)^k s_k[p_2]
    for (int k = 1; k <= 6; ++k) tasks.push_back({1, {}, {}, k});
    // (c) domino pairing, |nu| <= 10
    for (int nn = 2; nn <= 10; ++nn)
        for (const Partition& nu : enumerate_partitions(nn))
            for (int m = nn % 2; m < nn; m += 2)
                for (const Partition& mu : enumerate_partitions(m))
                    if (contains(nu, mu)) tasks.push_back({2, nu, mu, (nn - m) / 2});
    // (d) skew identity for valid Jordan types, |lambda| <= 10
    for (int m = 2; m <= 10; ++m) {
        for (const Partition& lam : enumerate_partitions(m)) {
            const bool valid = (m % 2 == 1 && valid_jordan_type(LieType::B, (m - 1) / 2, lam)) ||
                               (m % 2 == 0 && (valid_jordan_type(LieType::C, m / 2, lam) ||
                                               valid_jordan_type(LieType::D, m / 2, lam)));
            if (!valid) continue;
            for (int k = 1; 2 * k <= m; ++k) tasks.push_back({3, lam, {}, k});
        }
    }
    // (e) Frobenius/Verschiebung adjunction on Schur pairs, degrees <= 8
    for (int m = 1; 2 * m <= 8; ++m)
        for (const Partition& lam : enumerate_partitions(m))
            for (const Partition& mu : enumerate_partitions(2 * m)) tasks.push_back({4, lam, mu, 0});

    auto worker = [&](int idx) -> CaseResult {
        const Task& task = tasks[idx];
        CaseResult cr;
        switch (task.kind) {
            case 0: {
                const Partition big = union_parts(task.a, Partition{task.k, task.k});
                cr.lambda = big.str();
                cr.param = "llt k=" + std::to_string(task.k);
                cr.pass = qprime_at(big, -1) ==
                          multiply(qprime_at(task.a, -1), qprime_at(Partition{task.k, task.k}, -1));
                break;
            }
            case 1: {
                cr.lambda = Partition{task.k, task.k}.str();
                cr.param = "qkk";
                SymFunc rhs = plethysm_p2(SymFunc::schur(Partition{task.k}));
                if (task.k % 2 != 0) rhs = -rhs;
                cr.pass = qprime_at(Partition{task.k, task.k}, -1) == rhs;
                break;
            }
            case 2: {
                cr.lambda = task.a.str() + "/" + task.b.str();
                cr.param = "domino k=" + std::to_string(task.k);
                const SkewShape shape(task.a, task.b);
                const int eps2 = two_sign(shape);
                const SymFunc lhs = multiply(plethysm_p2(SymFunc::schur(Partition{task.k})),
                                             SymFunc::schur(task.b));
                const IntPoly pairing = scalar(lhs, SymFunc::schur(task.a));
                const Int count = column_disjoint_domino_tilings(shape);
                if (eps2 == 0)
                    cr.pass = pairing.is_zero() && count == 0;
                else
                    cr.pass = IntPoly(Int(eps2)) * pairing == IntPoly(count);
                if (!cr.pass) {
                    cr.lhs = pairing.str();
                    cr.rhs = to_dec(count);
                }
                break;
            }
            case 3: {
                cr.lambda = task.a.str();
                cr.param = "skew 2k=" + std::to_string(2 * task.k);
                SymFunc lhs = qprime_at(task.a, -1);
                if (sign_eps(task.a) < 0) lhs = -lhs;
                lhs = skew_by_p(2 * task.k, lhs);
                SymFunc rhs = SymFunc::zero(task.a.size() - 2 * task.k);
                for (const RTerm& t : restriction_terms(task.a, task.k)) {
                    Int c = t.coeff * sign_eps(t.replaced);
                    if (t.extra_parity % 2 != 0) c = -c;
                    SymFunc term = qprime_at(t.replaced, -1);
                    term *= IntPoly(c);
                    rhs += term;
                }
                cr.pass = lhs == rhs;
                break;
            }
            case 4: {
                cr.lambda = task.a.str();
                cr.param = "adjunction mu=" + task.b.str();
                const IntPoly l =
                    scalar(plethysm_p2(SymFunc::schur(task.a)), SymFunc::schur(task.b));
                const IntPoly r = scalar(SymFunc::schur(task.a), verschiebung(SymFunc::schur(task.b)));
                cr.pass = l == r;
                if (!cr.pass) {
                    cr.lhs = l.str();
                    cr.rhs = r.str();
                }
                break;
            }
        }
        return cr;
    };
    rep.cases = run_cases(jobs, static_cast<int>(tasks.size()), worker);
    rep.seconds = elapsed_since(start);
    return rep;
}

// ---------------------------------------------------------------------------
// Green / Kostka recursions
// ---------------------------------------------------------------------------

namespace {

std::vector<Partition> bcd_valid_partitions(int size) {
    std::vector<Partition> out;
    for (const Partition& lam : enumerate_partitions(size)) {
        const bool valid = (size % 2 == 1 && valid_jordan_type(LieType::B, (size - 1) / 2, lam)) ||
                           (size % 2 == 0 && (valid_jordan_type(LieType::C, size / 2, lam) ||
                                              valid_jordan_type(LieType::D, size / 2, lam)));
        if (valid) out.push_back(lam);
    }
    return out;
}

} // namespace

Report verify_green_recursion(int max_size, int jobs) {
    const auto start = clock_type::now();
    Report rep;
    rep.suite = "green-recursion";
    rep.n = max_size;

    struct Task {
        Partition lambda, rho;
        int k;
    };
    std::vector<Task> tasks;
    for (int size = 2; size <= max_size; ++size)
        for (const Partition& lam : bcd_valid_partitions(size))
            for (int k = 1; 2 * k <= size; ++k)
                for (const Partition& rho : enumerate_partitions(size - 2 * k))
                    tasks.push_back({lam, rho, k});

    auto worker = [&](int idx) -> CaseResult {
        const Task& task = tasks[idx];
        const Partition full = union_parts(task.rho, Partition{2 * task.k});
        const Int lhs = green_at(task.lambda, full, -1);
        Int rhs = 0;
        for (const RTerm& t : restriction_terms(task.lambda, task.k))
            rhs += t.coeff * green_at(t.replaced, task.rho, -1);
        return compare_values(task.lambda.str(),
                              "k=" + std::to_string(task.k) + ",rho=" + task.rho.str(), Rat(lhs),
                              Rat(rhs));
    };
    rep.cases = run_cases(jobs, static_cast<int>(tasks.size()), worker);
    rep.seconds = elapsed_since(start);
    return rep;
}

Report verify_kostka_recursion(int max_size, int jobs) {
    const auto start = clock_type::now();
    Report rep;
    rep.suite = "kostka-recursion";
    rep.n = max_size;

    struct Task {
        Partition lambda, nu;
        int k;
    };
    std::vector<Task> tasks;
    for (int size = 2; size <= max_size; ++size)
        for (const Partition& lam : bcd_valid_partitions(size))
            for (int k = 1; 2 * k <= size; ++k)
                for (const Partition& nu : enumerate_partitions(size - 2 * k))
                    tasks.push_back({lam, nu, k});

    auto worker = [&](int idx) -> CaseResult {
        const Task& task = tasks[idx];
        const int size = task.lambda.size();
        const KostkaTable& kt = kostka_table(size);
        const int li = kt.index.at(task.lambda);
        Int lhs = 0;
        for (const StripResult& sr : border_strips_add(task.nu, 2 * task.k)) {
            const Int k = kt.at_minus_one[kt.index.at(sr.shape)][li];
            lhs += sr.height % 2 == 0 ? k : -k;
        }
        lhs *= sign_eps(task.lambda);
        Int rhs = 0;
        for (const RTerm& t : restriction_terms(task.lambda, task.k)) {
            const KostkaTable& sub = kostka_table(t.replaced.size());
            rhs += t.coeff * sign_eps(t.replaced) *
                   sub.at_minus_one[sub.index.at(task.nu)][sub.index.at(t.replaced)];
        }
        return compare_values(task.lambda.str(),
                              "k=" + std::to_string(task.k) + ",nu=" + task.nu.str(), Rat(lhs),
                              Rat(rhs));
    };
    rep.cases = run_cases(jobs, static_cast<int>(tasks.size()), worker);
    rep.seconds = elapsed_since(start);
    return rep;
}

Report verify_structure(LieType type, int n, int jobs) {
    const auto start = clock_type::now();
    Report rep;
    rep.suite = "structure";
    rep.type = to_string(type);
    rep.n = n;
    const auto labels = enumerate_jordan_types(type, n);

    auto worker = [&](int idx) -> CaseResult {
        const auto& [lam, split] = labels[idx];
        const NilpotentLabel nl{type, n, lam, split};
        const ClassFunction total = total_char(nl);
        CaseResult cr;
        cr.lambda = nl.str();
        cr.pass = true;
        const auto decomp = decompose(total);
        for (const auto& [irr, mult] : decomp) {
            Rat m = mult;
            m.canonicalize();
            if (m.get_den() != 1 || m < 0) {
                cr.pass = false;
                cr.param = "positivity";
                cr.witness = irr.str(family_of(type));
                cr.lhs = rat_str(mult);
                return cr;
            }
        }
        const auto top = springer_label(type, lam, split);
        if (!top || !decomp.count(*top) || decomp.at(*top) < 1) {
            cr.pass = false;
            cr.param = "top-containment";
            return cr;
        }
        if (total.dimension() != Rat(euler_characteristic(nl))) {
            cr.pass = false;
            cr.param = "dimension";
            cr.lhs = rat_str(total.dimension());
            cr.rhs = to_dec(euler_characteristic(nl));
            return cr;
        }
        if (type == LieType::D) {
            // swapping +/- on the orbit and on every split class fixes d_total
            const ClassFunction other =
                total_char(NilpotentLabel{type, n, lam, -split});
            const WeylTable& t = weyl_table(WeylFamily::D, n);
            for (size_t c = 0; c < total.values.size(); ++c) {
                ClassLabel swapped = t.classes[c].label;
                swapped.split = -swapped.split;
                if (total.values[c] != other.at(swapped)) {
                    cr.pass = false;
                    cr.param = "tau-symmetry";
                    cr.witness = t.classes[c].label.str(WeylFamily::D);
                    return cr;
                }
            }
        }
        return cr;
    };
    rep.cases = run_cases(jobs, static_cast<int>(labels.size()), worker);
    rep.seconds = elapsed_since(start);
    return rep;
}

Report conjecture_scan(int max_size) {
    const auto start = clock_type::now();
    Report rep;
    rep.suite = "conjecture-scan";
    rep.n = max_size;
    for (int size = 2; size <= max_size; size += 2) {
        const int n = size / 2;
        // quotient-swapped pairs of partitions of the same size
        std::vector<std::pair<Partition, Partition>> pairs;
        const auto all = enumerate_partitions(size);
        for (const Partition& mu : all) {
            if (!has_minimal_two_core(mu)) continue;
            for (const Partition& nu : all) {
                if (!part_order_less(mu, nu) || !has_minimal_two_core(nu)) continue;
                const auto qm = two_quotient(mu);
                const auto qn = two_quotient(nu);
                if (qm[0] == qn[1] && qm[1] == qn[0]) pairs.emplace_back(mu, nu);
            }
        }
        for (const auto& [lam, split] : enumerate_jordan_types(LieType::D, n)) {
            if (split < 0) continue;
            const KostkaTable& kt = kostka_table(size);
            const int li = kt.index.at(lam);
            for (const auto& [mu, nu] : pairs) {
                const Int a = sign_eps(mu) * kt.at_minus_one[kt.index.at(mu)][li];
                const Int b = sign_eps(nu) * kt.at_minus_one[kt.index.at(nu)][li];
                CaseResult cr;
                cr.lambda = lam.str();
                cr.param = mu.str() + " ~ " + nu.str();
                cr.pass = a == b;
                if (!cr.pass) {
                    cr.lhs = to_dec(a);
                    cr.rhs = to_dec(b);
                }
                rep.cases.push_back(cr);
            }
        }
    }
    rep.seconds = elapsed_since(start);
    return rep;
}

} // namespace sg
