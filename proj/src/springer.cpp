#include "springergreen/springer.hpp"

namespace sg {

namespace {

int rank_of_size(LieType type, int size) {
    switch (type) {
        case LieType::A: return size;
        case LieType::B:
            if (size % 2 == 0) throw InvalidJordanType("type B Jordan types have odd size");
            return (size - 1) / 2;
        case LieType::C:
        case LieType::D:
            if (size % 2 != 0) throw InvalidJordanType("type C/D Jordan types have even size");
            return size / 2;
    }
    return 0;
}

bool all_even(const Partition& p) {
    for (int x : p.parts())
        if (x % 2 != 0) return false;
    return true;
}

} // namespace

void NilpotentLabel::validate() const {
    const int size = lambda.size();
    const int want = type == LieType::A ? n : (type == LieType::B ? 2 * n + 1 : 2 * n);
    if (size != want)
        throw InvalidJordanType("Jordan type " + lambda.str() + " has size " +
                                std::to_string(size) + ", expected " + std::to_string(want) +
                                " for type " + to_string(type) + " rank " + std::to_string(n));
    if (!valid_jordan_type(type, n, lambda)) {
        std::string rule;
        for (int i = 1; i <= lambda.part(1); ++i) {
            const int m = lambda.multiplicity(i);
            const bool bad = (type == LieType::B || type == LieType::D) ? (i % 2 == 0 && m % 2 != 0)
                             : type == LieType::C ? (i % 2 != 0 && m % 2 != 0)
                                                  : false;
            if (bad) {
                rule = ": part " + std::to_string(i) + " has odd multiplicity " + std::to_string(m);
                break;
            }
        }
        throw InvalidJordanType("invalid type " + to_string(type) + " Jordan type " + lambda.str() +
                                rule);
    }
    if (type == LieType::D && is_very_even(lambda)) {
        if (split == 0)
            throw InvalidLabel("very even type D Jordan type " + lambda.str() +
                               " needs a +/- split marker");
    } else if (split != 0) {
        throw InvalidLabel("split marker not allowed for " + to_string(type) + " Jordan type " +
                           lambda.str());
    }
}

std::string NilpotentLabel::str() const {
    std::string out = to_string(type) + std::to_string(n) + ":" + lambda.str();
    if (split > 0) out += "+";
    if (split < 0) out += "-";
    return out;
}

std::optional<IrrLabel> springer_label(LieType type, const Partition& mu, int split) {
    if (type == LieType::A) return IrrLabel{mu, {}, 0};
    if (!has_minimal_two_core(mu)) return std::nullopt;
    const auto [q0, q1] = two_quotient(mu);
    switch (type) {
        case LieType::B: return IrrLabel{q0, q1, 0};
        case LieType::C: return IrrLabel{q1, q0, 0};
        case LieType::D: {
            if ((q0 == q1) != is_very_even(mu))
                throw InternalError("2-quotient symmetry does not match very-evenness for " +
                                    mu.str());
            if (q0 == q1) return make_d_irr(q0, q1, split == 0 ? +1 : split);
            return make_d_irr(q0, q1, 0);
        }
        default: return std::nullopt;
    }
}

std::vector<Partition> springer_label_preimages(LieType type, int size, const IrrLabel& label) {
    if (type == LieType::A) return {label.alpha};
    std::vector<Partition> out;
    for (const Partition& mu : enumerate_partitions(size)) {
        if (!has_minimal_two_core(mu)) continue;
        const auto got = springer_label(type, mu, label.split);
        if (got && *got == label) out.push_back(mu);
    }
    return out;
}

namespace {

// The Kostka-Foulkes expansion of the total character over the
// hyperoctahedral group, without Jordan-type validation (used both for gue
// and, through restriction, for ague).
ClassFunction bc_total_formula(LieType type, const Partition& lambda) {
    const int n = rank_of_size(type, lambda.size());
    const WeylTable& t = weyl_table(WeylFamily::BC, n);
    const KostkaTable& kt = kostka_table(lambda.size());
    const int li = kt.index.at(lambda);
    const int eps_lambda = sign_eps(lambda);
    ClassFunction out = ClassFunction::zero(WeylFamily::BC, n);
    for (size_t mi = 0; mi < kt.parts.size(); ++mi) {
        Int coeff = kt.at_minus_one[mi][li];
        if (coeff == 0) continue;
        const Partition& mu = kt.parts[mi];
        const auto label = springer_label(type, mu);
        if (!label) continue;
        if (eps_lambda * sign_eps(mu) < 0) coeff = -coeff;
        const int ii = t.iindex(*label);
        for (size_t c = 0; c < out.values.size(); ++c) out.values[c] += Rat(coeff) * Rat(t.chi[ii][c]);
    }
    return out;
}

} // namespace

ClassFunction gue(LieType type, const Partition& lambda) {
    if (type != LieType::B && type != LieType::C)
        throw InvalidJordanType("gue is defined for types B and C");
    NilpotentLabel nl{type, rank_of_size(type, lambda.size()), lambda, 0};
    nl.validate();
    return bc_total_formula(type, lambda);
}

ClassFunction ague(const Partition& lambda) {
    const int n = rank_of_size(LieType::D, lambda.size());
    NilpotentLabel nl{LieType::D, n, lambda, is_very_even(lambda) ? +1 : 0};
    nl.validate();
    return restrict_bc_to_d(bc_total_formula(LieType::C, lambda));
}

ClassFunction d_total(const NilpotentLabel& nl) {
    if (nl.type != LieType::D) throw InvalidJordanType("d_total needs a type D label");
    nl.validate();
    ClassFunction half = ague(nl.lambda);
    half *= Rat(1, 2);
    if (!is_very_even(nl.lambda)) return half;

    // Very even case: add the split refinement through difference characters.
    const int n = nl.n;
    const Partition lam_half = very_even_half(nl.lambda);
    const WeylTable& t = weyl_table(WeylFamily::D, n);
    ClassFunction diff = ClassFunction::zero(WeylFamily::D, n);
    for (const Partition& mu_half : enumerate_partitions(n / 2)) {
        const Int k = kostka_number(mu_half, lam_half);
        if (k == 0) continue;
        const int plus = t.iindex(make_d_irr(mu_half, mu_half, +1));
        const int minus = t.iindex(make_d_irr(mu_half, mu_half, -1));
        for (size_t c = 0; c < diff.values.size(); ++c)
            diff.values[c] += Rat(k) * Rat(t.chi[plus][c] - t.chi[minus][c]);
    }
    diff *= Rat(nl.split, 2);
    half += diff;
    return half;
}

ClassFunction total_char(const NilpotentLabel& nl) {
    nl.validate();
    switch (nl.type) {
        case LieType::A: return frobenius_A_inv(qprime_at(nl.lambda, 1));
        case LieType::B:
        case LieType::C: return gue(nl.type, nl.lambda);
        case LieType::D: return d_total(nl);
    }
    throw InvalidJordanType("unknown type");
}

Int green_value(const NilpotentLabel& nl, const Partition& rho, int split_rho) {
    nl.validate();
    if (nl.type != LieType::D && split_rho != 0)
        throw InvalidLabel("split classes only exist in type D");
    switch (nl.type) {
        case LieType::A:
            if (rho.size() != nl.n) throw SizeMismatch("green_value: |rho| != n");
            return green_at(nl.lambda, rho, 1);
        case LieType::B: {
            if (rho.size() != nl.n) throw SizeMismatch("green_value: |rho| != n");
            return green_at(nl.lambda, union_parts(scale(2, rho), Partition{1}), -1);
        }
        case LieType::C: {
            if (rho.size() != nl.n) throw SizeMismatch("green_value: |rho| != n");
            return green_at(nl.lambda, scale(2, rho), -1);
        }
        case LieType::D: {
            if (rho.size() != nl.n) throw SizeMismatch("green_value: |rho| != n");
            const bool rho_even = all_even(rho);
            if (rho_even && split_rho == 0)
                throw InvalidLabel("class (" + rho.str() + ";-) splits: pick a +/- branch");
            if (!rho_even && split_rho != 0)
                throw InvalidLabel("class (" + rho.str() + ";-) does not split");
            const Int gr = green_at(nl.lambda, scale(2, rho), -1);
            if (!is_very_even(nl.lambda) || !rho_even) return to_int(Rat(gr) / 2);
            return nl.split == split_rho ? gr : Int(0);
        }
    }
    throw InvalidJordanType("unknown type");
}

Int euler_characteristic(const NilpotentLabel& nl) {
    nl.validate();
    const Partition ones(std::vector<int>(nl.n, 1));
    switch (nl.type) {
        case LieType::A: return green_at(nl.lambda, ones, 1);
        case LieType::B:
        case LieType::C:
        case LieType::D: return green_value(nl, ones, 0);
    }
    throw InvalidJordanType("unknown type");
}

IntPoly graded_char_A(const Partition& lambda, const Partition& rho) {
    if (lambda.size() != rho.size()) throw SizeMismatch("graded_char_A: |lambda| != |rho|");
    return green(lambda, rho);
}

} // namespace sg
