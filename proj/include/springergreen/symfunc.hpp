#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "springergreen/intpoly.hpp"
#include "springergreen/partition.hpp"

namespace sg {

// Element of the degree-n homogeneous part of the symmetric function ring,
// stored in the Schur basis with IntPoly coefficients.  Zero coefficients are
// never stored.
struct SymFunc {
    int degree = 0;
    std::map<Partition, IntPoly, PartLess> terms;

    static SymFunc zero(int degree) { return SymFunc{degree, {}}; }
    static SymFunc unit() { return schur({}); }
    static SymFunc schur(const Partition& p, IntPoly c = 1);

    void add_term(const Partition& p, IntPoly c);
    const IntPoly& coeff(const Partition& p) const;
    bool is_zero() const { return terms.empty(); }

    SymFunc& operator+=(const SymFunc& o);
    SymFunc& operator-=(const SymFunc& o);
    SymFunc& operator*=(const IntPoly& c);
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    friend SymFunc operator*(SymFunc a, const IntPoly& c) { return a *= c; }
    SymFunc operator-() const;

    bool operator==(const SymFunc&) const = default;
    std::string str() const;
};

// Element of (Lambda(x) tensor Lambda(y))^degree in the s_a(x) s_b(y) basis.
struct SymFunc2 {
    int degree = 0;
    std::map<std::pair<Partition, Partition>, IntPoly, PairPartLess> terms;

    static SymFunc2 zero(int degree) { return SymFunc2{degree, {}}; }
    static SymFunc2 unit();

    void add_term(const Partition& a, const Partition& b, IntPoly c);
    const IntPoly& coeff(const Partition& a, const Partition& b) const;
    bool is_zero() const { return terms.empty(); }

    SymFunc2& operator+=(const SymFunc2& o);
    SymFunc2& operator-=(const SymFunc2& o);
    SymFunc2& operator*=(const IntPoly& c);
    friend SymFunc2 operator+(SymFunc2 a, const SymFunc2& b) { return a += b; }
    friend SymFunc2 operator-(SymFunc2 a, const SymFunc2& b) { return a -= b; }

    bool operator==(const SymFunc2&) const = default;
};

// --- symmetric group characters (Murnaghan-Nakayama) ----------------------

// chi^mu(w_rho) for mu, rho |- n.
Int sym_char(const Partition& mu, const Partition& rho);

struct CharTableA {
    int n = 0;
    std::vector<Partition> parts;                 // canonical order
    std::vector<std::vector<Int>> chi;            // chi[mu index][rho index]
    std::map<Partition, int, PartLess> index;
    const Int& at(const Partition& mu, const Partition& rho) const;
};

const CharTableA& a_char_table(int n);

// p_rho in the Schur basis.
SymFunc schur_expand_p(const Partition& rho);
// h_lambda in the Schur basis.
SymFunc h_to_schur(const Partition& lambda);

// --- Kostka-Foulkes ------------------------------------------------------

// Charge statistic of a word whose content is a partition.
int charge(const std::vector<int>& word);

struct KostkaTable {
    int n = 0;
    std::vector<Partition> parts;                 // canonical order
    std::vector<std::vector<IntPoly>> poly;       // poly[mu][lambda]
    std::vector<std::vector<Int>> at_one;         // Kostka numbers
    std::vector<std::vector<Int>> at_minus_one;
    std::map<Partition, int, PartLess> index;
    const IntPoly& at(const Partition& mu, const Partition& lambda) const;
};

const KostkaTable& kostka_table(int n);

IntPoly kostka_foulkes(const Partition& mu, const Partition& lambda);
Int kostka_number(const Partition& mu, const Partition& lambda);

// --- Hall-Littlewood and Green polynomials --------------------------------

// Q'_lambda(t) = sum_mu K_{mu,lambda}(t) s_mu.
SymFunc qprime(const Partition& lambda);
// Q'_lambda evaluated at t = v (constant coefficients).
SymFunc qprime_at(const Partition& lambda, const Int& v);
// P_lambda(t) in the Schur basis.
SymFunc hall_littlewood_P(const Partition& lambda);

// X^lambda_rho(t) = <p_rho, Q'_lambda(t)>.
IntPoly green_X(const Partition& lambda, const Partition& rho);
// gr^lambda_rho(t) = t^{b(lambda)} X^lambda_rho(1/t).
IntPoly green(const Partition& lambda, const Partition& rho);
Int green_at(const Partition& lambda, const Partition& rho, const Int& v);

// --- structure operations --------------------------------------------------

IntPoly scalar(const SymFunc& f, const SymFunc& g);
SymFunc omega(const SymFunc& f);
SymFunc multiply(const SymFunc& f, const SymFunc& g);
// s_{lambda/mu} in the Schur basis.
SymFunc skew_schur(const Partition& lambda, const Partition& mu);
Int lr_coeff(const Partition& lambda, const Partition& mu, const Partition& nu);

// f[p_2]: doubles the degree.
SymFunc plethysm_p2(const SymFunc& f);
// Verschiebung, adjoint of f -> f[p_2]; zero on odd degrees.
SymFunc verschiebung(const SymFunc& f);
// k * d/dp_k, the adjoint of multiplication by p_k.
SymFunc skew_by_p(int k, const SymFunc& f);

// Substitute t = v in all coefficients.
SymFunc evaluate_t(const SymFunc& f, const Int& v);

// --- two-variable-set operations ------------------------------------------

SymFunc2 sf2_from_pair(const Partition& alpha, const Partition& beta, IntPoly c = 1);
// p_{(rho,sigma)} = prod (p_{rho_i}(x)+p_{rho_i}(y)) prod (p_{sigma_j}(x)-p_{sigma_j}(y)).
SymFunc2 sf2_p(const Partition& rho, const Partition& sigma);
// s_a(x)s_b(y) -> s_a s_b.
SymFunc sf2_nabla(const SymFunc2& F);
// f(x) -> f(x, y).
SymFunc2 sf2_delta(const SymFunc& f);
IntPoly sf2_scalar(const SymFunc2& F, const SymFunc2& G);

} // namespace sg
