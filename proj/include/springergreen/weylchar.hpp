#pragma once

#include <map>
#include <string>
#include <vector>

#include "springergreen/partition.hpp"
#include "springergreen/symfunc.hpp"

namespace sg {

// W(A_{n-1}) = S_n, W(B_n) = W(C_n) = S_n x (Z/2)^n, W(D_n).
enum class WeylFamily { A, BC, D };

WeylFamily family_of(LieType t);
std::string to_string(WeylFamily f);

// Conjugacy class label.  A: cycle type rho (sigma empty).  BC: (rho, sigma).
// D: (rho, sigma) with l(sigma) even; when sigma is empty and rho is even the
// class splits and carries a marker +1/-1.
struct ClassLabel {
    Partition rho, sigma;
    int split = 0;

    bool operator==(const ClassLabel&) const = default;
    std::string str(WeylFamily f) const;
    static ClassLabel parse(const std::string& text, WeylFamily f);
};

struct ClassLabelLess {
    bool operator()(const ClassLabel& a, const ClassLabel& b) const;
};

// Irreducible character label.  A: alpha = lambda.  BC: ordered (alpha, beta).
// D: unordered {alpha, beta} stored with alpha <= beta lexicographically; when
// alpha == beta the marker +1/-1 distinguishes the two components.
struct IrrLabel {
    Partition alpha, beta;
    int split = 0;

    bool operator==(const IrrLabel&) const = default;
    std::string str(WeylFamily f) const;
};

struct IrrLabelLess {
    bool operator()(const IrrLabel& a, const IrrLabel& b) const;
};

IrrLabel make_d_irr(const Partition& a, const Partition& b, int split = 0);

struct ClassData {
    ClassLabel label;
    Int centralizer_order;
    Int class_size;
};

// Full character table of a Weyl group, classes and irreps in canonical
// order.  Irreducible character values are integers.
struct WeylTable {
    WeylFamily family = WeylFamily::A;
    int n = 0;
    Int order;
    std::vector<ClassData> classes;
    std::vector<IrrLabel> irreps;
    std::vector<std::vector<Int>> chi; // chi[irrep][class]
    std::map<ClassLabel, int, ClassLabelLess> class_index;
    std::map<IrrLabel, int, IrrLabelLess> irrep_index;

    int cindex(const ClassLabel& c) const;
    int iindex(const IrrLabel& i) const;
};

// Memoized table access.  A and BC allow n >= 0; D requires n >= 2.  Building
// a D table runs the orthogonality and sign-pinning gate and throws on
// failure.
const WeylTable& weyl_table(WeylFamily f, int n);

// Rank-validated accessors (n >= 1; D needs n >= 2).
Int group_order(LieType t, int n);
std::vector<ClassData> classes(LieType t, int n);

// Both orthogonality relations hold exactly.
bool verify_table_orthogonal(WeylFamily f, int n);

// Exact rational class function, values aligned with the canonical class
// order of weyl_table(family, n).
struct ClassFunction {
    WeylFamily family = WeylFamily::A;
    int n = 0;
    std::vector<Rat> values;

    static ClassFunction zero(WeylFamily f, int n);
    static ClassFunction trivial(WeylFamily f, int n);

    const Rat& at(const ClassLabel& c) const;
    Rat& at(const ClassLabel& c);
    Rat dimension() const; // value at the identity class

    ClassFunction& operator+=(const ClassFunction& o);
    ClassFunction& operator-=(const ClassFunction& o);
    ClassFunction& operator*=(const Rat& c);
    friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
    friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }

    bool operator==(const ClassFunction&) const = default;
};

// Row of the character table as a class function.
ClassFunction irreducible_char(WeylFamily f, int n, const IrrLabel& label);

Rat inner(const ClassFunction& f, const ClassFunction& g);
std::map<IrrLabel, Rat, IrrLabelLess> decompose(const ClassFunction& f);

// chi^{(alpha,beta)} of W(BC_n) via the p_{(rho,sigma)} expansion.
ClassFunction bc_char(int n, const Partition& alpha, const Partition& beta);
// Irreducible character of W(D_n).
ClassFunction d_char(int n, const IrrLabel& label);

// --- induction and restriction --------------------------------------------

// Values of f on the parabolic S_k x W'(n-k), indexed by
// [class of S_k][class of W'].
using ProductValues = std::vector<std::vector<Rat>>;

ProductValues restrict_product(const ClassFunction& f, int k);
// Frobenius induction from S_k x W'(n-k); f_sym has family A and rank k.
ClassFunction induce_product(const ClassFunction& f_sym, const ClassFunction& f_sub,
                             WeylFamily target);
Rat inner_product_values(const ProductValues& a, const ProductValues& b, int k,
                         WeylFamily f, int n_sub);

// Induction from the symmetric parabolic S_m <= W.  For family D with m == n
// the marker selects S_{n+} (+1) or S_{n-} (-1).
ClassFunction induce_from_symmetric(WeylFamily f, int n, const ClassFunction& f_sym,
                                    int marker = 0);

// Restriction of a BC class function to the index-two subgroup W(D_n).
ClassFunction restrict_bc_to_d(const ClassFunction& f);

// Res^W_{c.W'} where c is a k-cycle: class function on W' of the same family.
// For family D this requires n - k >= 2; use restrict_coset_value otherwise.
ClassFunction restrict_coset(const ClassFunction& f, int k);
// f at the fused class of the bare k-cycle, i.e. ((k) cup (1^{n-k}), empty);
// `which` picks the split branch when that class splits (D, k = n even).
Rat restrict_coset_value(const ClassFunction& f, int k, int which = 0);

// --- Frobenius characteristic maps ------------------------------------------

SymFunc frobenius_A(const ClassFunction& f);
ClassFunction frobenius_A_inv(const SymFunc& F);
SymFunc2 frobenius_BC(const ClassFunction& f);
ClassFunction frobenius_BC_inv(const SymFunc2& F);

} // namespace sg
