#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "springergreen/errors.hpp"
#include "springergreen/numeric.hpp"

namespace sg {

enum class LieType { A, B, C, D };

LieType parse_lie_type(const std::string& s);
std::string to_string(LieType t);

// An integer partition: weakly decreasing sequence of positive parts.
// The empty partition is the default value.  Construction normalizes its
// input (sorts descending, drops zeros) and rejects negative entries.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    // Text form "5,3,1"; the empty partition reads/prints as "-".
    static Partition parse(const std::string& text);
    std::string str() const;

    const std::vector<int>& parts() const { return parts_; }
    int size() const;                    // |lambda|
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    // 1-indexed part access; 0 beyond the length.
    int part(int i) const;
    // Multiplicity of i as a part.
    int multiplicity(int i) const;

    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// Canonical order used everywhere a deterministic sequence is needed:
// reverse lexicographic, so (n) comes first among partitions of n.  It is a
// linear extension of dominance on each fixed size.
bool part_order_less(const Partition& a, const Partition& b);

struct PartLess {
    bool operator()(const Partition& a, const Partition& b) const {
        return part_order_less(a, b);
    }
};

struct PairPartLess {
    bool operator()(const std::pair<Partition, Partition>& a,
                    const std::pair<Partition, Partition>& b) const {
        if (a.first != b.first) return part_order_less(a.first, b.first);
        return part_order_less(a.second, b.second);
    }
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

// A skew shape outer/inner; throws Error unless inner is contained in outer.
struct SkewShape {
    Partition outer, inner;
    SkewShape(Partition out, Partition in);
    int size() const { return outer.size() - inner.size(); }
};

// --- basic arithmetic ----------------------------------------------------

Partition conjugate(const Partition& p);
Partition union_parts(const Partition& a, const Partition& b);
Partition scale(int k, const Partition& p);

// lambda<from -> to>: replaces the sub-multiset `from` of parts by `to`
// (zero entries in `to` are dropped).  Throws PartNotPresent.
Partition replace(const Partition& p, const std::vector<int>& from,
                  const std::vector<int>& to);

// b(lambda) = sum (i-1) lambda_i
int weight_b(const Partition& p);
// z_lambda = prod i^{m_i} m_i!
Int z_factor(const Partition& p);
// eps(lambda) = (-1)^{b(lambda)}
int sign_eps(const Partition& p);

// Height of a nonempty skew shape: (#rows with outer_i > inner_i) - 1.
// Throws EmptyShape when outer == inner.
int height(const SkewShape& s);

// --- 2-core / 2-quotient -------------------------------------------------

Partition two_core(const Partition& p);
// (q0, q1) computed from beta-numbers of the smallest even length >= l(p).
std::array<Partition, 2> two_quotient(const Partition& p);
// Minimal 2-core: empty for |p| even, (1) for |p| odd.
bool has_minimal_two_core(const Partition& p);

// 2-sign of a skew shape: 0 if not tileable by dominoes, else (-1)^{#vertical
// dominoes} of any tiling.
int two_sign(const SkewShape& s);

// Number of domino tilings of the shape in which no two dominoes meet the
// same column; equals the count of Yamanouchi domino tableaux of weight (k).
int column_disjoint_domino_tilings(const SkewShape& s);
bool column_disjoint_domino_cover(const SkewShape& s);

// --- border strips -------------------------------------------------------

struct StripResult {
    Partition shape;
    int height = 0;
};

// All mu with mu/nu a connected border strip of size k, with heights,
// in canonical order.
std::vector<StripResult> border_strips_add(const Partition& nu, int k);
// All nu with mu/nu a connected border strip of size k, with heights.
std::vector<StripResult> border_strips_remove(const Partition& mu, int k);

// --- orders --------------------------------------------------------------

// Dominance order; requires |a| == |b| (throws SizeMismatch).
bool dominance_geq(const Partition& a, const Partition& b);
// Cell-wise containment b subset of a.
bool contains(const Partition& a, const Partition& b);

// --- Jordan types --------------------------------------------------------

// A: lambda |- n.  B: lambda |- 2n+1 with even parts of even multiplicity.
// C: lambda |- 2n with odd parts of even multiplicity.  D: lambda |- 2n with
// even parts of even multiplicity.
bool valid_jordan_type(LieType type, int n, const Partition& lambda);
// All parts even and all multiplicities even.
bool is_very_even(const Partition& lambda);
// For very even lambda, the partition m with lambda = 2m cup 2m.
Partition very_even_half(const Partition& lambda);

// --- enumeration ---------------------------------------------------------

std::vector<Partition> enumerate_partitions(int n);

// Jordan types of (type, n) paired with a split marker: 0 except for very
// even type-D partitions which appear twice, as +1 and -1.
std::vector<std::pair<Partition, int>> enumerate_jordan_types(LieType type, int n);

} // namespace sg
