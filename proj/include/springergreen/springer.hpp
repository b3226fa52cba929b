#pragma once

#include <optional>
#include <string>
#include <vector>

#include "springergreen/weylchar.hpp"

namespace sg {

// A nilpotent orbit: Jordan type plus the +/- decoration for very even
// type D partitions.
struct NilpotentLabel {
    LieType type = LieType::A;
    int n = 0;
    Partition lambda;
    int split = 0;

    // Throws InvalidJordanType (multiplicity/size violations, with the rule
    // named) or InvalidLabel (split marker misuse).
    void validate() const;
    std::string str() const;
};

// Springer correspondence label of the orbit; nullopt is the zero marker for
// partitions whose 2-core is not minimal.
std::optional<IrrLabel> springer_label(LieType type, const Partition& mu, int split = 0);

// Partitions of the given size with minimal 2-core whose Springer label is
// `label` (one for B/C, one or two for D).
std::vector<Partition> springer_label_preimages(LieType type, int size, const IrrLabel& label);

// sum over mu of eps(lambda) eps(mu) K_{mu,lambda}(-1) chi^mu as a class
// function on W(BC_n); lambda must be a valid B/C Jordan type.
ClassFunction gue(LieType type, const Partition& lambda);

// The doubled type-D character: restriction of the type-C gue formula to
// W(D_n).  Defined for every valid D Jordan type lambda |- 2n.
ClassFunction ague(const Partition& lambda);

// ch of the total Springer representation for a type-D orbit.
ClassFunction d_total(const NilpotentLabel& nl);

// Total Springer character for any type (A uses Kostka numbers directly).
ClassFunction total_char(const NilpotentLabel& nl);

// Green-polynomial value of the total character at the class
// (rho, empty)[split_rho].
Int green_value(const NilpotentLabel& nl, const Partition& rho, int split_rho = 0);

Int euler_characteristic(const NilpotentLabel& nl);

// Graded character value sum_i (-t^{1/2})^i ch H^i(w_rho) for type A,
// presented as gr^lambda_rho(t).
IntPoly graded_char_A(const Partition& lambda, const Partition& rho);

} // namespace sg
