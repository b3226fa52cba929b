#pragma once

#include <string>
#include <vector>

#include "springergreen/springer.hpp"

namespace sg {

struct CaseResult {
    std::string lambda;  // primary label of the case
    std::string param;   // secondary parameter (k, rho, ...)
    bool pass = false;
    std::string witness; // first failing class, empty on pass
    std::string lhs, rhs;
};

struct Report {
    std::string suite;
    std::string type;
    int n = 0;
    std::vector<CaseResult> cases;
    double seconds = 0;

    bool all_pass() const;
    int fail_count() const;
    std::string summary() const;
};

// Restriction identities of the total Springer characters (k-cycle coset).
Report verify_restriction(LieType type, int n, int jobs = 1);
// Induction identities gue/ague of lambda cup (k,k).
Report verify_induction(LieType type, int n, int jobs = 1);
// Total characters evaluated on the classes (rho,empty)[+/-] agree with
// their Green-polynomial form.
Report verify_main_consistency(LieType type, int n, int jobs = 1);
// Difference-character pairing <D_lambda, chi^{(2mu cup 2mu)+/-}> = +/-K.
Report verify_difference_pairing(int n, int jobs = 1);
// lambda_1 <= mu_1 for every constituent of the total character.
Report verify_triangularity(LieType type, int n, int jobs = 1);
// Character table health: orthogonality, sum of squared dimensions, and the
// sign pinning of the type D split characters.
Report verify_orthogonality(LieType type, int n);
// Symmetric function identity bundle (factorizations at t = -1, domino
// pairing, the skew identity, plethysm/Verschiebung adjunction).
Report verify_symfunc_identities(int max_size = 12, int jobs = 1);
// Green / Kostka border-strip recursions over all valid Jordan types.
Report verify_green_recursion(int max_size = 12, int jobs = 1);
Report verify_kostka_recursion(int max_size = 12, int jobs = 1);
// Structure of the total Springer characters: nonnegative integer
// multiplicities, identity value = Euler characteristic, containment of the
// Springer label, and tau-symmetry of the type D split pairs.
Report verify_structure(LieType type, int n, int jobs = 1);
// Exploratory scan of the quotient-swap conjecture for K(-1); failures are
// reported, not asserted.
Report conjecture_scan(int max_size = 12);

} // namespace sg
