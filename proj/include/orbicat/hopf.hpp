#ifndef ORBICAT_HOPF_HPP
#define ORBICAT_HOPF_HPP

#include <optional>
#include <string>
#include <vector>

#include "orbicat/group.hpp"
#include "orbicat/matrix.hpp"

namespace orbicat {

// A finite-dimensional Hopf algebra over a cyclotomic field, presented by its
// structure maps on a fixed basis.  Tensor-square indices are row-major:
// basis vector i (x) j of A (x) A sits at index i*dim + j.
struct HopfAlgebra {
    std::string name;
    long dim = 0;
    const CycField* field = nullptr;  // ambient field used for splitting
    std::vector<std::string> labels;

    Mat m;   // multiplication  A(x)A -> A      (dim x dim^2)
    Mat u;   // unit            k -> A          (dim x 1)
    Mat cm;  // comultiplication A -> A(x)A     (dim^2 x dim)
    Mat cu;  // counit          A -> k          (1 x dim)
    Mat s;   // antipode        A -> A          (dim x dim)

    // Left multiplication by basis element i, as a dim x dim matrix.
    Mat left_mult(long i) const;
    // Product of two coordinate vectors (dim x 1 each).
    Mat multiply(const Mat& a, const Mat& b) const;
    // Coordinates of basis products / coproducts without forming big tensors.
    Mat basis_product(long i, long j) const;  // dim x 1
};

// One named structural identity, with a witness for the first failure.
struct AxiomCheck {
    std::string name;
    bool ok;
    std::string witness;  // empty when ok
};

// Every defining identity, in a fixed order: associativity, unit laws,
// coassociativity, counit laws, compatibility of product and coproduct, and
// both antipode identities.
std::vector<AxiomCheck> hopf_axioms(const HopfAlgebra& h);
bool hopf_ok(const HopfAlgebra& h);

// The idempotent two-sided integral (a b = counit(b) a for all b), normalized
// to counit 1; empty when none exists (non-semisimple input).
std::optional<Mat> integral_element(const HopfAlgebra& h);

// Solve the antipode identities for S given the rest of the structure; empty
// when no (unique) solution exists.
std::optional<Mat> solve_antipode(const HopfAlgebra& h);

// Presets -------------------------------------------------------------------

HopfAlgebra group_hopf(const FiniteGroup& g);
HopfAlgebra function_hopf(const FiniteGroup& g);  // functions on g, delta basis
HopfAlgebra dual_hopf(const HopfAlgebra& h);      // transpose all structure
HopfAlgebra kac_paljutkin8();

// Parse "group:S3", "function:Z6", "kp8", ...; empty on unknown names.
std::optional<HopfAlgebra> hopf_preset(const std::string& name);
std::vector<std::string> hopf_preset_names();

}  // namespace orbicat

#endif
