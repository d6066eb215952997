#ifndef ORBICAT_IRREPS_HPP
#define ORBICAT_IRREPS_HPP

#include <string>
#include <vector>

#include "orbicat/hopf.hpp"
#include "orbicat/split.hpp"

namespace orbicat {

// One irreducible module of a Hopf algebra, with its action matrices on the
// chosen basis of the algebra.
struct Irrep {
    std::string label;
    long dim = 0;
    std::vector<Mat> action;            // one dim x dim matrix per algebra basis element
    std::vector<CycScalar> character;   // trace of each action matrix
};

// The simple-module data of a split semisimple Hopf algebra, together with
// the Fourier toolkit used by the embedding layers:
//   * matrix_units[V][i*d+j]: the algebra element acting as E_{ij} on V and
//     as zero on every other simple (coordinates, dim x 1).
//   * dual_functionals[V][i*d+j]: the functional d(V) rho_V(.)_{ji} on the
//     algebra (coordinate row, 1 x dim), biorthogonal to the matrix units:
//     <f_{ij}, e_{kl}> = d(V) when (k,l) = (j,i), and 0 otherwise.
//   * integral: the idempotent two-sided integral of the algebra.
//   * dual_integral: the functional sum_V d(V)/dim * tr rho_V, which is the
//     idempotent integral of the dual algebra.
// Simples are ordered canonically: the trivial module first, then by
// dimension, then by character (deterministic scalar order).
struct RepTheory {
    HopfAlgebra hopf;
    std::vector<Irrep> irreps;
    std::vector<std::vector<Mat>> matrix_units;
    std::vector<std::vector<Mat>> dual_functionals;
    Mat integral;       // dim x 1
    Mat dual_integral;  // 1 x dim

    long simple_count() const { return static_cast<long>(irreps.size()); }
    long dim_of(long v) const { return irreps[v].dim; }
};

// Split the left regular module and assemble the toolkit above.  Throws
// SplitStall if the decomposition cannot be certified and std::runtime_error
// if the algebra is not semisimple (no idempotent integral).
RepTheory rep_theory(const HopfAlgebra& h);

// One simple summand of an explicit module, cut out by the matrix-unit
// transport: inj carries the canonical coordinates of the simple into the
// module, proj * inj = id, and proj * rho(a) * inj is exactly the canonical
// action of the simple.
struct ActionPart {
    long simple = 0;
    Mat inj;   // vdim x d_s
    Mat proj;  // d_s x vdim
};

// Canonical decomposition of explicit action matrices (one per algebra basis
// element) into simple copies.  Deterministic: parts are ordered by simple
// label and, within a label, by the first-pivot echelon basis of the image of
// the (0,0) matrix unit.  Throws if the matrices do not present a module.
std::vector<ActionPart> decompose_action(const RepTheory& rt, const std::vector<Mat>& action);

// Action of a coordinate vector (dim x 1) in the given irrep.
Mat rho_of_vec(const Irrep& v, const Mat& coords);

}  // namespace orbicat

#endif
