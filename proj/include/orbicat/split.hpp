#ifndef ORBICAT_SPLIT_HPP
#define ORBICAT_SPLIT_HPP

#include <stdexcept>
#include <vector>

#include "orbicat/factor.hpp"
#include "orbicat/matrix.hpp"

namespace orbicat {

// Raised when the deterministic sweep cannot certify a decomposition.  With a
// large enough ambient field this does not happen for semisimple input; the
// error is kept honest rather than papered over.
class SplitStall : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A finite-dimensional module over a based algebra, presented as the list of
// action matrices of the algebra's basis elements (all square, same size).
struct ActionModule {
    std::vector<Mat> action;
    long dim() const { return action.empty() ? 0 : action[0].rows(); }
};

// Basis of the intertwiner space {T : T a_t = b_t T for every t}; each T maps
// a into b, so T is dim(b) x dim(a).  Deterministic echelon basis.
std::vector<Mat> module_homs(const ActionModule& a, const ActionModule& b);
long hom_dim(const ActionModule& a, const ActionModule& b);

struct SubmodulePiece {
    Mat inj;          // dim x d, the inclusion of the summand
    Mat proj;         // d x dim, with proj * inj = I_d
    ActionModule mod; // the restricted action
};

// Split a module over its commutant into irreducible summands, working over
// the stated ambient field.  Deterministic: the candidate sweep, the factor
// order, and the kernel bases are all fixed.  Throws SplitStall when no
// separating commutant element is found and irreducibility cannot be
// certified.
std::vector<SubmodulePiece> decompose_module(const ActionModule& m, const CycField* field);

// For irreducible modules: isomorphic iff a nonzero intertwiner exists.
bool modules_isomorphic(const ActionModule& a, const ActionModule& b);

}  // namespace orbicat

#endif
