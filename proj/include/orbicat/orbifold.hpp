#ifndef ORBICAT_ORBIFOLD_HPP
#define ORBICAT_ORBIFOLD_HPP

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "orbicat/bimodule.hpp"

namespace orbicat {

// --- fusion rings -----------------------------------------------------------

// Square-root bookkeeping that never leaves the rationals: for q >= 0,
// sqrt(q) = root * sqrt(squarefree) with squarefree a positive squarefree
// integer.  Sums of such roots are compared class by class.
struct ExactSqrt {
    Rational root;
    long squarefree = 1;
};
ExactSqrt exact_sqrt(const Rational& q);

// The based ring of a finitely semisimple tensor category: integer structure
// constants over stable labels, with every dimension statement carried as an
// exact squared rational.
struct FusionRing {
    std::vector<std::string> labels;
    long unit = 0;
    std::vector<std::vector<std::vector<long>>> n;  // n[i][j][k]
    std::vector<Rational> dim_sq;                   // squared dimension per label

    long rank() const { return static_cast<long>(labels.size()); }
    long coeff(long i, long j, long k) const { return n[i][j][k]; }

    // Every product of two labels is a single label with coefficient one.
    bool is_pointed() const;
    long pointed_product(long i, long j) const;  // throws when not pointed there
    long dual_of(long i) const;  // the unique k with n[i][k][unit] == 1

    // Unit rows, associativity of the structure constants, existence of
    // two-sided duals, and the squared-dimension product rule (checked with
    // exact square-root classes).  Throws std::runtime_error on violation.
    void validate() const;
};

FusionRing group_fusion_ring(const FiniteGroup& g);
// Structure constants of a category from exact morphism-space dimensions.
FusionRing fusion_ring_of(const TensorCategory& cat);

// Exact backtracking search for a unit-preserving bijection of labels that
// carries squared dimensions and all structure constants across.  The
// preference list biases the candidate order (preference[i] is tried first
// for label i of `a`); the search itself is exhaustive.  When no bijection
// exists, first_divergence names the first conflicting coefficient met on
// the preferred branch.
struct FusionMatch {
    std::optional<std::vector<long>> iso;  // iso[label of a] = label of b
    std::string first_divergence;
};
FusionMatch match_fusion_rings(const FusionRing& a, const FusionRing& b,
                               const std::vector<std::vector<long>>& preference = {});

// --- strict word categories -------------------------------------------------

// The strict tensor category presented by a pointed fusion ring.  Objects
// are words over the simple labels; the tensor product multiplies letters
// through the ring and orders composite slots lexicographically by factor
// position, which keeps the tensor of morphisms associative on the nose.
// Duals reverse words letterwise; evaluation and coevaluation are the unit
// pairings, and the four zig-zag identities hold exactly.  The constructor
// validates the ring and rejects non-pointed input.
class WordCategory final : public TensorCategory {
  public:
    explicit WordCategory(FusionRing ring);

    const FusionRing& ring() const { return ring_; }
    TCObject word_object(std::vector<long> letters) const;
    const std::vector<long>& letters_of(const TCObject& x) const;

    long simple_count() const override;
    const std::string& simple_label(long s) const override;
    long unit_simple() const override;
    CycScalar simple_dim(long s) const override;

    TCObject simple_object(long s) const override;
    TCObject zero_object() const override;
    TCObject direct_sum(const TCObject& x, const TCObject& y) const override;
    TCObject tensor(const TCObject& x, const TCObject& y) const override;
    TCObject dual(const TCObject& x) const override;

    TCMorphism tensor_mor(const TCMorphism& f, const TCMorphism& g) const override;

    TCMorphism ev(const TCObject& x) const override;
    TCMorphism coev(const TCObject& x) const override;
    TCMorphism ev_r(const TCObject& x) const override;
    TCMorphism coev_r(const TCObject& x) const override;

    bool same_object(const TCObject& x, const TCObject& y) const override;

  private:
    struct WordData;
    TCMorphism pairing(const TCObject& x, bool left_dual, bool to_unit) const;

    FusionRing ring_;
    std::vector<long> dual_letter_;
};

// --- crossed products -------------------------------------------------------

// One isomorphism class of simple two-sided module objects, with a chosen
// representative.  The squared dimension is relative to both symmetry
// algebras and stays an exact rational.
struct CrossedSimple {
    std::string label;
    Bimodule rep;
    Rational dim_sq;
};

// Evidence that the listed simples exhaust the induced objects: for every
// ambient simple s, the multiplicities of each listed simple inside
// A (x) s (x) A, together with the exact dimension accounting that certifies
// nothing was dropped.
struct InductionCertificate {
    std::vector<std::vector<long>> mult;  // [ambient simple][listed simple]
    std::vector<CycScalar> induced_dim;   // dim of each induced object
    long rounds = 0;                      // closure passes until stable
    bool complete = false;
    std::string detail;
};

class EnumerationStall : public std::runtime_error {
  public:
    EnumerationStall(const std::string& what, InductionCertificate partial)
        : std::runtime_error(what), cert_(std::move(partial)) {}
    const InductionCertificate& certificate() const { return cert_; }

  private:
    InductionCertificate cert_;
};

// A pairwise product of listed simples: the relative tensor product, its
// multiplicities over the listed simples, and for each constituent a basis
// of maps into the product (filled during fusion; the matching projections
// are biorthogonalized later where needed).
struct ProductCell {
    RelTensor prod;
    std::vector<long> mult;
    std::vector<std::vector<TCMorphism>> into;  // [listed simple]: maps Z_k -> prod
};

struct CrossedProduct {
    const TensorCategory* base = nullptr;
    std::shared_ptr<const Embedding> alg;    // the acting symmetry
    std::shared_ptr<const Embedding> triv;   // trivial symmetry on the same base
    std::shared_ptr<const UnitObject> unit;  // the algebra as a module over itself
    Bimodule h;      // the algebra with trivial left leg and full right leg
    Bimodule h_op;   // the mirror corner: full left leg, trivial right leg
    std::vector<CrossedSimple> simples;      // unit class first
    InductionCertificate cert;
    FusionRing fusion;
    std::vector<std::vector<ProductCell>> cells;  // filled with the fusion ring
    bool fusion_ready = false;
};

struct EnumOptions {
    long max_rounds = 8;  // closure passes before declaring a stall
};

// Decompose every induced object, close the list under relative tensor
// products and duals, and certify completeness.  Splitting failures and
// unclosed rounds raise EnumerationStall with the partial certificate.
CrossedProduct enumerate_simples(const TensorCategory& base,
                                 std::shared_ptr<const Embedding> alg,
                                 const EnumOptions& opt = {});

// Structure constants n[i][j][k] = dim Hom(Z_k, Z_i (x)_A Z_j), computed
// once and cached on the crossed product.
const FusionRing& fusion_ring(CrossedProduct& c);

// The multiple m with H (x) H* (x) H iso to m copies of H, certified by
// exact morphism-space dimensions (the equality case of Cauchy-Schwarz).
// Throws std::runtime_error when the triple product is not a clean multiple.
long absorbing_check(CrossedProduct& c);

// --- the dual symmetry ------------------------------------------------------

// The functor E(Z) = Hom(H, H (x)_A Z) on the listed simples, with the
// multiplication maps (x, y) -> (x tensor 1) after y expressed in chosen
// bases.  Every multiplication matrix must be square and invertible.
struct EFunctor {
    struct Part {
        long simple = 0;
        TCMorphism into;  // Z_simple -> product, biorthogonal to `from`
        TCMorphism from;  // product -> Z_simple
    };

    std::vector<long> dims;                      // dim E(Z_i)
    std::vector<RelTensor> hz;                   // H (x)_A Z_i
    std::vector<std::vector<TCMorphism>> basis;  // basis[i]: maps H -> hz[i].prod
    std::vector<std::vector<std::vector<Part>>> parts;  // decomposition of cells[i][j]
    std::vector<std::vector<Mat>> mult;          // multiplication matrices
};
EFunctor e_functor(CrossedProduct& c);

// The reconstructed dual symmetry: the algebra carried by the E blocks, its
// module data aligned with the listed labels, and its realization inside the
// strictified crossed product.  Requires every E space one-dimensional (the
// pointed case); larger blocks are rejected with a descriptive error.
struct DualData {
    HopfAlgebra b;
    std::vector<AxiomCheck> axioms;
    std::shared_ptr<const RepTheory> btheory;
    std::shared_ptr<WordCategory> skel;      // owns the ambient of everything below
    std::shared_ptr<const Embedding> emb;
    std::shared_ptr<const UnitObject> bunit;
};
DualData dual_embedding(CrossedProduct& c, const EFunctor& e);

// The algebra object as the connector between the base category and the dual
// symmetry: the right transports, the joint commutant (which must be one
// dimensional), and the biorthogonal identification of the coinduced object
// with the blocks of the dual unit.  Throws std::runtime_error naming the
// computed commutant dimension when it differs from one.
struct ImprimitivityObject {
    Bimodule m;                          // the connector (trivial left leg)
    std::vector<TCMorphism> transport;   // u_g: m -> m (x)_A Z_g, one per simple
    long end_m = 0;                      // joint commutant dimension
    bool unit_transport_ok = false;      // u at the unit class is the unit transport
    Bimodule x0;                         // dual(m) (x) m
    struct Row {
        long simple = 0;
        std::vector<std::pair<TCMorphism, TCMorphism>> pairs;  // (into, from)
    };
    std::vector<Row> coinduced;          // biorthogonal decomposition of x0
    bool coinduced_complete = false;     // multiplicities match the dual unit blocks
    TCMorphism counit_witness;           // the base evaluation on m (x) dual(m)
    long end_product = 0;                // End(M (x)_B M*), forced by the above
};
ImprimitivityObject imprimitivity(const CrossedProduct& c, const EFunctor& e,
                                  const DualData& d);

// --- the double crossing ----------------------------------------------------

struct DualityReport {
    FusionRing base_ring;
    FusionRing second_ring;
    InductionCertificate first_cert, second_cert;
    long base_count = 0, second_count = 0;
    bool counts_match = false;
    bool dims_match = false;  // squared-dimension multisets agree exactly
    std::optional<std::vector<long>> iso;  // second label -> base label
    std::string first_divergence;
    std::string stage;  // last completed stage

    bool pass() const { return counts_match && dims_match && iso.has_value(); }
};

// Cross with the symmetry, reconstruct the dual, cross again inside the
// strictified product, and compare the result with the base category: simple
// counts, squared-dimension multisets, and a fusion isomorphism seeded by
// conjugation multiplicities and certified by exhaustive search.
DualityReport duality_verify(const TensorCategory& base,
                             std::shared_ptr<const Embedding> alg,
                             const EnumOptions& opt = {});

}  // namespace orbicat

#endif
