#ifndef ORBICAT_REPCAT_HPP
#define ORBICAT_REPCAT_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "orbicat/irreps.hpp"
#include "orbicat/matrix.hpp"

namespace orbicat {

class TensorCategory;

// Category-specific realization payload carried by an object.
struct TCObjectData {
    virtual ~TCObjectData() = default;
};

// An object of a finitely semisimple tensor category: a multiplicity vector
// over the category's simple labels, plus realization data owned by the
// category instance that created it.  Objects are immutable values.
struct TCObject {
    const TensorCategory* cat = nullptr;
    std::vector<long> mult;  // one copy count per simple label
    std::shared_ptr<const TCObjectData> data;

    bool is_zero() const;
    long total_mult() const;
};

// A morphism in Schur normal form: one multiplicity-space block per simple
// label, of shape mult_dst(s) x mult_src(s).  Cross-simple components vanish
// identically, so they are not stored.  Composition, sums and scalars are
// blockwise and category-independent.
struct TCMorphism {
    TCObject src, dst;
    std::vector<Mat> blocks;
};

TCMorphism tc_identity(const TCObject& x);
TCMorphism tc_zero(const TCObject& x, const TCObject& y);  // x -> y
// f after g; endpoints must be the same object handle value.
TCMorphism compose(const TCMorphism& f, const TCMorphism& g);
TCMorphism operator+(const TCMorphism& f, const TCMorphism& g);
TCMorphism operator-(const TCMorphism& f, const TCMorphism& g);
TCMorphism mor_scaled(const TCMorphism& f, const CycScalar& c);
bool operator==(const TCMorphism& f, const TCMorphism& g);
inline bool operator!=(const TCMorphism& f, const TCMorphism& g) { return !(f == g); }

// Basis of the morphism space x -> y: one elementary block morphism per
// (simple, target copy, source copy), in that lexicographic order.  The count
// is sum_s mult_x(s) * mult_y(s).
std::vector<TCMorphism> hom_space(const TCObject& x, const TCObject& y);
long hom_space_dim(const TCObject& x, const TCObject& y);

// The unique coefficient of an endomorphism of an object with a single copy
// of a single simple (for example the unit, or any simple object).  Throws
// if the object is not of that shape.
CycScalar scalar_of(const TCMorphism& f);

// A finitely semisimple strict tensor category, presented operationally.
// Implementations guarantee:
//   * tensor is associative and unital on the nose (equal object values);
//   * dual(dual(x)) is x on the nose;
//   * ev/coev and their right-handed twins satisfy the four zig-zag
//     identities exactly.
class TensorCategory {
  public:
    virtual ~TensorCategory() = default;

    virtual long simple_count() const = 0;
    virtual const std::string& simple_label(long s) const = 0;
    virtual long unit_simple() const = 0;
    virtual CycScalar simple_dim(long s) const = 0;

    virtual TCObject simple_object(long s) const = 0;
    virtual TCObject zero_object() const = 0;
    virtual TCObject direct_sum(const TCObject& x, const TCObject& y) const = 0;
    virtual TCObject tensor(const TCObject& x, const TCObject& y) const = 0;
    virtual TCObject dual(const TCObject& x) const = 0;

    virtual TCMorphism tensor_mor(const TCMorphism& f, const TCMorphism& g) const = 0;

    virtual TCMorphism ev(const TCObject& x) const = 0;      // dual(x) (x) x -> unit
    virtual TCMorphism coev(const TCObject& x) const = 0;    // unit -> x (x) dual(x)
    virtual TCMorphism ev_r(const TCObject& x) const = 0;    // x (x) dual(x) -> unit
    virtual TCMorphism coev_r(const TCObject& x) const = 0;  // unit -> dual(x) (x) x

    // Value equality of objects (category, multiplicities, realization).
    virtual bool same_object(const TCObject& x, const TCObject& y) const = 0;

    TCObject unit_object() const { return simple_object(unit_simple()); }
    CycScalar dim_of(const TCObject& x) const;
};

// Certificate splitting a module into simple summands: for each simple s and
// each copy c, an injection V_s -> X and a projection X -> V_s with
// pi(s,c') inj(s,c) = delta_{cc'} id and sum_{s,c} inj pi = id.  The
// certificate is a deterministic function of the action matrices, so objects
// built through different routes from equal actions carry equal certificates.
struct RepResolution {
    std::vector<std::vector<Mat>> inj;  // [simple][copy]: dim(X) x d_s
    std::vector<std::vector<Mat>> pi;   // [simple][copy]: d_s x dim(X)
};

// The category of finite-dimensional modules over a split semisimple Hopf
// algebra with involutive antipode.  Objects are realized by explicit action
// matrices; the tensor product acts through the coproduct and is realized on
// the Kronecker product of underlying spaces, the dual acts through the
// antipode on the transpose.  The constructor throws if the antipode is not
// involutive (every built-in preset is).
class RepCat : public TensorCategory {
  public:
    explicit RepCat(RepTheory rt);

    const RepTheory& theory() const { return rt_; }

    // Object from explicit action matrices (one dim x dim matrix per algebra
    // basis element); its decomposition certificate is computed eagerly.
    TCObject module_object(std::vector<Mat> action) const;
    TCObject regular_object() const;  // the algebra as a left module over itself

    // Underlying linear algebra of an object built by this category.
    const std::vector<Mat>& action_of(const TCObject& x) const;
    const RepResolution& resolution_of(const TCObject& x) const;
    long vec_dim(const TCObject& x) const;

    // Concrete dim(y) x dim(x) matrix of a morphism, and back.  from_concrete
    // assumes the matrix intertwines the two actions; components outside the
    // Schur blocks are ignored.
    Mat concrete(const TCMorphism& f) const;
    TCMorphism from_concrete(const TCObject& x, const TCObject& y, const Mat& f) const;
    bool intertwines(const TCObject& x, const TCObject& y, const Mat& f) const;

    long simple_count() const override;
    const std::string& simple_label(long s) const override;
    long unit_simple() const override { return 0; }
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
    struct Data;

    TCObject make_object(std::vector<Mat> action) const;
    const Data& data_of(const TCObject& x) const;

    RepTheory rt_;
    // Tensor results keyed by operand identity; values pin the operands so
    // addresses cannot be recycled while a key refers to them.  The cache is
    // bounded: results too large to be worth retaining are returned uncached,
    // and when the retained total exceeds the budget the whole cache is
    // dropped (entries and their pins are released together, so a key can
    // never outlive the operands it points at).
    struct TensorEntry {
        std::shared_ptr<const TCObjectData> a, b;
        TCObject result;
        long weight = 0;
    };
    mutable std::map<std::pair<const void*, const void*>, TensorEntry> tensor_cache_;
    mutable long tensor_cache_weight_ = 0;

    // Equal-content objects are interned to one shared realization, so a
    // construction that rebuilds an object it has produced before gets the
    // same identity back and the identity-keyed tensor cache can hit.  Same
    // bounding policy as the tensor cache: oversized results stay uncached,
    // and the table is dropped wholesale when the budget is exceeded.
    struct InternEntry {
        TCObject obj;
        long weight = 0;
    };
    mutable std::unordered_map<std::size_t, std::vector<InternEntry>> intern_;
    mutable long intern_weight_ = 0;

    const TCObject* intern_find(std::size_t key, const std::vector<Mat>& action) const;
    void intern_store(std::size_t key, const TCObject& x) const;
};

// Convenience: the module category of a preset algebra, ready to use.
RepCat rep_category(const HopfAlgebra& h);

}  // namespace orbicat

#endif
