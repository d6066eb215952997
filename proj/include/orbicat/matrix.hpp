#ifndef ORBICAT_MATRIX_HPP
#define ORBICAT_MATRIX_HPP

#include <initializer_list>
#include <vector>

#include "orbicat/cyclotomic.hpp"

namespace orbicat {

// Dense row-major matrix over cyclotomic scalars.  Entries may live in mixed
// conductors; arithmetic unifies lazily.  Zero entries are skipped in the hot
// loops, which matters a lot here: most structural morphisms (shuffles,
// trivializations, pairings) are permutation-sparse.
class Mat {
  public:
    Mat() : r_(0), c_(0) {}
    Mat(long rows, long cols) : r_(rows), c_(cols), e_(rows * cols, CycScalar()) {}
    Mat(std::initializer_list<std::initializer_list<CycScalar>> rows);

    static Mat identity(long n);
    static Mat zero(long rows, long cols) { return Mat(rows, cols); }
    // Elementary matrix unit E_{ij}.
    static Mat unit(long rows, long cols, long i, long j);

    long rows() const { return r_; }
    long cols() const { return c_; }

    CycScalar& at(long i, long j) { return e_[i * c_ + j]; }
    const CycScalar& at(long i, long j) const { return e_[i * c_ + j]; }

    bool is_zero() const;
    bool is_identity() const;

    Mat transpose() const;
    Mat operator-() const;

    friend Mat operator+(const Mat& a, const Mat& b);
    friend Mat operator-(const Mat& a, const Mat& b);
    friend bool operator==(const Mat& a, const Mat& b);
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }
    Mat& operator+=(const Mat& b) { return *this = *this + b; }
    Mat& operator-=(const Mat& b) { return *this = *this - b; }

    Mat scaled(const CycScalar& s) const;
    Mat scaled(const Rational& s) const { return scaled(CycScalar(s)); }

  private:
    long r_, c_;
    std::vector<CycScalar> e_;
};

// Matrix product.  mat_mul dispatches to an OpenMP row-parallel kernel for
// large inputs; mat_mul_serial is the plain reference kept for testing.  Both
// produce identical results (exact arithmetic, per-entry independence).
Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_mul_serial(const Mat& a, const Mat& b);
inline Mat operator*(const Mat& a, const Mat& b) { return mat_mul(a, b); }

Mat kron(const Mat& a, const Mat& b);
Mat direct_sum(const Mat& a, const Mat& b);
Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);

// Reduced row echelon form (in place); returns pivot columns.  Deterministic:
// the pivot is always the first row with a nonzero entry in the current column.
std::vector<long> rref(Mat& m);
std::vector<long> rref_serial(Mat& m);

long rank(Mat m);

// Basis of the right kernel {x : m x = 0}, as columns.  Deterministic echelon
// parameterization (free columns in increasing order, pivot entries solved).
Mat kernel_basis(const Mat& m);

// Solve a X = b for X; returns false if inconsistent.
bool solve(const Mat& a, const Mat& b, Mat& x);

Mat inverse(const Mat& m);  // throws on singular input

// Basis of the column space, picked by first-pivot column echelon: the result
// consists of the pivot columns of m after rref, in column order.
Mat image_basis(const Mat& m);

// Split an exact idempotent e = e^2 on k^n into (inj, proj) with
// proj * inj = I_r and inj * proj = e, where r = rank(e) and inj = image_basis(e).
struct IdempotentSplit {
    Mat inj;   // n x r
    Mat proj;  // r x n
};
IdempotentSplit split_idempotent(const Mat& e);

// Trace and a small exact determinant (Gaussian elimination).
CycScalar trace(const Mat& m);
CycScalar det(Mat m);

}  // namespace orbicat

#endif
