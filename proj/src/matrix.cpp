#include "orbicat/matrix.hpp"

#include <cassert>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace orbicat {

Mat::Mat(std::initializer_list<std::initializer_list<CycScalar>> rows) {
    r_ = static_cast<long>(rows.size());
    c_ = r_ ? static_cast<long>(rows.begin()->size()) : 0;
    e_.reserve(r_ * c_);
    for (const auto& row : rows) {
        if (static_cast<long>(row.size()) != c_) throw std::invalid_argument("ragged matrix literal");
        for (const auto& x : row) e_.push_back(x);
    }
}

Mat Mat::identity(long n) {
    Mat m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = cyc(1);
    return m;
}

Mat Mat::unit(long rows, long cols, long i, long j) {
    Mat m(rows, cols);
    m.at(i, j) = cyc(1);
    return m;
}

bool Mat::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

bool Mat::is_identity() const {
    if (r_ != c_) return false;
    for (long i = 0; i < r_; ++i)
        for (long j = 0; j < c_; ++j) {
            const CycScalar& x = at(i, j);
            if (i == j ? x != cyc(1) : !x.is_zero()) return false;
        }
    return true;
}

Mat Mat::transpose() const {
    Mat t(c_, r_);
    for (long i = 0; i < r_; ++i)
        for (long j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Mat Mat::operator-() const {
    Mat m = *this;
    for (auto& x : m.e_)
        if (!x.is_zero()) x = -x;
    return m;
}

Mat operator+(const Mat& a, const Mat& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("shape mismatch in +");
    Mat m = a;
    for (std::size_t i = 0; i < m.e_.size(); ++i)
        if (!b.e_[i].is_zero()) m.e_[i] += b.e_[i];
    return m;
}

Mat operator-(const Mat& a, const Mat& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("shape mismatch in -");
    Mat m = a;
    for (std::size_t i = 0; i < m.e_.size(); ++i)
        if (!b.e_[i].is_zero()) m.e_[i] -= b.e_[i];
    return m;
}

bool operator==(const Mat& a, const Mat& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) return false;
    for (std::size_t i = 0; i < a.e_.size(); ++i)
        if (a.e_[i] != b.e_[i]) return false;
    return true;
}

Mat Mat::scaled(const CycScalar& s) const {
    Mat m = *this;
    for (auto& x : m.e_)
        if (!x.is_zero()) x *= s;
    return m;
}

namespace {

inline void mul_row(const Mat& a, const Mat& b, Mat& out, long i) {
    for (long k = 0; k < a.cols(); ++k) {
        const CycScalar& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (long j = 0; j < b.cols(); ++j) {
            const CycScalar& bkj = b.at(k, j);
            if (bkj.is_zero()) continue;
            out.at(i, j) += aik * bkj;
        }
    }
}

}  // namespace

Mat mat_mul_serial(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("shape mismatch in *");
    Mat out(a.rows(), b.cols());
    for (long i = 0; i < a.rows(); ++i) mul_row(a, b, out, i);
    return out;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("shape mismatch in *");
    Mat out(a.rows(), b.cols());
#ifdef _OPENMP
    // Rows are independent, so static scheduling gives a bit-identical result
    // to the serial kernel for any thread count.
    bool big = static_cast<long long>(a.rows()) * a.cols() * b.cols() > 64LL * 64 * 64;
    if (big && omp_get_max_threads() > 1) {
#pragma omp parallel for schedule(static)
        for (long i = 0; i < a.rows(); ++i) mul_row(a, b, out, i);
        return out;
    }
#endif
    for (long i = 0; i < a.rows(); ++i) mul_row(a, b, out, i);
    return out;
}

Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j) {
            const CycScalar& aij = a.at(i, j);
            if (aij.is_zero()) continue;
            for (long k = 0; k < b.rows(); ++k)
                for (long l = 0; l < b.cols(); ++l) {
                    const CycScalar& bkl = b.at(k, l);
                    if (bkl.is_zero()) continue;
                    out.at(i * b.rows() + k, j * b.cols() + l) = aij * bkl;
                }
        }
    return out;
}

Mat direct_sum(const Mat& a, const Mat& b) {
    Mat out(a.rows() + b.rows(), a.cols() + b.cols());
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (long i = 0; i < b.rows(); ++i)
        for (long j = 0; j < b.cols(); ++j) out.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return out;
}

Mat hstack(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
    Mat out(a.rows(), a.cols() + b.cols());
    for (long i = 0; i < a.rows(); ++i) {
        for (long j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
        for (long j = 0; j < b.cols(); ++j) out.at(i, a.cols() + j) = b.at(i, j);
    }
    return out;
}

Mat vstack(const Mat& a, const Mat& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack col mismatch");
    Mat out(a.rows() + b.rows(), a.cols());
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (long i = 0; i < b.rows(); ++i)
        for (long j = 0; j < b.cols(); ++j) out.at(a.rows() + i, j) = b.at(i, j);
    return out;
}

namespace {

std::vector<long> rref_impl(Mat& m, bool parallel) {
    std::vector<long> pivots;
    long row = 0;
    for (long col = 0; col < m.cols() && row < m.rows(); ++col) {
        long pr = -1;
        for (long i = row; i < m.rows(); ++i)
            if (!m.at(i, col).is_zero()) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != row)
            for (long j = 0; j < m.cols(); ++j) std::swap(m.at(row, j), m.at(pr, j));
        CycScalar inv = m.at(row, col).inverse();
        for (long j = col; j < m.cols(); ++j)
            if (!m.at(row, j).is_zero()) m.at(row, j) *= inv;
        auto eliminate = [&](long i) {
            if (i == row || m.at(i, col).is_zero()) return;
            CycScalar f = m.at(i, col);
            for (long j = col; j < m.cols(); ++j) {
                if (m.at(row, j).is_zero()) continue;
                m.at(i, j) -= f * m.at(row, j);
            }
        };
#ifdef _OPENMP
        if (parallel && static_cast<long long>(m.rows()) * m.cols() > 64LL * 64 && omp_get_max_threads() > 1) {
#pragma omp parallel for schedule(static)
            for (long i = 0; i < m.rows(); ++i) eliminate(i);
        } else
#endif
        {
            (void)parallel;
            for (long i = 0; i < m.rows(); ++i) eliminate(i);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::vector<long> rref(Mat& m) { return rref_impl(m, true); }
std::vector<long> rref_serial(Mat& m) { return rref_impl(m, false); }

long rank(Mat m) { return static_cast<long>(rref(m).size()); }

Mat kernel_basis(const Mat& m) {
    Mat r = m;
    std::vector<long> pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (long p : pivots) is_pivot[p] = true;
    std::vector<long> free_cols;
    for (long j = 0; j < m.cols(); ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    Mat out(m.cols(), static_cast<long>(free_cols.size()));
    for (std::size_t f = 0; f < free_cols.size(); ++f) {
        long fc = free_cols[f];
        out.at(fc, f) = cyc(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            const CycScalar& v = r.at(static_cast<long>(i), fc);
            if (!v.is_zero()) out.at(pivots[i], f) = -v;
        }
    }
    return out;
}

bool solve(const Mat& a, const Mat& b, Mat& x) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve shape mismatch");
    Mat aug = hstack(a, b);
    std::vector<long> pivots = rref(aug);
    // Any pivot in the b-block means inconsistency.
    for (long p : pivots)
        if (p >= a.cols()) return false;
    x = Mat(a.cols(), b.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (long j = 0; j < b.cols(); ++j) x.at(pivots[i], j) = aug.at(static_cast<long>(i), a.cols() + j);
    return true;
}

Mat inverse(const Mat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    Mat x;
    if (!solve(m, Mat::identity(m.rows()), x)) throw std::domain_error("singular matrix");
    // solve() returns *a* solution; verify both sides since m could be rank-deficient
    // in a way that still leaves the system consistent.
    if (!(mat_mul(m, x).is_identity())) throw std::domain_error("singular matrix");
    return x;
}

Mat image_basis(const Mat& m) {
    Mat r = m;
    std::vector<long> pivots = rref(r);
    Mat out(m.rows(), static_cast<long>(pivots.size()));
    for (std::size_t k = 0; k < pivots.size(); ++k)
        for (long i = 0; i < m.rows(); ++i) out.at(i, k) = m.at(i, pivots[k]);
    return out;
}

IdempotentSplit split_idempotent(const Mat& e) {
    if (e.rows() != e.cols()) throw std::invalid_argument("idempotent must be square");
    Mat inj = image_basis(e);
    Mat proj;
    if (!solve(inj, e, proj)) throw std::logic_error("image basis does not span idempotent image");
    IdempotentSplit s{inj, proj};
    assert(mat_mul(s.proj, s.inj).is_identity());
    return s;
}

CycScalar trace(const Mat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("trace of non-square matrix");
    CycScalar t;
    for (long i = 0; i < m.rows(); ++i) t += m.at(i, i);
    return t;
}

CycScalar det(Mat m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square matrix");
    CycScalar d = cyc(1);
    long n = m.rows();
    for (long col = 0; col < n; ++col) {
        long pr = -1;
        for (long i = col; i < n; ++i)
            if (!m.at(i, col).is_zero()) { pr = i; break; }
        if (pr < 0) return CycScalar();
        if (pr != col) {
            for (long j = 0; j < n; ++j) std::swap(m.at(col, j), m.at(pr, j));
            d = -d;
        }
        d *= m.at(col, col);
        CycScalar inv = m.at(col, col).inverse();
        for (long i = col + 1; i < n; ++i) {
            if (m.at(i, col).is_zero()) continue;
            CycScalar f = m.at(i, col) * inv;
            for (long j = col; j < n; ++j) {
                if (m.at(col, j).is_zero()) continue;
                m.at(i, j) -= f * m.at(col, j);
            }
        }
    }
    return d;
}

}  // namespace orbicat
