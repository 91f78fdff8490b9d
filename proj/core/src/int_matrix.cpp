#include "nfk/int_matrix.hpp"
#include "nfk/error.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace nfk {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionError("ragged initializer for IntMatrix");
        for (long v : r) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<BigInt>& d)
{
    IntMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<std::vector<BigInt>>& cols, std::size_t rows)
{
    IntMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw DimensionError("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

std::vector<BigInt> IntMatrix::column(std::size_t j) const
{
    std::vector<BigInt> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

void IntMatrix::set_column(std::size_t j, const std::vector<BigInt>& v)
{
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

IntMatrix IntMatrix::columns(std::size_t first, std::size_t count) const
{
    IntMatrix m(rows_, count);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < count; ++j) m(i, j) = (*this)(i, first + j);
    return m;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& other) const
{
    if (other.rows_ != rows_) throw DimensionError("hconcat row mismatch");
    IntMatrix m(rows_, cols_ + other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
        for (std::size_t j = 0; j < other.cols_; ++j) m(i, cols_ + j) = other(i, j);
    }
    return m;
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

bool IntMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const BigInt& x) { return x == 0; });
}

bool IntMatrix::is_diagonal() const
{
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && (*this)(i, j) != 0) return false;
    return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols_ != b.rows_) throw DimensionError("matrix product dimension mismatch");
    IntMatrix c(a.rows_, b.cols_);
    BigInt t;
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const BigInt& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                mpz_addmul(c(i, j).get_mpz_t(), aik.get_mpz_t(), b(k, j).get_mpz_t());
            }
        }
    return c;
}

std::string IntMatrix::str() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
        os << ']';
    }
    os << ']';
    return os.str();
}

namespace {

// Column operations on a (and optionally its transform u).
struct ColumnOps {
    IntMatrix& a;
    IntMatrix* u;

    void swap(std::size_t j, std::size_t k)
    {
        for (std::size_t i = 0; i < a.rows(); ++i) std::swap(a(i, j), a(i, k));
        if (u)
            for (std::size_t i = 0; i < u->rows(); ++i) std::swap((*u)(i, j), (*u)(i, k));
    }
    void negate(std::size_t j)
    {
        for (std::size_t i = 0; i < a.rows(); ++i) a(i, j) = -a(i, j);
        if (u)
            for (std::size_t i = 0; i < u->rows(); ++i) (*u)(i, j) = -(*u)(i, j);
    }
    // col_j -= q * col_k
    void submul(std::size_t j, std::size_t k, const BigInt& q)
    {
        if (q == 0) return;
        for (std::size_t i = 0; i < a.rows(); ++i) mpz_submul(a(i, j).get_mpz_t(), q.get_mpz_t(), a(i, k).get_mpz_t());
        if (u)
            for (std::size_t i = 0; i < u->rows(); ++i)
                mpz_submul((*u)(i, j).get_mpz_t(), q.get_mpz_t(), (*u)(i, k).get_mpz_t());
    }
    // (col_k, col_j) <- (x*col_k + y*col_j, z*col_k + w*col_j)
    void combine(std::size_t k, std::size_t j, const BigInt& x, const BigInt& y, const BigInt& z, const BigInt& w)
    {
        auto apply = [&](IntMatrix& m) {
            for (std::size_t i = 0; i < m.rows(); ++i) {
                BigInt ck = x * m(i, k) + y * m(i, j);
                BigInt cj = z * m(i, k) + w * m(i, j);
                m(i, k) = std::move(ck);
                m(i, j) = std::move(cj);
            }
        };
        apply(a);
        if (u) apply(*u);
    }
};

IntMatrix hnf_impl(const IntMatrix& m, IntMatrix* transform)
{
    IntMatrix a = m;
    if (transform) *transform = IntMatrix::identity(m.cols());
    ColumnOps ops{a, transform};
    if (m.cols() == 0) return a;

    long k = static_cast<long>(a.cols()) - 1;
    for (long i = static_cast<long>(a.rows()) - 1; i >= 0 && k >= 0; --i) {
        const auto r = static_cast<std::size_t>(i);
        const auto kk = static_cast<std::size_t>(k);
        for (long j = k - 1; j >= 0; --j) {
            const auto jj = static_cast<std::size_t>(j);
            if (a(r, jj) == 0) continue;
            if (a(r, kk) == 0) {
                ops.swap(jj, kk);
                continue;
            }
            BigInt u, v;
            BigInt d = xgcd(a(r, kk), a(r, jj), u, v);
            BigInt ak = a(r, kk) / d;
            BigInt aj = a(r, jj) / d;
            ops.combine(kk, jj, u, v, -aj, ak);
        }
        if (a(r, kk) < 0) ops.negate(kk);
        if (a(r, kk) == 0) continue;
        const BigInt pivot = a(r, kk);
        for (std::size_t j = kk + 1; j < a.cols(); ++j) ops.submul(j, kk, floor_div(a(r, j), pivot));
        --k;
    }
    return a;
}

}  // namespace

HnfResult hnf(const IntMatrix& m)
{
    HnfResult res;
    res.h = hnf_impl(m, &res.u);
    return res;
}

IntMatrix hnf_basis(const IntMatrix& m) { return hnf_impl(m, nullptr); }

IntMatrix hnf_square(const IntMatrix& m)
{
    IntMatrix h = hnf_basis(m);
    std::size_t first = 0;
    while (first < h.cols()) {
        bool zero = true;
        for (std::size_t i = 0; i < h.rows() && zero; ++i) zero = h(i, first) == 0;
        if (!zero) break;
        ++first;
    }
    return h.columns(first, h.cols() - first);
}

SnfResult snf(const IntMatrix& m)
{
    SnfResult r{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
    IntMatrix& a = r.d;
    const std::size_t rows = a.rows(), cols = a.cols();
    const std::size_t lim = std::min(rows, cols);

    auto row_swap = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols; ++c) std::swap(a(i, c), a(j, c));
        for (std::size_t c = 0; c < rows; ++c) std::swap(r.u(i, c), r.u(j, c));
    };
    auto row_submul = [&](std::size_t i, std::size_t j, const BigInt& q) {  // row_i -= q row_j
        for (std::size_t c = 0; c < cols; ++c) mpz_submul(a(i, c).get_mpz_t(), q.get_mpz_t(), a(j, c).get_mpz_t());
        for (std::size_t c = 0; c < rows; ++c) mpz_submul(r.u(i, c).get_mpz_t(), q.get_mpz_t(), r.u(j, c).get_mpz_t());
    };
    ColumnOps cops{a, &r.v};

    for (std::size_t t = 0; t < lim; ++t) {
        for (;;) {
            // smallest nonzero |entry| in the trailing block
            bool found = false;
            std::size_t bi = t, bj = t;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a(i, j) != 0 && (!found || abs(a(i, j)) < abs(a(bi, bj)))) {
                        found = true;
                        bi = i;
                        bj = j;
                    }
            if (!found) goto done;
            row_swap(t, bi);
            if (bj != t) cops.swap(t, bj);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a(i, t) == 0) continue;
                BigInt q;
                mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
                row_submul(i, t, q);
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a(t, j) == 0) continue;
                BigInt q;
                mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
                cops.submul(j, t, q);
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // divisibility of the rest of the block
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
                        // row_t += row_i
                        BigInt minus_one(-1);
                        row_submul(t, i, minus_one);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (a(t, t) < 0) {
            for (std::size_t c = 0; c < cols; ++c) a(t, c) = -a(t, c);
            for (std::size_t c = 0; c < rows; ++c) r.u(t, c) = -r.u(t, c);
        }
    }
done:
    return r;
}

BigInt det_int(const IntMatrix& m)
{
    if (!m.square()) throw DimensionError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

IntMatrix unimodular_inverse(const IntMatrix& m)
{
    if (!m.square()) throw DimensionError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    // Row-reduce [m | I] over Z with unimodular steps.
    IntMatrix a = m.hconcat(IntMatrix::identity(n));
    for (std::size_t c = 0; c < n; ++c) {
        for (;;) {
            std::size_t best = n;
            for (std::size_t i = c; i < n; ++i)
                if (a(i, c) != 0 && (best == n || abs(a(i, c)) < abs(a(best, c)))) best = i;
            if (best == n) throw InvariantViolation("matrix is singular, not unimodular");
            if (best != c)
                for (std::size_t j = 0; j < 2 * n; ++j) std::swap(a(c, j), a(best, j));
            bool done = true;
            for (std::size_t i = c + 1; i < n; ++i) {
                if (a(i, c) == 0) continue;
                BigInt q;
                mpz_tdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(c, c).get_mpz_t());
                for (std::size_t j = 0; j < 2 * n; ++j) mpz_submul(a(i, j).get_mpz_t(), q.get_mpz_t(), a(c, j).get_mpz_t());
                if (a(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (abs(a(c, c)) != 1) throw InvariantViolation("matrix is not unimodular");
    }
    for (long c = static_cast<long>(n) - 1; c >= 0; --c) {
        const auto cc = static_cast<std::size_t>(c);
        if (a(cc, cc) < 0)
            for (std::size_t j = 0; j < 2 * n; ++j) a(cc, j) = -a(cc, j);
        for (std::size_t i = 0; i < cc; ++i) {
            BigInt q = a(i, cc);
            if (q == 0) continue;
            for (std::size_t j = 0; j < 2 * n; ++j) mpz_submul(a(i, j).get_mpz_t(), q.get_mpz_t(), a(cc, j).get_mpz_t());
        }
    }
    return a.columns(n, n);
}

void reduce_mod_hnf(std::vector<BigInt>& v, const IntMatrix& h)
{
    const std::size_t n = h.rows();
    BigInt q;
    for (long i = static_cast<long>(n) - 1; i >= 0; --i) {
        const auto r = static_cast<std::size_t>(i);
        mpz_fdiv_q(q.get_mpz_t(), v[r].get_mpz_t(), h(r, r).get_mpz_t());
        if (q == 0) continue;
        for (std::size_t k = 0; k <= r; ++k) mpz_submul(v[k].get_mpz_t(), q.get_mpz_t(), h(k, r).get_mpz_t());
    }
}

bool in_lattice_hnf(std::vector<BigInt> v, const IntMatrix& h)
{
    reduce_mod_hnf(v, h);
    return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; });
}

}  // namespace nfk
