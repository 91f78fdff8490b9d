#include "nfk/lattice.hpp"
#include "nfk/error.hpp"

#include <cmath>

namespace nfk {

namespace {

using RealVec = std::vector<long double>;

long double dot(const RealVec& a, const RealVec& b)
{
    long double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Textbook LLL on real images, tracking the integer columns alongside.
void lll(const NumberField& field, std::vector<IntVec>& cols)
{
    const std::size_t n = cols.size();
    std::vector<RealVec> b(n);
    for (std::size_t i = 0; i < n; ++i) b[i] = field.minkowski(cols[i]);

    std::vector<RealVec> bstar(n);
    std::vector<std::vector<long double>> mu(n, std::vector<long double>(n, 0));
    std::vector<long double> norms(n);
    auto gram_schmidt = [&] {
        for (std::size_t i = 0; i < n; ++i) {
            bstar[i] = b[i];
            for (std::size_t j = 0; j < i; ++j) {
                mu[i][j] = norms[j] > 0 ? dot(b[i], bstar[j]) / norms[j] : 0;
                for (std::size_t k = 0; k < bstar[i].size(); ++k) bstar[i][k] -= mu[i][j] * bstar[j][k];
            }
            norms[i] = dot(bstar[i], bstar[i]);
        }
    };

    gram_schmidt();
    std::size_t k = 1;
    int guard = 0;
    while (k < n) {
        if (++guard > 100000) break;
        for (std::size_t j = k; j-- > 0;) {
            const long double r = std::nearbyint(mu[k][j]);
            if (r == 0) continue;
            BigInt rz;
            mpz_set_d(rz.get_mpz_t(), static_cast<double>(r));
            for (std::size_t c = 0; c < cols[k].size(); ++c) cols[k][c] -= rz * cols[j][c];
            b[k] = field.minkowski(cols[k]);
            gram_schmidt();
        }
        if (norms[k] >= (0.99L - mu[k][k - 1] * mu[k][k - 1]) * norms[k - 1]) {
            ++k;
        } else {
            std::swap(cols[k], cols[k - 1]);
            std::swap(b[k], b[k - 1]);
            gram_schmidt();
            k = std::max<std::size_t>(k - 1, 1);
        }
    }
}

}  // namespace

ShortElementEnumerator::ShortElementEnumerator(const NumberField& field, const IntMatrix& basis)
    : field_(field), n_(field.dim())
{
    if (basis.rows() != n_ || basis.cols() != n_) throw DimensionError("lattice basis must be n x n");
    std::vector<IntVec> cols(n_);
    for (std::size_t j = 0; j < n_; ++j) cols[j] = basis.column(j);
    lll(field_, cols);
    reduced_ = IntMatrix::from_columns(cols, n_);

    std::vector<RealVec> b(n_);
    for (std::size_t j = 0; j < n_; ++j) b[j] = field_.minkowski(cols[j]);
    q_.assign(n_, std::vector<long double>(n_, 0));
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) q_[i][j] = dot(b[i], b[j]);
    // in-place decomposition: Q(x) = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i + 1; j < n_; ++j) {
            q_[j][i] = q_[i][j];
            q_[i][j] /= q_[i][i];
        }
        for (std::size_t k = i + 1; k < n_; ++k)
            for (std::size_t l = k; l < n_; ++l) q_[k][l] -= q_[k][i] * q_[i][l];
        if (!(q_[i][i] > 0)) throw InvariantViolation("degenerate lattice Gram matrix");
    }
}

long double ShortElementEnumerator::first_minimum_estimate() const
{
    long double best = -1;
    for (std::size_t j = 0; j < n_; ++j) {
        long double t = field_.t2(reduced_.column(j));
        if (best < 0 || t < best) best = t;
    }
    return best;
}

std::uint64_t ShortElementEnumerator::enumerate(long double bound, const Visitor& visit, std::uint64_t ceiling,
                                               bool half) const
{
    const long double limit = bound * (1 + 1e-12L) + 1e-12L;
    std::vector<long long> x(n_, 0);
    std::vector<long double> center(n_, 0), remaining(n_, 0);
    std::uint64_t nodes = 0;
    bool stop = false;

    std::vector<IntVec> cols(n_);
    for (std::size_t j = 0; j < n_; ++j) cols[j] = reduced_.column(j);

    IntVec element(n_);
    auto emit = [&]() {
        for (std::size_t r = 0; r < n_; ++r) element[r] = 0;
        bool nonzero = false;
        for (std::size_t j = 0; j < n_; ++j) {
            if (x[j] == 0) continue;
            nonzero = true;
            for (std::size_t r = 0; r < n_; ++r) element[r] += cols[j][r] * static_cast<long>(x[j]);
        }
        if (!nonzero) return;
        if (!visit(element, field_.t2(element))) stop = true;
    };

    // recursive descent over coordinates n-1 .. 0
    std::function<void(std::size_t, long double, bool)> descend = [&](std::size_t i, long double rem, bool zero_above) {
        long double c = 0;
        for (std::size_t j = i + 1; j < n_; ++j) c += q_[i][j] * static_cast<long double>(x[j]);
        const long double radius = std::sqrt(std::max<long double>(rem, 0) / q_[i][i]);
        long long lo = static_cast<long long>(std::ceil(-c - radius - 1e-9L));
        long long hi = static_cast<long long>(std::floor(-c + radius + 1e-9L));
        if (half && zero_above) lo = std::max<long long>(lo, 0);
        for (long long v = lo; v <= hi && !stop; ++v) {
            if (++nodes > ceiling) throw CeilingExceeded("short element enumeration", ceiling);
            x[i] = v;
            const long double t = static_cast<long double>(v) + c;
            const long double next = rem - q_[i][i] * t * t;
            if (next < -1e-9L * (1 + limit)) continue;
            if (i == 0) emit();
            else descend(i - 1, next, zero_above && v == 0);
        }
        x[i] = 0;
    };
    descend(n_ - 1, limit, true);
    return nodes;
}

}  // namespace nfk
