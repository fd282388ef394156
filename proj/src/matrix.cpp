#include "wellsep/matrix.hpp"

#include <cmath>
#include <string>

#include "wellsep/errors.hpp"

namespace wellsep {

DenseMatrix::DenseMatrix(std::size_t n, std::vector<Complex> entries, Symmetry sym)
    : n_(n), a_(std::move(entries)), sym_(sym) {
    if (n_ == 0) throw PreconditionError("matrix dimension must be positive");
    if (a_.size() != n_ * n_) {
        throw PreconditionError("expected " + std::to_string(n_ * n_) + " entries, got " +
                                std::to_string(a_.size()));
    }
    if (sym_ == Symmetry::symmetric && !is_symmetric()) {
        throw PreconditionError("matrix tagged symmetric but A(i,j) != A(j,i)");
    }
}

DenseMatrix DenseMatrix::from_real(std::size_t n, std::span<const double> entries, Symmetry sym) {
    return DenseMatrix(n, std::vector<Complex>(entries.begin(), entries.end()), sym);
}

DenseMatrix DenseMatrix::from_rows(const std::vector<std::vector<double>>& rows, Symmetry sym) {
    const std::size_t n = rows.size();
    std::vector<Complex> a;
    a.reserve(n * n);
    for (const auto& row : rows) {
        if (row.size() != n) throw PreconditionError("matrix rows must form a square grid");
        a.insert(a.end(), row.begin(), row.end());
    }
    return DenseMatrix(n, std::move(a), sym);
}

DenseMatrix DenseMatrix::from_complex_rows(const std::vector<std::vector<Complex>>& rows,
                                           Symmetry sym) {
    const std::size_t n = rows.size();
    std::vector<Complex> a;
    a.reserve(n * n);
    for (const auto& row : rows) {
        if (row.size() != n) throw PreconditionError("matrix rows must form a square grid");
        a.insert(a.end(), row.begin(), row.end());
    }
    return DenseMatrix(n, std::move(a), sym);
}

DenseMatrix DenseMatrix::diagonal(std::span<const double> diag) {
    const std::size_t n = diag.size();
    std::vector<Complex> a(n * n);
    for (std::size_t i = 0; i < n; ++i) a[i * n + i] = diag[i];
    return DenseMatrix(n, std::move(a), Symmetry::symmetric);
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
    std::vector<double> ones(n, 1.0);
    return diagonal(ones);
}

bool DenseMatrix::is_real() const noexcept {
    for (const auto& z : a_) {
        if (z.imag() != 0.0) return false;
    }
    return true;
}

bool DenseMatrix::is_symmetric() const noexcept {
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i + 1; j < n_; ++j) {
            if (a_[i * n_ + j] != a_[j * n_ + i]) return false;
        }
    }
    return true;
}

std::vector<double> DenseMatrix::real_entries() const {
    std::vector<double> out(a_.size());
    for (std::size_t k = 0; k < a_.size(); ++k) out[k] = a_[k].real();
    return out;
}

std::vector<Complex> DenseMatrix::diag() const {
    std::vector<Complex> d(n_);
    for (std::size_t i = 0; i < n_; ++i) d[i] = a_[i * n_ + i];
    return d;
}

double DenseMatrix::frobenius_norm() const noexcept {
    double s = 0.0;
    for (const auto& z : a_) s += std::norm(z);
    return std::sqrt(s);
}

DenseMatrix add(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.size() != b.size()) throw DimensionMismatch("add: operand dimensions differ");
    std::vector<Complex> c(a.entries().begin(), a.entries().end());
    const auto eb = b.entries();
    for (std::size_t k = 0; k < c.size(); ++k) c[k] += eb[k];
    const bool sym = a.is_symmetric_tagged() && b.is_symmetric_tagged();
    return DenseMatrix(a.size(), std::move(c),
                       sym ? DenseMatrix::Symmetry::symmetric : DenseMatrix::Symmetry::general);
}

DenseMatrix scaled(const DenseMatrix& a, double c) {
    std::vector<Complex> out(a.entries().begin(), a.entries().end());
    for (auto& z : out) z *= c;
    return DenseMatrix(a.size(), std::move(out), a.symmetry());
}

DenseMatrix permuted(const DenseMatrix& a, std::span<const std::size_t> perm) {
    const std::size_t n = a.size();
    if (perm.size() != n) throw DimensionMismatch("permutation length differs from dimension");
    std::vector<Complex> out(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out[i * n + j] = a(perm[i], perm[j]);
    }
    return DenseMatrix(n, std::move(out), a.symmetry());
}

std::vector<Complex> multiply(const DenseMatrix& a, std::span<const Complex> x) {
    const std::size_t n = a.size();
    if (x.size() != n) throw DimensionMismatch("multiply: vector length differs from dimension");
    std::vector<Complex> y(n);
    const auto e = a.entries();
    for (std::size_t i = 0; i < n; ++i) {
        Complex s = 0.0;
        for (std::size_t j = 0; j < n; ++j) s += e[i * n + j] * x[j];
        y[i] = s;
    }
    return y;
}

std::vector<double> multiply_real(const DenseMatrix& a, std::span<const double> x) {
    const std::size_t n = a.size();
    if (x.size() != n) throw DimensionMismatch("multiply: vector length differs from dimension");
    std::vector<double> y(n);
    const auto e = a.entries();
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) s += e[i * n + j].real() * x[j];
        y[i] = s;
    }
    return y;
}

double norm2(std::span<const Complex> x) noexcept {
    double s = 0.0;
    for (const auto& z : x) s += std::norm(z);
    return std::sqrt(s);
}

double norm2(std::span<const double> x) noexcept {
    double s = 0.0;
    for (double v : x) s += v * v;
    return std::sqrt(s);
}

}  // namespace wellsep
