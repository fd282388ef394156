#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace wellsep {

using Complex = std::complex<double>;

/// Square dense matrix with complex storage, row-major.
///
/// Real matrices are stored with zero imaginary parts. The object is
/// immutable once built; a `symmetric` tag is verified exactly (A(i,j) == A(j,i))
/// at construction.
class DenseMatrix {
public:
    enum class Symmetry { general, symmetric };

    DenseMatrix() = default;

    /// Takes ownership of n*n row-major entries. Throws PreconditionError on a
    /// size mismatch or when a symmetric tag does not hold.
    DenseMatrix(std::size_t n, std::vector<Complex> entries, Symmetry sym = Symmetry::general);

    /// Real row-major entries.
    static DenseMatrix from_real(std::size_t n, std::span<const double> entries,
                                 Symmetry sym = Symmetry::general);
    static DenseMatrix from_rows(const std::vector<std::vector<double>>& rows,
                                 Symmetry sym = Symmetry::general);
    static DenseMatrix from_complex_rows(const std::vector<std::vector<Complex>>& rows,
                                         Symmetry sym = Symmetry::general);
    static DenseMatrix diagonal(std::span<const double> diag);
    static DenseMatrix identity(std::size_t n);

    std::size_t size() const noexcept { return n_; }
    Symmetry symmetry() const noexcept { return sym_; }
    bool is_symmetric_tagged() const noexcept { return sym_ == Symmetry::symmetric; }

    Complex operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    std::span<const Complex> entries() const noexcept { return a_; }

    /// True when every imaginary part is exactly zero.
    bool is_real() const noexcept;
    /// Exact check A(i,j) == A(j,i), independent of the tag.
    bool is_symmetric() const noexcept;

    /// Real parts, row-major. Only meaningful when is_real().
    std::vector<double> real_entries() const;
    std::vector<Complex> diag() const;

    double frobenius_norm() const noexcept;

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Complex> a_;
    Symmetry sym_ = Symmetry::general;
};

/// A + B. The result keeps the symmetric tag only if both operands carry it.
DenseMatrix add(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix scaled(const DenseMatrix& a, double c);
/// P^T A P with P the permutation matrix sending e_perm[i] to e_i, i.e.
/// result(i,j) = A(perm[i], perm[j]).
DenseMatrix permuted(const DenseMatrix& a, std::span<const std::size_t> perm);

std::vector<Complex> multiply(const DenseMatrix& a, std::span<const Complex> x);
std::vector<double> multiply_real(const DenseMatrix& a, std::span<const double> x);

double norm2(std::span<const Complex> x) noexcept;
double norm2(std::span<const double> x) noexcept;

}  // namespace wellsep
