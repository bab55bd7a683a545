#pragma once

// Exact integer and modular linear algebra for small matrices.
//
// Entries are 64-bit; every product and sum on the elimination path is
// checked and throws Error(Overflow) rather than wrapping. Inputs with
// |entry| <= 1e9 on 3x3 relator matrices stay far inside the range.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace sol3 {

using Int = std::int64_t;

Int checked_add(Int x, Int y);
Int checked_mul(Int x, Int y);
Int floor_mod(Int x, Int m);  // result in [0, m)
Int gcd(Int x, Int y);        // nonnegative
int two_adic_valuation(Int x);  // x != 0

/// A 2x2 integer matrix stored in action order: conjugation by t sends
/// x -> x^a y^b and y -> x^c y^d. The conventional display puts (a, c) in
/// the first row, so a and d are on the diagonal and c is top-right.
struct Mat2Z {
    Int a = 0;
    Int b = 0;
    Int c = 0;
    Int d = 0;

    Int det() const;
    Int trace() const;
    bool operator==(const Mat2Z&) const = default;
};

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix&) const = default;

    bool is_diagonal() const;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

/// Determinant by fraction-free elimination (Bareiss). Square matrices only.
Int determinant(const IntMatrix& m);

struct SmithForm {
    // Nonzero invariant factors d_1 | d_2 | ... | d_rank, all positive.
    std::vector<Int> diag;
    std::size_t rank = 0;
    // left * A * right == D where D carries diag on its leading diagonal.
    IntMatrix left;
    IntMatrix right;

    IntMatrix diagonal_matrix(std::size_t rows, std::size_t cols) const;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Finitely generated abelian group Z^free_rank + sum Z/torsion[i], with
/// torsion entries >= 2 forming a divisibility chain.
struct AbelianGroup {
    int free_rank = 0;
    std::vector<Int> torsion;

    bool operator==(const AbelianGroup&) const = default;

    /// Canonical form of Z^free_rank + sum Z/orders[i]; orders of 0 count as
    /// free summands and orders of +-1 vanish.
    static AbelianGroup from_cyclic_factors(int free_rank, const std::vector<Int>& orders);

    /// Number of Z/2 summands in the tensor product with F_2.
    int mod2_rank() const;

    std::string to_string() const;
};

/// Z^cols modulo the row space of `a` (rows are relations between the
/// column generators).
AbelianGroup cokernel(const IntMatrix& a);

/// Generating set of { v in (Z/m)^cols : a v == 0 mod m }, entries in [0, m).
/// For prime m the set is a basis.
std::vector<std::vector<Int>> solve_mod(const IntMatrix& a, Int m);

/// Integer kernel { v in Z^cols : a v == 0 } as a list of basis vectors.
std::vector<std::vector<Int>> integer_kernel(const IntMatrix& a);

namespace f2 {

/// Vector over F_2 with bit i holding coordinate i. Dimensions stay <= 64.
using Vec = std::uint64_t;

inline int parity(Vec v) { return __builtin_parityll(v); }
inline bool bit(Vec v, int i) { return (v >> i) & 1U; }

/// Subspace of F_2^n kept in reduced row echelon form, pivot on the highest
/// set bit of each basis row. Two subspaces compare equal iff their reduced
/// bases coincide.
class Subspace {
public:
    /// Adds v to the span; returns false when v was already inside.
    bool insert(Vec v);
    bool contains(Vec v) const;
    /// Reduces v against the basis; the result has no pivot bits set.
    Vec reduce(Vec v) const;

    std::size_t dim() const { return rows_.size(); }
    const std::vector<Vec>& basis() const { return rows_; }
    Vec pivot_mask() const;

    bool operator==(const Subspace& other) const { return rows_ == other.rows_; }

    static Subspace span(const std::vector<Vec>& vectors);

private:
    std::vector<Vec> rows_;  // sorted by pivot, descending
};

std::size_t rank(const std::vector<Vec>& rows);

}  // namespace f2

}  // namespace sol3
