#include "sol3/intlat.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <utility>

#include "sol3/error.hpp"

namespace sol3 {

Int checked_add(Int x, Int y)
{
    Int r;
    if (__builtin_add_overflow(x, y, &r))
        throw Error(ErrorCode::Overflow, "integer overflow in addition");
    return r;
}

Int checked_mul(Int x, Int y)
{
    Int r;
    if (__builtin_mul_overflow(x, y, &r))
        throw Error(ErrorCode::Overflow, "integer overflow in multiplication");
    return r;
}

Int floor_mod(Int x, Int m)
{
    Int r = x % m;
    return r < 0 ? r + m : r;
}

Int gcd(Int x, Int y)
{
    x = x < 0 ? -x : x;
    y = y < 0 ? -y : y;
    while (y != 0) {
        Int t = x % y;
        x = y;
        y = t;
    }
    return x;
}

int two_adic_valuation(Int x)
{
    int v = 0;
    while (x != 0 && x % 2 == 0) {
        x /= 2;
        ++v;
    }
    return v;
}

Int Mat2Z::det() const
{
    __int128 w = static_cast<__int128>(a) * d - static_cast<__int128>(b) * c;
    if (w > INT64_MAX || w < INT64_MIN)
        throw Error(ErrorCode::Overflow, "determinant out of range");
    return static_cast<Int>(w);
}

Int Mat2Z::trace() const { return checked_add(a, d); }

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0)
{
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw Error(ErrorCode::BadShape, "ragged matrix literal");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw Error(ErrorCode::BadShape, "matrix product shape mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < rhs.cols_; ++j) {
            Int acc = 0;
            for (std::size_t k = 0; k < cols_; ++k)
                acc = checked_add(acc, checked_mul((*this)(i, k), rhs(k, j)));
            out(i, j) = acc;
        }
    return out;
}

bool IntMatrix::is_diagonal() const
{
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (r != c && (*this)(r, c) != 0)
                return false;
    return true;
}

std::string IntMatrix::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < cols_; ++c)
            os << (c ? ", " : "") << (*this)(r, c);
        os << ']';
    }
    os << ']';
    return os.str();
}

Int determinant(const IntMatrix& m)
{
    if (m.rows() != m.cols())
        throw Error(ErrorCode::BadShape, "determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    IntMatrix w = m;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && w(swap_row, k) == 0)
                ++swap_row;
            if (swap_row == n)
                return 0;
            for (std::size_t c = 0; c < n; ++c)
                std::swap(w(k, c), w(swap_row, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                __int128 num = static_cast<__int128>(w(i, j)) * w(k, k) -
                               static_cast<__int128>(w(i, k)) * w(k, j);
                num /= prev;  // exact by Sylvester's identity
                if (num > INT64_MAX || num < INT64_MIN)
                    throw Error(ErrorCode::Overflow, "determinant out of range");
                w(i, j) = static_cast<Int>(num);
            }
        prev = w(k, k);
    }
    return checked_mul(sign, w(n - 1, n - 1));
}

IntMatrix SmithForm::diagonal_matrix(std::size_t rows, std::size_t cols) const
{
    IntMatrix d(rows, cols);
    for (std::size_t i = 0; i < rank; ++i)
        d(i, i) = diag[i];
    return d;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t r1, std::size_t r2)
{
    if (r1 == r2)
        return;
    for (std::size_t c = 0; c < m.cols(); ++c)
        std::swap(m(r1, c), m(r2, c));
}

void swap_cols(IntMatrix& m, std::size_t c1, std::size_t c2)
{
    if (c1 == c2)
        return;
    for (std::size_t r = 0; r < m.rows(); ++r)
        std::swap(m(r, c1), m(r, c2));
}

// row[dst] += q * row[src]
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, Int q)
{
    for (std::size_t c = 0; c < m.cols(); ++c)
        m(dst, c) = checked_add(m(dst, c), checked_mul(q, m(src, c)));
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, Int q)
{
    for (std::size_t r = 0; r < m.rows(); ++r)
        m(r, dst) = checked_add(m(r, dst), checked_mul(q, m(r, src)));
}

Int abs_value(Int x) { return x < 0 ? -x : x; }

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a)
{
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    IntMatrix d = a;
    IntMatrix u = IntMatrix::identity(rows);
    IntMatrix v = IntMatrix::identity(cols);

    std::size_t t = 0;
    for (; t < std::min(rows, cols); ++t) {
        bool found_pivot = false;
        for (;;) {
            // Smallest nonzero entry of the trailing block becomes the pivot;
            // its absolute value strictly decreases on every restart.
            std::size_t pr = rows, pc = cols;
            for (std::size_t r = t; r < rows; ++r)
                for (std::size_t c = t; c < cols; ++c)
                    if (d(r, c) != 0 && (pr == rows || abs_value(d(r, c)) < abs_value(d(pr, pc)))) {
                        pr = r;
                        pc = c;
                    }
            if (pr == rows)
                break;
            found_pivot = true;
            swap_rows(d, t, pr);
            swap_rows(u, t, pr);
            swap_cols(d, t, pc);
            swap_cols(v, t, pc);

            const Int p = d(t, t);
            bool clean = true;
            for (std::size_t r = t + 1; r < rows; ++r) {
                Int q = d(r, t) / p;
                if (q != 0) {
                    add_row(d, r, t, -q);
                    add_row(u, r, t, -q);
                }
                clean = clean && d(r, t) == 0;
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                Int q = d(t, c) / p;
                if (q != 0) {
                    add_col(d, c, t, -q);
                    add_col(v, c, t, -q);
                }
                clean = clean && d(t, c) == 0;
            }
            if (!clean)
                continue;

            std::size_t bad_row = rows;
            for (std::size_t r = t + 1; r < rows && bad_row == rows; ++r)
                for (std::size_t c = t + 1; c < cols; ++c)
                    if (d(r, c) % p != 0) {
                        bad_row = r;
                        break;
                    }
            if (bad_row == rows)
                break;
            add_row(d, t, bad_row, 1);
            add_row(u, t, bad_row, 1);
        }
        if (!found_pivot)
            break;
        if (d(t, t) < 0) {
            for (std::size_t c = 0; c < cols; ++c)
                d(t, c) = -d(t, c);
            for (std::size_t c = 0; c < rows; ++c)
                u(t, c) = -u(t, c);
        }
    }

    SmithForm out;
    out.rank = t;
    for (std::size_t i = 0; i < t; ++i)
        out.diag.push_back(d(i, i));
    out.left = std::move(u);
    out.right = std::move(v);
    return out;
}

AbelianGroup AbelianGroup::from_cyclic_factors(int free_rank, const std::vector<Int>& orders)
{
    IntMatrix diag(orders.size(), orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i)
        diag(i, i) = orders[i];
    AbelianGroup g = cokernel(diag);
    g.free_rank += free_rank;
    return g;
}

int AbelianGroup::mod2_rank() const
{
    int r = free_rank;
    for (Int t : torsion)
        r += (t % 2 == 0) ? 1 : 0;
    return r;
}

std::string AbelianGroup::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < free_rank; ++i) {
        os << (first ? "" : " + ") << "Z";
        first = false;
    }
    for (Int t : torsion) {
        os << (first ? "" : " + ") << "Z/" << t;
        first = false;
    }
    if (first)
        os << "0";
    return os.str();
}

AbelianGroup cokernel(const IntMatrix& a)
{
    SmithForm s = smith_normal_form(a);
    AbelianGroup g;
    g.free_rank = static_cast<int>(a.cols() - s.rank);
    for (Int d : s.diag)
        if (d != 1)
            g.torsion.push_back(d);
    return g;
}

std::vector<std::vector<Int>> solve_mod(const IntMatrix& a, Int m)
{
    if (m < 2)
        throw Error(ErrorCode::BadShape, "modulus must be at least 2");
    SmithForm s = smith_normal_form(a);
    std::vector<std::vector<Int>> out;
    for (std::size_t i = 0; i < a.cols(); ++i) {
        Int scale = 1;
        if (i < s.rank)
            scale = m / gcd(s.diag[i], m);
        std::vector<Int> vec(a.cols());
        bool nonzero = false;
        for (std::size_t r = 0; r < a.cols(); ++r) {
            vec[r] = floor_mod(checked_mul(scale, floor_mod(s.right(r, i), m)), m);
            nonzero = nonzero || vec[r] != 0;
        }
        if (nonzero)
            out.push_back(std::move(vec));
    }
    return out;
}

std::vector<std::vector<Int>> integer_kernel(const IntMatrix& a)
{
    SmithForm s = smith_normal_form(a);
    std::vector<std::vector<Int>> out;
    for (std::size_t i = s.rank; i < a.cols(); ++i) {
        std::vector<Int> vec(a.cols());
        for (std::size_t r = 0; r < a.cols(); ++r)
            vec[r] = s.right(r, i);
        out.push_back(std::move(vec));
    }
    return out;
}

namespace f2 {

namespace {
int top_bit(Vec v) { return 63 - __builtin_clzll(v); }
}  // namespace

Vec Subspace::reduce(Vec v) const
{
    for (Vec r : rows_)
        if (bit(v, top_bit(r)))
            v ^= r;
    return v;
}

bool Subspace::contains(Vec v) const { return reduce(v) == 0; }

bool Subspace::insert(Vec v)
{
    v = reduce(v);
    if (v == 0)
        return false;
    const int p = top_bit(v);
    for (Vec& r : rows_)
        if (bit(r, p))
            r ^= v;
    auto pos = std::find_if(rows_.begin(), rows_.end(), [p](Vec r) { return top_bit(r) < p; });
    rows_.insert(pos, v);
    return true;
}

Vec Subspace::pivot_mask() const
{
    Vec m = 0;
    for (Vec r : rows_)
        m |= Vec{1} << top_bit(r);
    return m;
}

Subspace Subspace::span(const std::vector<Vec>& vectors)
{
    Subspace s;
    for (Vec v : vectors)
        s.insert(v);
    return s;
}

std::size_t rank(const std::vector<Vec>& rows) { return Subspace::span(rows).dim(); }

}  // namespace f2

}  // namespace sol3
