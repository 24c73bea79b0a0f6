#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "qcohom/common.hpp"

namespace qcohom {

// Dense matrix over Z with arbitrary-precision entries.  All arithmetic in
// this module is exact; there is no floating point anywhere below.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}

    static IntMatrix identity(int n);
    static IntMatrix zero(int rows, int cols) { return IntMatrix(rows, cols); }
    static IntMatrix from_rows(const std::vector<IntVec>& rows);
    static IntMatrix column(const IntVec& v);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Int& operator()(int i, int j) { return data_[size_t(i) * cols_ + j]; }
    const Int& operator()(int i, int j) const { return data_[size_t(i) * cols_ + j]; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix operator-() const;
    IntMatrix transposed() const;

    IntVec apply(const IntVec& v) const;          // this * v (column)
    IntVec apply_transposed(const IntVec& v) const;  // this^T * v

    IntVec col(int j) const;
    IntVec row(int i) const;
    void set_col(int j, const IntVec& v);
    // Horizontal concatenation [this | o].
    IntMatrix hcat(const IntMatrix& o) const;
    IntMatrix submatrix_cols(const std::vector<int>& idx) const;
    IntMatrix submatrix_rows(const std::vector<int>& idx) const;

    bool is_zero() const;
    bool is_identity() const;

    Int det() const;  // Bareiss fraction-free elimination; square only
    std::string str() const;

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

// U * A * V = D with U, V unimodular and D diagonal with d1 | d2 | ...
// u_inv and v_inv are tracked during reduction so callers can solve and
// lift without re-inverting.
struct SmithDecomposition {
    IntMatrix u, d, v;
    IntMatrix u_inv, v_inv;
    std::vector<Int> diagonal() const;
    int rank() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

// Columns form a Z-basis of { x : A x = 0 }.  0 columns when trivial; the
// kernel of a 0-row matrix is the identity basis.
IntMatrix kernel_basis(const IntMatrix& a);

// Inverse of a matrix with determinant +-1; MalformedInput otherwise.
IntMatrix unimodular_inverse(const IntMatrix& a);

// Exact solution of A x = b over Z, if one exists.
std::optional<IntVec> solve(const IntMatrix& a, const IntVec& b);

// A x == b (mod m); NoSolution is a value, not a fault.
std::optional<IntVec> solve_mod(const IntMatrix& a, const IntVec& b, const Int& m);

// Finite(ly generated) abelian quotient span(generators)/span(relations),
// with membership machinery retained.
struct AbelianGroupStructure {
    // Invariant factors, each >= 2 or 0 (0 meaning a free Z factor).
    std::vector<Int> factors;
    // Lifts of the cyclic-factor generators, in the coordinates of the
    // input generator columns (one column per factor).
    IntMatrix generator_coords;
    // Generators in ambient coordinates (input generator matrix * coords).
    IntMatrix generator_ambient;

    Int order() const;  // product of finite factors; 0 if any factor is 0
    bool trivial() const { return factors.empty(); }

    // Class coordinates (mod factors) of an ambient vector; nullopt when
    // the vector is not in the span of the generators.
    std::optional<IntVec> coords_of(const IntVec& ambient) const;
    IntVec coords_of_gencoords(const IntVec& gen_coords) const;
    IntVec reduce_coords(const IntVec& raw) const;

    // internals
    IntMatrix gen_matrix;
    SmithDecomposition gen_snf;
    IntMatrix to_classes;  // rows of the quotient transform at factor positions
};

AbelianGroupStructure quotient_structure(const IntMatrix& generators,
                                         const IntMatrix& relations);

// Bit matrix over F_2.
class F2Matrix {
  public:
    F2Matrix() = default;
    F2Matrix(int rows, int cols) : rows_(rows), cols_(cols), bits_(size_t(rows) * cols, 0) {}
    static F2Matrix identity(int n);
    static F2Matrix from_int(const IntMatrix& m);  // entries reduced mod 2

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    uint8_t get(int i, int j) const { return bits_[size_t(i) * cols_ + j]; }
    void set(int i, int j, uint8_t v) { bits_[size_t(i) * cols_ + j] = v & 1; }

    F2Matrix operator*(const F2Matrix& o) const;
    F2Matrix operator+(const F2Matrix& o) const;
    bool operator==(const F2Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && bits_ == o.bits_;
    }
    int rank() const;

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<uint8_t> bits_;
};

// Jordan block counts of an involution over F_2: j2 = rank(M - I),
// j1 = n - 2 j2.  Throws NotInvolution when M^2 != I.
std::pair<int, int> f2_jordan_counts(const F2Matrix& m);

}  // namespace qcohom
