#include "qcohom/exactalg.hpp"

#include <algorithm>
#include <sstream>

namespace qcohom {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows) {
    int r = int(rows.size());
    int c = r ? int(rows[0].size()) : 0;
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (int(rows[i].size()) != c) throw Error("ragged row list");
        for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::column(const IntVec& v) {
    IntMatrix m(int(v.size()), 1);
    for (size_t i = 0; i < v.size(); ++i) m(int(i), 0) = v[i];
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw Error("matrix product shape mismatch");
    IntMatrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& a = (*this)(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Int& b = o(k, j);
                if (b != 0) out(i, j) += a * b;
            }
        }
    return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix sum shape mismatch");
    IntMatrix out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + o.data_[i];
    return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix diff shape mismatch");
    IntMatrix out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - o.data_[i];
    return out;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = -data_[i];
    return out;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

IntVec IntMatrix::apply(const IntVec& v) const {
    if (int(v.size()) != cols_) throw Error("matrix-vector shape mismatch");
    IntVec out(rows_);
    for (int i = 0; i < rows_; ++i) {
        Int s = 0;
        for (int j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0 && v[j] != 0) s += (*this)(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

IntVec IntMatrix::apply_transposed(const IntVec& v) const {
    if (int(v.size()) != rows_) throw Error("matrix-vector shape mismatch");
    IntVec out(cols_);
    for (int i = 0; i < rows_; ++i) {
        if (v[i] == 0) continue;
        for (int j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0) out[j] += (*this)(i, j) * v[i];
    }
    return out;
}

IntVec IntMatrix::col(int j) const {
    IntVec v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

IntVec IntMatrix::row(int i) const {
    IntVec v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
}

void IntMatrix::set_col(int j, const IntVec& v) {
    for (int i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

IntMatrix IntMatrix::hcat(const IntMatrix& o) const {
    if (rows_ != o.rows_ && !empty() && !o.empty()) throw Error("hcat shape mismatch");
    int r = std::max(rows_, o.rows_);
    IntMatrix out(r, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    for (int i = 0; i < o.rows_; ++i)
        for (int j = 0; j < o.cols_; ++j) out(i, cols_ + j) = o(i, j);
    return out;
}

IntMatrix IntMatrix::submatrix_cols(const std::vector<int>& idx) const {
    IntMatrix out(rows_, int(idx.size()));
    for (size_t j = 0; j < idx.size(); ++j)
        for (int i = 0; i < rows_; ++i) out(i, int(j)) = (*this)(i, idx[j]);
    return out;
}

IntMatrix IntMatrix::submatrix_rows(const std::vector<int>& idx) const {
    IntMatrix out(int(idx.size()), cols_);
    for (size_t i = 0; i < idx.size(); ++i)
        for (int j = 0; j < cols_; ++j) out(int(i), j) = (*this)(idx[i], j);
    return out;
}

bool IntMatrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

bool IntMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if ((*this)(i, j) != Int(i == j ? 1 : 0)) return false;
    return true;
}

Int IntMatrix::det() const {
    if (rows_ != cols_) throw Error("det of non-square matrix");
    int n = rows_;
    if (n == 0) return 1;
    IntMatrix a = *this;
    Int sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? " [" : "[");
        for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

std::vector<Int> SmithDecomposition::diagonal() const {
    std::vector<Int> out;
    int n = std::min(d.rows(), d.cols());
    for (int i = 0; i < n; ++i) out.push_back(d(i, i));
    return out;
}

int SmithDecomposition::rank() const {
    int r = 0;
    for (const auto& x : diagonal())
        if (x != 0) ++r;
    return r;
}

namespace {

struct SnfWork {
    IntMatrix a, u, v, u_inv, v_inv;

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
        for (int c = 0; c < u.cols(); ++c) std::swap(u(i, c), u(j, c));
        for (int r = 0; r < u_inv.rows(); ++r) std::swap(u_inv(r, i), u_inv(r, j));
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
        for (int r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
        for (int c = 0; c < v_inv.cols(); ++c) std::swap(v_inv(i, c), v_inv(j, c));
    }
    // row i += q * row j
    void add_row(int i, int j, const Int& q) {
        if (q == 0) return;
        for (int c = 0; c < a.cols(); ++c) a(i, c) += q * a(j, c);
        for (int c = 0; c < u.cols(); ++c) u(i, c) += q * u(j, c);
        for (int r = 0; r < u_inv.rows(); ++r) u_inv(r, j) -= q * u_inv(r, i);
    }
    // col i += q * col j
    void add_col(int i, int j, const Int& q) {
        if (q == 0) return;
        for (int r = 0; r < a.rows(); ++r) a(r, i) += q * a(r, j);
        for (int r = 0; r < v.rows(); ++r) v(r, i) += q * v(r, j);
        for (int c = 0; c < v_inv.cols(); ++c) v_inv(j, c) -= q * v_inv(i, c);
    }
    void negate_row(int i) {
        for (int c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
        for (int c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
        for (int r = 0; r < u_inv.rows(); ++r) u_inv(r, i) = -u_inv(r, i);
    }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& input) {
    const int m = input.rows(), n = input.cols();
    SnfWork w{input, IntMatrix::identity(m), IntMatrix::identity(n),
              IntMatrix::identity(m), IntMatrix::identity(n)};

    const int steps = std::min(m, n);
    for (int t = 0; t < steps; ++t) {
        for (;;) {
            // Pivot: smallest nonzero absolute value in the trailing
            // submatrix, row-major tie-break, so output is deterministic.
            int pi = -1, pj = -1;
            Int best = 0;
            for (int i = t; i < m; ++i)
                for (int j = t; j < n; ++j) {
                    const Int& x = w.a(i, j);
                    if (x == 0) continue;
                    Int ax = abs(x);
                    if (pi < 0 || ax < best) { best = ax; pi = i; pj = j; }
                }
            if (pi < 0) { pi = pj = -1; }
            if (pi < 0) break;  // trailing block is zero
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);
            if (w.a(t, t) < 0) w.negate_row(t);

            bool clean = true;
            for (int i = t + 1; i < m; ++i) {
                Int q = w.a(i, t) / w.a(t, t);
                w.add_row(i, t, -q);
                if (w.a(i, t) != 0) clean = false;
            }
            for (int j = t + 1; j < n; ++j) {
                Int q = w.a(t, j) / w.a(t, t);
                w.add_col(j, t, -q);
                if (w.a(t, j) != 0) clean = false;
            }
            if (!clean) continue;  // smaller remainder exists, re-pivot

            // Enforce divisibility: pivot must divide the trailing block.
            bool divides = true;
            for (int i = t + 1; i < m && divides; ++i)
                for (int j = t + 1; j < n; ++j)
                    if (w.a(i, j) % w.a(t, t) != 0) {
                        w.add_row(t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (w.a(t, t) == 0) break;
    }
    return SmithDecomposition{w.u, w.a, w.v, w.u_inv, w.v_inv};
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
    auto s = smith_normal_form(a);
    if (!s.d.is_identity()) throw MalformedInput("matrix is not unimodular");
    // U A V = I, so A^-1 = V U
    return s.v * s.u;
}

IntMatrix kernel_basis(const IntMatrix& a) {
    if (a.rows() == 0) return IntMatrix::identity(a.cols());
    SmithDecomposition s = smith_normal_form(a);
    std::vector<int> idx;
    for (int j = 0; j < a.cols(); ++j) {
        bool zero = j >= std::min(a.rows(), a.cols()) || s.d(j, j) == 0;
        if (zero) idx.push_back(j);
    }
    return s.v.submatrix_cols(idx);
}

namespace {

std::optional<IntVec> solve_with(const SmithDecomposition& s, int rows, int cols,
                                 const IntVec& b) {
    IntVec ub = s.u.apply(b);
    IntVec y(cols, 0);
    int diag = std::min(rows, cols);
    for (int i = 0; i < rows; ++i) {
        Int d = (i < diag) ? s.d(i, i) : Int(0);
        if (d == 0) {
            if (ub[i] != 0) return std::nullopt;
        } else {
            if (ub[i] % d != 0) return std::nullopt;
            y[i] = ub[i] / d;
        }
    }
    return s.v.apply(y);
}

}  // namespace

std::optional<IntVec> solve(const IntMatrix& a, const IntVec& b) {
    if (int(b.size()) != a.rows()) throw Error("solve: shape mismatch");
    return solve_with(smith_normal_form(a), a.rows(), a.cols(), b);
}

std::optional<IntVec> solve_mod(const IntMatrix& a, const IntVec& b, const Int& m) {
    if (m < 1) throw Error("solve_mod: modulus must be >= 1");
    if (m == 1) return IntVec(a.cols(), 0);
    IntMatrix mi(a.rows(), a.rows());
    for (int i = 0; i < a.rows(); ++i) mi(i, i) = m;
    auto sol = solve(a.hcat(mi), b);
    if (!sol) return std::nullopt;
    IntVec x(a.cols());
    for (int j = 0; j < a.cols(); ++j) x[j] = int_mod((*sol)[j], m);
    return x;
}

Int AbelianGroupStructure::order() const {
    Int p = 1;
    for (const auto& f : factors) {
        if (f == 0) return 0;
        p *= f;
    }
    return p;
}

IntVec AbelianGroupStructure::reduce_coords(const IntVec& raw) const {
    IntVec out(raw.size());
    for (size_t i = 0; i < raw.size(); ++i)
        out[i] = factors[i] == 0 ? raw[i] : int_mod(raw[i], factors[i]);
    return out;
}

IntVec AbelianGroupStructure::coords_of_gencoords(const IntVec& gen_coords) const {
    return reduce_coords(to_classes.apply(gen_coords));
}

std::optional<IntVec> AbelianGroupStructure::coords_of(const IntVec& ambient) const {
    // Solve gen_matrix * y = ambient using the stored SNF.
    IntVec ub = gen_snf.u.apply(ambient);
    IntVec y(gen_matrix.cols(), 0);
    int diag = std::min(gen_matrix.rows(), gen_matrix.cols());
    for (int i = 0; i < gen_matrix.rows(); ++i) {
        Int d = (i < diag) ? gen_snf.d(i, i) : Int(0);
        if (d == 0) {
            if (ub[i] != 0) return std::nullopt;
        } else {
            if (ub[i] % d != 0) return std::nullopt;
            y[i] = ub[i] / d;
        }
    }
    return coords_of_gencoords(gen_snf.v.apply(y));
}

AbelianGroupStructure quotient_structure(const IntMatrix& generators,
                                         const IntMatrix& relations) {
    const int n = generators.cols();
    SmithDecomposition gs = smith_normal_form(generators);

    // Relation columns expressed in generator coordinates.
    IntMatrix c(n, relations.cols());
    for (int j = 0; j < relations.cols(); ++j) {
        auto x = solve_with(gs, generators.rows(), n, relations.col(j));
        if (!x) throw RelationNotInSpan("relation column " + std::to_string(j) +
                                        " is not in the span of the generators");
        c.set_col(j, *x);
    }

    // Non-free generator sets: mod out the kernel of the generator matrix.
    std::vector<int> zero_cols;
    int gdiag = std::min(generators.rows(), n);
    for (int i = 0; i < n; ++i)
        if (i >= gdiag || gs.d(i, i) == 0) zero_cols.push_back(i);
    IntMatrix k = gs.v.submatrix_cols(zero_cols);
    IntMatrix rel = c.hcat(k);

    SmithDecomposition s = smith_normal_form(rel);
    AbelianGroupStructure out;
    out.gen_matrix = generators;
    out.gen_snf = gs;

    std::vector<int> keep;
    int diag = std::min(rel.rows(), rel.cols());
    for (int i = 0; i < n; ++i) {
        Int d = (i < diag) ? s.d(i, i) : Int(0);
        if (d == 1) continue;
        keep.push_back(i);
        out.factors.push_back(d < 0 ? -d : d);
    }
    out.to_classes = s.u.submatrix_rows(keep);
    out.generator_coords = s.u_inv.submatrix_cols(keep);
    out.generator_ambient = generators * out.generator_coords;
    return out;
}

F2Matrix F2Matrix::identity(int n) {
    F2Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

F2Matrix F2Matrix::from_int(const IntMatrix& m) {
    F2Matrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            out.set(i, j, uint8_t(int_mod(m(i, j), 2) == 1));
    return out;
}

F2Matrix F2Matrix::operator*(const F2Matrix& o) const {
    if (cols_ != o.rows_) throw Error("F2 product shape mismatch");
    F2Matrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k)
            if (get(i, k))
                for (int j = 0; j < o.cols_; ++j)
                    out.set(i, j, out.get(i, j) ^ o.get(k, j));
    return out;
}

F2Matrix F2Matrix::operator+(const F2Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("F2 sum shape mismatch");
    F2Matrix out(rows_, cols_);
    for (size_t i = 0; i < bits_.size(); ++i) out.bits_[i] = bits_[i] ^ o.bits_[i];
    return out;
}

int F2Matrix::rank() const {
    F2Matrix a = *this;
    int r = 0;
    for (int j = 0; j < cols_ && r < rows_; ++j) {
        int p = -1;
        for (int i = r; i < rows_; ++i)
            if (a.get(i, j)) { p = i; break; }
        if (p < 0) continue;
        for (int c = 0; c < cols_; ++c) {
            uint8_t t = a.get(r, c);
            a.set(r, c, a.get(p, c));
            a.set(p, c, t);
        }
        for (int i = 0; i < rows_; ++i)
            if (i != r && a.get(i, j))
                for (int c = 0; c < cols_; ++c) a.set(i, c, a.get(i, c) ^ a.get(r, c));
        ++r;
    }
    return r;
}

std::pair<int, int> f2_jordan_counts(const F2Matrix& m) {
    if (m.rows() != m.cols()) throw NotInvolution("matrix is not square");
    if (!(m * m == F2Matrix::identity(m.rows())))
        throw NotInvolution("matrix squared is not the identity over F2");
    F2Matrix diff = m + F2Matrix::identity(m.rows());
    int j2 = diff.rank();
    int j1 = m.rows() - 2 * j2;
    return {j1, j2};
}

}  // namespace qcohom
