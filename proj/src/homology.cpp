#include "spinlab/homology.hpp"

#include "spinlab/errors.hpp"

#include <algorithm>
#include <utility>

namespace spinlab {

GF2Matrix::GF2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * ((cols + 63) / 64), 0)
{
}

GF2Matrix GF2Matrix::identity(std::size_t n)
{
    GF2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

bool GF2Matrix::get(std::size_t r, std::size_t c) const
{
    return (bits_[r * words_ + c / 64] >> (c % 64)) & 1u;
}

void GF2Matrix::set(std::size_t r, std::size_t c, bool value)
{
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    if (value)
        bits_[r * words_ + c / 64] |= bit;
    else
        bits_[r * words_ + c / 64] &= ~bit;
}

void GF2Matrix::flip(std::size_t r, std::size_t c)
{
    bits_[r * words_ + c / 64] ^= std::uint64_t{1} << (c % 64);
}

BitVector GF2Matrix::row(std::size_t r) const
{
    BitVector out(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out[c] = get(r, c);
    return out;
}

void GF2Matrix::add_row(std::size_t r, std::size_t s)
{
    for (std::size_t w = 0; w < words_; ++w) bits_[r * words_ + w] ^= bits_[s * words_ + w];
}

void GF2Matrix::swap_rows(std::size_t r, std::size_t s)
{
    for (std::size_t w = 0; w < words_; ++w) std::swap(bits_[r * words_ + w], bits_[s * words_ + w]);
}

BitVector GF2Matrix::apply(const BitVector& x) const
{
    if (x.size() != cols_) throw AlgebraError("GF2Matrix::apply: shape mismatch");
    BitVector out(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::uint8_t acc = 0;
        for (std::size_t c = 0; c < cols_; ++c) acc ^= static_cast<std::uint8_t>(get(r, c) & (x[c] & 1u));
        out[r] = acc;
    }
    return out;
}

GF2Matrix GF2Matrix::transpose() const
{
    GF2Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) t.set(c, r, true);
    return t;
}

GF2Matrix operator*(const GF2Matrix& a, const GF2Matrix& b)
{
    if (a.cols_ != b.rows_) throw AlgebraError("GF2Matrix product: shape mismatch");
    GF2Matrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t k = 0; k < a.cols_; ++k)
            if (a.get(r, k))
                for (std::size_t w = 0; w < out.words_; ++w) out.bits_[r * out.words_ + w] ^= b.bits_[k * b.words_ + w];
    return out;
}

bool GF2Matrix::is_zero() const
{
    return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
}

namespace {

// Reduced row echelon form in place; returns the pivot column of each
// leading row. Only the first `limit` columns are eligible as pivots.
std::vector<std::size_t> gf2_reduce(GF2Matrix& m, std::size_t limit)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < limit && row < m.rows(); ++c) {
        std::size_t p = row;
        while (p < m.rows() && !m.get(p, c)) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(row, p);
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (r != row && m.get(r, c)) m.add_row(r, row);
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

} // namespace

std::size_t gf2_rank(const GF2Matrix& a)
{
    GF2Matrix m = a;
    return gf2_reduce(m, m.cols()).size();
}

std::vector<BitVector> gf2_nullspace(const GF2Matrix& a)
{
    GF2Matrix m = a;
    const auto pivots = gf2_reduce(m, m.cols());
    std::vector<BitVector> basis;
    std::size_t next = 0;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (next < pivots.size() && pivots[next] == f) {
            ++next;
            continue;
        }
        BitVector x(a.cols(), 0);
        x[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m.get(r, f);
        basis.push_back(std::move(x));
    }
    return basis;
}

GF2Solution gf2_solve(const GF2Matrix& a, const BitVector& b)
{
    if (b.size() != a.rows()) throw AlgebraError("gf2_solve: right-hand side has the wrong length");
    const std::size_t n = a.cols();
    // Augmented [a | b | identity] so that row operations are recorded.
    GF2Matrix m(a.rows(), n + 1 + a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < n; ++c)
            if (a.get(r, c)) m.set(r, c, true);
        m.set(r, n, b[r] & 1u);
        m.set(r, n + 1 + r, true);
    }
    const auto pivots = gf2_reduce(m, n);
    GF2Solution out;
    for (std::size_t r = pivots.size(); r < m.rows(); ++r) {
        if (m.get(r, n)) {
            out.certificate.assign(a.rows(), 0);
            for (std::size_t i = 0; i < a.rows(); ++i) out.certificate[i] = m.get(r, n + 1 + i);
            return out;
        }
    }
    out.feasible = true;
    out.particular.assign(n, 0);
    for (std::size_t r = 0; r < pivots.size(); ++r) out.particular[pivots[r]] = m.get(r, n);
    out.nullspace = gf2_nullspace(a);
    return out;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> entries)
{
    rows_ = entries.size();
    cols_ = rows_ == 0 ? 0 : entries.begin()->size();
    for (const auto& row : entries) {
        if (row.size() != cols_) throw AlgebraError("IntMatrix: ragged initializer");
        for (long long x : row) data_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntVector IntMatrix::apply(const IntVector& x) const
{
    if (x.size() != cols_) throw AlgebraError("IntMatrix::apply: shape mismatch");
    IntVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!(*this)(r, c).is_zero() && !x[c].is_zero()) out[r] += (*this)(r, c) * x[c];
    return out;
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

GF2Matrix IntMatrix::mod2() const
{
    GF2Matrix m(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (bit_test((*this)(r, c), 0)) m.set(r, c, true);
    return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols_ != b.rows_) throw AlgebraError("IntMatrix product: shape mismatch");
    IntMatrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Integer& x = a(r, k);
            if (x.is_zero()) continue;
            for (std::size_t c = 0; c < b.cols_; ++c)
                if (!b(k, c).is_zero()) out(r, c) += x * b(k, c);
        }
    return out;
}

bool IntMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x.is_zero(); });
}

namespace {

// Elementary operations applied to the working matrix and mirrored on the
// transforms so that u * a * v == m and the inverses stay exact.
struct SmithState {
    IntMatrix m, u, v, u_inv, v_inv;

    // row i -= q * row t
    void row_sub(std::size_t i, std::size_t t, const Integer& q)
    {
        for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) -= q * m(t, c);
        for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) -= q * u(t, c);
        for (std::size_t r = 0; r < u_inv.rows(); ++r) u_inv(r, t) += q * u_inv(r, i);
    }
    // col j -= q * col t
    void col_sub(std::size_t j, std::size_t t, const Integer& q)
    {
        for (std::size_t r = 0; r < m.rows(); ++r) m(r, j) -= q * m(r, t);
        for (std::size_t r = 0; r < v.rows(); ++r) v(r, j) -= q * v(r, t);
        for (std::size_t c = 0; c < v_inv.cols(); ++c) v_inv(t, c) += q * v_inv(j, c);
    }
    void row_swap(std::size_t i, std::size_t j)
    {
        if (i == j) return;
        for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(i, c), m(j, c));
        for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(i, c), u(j, c));
        for (std::size_t r = 0; r < u_inv.rows(); ++r) std::swap(u_inv(r, i), u_inv(r, j));
    }
    void col_swap(std::size_t i, std::size_t j)
    {
        if (i == j) return;
        for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, i), m(r, j));
        for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
        for (std::size_t c = 0; c < v_inv.cols(); ++c) std::swap(v_inv(i, c), v_inv(j, c));
    }
    void row_negate(std::size_t i)
    {
        for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) = -m(i, c);
        for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
        for (std::size_t r = 0; r < u_inv.rows(); ++r) u_inv(r, i) = -u_inv(r, i);
    }
};

} // namespace

SmithForm smith_normal_form(const IntMatrix& a)
{
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    SmithState st{a, IntMatrix::identity(rows), IntMatrix::identity(cols), IntMatrix::identity(rows),
                  IntMatrix::identity(cols)};
    IntMatrix& m = st.m;
    std::vector<Integer> invariants;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        while (true) {
            // Smallest nonzero entry of the remaining block becomes the pivot.
            std::size_t pr = rows, pc = cols;
            for (std::size_t r = t; r < rows; ++r)
                for (std::size_t c = t; c < cols; ++c)
                    if (!m(r, c).is_zero() && (pr == rows || abs(m(r, c)) < abs(m(pr, pc)))) {
                        pr = r;
                        pc = c;
                    }
            if (pr == rows) break;
            st.row_swap(t, pr);
            st.col_swap(t, pc);
            bool clean = true;
            for (std::size_t r = t + 1; r < rows; ++r) {
                if (m(r, t).is_zero()) continue;
                st.row_sub(r, t, m(r, t) / m(t, t));
                if (!m(r, t).is_zero()) clean = false;
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                if (m(t, c).is_zero()) continue;
                st.col_sub(c, t, m(t, c) / m(t, t));
                if (!m(t, c).is_zero()) clean = false;
            }
            if (!clean) continue;
            // Enforce divisibility by folding an offending row into row t.
            std::size_t bad = rows;
            for (std::size_t r = t + 1; r < rows && bad == rows; ++r)
                for (std::size_t c = t + 1; c < cols; ++c)
                    if (!Integer(m(r, c) % m(t, t)).is_zero()) {
                        bad = r;
                        break;
                    }
            if (bad == rows) break;
            st.row_sub(t, bad, Integer(-1));
        }
        if (m(t, t).is_zero()) break;
        if (m(t, t) < 0) st.row_negate(t);
        invariants.push_back(m(t, t));
    }
    return SmithForm{std::move(st.u), std::move(st.m), std::move(st.v), std::move(invariants), std::move(st.u_inv),
                     std::move(st.v_inv)};
}

IntSolution int_solve(const IntMatrix& a, const IntVector& b)
{
    if (b.size() != a.rows()) throw AlgebraError("int_solve: right-hand side has the wrong length");
    const SmithForm s = smith_normal_form(a);
    const IntVector y = s.u.apply(b);
    IntSolution out;
    IntVector z(a.cols());
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (i < s.rank()) {
            if (!Integer(y[i] % s.invariants[i]).is_zero()) return out;
            z[i] = y[i] / s.invariants[i];
        } else if (!y[i].is_zero()) {
            return out;
        }
    }
    out.feasible = true;
    out.particular = s.v.apply(z);
    for (std::size_t j = s.rank(); j < a.cols(); ++j) {
        IntVector k(a.cols());
        for (std::size_t r = 0; r < a.cols(); ++r) k[r] = s.v(r, j);
        out.nullspace.push_back(std::move(k));
    }
    return out;
}

namespace {

IntVector to_int(const BitVector& x)
{
    IntVector out;
    for (auto bit : x) out.emplace_back(bit & 1u);
    return out;
}

CohomologyGroup gf2_cohomology(const IntMatrix& d_prev, const IntMatrix& d_next)
{
    const GF2Matrix prev = d_prev.mod2();
    const GF2Matrix next = d_next.mod2();
    if (!(next * prev).is_zero()) throw AlgebraError("cohomology: d * d != 0 mod 2");
    const std::size_t n = d_prev.rows();
    // Rows: image basis first, then candidate kernel vectors; a kernel
    // vector is kept when it raises the rank.
    GF2Matrix span(0, n);
    std::size_t rank = 0;
    auto try_add = [&](const BitVector& v) {
        GF2Matrix grown(span.rows() + 1, n);
        for (std::size_t r = 0; r < span.rows(); ++r)
            for (std::size_t c = 0; c < n; ++c) grown.set(r, c, span.get(r, c));
        for (std::size_t c = 0; c < n; ++c) grown.set(span.rows(), c, v[c] & 1u);
        const std::size_t new_rank = gf2_rank(grown);
        if (new_rank == rank) return false;
        span = std::move(grown);
        rank = new_rank;
        return true;
    };
    const GF2Matrix prev_t = prev.transpose();
    for (std::size_t c = 0; c < prev_t.rows(); ++c) try_add(prev_t.row(c));
    CohomologyGroup out;
    const auto kernel = next.rows() == 0 ? std::vector<BitVector>{} : gf2_nullspace(next);
    if (next.rows() == 0) {
        for (std::size_t i = 0; i < n; ++i) {
            BitVector e(n, 0);
            e[i] = 1;
            if (try_add(e)) out.free_generators.push_back(to_int(e));
        }
    } else {
        for (const auto& k : kernel)
            if (try_add(k)) out.free_generators.push_back(to_int(k));
    }
    out.free_rank = out.free_generators.size();
    return out;
}

} // namespace

CohomologyGroup cohomology(const IntMatrix& d_prev, const IntMatrix& d_next, Coefficients coefficients)
{
    if (d_next.cols() != d_prev.rows()) throw AlgebraError("cohomology: differentials do not compose");
    if (coefficients == Coefficients::GF2) return gf2_cohomology(d_prev, d_next);
    if (!(d_next * d_prev).is_zero()) throw AlgebraError("cohomology: d * d != 0");
    const std::size_t n = d_prev.rows();
    const SmithForm next = smith_normal_form(d_next);
    const std::size_t r = next.rank();
    const std::size_t kdim = n - r;
    // Kernel basis: the last kdim columns of v; image of d_prev in those
    // coordinates: the matching rows of v^-1 * d_prev.
    const IntMatrix coords = next.v_inverse * d_prev;
    IntMatrix image(kdim, d_prev.cols());
    for (std::size_t i = 0; i < kdim; ++i)
        for (std::size_t c = 0; c < d_prev.cols(); ++c) image(i, c) = coords(r + i, c);
    const SmithForm q = smith_normal_form(image);
    // Generator i of the quotient is (kernel basis) * u^-1 column i.
    auto generator = [&](std::size_t i) {
        IntVector g(n);
        for (std::size_t j = 0; j < kdim; ++j) {
            const Integer& w = q.u_inverse(j, i);
            if (w.is_zero()) continue;
            for (std::size_t row = 0; row < n; ++row) g[row] += next.v(row, r + j) * w;
        }
        return g;
    };
    CohomologyGroup out;
    for (std::size_t i = 0; i < q.rank(); ++i) {
        if (q.invariants[i] == 1) continue;
        out.torsion.push_back(q.invariants[i]);
        out.torsion_generators.push_back(generator(i));
    }
    for (std::size_t i = q.rank(); i < kdim; ++i) out.free_generators.push_back(generator(i));
    out.free_rank = out.free_generators.size();
    return out;
}

BocksteinResult bockstein_w3(const BitVector& w2, const IntMatrix& d2)
{
    if (w2.size() != d2.cols()) throw AlgebraError("bockstein_w3: cochain has the wrong length");
    const IntVector lift = to_int(w2);
    const IntVector boundary = d2.apply(lift);
    BocksteinResult out;
    for (const auto& x : boundary) {
        if (bit_test(x, 0)) throw AlgebraError("bockstein_w3: w2 is not a mod-2 cocycle");
        out.representative.push_back(x / 2);
        out.representative_mod2.push_back(static_cast<std::uint8_t>(bit_test(x / 2, 0)));
    }
    const IntSolution s = int_solve(d2, out.representative);
    out.zero = s.feasible;
    if (out.zero) {
        for (std::size_t i = 0; i < lift.size(); ++i) out.integral_lift.push_back(lift[i] - 2 * s.particular[i]);
    }
    out.mod2_coboundary = gf2_solve(d2.mod2(), out.representative_mod2).feasible;
    return out;
}

DualCochains dual_cochains(const DualSkeleton& sk)
{
    DualCochains out;
    out.d0 = IntMatrix(sk.facets.size(), static_cast<std::size_t>(sk.simplex_count));
    for (const auto& f : sk.facets) {
        out.d0(static_cast<std::size_t>(f.id), static_cast<std::size_t>(f.simplex2)) += 1;
        out.d0(static_cast<std::size_t>(f.id), static_cast<std::size_t>(f.simplex1)) -= 1;
    }
    out.d1 = IntMatrix(sk.circuits.size(), sk.facets.size());
    for (const auto& c : sk.circuits)
        for (const auto& st : c.steps)
            out.d1(static_cast<std::size_t>(c.id), static_cast<std::size_t>(st.facet_class)) += st.direction;
    out.d2 = IntMatrix(sk.links.size(), sk.circuits.size());
    for (const auto& l : sk.links)
        for (const auto& [w, x] : l.incidence) out.d2(static_cast<std::size_t>(l.id), static_cast<std::size_t>(w)) = x;
    return out;
}

} // namespace spinlab
