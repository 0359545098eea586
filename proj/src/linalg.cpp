#include "apolar/linalg.hpp"

#include "apolar/errors.hpp"

namespace apolar {

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::from_rows(const std::vector<std::vector<Rat>>& rows) {
    if (rows.empty()) return Mat();
    Mat m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw internal_error("ragged matrix rows");
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Mat Mat::mul(const Mat& other) const {
    if (cols_ != other.rows_) throw internal_error("matrix product shape mismatch");
    Mat r(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& v = at(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                if (other.at(k, j) == 0) continue;
                r.at(i, j) += v * other.at(k, j);
            }
        }
    return r;
}

std::vector<Rat> Mat::mul_vec(const std::vector<Rat>& v) const {
    if (v.size() != cols_) throw internal_error("matrix*vector shape mismatch");
    std::vector<Rat> r(rows_, Rat(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0 && v[j] != 0) r[i] += at(i, j) * v[j];
    return r;
}

std::vector<Rat> Mat::row_mul(const std::vector<Rat>& v) const {
    if (v.size() != rows_) throw internal_error("vector*matrix shape mismatch");
    std::vector<Rat> r(cols_, Rat(0));
    for (std::size_t i = 0; i < rows_; ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0) r[j] += v[i] * at(i, j);
    }
    return r;
}

void Mat::append_row(const std::vector<Rat>& row) {
    if (rows_ == 0 && cols_ == 0) cols_ = row.size();
    if (row.size() != cols_) throw internal_error("appended row has wrong length");
    a_.insert(a_.end(), row.begin(), row.end());
    ++rows_;
}

std::vector<Rat> Mat::row(std::size_t i) const {
    std::vector<Rat> r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

namespace {

// Scale a row to coprime integers, positive leading entry. Keeps entries
// small during elimination without affecting the row space.
void normalize_row_content(Mat& m, std::size_t i) {
    Int num_gcd = 0;
    Int den_lcm = 1;
    bool any = false;
    int lead_sign = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        const Rat& v = m.at(i, j);
        if (v == 0) continue;
        if (!any) lead_sign = sgn(v);
        any = true;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
    }
    if (!any) return;
    Rat scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (lead_sign < 0) scale = -scale;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (m.at(i, j) != 0) m.at(i, j) *= scale;
}

} // namespace

RrefResult rref(Mat m) {
    const std::size_t nr = m.rows();
    const std::size_t nc = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t i = 0; i < nr; ++i) normalize_row_content(m, i);
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t sel = nr;
        for (std::size_t i = r; i < nr; ++i)
            if (m.at(i, c) != 0) { sel = i; break; }
        if (sel == nr) continue;
        if (sel != r)
            for (std::size_t j = 0; j < nc; ++j) swap(m.at(sel, j), m.at(r, j));
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rat f = m.at(i, c) / m.at(r, c);
            for (std::size_t j = c; j < nc; ++j)
                if (m.at(r, j) != 0) m.at(i, j) -= f * m.at(r, j);
            normalize_row_content(m, i);
        }
        pivots.push_back(c);
        ++r;
    }
    // Scale pivots to one and pack the nonzero rows.
    Mat out(r, nc);
    for (std::size_t i = 0; i < r; ++i) {
        Rat inv = 1 / m.at(i, pivots[i]);
        for (std::size_t j = 0; j < nc; ++j)
            if (m.at(i, j) != 0) out.at(i, j) = m.at(i, j) * inv;
    }
    return {std::move(out), std::move(pivots)};
}

std::size_t rank(const Mat& m) {
    return rref(m).pivots.size();
}

std::vector<std::vector<Rat>> kernel_basis(const Mat& a) {
    RrefResult rr = rref(a);
    const std::size_t nc = a.cols();
    std::vector<bool> is_pivot(nc, false);
    for (std::size_t p : rr.pivots) is_pivot[p] = true;
    std::vector<std::vector<Rat>> basis;
    for (std::size_t c = 0; c < nc; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Rat> v(nc, Rat(0));
        v[c] = 1;
        for (std::size_t i = 0; i < rr.pivots.size(); ++i)
            v[rr.pivots[i]] = -rr.mat.at(i, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rat>> solve_linear(const Mat& a, const std::vector<Rat>& b) {
    if (b.size() != a.rows()) throw internal_error("solve_linear shape mismatch");
    Mat aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    RrefResult rr = rref(std::move(aug));
    std::vector<Rat> x(a.cols(), Rat(0));
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
        if (rr.pivots[i] == a.cols()) return std::nullopt; // pivot in the b column
        x[rr.pivots[i]] = rr.mat.at(i, a.cols());
    }
    return x;
}

std::optional<Mat> inverse(const Mat& a) {
    if (a.rows() != a.cols()) return std::nullopt;
    const std::size_t n = a.rows();
    Mat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n + i) = 1;
    }
    RrefResult rr = rref(std::move(aug));
    if (rr.pivots.size() != n) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i)
        if (rr.pivots[i] != i) return std::nullopt;
    Mat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = rr.mat.at(i, n + j);
    return inv;
}

} // namespace apolar
