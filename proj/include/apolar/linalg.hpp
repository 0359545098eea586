#pragma once

#include "apolar/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace apolar {

// Dense matrix over the rationals. Everything is exact; there are no
// pivoting heuristics beyond first nonzero, so results are bit-reproducible.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

    static Mat identity(std::size_t n);
    static Mat from_rows(const std::vector<std::vector<Rat>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Mat transpose() const;
    Mat mul(const Mat& other) const;
    std::vector<Rat> mul_vec(const std::vector<Rat>& v) const;       // A * v
    std::vector<Rat> row_mul(const std::vector<Rat>& v) const;       // v^t * A
    void append_row(const std::vector<Rat>& row);
    std::vector<Rat> row(std::size_t i) const;

    bool operator==(const Mat& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rat> a_;
};

// Reduced row-echelon form with zero rows dropped. Pivots get value 1,
// pivot columns are cleared above and below, pivot column indices come back
// strictly increasing. Rows are content-normalized during elimination to
// keep numerators and denominators small.
struct RrefResult {
    Mat mat;                        // rank many nonzero rows
    std::vector<std::size_t> pivots; // pivot column per row
};

RrefResult rref(Mat m);

std::size_t rank(const Mat& m);

// Basis of { x : A x = 0 }, one kernel vector per non-pivot column,
// in increasing column order (the standard RREF kernel construction).
std::vector<std::vector<Rat>> kernel_basis(const Mat& a);

// Distinguished solution of A x = b with all free variables set to zero.
// nullopt when the system is incompatible.
std::optional<std::vector<Rat>> solve_linear(const Mat& a, const std::vector<Rat>& b);

std::optional<Mat> inverse(const Mat& a);

} // namespace apolar
