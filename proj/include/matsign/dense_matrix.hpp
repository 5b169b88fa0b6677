#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <vector>

namespace matsign {

// Row-major dense real matrix; the carrier type for everything in this
// library. Entries are unconstrained in memory; NaN/Inf rejection happens
// at the text I/O boundary.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    static DenseMatrix identity(std::size_t n);
    static DenseMatrix diagonal(std::span<const double> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    double* row_ptr(std::size_t i) { return data_.data() + i * cols_; }
    const double* row_ptr(std::size_t i) const { return data_.data() + i * cols_; }

    std::span<double> entries() { return data_; }
    std::span<const double> entries() const { return data_; }

    bool same_shape(const DenseMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

// c(i,j) = sum_k a(i,k) b(k,j), accumulated in ascending k for every entry.
// The fixed order makes results identical bits across runs and thread counts.
DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);

DenseMatrix add(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix subtract(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix scale(const DenseMatrix& a, double s);
DenseMatrix transpose(const DenseMatrix& a);

// a * diag(d): column j scaled by d[j].
DenseMatrix scale_columns(const DenseMatrix& a, std::span<const double> d);

double frobenius_norm(const DenseMatrix& m);
double max_abs(const DenseMatrix& m);
bool bitwise_equal(const DenseMatrix& a, const DenseMatrix& b);

// Text format: first line "n_rows n_cols", then one whitespace-separated row
// per line. Decimal output uses 17 significant digits, which round-trips
// 64-bit doubles exactly; hex_floats writes C99 %a literals instead. Reading
// accepts both and rejects NaN/Inf entries.
void write_matrix(const std::filesystem::path& path, const DenseMatrix& m,
                  bool hex_floats = false);
DenseMatrix read_matrix(const std::filesystem::path& path);

}  // namespace matsign
