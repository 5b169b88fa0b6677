#include "matsign/dense_matrix.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "matsign/text_format.hpp"

namespace matsign {

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

DenseMatrix DenseMatrix::diagonal(std::span<const double> entries) {
    DenseMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matmul: inner dimensions disagree (" +
                                    std::to_string(a.cols()) + " vs " +
                                    std::to_string(b.rows()) + ")");
    const std::size_t m = a.rows(), k_len = a.cols(), n = b.cols();
    DenseMatrix c(m, n);
    // i-k-j loop: contiguous row access, and each c(i,j) still accumulates
    // over k in ascending order exactly like the naive triple loop.
    for (std::size_t i = 0; i < m; ++i) {
        double* ci = c.row_ptr(i);
        const double* ai = a.row_ptr(i);
        for (std::size_t k = 0; k < k_len; ++k) {
            const double aik = ai[k];
            const double* bk = b.row_ptr(k);
            for (std::size_t j = 0; j < n; ++j) ci[j] += aik * bk[j];
        }
    }
    return c;
}

DenseMatrix add(const DenseMatrix& a, const DenseMatrix& b) {
    if (!a.same_shape(b)) throw std::invalid_argument("add: shape mismatch");
    DenseMatrix c = a;
    auto ce = c.entries();
    auto be = b.entries();
    for (std::size_t i = 0; i < ce.size(); ++i) ce[i] += be[i];
    return c;
}

DenseMatrix subtract(const DenseMatrix& a, const DenseMatrix& b) {
    if (!a.same_shape(b)) throw std::invalid_argument("subtract: shape mismatch");
    DenseMatrix c = a;
    auto ce = c.entries();
    auto be = b.entries();
    for (std::size_t i = 0; i < ce.size(); ++i) ce[i] -= be[i];
    return c;
}

DenseMatrix scale(const DenseMatrix& a, double s) {
    DenseMatrix c = a;
    for (double& v : c.entries()) v *= s;
    return c;
}

DenseMatrix transpose(const DenseMatrix& a) {
    DenseMatrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

DenseMatrix scale_columns(const DenseMatrix& a, std::span<const double> d) {
    if (a.cols() != d.size())
        throw std::invalid_argument("scale_columns: diagonal length mismatch");
    DenseMatrix c = a;
    for (std::size_t i = 0; i < c.rows(); ++i) {
        double* ri = c.row_ptr(i);
        for (std::size_t j = 0; j < c.cols(); ++j) ri[j] *= d[j];
    }
    return c;
}

double frobenius_norm(const DenseMatrix& m) {
    double s = 0.0;
    for (double v : m.entries()) s += v * v;
    return std::sqrt(s);
}

double max_abs(const DenseMatrix& m) {
    double mx = 0.0;
    for (double v : m.entries()) mx = std::max(mx, std::fabs(v));
    return mx;
}

bool bitwise_equal(const DenseMatrix& a, const DenseMatrix& b) {
    if (!a.same_shape(b)) return false;
    auto ae = a.entries();
    auto be = b.entries();
    for (std::size_t i = 0; i < ae.size(); ++i)
        if (std::memcmp(&ae[i], &be[i], sizeof(double)) != 0) return false;
    return true;
}

void write_matrix(const std::filesystem::path& path, const DenseMatrix& m,
                  bool hex_floats) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << m.rows() << ' ' << m.cols() << '\n';
    std::string line;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        line.clear();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) line += ' ';
            line += hex_floats ? format_hex(m(i, j)) : format_g17(m(i, j));
        }
        out << line << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

DenseMatrix read_matrix(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path.string());
    long long rows = -1, cols = -1;
    if (!(in >> rows >> cols) || rows < 0 || cols < 0)
        throw std::runtime_error("bad matrix header in " + path.string());
    DenseMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    std::string tok;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!(in >> tok))
                throw std::runtime_error("truncated matrix in " + path.string());
            char* end = nullptr;
            const double v = std::strtod(tok.c_str(), &end);
            if (end == tok.c_str() || *end != '\0')
                throw std::runtime_error("bad entry '" + tok + "' in " + path.string());
            if (!std::isfinite(v))
                throw std::runtime_error("non-finite entry '" + tok + "' in " +
                                         path.string());
            m(i, j) = v;
        }
    }
    return m;
}

}  // namespace matsign
