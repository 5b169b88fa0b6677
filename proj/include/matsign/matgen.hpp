#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "matsign/dense_matrix.hpp"

namespace matsign {

// Constructed eigendecomposition with exact-by-construction condition
// numbers: X = Q D Q^T is symmetric positive definite with spectrum D, so
// kappa2_x = max(D)/min(D) and X^{-1} = Q D^{-1} Q^T needs no solve.
struct EigenModel {
    DenseMatrix x;
    DenseMatrix x_inv;
    std::vector<double> lambda;  // real, nonzero, both signs present
    double kappa2_x = 1.0;
    double kappa2_lambda = 1.0;
    std::uint64_t seed = 0;
};

// splitmix64 of seed ^ (salt * odd constant); used to derive independent
// component streams from one master seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

// Approximately Haar: QR of a Gaussian matrix with the R diagonal sign fix.
DenseMatrix random_orthogonal(std::size_t n, std::uint64_t seed);

// Magnitudes log-uniform in [1, kappa] with min = 1 and max = kappa pinned
// exactly; when make_signed, random signs with both signs guaranteed.
std::vector<double> conditioned_diagonal(std::size_t n, double kappa,
                                         bool make_signed, std::uint64_t seed);

EigenModel build_model(std::size_t n, double kappa_x, double kappa_lambda,
                       std::uint64_t seed);

// A = X diag(lambda) X^{-1}
DenseMatrix assemble(const EigenModel& model);

// X diag(sign(lambda_j)) X^{-1}; throws on a zero eigenvalue.
DenseMatrix reference_sign(const EigenModel& model);

// Directory layout: X.mat, X_inv.mat, lambda.mat (1 x n) and metadata.txt
// (n, kappa_x, kappa_lambda, seed as key=value lines).
void export_model(const EigenModel& model, const std::filesystem::path& dir,
                  bool hex_floats = false);
EigenModel import_model(const std::filesystem::path& dir);

}  // namespace matsign
