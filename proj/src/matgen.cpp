#include "matsign/matgen.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <stdexcept>
#include <string>

#include "matsign/text_format.hpp"

namespace matsign {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed ^ (salt * 0x9E3779B97F4A7C15ULL);
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

DenseMatrix random_orthogonal(std::size_t n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_orthogonal: n must be >= 1");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    DenseMatrix g(n, n);
    for (double& v : g.entries()) v = gauss(rng);

    // Householder QR of g; reflectors kept in-place below the diagonal with
    // their head coefficients in vhead, R diagonal in rdiag.
    std::vector<double> rdiag(n), vhead(n), beta(n);
    for (std::size_t k = 0; k < n; ++k) {
        double norm2 = 0.0;
        for (std::size_t i = k; i < n; ++i) norm2 += g(i, k) * g(i, k);
        const double norm = std::sqrt(norm2);
        const double x0 = g(k, k);
        const double alpha = x0 >= 0.0 ? -norm : norm;
        rdiag[k] = alpha;
        const double v0 = x0 - alpha;
        vhead[k] = v0;
        double vtv = v0 * v0;
        for (std::size_t i = k + 1; i < n; ++i) vtv += g(i, k) * g(i, k);
        beta[k] = vtv > 0.0 ? 2.0 / vtv : 0.0;
        if (beta[k] == 0.0) continue;
        for (std::size_t j = k + 1; j < n; ++j) {
            double dot = v0 * g(k, j);
            for (std::size_t i = k + 1; i < n; ++i) dot += g(i, k) * g(i, j);
            const double s = beta[k] * dot;
            g(k, j) -= s * v0;
            for (std::size_t i = k + 1; i < n; ++i) g(i, j) -= s * g(i, k);
        }
    }

    // Accumulate Q = H_0 ... H_{n-1} backward onto the identity; only the
    // trailing block is nontrivial at each step.
    DenseMatrix q = DenseMatrix::identity(n);
    for (std::size_t kk = n; kk-- > 0;) {
        if (beta[kk] == 0.0) continue;
        const double v0 = vhead[kk];
        for (std::size_t j = kk; j < n; ++j) {
            double dot = v0 * q(kk, j);
            for (std::size_t i = kk + 1; i < n; ++i) dot += g(i, kk) * q(i, j);
            const double s = beta[kk] * dot;
            q(kk, j) -= s * v0;
            for (std::size_t i = kk + 1; i < n; ++i) q(i, j) -= s * g(i, kk);
        }
    }

    // Sign fix makes the distribution Haar and the factorization unique.
    for (std::size_t j = 0; j < n; ++j) {
        if (rdiag[j] < 0.0)
            for (std::size_t i = 0; i < n; ++i) q(i, j) = -q(i, j);
    }
    return q;
}

std::vector<double> conditioned_diagonal(std::size_t n, double kappa,
                                         bool make_signed, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("conditioned_diagonal: n must be >= 2");
    if (!(kappa >= 1.0))
        throw std::invalid_argument("conditioned_diagonal: kappa must be >= 1");

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    std::vector<double> d(n);
    d[0] = 1.0;
    d[1] = kappa;
    const double logk = std::log(kappa);
    for (std::size_t i = 2; i < n; ++i) d[i] = std::exp(unit(rng) * logk);
    std::shuffle(d.begin(), d.end(), rng);

    if (make_signed) {
        std::size_t negatives = 0;
        for (double& v : d) {
            if (unit(rng) < 0.5) {
                v = -v;
                ++negatives;
            }
        }
        if (negatives == 0 || negatives == n) {
            // both signs must be present
            const std::size_t i = static_cast<std::size_t>(rng() % n);
            d[i] = -d[i];
        }
    }
    return d;
}

EigenModel build_model(std::size_t n, double kappa_x, double kappa_lambda,
                       std::uint64_t seed) {
    if (!(kappa_x >= 1.0) || !(kappa_lambda >= 1.0))
        throw std::invalid_argument("build_model: condition numbers must be >= 1");

    const DenseMatrix q = random_orthogonal(n, mix_seed(seed, 0x51));
    const std::vector<double> d = conditioned_diagonal(n, kappa_x, false, mix_seed(seed, 0xD1));
    std::vector<double> d_inv(n);
    for (std::size_t i = 0; i < n; ++i) d_inv[i] = 1.0 / d[i];

    EigenModel model;
    const DenseMatrix qt = transpose(q);
    model.x = matmul(scale_columns(q, d), qt);
    model.x_inv = matmul(scale_columns(q, d_inv), qt);
    model.lambda = conditioned_diagonal(n, kappa_lambda, true, mix_seed(seed, 0x1A));
    model.kappa2_x = kappa_x;
    model.kappa2_lambda = kappa_lambda;
    model.seed = seed;
    return model;
}

DenseMatrix assemble(const EigenModel& model) {
    return matmul(scale_columns(model.x, model.lambda), model.x_inv);
}

DenseMatrix reference_sign(const EigenModel& model) {
    std::vector<double> signs(model.lambda.size());
    for (std::size_t i = 0; i < signs.size(); ++i) {
        if (model.lambda[i] == 0.0)
            throw std::domain_error("reference_sign: zero eigenvalue");
        signs[i] = model.lambda[i] > 0.0 ? 1.0 : -1.0;
    }
    return matmul(scale_columns(model.x, signs), model.x_inv);
}

void export_model(const EigenModel& model, const std::filesystem::path& dir,
                  bool hex_floats) {
    std::filesystem::create_directories(dir);
    write_matrix(dir / "X.mat", model.x, hex_floats);
    write_matrix(dir / "X_inv.mat", model.x_inv, hex_floats);
    DenseMatrix lam(1, model.lambda.size());
    for (std::size_t j = 0; j < model.lambda.size(); ++j) lam(0, j) = model.lambda[j];
    write_matrix(dir / "lambda.mat", lam, hex_floats);

    std::ofstream meta(dir / "metadata.txt");
    if (!meta) throw std::runtime_error("cannot write metadata in " + dir.string());
    meta << "n=" << model.lambda.size() << '\n'
         << "kappa_x=" << format_g17(model.kappa2_x) << '\n'
         << "kappa_lambda=" << format_g17(model.kappa2_lambda) << '\n'
         << "seed=" << model.seed << '\n';
}

EigenModel import_model(const std::filesystem::path& dir) {
    EigenModel model;
    model.x = read_matrix(dir / "X.mat");
    model.x_inv = read_matrix(dir / "X_inv.mat");
    const DenseMatrix lam = read_matrix(dir / "lambda.mat");
    if (lam.rows() != 1)
        throw std::runtime_error("lambda.mat must be a 1 x n matrix");
    model.lambda.assign(lam.entries().begin(), lam.entries().end());

    std::ifstream meta(dir / "metadata.txt");
    if (!meta) throw std::runtime_error("cannot read metadata in " + dir.string());
    std::string line;
    while (std::getline(meta, line)) {
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = line.substr(0, eq);
        const std::string val = line.substr(eq + 1);
        if (key == "kappa_x") model.kappa2_x = std::stod(val);
        else if (key == "kappa_lambda") model.kappa2_lambda = std::stod(val);
        else if (key == "seed") model.seed = std::stoull(val);
    }
    return model;
}

}  // namespace matsign
