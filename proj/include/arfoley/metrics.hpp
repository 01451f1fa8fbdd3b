#pragma once

// Distribution metrics over classifier embeddings and posteriors.

#include <span>
#include <string>
#include <vector>

#include "arfoley/tensor.hpp"

namespace arfoley::metrics {

inline constexpr double kCovEps = 1e-6;

// Mergeable first and second moments of an embedding population.
struct EmbeddingStats {
    std::size_t dim = 0;
    std::size_t n = 0;
    std::vector<double> sum;    // dim
    std::vector<double> outer;  // dim x dim, sum of x x^T

    explicit EmbeddingStats(std::size_t d = 0) : dim(d), sum(d, 0.0), outer(d * d, 0.0) {}
    void add(std::span<const float> x);
    void merge(const EmbeddingStats& o);
    std::vector<double> mean() const;
    // Unbiased covariance plus kCovEps * I; needs n >= 2.
    std::vector<double> covariance() const;
};

EmbeddingStats stats_of(const FTensor& rows);

// Eigen-decomposition of a symmetric n x n matrix by cyclic Jacobi rotations.
// Eigenvalues ascending; eigenvectors are the columns of `vectors` (row-major).
struct SymEigen {
    std::vector<double> values;
    std::vector<double> vectors;
};
SymEigen sym_eigen(std::span<const double> a, std::size_t n);

// ||mu_a - mu_b||^2 + Tr(Sa + Sb - 2 (Sa^1/2 Sb Sa^1/2)^1/2).
double frechet_distance(const EmbeddingStats& a, const EmbeddingStats& b);

// Mean over pairs of KL(ref || gen), gen floored at 1e-8 and renormalised.
// Rows are paired by position; `ref_ids` and `gen_ids` must agree.
double paired_kl(const FTensor& p_ref, const FTensor& p_gen);
double paired_kl(const FTensor& p_ref, std::span<const std::string> ref_ids, const FTensor& p_gen,
                 std::span<const std::string> gen_ids);

// exp(mean_i KL(p_i || p_bar)); needs at least two rows.
double inception_score(const FTensor& posteriors);

}  // namespace arfoley::metrics
