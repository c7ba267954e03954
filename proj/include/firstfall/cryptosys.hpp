#pragma once

#include <cstdint>
#include <vector>

#include "firstfall/linalg.hpp"
#include "firstfall/ring.hpp"
#include "firstfall/series.hpp"

namespace firstfall {

/// Dense system: every monomial of multidegree mdegs[i] gets a seeded random coefficient.
SystemInstance random_system(const RingSpec& r, const std::vector<MultiDegree>& mdegs, std::uint64_t seed);

// --- toy Rainbow -----------------------------------------------------------

struct RainbowParams {
  std::uint32_t q = 0;
  int v = 0, o1 = 0, o2 = 0;
  int n() const noexcept { return v + o1 + o2; }
  int m() const noexcept { return o1 + o2; }
};

/// Quadratic forms are symmetric matrices acting on row vectors: f(u) = u M u^T.
/// U maps a to a*M_U, T maps b to b*M_T, and P = T o F o U.
struct RainbowKey {
  RainbowParams params;
  FieldSpec field{3};
  DenseMatrix mu;                    ///< n x n, invertible
  DenseMatrix mt;                    ///< m x m, invertible
  std::vector<DenseMatrix> central;  ///< m symmetric n x n
  std::vector<DenseMatrix> pub;      ///< m symmetric n x n
};

RainbowKey rainbow_keygen(std::uint32_t q, int v, int o1, int o2, std::uint64_t seed);

using Vec = std::vector<std::uint32_t>;

Vec quadratic_form_eval(const std::vector<DenseMatrix>& forms, const Vec& u, const FieldSpec& f);
Vec rainbow_public_eval(const RainbowKey& key, const Vec& a);
/// T(F(U(a))) through the secret maps.
Vec rainbow_secret_eval(const RainbowKey& key, const Vec& a);

/// Recomputes (M_U M_{f_i} M_U^T) * M_T and compares with the public matrices.
bool rainbow_relation_holds(const RainbowKey& key);
/// P(a) = T(F(U(a))) on `points` seeded random inputs.
bool rainbow_points_agree(const RainbowKey& key, int points, std::uint64_t seed);

struct RainbowSignature {
  Vec signature;
  bool ok = false;
};
RainbowSignature rainbow_sign_verify(const RainbowKey& key, const Vec& message, std::uint64_t seed);
bool rainbow_verify(const RainbowKey& key, const Vec& signature, const Vec& message);

/// Public key as homogeneous quadratics in n standard-graded variables.
SystemInstance rainbow_public_system(const RainbowKey& key);

/// Random symmetric matrices of the public-key shape (control population).
std::vector<DenseMatrix> random_symmetric_forms(const FieldSpec& f, int n, int count, std::uint64_t seed);

// --- RBS dominant system ----------------------------------------------------

/// m + n - 1 affine polynomials in x (v+o1 vars, degree (1,0)) and y (o2 vars, degree (0,1)).
SystemInstance rbs_system(const std::vector<DenseMatrix>& pub, const FieldSpec& f, int v, int o1, int o2);

/// Closed-form (1-t1t2)^{n-1}(1-t1^2)^m / ((1-t1)^{v+o1}(1-t2)^{o2}).
SeriesTrunc rbs_series_closed(int v, int o1, int o2, int bound);

/// Best hybrid cost over k guessed x variables: q^k * C(N-k+D_k, D_k)^omega,
/// with D_k the D_{Z^2} of the RBS series after removing k x variables.
struct HybridChoice {
  int k = 0;
  DegreeAnswer degree;
  double log2_cost = 0;
};
HybridChoice rbs_hybrid_best(std::uint32_t q, int v, int o1, int o2, double omega, int bound, int max_guess = 8);

// --- MinRank / KS -------------------------------------------------------------

struct MinRankInstance {
  FieldSpec field{3};
  int N = 0, k = 0, r = 0;
  std::vector<DenseMatrix> matrices;  ///< k matrices, N x N
  Vec secret;                         ///< rank(sum secret_i M_i) <= r
  DenseMatrix left_factor;            ///< N x r
  DenseMatrix right_factor;           ///< r x N
};

MinRankInstance minrank_instance(int N, int k, int r, std::uint64_t seed, std::uint32_t p = 65521);

DenseMatrix minrank_combination(const MinRankInstance& inst, const Vec& coeffs);

/// KS polynomials: first k columns of (e_j | k_j) * sum_i x_i M_i, j = 1..c,
/// with rows of the M_i read through `row_perm` (identity when empty).
SystemInstance ks_system(const MinRankInstance& inst, int r, int c, const std::vector<int>& row_perm = {});

/// Vanishing assignment for the KS system of a planted instance.
struct KsCertificate {
  std::vector<int> row_perm;       ///< coordinates moved so the kernel rows read (e_j | k_j)
  Vec x;                           ///< = secret
  std::vector<Vec> kernel_tail;    ///< c rows of r values
  Vec assignment() const;          ///< x followed by k_1..k_c in ring variable order
};
KsCertificate ks_certificate(const MinRankInstance& inst, int c);

/// Closed form prod_j (1-t0 tj)^{numer} / ((1-t0)^{xcount} prod_j (1-tj)^r).
SeriesTrunc ks_series_closed(int numer_exponent, int x_count, int r, int c, int bound);

}  // namespace firstfall
