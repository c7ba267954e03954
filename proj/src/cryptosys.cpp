#include "firstfall/cryptosys.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

namespace firstfall {

namespace {

constexpr int kRetryCap = 200;

using Rng = std::mt19937_64;

DenseMatrix random_matrix(const FieldSpec& f, std::size_t rows, std::size_t cols, Rng& rng) {
  DenseMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = f.random(rng).value;
  return m;
}

DenseMatrix random_invertible(const FieldSpec& f, std::size_t n, Rng& rng) {
  for (int attempt = 0; attempt < kRetryCap; ++attempt) {
    DenseMatrix m = random_matrix(f, n, n, rng);
    if (rank(m, f) == n) return m;
  }
  throw Error(ErrorKind::SingularSample, "no invertible sample within the retry cap");
}

/// Symmetric matrix with entries only where `allowed(i, j)` holds.
template <class Allowed>
DenseMatrix random_symmetric(const FieldSpec& f, int n, Rng& rng, Allowed allowed) {
  DenseMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      if (allowed(i, j)) m.at(i, j) = m.at(j, i) = f.random(rng).value;
  return m;
}

/// u M u^T as a polynomial, u a vector of affine polynomials.
Poly form_of(const DenseMatrix& m, const std::vector<Poly>& u, const FieldSpec& f) {
  Poly out;
  for (std::size_t a = 0; a < m.rows(); ++a) {
    if (u[a].is_zero()) continue;
    Poly row;
    for (std::size_t b = 0; b < m.cols(); ++b)
      if (m.at(a, b) && !u[b].is_zero()) row = add(row, scale(u[b], FieldElem{m.at(a, b)}, f), f);
    out = add(out, mul(u[a], row, f), f);
  }
  return out;
}

Poly constant(int n, std::uint32_t c, const FieldSpec& f) {
  Poly p;
  p.add_term(Monomial::one(n), FieldElem{c}, f);
  return p;
}

Poly variable(int n, int k, const FieldSpec& f) {
  Poly p;
  p.add_term(Monomial::var(n, k), f.one(), f);
  return p;
}

/// Solves the layer equations f_i(u) = target_i, linear in u[lo, hi) once u[0, lo) is fixed.
bool solve_layer(const std::vector<DenseMatrix>& forms, std::size_t first, std::size_t count, Vec& u, int lo, int hi,
                 const Vec& target, const FieldSpec& f) {
  const int width = hi - lo;
  DenseMatrix a(count, static_cast<std::size_t>(width));
  Vec rhs(count);
  for (std::size_t e = 0; e < count; ++e) {
    const DenseMatrix& m = forms[first + e];
    FieldElem known = f.zero();
    for (int i = 0; i < lo; ++i)
      for (int j = 0; j < lo; ++j)
        known = f.add(known, f.mul(FieldElem{m.at(i, j)}, f.mul(FieldElem{u[i]}, FieldElem{u[j]})));
    for (int c = 0; c < width; ++c) {
      FieldElem coeff = f.zero();
      for (int i = 0; i < lo; ++i) coeff = f.add(coeff, f.mul(FieldElem{m.at(i, lo + c)}, FieldElem{u[i]}));
      a.at(e, c) = f.add(coeff, coeff).value;
    }
    rhs[e] = f.sub(FieldElem{target[first + e]}, known).value;
  }
  if (rank(a, f) < static_cast<std::size_t>(width)) return false;
  auto sol = solve(a, rhs, f);
  if (!sol) return false;
  for (int c = 0; c < width; ++c) u[lo + c] = (*sol)[c];
  return true;
}

Vec row_times(const Vec& x, const DenseMatrix& m, const FieldSpec& f) {
  return mat_vec(transpose(m), x, f);
}

}  // namespace

SystemInstance random_system(const RingSpec& r, const std::vector<MultiDegree>& mdegs, std::uint64_t seed) {
  Rng rng(seed);
  const FieldSpec& f = r.field();
  SystemInstance sys{r, {}};
  for (const auto& d : mdegs) {
    if (d.size() != r.s()) throw Error(ErrorKind::DimensionMismatch, "degree " + d.str());
    if (d.is_zero()) throw Error(ErrorKind::InvalidArgument, "zero generator degree");
    Poly p;
    for (const auto& m : monomial_basis(r, d)) p.add_term(m, f.random(rng), f);
    sys.polys.push_back(std::move(p));
  }
  nlohmann::json degs = nlohmann::json::array();
  for (const auto& d : mdegs) degs.push_back(std::vector<int>(d.components().begin(), d.components().end()));
  sys.provenance = {{"generator", "random"}, {"seed", seed}, {"degrees", degs}};
  return sys;
}

// --- Rainbow ------------------------------------------------------------------

Vec quadratic_form_eval(const std::vector<DenseMatrix>& forms, const Vec& u, const FieldSpec& f) {
  Vec out;
  for (const auto& m : forms) {
    const Vec mu = mat_vec(m, u, f);
    FieldElem acc = f.zero();
    for (std::size_t i = 0; i < u.size(); ++i) acc = f.add(acc, f.mul(FieldElem{u[i]}, FieldElem{mu[i]}));
    out.push_back(acc.value);
  }
  return out;
}

Vec rainbow_public_eval(const RainbowKey& key, const Vec& a) { return quadratic_form_eval(key.pub, a, key.field); }

Vec rainbow_secret_eval(const RainbowKey& key, const Vec& a) {
  const Vec u = row_times(a, key.mu, key.field);
  return row_times(quadratic_form_eval(key.central, u, key.field), key.mt, key.field);
}

namespace {

std::vector<DenseMatrix> compose_public(const FieldSpec& f, const DenseMatrix& mu, const DenseMatrix& mt,
                                        const std::vector<DenseMatrix>& central) {
  const DenseMatrix mut = transpose(mu);
  std::vector<DenseMatrix> conj;
  for (const auto& c : central) conj.push_back(mat_mul(mat_mul(mu, c, f), mut, f));
  std::vector<DenseMatrix> pub;
  for (std::size_t i = 0; i < central.size(); ++i) {
    DenseMatrix acc(mu.rows(), mu.cols());
    for (std::size_t j = 0; j < central.size(); ++j)
      acc = mat_add(acc, mat_scale(conj[j], FieldElem{mt.at(j, i)}, f), f);
    pub.push_back(std::move(acc));
  }
  return pub;
}

}  // namespace

RainbowKey rainbow_keygen(std::uint32_t q, int v, int o1, int o2, std::uint64_t seed) {
  if (q == 2) throw Error(ErrorKind::EvenCharacteristic, "the field characteristic must be odd");
  if (v < 1 || o1 < 1 || o2 < 1) throw Error(ErrorKind::InvalidArgument, "v, o1, o2 must be positive");
  RainbowKey key;
  key.field = FieldSpec(q);
  key.params = {q, v, o1, o2};
  const FieldSpec& f = key.field;
  const int n = key.params.n(), m = key.params.m();
  Rng rng(seed);
  key.mu = random_invertible(f, static_cast<std::size_t>(n), rng);
  key.mt = random_invertible(f, static_cast<std::size_t>(m), rng);
  const int layer1_end = v + o1;
  for (int i = 0; i < o1; ++i)
    // layer one: quadratic in vinegar, vinegar x oil1, nothing in oil2
    key.central.push_back(random_symmetric(f, n, rng, [&](int a, int b) { return a < v && b < layer1_end; }));
  for (int i = 0; i < o2; ++i)
    key.central.push_back(random_symmetric(f, n, rng, [&](int a, int) { return a < layer1_end; }));
  key.pub = compose_public(f, key.mu, key.mt, key.central);
  if (!rainbow_relation_holds(key)) throw Error(ErrorKind::InvalidArgument, "public key relation failed");
  return key;
}

bool rainbow_relation_holds(const RainbowKey& key) {
  const FieldSpec& f = key.field;
  for (const auto& p : key.pub)
    if (!p.is_symmetric()) return false;
  // Independent path: p_i = sum_j (M_T)_{ji} * U f_j U^T, checked entrywise via bilinear evaluation.
  const int n = key.params.n();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      // e_a M_U and e_b M_U are rows a and b of M_U.
      Vec ra(key.mu.data().begin() + a * n, key.mu.data().begin() + (a + 1) * n);
      Vec rb(key.mu.data().begin() + b * n, key.mu.data().begin() + (b + 1) * n);
      for (std::size_t i = 0; i < key.pub.size(); ++i) {
        FieldElem expect = f.zero();
        for (std::size_t j = 0; j < key.central.size(); ++j) {
          const Vec crb = mat_vec(key.central[j], rb, f);
          FieldElem bil = f.zero();
          for (int k = 0; k < n; ++k) bil = f.add(bil, f.mul(FieldElem{ra[k]}, FieldElem{crb[k]}));
          expect = f.add(expect, f.mul(FieldElem{key.mt.at(j, i)}, bil));
        }
        if (expect.value != key.pub[i].at(a, b)) return false;
      }
    }
  return true;
}

bool rainbow_points_agree(const RainbowKey& key, int points, std::uint64_t seed) {
  Rng rng(seed);
  for (int t = 0; t < points; ++t) {
    Vec a(static_cast<std::size_t>(key.params.n()));
    for (auto& x : a) x = key.field.random(rng).value;
    if (rainbow_public_eval(key, a) != rainbow_secret_eval(key, a)) return false;
  }
  return true;
}

bool rainbow_verify(const RainbowKey& key, const Vec& signature, const Vec& message) {
  return rainbow_public_eval(key, signature) == message;
}

RainbowSignature rainbow_sign_verify(const RainbowKey& key, const Vec& message, std::uint64_t seed) {
  const FieldSpec& f = key.field;
  const auto& prm = key.params;
  if (message.size() != static_cast<std::size_t>(prm.m()))
    throw Error(ErrorKind::DimensionMismatch, "message length must be m");
  const auto mt_inv = inverse(key.mt, f);
  const auto mu_inv = inverse(key.mu, f);
  const Vec target = row_times(message, *mt_inv, f);
  Rng rng(seed);
  for (int attempt = 0; attempt < kRetryCap; ++attempt) {
    Vec u(static_cast<std::size_t>(prm.n()), 0);
    for (int i = 0; i < prm.v; ++i) u[i] = f.random(rng).value;
    if (!solve_layer(key.central, 0, static_cast<std::size_t>(prm.o1), u, prm.v, prm.v + prm.o1, target, f)) continue;
    if (!solve_layer(key.central, static_cast<std::size_t>(prm.o1), static_cast<std::size_t>(prm.o2), u,
                     prm.v + prm.o1, prm.n(), target, f))
      continue;
    RainbowSignature sig;
    sig.signature = row_times(u, *mu_inv, f);
    sig.ok = rainbow_verify(key, sig.signature, message);
    return sig;
  }
  throw Error(ErrorKind::SigningFailure, "vinegar resampling exhausted");
}

SystemInstance rainbow_public_system(const RainbowKey& key) {
  const int n = key.params.n();
  SystemInstance sys{RingSpec::standard(key.field, n), {}};
  std::vector<Poly> u;
  for (int k = 0; k < n; ++k) u.push_back(variable(n, k, key.field));
  for (const auto& m : key.pub) sys.polys.push_back(form_of(m, u, key.field));
  sys.provenance = {{"generator", "rainbow"},
                    {"q", key.params.q},
                    {"v", key.params.v},
                    {"o1", key.params.o1},
                    {"o2", key.params.o2}};
  return sys;
}

std::vector<DenseMatrix> random_symmetric_forms(const FieldSpec& f, int n, int count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<DenseMatrix> out;
  for (int i = 0; i < count; ++i) out.push_back(random_symmetric(f, n, rng, [](int, int) { return true; }));
  return out;
}

// --- RBS ----------------------------------------------------------------------

SystemInstance rbs_system(const std::vector<DenseMatrix>& pub, const FieldSpec& f, int v, int o1, int o2) {
  const int n = v + o1 + o2, m = o1 + o2;
  if (static_cast<int>(pub.size()) != m) throw Error(ErrorKind::ShapeMismatch, "expected o1 + o2 public matrices");
  for (const auto& p : pub)
    if (p.rows() != static_cast<std::size_t>(n) || p.cols() != static_cast<std::size_t>(n))
      throw Error(ErrorKind::ShapeMismatch, "public matrices must be n x n");
  const int nx = v + o1;
  const int nvars = nx + o2;
  RingSpec ring(f, {Block{"x", nx}, Block{"y", o2}});

  // u = (x_1..x_{v+o1}, 0, ..., 0, 1)
  std::vector<Poly> u(static_cast<std::size_t>(n));
  for (int k = 0; k < nx; ++k) u[k] = variable(nvars, k, f);
  u[n - 1] = add(u[n - 1], constant(nvars, 1, f), f);

  SystemInstance sys{ring, {}};
  for (const auto& p : pub) sys.polys.push_back(form_of(p, u, f));

  auto row_vector = [&](const DenseMatrix& mat) {
    std::vector<Poly> out(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c)
      for (int a = 0; a < n; ++a)
        if (mat.at(a, c) && !u[a].is_zero()) out[c] = add(out[c], scale(u[a], FieldElem{mat.at(a, c)}, f), f);
    return out;
  };
  std::vector<Poly> w = row_vector(pub[0]);
  for (int j = 0; j < o2; ++j) {
    const std::vector<Poly> uj = row_vector(pub[o1 + j]);
    const Poly yj = variable(nvars, nx + j, f);
    for (int c = 0; c < n; ++c) w[c] = add(w[c], mul(yj, uj[c], f), f);
  }
  for (int c = 0; c < n - 1; ++c) sys.polys.push_back(std::move(w[c]));
  sys.provenance = {{"generator", "rbs"}, {"q", f.p()}, {"v", v}, {"o1", o1}, {"o2", o2}};
  return sys;
}

SeriesTrunc rbs_series_closed(int v, int o1, int o2, int bound) {
  const int n = v + o1 + o2, m = o1 + o2;
  return product_form_series({{MultiDegree{1, 1}, static_cast<unsigned>(n - 1)}, {MultiDegree{2, 0}, static_cast<unsigned>(m)}},
                             {static_cast<unsigned>(v + o1), static_cast<unsigned>(o2)}, bound);
}

namespace {

double log2_binomial(long long n, long long k) {
  return (std::lgamma(static_cast<double>(n + 1)) - std::lgamma(static_cast<double>(k + 1)) -
          std::lgamma(static_cast<double>(n - k + 1))) /
         std::log(2.0);
}

}  // namespace

HybridChoice rbs_hybrid_best(std::uint32_t q, int v, int o1, int o2, double omega, int bound, int max_guess) {
  HybridChoice best;
  best.log2_cost = std::numeric_limits<double>::infinity();
  best.degree = DegreeAnswer::not_found(bound);
  const int n = v + o1 + o2, m = o1 + o2;
  for (int k = 0; k <= std::min(max_guess, v + o1 - 1); ++k) {
    const auto series =
        product_form_series({{MultiDegree{1, 1}, static_cast<unsigned>(n - 1)}, {MultiDegree{2, 0}, static_cast<unsigned>(m)}},
                            {static_cast<unsigned>(v + o1 - k), static_cast<unsigned>(o2)}, bound);
    const auto d = find_dmulti(series);
    if (!d.is_found()) continue;
    const long long vars = n - k;
    const double cost = k * std::log2(static_cast<double>(q)) + omega * log2_binomial(vars + *d.value, *d.value);
    if (cost < best.log2_cost) best = {k, d, cost};
  }
  return best;
}

// --- MinRank / KS --------------------------------------------------------------

DenseMatrix minrank_combination(const MinRankInstance& inst, const Vec& coeffs) {
  const FieldSpec& f = inst.field;
  DenseMatrix acc(static_cast<std::size_t>(inst.N), static_cast<std::size_t>(inst.N));
  for (std::size_t i = 0; i < inst.matrices.size(); ++i)
    acc = mat_add(acc, mat_scale(inst.matrices[i], FieldElem{coeffs[i]}, f), f);
  return acc;
}

MinRankInstance minrank_instance(int N, int k, int r, std::uint64_t seed, std::uint32_t p) {
  if (r < 1 || r >= N) throw Error(ErrorKind::InvalidArgument, "need 1 <= r < N");
  if (k < 2) throw Error(ErrorKind::InvalidArgument, "need k >= 2");
  MinRankInstance inst;
  inst.field = FieldSpec(p);
  inst.N = N;
  inst.k = k;
  inst.r = r;
  const FieldSpec& f = inst.field;
  Rng rng(seed);
  const auto sN = static_cast<std::size_t>(N), sr = static_cast<std::size_t>(r);
  for (int attempt = 0; attempt < kRetryCap; ++attempt) {
    inst.matrices.clear();
    inst.secret.assign(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k; ++i) inst.secret[i] = (i + 1 == k ? f.random_nonzero(rng) : f.random(rng)).value;
    inst.left_factor = random_matrix(f, sN, sr, rng);
    inst.right_factor = random_matrix(f, sr, sN, rng);
    for (int i = 0; i + 1 < k; ++i) inst.matrices.push_back(random_matrix(f, sN, sN, rng));
    // M_k = x_k^{-1} (A B - sum_{i<k} x_i M_i)
    DenseMatrix rest = mat_mul(inst.left_factor, inst.right_factor, f);
    for (int i = 0; i + 1 < k; ++i)
      rest = mat_add(rest, mat_scale(inst.matrices[i], f.neg(FieldElem{inst.secret[i]}), f), f);
    inst.matrices.push_back(mat_scale(rest, f.inv(FieldElem{inst.secret.back()}), f));

    if (rank(minrank_combination(inst, inst.secret), f) > sr) continue;
    Vec other(static_cast<std::size_t>(k));
    for (auto& x : other) x = f.random(rng).value;
    if (rank(minrank_combination(inst, other), f) <= sr) continue;
    return inst;
  }
  throw Error(ErrorKind::SingularSample, "no separating MinRank sample within the retry cap");
}

SystemInstance ks_system(const MinRankInstance& inst, int r, int c, const std::vector<int>& row_perm) {
  const int N = inst.N, k = inst.k;
  if (c < 1 || c > N - r) throw Error(ErrorKind::ShapeMismatch, "need 1 <= c <= N - r");
  if (k > N) throw Error(ErrorKind::ShapeMismatch, "need k <= N columns");
  std::vector<int> perm = row_perm;
  if (perm.empty()) {
    perm.resize(static_cast<std::size_t>(N));
    std::iota(perm.begin(), perm.end(), 0);
  }
  if (perm.size() != static_cast<std::size_t>(N)) throw Error(ErrorKind::ShapeMismatch, "row permutation length");
  const FieldSpec& f = inst.field;
  std::vector<Block> blocks{{"x", k}};
  for (int j = 1; j <= c; ++j) blocks.push_back({"k" + std::to_string(j), r});
  RingSpec ring(f, blocks);
  const int nvars = k + c * r;

  SystemInstance sys{ring, {}};
  for (int j = 0; j < c; ++j)
    for (int col = 0; col < k; ++col) {
      Poly p;
      for (int i = 0; i < k; ++i) {
        const DenseMatrix& m = inst.matrices[i];
        const std::uint32_t lin = m.at(perm[j], col);
        if (lin) p.add_term(Monomial::var(nvars, i), FieldElem{lin}, f);
        for (int l = 0; l < r; ++l) {
          const std::uint32_t bil = m.at(perm[N - r + l], col);
          if (!bil) continue;
          p.add_term(Monomial::var(nvars, i) * Monomial::var(nvars, k + j * r + l), FieldElem{bil}, f);
        }
      }
      sys.polys.push_back(std::move(p));
    }
  sys.provenance = {{"generator", "ks"}, {"N", N}, {"k", k}, {"r", r}, {"c", c}, {"row_perm", perm}};
  return sys;
}

Vec KsCertificate::assignment() const {
  Vec out = x;
  for (const auto& tail : kernel_tail) out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

KsCertificate ks_certificate(const MinRankInstance& inst, int c) {
  const FieldSpec& f = inst.field;
  const int N = inst.N, r = inst.r;
  if (c < 1 || c > N - r) throw Error(ErrorKind::ShapeMismatch, "need 1 <= c <= N - r");
  const DenseMatrix e = minrank_combination(inst, inst.secret);
  const DenseMatrix kernel = left_kernel(e, f);
  if (kernel.rows() < static_cast<std::size_t>(N - r))
    throw Error(ErrorKind::InvalidArgument, "planted combination has rank above r");

  // Reduced echelon form of the kernel rows; its first N - r pivot columns
  // become the identity coordinates.
  const auto rows = reduced_echelon(to_sparse(kernel), f);
  std::vector<int> front, back;
  std::vector<bool> is_front(static_cast<std::size_t>(N), false);
  for (int t = 0; t < N - r; ++t) is_front[rows[t].cols.front()] = true;
  for (int col = 0; col < N; ++col) (is_front[col] ? front : back).push_back(col);

  KsCertificate cert;
  cert.row_perm = front;
  cert.row_perm.insert(cert.row_perm.end(), back.begin(), back.end());
  cert.x = inst.secret;
  for (int j = 0; j < c; ++j) {
    Vec dense(static_cast<std::size_t>(N), 0);
    for (std::size_t t = 0; t < rows[j].nnz(); ++t) dense[rows[j].cols[t]] = rows[j].vals[t];
    Vec tail;
    for (int l = 0; l < r; ++l) tail.push_back(dense[back[l]]);
    cert.kernel_tail.push_back(std::move(tail));
  }
  return cert;
}

SeriesTrunc ks_series_closed(int numer_exponent, int x_count, int r, int c, int bound) {
  std::vector<NumeratorFactor> numerator;
  std::vector<unsigned> denominators{static_cast<unsigned>(x_count)};
  for (int j = 1; j <= c; ++j) {
    MultiDegree d = MultiDegree::unit(static_cast<std::size_t>(c + 1), 0) + MultiDegree::unit(static_cast<std::size_t>(c + 1), j);
    numerator.push_back({d, static_cast<unsigned>(numer_exponent)});
    denominators.push_back(static_cast<unsigned>(r));
  }
  return product_form_series(numerator, denominators, bound);
}

}  // namespace firstfall
