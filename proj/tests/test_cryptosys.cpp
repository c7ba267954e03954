#include <gtest/gtest.h>

#include <random>

#include "firstfall/cryptosys.hpp"
#include "firstfall/error.hpp"
#include "firstfall/series.hpp"
#include "helpers.hpp"

using namespace firstfall;
using namespace firstfall::testing;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidArgument;
}

Vec random_vec(const FieldSpec& f, int n, std::mt19937_64& rng) {
  Vec v(n);
  for (auto& x : v) x = f.random(rng).value;
  return v;
}

}  // namespace

TEST(RandomSystem, SeedDeterminesInstance) {
  RingSpec r(kP, {{"x", 3}, {"y", 2}});
  const std::vector<MultiDegree> degs{{1, 1}, {2, 0}, {1, 1}};
  EXPECT_EQ(random_system(r, degs, 1), random_system(r, degs, 1));
  EXPECT_NE(random_system(r, degs, 1), random_system(r, degs, 2));
}

TEST(RandomSystem, GeneratorsHaveRequestedMultidegree) {
  const auto sys = generic_bilinear(2, 2, 4, 5);
  for (const auto& p : sys.polys) {
    const auto h = is_multihomogeneous(p, sys.ring);
    ASSERT_TRUE(h.is_degree());
    EXPECT_EQ(h.degree, (MultiDegree{1, 1}));
  }
}

TEST(Rainbow, PublicMapIsCompositionOfSecretMaps) {
  const auto key = rainbow_keygen(31, 2, 1, 1, 4);
  EXPECT_TRUE(rainbow_points_agree(key, 10, 9));
  EXPECT_TRUE(rainbow_relation_holds(key));
}

TEST(Rainbow, EvenCharacteristicRejected) {
  EXPECT_EQ(kind_of([] { rainbow_keygen(2, 2, 1, 1, 1); }), ErrorKind::EvenCharacteristic);
}

TEST(Rainbow, SignaturesVerify) {
  const auto key = rainbow_keygen(31, 3, 2, 2, 5);
  std::mt19937_64 rng(6);
  for (int i = 0; i < 20; ++i) {
    const auto msg = random_vec(key.field, key.params.m(), rng);
    const auto sig = rainbow_sign_verify(key, msg, 100 + i);
    ASSERT_TRUE(sig.ok);
    EXPECT_TRUE(rainbow_verify(key, sig.signature, msg));
  }
}

TEST(Rainbow, ZeroMessageHasSignature) {
  const auto key = rainbow_keygen(31, 2, 1, 1, 7);
  const auto sig = rainbow_sign_verify(key, Vec(key.params.m(), 0), 1);
  EXPECT_TRUE(sig.ok);
}

TEST(Rainbow, TamperedSignaturesAreRejected) {
  const auto key = rainbow_keygen(31, 3, 2, 2, 8);
  std::mt19937_64 rng(9);
  int rejected = 0;
  for (int i = 0; i < 100; ++i) {
    const auto msg = random_vec(key.field, key.params.m(), rng);
    auto sig = rainbow_sign_verify(key, msg, 1000 + i);
    ASSERT_TRUE(sig.ok);
    const auto pos = static_cast<std::size_t>(i) % sig.signature.size();
    sig.signature[pos] = (sig.signature[pos] + 1) % key.field.p();
    if (!rainbow_verify(key, sig.signature, msg)) ++rejected;
  }
  EXPECT_GE(rejected, 95);
}

TEST(Rainbow, PublicSystemMatchesPublicEvaluation) {
  const auto key = rainbow_keygen(31, 2, 2, 1, 10);
  const auto sys = rainbow_public_system(key);
  ASSERT_EQ(sys.size(), static_cast<std::size_t>(key.params.m()));
  std::mt19937_64 rng(11);
  for (int t = 0; t < 10; ++t) {
    const auto a = random_vec(key.field, key.params.n(), rng);
    const auto expect = rainbow_public_eval(key, a);
    std::vector<FieldElem> pt;
    for (auto x : a) pt.push_back({x});
    for (std::size_t i = 0; i < sys.size(); ++i) EXPECT_EQ(evaluate(sys.polys[i], pt, key.field).value, expect[i]);
  }
}

TEST(Rbs, TopComponentsHaveExpectedMultidegrees) {
  const auto key = rainbow_keygen(31, 2, 1, 1, 12);
  const auto sys = rbs_system(key.pub, key.field, 2, 1, 1);
  const int m = key.params.m(), n = key.params.n();
  ASSERT_EQ(sys.size(), static_cast<std::size_t>(m + n - 1));
  const auto top = sys.top_components();
  for (int i = 0; i < m; ++i) EXPECT_EQ(top.degrees()[i], (MultiDegree{2, 0})) << i;
  for (int i = m; i < m + n - 1; ++i) EXPECT_EQ(top.degrees()[i], (MultiDegree{1, 1})) << i;
}

TEST(Rbs, ClosedFormMatchesFactorExpansion) {
  const int v = 3, o1 = 2, o2 = 2, bound = 12;
  const int n = v + o1 + o2, m = o1 + o2;
  RingSpec r(kP, {{"x", v + o1}, {"y", o2}});
  std::vector<MultiDegree> degs(m, MultiDegree{2, 0});
  degs.insert(degs.end(), n - 1, MultiDegree{1, 1});
  EXPECT_EQ(rbs_series_closed(v, o1, o2, bound), estimate_series(r, degs, bound));
}

TEST(Rbs, ShapeMismatchOnWrongFormCount) {
  const auto key = rainbow_keygen(31, 2, 1, 1, 13);
  EXPECT_EQ(kind_of([&] { rbs_system(key.pub, key.field, 3, 1, 1); }), ErrorKind::ShapeMismatch);
}

TEST(MinRank, SeedDeterminesInstance) {
  const auto a = minrank_instance(4, 3, 1, 5);
  const auto b = minrank_instance(4, 3, 1, 5);
  ASSERT_EQ(a.matrices.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) EXPECT_EQ(a.matrices[i].at(r, c), b.matrices[i].at(r, c));
  EXPECT_EQ(a.secret, b.secret);
}

TEST(MinRank, PlantedCombinationHasTargetRank) {
  const auto inst = minrank_instance(6, 5, 2, 14);
  EXPECT_LE(rank(minrank_combination(inst, inst.secret), inst.field), 2u);
}

TEST(Ks, SmallestInstanceShape) {
  const auto inst = minrank_instance(4, 3, 1, 15);
  const auto sys = ks_system(inst, 1, 1);
  ASSERT_EQ(sys.size(), 3u);
  // The identity part of (e_j | k_j) makes the polynomials affine.
  for (const auto& d : sys.top_components().degrees()) EXPECT_EQ(d, (MultiDegree{1, 1}));
}

TEST(Ks, CertificateAssignmentVanishes) {
  for (auto [N, k, r, c] : std::vector<std::array<int, 4>>{{4, 3, 1, 1}, {5, 4, 2, 2}, {6, 5, 2, 3}}) {
    const auto inst = minrank_instance(N, k, r, 16 + N);
    const auto cert = ks_certificate(inst, c);
    const auto sys = ks_system(inst, r, c, cert.row_perm);
    std::vector<FieldElem> pt;
    for (auto x : cert.assignment()) pt.push_back({x});
    for (const auto& p : sys.polys) EXPECT_EQ(evaluate(p, pt, inst.field).value, 0u);
  }
}

TEST(Ks, TooManyKernelVectorsRejected) {
  const auto inst = minrank_instance(4, 3, 1, 17);
  EXPECT_EQ(kind_of([&] { ks_system(inst, 1, 4); }), ErrorKind::ShapeMismatch);
}

TEST(Ks, ClosedFormMatchesFactorExpansion) {
  // x block of 4 variables, two kernel blocks of 2, numerator exponent 4.
  const int x = 4, r = 2, c = 2, numer = 4, bound = 10;
  RingSpec ring(kP, {{"x", x}, {"k1", r}, {"k2", r}});
  std::vector<MultiDegree> degs;
  for (int j = 1; j <= c; ++j) {
    MultiDegree d(3);
    d[0] = 1;
    d[j] = 1;
    degs.insert(degs.end(), numer, d);
  }
  EXPECT_EQ(ks_series_closed(numer, x, r, c, bound), estimate_series(ring, degs, bound));
}
