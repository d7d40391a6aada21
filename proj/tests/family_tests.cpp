#include <doctest.h>

#include <random>

#include "pclyap/matrix_set.hpp"
#include "test_support.hpp"

using pclyap::DomainError;
using pclyap::MatrixQ;
using pclyap::MatrixSet;
using pclyap::Rational;
using pclyap::Word;

TEST_CASE("the family of [2,1] has the documented sparsity pattern") {
  const MatrixSet s = pclyap::build_sigma_w({2, 1}, 2);
  REQUIRE(s.alphabet_size() == 2);
  REQUIRE(s.dim() == 3);

  MatrixQ a1(3, 3), a2(3, 3);
  a1.setZero();
  a2.setZero();
  a1(1, 2) = 1;  // second letter of the word is 1
  a1(2, 0) = 1;  // the closing edge always goes to matrix 1
  a2(0, 1) = 1;  // first letter of the word is 2
  CHECK(pclyap::same_matrix(s.matrices[0], a1));
  CHECK(pclyap::same_matrix(s.matrices[1], a2));
}

TEST_CASE("family matrices sum to the cycle adjacency matrix") {
  std::mt19937 rng(7201);
  std::uniform_int_distribution<int> len(1, 6);
  std::uniform_int_distribution<int> symbol(1, 3);
  for (int trial = 0; trial < 30; ++trial) {
    Word w(static_cast<std::size_t>(len(rng)));
    for (int& c : w) c = symbol(rng);
    const MatrixSet s = pclyap::build_sigma_w(w, 3);
    const int n = static_cast<int>(w.size()) + 1;
    MatrixQ sum = MatrixQ::Zero(n, n);
    for (const auto& a : s.matrices) {
      CHECK(pclyap::is_binary(a));
      sum += a;
    }
    // One 1 per row and per column, positioned as the n-cycle.
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const bool on_cycle = (j == i + 1) || (i == n - 1 && j == 0);
        CHECK(sum(i, j) == Rational(on_cycle ? 1 : 0));
      }
  }
}

TEST_CASE("family construction validates its arguments") {
  CHECK_THROWS_AS(pclyap::build_sigma_w({1}, 1), DomainError);  // m >= 2
  CHECK_THROWS_AS(pclyap::build_sigma_w({3}, 2), DomainError);  // bad symbol
  CHECK_THROWS_AS(pclyap::build_sigma_w({}, 2), DomainError);   // empty word
}

TEST_CASE("word products compose left to right") {
  const MatrixSet s = pclyap::build_sigma_w({2, 1}, 2);
  const MatrixQ p = pclyap::word_product(s, {2, 1});
  // A_2 * A_1 concentrates into the single entry (1,3).
  MatrixQ expected(3, 3);
  expected.setZero();
  expected(0, 2) = 1;
  CHECK(pclyap::same_matrix(p, expected));

  // Repeating letter 2 dies: A_2 only feeds coordinate 1 from 2, and a
  // second application finds nothing at coordinate 2 again.
  CHECK(pclyap::is_zero_matrix(pclyap::word_product(s, {2, 2})));

  // Empty word gives the identity.
  CHECK(pclyap::same_matrix(pclyap::word_product(s, {}),
                            MatrixQ(MatrixQ::Identity(3, 3))));
}

TEST_CASE("the cycle product closes with spectral radius exactly one") {
  std::mt19937 rng(7202);
  std::uniform_int_distribution<int> len(1, 5);
  std::uniform_int_distribution<int> symbol(1, 2);
  for (int trial = 0; trial < 25; ++trial) {
    Word w(static_cast<std::size_t>(len(rng)));
    for (int& c : w) c = symbol(rng);
    const MatrixSet s = pclyap::build_sigma_w(w, 2);
    const auto [product, radius] = pclyap::cycle_product_radius(s, w);
    CHECK(radius == 1.0);  // structural, exact
    // The closed walk shows up as a 1 somewhere on the diagonal.
    bool diagonal_one = false;
    for (int i = 0; i < product.rows(); ++i)
      if (product(i, i) == Rational(1)) diagonal_one = true;
    CHECK(diagonal_one);
    CHECK(pclyap::is_binary(product));
  }
}

TEST_CASE("cycle product rejects a foreign matrix set") {
  const MatrixSet s = pclyap::build_sigma_w({2, 1}, 2);
  MatrixSet tampered = s;
  tampered.matrices[0](0, 0) = 1;
  CHECK_THROWS_AS(pclyap::cycle_product_radius(tampered, {2, 1}),
                  DomainError);
  CHECK_THROWS_AS(pclyap::cycle_product_radius(s, {1, 2}), DomainError);
}

TEST_CASE("nonzero long products must read the generating word") {
  // Exhaustive over all binary words up to length 4 here; the acceptance
  // suite pushes the same check to length 6.
  for (int len = 1; len <= 4; ++len)
    for (int bits = 0; bits < (1 << len); ++bits) {
      Word w;
      for (int i = 0; i < len; ++i) w.push_back(((bits >> i) & 1) + 1);
      CAPTURE(pclyap::format_word(w));
      CHECK(pclyap::subproduct_containment_check(w, 2));
    }
}

TEST_CASE("dropping the generating block kills every long block product") {
  for (int len = 1; len <= 3; ++len)
    for (int bits = 0; bits < (1 << len); ++bits) {
      Word w;
      for (int i = 0; i < len; ++i) w.push_back(((bits >> i) & 1) + 1);
      CAPTURE(pclyap::format_word(w));
      CHECK(pclyap::particular_case_check(w));
    }
}

TEST_CASE("guards on the exhaustive checks") {
  CHECK_THROWS_AS(pclyap::subproduct_containment_check(Word(9, 1), 2),
                  pclyap::ResourceLimitError);
  CHECK_THROWS_AS(pclyap::particular_case_check(Word(5, 1)),
                  pclyap::ResourceLimitError);
}
