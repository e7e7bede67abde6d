#include <vector>

#include <gtest/gtest.h>

#include "tricount/generators.hpp"
#include "tricount/sparse_matrix.hpp"

namespace tricount {
namespace {

using Dense = std::vector<std::vector<MatrixValue>>;

// Expected dense stages for the sample graph, row by row.
const Dense kA = {
    {0, 1, 0, 0, 1, 1, 0}, {1, 0, 1, 0, 0, 1, 0}, {0, 1, 0, 1, 0, 0, 1}, {0, 0, 1, 0, 1, 1, 0},
    {1, 0, 0, 1, 0, 1, 0}, {1, 1, 0, 1, 1, 0, 0}, {0, 0, 1, 0, 0, 0, 0}};
const Dense kL = {
    {0, 0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0, 0},
    {1, 0, 0, 1, 0, 0, 0}, {1, 1, 0, 1, 1, 0, 0}, {0, 0, 1, 0, 0, 0, 0}};
const Dense kU = {
    {0, 1, 0, 0, 1, 1, 0}, {0, 0, 1, 0, 0, 1, 0}, {0, 0, 0, 1, 0, 0, 1}, {0, 0, 0, 0, 1, 1, 0},
    {0, 0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0}};
const Dense kB = {
    {0, 0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 1, 1, 0}, {0, 0, 1, 0, 0, 1, 0}, {0, 0, 0, 1, 0, 0, 1},
    {0, 1, 0, 0, 2, 2, 0}, {0, 1, 1, 0, 2, 4, 0}, {0, 0, 0, 1, 0, 0, 1}};
const Dense kC = {
    {0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 2, 0}, {0, 1, 0, 0, 2, 0, 0}, {0, 0, 0, 0, 0, 0, 0}};

Dense DenseProduct(const Dense& x, const Dense& y) {
  Dense out(x.size(), std::vector<MatrixValue>(y.empty() ? 0 : y[0].size(), 0));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t k = 0; k < y.size(); ++k)
      for (std::size_t j = 0; j < out[i].size(); ++j) out[i][j] += x[i][k] * y[k][j];
  return out;
}

Dense RandomDense(SplitMix64& rng, std::size_t rows, std::size_t cols, double density) {
  Dense d(rows, std::vector<MatrixValue>(cols, 0));
  for (auto& row : d)
    for (auto& x : row)
      if (rng.uniform() < density) x = 1 + static_cast<MatrixValue>(rng.below(3));
  return d;
}

TEST(AdjacencyMatrix, SampleGraph) {
  EXPECT_EQ(adjacency_matrix(sample_graph()).to_dense(), kA);
}

TEST(AdjacencyMatrix, EmptyAndTriangle) {
  const SparseMatrix empty = adjacency_matrix(build_graph(std::vector<Edge>{}, 4));
  EXPECT_EQ(empty.nnz(), 0u);
  EXPECT_EQ(empty.rows(), 4u);
  EXPECT_EQ(adjacency_matrix(complete_graph(3)).to_dense(), (Dense{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
}

TEST(SplitTriangular, SampleGraph) {
  const auto [l, u] = split_triangular(adjacency_matrix(sample_graph()));
  EXPECT_EQ(l.to_dense(), kL);
  EXPECT_EQ(u.to_dense(), kU);
  EXPECT_EQ(transpose(l), u);
}

TEST(SplitTriangular, EdgeCases) {
  const auto [l, u] = split_triangular(SparseMatrix(1, 1));
  EXPECT_EQ(l.nnz(), 0u);
  EXPECT_EQ(u.nnz(), 0u);
  EXPECT_THROW(split_triangular(SparseMatrix::from_dense({{1, 0}, {0, 0}})), InputError);
  EXPECT_THROW(split_triangular(SparseMatrix(2, 3)), InputError);
}

TEST(Spgemm, SampleGraph) {
  const SparseMatrix l = SparseMatrix::from_dense(kL), u = SparseMatrix::from_dense(kU);
  const SparseMatrix b = spgemm(l, u);
  EXPECT_EQ(b.to_dense(), kB);
  EXPECT_EQ(b.at(4, 4), 2u);
  EXPECT_EQ(b.at(5, 5), 4u);
  EXPECT_EQ(b.at(5, 1), 1u);
  EXPECT_EQ(DenseProduct(kL, kU), kB);
}

TEST(Spgemm, ZeroLeftOperand) {
  const SparseMatrix u = SparseMatrix::from_dense(kU);
  EXPECT_EQ(spgemm(SparseMatrix(7, 7), u).nnz(), 0u);
}

TEST(Spgemm, MatchesDenseOracle) {
  SplitMix64 rng(3);
  for (int round = 0; round < 30; ++round) {
    const Dense x = RandomDense(rng, 20, 20, 0.15), y = RandomDense(rng, 20, 20, 0.15);
    const Dense expected = DenseProduct(x, y);
    for (unsigned threads : {1u, 4u})
      EXPECT_EQ(spgemm(SparseMatrix::from_dense(x), SparseMatrix::from_dense(y), nullptr, threads).to_dense(),
                expected);
  }
}

TEST(Spgemm, RectangularAndMismatch) {
  SplitMix64 rng(9);
  const Dense x = RandomDense(rng, 5, 8, 0.4), y = RandomDense(rng, 8, 3, 0.4);
  EXPECT_EQ(spgemm(SparseMatrix::from_dense(x), SparseMatrix::from_dense(y)).to_dense(), DenseProduct(x, y));
  EXPECT_THROW(spgemm(SparseMatrix::from_dense(x), SparseMatrix::from_dense(x)), InputError);
  const SparseMatrix wrong_mask(4, 3);
  EXPECT_THROW(spgemm(SparseMatrix::from_dense(x), SparseMatrix::from_dense(y), &wrong_mask), InputError);
}

TEST(Spgemm, MaskRestrictsToPattern) {
  SplitMix64 rng(21);
  for (int round = 0; round < 30; ++round) {
    const Dense x = RandomDense(rng, 20, 20, 0.2), y = RandomDense(rng, 20, 20, 0.2);
    const Dense m = RandomDense(rng, 20, 20, 0.3);
    const SparseMatrix mask = SparseMatrix::from_dense(m);
    const Dense full = DenseProduct(x, y);
    Dense expected = full;
    for (std::size_t i = 0; i < 20; ++i)
      for (std::size_t j = 0; j < 20; ++j)
        if (m[i][j] == 0) expected[i][j] = 0;
    EXPECT_EQ(spgemm(SparseMatrix::from_dense(x), SparseMatrix::from_dense(y), &mask, 3).to_dense(), expected);
  }
}

TEST(Hadamard, SampleGraph) {
  const SparseMatrix c = hadamard(SparseMatrix::from_dense(kA), SparseMatrix::from_dense(kB));
  EXPECT_EQ(c.to_dense(), kC);
  EXPECT_EQ(c.at(5, 4), 2u);
  EXPECT_EQ(c.at(4, 5), 2u);
  EXPECT_EQ(c.at(1, 5), 1u);
  EXPECT_EQ(c.at(5, 1), 1u);
  EXPECT_EQ(c.sum(), 6u);
}

TEST(Hadamard, IdentityAndDisjoint) {
  SplitMix64 rng(4);
  const SparseMatrix a = SparseMatrix::from_dense(RandomDense(rng, 10, 10, 0.3));
  Dense ones = a.to_dense();
  for (auto& row : ones)
    for (auto& x : row) x = x ? 1 : 0;
  EXPECT_EQ(hadamard(a, SparseMatrix::from_dense(ones)), a);

  const SparseMatrix upper = SparseMatrix::from_dense(kU), lower = SparseMatrix::from_dense(kL);
  EXPECT_EQ(hadamard(upper, lower).nnz(), 0u);
  EXPECT_THROW(hadamard(upper, SparseMatrix(7, 6)), InputError);
}

TEST(SparseMatrix, Validation) {
  EXPECT_THROW(SparseMatrix(2, 2, {0, 1, 1}, {5}, {1}), InputError);
  EXPECT_THROW(SparseMatrix(2, 2, {0, 2, 2}, {1, 0}, {1, 1}), InputError);
  EXPECT_THROW(SparseMatrix(2, 2, {0, 1, 1}, {1}, {0}), InputError);
  EXPECT_NO_THROW(SparseMatrix(2, 2, {0, 1, 2}, {1, 0}, {1, 1}));
}

}  // namespace
}  // namespace tricount
