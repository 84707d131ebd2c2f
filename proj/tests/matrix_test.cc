// Copyright 2026 The ratlearn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "ratlearn/matrix.h"

#include "gtest/gtest.h"

namespace ratlearn {
namespace {

TEST(MatrixTest, NestedLiteralIsRowMajor) {
  const Matrix m{{1, 2, 3}, {4, 5, 6}};
  EXPECT_EQ(m.rows(), 2);
  EXPECT_EQ(m.cols(), 3);
  EXPECT_EQ(m(1, 0), 4);
  EXPECT_EQ(m.values(), (std::vector<double>{1, 2, 3, 4, 5, 6}));
}

TEST(MatrixTest, RaggedLiteralThrows) {
  EXPECT_THROW((Matrix{{1, 2}, {3}}), DimensionError);
}

TEST(MatrixTest, FromRowMajorChecksSize) {
  EXPECT_EQ(Matrix::FromRowMajor(2, 2, {1, 2, 3, 4}), (Matrix{{1, 2}, {3, 4}}));
  EXPECT_THROW(Matrix::FromRowMajor(2, 2, {1, 2, 3}), DimensionError);
}

TEST(MatrixTest, TransposeSwapsShape) {
  const Matrix m{{1, 2, 3}, {4, 5, 6}};
  const Matrix t = m.Transposed();
  EXPECT_EQ(t.rows(), 3);
  EXPECT_EQ(t.cols(), 2);
  EXPECT_EQ(t(2, 1), 6);
  EXPECT_EQ(t.Transposed(), m);
}

TEST(MatrixTest, MinMaxAndString) {
  const Matrix m{{3, -1}, {7, 0}};
  EXPECT_EQ(m.MinEntry(), -1);
  EXPECT_EQ(m.MaxEntry(), 7);
  EXPECT_EQ(m.ToString(), "[[3, -1], [7, 0]]");
}

TEST(MatrixTest, NegativeDimensionsThrow) {
  EXPECT_THROW(Matrix(-1, 2), DimensionError);
  EXPECT_TRUE(Matrix(0, 3).empty());
}

}  // namespace
}  // namespace ratlearn
