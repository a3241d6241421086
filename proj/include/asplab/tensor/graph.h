// asplab/tensor/graph.h

// Copyright 2026  The asp-lab Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef ASPLAB_TENSOR_GRAPH_H_
#define ASPLAB_TENSOR_GRAPH_H_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

#include "asplab/tensor/tensor.h"

namespace asplab {

enum class OpKind {
  kLeaf,
  kLinear,       // x[n,in], W[out,in], b[1,out] -> x W^T + b
  kTanh,
  kRelu,
  kSoftmax,      // along `axis`
  kConcat,       // along `axis`
  kMean,         // along `axis`, keeps the reduced dim as 1
  kWeightedSum,  // alpha[n,c], x[n,c] -> [1,c], sum over rows of alpha*x
  kSqrt,
  kSquare,
  kAdd,
  kSub,
  kMul,          // elementwise
  kScalarMul,
  kClampMin,     // max(x, scalar)
  kRepeatRows,   // x[1,c] -> [count,c]
};

std::string_view OpName(OpKind kind);

// Reduction / normalization axis. kRows reduces over rows (one result per
// column), kCols over columns, kAll over every element.
enum class Axis { kRows = 0, kCols = 1, kAll = 2 };

struct OpAttrs {
  Axis axis = Axis::kRows;
  double scalar = 0.0;
  std::size_t count = 0;
};

// Handle to a node of a Graph.
struct Var {
  std::size_t id;
};

// Reverse-mode tape. Nodes are appended in evaluation order, so the tape is
// topologically sorted by construction. An op is recorded with its inputs only
// when one of them requires a gradient; otherwise the result is stored as a
// constant. A Graph is not thread-safe; use one per thread.
class Graph {
 public:
  Var Leaf(Tensor value, bool requires_grad = false);

  // Generic entry point used by the named helpers below.
  Var Apply(OpKind kind, std::span<const Var> inputs, const OpAttrs &attrs = {});
  Var Apply(OpKind kind, std::initializer_list<Var> inputs,
            const OpAttrs &attrs = {}) {
    return Apply(kind, std::span<const Var>(inputs.begin(), inputs.size()), attrs);
  }

  Var Linear(Var x, Var w, Var b) { return Apply(OpKind::kLinear, {x, w, b}); }
  Var Tanh(Var x) { return Apply(OpKind::kTanh, {x}); }
  Var Relu(Var x) { return Apply(OpKind::kRelu, {x}); }
  Var Softmax(Var x, Axis axis) {
    return Apply(OpKind::kSoftmax, {x}, {.axis = axis});
  }
  Var Concat(std::span<const Var> xs, Axis axis) {
    return Apply(OpKind::kConcat, xs, {.axis = axis});
  }
  Var Mean(Var x, Axis axis) { return Apply(OpKind::kMean, {x}, {.axis = axis}); }
  Var WeightedSum(Var alpha, Var x) {
    return Apply(OpKind::kWeightedSum, {alpha, x});
  }
  Var Sqrt(Var x) { return Apply(OpKind::kSqrt, {x}); }
  Var Square(Var x) { return Apply(OpKind::kSquare, {x}); }
  Var Add(Var a, Var b) { return Apply(OpKind::kAdd, {a, b}); }
  Var Sub(Var a, Var b) { return Apply(OpKind::kSub, {a, b}); }
  Var Mul(Var a, Var b) { return Apply(OpKind::kMul, {a, b}); }
  Var ScalarMul(Var x, double s) {
    return Apply(OpKind::kScalarMul, {x}, {.scalar = s});
  }
  Var ClampMin(Var x, double floor) {
    return Apply(OpKind::kClampMin, {x}, {.scalar = floor});
  }
  Var RepeatRows(Var x, std::size_t count) {
    return Apply(OpKind::kRepeatRows, {x}, {.count = count});
  }

  const Tensor &value(Var v) const { return nodes_.at(v.id).value; }
  bool requires_grad(Var v) const { return nodes_.at(v.id).requires_grad; }
  OpKind kind(Var v) const { return nodes_.at(v.id).kind; }
  std::span<const std::size_t> inputs(Var v) const { return nodes_.at(v.id).inputs; }
  std::size_t size() const { return nodes_.size(); }

  // Populates gradients of `loss` (which must hold a single value) with
  // respect to every node that requires one.
  void Backward(Var loss);
  // Gradient after Backward. Leaves that require grad but did not take part
  // in the loss get zeros of their own shape.
  Tensor grad(Var v) const;

 private:
  struct Node {
    OpKind kind;
    std::vector<std::size_t> inputs;
    Tensor value;
    OpAttrs attrs;
    bool requires_grad;
  };

  Tensor Forward(OpKind kind, std::span<const Var> inputs, const OpAttrs &attrs) const;
  void Propagate(const Node &node, const Tensor &dy);
  Tensor &GradSlot(std::size_t id);

  std::vector<Node> nodes_;
  std::vector<Tensor> grads_;
  bool have_grads_ = false;
};

}  // namespace asplab

#endif  // ASPLAB_TENSOR_GRAPH_H_
