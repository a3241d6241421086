// tensor/graph.cc

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

#include "asplab/tensor/graph.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "asplab/error.h"

namespace asplab {

std::string_view OpName(OpKind kind) {
  switch (kind) {
    case OpKind::kLeaf: return "leaf";
    case OpKind::kLinear: return "linear";
    case OpKind::kTanh: return "tanh";
    case OpKind::kRelu: return "relu";
    case OpKind::kSoftmax: return "softmax";
    case OpKind::kConcat: return "concat";
    case OpKind::kMean: return "mean";
    case OpKind::kWeightedSum: return "weighted_sum";
    case OpKind::kSqrt: return "sqrt";
    case OpKind::kSquare: return "square";
    case OpKind::kAdd: return "add";
    case OpKind::kSub: return "sub";
    case OpKind::kMul: return "mul";
    case OpKind::kScalarMul: return "scalar_mul";
    case OpKind::kClampMin: return "clamp_min";
    case OpKind::kRepeatRows: return "repeat_rows";
  }
  return "?";
}

namespace {

[[noreturn]] void ShapeFail(OpKind kind, const Tensor &a, const Tensor &b,
                            const std::string &why) {
  throw ShapeError(std::string(OpName(kind)) + ": " + why + " (" +
                   ShapeString(a.shape()) + " vs " + ShapeString(b.shape()) + ")");
}

void RequireRank2(OpKind kind, const Tensor &t) {
  if (t.rank() != 2)
    throw ShapeError(std::string(OpName(kind)) + ": expected rank-2 operand, got " +
                     ShapeString(t.shape()));
}

std::size_t Arity(OpKind kind) {
  switch (kind) {
    case OpKind::kLeaf: return 0;
    case OpKind::kLinear: return 3;
    case OpKind::kWeightedSum:
    case OpKind::kAdd:
    case OpKind::kSub:
    case OpKind::kMul: return 2;
    case OpKind::kConcat: return 0;  // variadic, >= 1
    default: return 1;
  }
}

template <typename F>
Tensor Map(const Tensor &x, F f) {
  Tensor y(x.shape());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = f(x[i]);
  return y;
}

Tensor SoftmaxForward(const Tensor &x, Axis axis) {
  const std::size_t n = x.rows(), c = x.cols();
  if ((axis == Axis::kRows ? n : c) == 0)
    throw ShapeError("softmax: empty axis " + ShapeString(x.shape()));
  Tensor y(x.shape());
  if (axis == Axis::kRows) {
    for (std::size_t j = 0; j < c; ++j) {
      double mx = x.at(0, j);
      for (std::size_t i = 1; i < n; ++i) mx = std::max(mx, x.at(i, j));
      double s = 0.0;
      for (std::size_t i = 0; i < n; ++i) s += (y.at(i, j) = std::exp(x.at(i, j) - mx));
      for (std::size_t i = 0; i < n; ++i) y.at(i, j) /= s;
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      auto xr = x.row(i);
      auto yr = y.row(i);
      const double mx = *std::max_element(xr.begin(), xr.end());
      double s = 0.0;
      for (std::size_t j = 0; j < c; ++j) s += (yr[j] = std::exp(xr[j] - mx));
      for (std::size_t j = 0; j < c; ++j) yr[j] /= s;
    }
  }
  return y;
}

}  // namespace

Var Graph::Leaf(Tensor value, bool requires_grad) {
  nodes_.push_back({OpKind::kLeaf, {}, std::move(value), {}, requires_grad});
  return {nodes_.size() - 1};
}

Var Graph::Apply(OpKind kind, std::span<const Var> inputs, const OpAttrs &attrs) {
  if (kind == OpKind::kLeaf) throw ShapeError("Apply: use Leaf() for leaves");
  const std::size_t arity = Arity(kind);
  if ((arity && inputs.size() != arity) || inputs.empty())
    throw ShapeError(std::string(OpName(kind)) + ": expected " +
                     std::to_string(arity) + " inputs, got " +
                     std::to_string(inputs.size()));
  for (Var v : inputs)
    if (v.id >= nodes_.size()) throw ShapeError("Apply: unknown input node");

  Tensor out = Forward(kind, inputs, attrs);
  bool rg = std::any_of(inputs.begin(), inputs.end(),
                        [&](Var v) { return nodes_[v.id].requires_grad; });
  Node node{rg ? kind : OpKind::kLeaf, {}, std::move(out), attrs, rg};
  if (rg)
    for (Var v : inputs) node.inputs.push_back(v.id);
  nodes_.push_back(std::move(node));
  return {nodes_.size() - 1};
}

Tensor Graph::Forward(OpKind kind, std::span<const Var> in,
                      const OpAttrs &attrs) const {
  auto val = [&](std::size_t k) -> const Tensor & { return nodes_[in[k].id].value; };
  for (std::size_t k = 0; k < in.size(); ++k) RequireRank2(kind, val(k));

  switch (kind) {
    case OpKind::kLinear: {
      const Tensor &x = val(0), &w = val(1), &b = val(2);
      if (x.cols() != w.cols()) ShapeFail(kind, x, w, "input width != weight columns");
      if (b.rows() != 1 || b.cols() != w.rows())
        ShapeFail(kind, w, b, "bias must be [1,out]");
      const std::size_t n = x.rows(), out = w.rows(), k = w.cols();
      Tensor y = Tensor::Matrix(n, out);
      for (std::size_t i = 0; i < n; ++i) {
        const double *xr = x.row(i).data();
        for (std::size_t o = 0; o < out; ++o) {
          const double *wr = w.row(o).data();
          double s = b[o];
          for (std::size_t j = 0; j < k; ++j) s += xr[j] * wr[j];
          y.at(i, o) = s;
        }
      }
      return y;
    }
    case OpKind::kTanh: return Map(val(0), [](double v) { return std::tanh(v); });
    // NaN passes through so that a poisoned input surfaces as a non-finite loss.
    case OpKind::kRelu: return Map(val(0), [](double v) { return v > 0.0 || v != v ? v : 0.0; });
    case OpKind::kSqrt:
      return Map(val(0), [](double v) {
        if (v < 0.0) throw ShapeError("sqrt: negative argument");
        return std::sqrt(v);
      });
    case OpKind::kSquare: return Map(val(0), [](double v) { return v * v; });
    case OpKind::kScalarMul: {
      const double s = attrs.scalar;
      return Map(val(0), [s](double v) { return s * v; });
    }
    case OpKind::kClampMin: {
      const double f = attrs.scalar;
      return Map(val(0), [f](double v) { return v > f || v != v ? v : f; });
    }
    case OpKind::kSoftmax:
      if (attrs.axis == Axis::kAll) throw ShapeError("softmax: axis must be rows or cols");
      return SoftmaxForward(val(0), attrs.axis);
    case OpKind::kMean: {
      const Tensor &x = val(0);
      const std::size_t n = x.rows(), c = x.cols();
      if (x.size() == 0) throw ShapeError("mean: empty operand");
      if (attrs.axis == Axis::kAll) {
        double s = 0.0;
        for (double v : x.data()) s += v;
        return Tensor::Scalar(s / static_cast<double>(x.size()));
      }
      if (attrs.axis == Axis::kRows) {
        Tensor y = Tensor::Matrix(1, c);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < c; ++j) y[j] += x.at(i, j);
        for (std::size_t j = 0; j < c; ++j) y[j] /= static_cast<double>(n);
        return y;
      }
      Tensor y = Tensor::Matrix(n, 1);
      for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (double v : x.row(i)) s += v;
        y[i] = s / static_cast<double>(c);
      }
      return y;
    }
    case OpKind::kWeightedSum: {
      const Tensor &a = val(0), &x = val(1);
      if (!a.SameShape(x)) ShapeFail(kind, a, x, "weights and values differ in shape");
      Tensor y = Tensor::Matrix(1, x.cols());
      for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) y[j] += a.at(i, j) * x.at(i, j);
      return y;
    }
    case OpKind::kAdd:
    case OpKind::kSub:
    case OpKind::kMul: {
      const Tensor &a = val(0), &b = val(1);
      if (!a.SameShape(b)) ShapeFail(kind, a, b, "operands differ in shape");
      Tensor y(a.shape());
      for (std::size_t i = 0; i < a.size(); ++i)
        y[i] = kind == OpKind::kAdd ? a[i] + b[i]
               : kind == OpKind::kSub ? a[i] - b[i]
                                      : a[i] * b[i];
      return y;
    }
    case OpKind::kConcat: {
      if (attrs.axis == Axis::kAll) throw ShapeError("concat: axis must be rows or cols");
      const Tensor &first = val(0);
      std::size_t total = 0;
      for (std::size_t k = 0; k < in.size(); ++k) {
        const Tensor &t = val(k);
        if (attrs.axis == Axis::kRows) {
          if (t.cols() != first.cols()) ShapeFail(kind, first, t, "column counts differ");
          total += t.rows();
        } else {
          if (t.rows() != first.rows()) ShapeFail(kind, first, t, "row counts differ");
          total += t.cols();
        }
      }
      if (attrs.axis == Axis::kRows) {
        Tensor y = Tensor::Matrix(total, first.cols());
        std::size_t r = 0;
        for (std::size_t k = 0; k < in.size(); ++k)
          for (std::size_t i = 0; i < val(k).rows(); ++i, ++r)
            std::copy(val(k).row(i).begin(), val(k).row(i).end(), y.row(r).begin());
        return y;
      }
      Tensor y = Tensor::Matrix(first.rows(), total);
      std::size_t c0 = 0;
      for (std::size_t k = 0; k < in.size(); ++k) {
        const Tensor &t = val(k);
        for (std::size_t i = 0; i < t.rows(); ++i)
          std::copy(t.row(i).begin(), t.row(i).end(), y.row(i).begin() + c0);
        c0 += t.cols();
      }
      return y;
    }
    case OpKind::kRepeatRows: {
      const Tensor &x = val(0);
      if (x.rows() != 1)
        throw ShapeError("repeat_rows: expected a [1,c] row, got " + ShapeString(x.shape()));
      Tensor y = Tensor::Matrix(attrs.count, x.cols());
      for (std::size_t i = 0; i < attrs.count; ++i)
        std::copy(x.data().begin(), x.data().end(), y.row(i).begin());
      return y;
    }
    case OpKind::kLeaf: break;
  }
  throw ShapeError("unsupported op");
}

Tensor &Graph::GradSlot(std::size_t id) {
  Tensor &g = grads_[id];
  if (g.empty() && nodes_[id].value.size() != 0) g = Tensor(nodes_[id].value.shape());
  return g;
}

void Graph::Backward(Var loss) {
  if (loss.id >= nodes_.size()) throw ShapeError("backward: unknown loss node");
  if (nodes_[loss.id].value.size() != 1)
    throw ShapeError("backward: loss must be a scalar, got " +
                     ShapeString(nodes_[loss.id].value.shape()));
  grads_.assign(nodes_.size(), Tensor());
  have_grads_ = true;
  if (!nodes_[loss.id].requires_grad) return;
  GradSlot(loss.id).Fill(1.0);
  for (std::size_t id = loss.id + 1; id-- > 0;) {
    const Node &node = nodes_[id];
    if (!node.requires_grad || node.kind == OpKind::kLeaf || grads_[id].empty()) continue;
    Propagate(node, grads_[id]);
  }
}

Tensor Graph::grad(Var v) const {
  const Node &node = nodes_.at(v.id);
  if (have_grads_ && !grads_[v.id].empty()) return grads_[v.id];
  return Tensor(node.value.shape());
}

void Graph::Propagate(const Node &node, const Tensor &dy) {
  auto in = [&](std::size_t k) -> const Tensor & { return nodes_[node.inputs[k]].value; };
  auto wants = [&](std::size_t k) { return nodes_[node.inputs[k]].requires_grad; };
  auto slot = [&](std::size_t k) -> Tensor & { return GradSlot(node.inputs[k]); };
  const Tensor &y = node.value;

  switch (node.kind) {
    case OpKind::kLinear: {
      const Tensor &x = in(0), &w = in(1);
      const std::size_t n = x.rows(), out = w.rows(), k = w.cols();
      if (wants(0)) {
        Tensor &dx = slot(0);
        for (std::size_t i = 0; i < n; ++i) {
          double *dxr = dx.row(i).data();
          for (std::size_t o = 0; o < out; ++o) {
            const double g = dy.at(i, o);
            if (g == 0.0) continue;
            const double *wr = w.row(o).data();
            for (std::size_t j = 0; j < k; ++j) dxr[j] += g * wr[j];
          }
        }
      }
      if (wants(1)) {
        Tensor &dw = slot(1);
        for (std::size_t i = 0; i < n; ++i) {
          const double *xr = x.row(i).data();
          for (std::size_t o = 0; o < out; ++o) {
            const double g = dy.at(i, o);
            if (g == 0.0) continue;
            double *dwr = dw.row(o).data();
            for (std::size_t j = 0; j < k; ++j) dwr[j] += g * xr[j];
          }
        }
      }
      if (wants(2)) {
        Tensor &db = slot(2);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t o = 0; o < out; ++o) db[o] += dy.at(i, o);
      }
      return;
    }
    case OpKind::kTanh: {
      Tensor &dx = slot(0);
      for (std::size_t i = 0; i < y.size(); ++i) dx[i] += dy[i] * (1.0 - y[i] * y[i]);
      return;
    }
    case OpKind::kRelu: {
      Tensor &dx = slot(0);
      const Tensor &x = in(0);
      for (std::size_t i = 0; i < y.size(); ++i)
        if (x[i] > 0.0) dx[i] += dy[i];
      return;
    }
    case OpKind::kSqrt: {
      Tensor &dx = slot(0);
      for (std::size_t i = 0; i < y.size(); ++i) dx[i] += dy[i] * 0.5 / y[i];
      return;
    }
    case OpKind::kSquare: {
      Tensor &dx = slot(0);
      const Tensor &x = in(0);
      for (std::size_t i = 0; i < y.size(); ++i) dx[i] += 2.0 * x[i] * dy[i];
      return;
    }
    case OpKind::kScalarMul: {
      Tensor &dx = slot(0);
      for (std::size_t i = 0; i < y.size(); ++i) dx[i] += node.attrs.scalar * dy[i];
      return;
    }
    case OpKind::kClampMin: {
      Tensor &dx = slot(0);
      const Tensor &x = in(0);
      for (std::size_t i = 0; i < y.size(); ++i)
        if (x[i] > node.attrs.scalar) dx[i] += dy[i];
      return;
    }
    case OpKind::kSoftmax: {
      // dx = y * (dy - <dy, y>) along the normalized axis.
      Tensor &dx = slot(0);
      const std::size_t n = y.rows(), c = y.cols();
      if (node.attrs.axis == Axis::kRows) {
        for (std::size_t j = 0; j < c; ++j) {
          double dot = 0.0;
          for (std::size_t i = 0; i < n; ++i) dot += dy.at(i, j) * y.at(i, j);
          for (std::size_t i = 0; i < n; ++i) dx.at(i, j) += y.at(i, j) * (dy.at(i, j) - dot);
        }
      } else {
        for (std::size_t i = 0; i < n; ++i) {
          double dot = 0.0;
          for (std::size_t j = 0; j < c; ++j) dot += dy.at(i, j) * y.at(i, j);
          for (std::size_t j = 0; j < c; ++j) dx.at(i, j) += y.at(i, j) * (dy.at(i, j) - dot);
        }
      }
      return;
    }
    case OpKind::kMean: {
      Tensor &dx = slot(0);
      const std::size_t n = dx.rows(), c = dx.cols();
      if (node.attrs.axis == Axis::kAll) {
        const double g = dy[0] / static_cast<double>(dx.size());
        for (double &v : dx.data()) v += g;
      } else if (node.attrs.axis == Axis::kRows) {
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < c; ++j) dx.at(i, j) += dy[j] / static_cast<double>(n);
      } else {
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < c; ++j) dx.at(i, j) += dy[i] / static_cast<double>(c);
      }
      return;
    }
    case OpKind::kWeightedSum: {
      const Tensor &a = in(0), &x = in(1);
      const std::size_t n = x.rows(), c = x.cols();
      if (wants(0)) {
        Tensor &da = slot(0);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < c; ++j) da.at(i, j) += dy[j] * x.at(i, j);
      }
      if (wants(1)) {
        Tensor &dx = slot(1);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < c; ++j) dx.at(i, j) += dy[j] * a.at(i, j);
      }
      return;
    }
    case OpKind::kAdd:
    case OpKind::kSub:
    case OpKind::kMul: {
      const std::size_t m = y.size();
      if (wants(0)) {
        Tensor &da = slot(0);
        const Tensor &b = in(1);
        for (std::size_t i = 0; i < m; ++i)
          da[i] += node.kind == OpKind::kMul ? dy[i] * b[i] : dy[i];
      }
      if (wants(1)) {
        Tensor &db = slot(1);
        const Tensor &a = in(0);
        for (std::size_t i = 0; i < m; ++i)
          db[i] += node.kind == OpKind::kMul   ? dy[i] * a[i]
                   : node.kind == OpKind::kSub ? -dy[i]
                                               : dy[i];
      }
      return;
    }
    case OpKind::kConcat: {
      std::size_t offset = 0;
      for (std::size_t k = 0; k < node.inputs.size(); ++k) {
        const Tensor &t = in(k);
        if (wants(k)) {
          Tensor &dt = slot(k);
          for (std::size_t i = 0; i < t.rows(); ++i)
            for (std::size_t j = 0; j < t.cols(); ++j)
              dt.at(i, j) += node.attrs.axis == Axis::kRows ? dy.at(offset + i, j)
                                                            : dy.at(i, offset + j);
        }
        offset += node.attrs.axis == Axis::kRows ? t.rows() : t.cols();
      }
      return;
    }
    case OpKind::kRepeatRows: {
      Tensor &dx = slot(0);
      for (std::size_t i = 0; i < dy.rows(); ++i)
        for (std::size_t j = 0; j < dy.cols(); ++j) dx[j] += dy.at(i, j);
      return;
    }
    case OpKind::kLeaf: return;
  }
}

}  // namespace asplab
