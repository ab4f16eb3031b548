#include "dclr/graph.hpp"

#include "dclr/common.hpp"

namespace dclr {

Var Graph::leaf(Tensor value, bool requires_grad) {
  return make_node(std::move(value), requires_grad && grad_enabled_, nullptr);
}

Var Graph::make_node(Tensor value, bool requires_grad, BackFn back) {
  Node n;
  n.value = std::move(value);
  n.requires_grad = requires_grad && grad_enabled_;
  n.back = n.requires_grad ? std::move(back) : nullptr;
  nodes_.push_back(std::move(n));
  return Var{static_cast<int>(nodes_.size()) - 1};
}

Graph::Node& Graph::node(Var v) {
  DCLR_CHECK(v.id >= 0 && v.id < static_cast<int>(nodes_.size()), IndexError,
             "invalid Var id " << v.id);
  return nodes_[static_cast<std::size_t>(v.id)];
}

const Graph::Node& Graph::node(Var v) const {
  DCLR_CHECK(v.id >= 0 && v.id < static_cast<int>(nodes_.size()), IndexError,
             "invalid Var id " << v.id);
  return nodes_[static_cast<std::size_t>(v.id)];
}

const Tensor& Graph::val(Var v) const { return node(v).value; }

bool Graph::requires_grad(Var v) const { return node(v).requires_grad; }

Tensor& Graph::grad(Var v) {
  Node& n = node(v);
  if (!n.grad_alloc) {
    n.grad = Tensor::zeros(n.value.shape());
    n.grad_alloc = true;
  }
  return n.grad;
}

const Tensor& Graph::grad_or_zeros(Var v) { return grad(v); }

void Graph::accumulate_grad(Var v, const Tensor& g) {
  Node& n = node(v);
  if (!n.requires_grad) return;
  DCLR_CHECK(g.same_shape(n.value), ShapeError,
             "gradient shape " << g.shape_str() << " does not match value shape "
                               << n.value.shape_str());
  Tensor& dst = grad(v);
  double* d = dst.data();
  const double* s = g.data();
  const std::int64_t sz = dst.size();
  for (std::int64_t i = 0; i < sz; ++i) d[i] += s[i];
}

void Graph::backward(Var root) {
  DCLR_CHECK(grad_enabled_, NumericalError, "backward() on a no-grad graph");
  DCLR_CHECK(!backward_done_, NumericalError, "backward() may run once per graph");
  backward_done_ = true;
  Node& r = node(root);
  DCLR_CHECK(r.value.size() == 1, ShapeError, "backward root must be scalar, got "
                                                  << r.value.shape_str());
  DCLR_CHECK(r.requires_grad, NumericalError, "backward root does not require grad");
  grad(root).fill(1.0);
  for (int i = root.id; i >= 0; --i) {
    Node& n = nodes_[static_cast<std::size_t>(i)];
    if (!n.requires_grad || !n.back || !n.grad_alloc) continue;
    n.back(*this);
  }
}

}  // namespace dclr
