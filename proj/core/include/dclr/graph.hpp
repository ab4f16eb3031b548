#pragma once

#include <functional>
#include <vector>

#include "dclr/tensor.hpp"

namespace dclr {

class Graph;

// Handle into a Graph's node arena. Cheap to copy; valid only for the graph
// that created it.
struct Var {
  int id = -1;
  bool valid() const { return id >= 0; }
};

// Dynamic reverse-mode tape. Nodes are created in topological order by the op
// builders in ops.hpp; backward() walks the arena in reverse. One Graph per
// training step; parameters live outside and are bound as leaves each step.
class Graph {
 public:
  using BackFn = std::function<void(Graph&)>;

  explicit Graph(bool grad_enabled = true) : grad_enabled_(grad_enabled) {}

  bool grad_enabled() const { return grad_enabled_; }

  Var leaf(Tensor value, bool requires_grad = false);

  // Used by op builders.
  Var make_node(Tensor value, bool requires_grad, BackFn back);

  const Tensor& val(Var v) const;
  bool requires_grad(Var v) const;

  // Gradient of a node; zero-initialized on first access after backward()
  // starts. Reading the gradient of a node that backward() never reached
  // yields zeros of the node's shape.
  Tensor& grad(Var v);
  const Tensor& grad_or_zeros(Var v);

  void accumulate_grad(Var v, const Tensor& g);

  // Reverse sweep from a scalar root. May be called once per graph.
  void backward(Var root);

  std::size_t num_nodes() const { return nodes_.size(); }

 private:
  struct Node {
    Tensor value;
    Tensor grad;
    bool requires_grad = false;
    bool grad_alloc = false;
    BackFn back;
  };

  Node& node(Var v);
  const Node& node(Var v) const;

  std::vector<Node> nodes_;
  bool grad_enabled_;
  bool backward_done_ = false;
};

}  // namespace dclr
