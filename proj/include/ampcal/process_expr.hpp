#ifndef AMPCAL_PROCESS_EXPR_HPP
#define AMPCAL_PROCESS_EXPR_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ampcal/state_label.hpp"

namespace ampcal {

class ProcessExpr;
using ExprPtr = std::shared_ptr<const ProcessExpr>;

// Leaf transition from -> to. Self transitions are allowed.
struct AtomicStep {
  StateLabel from;
  StateLabel to;
};

// first happens earlier in time than second.
struct SeriesComp {
  ExprPtr first;
  ExprPtr second;
};

// Two or more branches sharing both endpoints.
struct ParallelComp {
  std::vector<ExprPtr> branches;
};

// Immutable series-parallel process tree. Construction enforces only the
// structural arity; endpoint coherence is checked by validate().
class ProcessExpr {
 public:
  using Node = std::variant<AtomicStep, SeriesComp, ParallelComp>;

  explicit ProcessExpr(Node node) : node_(std::move(node)) {}
  const Node& node() const { return node_; }

 private:
  Node node_;
};

ExprPtr atomic(StateLabel from, StateLabel to);
ExprPtr series(ExprPtr first, ExprPtr second);
ExprPtr parallel(std::vector<ExprPtr> branches);

struct Endpoints {
  StateLabel from;
  StateLabel to;
};

// Structural endpoints: Atomic -> its pair, Series -> (first.from,
// second.to), Parallel -> first branch's endpoints. Meaningful when the
// expression validates.
Endpoints endpoints(const ProcessExpr& e);

// nullopt when every endpoint invariant holds; otherwise the first
// violation in pre-order, with a path such as "root.second.branch[1]".
std::optional<std::string> validate(const ProcessExpr& e);

// All atomic transitions, earliest first; parallel branches contribute in
// textual order, duplicates preserved.
std::vector<std::pair<StateLabel, StateLabel>> atomic_legs(const ProcessExpr& e);

bool structurally_equal(const ProcessExpr& a, const ProcessExpr& b);

// True when the tree contains no Parallel node.
bool is_chain(const ProcessExpr& e);

// For every Parallel node (pre-order), the first intermediate state of each
// branch: the filters whose mutual orthogonality parallel composition
// assumes.
std::vector<std::vector<StateLabel>> parallel_filter_groups(const ProcessExpr& e);

// Every label in order of first appearance.
std::vector<StateLabel> collect_labels(const ProcessExpr& e);

}  // namespace ampcal

#endif  // AMPCAL_PROCESS_EXPR_HPP
