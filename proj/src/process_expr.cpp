#include "ampcal/process_expr.hpp"

#include <stdexcept>

namespace ampcal {

ExprPtr atomic(StateLabel from, StateLabel to) {
  return std::make_shared<const ProcessExpr>(
      AtomicStep{std::move(from), std::move(to)});
}

ExprPtr series(ExprPtr first, ExprPtr second) {
  if (!first || !second) throw std::invalid_argument("series: null child");
  return std::make_shared<const ProcessExpr>(
      SeriesComp{std::move(first), std::move(second)});
}

ExprPtr parallel(std::vector<ExprPtr> branches) {
  if (branches.size() < 2) {
    throw std::invalid_argument("parallel: needs at least two branches");
  }
  for (const auto& b : branches) {
    if (!b) throw std::invalid_argument("parallel: null branch");
  }
  return std::make_shared<const ProcessExpr>(ParallelComp{std::move(branches)});
}

Endpoints endpoints(const ProcessExpr& e) {
  return std::visit(
      [](const auto& n) -> Endpoints {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, AtomicStep>) {
          return {n.from, n.to};
        } else if constexpr (std::is_same_v<T, SeriesComp>) {
          return {endpoints(*n.first).from, endpoints(*n.second).to};
        } else {
          return endpoints(*n.branches.front());
        }
      },
      e.node());
}

namespace {

std::optional<std::string> validate_at(const ProcessExpr& e,
                                       const std::string& path) {
  if (const auto* s = std::get_if<SeriesComp>(&e.node())) {
    StateLabel mid_out = endpoints(*s->first).to;
    StateLabel mid_in = endpoints(*s->second).from;
    if (mid_out != mid_in) {
      return "series endpoint mismatch at " + path + ": first ends at " +
             mid_out.str() + ", second starts at " + mid_in.str();
    }
    if (auto v = validate_at(*s->first, path + ".first")) return v;
    return validate_at(*s->second, path + ".second");
  }
  if (const auto* p = std::get_if<ParallelComp>(&e.node())) {
    Endpoints shared = endpoints(*p->branches.front());
    for (std::size_t i = 1; i < p->branches.size(); ++i) {
      Endpoints b = endpoints(*p->branches[i]);
      if (b.from != shared.from) {
        return "parallel branches disagree on from-endpoint at " + path +
               ": branch[0] starts at " + shared.from.str() + ", branch[" +
               std::to_string(i) + "] starts at " + b.from.str();
      }
      if (b.to != shared.to) {
        return "parallel branches disagree on to-endpoint at " + path +
               ": branch[0] ends at " + shared.to.str() + ", branch[" +
               std::to_string(i) + "] ends at " + b.to.str();
      }
    }
    for (std::size_t i = 0; i < p->branches.size(); ++i) {
      if (auto v = validate_at(*p->branches[i],
                               path + ".branch[" + std::to_string(i) + "]")) {
        return v;
      }
    }
  }
  return std::nullopt;
}

void collect_legs(const ProcessExpr& e,
                  std::vector<std::pair<StateLabel, StateLabel>>& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, AtomicStep>) {
          out.emplace_back(n.from, n.to);
        } else if constexpr (std::is_same_v<T, SeriesComp>) {
          collect_legs(*n.first, out);
          collect_legs(*n.second, out);
        } else {
          for (const auto& b : n.branches) collect_legs(*b, out);
        }
      },
      e.node());
}

}  // namespace

std::optional<std::string> validate(const ProcessExpr& e) {
  return validate_at(e, "root");
}

std::vector<std::pair<StateLabel, StateLabel>> atomic_legs(
    const ProcessExpr& e) {
  std::vector<std::pair<StateLabel, StateLabel>> legs;
  collect_legs(e, legs);
  return legs;
}

bool structurally_equal(const ProcessExpr& a, const ProcessExpr& b) {
  if (a.node().index() != b.node().index()) return false;
  if (const auto* aa = std::get_if<AtomicStep>(&a.node())) {
    const auto& bb = std::get<AtomicStep>(b.node());
    return aa->from == bb.from && aa->to == bb.to;
  }
  if (const auto* as = std::get_if<SeriesComp>(&a.node())) {
    const auto& bs = std::get<SeriesComp>(b.node());
    return structurally_equal(*as->first, *bs.first) &&
           structurally_equal(*as->second, *bs.second);
  }
  const auto& ap = std::get<ParallelComp>(a.node());
  const auto& bp = std::get<ParallelComp>(b.node());
  if (ap.branches.size() != bp.branches.size()) return false;
  for (std::size_t i = 0; i < ap.branches.size(); ++i) {
    if (!structurally_equal(*ap.branches[i], *bp.branches[i])) return false;
  }
  return true;
}

bool is_chain(const ProcessExpr& e) {
  return std::visit(
      [](const auto& n) -> bool {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, AtomicStep>) {
          return true;
        } else if constexpr (std::is_same_v<T, SeriesComp>) {
          return is_chain(*n.first) && is_chain(*n.second);
        } else {
          return false;
        }
      },
      e.node());
}

namespace {

void collect_groups(const ProcessExpr& e,
                    std::vector<std::vector<StateLabel>>& out) {
  if (const auto* p = std::get_if<ParallelComp>(&e.node())) {
    std::vector<StateLabel> filters;
    for (const auto& b : p->branches) {
      filters.push_back(atomic_legs(*b).front().second);
    }
    out.push_back(std::move(filters));
  }
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, SeriesComp>) {
          collect_groups(*n.first, out);
          collect_groups(*n.second, out);
        } else if constexpr (std::is_same_v<T, ParallelComp>) {
          for (const auto& b : n.branches) collect_groups(*b, out);
        }
      },
      e.node());
}

}  // namespace

std::vector<std::vector<StateLabel>> parallel_filter_groups(
    const ProcessExpr& e) {
  std::vector<std::vector<StateLabel>> groups;
  collect_groups(e, groups);
  return groups;
}

std::vector<StateLabel> collect_labels(const ProcessExpr& e) {
  std::vector<StateLabel> labels;
  auto add = [&](const StateLabel& l) {
    for (const auto& seen : labels) {
      if (seen == l) return;
    }
    labels.push_back(l);
  };
  for (const auto& [from, to] : atomic_legs(e)) {
    add(from);
    add(to);
  }
  return labels;
}

}  // namespace ampcal
