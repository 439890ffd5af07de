#include "ampcal/hilbert.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ampcal/error.hpp"
#include "ampcal/rng.hpp"

namespace ampcal {

namespace {

double l2_norm(std::span<const Amp> v) {
  double s = 0.0;
  for (Amp c : v) s += std::norm(c);
  return std::sqrt(s);
}

}  // namespace

HilbertModel::HilbertModel(
    int dim, std::vector<std::pair<StateLabel, std::vector<Amp>>> states)
    : dim_(dim), states_(std::move(states)) {
  if (dim_ < 2) throw std::invalid_argument("model dimension must be >= 2");
  for (std::size_t i = 0; i < states_.size(); ++i) {
    const auto& [label, vec] = states_[i];
    if (static_cast<int>(vec.size()) != dim_) {
      throw std::invalid_argument("state vector for " + label.str() +
                                  " has the wrong dimension");
    }
    if (std::fabs(l2_norm(vec) - 1.0) > 1e-12) {
      throw std::invalid_argument("state vector for " + label.str() +
                                  " is not unit norm");
    }
    if (!index_.emplace(label.str(), i).second) {
      throw Error(Errc::duplicate_label, "duplicate label " + label.str());
    }
  }
}

const std::vector<Amp>& HilbertModel::vector_for(
    const StateLabel& label) const {
  auto it = index_.find(label.str());
  if (it == index_.end()) {
    throw Error(Errc::unknown_label, "no state named " + label.str());
  }
  return states_[it->second].second;
}

Amp inner_product(std::span<const Amp> bra, std::span<const Amp> ket) {
  Amp sum{0.0, 0.0};
  for (std::size_t i = 0; i < bra.size(); ++i) {
    sum += std::conj(bra[i]) * ket[i];
  }
  return sum;
}

namespace {

// One standard normal from two uniforms (Box-Muller, cosine branch for the
// real part, sine for the imaginary part of the same component).
std::vector<Amp> raw_vector(const CounterRng& rng, std::uint64_t counter,
                            int dim) {
  std::vector<Amp> v(dim);
  for (int j = 0; j < dim; ++j) {
    double u1 = 1.0 - rng.uniform01(counter, 4 * j);      // (0, 1]
    double u2 = rng.uniform01(counter, 4 * j + 1);
    double r = std::sqrt(-2.0 * std::log(u1));
    double t = 2.0 * std::numbers::pi * u2;
    v[j] = Amp(r * std::cos(t), r * std::sin(t));
  }
  return v;
}

void normalize(std::vector<Amp>& v) {
  double n = l2_norm(v);
  for (Amp& c : v) c /= n;
}

}  // namespace

HilbertModel random_model(
    int dim, std::span<const StateLabel> labels,
    std::span<const std::vector<StateLabel>> orthogonal_groups,
    std::uint64_t seed) {
  if (dim < 2) throw std::invalid_argument("model dimension must be >= 2");
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!index.emplace(labels[i].str(), i).second) {
      throw Error(Errc::duplicate_label,
                  "duplicate label " + labels[i].str());
    }
  }
  const CounterRng rng(seed);
  std::vector<std::vector<Amp>> vectors(labels.size());
  std::vector<bool> assigned(labels.size(), false);

  auto draw_orthogonal = [&](std::size_t label_idx,
                             const std::vector<const std::vector<Amp>*>& basis)
      -> std::vector<Amp> {
    for (std::uint64_t retry = 0; retry < 64; ++retry) {
      std::vector<Amp> v = raw_vector(rng, label_idx + retry * 4096, dim);
      for (int pass = 0; pass < 2; ++pass) {
        for (const auto* q : basis) {
          Amp overlap = inner_product(*q, v);
          for (int j = 0; j < dim; ++j) v[j] -= overlap * (*q)[j];
        }
      }
      double n = l2_norm(v);
      if (n > 1e-6) {
        for (Amp& c : v) c /= n;
        return v;
      }
    }
    throw std::runtime_error("failed to draw an orthogonal vector");
  };

  for (const auto& group : orthogonal_groups) {
    if (static_cast<int>(group.size()) > dim) {
      throw Error(Errc::group_too_large,
                  "orthogonal group of " + std::to_string(group.size()) +
                      " states does not fit in dimension " +
                      std::to_string(dim));
    }
    std::vector<const std::vector<Amp>*> basis;
    for (const StateLabel& label : group) {
      auto it = index.find(label.str());
      if (it == index.end()) {
        throw Error(Errc::unknown_label,
                    "group member " + label.str() + " is not a model label");
      }
      std::size_t li = it->second;
      if (!assigned[li]) {
        vectors[li] = draw_orthogonal(li, basis);
        assigned[li] = true;
      }
      basis.push_back(&vectors[li]);
    }
  }
  for (std::size_t li = 0; li < labels.size(); ++li) {
    if (assigned[li]) continue;
    vectors[li] = raw_vector(rng, li, dim);
    normalize(vectors[li]);
    assigned[li] = true;
  }

  std::vector<std::pair<StateLabel, std::vector<Amp>>> states;
  states.reserve(labels.size());
  for (std::size_t li = 0; li < labels.size(); ++li) {
    states.emplace_back(labels[li], std::move(vectors[li]));
  }
  return HilbertModel(dim, std::move(states));
}

Amp model_amplitude(const HilbertModel& m, const StateLabel& from,
                    const StateLabel& to) {
  return inner_product(m.vector_for(to), m.vector_for(from));
}

AmplitudeTable table_from_model(
    const HilbertModel& m,
    std::span<const std::pair<StateLabel, StateLabel>> legs) {
  AmplitudeTable table;
  for (const auto& [from, to] : legs) {
    if (!table.resolvable(from, to)) {
      table.insert(from, to, model_amplitude(m, from, to));
    }
  }
  return table;
}

Amp oracle_eval(const HilbertModel& m, const ProcessExpr& e) {
  return std::visit(
      [&](const auto& n) -> Amp {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, AtomicStep>) {
          return model_amplitude(m, n.from, n.to);
        } else if constexpr (std::is_same_v<T, SeriesComp>) {
          Amp earlier = oracle_eval(m, *n.first);
          Amp later = oracle_eval(m, *n.second);
          return later * earlier;
        } else {
          std::vector<StateLabel> filters;
          filters.reserve(n.branches.size());
          for (const auto& b : n.branches) {
            filters.push_back(atomic_legs(*b).front().second);
          }
          for (std::size_t i = 0; i < filters.size(); ++i) {
            for (std::size_t j = i + 1; j < filters.size(); ++j) {
              double overlap = std::abs(inner_product(
                  m.vector_for(filters[i]), m.vector_for(filters[j])));
              if (overlap > 1e-10) {
                throw Error(Errc::non_orthogonal_branches,
                            "branch filters " + filters[i].str() + " and " +
                                filters[j].str() +
                                " are not orthogonal (|<" + filters[i].str() +
                                "|" + filters[j].str() + ">| = " +
                                std::to_string(overlap) + ")");
              }
            }
          }
          Amp sum{0.0, 0.0};
          for (const auto& b : n.branches) sum += oracle_eval(m, *b);
          return sum;
        }
      },
      e.node());
}

double orthogonality_check(const HilbertModel& m,
                           std::span<const StateLabel> labels) {
  double worst = 0.0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      worst = std::max(worst, std::abs(inner_product(m.vector_for(labels[i]),
                                                     m.vector_for(labels[j]))));
    }
  }
  return worst;
}

}  // namespace ampcal
