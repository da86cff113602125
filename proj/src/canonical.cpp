#include "cohere/canonical.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cohere/errors.hpp"

namespace cohere {
namespace {

using Coloring = std::vector<std::size_t>;

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const LabeledGraph& g) : g_(g), n_(g.size()) {
    std::vector<std::string> names;
    for (std::size_t v = 0; v < n_; ++v) names.push_back(g.group(v).to_string());
    std::vector<std::string> sorted = names;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    Coloring initial(n_);
    for (std::size_t v = 0; v < n_; ++v) {
      initial[v] = std::lower_bound(sorted.begin(), sorted.end(), names[v]) - sorted.begin();
    }
    root_ = refine(initial);
    twins_.assign(n_ * n_, false);
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t y = x + 1; y < n_; ++y) {
        bool twin = g.group(x) == g.group(y);
        for (std::size_t z = 0; twin && z < n_; ++z) {
          if (z != x && z != y) twin = g.label(x, z) == g.label(y, z);
        }
        twins_[x * n_ + y] = twins_[y * n_ + x] = twin;
      }
    }
  }

  CanonicalForm run() {
    search(root_);
    std::ostringstream key;
    key << n_ << '|';
    for (std::size_t i = 0; i < n_;) {
      std::size_t j = i;
      const auto name = g_.group(best_order_[i]).to_string();
      while (j < n_ && g_.group(best_order_[j]).to_string() == name) ++j;
      if (i > 0) key << ',';
      key << name;
      if (j - i > 1) key << '*' << (j - i);
      i = j;
    }
    key << '|';
    bool small_labels = std::all_of(best_.begin(), best_.end(), [](int m) { return m < 10; });
    for (std::size_t i = 0; i < best_.size(); ++i) {
      if (small_labels) {
        key << best_[i];
      } else {
        key << (i ? "." : "") << best_[i];
      }
    }
    return {key.str(), best_order_};
  }

 private:
  // Iterated colour refinement; colours stay ordered by (old colour, signature).
  Coloring refine(Coloring colors) const {
    std::size_t classes = count_classes(colors);
    while (true) {
      std::vector<std::pair<std::vector<std::size_t>, std::size_t>> sig(n_);
      for (std::size_t v = 0; v < n_; ++v) {
        std::vector<std::size_t> s{colors[v]};
        std::vector<std::pair<std::size_t, std::size_t>> nbr;
        for (std::size_t w = 0; w < n_; ++w) {
          if (g_.adjacent(v, w)) nbr.emplace_back(colors[w], static_cast<std::size_t>(g_.label(v, w)));
        }
        std::sort(nbr.begin(), nbr.end());
        for (const auto& [c, m] : nbr) {
          s.push_back(c);
          s.push_back(m);
        }
        sig[v] = {std::move(s), v};
      }
      std::vector<std::vector<std::size_t>> distinct;
      for (const auto& [s, v] : sig) distinct.push_back(s);
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      Coloring next(n_);
      for (const auto& [s, v] : sig) {
        next[v] = std::lower_bound(distinct.begin(), distinct.end(), s) - distinct.begin();
      }
      const std::size_t next_classes = distinct.size();
      colors = std::move(next);
      if (next_classes == classes) return colors;
      classes = next_classes;
    }
  }

  static std::size_t count_classes(const Coloring& c) {
    Coloring s = c;
    std::sort(s.begin(), s.end());
    return std::unique(s.begin(), s.end()) - s.begin();
  }

  Coloring individualize(const Coloring& colors, std::size_t v) const {
    Coloring out(n_);
    for (std::size_t w = 0; w < n_; ++w) out[w] = 2 * colors[w] + (w == v ? 0 : 1);
    return refine(out);
  }

  void search(const Coloring& colors) {
    // Target cell: the smallest colour shared by more than one vertex.
    std::map<std::size_t, std::vector<std::size_t>> cells;
    for (std::size_t v = 0; v < n_; ++v) cells[colors[v]].push_back(v);
    const std::vector<std::size_t>* target = nullptr;
    for (const auto& [c, members] : cells) {
      if (members.size() > 1) {
        target = &members;
        break;
      }
    }
    if (!target) {
      consider_leaf(cells);
      return;
    }
    std::vector<std::size_t> tried;
    for (std::size_t v : *target) {
      // Swapping twins is an automorphism fixing the current partition, so
      // their subtrees yield the same leaves.
      bool redundant = std::any_of(tried.begin(), tried.end(),
                                   [&](std::size_t t) { return twins_[t * n_ + v]; });
      if (redundant) continue;
      tried.push_back(v);
      search(individualize(colors, v));
    }
  }

  void consider_leaf(const std::map<std::size_t, std::vector<std::size_t>>& cells) {
    std::vector<std::size_t> order;
    order.reserve(n_);
    for (const auto& [c, members] : cells) order.push_back(members.front());
    std::vector<int> code;
    code.reserve(n_ * (n_ - 1) / 2);
    for (std::size_t i = 1; i < n_; ++i) {
      for (std::size_t j = 0; j < i; ++j) code.push_back(g_.label(order[i], order[j]));
    }
    if (best_order_.empty() || code < best_) {
      best_ = std::move(code);
      best_order_ = std::move(order);
    }
  }

  const LabeledGraph& g_;
  std::size_t n_;
  Coloring root_;
  std::vector<bool> twins_;
  std::vector<int> best_;
  std::vector<std::size_t> best_order_;
};

}  // namespace

CanonicalForm canonical_form(const LabeledGraph& g, std::size_t cap) {
  if (g.size() > cap) {
    throw PreconditionError("canonical_key: graph has " + std::to_string(g.size()) +
                            " vertices, cap is " + std::to_string(cap));
  }
  return CanonicalSearch(g).run();
}

std::string canonical_key(const LabeledGraph& g, std::size_t cap) {
  return canonical_form(g, cap).key;
}

}  // namespace cohere
