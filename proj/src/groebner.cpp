#include "cliff/groebner.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

namespace cliff::groebner {

using poly::GrevlexGreater;

ModPoly to_mod(const poly::MultiPoly& f, std::uint32_t p) {
  ModPoly out;
  for (const auto& [e, c] : poly::reduce_mod(f, p)) out.terms.emplace_back(e, static_cast<std::uint32_t>(c));
  return out;  // reduce_mod walks the grevlex map, so terms stay sorted
}

namespace {

std::uint64_t pack(const Exponent& e) {
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < poly::kVars; ++i) k |= static_cast<std::uint64_t>(e[i]) << (8 * i);
  return k;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1;
  std::uint64_t e = p - 2;
  a %= p;
  while (e > 0) {
    if (e & 1U) result = result * a % p;
    a = a * a % p;
    e >>= 1U;
  }
  return result;
}

// All monomials of one degree in the active variables, descending.
struct DegreeTable {
  std::vector<Exponent> monomials;
  std::unordered_map<std::uint64_t, std::uint32_t> index;
};

class Engine {
 public:
  Engine(std::uint32_t p, std::vector<int> active, const Options& options)
      : p_(p), active_(std::move(active)), options_(options), pure_(active_.size(), -1) {}

  Result run(const std::vector<ModPoly>& generators) {
    for (std::size_t g = 0; g < generators.size(); ++g) {
      if (generators[g].is_zero()) continue;
      validate(generators[g]);
      queue_.insert(Item{poly::total_degree(generators[g].leading()), generators[g].leading(), -1,
                         static_cast<int>(g)});
    }
    Result res;
    while (!queue_.empty()) {
      Item item = *queue_.begin();
      if (item.degree > options_.max_degree) break;
      queue_.erase(queue_.begin());
      res.max_degree_reached = std::max(res.max_degree_reached, item.degree);
      if (item.first >= 0) {
        pending_.erase({item.first, item.second});
        if (skip_pair(item.first, item.second, item.lcm)) continue;
      }
      ModPoly h = reduce(item, generators);
      ++res.reductions;
      if (h.is_zero()) continue;
      add(std::move(h));
      if (options_.stop_when_zero_dimensional && zero_dimensional()) break;
    }
    res.complete = queue_.empty();
    res.zero_dimensional = zero_dimensional();
    res.pure_power = pure_;
    res.basis = std::move(basis_);
    return res;
  }

 private:
  struct Item {
    int degree;
    Exponent lcm;
    int first;   // -1 for an input generator
    int second;  // generator index or second basis index
  };
  struct ItemLess {
    bool operator()(const Item& a, const Item& b) const {
      if (a.degree != b.degree) return a.degree < b.degree;
      if (a.lcm != b.lcm) return GrevlexGreater{}(b.lcm, a.lcm);
      if (a.first != b.first) return a.first < b.first;
      return a.second < b.second;
    }
  };

  void validate(const ModPoly& f) const {
    const int d = poly::total_degree(f.leading());
    for (const auto& [e, c] : f.terms) {
      if (poly::total_degree(e) != d) throw Error("buchberger: input is not homogeneous");
      for (std::size_t v = 0; v < poly::kVars; ++v)
        if (e[v] != 0 && std::find(active_.begin(), active_.end(), static_cast<int>(v)) == active_.end())
          throw Error("buchberger: input uses an inactive variable");
      if (c == 0 || c >= p_) throw Error("buchberger: coefficient out of range");
    }
  }

  const DegreeTable& table(int degree) {
    auto it = tables_.find(degree);
    if (it != tables_.end()) return it->second;
    DegreeTable t;
    Exponent e{};
    std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
      if (k + 1 == active_.size()) {
        e[active_[k]] = static_cast<std::uint16_t>(left);
        t.monomials.push_back(e);
        e[active_[k]] = 0;
        return;
      }
      for (int a = left; a >= 0; --a) {
        e[active_[k]] = static_cast<std::uint16_t>(a);
        rec(k + 1, left - a);
      }
      e[active_[k]] = 0;
    };
    if (degree > 255) throw Error("buchberger: degree exceeds exponent packing");
    rec(0, degree);
    std::sort(t.monomials.begin(), t.monomials.end(), GrevlexGreater{});
    for (std::uint32_t i = 0; i < t.monomials.size(); ++i) t.index.emplace(pack(t.monomials[i]), i);
    return tables_.emplace(degree, std::move(t)).first->second;
  }

  // dense[idx(shift * f)] += scale * f
  void accumulate(std::vector<std::uint64_t>& dense, const DegreeTable& t, const Exponent& shift,
                  const ModPoly& f, std::uint64_t scale) {
    for (const auto& [e, c] : f.terms) {
      std::uint32_t j = t.index.at(pack(poly::exponent_add(shift, e)));
      dense[j] = (dense[j] + scale * c) % p_;
    }
  }

  ModPoly reduce(const Item& item, const std::vector<ModPoly>& generators) {
    const DegreeTable& t = table(item.degree);
    std::vector<std::uint64_t> dense(t.monomials.size(), 0);
    if (item.first < 0) {
      accumulate(dense, t, Exponent{}, generators[item.second], 1);
    } else {
      const ModPoly& a = basis_[item.first];
      const ModPoly& b = basis_[item.second];
      accumulate(dense, t, poly::exponent_sub(item.lcm, a.leading()), a, 1);
      accumulate(dense, t, poly::exponent_sub(item.lcm, b.leading()), b, p_ - 1);
    }
    ModPoly out;
    for (std::size_t idx = 0; idx < dense.size(); ++idx) {
      std::uint64_t c = dense[idx];
      if (c == 0) continue;
      const Exponent& m = t.monomials[idx];
      int reducer = -1;
      for (std::size_t k = 0; k < basis_.size(); ++k) {
        if (poly::divides(basis_[k].leading(), m)) {
          reducer = static_cast<int>(k);
          break;
        }
      }
      if (reducer < 0) {
        out.terms.emplace_back(m, static_cast<std::uint32_t>(c));
        continue;
      }
      // basis elements are monic
      accumulate(dense, t, poly::exponent_sub(m, basis_[reducer].leading()), basis_[reducer], p_ - c);
    }
    if (!out.is_zero()) {
      std::uint64_t inv = inverse_mod(out.terms.front().second, p_);
      for (auto& [e, c] : out.terms) c = static_cast<std::uint32_t>(c * inv % p_);
    }
    return out;
  }

  bool skip_pair(int i, int j, const Exponent& lcm) const {
    const Exponent& a = basis_[i].leading();
    const Exponent& b = basis_[j].leading();
    bool coprime = true;
    for (std::size_t v = 0; v < poly::kVars; ++v)
      if (a[v] != 0 && b[v] != 0) coprime = false;
    if (coprime) return true;
    for (int k = 0; k < static_cast<int>(basis_.size()); ++k) {
      if (k == i || k == j) continue;
      if (!poly::divides(basis_[k].leading(), lcm)) continue;
      if (pending_.count(ordered(i, k)) || pending_.count(ordered(j, k))) continue;
      return true;
    }
    return false;
  }

  static std::pair<int, int> ordered(int a, int b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); }

  void add(ModPoly h) {
    const int n = static_cast<int>(basis_.size());
    const Exponent& lm = h.leading();
    for (std::size_t k = 0; k < active_.size(); ++k) {
      int deg = lm[active_[k]];
      if (deg > 0 && poly::total_degree(lm) == deg && pure_[k] < 0) pure_[k] = deg;
    }
    basis_.push_back(std::move(h));
    for (int i = 0; i < n; ++i) {
      Exponent l = poly::exponent_lcm(basis_[i].leading(), basis_[n].leading());
      queue_.insert(Item{poly::total_degree(l), l, i, n});
      pending_.insert({i, n});
    }
  }

  bool zero_dimensional() const {
    return std::all_of(pure_.begin(), pure_.end(), [](int d) { return d >= 0; });
  }

  std::uint64_t p_;
  std::vector<int> active_;
  Options options_;
  std::vector<int> pure_;
  std::vector<ModPoly> basis_;
  std::set<Item, ItemLess> queue_;
  std::set<std::pair<int, int>> pending_;
  std::map<int, DegreeTable> tables_;
};

}  // namespace

Result buchberger(const std::vector<ModPoly>& generators, std::uint32_t p, const std::vector<int>& active,
                  const Options& options) {
  if (p < 2) throw Error("buchberger: modulus must be prime");
  if (active.empty()) throw Error("buchberger: no active variables");
  return Engine(p, active, options).run(generators);
}

}  // namespace cliff::groebner
