#pragma once

#include "bethe/errors.hpp"

namespace bethe {

template <class Elem>
std::vector<Elem> products_of_degree(const std::vector<Graded<Elem>>& gens, int d,
                                     const std::function<Elem(const Elem&, const Elem&)>& mul, const Elem& one) {
  for (const auto& g : gens) {
    if (g.degree <= 0) throw DomainError("generators must have positive degree");
  }
  std::vector<Elem> out;
  if (d < 0) return out;
  std::function<void(std::size_t, int, const Elem&)> rec = [&](std::size_t from, int remaining, const Elem& acc) {
    if (remaining == 0) {
      out.push_back(acc);
      return;
    }
    for (std::size_t i = from; i < gens.size(); ++i) {
      if (gens[i].degree > remaining) continue;
      rec(i, remaining - gens[i].degree, mul(acc, gens[i].value));
    }
  };
  rec(0, d, one);
  return out;
}

template <class Elem>
std::vector<Elem> product_elements(const std::vector<std::vector<Elem>>& a, const std::vector<std::vector<Elem>>& b, int d,
                                   const std::function<Elem(const Elem&, const Elem&)>& mul) {
  std::vector<Elem> out;
  for (int i = 0; i <= d; ++i) {
    if (i >= static_cast<int>(a.size()) || d - i >= static_cast<int>(b.size())) continue;
    for (const auto& x : a[static_cast<std::size_t>(i)]) {
      for (const auto& y : b[static_cast<std::size_t>(d - i)]) out.push_back(mul(x, y));
    }
  }
  return out;
}

}  // namespace bethe
