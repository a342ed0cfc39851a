#include "hopf/triangulations.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_map>

namespace hopf::triangulations {

namespace {

std::vector<std::string> numbered(int n) {
  std::vector<std::string> labels;
  for (int v = 0; v < n; ++v) labels.push_back(std::to_string(v));
  return labels;
}

// Orients a closed pseudomanifold from the integral kernel of its top
// boundary map (facets are listed sorted).
SimplicialComplex oriented(std::vector<std::string> labels, std::vector<std::vector<int>> facets) {
  for (auto& f : facets) std::sort(f.begin(), f.end());
  const SimplicialComplex plain(labels, facets);
  const int n = plain.dimension();
  const IntMatrix kernel = kernel_basis(plain.boundary(n));
  if (kernel.cols() != 1) throw PreconditionError("complex is not an orientable pseudomanifold");
  std::vector<int> orientation;
  for (const auto& f : facets) {
    const Integer& c = kernel(plain.index_of(f), 0);
    if (c != 1 && c != -1) throw PreconditionError("complex is not an orientable pseudomanifold");
    orientation.push_back(c.get_si());
  }
  if (orientation.front() < 0)
    for (int& s : orientation) s = -s;
  return SimplicialComplex(std::move(labels), std::move(facets), std::move(orientation));
}

// Maximal simplices: the listed facets plus isolated vertices.
std::vector<Simplex> maximal_simplices(const SimplicialComplex& k) {
  std::vector<Simplex> out;
  std::vector<bool> used(k.num_vertices(), false);
  for (auto f : k.facets()) {
    std::sort(f.begin(), f.end());
    for (int v : f) used[v] = true;
    out.push_back(f);
  }
  for (std::size_t v = 0; v < used.size(); ++v)
    if (!used[v]) out.push_back({static_cast<int>(v)});
  return out;
}

std::vector<int> parse_signs(const std::string& label) {
  std::vector<int> v;
  for (char ch : label) v.push_back(ch == '+' ? 1 : ch == '-' ? -1 : 0);
  return v;
}

}  // namespace

SimplicialComplex point() { return SimplicialComplex({"0"}, {{0}}, std::vector<int>{1}); }

SimplicialComplex simplex(int n) {
  if (n < 0) throw InputError("simplex dimension must be >= 0");
  std::vector<int> all(n + 1);
  std::iota(all.begin(), all.end(), 0);
  return SimplicialComplex(numbered(n + 1), {all}, std::vector<int>{1});
}

SimplicialComplex sphere(int n) {
  if (n < 0) throw InputError("sphere dimension must be >= 0");
  std::vector<std::vector<int>> facets;
  std::vector<int> orientation;
  for (int i = 0; i <= n + 1; ++i) {
    std::vector<int> f;
    for (int v = 0; v <= n + 1; ++v)
      if (v != i) f.push_back(v);
    facets.push_back(f);
    orientation.push_back(i % 2 == 0 ? 1 : -1);
  }
  return SimplicialComplex(numbered(n + 2), std::move(facets), std::move(orientation));
}

SimplicialComplex torus7() {
  std::vector<std::vector<int>> facets;
  for (int i = 0; i < 7; ++i) {
    facets.push_back({i, (i + 1) % 7, (i + 3) % 7});
    facets.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return oriented(numbered(7), std::move(facets));
}

SimplicialComplex rp2() {
  const std::vector<std::vector<int>> one_based{{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 6, 2},
                                                {2, 3, 5}, {3, 4, 6}, {4, 5, 2}, {5, 6, 3}, {6, 2, 4}};
  std::vector<std::vector<int>> facets;
  for (const auto& f : one_based) {
    std::vector<int> g;
    for (int v : f) g.push_back(v - 1);
    std::sort(g.begin(), g.end());
    facets.push_back(g);
  }
  return SimplicialComplex({"1", "2", "3", "4", "5", "6"}, std::move(facets));
}

SimplicialComplex projective_space(int n) {
  if (n < 1 || n > 6) throw InputError("projective_space supports 1 <= n <= 6");
  const int m = n + 1;
  // Representatives: sign vectors whose first nonzero entry is +1.
  std::vector<std::vector<int>> reps;
  std::vector<int> v(m, -1);
  while (true) {
    auto first = std::find_if(v.begin(), v.end(), [](int x) { return x != 0; });
    if (first != v.end() && *first == 1) reps.push_back(v);
    int pos = m - 1;
    while (pos >= 0 && v[pos] == 1) v[pos--] = -1;
    if (pos < 0) break;
    ++v[pos];
  }
  auto label_of = [](const std::vector<int>& s) {
    std::string t;
    for (int x : s) t += x > 0 ? '+' : x < 0 ? '-' : '0';
    return t;
  };
  auto support = [](const std::vector<int>& s) { return std::count_if(s.begin(), s.end(), [](int x) { return x; }); };
  std::sort(reps.begin(), reps.end(), [&](const auto& a, const auto& b) {
    const auto sa = support(a), sb = support(b);
    return sa != sb ? sa < sb : label_of(a) < label_of(b);
  });
  std::vector<std::string> labels;
  std::unordered_map<std::string, int> index;
  for (const auto& r : reps) {
    index.emplace(label_of(r), static_cast<int>(labels.size()));
    labels.push_back(label_of(r));
  }
  auto normalized = [&](std::vector<int> s) {
    auto first = std::find_if(s.begin(), s.end(), [](int x) { return x != 0; });
    if (*first < 0)
      for (int& x : s) x = -x;
    return index.at(label_of(s));
  };
  // Maximal chains: a full sign vector with first entry + and an order in
  // which coordinates are switched on.
  std::set<std::vector<int>> facets;
  std::vector<int> perm(m);
  for (unsigned signs = 0; signs < (1U << n); ++signs) {
    std::vector<int> full(m, 1);
    for (int i = 1; i < m; ++i) full[i] = (signs >> (i - 1)) & 1U ? -1 : 1;
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<int> partial(m, 0), facet;
      for (int step = 0; step < m; ++step) {
        partial[perm[step]] = full[perm[step]];
        facet.push_back(normalized(partial));
      }
      std::sort(facet.begin(), facet.end());
      facets.insert(facet);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  std::size_t expected = std::size_t{1} << n;
  for (int i = 2; i <= m; ++i) expected *= static_cast<std::size_t>(i);
  if (facets.size() != expected)
    throw std::logic_error(fmt::format("RP^{} has {} facets, expected {}", n, facets.size(), expected));
  return SimplicialComplex(std::move(labels), std::vector<std::vector<int>>(facets.begin(), facets.end()));
}

Cochain projective_generator(const SimplicialComplex& rp) {
  Cochain x(rp.count(1));
  for (std::size_t e = 0; e < x.size(); ++e) {
    const Simplex& edge = rp.simplex(1, e);
    const auto u = parse_signs(rp.labels()[edge[0]]), v = parse_signs(rp.labels()[edge[1]]);
    bool agree = true;
    for (std::size_t i = 0; i < u.size(); ++i)
      if (u[i] != 0 && u[i] != v[i]) agree = false;
    x[e] = agree ? 0 : 1;
  }
  return x;
}

IntVector projective_cycle(const SimplicialComplex& rp, int q) {
  IntVector z(rp.count(q));
  for (std::size_t idx = 0; idx < z.size(); ++idx) {
    bool inside = true;
    for (int v : rp.simplex(q, idx)) {
      const auto s = parse_signs(rp.labels()[v]);
      for (std::size_t i = static_cast<std::size_t>(q) + 1; i < s.size(); ++i)
        if (s[i] != 0) inside = false;
    }
    z[idx] = inside ? 1 : 0;
  }
  return z;
}

SimplicialComplex product(const SimplicialComplex& k, const SimplicialComplex& l) {
  const int nl = static_cast<int>(l.num_vertices());
  std::vector<std::string> labels;
  for (const auto& a : k.labels())
    for (const auto& b : l.labels()) labels.push_back("(" + a + "," + b + ")");
  std::set<std::vector<int>> facets;
  for (const Simplex& s : maximal_simplices(k)) {
    for (const Simplex& t : maximal_simplices(l)) {
      const int p = static_cast<int>(s.size()) - 1, q = static_cast<int>(t.size()) - 1;
      for (unsigned path = 0; path < (1U << (p + q)); ++path) {
        if (std::popcount(path) != p) continue;
        int i = 0, j = 0;
        std::vector<int> facet{s[0] * nl + t[0]};
        for (int step = 0; step < p + q; ++step) {
          if (path & (1U << step)) ++i;
          else ++j;
          facet.push_back(s[i] * nl + t[j]);
        }
        facets.insert(facet);
      }
    }
  }
  return SimplicialComplex(std::move(labels), std::vector<std::vector<int>>(facets.begin(), facets.end()));
}

namespace {

Cochain pullback(const SimplicialComplex& prod, const SimplicialComplex& base, int r, const Cochain& c,
                 const std::function<int(int)>& project) {
  if (c.size() != base.count(r)) throw InputError("cochain length does not match the factor");
  Cochain out(prod.count(r));
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    Simplex image;
    for (int v : prod.simplex(r, idx)) image.push_back(project(v));
    if (std::adjacent_find(image.begin(), image.end()) != image.end()) continue;  // degenerate
    out[idx] = c[base.index_of(image)];
  }
  return out;
}

}  // namespace

Cochain pullback_first(const SimplicialComplex& prod, const SimplicialComplex& k, const SimplicialComplex& l, int r,
                       const Cochain& c) {
  const int nl = static_cast<int>(l.num_vertices());
  return pullback(prod, k, r, c, [nl](int v) { return v / nl; });
}

Cochain pullback_second(const SimplicialComplex& prod, const SimplicialComplex& /*k*/, const SimplicialComplex& l,
                        int r, const Cochain& c) {
  const int nl = static_cast<int>(l.num_vertices());
  return pullback(prod, l, r, c, [nl](int v) { return v % nl; });
}

SimplicialComplex suspension(const SimplicialComplex& k) {
  std::vector<std::string> labels = k.labels();
  const int north = static_cast<int>(labels.size()), south = north + 1;
  labels.push_back("north");
  labels.push_back("south");
  std::vector<std::vector<int>> facets;
  std::vector<int> orientation;
  const auto maximal = maximal_simplices(k);
  for (std::size_t f = 0; f < maximal.size(); ++f) {
    // Keep the listed vertex order of oriented facets so their signs carry over.
    std::vector<int> base = f < k.facets().size() ? k.facets()[f] : maximal[f];
    const int sign = k.orientation() && f < k.facets().size() ? (*k.orientation())[f] : 1;
    auto with = [&](int apex) {
      auto g = base;
      g.push_back(apex);
      return g;
    };
    facets.push_back(with(north));
    orientation.push_back(sign);
    facets.push_back(with(south));
    orientation.push_back(-sign);
  }
  if (!k.orientation()) return SimplicialComplex(std::move(labels), std::move(facets));
  return SimplicialComplex(std::move(labels), std::move(facets), std::move(orientation));
}

Cochain suspend_cochain(const SimplicialComplex& k, const SimplicialComplex& sk, int r, const Cochain& c) {
  if (c.size() != k.count(r)) throw InputError("cochain length does not match the complex");
  const int north = static_cast<int>(k.num_vertices());
  Cochain out(sk.count(r + 1));
  for (std::size_t idx = 0; idx < c.size(); ++idx) {
    Simplex s = k.simplex(r, idx);
    s.push_back(north);
    out[sk.index_of(s)] = c[idx];
  }
  return out;
}

IntVector suspend_chain(const SimplicialComplex& k, const SimplicialComplex& sk, int r, const IntVector& z) {
  if (z.size() != k.count(r)) throw InputError("chain length does not match the complex");
  const int north = static_cast<int>(k.num_vertices());
  IntVector out(sk.count(r + 1));
  for (std::size_t idx = 0; idx < z.size(); ++idx) {
    Simplex s = k.simplex(r, idx);
    s.push_back(north);
    out[sk.index_of(s)] += z[idx];
    s.back() = north + 1;
    out[sk.index_of(s)] -= z[idx];
  }
  return out;
}

SimplicialComplex disjoint_union(const SimplicialComplex& k, const SimplicialComplex& l) {
  std::vector<std::string> labels = k.labels();
  for (const auto& s : l.labels()) labels.push_back(s + "'");
  const int shift = static_cast<int>(k.num_vertices());
  std::vector<std::vector<int>> facets = k.facets();
  for (auto f : l.facets()) {
    for (int& v : f) v += shift;
    facets.push_back(f);
  }
  if (k.orientation() && l.orientation()) {
    std::vector<int> orientation = *k.orientation();
    orientation.insert(orientation.end(), l.orientation()->begin(), l.orientation()->end());
    return SimplicialComplex(std::move(labels), std::move(facets), std::move(orientation));
  }
  return SimplicialComplex(std::move(labels), std::move(facets));
}

Cochain restrict_cochain(const SimplicialComplex& k, const SimplicialComplex& l, int r, const Cochain& c) {
  if (c.size() != k.count(r)) throw InputError("cochain length does not match the complex");
  std::unordered_map<std::string, int> where;
  for (std::size_t v = 0; v < k.num_vertices(); ++v) where.emplace(k.labels()[v], static_cast<int>(v));
  Cochain out(l.count(r));
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    Simplex s;
    for (int v : l.simplex(r, idx)) {
      auto it = where.find(l.labels()[v]);
      if (it == where.end()) throw InputError(fmt::format("vertex {} is not in the ambient complex", l.labels()[v]));
      s.push_back(it->second);
    }
    if (!std::is_sorted(s.begin(), s.end()))
      throw InputError("subcomplex vertex order is not compatible with the ambient complex");
    out[idx] = c[k.index_of(s)];
  }
  return out;
}

}  // namespace hopf::triangulations
