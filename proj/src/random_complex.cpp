#include "hopf/random_complex.hpp"

namespace hopf {

namespace {

struct Basechange {
  IntMatrix forward;
  IntMatrix inverse;
};

Basechange random_unimodular(std::mt19937& rng, std::size_t n) {
  Basechange b{IntMatrix::identity(n), IntMatrix::identity(n)};
  if (n < 2) return b;
  const unsigned steps = 1 + rng() % 3;
  for (unsigned s = 0; s < steps; ++s) {
    const std::size_t a = rng() % n;
    std::size_t c = rng() % (n - 1);
    if (c >= a) ++c;
    const Integer k = (rng() % 2) ? 1 : -1;
    b.forward.add_row_multiple(a, c, k);
    b.inverse.add_col_multiple(c, a, -k);
  }
  return b;
}

bool entries_small(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (abs(m(i, j)) > 2) return false;
  return true;
}

}  // namespace

ChainComplex random_complex(std::mt19937& rng) {
  constexpr int kTop = 3;
  for (;;) {
    std::vector<std::size_t> ranks(kTop + 1, 0);
    // Pieces: (degree, multiplier); multiplier 0 means a lone Z.
    std::vector<std::pair<int, int>> pieces;
    const unsigned count = 1 + rng() % 4;
    for (unsigned k = 0; k < count; ++k) {
      const int type = static_cast<int>(rng() % 3);
      if (type == 0) {
        const int r = static_cast<int>(rng() % (kTop + 1));
        if (ranks[r] == 3) continue;
        ++ranks[r];
        pieces.emplace_back(r, 0);
      } else {
        const int r = 1 + static_cast<int>(rng() % kTop);
        if (ranks[r] == 3 || ranks[r - 1] == 3) continue;
        ++ranks[r];
        ++ranks[r - 1];
        pieces.emplace_back(r, type);
      }
    }
    // Block-diagonal differentials: assign basis slots piece by piece.
    std::vector<std::size_t> used(kTop + 1, 0);
    std::vector<IntMatrix> d;
    for (int r = 1; r <= kTop; ++r) d.emplace_back(ranks[r - 1], ranks[r]);
    for (const auto& [r, mult] : pieces) {
      if (mult == 0) {
        ++used[r];
        continue;
      }
      d[r - 1](used[r - 1], used[r]) = mult;
      ++used[r];
      ++used[r - 1];
    }
    std::vector<Basechange> p;
    for (int r = 0; r <= kTop; ++r) p.push_back(random_unimodular(rng, ranks[r]));
    bool ok = true;
    for (int r = 1; r <= kTop && ok; ++r) {
      d[r - 1] = p[r - 1].forward * d[r - 1] * p[r].inverse;
      ok = entries_small(d[r - 1]);
    }
    if (ok) return ChainComplex(RingSpec::integers(), 0, ranks, d);
  }
}

}  // namespace hopf
