#include "oracle.hpp"

#include <map>
#include <unordered_map>

namespace oracle {

namespace {

using u64 = std::uint64_t;
constexpr u64 P = 2147483647;

u64 mulmod(u64 a, u64 b) { return a * b % P; }

u64 powmod(u64 a, u64 e) {
  u64 r = 1;
  for (; e; e >>= 1, a = mulmod(a, a))
    if (e & 1) r = mulmod(r, a);
  return r;
}

u64 reduce(const icis::Rational& q) {
  mpz_class n = q.get_num() % mpz_class(static_cast<unsigned long>(P));
  mpz_class d = q.get_den() % mpz_class(static_cast<unsigned long>(P));
  if (n < 0) n += static_cast<unsigned long>(P);
  return mulmod(n.get_ui(), powmod(d.get_ui(), P - 2));
}

using Exps = std::vector<int>;

void monomials_below(int nvars, int D, std::vector<Exps>& out) {
  Exps e(nvars, 0);
  auto rec = [&](auto&& self, int v, int left) -> void {
    if (v == nvars) {
      out.push_back(e);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[v] = k;
      self(self, v + 1, left - k);
    }
    e[v] = 0;
  };
  rec(rec, 0, D - 1);
}

// Rank of span{ m * g mod m^D } over Z/p.
std::optional<int> quotient_dim(const std::vector<icis::Polynomial>& gens, int nvars, int D, int max_cols) {
  std::vector<Exps> monos;
  monomials_below(nvars, D, monos);
  if (static_cast<int>(monos.size()) > max_cols) return std::nullopt;
  std::map<Exps, int> index;
  for (std::size_t i = 0; i < monos.size(); ++i) index[monos[i]] = static_cast<int>(i);

  // Sparse rows, pivots keyed by their first column.
  std::unordered_map<int, std::map<int, u64>> pivots;
  int rank = 0;
  for (const auto& g : gens) {
    std::vector<std::pair<Exps, u64>> terms;
    for (const auto& t : g.terms()) {
      Exps e(nvars);
      for (int v = 0; v < nvars; ++v) e[v] = t.mono[v];
      terms.push_back({e, reduce(t.coeff)});
    }
    for (const auto& m : monos) {
      std::map<int, u64> row;
      for (const auto& [e, c] : terms) {
        Exps s(nvars);
        int deg = 0;
        for (int v = 0; v < nvars; ++v) deg += (s[v] = e[v] + m[v]);
        if (deg >= D) continue;
        u64& slot = row[index[s]];
        slot = (slot + c) % P;
      }
      for (auto it = row.begin(); it != row.end();) it = it->second ? std::next(it) : row.erase(it);
      while (!row.empty()) {
        auto lead = row.begin();
        auto p = pivots.find(lead->first);
        if (p == pivots.end()) {
          u64 inv = powmod(lead->second, P - 2);
          for (auto& [c, v] : row) v = mulmod(v, inv);
          pivots.emplace(lead->first, std::move(row));
          ++rank;
          break;
        }
        u64 f = lead->second;
        for (const auto& [c, v] : p->second) {
          u64& slot = row[c];
          slot = (slot + P - mulmod(f, v)) % P;
          if (slot == 0) row.erase(c);
        }
      }
    }
  }
  return static_cast<int>(monos.size()) - rank;
}

}  // namespace

std::optional<int> local_colength(const std::vector<icis::Polynomial>& gens, int nvars, int max_cols) {
  std::optional<int> prev;
  for (int D = 1;; ++D) {
    auto d = quotient_dim(gens, nvars, D, max_cols);
    if (!d) return std::nullopt;
    if (prev && *prev == *d) return d;
    prev = d;
  }
}

}  // namespace oracle
