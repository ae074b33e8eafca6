#include "br/rational.hpp"

#include <algorithm>
#include <cstdlib>

namespace br {

Rat rat_pow(const Rat& q, long e) {
  if (e == 0) return Rat(1);
  if (q == 0) {
    if (e < 0) throw Error("rat_pow: zero base with negative exponent");
    return Rat(0);
  }
  Rat base = e > 0 ? q : Rat(1) / q;
  unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
  Rat acc(1);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

std::string rat_str(const Rat& q) { return q.get_str(); }

namespace {

// Pollard rho with Brent's cycle detection; n odd composite, no small factors.
Int pollard_rho(const Int& n) {
  if (n % 2 == 0) return Int(2);
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0x9e3779b97f4a7c15UL);
  while (true) {
    Int y = rng.get_z_range(n - 3) + 2;
    Int c = rng.get_z_range(n - 2) + 1;
    Int x = y, d(1), q(1);
    int r = 1;
    Int ys;
    while (d == 1) {
      x = y;
      for (int i = 0; i < r; ++i) y = (y * y + c) % n;
      int k = 0;
      while (k < r && d == 1) {
        ys = y;
        int lim = std::min(128, r - k);
        for (int i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += lim;
      }
      r *= 2;
    }
    if (d == n) {
      d = 1;
      while (d == 1) {
        ys = (ys * ys + c) % n;
        Int diff = abs(x - ys);
        mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      }
    }
    if (d != n) return d;
  }
}

void factor_into(Int n, std::map<Int, long>& out) {
  if (n <= 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
    out[n] += 1;
    return;
  }
  Int d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::map<Int, long> factor_integer(Int n) {
  std::map<Int, long> out;
  if (n < 0) n = -n;
  if (n <= 1) return out;
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
    while (n % p == 0) {
      out[Int(p)] += 1;
      n /= p;
    }
  }
  Int p(41);
  while (n > 1 && p * p <= n && p < 100000) {
    while (n % p == 0) {
      out[p] += 1;
      n /= p;
    }
    p += 2;
  }
  factor_into(n, out);
  return out;
}

Factorization factor_rational(const Rat& q) {
  if (q == 0) throw Error("factor_rational: zero");
  Factorization f;
  f.sign = sgn(q) < 0 ? -1 : 1;
  for (auto& [p, e] : factor_integer(Int(abs(q.get_num())))) f.primes[p] += e;
  for (auto& [p, e] : factor_integer(Int(q.get_den()))) f.primes[p] -= e;
  for (auto it = f.primes.begin(); it != f.primes.end();)
    it = it->second == 0 ? f.primes.erase(it) : std::next(it);
  return f;
}

long multiplicative_order(const Rat& q) {
  if (q == 1) return 1;
  if (q == -1) return 2;
  return 0;
}

std::vector<std::vector<Int>> integer_kernel(
    const std::vector<std::vector<Int>>& rows, std::size_t cols) {
  // Column-style reduction: unimodular column operations tracked in U.
  std::vector<std::vector<Int>> a = rows;
  for (auto& r : a) r.resize(cols, Int(0));
  std::vector<std::vector<Int>> u(cols, std::vector<Int>(cols, Int(0)));
  for (std::size_t j = 0; j < cols; ++j) u[j][j] = 1;

  auto col_axpy = [&](std::size_t dst, std::size_t src, const Int& q) {
    for (auto& r : a) r[dst] -= q * r[src];
    for (std::size_t k = 0; k < cols; ++k) u[k][dst] -= q * u[k][src];
  };
  auto col_swap = [&](std::size_t j1, std::size_t j2) {
    for (auto& r : a) std::swap(r[j1], r[j2]);
    for (std::size_t k = 0; k < cols; ++k) std::swap(u[k][j1], u[k][j2]);
  };

  std::size_t pivot = 0;
  for (std::size_t row = 0; row < a.size() && pivot < cols; ++row) {
    while (true) {
      // Smallest nonzero |entry| in this row at columns >= pivot.
      std::size_t best = cols;
      for (std::size_t j = pivot; j < cols; ++j) {
        if (a[row][j] == 0) continue;
        if (best == cols || abs(a[row][j]) < abs(a[row][best])) best = j;
      }
      if (best == cols) break;
      bool others = false;
      for (std::size_t j = pivot; j < cols; ++j) {
        if (j == best || a[row][j] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), a[row][j].get_mpz_t(),
                   a[row][best].get_mpz_t());
        col_axpy(j, best, q);
        if (a[row][j] != 0) others = true;
      }
      if (!others) {
        col_swap(pivot, best);
        ++pivot;
        break;
      }
    }
  }

  std::vector<std::vector<Int>> basis;
  for (std::size_t j = pivot; j < cols; ++j) {
    std::vector<Int> v(cols);
    for (std::size_t k = 0; k < cols; ++k) v[k] = u[k][j];
    basis.push_back(std::move(v));
  }
  return basis;
}

LinearSolution solve_linear(const std::vector<std::vector<Rat>>& rows,
                            const std::vector<Rat>& rhs) {
  std::size_t m = rows.size();
  std::size_t n = m == 0 ? 0 : rows[0].size();
  std::vector<std::vector<Rat>> aug(m, std::vector<Rat>(n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = rows[i][j];
    aug[i][n] = rhs[i];
  }
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < n && rank < m; ++col) {
    std::size_t piv = m;
    for (std::size_t i = rank; i < m; ++i)
      if (aug[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv == m) continue;
    std::swap(aug[rank], aug[piv]);
    Rat inv = Rat(1) / aug[rank][col];
    for (auto& v : aug[rank]) v *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == rank || aug[i][col] == 0) continue;
      Rat f = aug[i][col];
      for (std::size_t j = col; j <= n; ++j) aug[i][j] -= f * aug[rank][j];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  LinearSolution sol;
  for (std::size_t i = rank; i < m; ++i)
    if (aug[i][n] != 0) {
      sol.outcome = SolveOutcome::NoSolution;
      return sol;
    }
  if (rank < n) {
    sol.outcome = SolveOutcome::Underdetermined;
    return sol;
  }
  sol.outcome = SolveOutcome::Unique;
  sol.x.assign(n, Rat(0));
  for (std::size_t i = 0; i < rank; ++i) sol.x[pivot_col[i]] = aug[i][n];
  return sol;
}

namespace {

std::vector<Int> divisors_of(const Int& n, std::size_t cap, bool& overflow) {
  std::vector<Int> divs{Int(1)};
  for (auto& [p, e] : factor_integer(n)) {
    std::size_t sz = divs.size();
    Int pk(1);
    for (long k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pk);
      if (divs.size() > cap) {
        overflow = true;
        return divs;
      }
    }
  }
  return divs;
}

}  // namespace

RationalRoots rational_roots(const std::vector<Rat>& coeffs) {
  RationalRoots out;
  std::vector<Rat> c = coeffs;
  while (!c.empty() && c.back() == 0) c.pop_back();
  if (c.empty()) throw Error("rational_roots: zero polynomial");
  long zero_mult = 0;
  std::size_t lo = 0;
  while (lo < c.size() && c[lo] == 0) {
    ++lo;
    ++zero_mult;
  }
  c.erase(c.begin(), c.begin() + lo);
  if (zero_mult > 0) out.roots.emplace_back(Rat(0), zero_mult);
  if (c.size() <= 1) return out;

  // Clear denominators to a primitive integer polynomial.
  Int den(1);
  for (auto& q : c) {
    Int d = q.get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    den = den / g * d;
  }
  std::vector<Int> ic(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    Rat v = c[i] * Rat(den);
    ic[i] = v.get_num();
  }

  auto eval_at = [&](const std::vector<Int>& poly, const Rat& x) {
    Rat acc(0);
    for (std::size_t i = poly.size(); i-- > 0;) acc = acc * x + Rat(poly[i]);
    return acc;
  };
  // Exact deflation by (x - r); poly is divisible by construction.
  auto deflate = [&](std::vector<Int>& poly, const Rat& r) {
    std::vector<Rat> q(poly.size() - 1);
    Rat carry(0);
    for (std::size_t i = poly.size(); i-- > 1;) {
      q[i - 1] = Rat(poly[i]) + carry;
      carry = q[i - 1] * r;
    }
    Int dd(1);
    for (auto& v : q) {
      Int g;
      Int d = v.get_den();
      mpz_gcd(g.get_mpz_t(), dd.get_mpz_t(), d.get_mpz_t());
      dd = dd / g * d;
    }
    std::vector<Int> iq(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) iq[i] = Rat(q[i] * Rat(dd)).get_num();
    poly = std::move(iq);
  };

  bool overflow = false;
  std::vector<Int> num_divs = divisors_of(abs(ic.front()), 4096, overflow);
  std::vector<Int> den_divs = divisors_of(abs(ic.back()), 4096, overflow);
  if (overflow) {
    out.fully_split = false;
    return out;
  }
  std::vector<Rat> candidates;
  for (auto& p : num_divs)
    for (auto& q : den_divs) {
      Rat r(p, q);
      r.canonicalize();
      candidates.push_back(r);
      candidates.push_back(-r);
    }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());

  for (const Rat& r : candidates) {
    if (ic.size() <= 1) break;
    long mult = 0;
    while (ic.size() > 1 && eval_at(ic, r) == 0) {
      deflate(ic, r);
      ++mult;
    }
    if (mult > 0) out.roots.emplace_back(r, mult);
  }
  if (ic.size() > 1) out.fully_split = false;
  std::sort(out.roots.begin(), out.roots.end(),
            [](auto& a, auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace br
