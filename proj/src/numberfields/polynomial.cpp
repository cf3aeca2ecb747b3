#include <algorithm>
#include <cstdint>
#include <utility>

#include "covcert/error.hpp"
#include "covcert/numberfields.hpp"

namespace covcert::numberfields {

namespace {

int sign(const Rational& r) { return sgn(r); }

// Sign variations of the Sturm chain at x.
int variations(const std::vector<Poly>& chain, const Rational& x) {
  int count = 0;
  int last = 0;
  for (const auto& g : chain) {
    int s = sign(evaluate(g, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

std::vector<Poly> sturm_chain(const Poly& f) {
  std::vector<Poly> chain{trim(f), derivative(f)};
  while (degree(chain.back()) > 0) {
    Poly r = poly_mod(chain[chain.size() - 2], chain.back());
    if (degree(r) < 0) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  return chain;
}

Rational cauchy_bound(const Poly& f) {
  int n = degree(f);
  Rational m = 0;
  for (int i = 0; i < n; ++i) m = std::max(m, Rational(abs(f[i] / f[n])));
  return m + 1;
}

// ---- arithmetic over F_p, coefficients in [0, p)

using Fp = std::vector<std::int64_t>;

void fp_trim(Fp& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::int64_t fp_inv(std::int64_t a, std::int64_t p) {
  std::int64_t r = 1, e = p - 2;
  a %= p;
  while (e > 0) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

Fp fp_mod(Fp a, const Fp& b, std::int64_t p) {
  fp_trim(a);
  std::int64_t inv = fp_inv(b.back(), p);
  int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= db) {
    std::int64_t c = a.back() * inv % p;
    int shift = static_cast<int>(a.size()) - 1 - db;
    for (int i = 0; i <= db; ++i) {
      a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
    }
    fp_trim(a);
  }
  return a;
}

Fp fp_div(Fp a, const Fp& b, std::int64_t p) {
  fp_trim(a);
  std::int64_t inv = fp_inv(b.back(), p);
  int db = static_cast<int>(b.size()) - 1;
  int dq = static_cast<int>(a.size()) - 1 - db;
  if (dq < 0) return {};
  Fp q(dq + 1, 0);
  while (static_cast<int>(a.size()) - 1 >= db) {
    std::int64_t c = a.back() * inv % p;
    int shift = static_cast<int>(a.size()) - 1 - db;
    q[shift] = c;
    for (int i = 0; i <= db; ++i) {
      a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
    }
    fp_trim(a);
  }
  return q;
}

Fp fp_mulmod(const Fp& a, const Fp& b, const Fp& m, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Fp c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  return fp_mod(std::move(c), m, p);
}

Fp fp_powmod(Fp base, long e, const Fp& m, std::int64_t p) {
  Fp r{1};
  base = fp_mod(base, m, p);
  while (e > 0) {
    if (e & 1) r = fp_mulmod(r, base, m, p);
    base = fp_mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

Fp fp_gcd(Fp a, Fp b, std::int64_t p) {
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    Fp r = fp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    std::int64_t inv = fp_inv(a.back(), p);
    for (auto& c : a) c = c * inv % p;
  }
  return a;
}

Fp reduce(const Poly& f, long p) {
  Fp out;
  for (const auto& c : f) {
    if (c.get_den() != 1) throw Error(Errc::InvalidArgument, "polynomial is not integral");
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), c.get_num_mpz_t(), static_cast<unsigned long>(p));
    out.push_back(r.get_si());
  }
  fp_trim(out);
  return out;
}

// Distinct-degree factorization of a squarefree monic polynomial.
std::vector<ModFactor> ddf(Fp f, std::int64_t p) {
  std::vector<ModFactor> out;
  Fp x{0, 1};
  Fp h = x;
  for (int k = 1; 2 * k <= static_cast<int>(f.size()) - 1; ++k) {
    h = fp_powmod(h, p, f, p);
    Fp hx = h;
    hx.resize(std::max<std::size_t>(hx.size(), 2), 0);
    hx[1] = (hx[1] - 1 + p) % p;
    fp_trim(hx);
    Fp g = fp_gcd(f, hx, p);
    int dg = static_cast<int>(g.size()) - 1;
    if (dg > 0) {
      for (int i = 0; i < dg / k; ++i) out.push_back({k, 1});
      f = fp_div(f, g, p);
      h = fp_mod(h, f, p);
    }
  }
  if (f.size() > 1) out.push_back({static_cast<int>(f.size()) - 1, 1});
  return out;
}

// Trial division by every monic polynomial of increasing degree; any divisor
// found is irreducible because smaller factors were already removed.
std::vector<ModFactor> factor_bruteforce(Fp f, std::int64_t p) {
  std::vector<ModFactor> out;
  int n = static_cast<int>(f.size()) - 1;
  for (int k = 1; 2 * k <= n; ++k) {
    std::int64_t count = 1;
    for (int i = 0; i < k; ++i) {
      count *= p;
      if (count > 20000000) throw Error(Errc::UnsupportedArgument, "residue field too large for trial division");
    }
    for (std::int64_t idx = 0; idx < count; ++idx) {
      Fp g(k + 1, 0);
      g[k] = 1;
      std::int64_t v = idx;
      for (int i = 0; i < k; ++i) {
        g[i] = v % p;
        v /= p;
      }
      int mult = 0;
      while (static_cast<int>(f.size()) - 1 >= k && fp_mod(f, g, p).empty()) {
        f = fp_div(f, g, p);
        ++mult;
      }
      if (mult > 0) out.push_back({k, mult});
      n = static_cast<int>(f.size()) - 1;
      if (2 * k > n) break;
    }
  }
  if (f.size() > 1) out.push_back({static_cast<int>(f.size()) - 1, 1});
  return out;
}

}  // namespace

int degree(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
    if (f[i] != 0) return i;
  }
  return -1;
}

Poly trim(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

Poly derivative(const Poly& f) {
  Poly d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * static_cast<long>(i));
  return trim(d);
}

Rational evaluate(const Poly& f, const Rational& x) {
  Rational r = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) r = r * x + *it;
  return r;
}

Interval evaluate(const Poly& f, const Interval& x) {
  Interval r(0);
  for (auto it = f.rbegin(); it != f.rend(); ++it) r = r * x + Interval(*it);
  return r;
}

Poly poly_mod(const Poly& f, const Poly& g) {
  int dg = degree(g);
  if (dg < 0) throw Error(Errc::DivisionByIntervalContainingZero, "polynomial division by zero");
  Poly r = trim(f);
  while (degree(r) >= dg) {
    int shift = degree(r) - dg;
    Rational c = r.back() / g[dg];
    for (int i = 0; i <= dg; ++i) r[shift + i] -= c * g[i];
    r = trim(r);
  }
  return r;
}

Rational resultant(const Poly& f0, const Poly& g0) {
  Poly f = trim(f0), g = trim(g0);
  int m = degree(f), n = degree(g);
  if (m < 0 || n < 0) return 0;
  if (m == 0) return rigor::pow(f[0], n);
  if (n == 0) return rigor::pow(g[0], m);
  int size = m + n;
  std::vector<std::vector<Rational>> a(size, std::vector<Rational>(size, 0));
  // Rows hold coefficients from the leading term down.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= m; ++j) a[i][i + j] = f[m - j];
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= n; ++j) a[n + i][i + j] = g[n - j];
  }
  Rational det = 1;
  for (int col = 0; col < size; ++col) {
    int pivot = col;
    while (pivot < size && a[pivot][col] == 0) ++pivot;
    if (pivot == size) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (int r = col + 1; r < size; ++r) {
      if (a[r][col] == 0) continue;
      Rational factor = a[r][col] / a[col][col];
      for (int c = col; c < size; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  return det;
}

Rational discriminant(const Poly& f0) {
  Poly f = trim(f0);
  int n = degree(f);
  if (n < 1) throw Error(Errc::InvalidArgument, "discriminant of a constant");
  if (n == 1) return 1;
  Rational r = resultant(f, derivative(f)) / f[n];
  return (n * (n - 1) / 2) % 2 == 0 ? r : Rational(-r);
}

int count_real_roots(const Poly& f) {
  auto chain = sturm_chain(f);
  Rational b = cauchy_bound(f);
  return variations(chain, -b) - variations(chain, b);
}

std::vector<Interval> real_roots(const Poly& f0, long bits) {
  Poly f = trim(f0);
  if (degree(f) < 1) return {};
  auto chain = sturm_chain(f);
  if (degree(chain.back()) > 0) throw Error(Errc::InvalidArgument, "real_roots needs a squarefree polynomial");
  Rational b = cauchy_bound(f);
  Rational target = 1;
  mpq_div_2exp(target.get_mpq_t(), target.get_mpq_t(), static_cast<unsigned long>(bits));

  // Each stack entry is a half-open (lo, hi] holding `count` roots.
  std::vector<std::pair<Rational, Rational>> isolated;
  std::vector<std::pair<Rational, Rational>> stack{{-b, b}};
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    int count = variations(chain, lo) - variations(chain, hi);
    if (count == 0) continue;
    if (count == 1) {
      isolated.emplace_back(lo, hi);
      continue;
    }
    Rational mid = (lo + hi) / 2;
    stack.emplace_back(lo, mid);
    stack.emplace_back(mid, hi);
  }
  std::sort(isolated.begin(), isolated.end());

  std::vector<Interval> roots;
  for (auto [lo, hi] : isolated) {
    if (evaluate(f, hi) == 0) {
      roots.emplace_back(hi);
      continue;
    }
    // Bisect on sign; the root is in (lo, hi] and f(hi) != 0.
    int s_hi = sign(evaluate(f, hi));
    bool exact = false;
    while (hi - lo > target) {
      Rational mid = (lo + hi) / 2;
      int s = sign(evaluate(f, mid));
      if (s == 0) {
        roots.emplace_back(mid);
        exact = true;
        break;
      }
      if (s == s_hi) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    if (!exact) roots.emplace_back(lo, hi);
  }
  return roots;
}

std::vector<ModFactor> factor_mod_p(const Poly& f, long p) {
  if (!is_prime(p)) throw Error(Errc::InvalidArgument, "factor_mod_p needs a prime");
  if (p > 3037000499L) throw Error(Errc::UnsupportedArgument, "prime too large");
  Poly g = trim(f);
  if (degree(g) < 1 || g.back() != 1) throw Error(Errc::InvalidArgument, "factor_mod_p needs a monic polynomial");
  Fp fp = reduce(g, p);
  Fp dfp = reduce(derivative(g), p);
  bool squarefree = !dfp.empty() && fp_gcd(fp, dfp, p).size() == 1;
  auto out = squarefree ? ddf(fp, p) : factor_bruteforce(fp, p);
  std::sort(out.begin(), out.end(), [](const ModFactor& a, const ModFactor& b) {
    return a.degree != b.degree ? a.degree < b.degree : a.multiplicity < b.multiplicity;
  });
  return out;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace covcert::numberfields
