#include "pmap/graph_numeric.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "pmap/grammar.hpp"
#include "pmap/online.hpp"

namespace pmap {

namespace {

using Vec = std::vector<long double>;

struct F01Float {
  int max_x = -1;
  std::vector<Vec> f;  // F01 = F01bar / 2, [a][b]
  std::vector<int> top;  // largest b with f[a][b] != 0
};

const F01Float& f01_float(int max_x) {
  static std::mutex mu;
  static F01Float cache;
  std::lock_guard lock(mu);
  if (cache.max_x < max_x) {
    auto tab = f01_bar_table(max_x, 3 * max_x + 1);
    cache.max_x = max_x;
    cache.f.assign(max_x + 1, Vec());
    cache.top.assign(max_x + 1, -1);
    for (int a = 0; a <= max_x; ++a) {
      for (size_t b = 0; b < tab[a].size(); ++b) {
        cache.f[a].push_back(to_long_double(Rational(tab[a][b]) / 2));
        if (sgn(tab[a][b]) != 0) cache.top[a] = static_cast<int>(b);
      }
    }
  }
  return cache;
}

Vec mul(const Vec& a, const Vec& b, size_t n) { return poly::mul(a, b, n); }

}  // namespace

void gauss_legendre01(int m, Vec& nodes, Vec& weights) {
  nodes.assign(m, 0);
  weights.assign(m, 0);
  for (int i = 0; i < m; ++i) {
    long double x = std::cos(std::numbers::pi_v<long double> * (i + 0.75L) / (m + 0.5L));
    long double dp = 0;
    for (int it = 0; it < 100; ++it) {
      long double p0 = 1, p1 = x;
      for (int k = 2; k <= m; ++k) {
        long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = m * (x * p1 - p0) / (x * x - 1);
      long double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-19L) break;
    }
    nodes[i] = (1 - x) / 2;
    weights[i] = 1 / ((1 - x * x) * dp * dp);
  }
}

Vec network_series_at(long double y, int order) {
  if (order < 0) throw std::invalid_argument("negative order");
  const auto& F = f01_float(order);
  Vec k{y};
  Vec n, o;
  for (int i = 1; i <= order; ++i) {
    size_t len = static_cast<size_t>(i) + 1;
    k.resize(len, 0);
    // N = K/(1 - xK), positive coefficients
    Vec xk(len, 0);
    for (size_t j = 1; j < len; ++j) xk[j] = k[j - 1];
    Vec den(len, 0);
    den[0] = 1;
    for (size_t j = 1; j < len; ++j) den[j] = -xk[j];
    n = mul(k, poly::inverse(den, len), len);
    // O = sum_a x^a sum_b f_ab N^b
    int bmax = 0;
    for (int a = 0; a <= i && a <= F.max_x; ++a) bmax = std::max(bmax, F.top[a]);
    std::vector<Vec> pw{Vec(len, 0)};
    pw[0][0] = 1;
    for (int b = 1; b <= bmax; ++b) pw.push_back(mul(pw.back(), n, len));
    o.assign(len, 0);
    for (int a = 0; a <= i && a <= F.max_x; ++a)
      for (int b = 0; b <= F.top[a]; ++b) {
        long double c = F.f[a][b];
        if (c == 0) continue;
        for (size_t j = 0; j + a < len; ++j) o[j + a] += c * pw[b][j];
      }
    // Z = O + (N - K); K = y e^Z + O + (e^Z - 1 - Z)
    Vec z(len);
    for (size_t j = 0; j < len; ++j) z[j] = o[j] + (n[j] - k[j]);
    Vec ez = poly::exp(z, len);
    Vec next(len);
    for (size_t j = 0; j < len; ++j) next[j] = y * ez[j] + o[j] + (ez[j] - z[j]);
    next[0] -= 1;
    k = std::move(next);
  }
  k.resize(order + 1, 0);
  size_t len = k.size();
  Vec den(len, 0);
  den[0] = 1;
  for (size_t j = 1; j < len; ++j) den[j] = -k[j - 1];
  return mul(k, poly::inverse(den, len), len);
}

GraphNumeric graph_numeric(int order) {
  if (order < 1) throw std::invalid_argument("order must be at least 1");
  GraphNumeric g;
  g.order = order;
  int K = order;
  // B needs N to x-order K-2; N(x,1) itself to K
  g.N1 = network_series_at(1.0L, K);

  int m = (3 * K) / 2 + 3;
  Vec nodes, weights;
  gauss_legendre01(m, nodes, weights);
  g.B.assign(K + 1, 0);
  int kn = std::max(K - 2, 0);
  for (int i = 0; i < m; ++i) {
    long double y = nodes[i];
    Vec nn = network_series_at(y, kn);
    for (int a = 0; a <= kn; ++a) {
      long double num = nn[a] + (a == 0 ? 1 : 0);
      g.B[a + 2] += weights[i] * num / (2 * (1 + y));
    }
  }
  g.Bx.assign(K, 0);
  for (int a = 0; a < K; ++a) g.Bx[a] = (a + 1) * g.B[a + 1];
  g.By.assign(K + 1, 0);
  for (int a = 0; a + 2 <= K; ++a) g.By[a + 2] = (g.N1[a] + (a == 0 ? 1 : 0)) / 4;

  // A = x exp(Bx(A)), progressive
  size_t len = static_cast<size_t>(K);
  Vec a_ser{0};
  for (size_t i = 1; i < len; ++i) {
    size_t l = i + 1;
    a_ser.resize(l, 0);
    Vec inner = poly::compose(Vec(g.Bx.begin(), g.Bx.begin() + std::min(l, g.Bx.size())), a_ser, l);
    Vec e = poly::exp(inner, l);
    Vec nxt(l, 0);
    for (size_t j = 1; j < l; ++j) nxt[j] = e[j - 1];
    a_ser = std::move(nxt);
  }
  a_ser.resize(len, 0);
  g.A = a_ser;
  g.C.assign(len, 0);
  for (size_t j = 1; j < len; ++j) g.C[j] = g.A[j] / static_cast<long double>(j);
  g.G = poly::exp(g.C, len);
  g.W = poly::exp(g.Bx, len);
  return g;
}

}  // namespace pmap
