#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pmap/series.hpp"

namespace pmap {

// Fixed registry of class identifiers, used as CLI and cache keys.
enum class ClassId {
  U, V_uv, F01bar, F01, Obar, O, IstarBar, Jbar, Rbar, Kbar, D, Sbar, Pbar, Hbar, Vmap, M,
  Istar, J, R, K, N, B, C, G, S, P, H, L, W
};

const std::vector<std::pair<ClassId, std::string>>& class_registry();
std::string class_name(ClassId c);
ClassId parse_class(const std::string& s);  // throws std::invalid_argument

struct GrammarError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Either a symbolic x (bivariate) or x evaluated at a rational t.
struct ChainVars {
  std::optional<Rational> t;
  int max_x = 0, max_y = 0;
  Convention conv = Convention::Plain;

  Series x() const;
  Series y() const;
  Series one() const;
  Series zero() const;
  Series lift(const Series& s) const;  // retag convention / x value
};

ChainVars symbolic_vars(int max_x, int max_y, Convention conv);
ChainVars evaluated_vars(const Rational& t, int max_y, Convention conv);

// closed form: y (1/(1+xy) + 1/(1+y) - 1 - (1+u)^2 (1+v)^2/(1+u+v)^3)
Series build_f01_bar(const ChainVars& cv);

// Integer coefficients of F01bar(x,y) for a <= max_x, b <= max_y, computed
// y-order by y-order with polynomial-in-x slices. Entry [a][b].
std::vector<std::vector<Integer>> f01_bar_table(int max_x, int max_y);

struct MapTable {
  std::optional<Rational> t;
  int max_x = 0, max_y = 0;
  Series u, v, F01bar, Obar, IstarBar, Jbar, Rbar, Kbar, D, Sbar, Pbar, Hbar;
  Series V, M;  // in z, truncated at 2*max_y+1
  std::vector<std::string> log;
};

// Map chain up to y-order max_y. With t set, x is evaluated at t.
MapTable build_map_chain(std::optional<Rational> t, int max_x, int max_y);

struct GraphTable {
  std::optional<Rational> t;
  int max_x = 0, max_y = 0;
  Series F01bar, F01, O, L, Istar, J, R, K, N, S, P, H;
  Series B, A, C, G;  // x-order max_x+2
  std::vector<std::string> log;
};

// Graph chain, LabelledX, exact. N and friends at (max_x, max_y); B, C, G at
// (max_x+2, max_y+1).
GraphTable build_graph_chain(int max_x, int max_y);

// B from N through N = (1+y)(2/x^2) dB/dy - 1 with [y^0]B = 0
Series b_from_n(const Series& n);
Series n_from_b(const Series& b);
// A = x dC/dx as the fixed point of A = x SET(dB/dx(A, y)); C from A
Series a_from_b(const Series& b);
Series c_from_a(const Series& a);

// 3-connected labelled planar graphs from brute-force counts, F01 = (2/x^2) dF/dy
Series f01_from_3connected(const Series& f3);

}  // namespace pmap
