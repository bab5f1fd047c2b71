#include "looplab/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "looplab/errors.hpp"

namespace looplab {

namespace {

// Integer Gram matrix of the simple roots (Bourbaki numbering), up to an overall scale.
IntMat gram_matrix(char type, int r) {
  IntMat g(static_cast<std::size_t>(r), IntVec(static_cast<std::size_t>(r), 0));
  auto set = [&](int i, int j, int v) {
    g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
    g[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
  };
  switch (type) {
    case 'A':
      for (int i = 0; i < r; ++i) set(i, i, 2);
      for (int i = 0; i + 1 < r; ++i) set(i, i + 1, -1);
      break;
    case 'B':  // e_i - e_{i+1}, e_r; doubled
      for (int i = 0; i < r; ++i) set(i, i, i + 1 < r ? 4 : 2);
      for (int i = 0; i + 1 < r; ++i) set(i, i + 1, -2);
      break;
    case 'C':  // e_i - e_{i+1}, 2 e_r
      for (int i = 0; i < r; ++i) set(i, i, i + 1 < r ? 2 : 4);
      for (int i = 0; i + 1 < r; ++i) set(i, i + 1, i + 2 < r ? -1 : -2);
      break;
    case 'D':  // e_i - e_{i+1}, e_{r-1} + e_r
      for (int i = 0; i < r; ++i) set(i, i, 2);
      for (int i = 0; i + 2 < r; ++i) set(i, i + 1, -1);
      set(r - 3, r - 1, -1);
      break;
    case 'E':
      for (int i = 0; i < r; ++i) set(i, i, 2);
      set(0, 2, -1);
      set(1, 3, -1);
      for (int i = 2; i + 1 < r; ++i) set(i, i + 1, -1);
      break;
    case 'F':  // alpha_1, alpha_2 long; doubled
      set(0, 0, 4);
      set(1, 1, 4);
      set(2, 2, 2);
      set(3, 3, 2);
      set(0, 1, -2);
      set(1, 2, -2);
      set(2, 3, -1);
      break;
    case 'G':  // alpha_1 short
      set(0, 0, 2);
      set(1, 1, 6);
      set(0, 1, -3);
      break;
    default:
      break;
  }
  return g;
}

bool valid_label(char type, int r) {
  switch (type) {
    case 'A': return r >= 1;
    case 'B':
    case 'C': return r >= 2;
    case 'D': return r >= 3;
    case 'E': return r >= 6 && r <= 8;
    case 'F': return r == 4;
    case 'G': return r == 2;
    default: return false;
  }
}

}  // namespace

int RootSystem::pair_coroot(const IntVec& beta, int i) const {
  int s = 0;
  for (int j = 0; j < rank; ++j) s += beta[static_cast<std::size_t>(j)] * cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return s;
}

int RootSystem::pair_theta_coroot(const IntVec& beta) const {
  int s = 0;
  for (int i = 0; i < rank; ++i) s += comarks[static_cast<std::size_t>(i)] * pair_coroot(beta, i);
  return s;
}

Rational RootSystem::inner(const IntVec& a, const IntVec& b) const {
  Rational s = 0;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      s += form[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
           Rational(a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)]);
  return s;
}

Rational RootSystem::rho_pairing(const IntVec& beta) const {
  // h_beta = sum_i beta_i (alpha_i, alpha_i) / (beta, beta) h_i and rho(h_i) = 1.
  const Rational len = inner(beta, beta);
  Rational s = 0;
  for (int i = 0; i < rank; ++i)
    s += Rational(beta[static_cast<std::size_t>(i)]) * form[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] / len;
  return s;
}

std::vector<Rational> RootSystem::rho() const { return std::vector<Rational>(static_cast<std::size_t>(rank), Rational(1)); }

bool RootSystem::is_root(const IntVec& beta) const {
  IntVec pos = beta;
  if (std::all_of(beta.begin(), beta.end(), [](int v) { return v <= 0; }))
    for (int& v : pos) v = -v;
  return std::find(positive_roots.begin(), positive_roots.end(), pos) != positive_roots.end();
}

int RootSystem::height(const IntVec& beta) const {
  int h = 0;
  for (int v : beta) h += v;
  return h;
}

RootSystem build_root_system(char type, int rank) {
  type = static_cast<char>(std::toupper(static_cast<unsigned char>(type)));
  if (!valid_label(type, rank))
    throw InvalidInput(std::string("unknown root system ") + type + std::to_string(rank));
  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  rs.label = std::string(1, type) + std::to_string(rank);
  const auto r = static_cast<std::size_t>(rank);
  const IntMat gram = gram_matrix(type, rank);

  rs.cartan.assign(r, IntVec(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) rs.cartan[i][j] = 2 * gram[i][j] / gram[i][i];

  // Closure by root strings: beta + alpha_i is a root iff p - beta(h_i) > 0, where p is the
  // length of the downward alpha_i string through beta.
  std::set<IntVec> found;
  std::vector<IntVec> layer;
  for (std::size_t i = 0; i < r; ++i) {
    IntVec e(r, 0);
    e[i] = 1;
    layer.push_back(e);
    found.insert(e);
  }
  while (!layer.empty()) {
    std::vector<IntVec> next;
    for (const IntVec& beta : layer) {
      for (int i = 0; i < rank; ++i) {
        int p = 0;
        IntVec down = beta;
        while (true) {
          down[static_cast<std::size_t>(i)] -= 1;
          if (!found.count(down)) break;
          ++p;
        }
        int pair = 0;
        for (int j = 0; j < rank; ++j) pair += beta[static_cast<std::size_t>(j)] * rs.cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (p - pair > 0) {
          IntVec up = beta;
          up[static_cast<std::size_t>(i)] += 1;
          if (found.insert(up).second) next.push_back(up);
        }
      }
    }
    layer = std::move(next);
  }
  rs.positive_roots.assign(found.begin(), found.end());
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(), [&](const IntVec& a, const IntVec& b) {
    const int ha = rs.height(a), hb = rs.height(b);
    return ha != hb ? ha < hb : a < b;
  });
  rs.highest_root = rs.positive_roots.back();

  long long theta_len = 0;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) theta_len += static_cast<long long>(rs.highest_root[i]) * rs.highest_root[j] * gram[i][j];
  rs.form.assign(r, std::vector<Rational>(r, Rational(0)));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) rs.form[i][j] = Rational(2LL * gram[i][j], theta_len);

  rs.comarks.assign(r, 0);
  int sum = 0;
  for (std::size_t j = 0; j < r; ++j) {
    const Rational c = Rational(rs.highest_root[j]) * rs.form[j][j] / Rational(2);
    if (c.denominator() != 1) throw Error("build_root_system: non-integral comark");
    rs.comarks[j] = static_cast<int>(c.numerator());
    sum += rs.comarks[j];
  }
  rs.dual_coxeter = 1 + sum;
  return rs;
}

RootSystem build_root_system(const std::string& label) {
  if (label.size() < 2) throw InvalidInput("unknown root system '" + label + "'");
  int rank = 0;
  for (std::size_t i = 1; i < label.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(label[i])) || rank > 1000)
      throw InvalidInput("unknown root system '" + label + "'");
    rank = rank * 10 + (label[i] - '0');
  }
  return build_root_system(label[0], rank);
}

}  // namespace looplab
