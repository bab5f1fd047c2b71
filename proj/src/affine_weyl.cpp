#include "looplab/affine_weyl.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "looplab/errors.hpp"

namespace looplab {

namespace {

using std::size_t;

long long floor_div(const Rational& r) {
  long long n = r.numerator(), d = r.denominator();
  long long f = n / d;
  if ((n % d != 0) && (n < 0)) --f;
  return f;
}

// x with alpha_i(x) = a_i, i.e. solve cartan^T x = a over the rationals.
RatVec solve_coroot_coords(const RootSystem& rs, const RatVec& a) {
  const size_t r = static_cast<size_t>(rs.rank);
  std::vector<RatVec> m(r, RatVec(r + 1));
  for (size_t i = 0; i < r; ++i) {
    for (size_t j = 0; j < r; ++j) m[i][j] = rs.cartan[j][i];
    m[i][r] = a[i];
  }
  for (size_t col = 0; col < r; ++col) {
    size_t piv = col;
    while (piv < r && m[piv][col] == Rational(0)) ++piv;
    if (piv == r) throw Error("singular Cartan matrix");
    std::swap(m[piv], m[col]);
    for (size_t i = 0; i < r; ++i) {
      if (i == col || m[i][col] == Rational(0)) continue;
      const Rational f = m[i][col] / m[col][col];
      for (size_t j = col; j <= r; ++j) m[i][j] -= f * m[col][j];
    }
  }
  RatVec x(r);
  for (size_t i = 0; i < r; ++i) x[i] = m[i][r] / m[i][i];
  return x;
}

// Values of the linear part on the simple coroots, b_j = beta(h_j).
IntVec functional(const RootSystem& rs, const IntVec& beta) {
  IntVec b(static_cast<size_t>(rs.rank));
  for (int j = 0; j < rs.rank; ++j) b[static_cast<size_t>(j)] = rs.pair_coroot(beta, j);
  return b;
}

// Index i with alpha_i(y) = q + b.y, or -1.
int match_simple(const RootSystem& rs, long long q, const IntVec& b) {
  const IntVec theta_b = functional(rs, rs.highest_root);
  if (q == 1) {
    bool ok = true;
    for (size_t j = 0; j < b.size(); ++j) ok = ok && b[j] == -theta_b[j];
    return ok ? 0 : -1;
  }
  if (q != 0) return -1;
  for (int i = 0; i < rs.rank; ++i) {
    IntVec e(static_cast<size_t>(rs.rank), 0);
    e[static_cast<size_t>(i)] = 1;
    if (functional(rs, e) == b) return i + 1;
  }
  return -1;
}

bool all_nonnegative(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
}

}  // namespace

bool AffineRoot::imaginary() const {
  return std::all_of(alpha.begin(), alpha.end(), [](int v) { return v == 0; });
}

bool AffineRoot::positive() const {
  if (q > 0) return true;
  if (q < 0) return false;
  return !imaginary() && all_nonnegative(alpha);
}

std::string to_string(const AffineRoot& tau) {
  std::string s = std::to_string(tau.q) + "d";
  bool negative = !tau.imaginary() && std::all_of(tau.alpha.begin(), tau.alpha.end(), [](int v) { return v <= 0; });
  if (tau.imaginary()) return s;
  s += negative ? "-(" : "+(";
  for (size_t i = 0; i < tau.alpha.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(negative ? -tau.alpha[i] : tau.alpha[i]);
  }
  return s + ")";
}

AffineRoot simple_affine_root(const RootSystem& rs, int i) {
  if (i < 0 || i > rs.rank) throw InvalidInput("simple root index out of range");
  AffineRoot a{0, IntVec(static_cast<size_t>(rs.rank), 0)};
  if (i == 0) {
    a.q = 1;
    for (size_t j = 0; j < a.alpha.size(); ++j) a.alpha[j] = -rs.highest_root[j];
  } else {
    a.alpha[static_cast<size_t>(i - 1)] = 1;
  }
  return a;
}

AffineRoot reflect(const RootSystem& rs, int i, const AffineRoot& tau) {
  AffineRoot out = tau;
  if (i == 0) {
    const int m = -rs.pair_theta_coroot(tau.alpha);
    out.q -= m;
    for (size_t j = 0; j < out.alpha.size(); ++j) out.alpha[j] += m * rs.highest_root[j];
  } else {
    out.alpha[static_cast<size_t>(i - 1)] -= rs.pair_coroot(tau.alpha, i - 1);
  }
  return out;
}

AffineRoot apply_word(const RootSystem& rs, const std::vector<int>& word, const AffineRoot& tau) {
  AffineRoot out = tau;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = reflect(rs, *it, out);
  return out;
}

AffineMap AffineMap::identity(int rank) {
  const size_t r = static_cast<size_t>(rank);
  AffineMap m{IntMat(r, IntVec(r, 0)), IntVec(r, 0)};
  for (size_t i = 0; i < r; ++i) m.w[i][i] = 1;
  return m;
}

RatVec AffineMap::apply(const RatVec& x) const {
  RatVec y(t.size());
  for (size_t i = 0; i < t.size(); ++i) {
    Rational s = t[i];
    for (size_t j = 0; j < x.size(); ++j) s += Rational(w[i][j]) * x[j];
    y[i] = s;
  }
  return y;
}

bool AffineMap::is_translation() const { return *this == AffineMap{identity(static_cast<int>(t.size())).w, t}; }

AffineMap compose(const AffineMap& a, const AffineMap& b) {
  const size_t r = a.t.size();
  AffineMap out{IntMat(r, IntVec(r, 0)), a.t};
  for (size_t i = 0; i < r; ++i)
    for (size_t k = 0; k < r; ++k) {
      out.t[i] += a.w[i][k] * b.t[k];
      for (size_t j = 0; j < r; ++j) out.w[i][j] += a.w[i][k] * b.w[k][j];
    }
  return out;
}

AffineMap simple_reflection_map(const RootSystem& rs, int i) {
  if (i < 0 || i > rs.rank) throw InvalidInput("simple reflection index out of range");
  AffineMap m = AffineMap::identity(rs.rank);
  const size_t r = static_cast<size_t>(rs.rank);
  if (i == 0) {
    const IntVec theta_b = functional(rs, rs.highest_root);
    for (size_t a = 0; a < r; ++a) {
      m.t[a] = rs.comarks[a];
      for (size_t j = 0; j < r; ++j) m.w[a][j] -= rs.comarks[a] * theta_b[j];
    }
  } else {
    const size_t k = static_cast<size_t>(i - 1);
    for (size_t j = 0; j < r; ++j) m.w[k][j] -= rs.cartan[j][k];
  }
  return m;
}

AffineMap word_map(const RootSystem& rs, const std::vector<int>& word) {
  AffineMap m = AffineMap::identity(rs.rank);
  for (int i : word) m = compose(m, simple_reflection_map(rs, i));
  return m;
}

RatVec affine_weyl_apply(const AffineMap& w, const RatVec& x) { return w.apply(x); }

Rational evaluate_root(const RootSystem& rs, const IntVec& alpha, const RatVec& x) {
  Rational s = 0;
  for (int j = 0; j < rs.rank; ++j) s += Rational(rs.pair_coroot(alpha, j)) * x[static_cast<size_t>(j)];
  return s;
}

IntVec coroot_of(const RootSystem& rs, const IntVec& beta) {
  const Rational len = rs.inner(beta, beta);
  IntVec h(beta.size());
  for (size_t i = 0; i < beta.size(); ++i) {
    const Rational c = Rational(beta[i]) * rs.form[i][i] / len;
    if (c.denominator() != 1) throw Error("coroot_of: non-integral coroot");
    h[i] = static_cast<int>(c.numerator());
  }
  return h;
}

int alcove_distance(const RootSystem& rs, const RatVec& y) {
  long long total = 0;
  for (const IntVec& alpha : rs.positive_roots) total += std::llabs(floor_div(evaluate_root(rs, alpha, y)));
  return static_cast<int>(total);
}

IntVec default_period(const RootSystem& rs) {
  IntVec sum(static_cast<size_t>(rs.rank), 0);
  for (const IntVec& beta : rs.positive_roots) {
    const IntVec h = coroot_of(rs, beta);
    for (size_t i = 0; i < sum.size(); ++i) sum[i] += h[i];
  }
  if (std::all_of(sum.begin(), sum.end(), [](int v) { return v % 2 == 0; }))
    for (int& v : sum) v /= 2;
  return sum;
}

ReducedSequence build_periodic_sequence(const RootSystem& rs, const IntVec& period, int horizon) {
  if (static_cast<int>(period.size()) != rs.rank) throw InvalidInput("period has wrong rank");
  if (horizon < 1) throw InvalidInput("horizon must be positive");
  RatVec lambda(period.begin(), period.end());
  for (int i = 0; i < rs.rank; ++i) {
    IntVec e(static_cast<size_t>(rs.rank), 0);
    e[static_cast<size_t>(i)] = 1;
    if (evaluate_root(rs, e, lambda) <= Rational(0)) throw InvalidInput("period is not strictly dominant");
  }

  struct Event {
    Rational time;
    size_t root;
    int q;
  };
  const int periods = horizon + 1;

  ReducedSequence seq;
  seq.period = period;
  std::vector<Event> events;
  for (int attempt = 0;; ++attempt) {
    if (attempt == 32) throw Error("build_periodic_sequence: could not find a generic basepoint");
    // alpha_i(p) = u_i / D with pseudo-random u_i, strictly inside the fundamental alcove.
    std::mt19937_64 gen(0x9e3779b97f4a7c15ULL + static_cast<unsigned long long>(attempt));
    std::uniform_int_distribution<long long> pick(100000, 199999);
    RatVec a(static_cast<size_t>(rs.rank));
    long long total = 0;
    std::vector<long long> u(static_cast<size_t>(rs.rank));
    for (int i = 0; i < rs.rank; ++i) {
      u[static_cast<size_t>(i)] = pick(gen);
      total += rs.highest_root[static_cast<size_t>(i)] * u[static_cast<size_t>(i)];
    }
    const long long denom = total + pick(gen);
    for (int i = 0; i < rs.rank; ++i) a[static_cast<size_t>(i)] = Rational(u[static_cast<size_t>(i)], denom);
    seq.basepoint = solve_coroot_coords(rs, a);

    events.clear();
    for (size_t k = 0; k < rs.positive_roots.size(); ++k) {
      const IntVec& alpha = rs.positive_roots[k];
      const Rational ap = evaluate_root(rs, alpha, seq.basepoint);
      const Rational al = evaluate_root(rs, alpha, lambda);
      const long long crossings = periods * al.numerator();
      for (long long q = 1; q <= crossings; ++q) events.push_back({(Rational(q) - ap) / al, k, static_cast<int>(q)});
    }
    std::sort(events.begin(), events.end(), [](const Event& x, const Event& y) { return x.time < y.time; });
    bool tie = false;
    for (size_t n = 1; n < events.size(); ++n) tie = tie || events[n].time == events[n - 1].time;
    if (!tie) break;
  }

  seq.period_length = static_cast<int>(events.size()) / periods;
  seq.maps.push_back(AffineMap::identity(rs.rank));
  AffineMap inverse = AffineMap::identity(rs.rank);
  for (size_t n = 0; n < events.size(); ++n) {
    AffineRoot tau{events[n].q, rs.positive_roots[events[n].root]};
    for (int& v : tau.alpha) v = -v;
    // gamma = w_{n-1} tau as an affine function: y -> tau(w_{n-1}^{-1} y).
    const IntVec b = functional(rs, tau.alpha);
    long long q = tau.q;
    IntVec bw(b.size(), 0);
    for (size_t k = 0; k < b.size(); ++k) {
      q += static_cast<long long>(b[k]) * inverse.t[k];
      for (size_t j = 0; j < b.size(); ++j) bw[j] += b[k] * inverse.w[k][j];
    }
    const int gamma = match_simple(rs, q, bw);
    if (gamma < 0) throw NonReducedSequence("build_periodic_sequence: crossed wall is not simple at step " + std::to_string(n + 1));
    const AffineMap r = simple_reflection_map(rs, gamma);
    seq.indices.push_back(gamma);
    seq.taus.push_back(tau);
    seq.maps.push_back(compose(r, seq.maps.back()));
    inverse = compose(inverse, r);
    if (alcove_distance(rs, inverse.apply(seq.basepoint)) != static_cast<int>(n + 1))
      throw NonReducedSequence("build_periodic_sequence: length does not increase at step " + std::to_string(n + 1));
  }

  AffineMap shift = AffineMap::identity(rs.rank);
  for (size_t i = 0; i < shift.t.size(); ++i) shift.t[i] = -period[i];
  if (!(seq.maps[static_cast<size_t>(seq.period_length)] == shift))
    throw NonReducedSequence("build_periodic_sequence: period element is not the expected translation");
  return seq;
}

std::vector<AffineRoot> tau_sequence(const ReducedSequence& seq, int horizon) {
  std::vector<AffineRoot> out;
  for (const AffineRoot& tau : seq.taus) {
    if (!tau.positive()) throw NonReducedSequence("tau_sequence: negative root " + to_string(tau));
    if (tau.q <= horizon) out.push_back(tau);
  }
  return out;
}

std::vector<int> longest_element_word(const RootSystem& rs) {
  std::vector<int> word;
  while (true) {
    int next = 0;
    for (int i = 1; i <= rs.rank && next == 0; ++i) {
      // word * r_i is longer iff word(alpha_i) > 0.
      if (apply_word(rs, word, simple_affine_root(rs, i)).positive()) next = i;
    }
    if (next == 0) return word;
    word.push_back(next);
  }
}

ExponentTable exponent_table(const RootSystem& rs, const ReducedSequence& seq, const Rational& level, int horizon) {
  if (level <= Rational(-1)) throw InvalidLevel("level must exceed -1");
  if (horizon < 1) throw InvalidInput("horizon must be positive");
  ExponentTable table;
  table.level = level;
  table.dual_coxeter = rs.dual_coxeter;
  table.horizon = horizon;
  table.w0_word = longest_element_word(rs);
  const Rational shift = level + Rational(rs.dual_coxeter);

  auto finite_part = [](const AffineRoot& tau) {
    IntVec a = tau.alpha;
    if (std::all_of(a.begin(), a.end(), [](int v) { return v <= 0; }))
      for (int& v : a) v = -v;
    return a;
  };

  // h_{q delta -/+ alpha} = q (2 / (alpha, alpha)) c -/+ h_alpha; the factor is 1 for long roots.
  auto c_coefficient = [&](const AffineRoot& tau) {
    const IntVec a = finite_part(tau);
    return Rational(tau.q) * Rational(2) / rs.inner(a, a);
  };

  int k = 0;
  for (const AffineRoot& tau : tau_sequence(seq, horizon)) {
    const Rational e = Rational(1) + shift * c_coefficient(tau) - rs.rho_pairing(finite_part(tau));
    if (e <= Rational(1)) throw Error("exponent_table: non-integrable zeta exponent");
    table.zeta.push_back({++k, tau, e});
  }

  std::vector<AffineRoot> eta_roots;
  std::vector<int> prefix;
  for (int i : table.w0_word) {
    eta_roots.push_back(apply_word(rs, prefix, simple_affine_root(rs, i)));
    prefix.push_back(i);
  }
  for (const AffineRoot& tau : tau_sequence(seq, horizon - 1)) eta_roots.push_back(apply_word(rs, table.w0_word, tau));
  int i = 0;
  for (const AffineRoot& tau : eta_roots) {
    if (!tau.positive() || !all_nonnegative(tau.alpha)) throw NonReducedSequence("exponent_table: bad eta root " + to_string(tau));
    table.eta.push_back({i++, tau, Rational(1) + shift * c_coefficient(tau) + rs.rho_pairing(tau.alpha)});
  }
  for (int j = 1; j <= horizon; ++j) table.chi_rates.push_back(shift * Rational(j));
  return table;
}

}  // namespace looplab
