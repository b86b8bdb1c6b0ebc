#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <ctime>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "matroid_id/cert/case.hpp"
#include "matroid_id/cert/independence.hpp"
#include "matroid_id/core/errors.hpp"

namespace matroid_id {

// Which Jacobian the subset is independent for. The subset is dependent for
// the other one.
enum class Direction { RightIndependent, LeftIndependent };

inline std::string to_string(Direction d) {
  return d == Direction::RightIndependent ? "right-independent" : "left-independent";
}

inline Direction parse_direction(std::string_view s) {
  if (s == "right-independent") return Direction::RightIndependent;
  if (s == "left-independent") return Direction::LeftIndependent;
  throw DataError("unknown direction: " + std::string(s));
}

// Settings for the randomised dependence test. l is the least integer with
// (alpha / |E|)^l <= epsilon; points are drawn from E = {1, ..., |E|}.
struct SZConfig {
  Rational epsilon;
  Integer sample_size;
  unsigned alpha = 0;
  unsigned amplification = 0;

  static unsigned minimal_amplification(unsigned alpha, const Integer& sample_size, const Rational& epsilon) {
    Rational ratio(Integer(alpha), sample_size);
    Rational power = ratio;
    unsigned l = 1;
    while (power > epsilon) {
      power *= ratio;
      ++l;
    }
    return l;
  }

  // |E| defaults to 10^6 * alpha (at least 10^6).
  static SZConfig make(unsigned alpha, const Rational& epsilon, std::optional<Integer> sample_size = std::nullopt) {
    SZConfig c;
    c.epsilon = epsilon;
    c.alpha = alpha;
    c.sample_size = sample_size ? *sample_size : Integer(1000000) * std::max(alpha, 1u);
    c.validate_inputs();
    c.amplification = minimal_amplification(alpha, c.sample_size, epsilon);
    return c;
  }

  void validate() const {
    validate_inputs();
    if (amplification != minimal_amplification(alpha, sample_size, epsilon))
      throw ConfigError("amplification count is not the least one meeting the tolerance");
  }

 private:
  void validate_inputs() const {
    if (epsilon <= 0 || epsilon >= 1) throw ConfigError("tolerance must lie strictly between 0 and 1");
    if (sample_size <= alpha)
      throw ConfigError("sample set size " + sample_size.get_str() + " must exceed the degree bound " +
                        std::to_string(alpha));
  }
};

struct Verification {
  enum class Kind { Symbolic, SchwartzZippel } kind = Kind::Symbolic;
  // Set for SchwartzZippel only.
  Rational epsilon;
  unsigned amplification = 0;
  Integer sample_size;
  unsigned alpha = 0;
};

struct Certificate {
  std::optional<CaseDescriptor> case_id;
  std::vector<std::size_t> subset;             // column indices, ascending
  std::vector<phylo::CoordinateLabel> labels;  // the same subset as coordinates
  Direction direction = Direction::RightIndependent;
  Verification verification;
  std::uint64_t seed = 0;
  std::string timestamp;
};

// Geometric, Uniform and Basis draw |T| and then T uniformly of that size.
// Walk adds columns in random order while the set stays independent for
// both matrices; the first column that is dependent for exactly one of them
// closes the candidate.
enum class SizeSampling { Geometric, Uniform, Basis, Walk };

struct SearchOptions {
  std::size_t trials = 1000;
  bool same_dim = false;
  std::uint64_t seed = 0;
  SizeSampling sizes = SizeSampling::Walk;
  double geometric_ratio = 0.85;        // P(|T| = s) proportional to ratio^(dmax - s)
  std::optional<std::size_t> max_size;  // cap on |T|
  // Exact mode: circuits larger than this are not sent to fraction-free
  // elimination unless the rank bound settles them.
  std::size_t symbolic_limit = 16;
  // Exact mode: greedy restarts of the bound-driven construction, tried
  // after the random trials fail.
  std::size_t structural_restarts = 200;
  // Exact mode: local-search steps spent shrinking an oversized circuit.
  std::size_t polish_steps = 2000;
  // Exact mode: oversized circuits tolerated before the random trials give
  // way to the bound-driven construction.
  std::size_t max_deferred = 20;
};

struct SearchStats {
  std::size_t trials = 0;
  std::size_t screened = 0;  // candidates that passed the numeric screen
  std::size_t refuted = 0;   // screened candidates rejected by verification
  std::size_t deferred = 0;  // screened candidates too large to verify
  std::size_t restarts = 0;  // greedy constructions attempted
};

struct SearchResult {
  std::optional<Certificate> certificate;
  SearchStats stats;
  bool found() const { return certificate.has_value(); }
};

inline std::string utc_timestamp() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

namespace detail {

inline std::size_t sample_size(const SearchOptions& o, std::size_t dmax, Rng& rng) {
  const std::size_t lo = std::min<std::size_t>(2, dmax);
  switch (o.sizes) {
    case SizeSampling::Basis:
    case SizeSampling::Walk: return dmax;
    case SizeSampling::Uniform: return std::uniform_int_distribution<std::size_t>(lo, dmax)(rng);
    case SizeSampling::Geometric: {
      std::vector<double> w;
      for (std::size_t s = lo; s <= dmax; ++s) w.push_back(std::pow(o.geometric_ratio, double(dmax - s)));
      return lo + std::discrete_distribution<std::size_t>(w.begin(), w.end())(rng);
    }
  }
  return dmax;
}

inline std::vector<std::size_t> random_subset(std::size_t n, std::size_t s, Rng& rng) {
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  for (std::size_t i = 0; i < s; ++i) std::swap(all[i], all[std::uniform_int_distribution<std::size_t>(i, n - 1)(rng)]);
  all.resize(s);
  std::sort(all.begin(), all.end());
  return all;
}

inline std::size_t column_rank(const Matrix<Fp>& A, const std::vector<std::size_t>& cols) {
  return scalar_rank(A.select_columns(cols));
}

// Shrinks a numerically dependent set to a numerically minimal dependent one
// (a circuit of the evaluated matrix).
inline std::vector<std::size_t> shrink_to_circuit(const Matrix<Fp>& A, std::vector<std::size_t> T) {
  for (std::size_t i = T.size(); i-- > 0;) {
    std::vector<std::size_t> smaller = T;
    smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
    if (column_rank(A, smaller) < smaller.size()) T = std::move(smaller);
  }
  return T;
}

// Local search for a smaller numeric circuit with the same separation:
// drop one or two elements, add as many (or one more) at random, keep the
// set if it is still independent for `ind` and dependent for `dep`, and
// shrink it. Stops once the circuit has at most `target` elements.
inline std::vector<std::size_t> polish_circuit(const Matrix<Fp>& dep, const Matrix<Fp>& ind, std::vector<std::size_t> C,
                                               std::size_t target, std::size_t steps, Rng& rng) {
  const std::size_t n = dep.cols();
  for (std::size_t step = 0; step < steps && C.size() > target; ++step) {
    std::vector<std::size_t> T = C;
    const std::size_t drop = 1 + rng() % 2;
    for (std::size_t k = 0; k < drop && !T.empty(); ++k) T.erase(T.begin() + static_cast<std::ptrdiff_t>(rng() % T.size()));
    const std::size_t add = drop + rng() % 2;
    for (std::size_t k = 0; k < add && T.size() < n; ++k) {
      std::size_t y;
      do y = rng() % n;
      while (std::find(T.begin(), T.end(), y) != T.end());
      T.push_back(y);
    }
    std::sort(T.begin(), T.end());
    if (column_rank(ind, T) != T.size() || column_rank(dep, T) == T.size()) continue;
    auto S = shrink_to_circuit(dep, std::move(T));
    if (S.size() <= C.size()) C = std::move(S);
  }
  return C;
}

inline std::vector<std::size_t> random_walk_subset(const Matrix<Fp>& A1, const Matrix<Fp>& A2, std::size_t dmax,
                                                   Rng& rng) {
  std::vector<std::size_t> order(A1.cols());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::size_t> T;
  for (std::size_t y : order) {
    if (T.size() == dmax) break;
    T.push_back(y);
    const bool ind1 = column_rank(A1, T) == T.size();
    const bool ind2 = column_rank(A2, T) == T.size();
    if (ind1 != ind2) break;
    if (!ind1) T.pop_back();
  }
  std::sort(T.begin(), T.end());
  return T;
}

// The screening half shared by both algorithms. The verifier gets the
// candidate, whether J1 is the side it must be dependent for, and the stats
// to update; it returns the verification record or nullopt to keep searching.
// With `polish`, circuits above the symbolic limit are first reduced by
// polish_circuit.
template <class Verifier>
SearchResult search(const PolyMatrix& J1, const PolyMatrix& J2, const SearchOptions& o, Verifier&& verify,
                    bool polish = false) {
  if (o.trials == 0) throw std::invalid_argument("number of trials must be positive");
  if (J1.cols() != J2.cols()) throw std::invalid_argument("Jacobians index different coordinate sets");
  Rng rng(o.seed);
  SearchResult result;
  const std::size_t n = J1.cols();
  const std::size_t d1 = numeric_rank(J1, rng), d2 = numeric_rank(J2, rng);
  std::size_t dmax = o.same_dim ? std::max(d1, d2) : d2;
  if (o.max_size) dmax = std::min(dmax, *o.max_size);
  dmax = std::min(dmax, n);
  if (dmax == 0) {
    result.stats.trials = o.trials;
    return result;
  }
  const Integer bound = default_screen_bound();
  for (std::size_t t = 0; t < o.trials; ++t) {
    ++result.stats.trials;
    auto r1 = random_point<Fp>(J1.num_variables(), bound, rng);
    auto r2 = random_point<Fp>(J2.num_variables(), bound, rng);
    Matrix<Fp> A1 = J1.evaluate<Fp>(r1), A2 = J2.evaluate<Fp>(r2);
    auto T = o.sizes == SizeSampling::Walk ? random_walk_subset(A1, A2, dmax, rng)
                                           : random_subset(n, sample_size(o, dmax, rng), rng);
    const bool ind1 = column_rank(A1, T) == T.size();
    const bool ind2 = column_rank(A2, T) == T.size();
    std::optional<Direction> dir;
    if (ind2 && !ind1) dir = Direction::RightIndependent;
    else if (o.same_dim && ind1 && !ind2) dir = Direction::LeftIndependent;
    if (!dir) continue;
    ++result.stats.screened;
    const bool right = *dir == Direction::RightIndependent;
    // Full rank mod p at an integer point already proves independence on the
    // other side, and subsets keep it.
    auto C = shrink_to_circuit(right ? A1 : A2, T);
    if (polish && C.size() > o.symbolic_limit)
      C = polish_circuit(right ? A1 : A2, right ? A2 : A1, std::move(C), o.symbolic_limit, o.polish_steps, rng);
    std::optional<Verification> v = verify(C, right, rng, result.stats);
    if (!v) {
      if (result.stats.deferred >= o.max_deferred) break;
      continue;
    }
    Certificate c;
    c.subset = std::move(C);
    c.direction = *dir;
    c.verification = *v;
    c.seed = o.seed;
    c.timestamp = utc_timestamp();
    result.certificate = std::move(c);
    return result;
  }
  return result;
}

}  // namespace detail

// Randomised search with symbolic verification: candidates come from one
// random evaluation per trial; the dependent side is then confirmed by exact
// rank over Q(theta).
inline SearchResult certify_exact(const PolyMatrix& J1, const PolyMatrix& J2, const SearchOptions& o) {
  return detail::search(J1, J2, o,
                        [&](const std::vector<std::size_t>& C, bool left_dep, Rng&, SearchStats& stats) {
                          std::optional<Verification> v;
                          if (symbolic_rank((left_dep ? J1 : J2).select_columns(C)) < C.size()) v = Verification{};
                          else ++stats.refuted;
                          return v;
                        });
}

// A parameterization together with the Jacobian form used for exact work.
// normalized_jacobian has the same column matroid as the plain Jacobian.
struct ExactModel {
  phylo::Parameterization param;
  PolyMatrix jacobian;

  explicit ExactModel(phylo::Parameterization p)
      : param(std::move(p)), jacobian(phylo::normalized_jacobian(param)) {}
};

enum class Proof { Proved, Refuted, Skipped };

// Exact dependence check of the C-columns: the structural rank bound first,
// then fraction-free elimination for sets of at most `symbolic_limit` columns.
inline Proof prove_dependent(const ExactModel& m, const std::vector<std::size_t>& C,
                             std::size_t symbolic_limit = std::numeric_limits<std::size_t>::max()) {
  if (phylo::structural_rank_bound(m.param, C) < C.size()) return Proof::Proved;
  if (C.size() > symbolic_limit) return Proof::Skipped;
  return symbolic_rank(m.jacobian.select_columns(C)) < C.size() ? Proof::Proved : Proof::Refuted;
}

namespace detail {

// Residuals of a fixed set of vectors modulo the span of the ones chosen so
// far: vector y lies in that span exactly when its residual is zero.
template <class F>
class ResidualSpan {
 public:
  explicit ResidualSpan(std::vector<std::vector<F>> vectors) : res_(std::move(vectors)) {}

  bool in_span(std::size_t y) const {
    return std::all_of(res_[y].begin(), res_[y].end(), [](const F& x) { return FieldTraits<F>::is_zero(x); });
  }

  void choose(std::size_t y) {
    if (in_span(y)) return;
    std::vector<F> b = res_[y];
    std::size_t p = 0;
    while (FieldTraits<F>::is_zero(b[p])) ++p;
    F inv(1);
    inv /= b[p];
    for (auto& x : b) x *= inv;
    for (auto& r : res_) {
      if (FieldTraits<F>::is_zero(r[p])) continue;
      const F f = r[p];
      for (std::size_t i = 0; i < r.size(); ++i) r[i] -= f * b[i];
    }
  }

 private:
  std::vector<std::vector<F>> res_;
};

// Greedy set that stays independent for the evaluated matrix `ind` while the
// structural bound of `dep` grows as slowly as possible; ties are broken at
// random. Returns the set once it exceeds the bound. The bound of
// structural_rank_bound grows by one for each tree term whose exponent span
// (with the row of ones for mixtures) the new column leaves.
inline std::optional<std::vector<std::size_t>> bound_driven_candidate(const phylo::Parameterization& dep,
                                                                      const Matrix<Fp>& ind, Rng& rng) {
  const std::size_t n = ind.cols(), nv = dep.num_variables();
  const bool custom = dep.combination == phylo::Combination::Custom || dep.term_monomials.empty();
  const bool tree = dep.combination == phylo::Combination::Tree;
  std::vector<std::vector<Fp>> cols(n, std::vector<Fp>(ind.rows()));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < ind.rows(); ++i) cols[j][i] = ind(i, j);
  ResidualSpan<Fp> independent(std::move(cols));
  std::vector<ResidualSpan<Rational>> terms;
  if (!custom)
    for (const auto& mons : dep.term_monomials) {
      std::vector<std::vector<Rational>> exps(n, std::vector<Rational>(nv + (tree ? 0 : 1), Rational(1)));
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < nv; ++i) exps[j][i] = mons.at(j).get(i);
      terms.emplace_back(std::move(exps));
    }

  std::vector<std::size_t> C;
  std::vector<bool> used(n, false);
  std::size_t bound = 0;
  while (true) {
    std::size_t best_key = std::numeric_limits<std::size_t>::max(), best = n, best_inc = 0;
    for (std::size_t y = 0; y < n; ++y) {
      if (used[y] || independent.in_span(y)) continue;
      std::size_t inc = custom ? (C.size() < nv ? 1 : 0) : 0;
      for (const auto& t : terms) inc += t.in_span(y) ? 0 : 1;
      const std::size_t key = inc * 1024 + rng() % 1024;
      if (key < best_key) {
        best_key = key;
        best = y;
        best_inc = inc;
      }
    }
    if (best == n) return std::nullopt;
    used[best] = true;
    C.insert(std::upper_bound(C.begin(), C.end(), best), best);
    independent.choose(best);
    for (auto& t : terms) t.choose(best);
    bound += best_inc;
    if (bound < C.size()) return C;
  }
}

}  // namespace detail

// Exact search on two models. Screening and verification follow the matrix
// version; dependence is proved by prove_dependent. If the trials find no
// verified certificate, sets are then built directly against the structural
// bound, with independence proved by a full-rank evaluation mod p.
inline SearchResult certify_exact(const ExactModel& m1, const ExactModel& m2, const SearchOptions& o) {
  if (m1.param.coordinates != m2.param.coordinates)
    throw std::invalid_argument("models use different coordinates");
  SearchResult result = detail::search(
      m1.jacobian, m2.jacobian, o,
      [&](const std::vector<std::size_t>& C, bool left_dep, Rng&, SearchStats& stats) {
        std::optional<Verification> v;
        switch (prove_dependent(left_dep ? m1 : m2, C, o.symbolic_limit)) {
          case Proof::Proved: v = Verification{}; break;
          case Proof::Refuted: ++stats.refuted; break;
          case Proof::Skipped: ++stats.deferred; break;
        }
        return v;
      },
      true);
  if (result.found()) return result;

  Rng rng(o.seed ^ 0x9e3779b97f4a7c15ULL);
  const Integer bound = default_screen_bound();
  const Matrix<Fp> A1 = m1.jacobian.evaluate<Fp>(random_point<Fp>(m1.jacobian.num_variables(), bound, rng));
  const Matrix<Fp> A2 = m2.jacobian.evaluate<Fp>(random_point<Fp>(m2.jacobian.num_variables(), bound, rng));
  for (std::size_t r = 0; r < o.structural_restarts; ++r) {
    const bool left_dep = !o.same_dim || r % 2 == 0;
    ++result.stats.restarts;
    auto C = detail::bound_driven_candidate(left_dep ? m1.param : m2.param, left_dep ? A2 : A1, rng);
    if (!C || (o.max_size && C->size() > *o.max_size)) continue;
    Certificate c;
    c.subset = std::move(*C);
    c.direction = left_dep ? Direction::RightIndependent : Direction::LeftIndependent;
    c.seed = o.seed;
    c.timestamp = utc_timestamp();
    result.certificate = std::move(c);
    break;
  }
  return result;
}

// Degree bound used to size E: minors of any size up to the largest sampled
// subset, over both Jacobians when either side may be the dependent one.
inline unsigned certification_alpha(const PolyMatrix& J1, const PolyMatrix& J2, const SearchOptions& o) {
  Rng rng(o.seed);
  const std::size_t d1 = numeric_rank(J1, rng), d2 = numeric_rank(J2, rng);
  std::size_t dmax = o.same_dim ? std::max(d1, d2) : d2;
  if (o.max_size) dmax = std::min(dmax, *o.max_size);
  auto bound = [&](const PolyMatrix& J) {
    return minor_degree_bound(J, std::min({dmax, J.rows(), J.cols()}));
  };
  return o.same_dim ? std::max(bound(J1), bound(J2)) : bound(J1);
}

// Randomised search with randomised verification: a candidate must stay
// dependent at l further points of E^d, evaluated exactly over Q.
inline SearchResult certify_sz(const PolyMatrix& J1, const PolyMatrix& J2, const SZConfig& cfg,
                               const SearchOptions& o) {
  cfg.validate();
  return detail::search(J1, J2, o, [&](const std::vector<std::size_t>& C, bool left_dep, Rng& rng, SearchStats& stats) {
    const PolyMatrix& dep = left_dep ? J1 : J2;
    std::optional<Verification> v;
    for (unsigned j = 0; j < cfg.amplification; ++j) {
      auto pt = random_point<Rational>(dep.num_variables(), cfg.sample_size, rng);
      if (is_independent_numeric<Rational>(dep, C, pt)) {
        ++stats.refuted;
        return v;
      }
    }
    v = Verification{Verification::Kind::SchwartzZippel, cfg.epsilon, cfg.amplification, cfg.sample_size, cfg.alpha};
    return v;
  });
}

struct MatroidComparison {
  bool equal = true;
  std::optional<Certificate> witness;
  std::size_t checked = 0;
};

// Compares independence of every subset of size <= max_size. Throws
// ResourceError once more than `budget` subsets would be needed.
inline MatroidComparison exhaustive_matroid_equal(const PolyMatrix& J1, const PolyMatrix& J2, std::size_t max_size,
                                                  std::size_t budget = 10000) {
  if (J1.cols() != J2.cols()) throw std::invalid_argument("Jacobians index different coordinate sets");
  const std::size_t n = J1.cols();
  max_size = std::min(max_size, n);
  std::size_t total = 0;
  {
    Integer sum = 0, binom = 1;
    for (std::size_t s = 0; s <= max_size; ++s) {
      sum += binom;
      binom = binom * Integer(n - s) / Integer(s + 1);
    }
    total = sum.fits_ulong_p() ? sum.get_ui() : std::numeric_limits<std::size_t>::max();
  }
  MatroidComparison out;
  for (std::size_t s = 0; s <= max_size; ++s) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(s), true);
    do {
      if (out.checked >= budget)
        throw ResourceError("subset budget of " + std::to_string(budget) + " exhausted after " +
                                std::to_string(out.checked) + " of " + std::to_string(total) + " subsets",
                            out.checked, total);
      std::vector<std::size_t> S;
      for (std::size_t i = 0; i < n; ++i)
        if (pick[i]) S.push_back(i);
      ++out.checked;
      const bool a = is_independent_symbolic(J1, S), b = is_independent_symbolic(J2, S);
      if (a != b) {
        Certificate c;
        c.subset = S;
        c.direction = a ? Direction::LeftIndependent : Direction::RightIndependent;
        c.timestamp = utc_timestamp();
        out.equal = false;
        out.witness = std::move(c);
        return out;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return out;
}

// Exact check of a subset against a pair of Jacobians.
inline bool verify_subset(const PolyMatrix& J1, const PolyMatrix& J2, const std::vector<std::size_t>& S,
                          Direction d) {
  const PolyMatrix& ind = d == Direction::LeftIndependent ? J1 : J2;
  const PolyMatrix& dep = d == Direction::LeftIndependent ? J2 : J1;
  for (std::size_t j : S)
    if (j >= J1.cols()) return false;
  return is_independent_symbolic(ind, S) && !is_independent_symbolic(dep, S);
}

// Column indices of the given coordinate labels in p; DataError if absent.
inline std::vector<std::size_t> resolve_labels(const phylo::Parameterization& p,
                                               const std::vector<phylo::CoordinateLabel>& labels) {
  std::vector<std::size_t> out;
  for (const auto& g : labels) {
    auto j = p.coordinate_index(g);
    if (!j) throw DataError("coordinate not present in the model");
    out.push_back(*j);
  }
  return out;
}

// Exact check of a subset against a pair of models.
inline bool verify_subset(const ExactModel& m1, const ExactModel& m2, const std::vector<std::size_t>& S,
                          Direction d) {
  const ExactModel& ind = d == Direction::LeftIndependent ? m1 : m2;
  const ExactModel& dep = d == Direction::LeftIndependent ? m2 : m1;
  for (std::size_t j : S)
    if (j >= m1.jacobian.cols()) return false;
  return is_independent_symbolic(ind.jacobian, S) && prove_dependent(dep, S) == Proof::Proved;
}

// Rebuilds both models from the case id and replays the exact check.
inline bool verify_certificate(const Certificate& c) {
  if (!c.case_id) throw DataError("certificate has no case id");
  ExactModel m1(build_parameterization(c.case_id->kind, c.case_id->left));
  ExactModel m2(build_parameterization(c.case_id->kind, c.case_id->right));
  if (m1.param.coordinates != m2.param.coordinates) throw DataError("the two models use different coordinates");
  std::vector<std::size_t> S = c.labels.empty() ? c.subset : resolve_labels(m1.param, c.labels);
  std::vector<std::size_t> sorted = S;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  return verify_subset(m1, m2, sorted, c.direction);
}

}  // namespace matroid_id
