#pragma once

#include <algorithm>
#include <queue>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "matroid_id/core/errors.hpp"
#include "matroid_id/core/monomial.hpp"
#include "matroid_id/core/prime_field.hpp"
#include "matroid_id/core/rational.hpp"

namespace matroid_id {

template <class C>
struct CoeffTraits;

template <>
struct CoeffTraits<Rational> {
  static bool is_zero(const Rational& c) { return sgn(c) == 0; }
  // Division in a field is always exact.
  static bool try_divide(const Rational& a, const Rational& b, Rational& out) {
    out = a / b;
    return true;
  }
  template <class F>
  static F to_field(const Rational& c) {
    return FieldTraits<F>::from_rational(c);
  }
};

template <>
struct CoeffTraits<Integer> {
  static bool is_zero(const Integer& c) { return sgn(c) == 0; }
  static bool try_divide(const Integer& a, const Integer& b, Integer& out) {
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) return false;
    mpz_divexact(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return true;
  }
  template <class F>
  static F to_field(const Integer& c) {
    if constexpr (std::is_same_v<F, Rational>) {
      return Rational(c);
    } else {
      return F::from_integer(c);
    }
  }
};

// Sparse multivariate polynomial. Terms are kept strictly decreasing in the
// lexicographic monomial order with no zero coefficients, so structural
// equality is polynomial equality.
template <class C>
class BasicPolynomial {
 public:
  using Coeff = C;
  struct Term {
    Monomial mono;
    C coeff;
  };

  BasicPolynomial() = default;
  explicit BasicPolynomial(std::size_t nvars) : nvars_(check_nvars(nvars)) {}

  static BasicPolynomial constant(std::size_t nvars, const C& c) {
    BasicPolynomial p(nvars);
    if (!CoeffTraits<C>::is_zero(c)) p.terms_.push_back({Monomial{}, c});
    return p;
  }

  static BasicPolynomial variable(std::size_t nvars, std::size_t i) {
    if (i >= nvars) throw std::out_of_range("variable index out of range");
    BasicPolynomial p(nvars);
    p.terms_.push_back({Monomial::variable(i), C(1)});
    return p;
  }

  static BasicPolynomial monomial(std::size_t nvars, const Monomial& m, const C& c = C(1)) {
    BasicPolynomial p(nvars);
    if (!CoeffTraits<C>::is_zero(c)) p.terms_.push_back({m, c});
    return p;
  }

  // Sorts, merges duplicate monomials and drops zeros.
  static BasicPolynomial from_terms(std::size_t nvars, std::vector<Term> terms) {
    BasicPolynomial p(nvars);
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.mono > b.mono; });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff += t.coeff;
      } else {
        if (!p.terms_.empty() && CoeffTraits<C>::is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
        p.terms_.push_back(std::move(t));
      }
    }
    if (!p.terms_.empty() && CoeffTraits<C>::is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
    return p;
  }

  std::size_t num_variables() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  // Total degree; the zero polynomial reports 0.
  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  unsigned degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.get(var));
    return d;
  }

  friend BasicPolynomial operator+(const BasicPolynomial& a, const BasicPolynomial& b) {
    return merge(a, b, false);
  }
  friend BasicPolynomial operator-(const BasicPolynomial& a, const BasicPolynomial& b) {
    return merge(a, b, true);
  }
  BasicPolynomial operator-() const {
    BasicPolynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }
  BasicPolynomial& operator+=(const BasicPolynomial& b) { return *this = *this + b; }
  BasicPolynomial& operator-=(const BasicPolynomial& b) { return *this = *this - b; }

  friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) {
    check_same(a, b);
    BasicPolynomial r(a.nvars_);
    if (a.is_zero() || b.is_zero()) return r;
    if (a.size() == 1 || b.size() == 1) {
      const auto& single = a.size() == 1 ? a : b;
      const auto& other = a.size() == 1 ? b : a;
      r.terms_.reserve(other.size());
      // Multiplying by one term preserves the order.
      for (const auto& t : other.terms_)
        r.terms_.push_back({t.mono * single.terms_[0].mono, t.coeff * single.terms_[0].coeff});
      return r;
    }
    std::unordered_map<Monomial, C, MonomialHash> acc;
    acc.reserve(a.size() * b.size());
    for (const auto& s : a.terms_) {
      for (const auto& t : b.terms_) {
        auto [it, inserted] = acc.try_emplace(s.mono * t.mono);
        if (inserted) {
          it->second = s.coeff * t.coeff;
        } else {
          it->second += s.coeff * t.coeff;
        }
      }
    }
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!CoeffTraits<C>::is_zero(c)) r.terms_.push_back({m, std::move(c)});
    std::sort(r.terms_.begin(), r.terms_.end(),
              [](const Term& x, const Term& y) { return x.mono > y.mono; });
    return r;
  }
  BasicPolynomial& operator*=(const BasicPolynomial& b) { return *this = *this * b; }

  BasicPolynomial scaled(const C& c) const {
    BasicPolynomial r(nvars_);
    if (CoeffTraits<C>::is_zero(c)) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }

  friend bool operator==(const BasicPolynomial& a, const BasicPolynomial& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff)
        return false;
    return true;
  }
  friend bool operator!=(const BasicPolynomial& a, const BasicPolynomial& b) { return !(a == b); }

  BasicPolynomial derivative(std::size_t var) const {
    if (var >= nvars_) throw std::out_of_range("variable index out of range");
    BasicPolynomial r(nvars_);
    for (const auto& t : terms_) {
      unsigned e = t.mono.get(var);
      if (e == 0) continue;
      Monomial m = t.mono;
      m.set(var, e - 1);
      r.terms_.push_back({m, t.coeff * C(static_cast<long>(e))});
    }
    // Lowering one exponent of distinct monomials keeps them distinct but may
    // reorder them.
    std::sort(r.terms_.begin(), r.terms_.end(),
              [](const Term& x, const Term& y) { return x.mono > y.mono; });
    return r;
  }

  // Value at a point of any field F with FieldTraits / from_integer support.
  template <class F>
  F evaluate(std::span<const F> point) const {
    if (point.size() != nvars_)
      throw std::invalid_argument("evaluation point has " + std::to_string(point.size()) +
                                  " coordinates, polynomial has " + std::to_string(nvars_) +
                                  " variables");
    F sum = CoeffTraits<C>::template to_field<F>(C(0));
    for (const auto& t : terms_) {
      F v = CoeffTraits<C>::template to_field<F>(t.coeff);
      for (std::size_t i = 0; i < nvars_; ++i) {
        unsigned e = t.mono.get(i);
        for (unsigned k = 0; k < e; ++k) v *= point[i];
      }
      sum += v;
    }
    return sum;
  }
  template <class F>
  F evaluate(const std::vector<F>& point) const {
    return evaluate(std::span<const F>(point));
  }

  // gcd of all monomials in the support; 1 for the zero polynomial.
  Monomial monomial_content() const {
    if (terms_.empty()) return Monomial{};
    Monomial g = terms_[0].mono;
    for (std::size_t i = 1; i < terms_.size() && !g.is_one(); ++i) g = Monomial::gcd(g, terms_[i].mono);
    return g;
  }

  BasicPolynomial divide_monomial(const Monomial& m) const {
    BasicPolynomial r(nvars_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      if (!m.divides(t.mono)) throw InexactDivision("monomial does not divide polynomial");
      r.terms_.push_back({m.quotient_of(t.mono), t.coeff});
    }
    return r;
  }

  BasicPolynomial multiply_monomial(const Monomial& m) const {
    BasicPolynomial r(nvars_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff});
    return r;
  }

  // Substitutes the polynomial `value` for variable `var`.
  // Every listed variable replaced by 1.
  BasicPolynomial set_to_one(std::span<const std::size_t> vars) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Term u = t;
      for (std::size_t v : vars) u.mono.set(v, 0);
      out.push_back(std::move(u));
    }
    return from_terms(nvars_, std::move(out));
  }

  BasicPolynomial substitute(std::size_t var, const BasicPolynomial& value) const {
    check_same(*this, value);
    BasicPolynomial result(nvars_);
    std::vector<BasicPolynomial> powers{constant(nvars_, C(1))};
    for (const auto& t : terms_) {
      unsigned e = t.mono.get(var);
      while (powers.size() <= e) powers.push_back(powers.back() * value);
      Monomial rest = t.mono;
      rest.set(var, 0);
      result += powers[e].multiply_monomial(rest).scaled(t.coeff);
    }
    return result;
  }

  // Same polynomial over a longer variable list; old variable i becomes map[i].
  BasicPolynomial remap(std::size_t new_nvars, std::span<const std::size_t> map) const {
    if (map.size() != nvars_) throw std::invalid_argument("variable map has wrong length");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m;
      for (std::size_t i = 0; i < nvars_; ++i) {
        unsigned e = t.mono.get(i);
        if (!e) continue;
        if (map[i] >= new_nvars) throw std::out_of_range("variable map target out of range");
        m.set(map[i], m.get(map[i]) + e);
      }
      out.push_back({m, t.coeff});
    }
    return from_terms(new_nvars, std::move(out));
  }

  std::string to_string(std::span<const std::string> names = {}) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
      std::string c = t.coeff.get_str();
      bool neg = !c.empty() && c[0] == '-';
      if (neg) c.erase(0, 1);
      if (first) {
        if (neg) os << "-";
      } else {
        os << (neg ? " - " : " + ");
      }
      first = false;
      bool unit = c == "1";
      if (!unit || t.mono.is_one()) os << c;
      bool need_star = !unit;
      for (std::size_t i = 0; i < nvars_; ++i) {
        unsigned e = t.mono.get(i);
        if (!e) continue;
        if (need_star) os << "*";
        need_star = true;
        if (i < names.size()) {
          os << names[i];
        } else {
          os << "x" << i;
        }
        if (e > 1) os << "^" << e;
      }
    }
    return os.str();
  }

 private:
  static std::size_t check_nvars(std::size_t n) {
    if (n > kMaxVariables)
      throw std::invalid_argument("at most " + std::to_string(kMaxVariables) + " variables supported");
    return n;
  }

  static void check_same(const BasicPolynomial& a, const BasicPolynomial& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("polynomials over different variable lists");
  }

  static BasicPolynomial merge(const BasicPolynomial& a, const BasicPolynomial& b, bool subtract) {
    check_same(a, b);
    BasicPolynomial r(a.nvars_);
    r.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a.terms_[i].mono > b.terms_[j].mono)) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.size() || b.terms_[j].mono > a.terms_[i].mono) {
        r.terms_.push_back({b.terms_[j].mono, subtract ? C(-b.terms_[j].coeff) : b.terms_[j].coeff});
        ++j;
      } else {
        C c = subtract ? C(a.terms_[i].coeff - b.terms_[j].coeff) : C(a.terms_[i].coeff + b.terms_[j].coeff);
        if (!CoeffTraits<C>::is_zero(c)) r.terms_.push_back({a.terms_[i].mono, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;

  template <class D>
  friend BasicPolynomial<D> exact_divide(const BasicPolynomial<D>& a, const BasicPolynomial<D>& b);
};

// a / b when b divides a exactly; throws InexactDivision otherwise.
// Heap-based quotient construction: the remainder's next leading term is the
// largest of a's next unconsumed term and the pending products quotient_i*b_j.
template <class C>
BasicPolynomial<C> exact_divide(const BasicPolynomial<C>& a, const BasicPolynomial<C>& b) {
  using Poly = BasicPolynomial<C>;
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("polynomials over different variable lists");
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  Poly q(a.nvars_);
  if (a.is_zero()) return q;
  const auto& bt = b.terms_;
  const Monomial& lead = bt[0].mono;
  if (bt.size() == 1) {
    q.terms_.reserve(a.size());
    for (const auto& t : a.terms_) {
      if (!lead.divides(t.mono)) throw InexactDivision("inexact polynomial division");
      C c;
      if (!CoeffTraits<C>::try_divide(t.coeff, bt[0].coeff, c))
        throw InexactDivision("inexact coefficient division");
      q.terms_.push_back({lead.quotient_of(t.mono), std::move(c)});
    }
    return q;
  }

  struct Entry {
    Monomial mono;
    std::size_t qi;
    std::size_t bj;
  };
  auto less = [](const Entry& x, const Entry& y) { return x.mono < y.mono; };
  std::priority_queue<Entry, std::vector<Entry>, decltype(less)> heap(less);

  std::size_t ai = 0;
  C c, prod;
  while (ai < a.size() || !heap.empty()) {
    Monomial m;
    if (heap.empty() || (ai < a.size() && !(a.terms_[ai].mono < heap.top().mono))) {
      m = a.terms_[ai].mono;
    } else {
      m = heap.top().mono;
    }
    c = 0;
    if (ai < a.size() && a.terms_[ai].mono == m) c = a.terms_[ai++].coeff;
    while (!heap.empty() && heap.top().mono == m) {
      Entry e = heap.top();
      heap.pop();
      prod = q.terms_[e.qi].coeff * bt[e.bj].coeff;
      c -= prod;
      if (e.bj + 1 < bt.size()) heap.push({q.terms_[e.qi].mono * bt[e.bj + 1].mono, e.qi, e.bj + 1});
    }
    if (CoeffTraits<C>::is_zero(c)) continue;
    if (!lead.divides(m)) throw InexactDivision("inexact polynomial division");
    C qc;
    if (!CoeffTraits<C>::try_divide(c, bt[0].coeff, qc)) throw InexactDivision("inexact coefficient division");
    Monomial qm = lead.quotient_of(m);
    q.terms_.push_back({qm, std::move(qc)});
    heap.push({qm * bt[1].mono, q.terms_.size() - 1, 1});
  }
  return q;
}

using Polynomial = BasicPolynomial<Rational>;
using IntPolynomial = BasicPolynomial<Integer>;

// Clears denominators: returns (d, p*d) with p*d integral, d > 0 the lcm of
// the coefficient denominators.
inline std::pair<Integer, IntPolynomial> clear_denominators(const Polynomial& p) {
  Integer d = 1;
  for (const auto& t : p.terms()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), t.coeff.get_den_mpz_t());
  std::vector<IntPolynomial::Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) terms.push_back({t.mono, Integer(t.coeff.get_num() * (d / t.coeff.get_den()))});
  return {d, IntPolynomial::from_terms(p.num_variables(), std::move(terms))};
}

inline Polynomial to_rational(const IntPolynomial& p) {
  std::vector<Polynomial::Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) terms.push_back({t.mono, Rational(t.coeff)});
  return Polynomial::from_terms(p.num_variables(), std::move(terms));
}

}  // namespace matroid_id
