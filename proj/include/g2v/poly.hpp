#pragma once

#include "g2v/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace g2v {

// The eight ambient coordinates, in the fixed order x0..x3, y0..y3.
inline constexpr int kNumCoords = 8;
inline const char* coord_name(int i) {
  static const char* names[kNumCoords] = {"x0", "x1", "x2", "x3", "y0", "y1", "y2", "y3"};
  return names[i];
}

// Exponent vector with graded-lexicographic order (total degree first,
// then lex with x0 most significant). This order is the serialization
// order everywhere, so reports are deterministic.
struct Expo {
  std::array<uint8_t, kNumCoords> e{};

  int total() const {
    int t = 0;
    for (auto v : e) t += v;
    return t;
  }
  bool is_constant() const { return total() == 0; }

  friend bool operator==(const Expo& a, const Expo& b) { return a.e == b.e; }
  friend bool operator<(const Expo& a, const Expo& b) {
    int ta = a.total(), tb = b.total();
    if (ta != tb) return ta < tb;
    return a.e < b.e;  // lexicographic on the fixed coordinate order
  }
};

struct PolyBudgetExceeded : std::runtime_error {
  explicit PolyBudgetExceeded(size_t n)
      : std::runtime_error("polynomial term budget exceeded: " + std::to_string(n)) {}
};

// Sparse multivariate polynomial over Q in the eight coordinates.
// Invariant: no stored zero coefficients.
class Poly {
 public:
  using Terms = std::map<Expo, Rat>;

  Poly() = default;
  explicit Poly(const Rat& c) {
    if (!c.is_zero()) terms_[Expo{}] = c;
  }

  static Poly zero() { return Poly(); }
  static Poly constant(const Rat& c) { return Poly(c); }
  static Poly var(int coord, int power = 1) {
    Poly p;
    Expo x;
    x.e[coord] = static_cast<uint8_t>(power);
    p.terms_[x] = Rat(1);
    return p;
  }
  static Poly monomial(const Rat& c, const Expo& x) {
    Poly p;
    if (!c.is_zero()) p.terms_[x] = c;
    return p;
  }

  // Hard cap on stored terms; curvature squaring can blow up and we want a
  // loud failure instead of thrashing.
  static size_t& term_budget() {
    static size_t budget = 2000000;
    return budget;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  int degree() const {
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first.total();
  }

  // Leading term in grlex order.
  const std::pair<const Expo, Rat>& leading() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return *terms_.rbegin();
  }

  void add_term(const Expo& x, const Rat& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(x);
    if (it == terms_.end()) {
      terms_.emplace(x, c);
      check_budget();
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Poly operator-() const {
    Poly r;
    for (auto& [x, c] : terms_) r.terms_.emplace(x, -c);
    return r;
  }

  Poly& operator+=(const Poly& o) {
    for (auto& [x, c] : o.terms_) add_term(x, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (auto& [x, c] : o.terms_) add_term(x, -c);
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (auto& [xa, ca] : a.terms_) {
      for (auto& [xb, cb] : b.terms_) {
        Expo x;
        for (int i = 0; i < kNumCoords; ++i) {
          int s = xa.e[i] + xb.e[i];
          if (s > 255) throw std::overflow_error("monomial exponent overflow");
          x.e[i] = static_cast<uint8_t>(s);
        }
        r.add_term(x, ca * cb);
      }
    }
    return r;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator*(const Rat& s, const Poly& p) {
    Poly r;
    if (s.is_zero()) return r;
    for (auto& [x, c] : p.terms_) r.terms_.emplace(x, s * c);
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Formal partial derivative with respect to one coordinate.
  Poly deriv(int coord) const {
    Poly r;
    for (auto& [x, c] : terms_) {
      if (x.e[coord] == 0) continue;
      Expo d = x;
      d.e[coord] -= 1;
      r.add_term(d, Rat(static_cast<long>(x.e[coord])) * c);
    }
    return r;
  }

  // Evaluate over any commutative ring T that supports T+T, T*T, Rat*T and
  // has a T() zero. Used with Rat (points), Jet2 (derivatives), and RatFn
  // (composition).
  template <class T>
  T eval(const std::array<T, kNumCoords>& pt) const {
    // Per-coordinate power cache.
    std::array<std::vector<T>, kNumCoords> pows;
    T acc{};
    for (auto& [x, c] : terms_) {
      T term = ring_one<T>();
      bool first = true;
      for (int i = 0; i < kNumCoords; ++i) {
        if (x.e[i] == 0) continue;
        auto& cache = pows[i];
        if (cache.empty()) cache.push_back(pt[i]);
        while (cache.size() < x.e[i]) cache.push_back(cache.back() * pt[i]);
        const T& p = cache[x.e[i] - 1];
        term = first ? p : term * p;
        first = false;
      }
      if (first) {
        acc += c * ring_one<T>();
      } else {
        acc += c * term;
      }
    }
    return acc;
  }

  std::string str() const;

 private:
  template <class T>
  static T ring_one();

  void check_budget() const {
    if (terms_.size() > term_budget()) throw PolyBudgetExceeded(terms_.size());
  }

  Terms terms_;
};

template <>
inline Rat Poly::ring_one<Rat>() { return Rat(1); }

inline std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  // grlex order, ascending; deterministic.
  bool first = true;
  for (auto& [x, c] : terms_) {
    if (!first) out += c.is_negative() ? " - " : " + ";
    else if (c.is_negative()) out += "-";
    first = false;
    Rat a = c.abs();
    bool coef_one = a.is_one() && !x.is_constant();
    if (!coef_one) out += a.str();
    bool any = false;
    for (int i = 0; i < kNumCoords; ++i) {
      if (x.e[i] == 0) continue;
      if (any || !coef_one) out += "*";
      out += coord_name(i);
      if (x.e[i] > 1) out += "^" + std::to_string(int(x.e[i]));
      any = true;
    }
  }
  return out;
}

}  // namespace g2v
