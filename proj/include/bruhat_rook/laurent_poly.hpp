#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "bruhat_rook/error.hpp"

namespace bruhat_rook {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {

inline bool is_decimal_literal(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && s[i] == '-') ++i;
  if (i >= s.size()) return false;
  if (s[i] == '0' && i + 1 != s.size()) return false;  // no leading zeros
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return s != "-0";
}

inline BigInt parse_bigint(const std::string& s) {
  if (!is_decimal_literal(s)) throw ParseError("not a decimal integer: \"" + s + "\"");
  return BigInt(s);
}

}  // namespace detail

/// Integer Laurent polynomial in one variable q.
///
/// Stored as a dense coefficient run starting at min_exp(). The run never has
/// a zero at either end, and the zero polynomial has an empty run, so two
/// polynomials are equal exactly when their representations are.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int constant) : LaurentPoly(BigInt(constant)) {}  // NOLINT: implicit
  LaurentPoly(BigInt constant) {                                // NOLINT: implicit
    if (constant != 0) coeffs_.push_back(std::move(constant));
  }

  // Coefficients of q^min_exp, q^(min_exp+1), ...; normalizes.
  LaurentPoly(int min_exp, std::vector<BigInt> coeffs)
      : min_exp_(min_exp), coeffs_(std::move(coeffs)) {
    normalize();
  }
  LaurentPoly(int min_exp, std::initializer_list<int> coeffs) : min_exp_(min_exp) {
    coeffs_.reserve(coeffs.size());
    for (int c : coeffs) coeffs_.emplace_back(c);
    normalize();
  }

  static LaurentPoly monomial(int exponent, BigInt coefficient = 1) {
    return LaurentPoly(exponent, std::vector<BigInt>{std::move(coefficient)});
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  // Exponent range of the support; both are 0 for the zero polynomial.
  int min_exp() const noexcept { return min_exp_; }
  int max_exp() const noexcept {
    return is_zero() ? 0 : min_exp_ + static_cast<int>(coeffs_.size()) - 1;
  }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

  BigInt coeff(int exponent) const {
    if (is_zero() || exponent < min_exp_ || exponent > max_exp()) return 0;
    return coeffs_[static_cast<std::size_t>(exponent - min_exp_)];
  }

  bool is_ordinary() const noexcept { return is_zero() || min_exp_ >= 0; }

  // Multiplication by q^s.
  LaurentPoly shifted(int s) const {
    LaurentPoly r = *this;
    if (!r.is_zero()) r.min_exp_ += s;
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) { return add_scaled(o, 1); }
  LaurentPoly& operator-=(const LaurentPoly& o) { return add_scaled(o, -1); }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(LaurentPoly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return LaurentPoly(a.min_exp_ + b.min_exp_, std::move(r));
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.min_exp_ == b.min_exp_ && a.coeffs_ == b.coeffs_;
  }

  // Human-readable form such as "1 + 3q + 5q^2 - q^-1".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const BigInt& c = coeffs_[i];
      if (c == 0) continue;
      const int e = min_exp_ + static_cast<int>(i);
      BigInt mag = c < 0 ? BigInt(-c) : c;
      if (first) {
        if (c < 0) os << '-';
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (e == 0 || mag != 1) os << mag;
      if (e != 0) {
        os << 'q';
        if (e != 1) os << '^' << e;
      }
    }
    return os.str();
  }

 private:
  LaurentPoly& add_scaled(const LaurentPoly& o, int sign) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
      *this = o;
      if (sign < 0) *this = -*this;
      return *this;
    }
    const int lo = std::min(min_exp_, o.min_exp_);
    const int hi = std::max(max_exp(), o.max_exp());
    std::vector<BigInt> r(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      r[static_cast<std::size_t>(min_exp_ - lo) + i] = std::move(coeffs_[i]);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
      auto& slot = r[static_cast<std::size_t>(o.min_exp_ - lo) + i];
      if (sign > 0) slot += o.coeffs_[i];
      else slot -= o.coeffs_[i];
    }
    min_exp_ = lo;
    coeffs_ = std::move(r);
    normalize();
    return *this;
  }

  void normalize() {
    auto back = coeffs_.end();
    while (back != coeffs_.begin() && *(back - 1) == 0) --back;
    coeffs_.erase(back, coeffs_.end());
    auto front = std::find_if(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c != 0; });
    min_exp_ += static_cast<int>(front - coeffs_.begin());
    coeffs_.erase(coeffs_.begin(), front);
    if (coeffs_.empty()) min_exp_ = 0;
  }

  int min_exp_ = 0;
  std::vector<BigInt> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

inline BigInt evaluate_at_one(const LaurentPoly& p) {
  BigInt s = 0;
  for (const auto& c : p.coeffs()) s += c;
  return s;
}

// p(q^power). power = -1 is the q -> 1/q substitution, power = 2 doubles
// every exponent.
inline LaurentPoly substitute_q_power(const LaurentPoly& p, int power) {
  if (power == 0) return LaurentPoly(evaluate_at_one(p));
  LaurentPoly r;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (p.coeffs()[i] == 0) continue;
    r += LaurentPoly::monomial((p.min_exp() + static_cast<int>(i)) * power, p.coeffs()[i]);
  }
  return r;
}

inline LaurentPoly substitute_q_inverse(const LaurentPoly& p) {
  std::vector<BigInt> rev(p.coeffs().rbegin(), p.coeffs().rend());
  return LaurentPoly(-p.max_exp(), std::move(rev));
}

// {"min_exp": e, "coeffs": ["c_e", ...]}; zero is {"min_exp": 0, "coeffs": ["0"]}.
// Works with nlohmann::json and nlohmann::ordered_json; the latter keeps the
// key order above.
template <class Json>
void to_json(Json& j, const LaurentPoly& p) {
  Json coeffs = Json::array();
  if (p.is_zero()) {
    coeffs.push_back("0");
  } else {
    for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
  }
  j = Json{{"min_exp", p.min_exp()}, {"coeffs", std::move(coeffs)}};
}

template <class Json>
void from_json(const Json& j, LaurentPoly& p) {
  if (!j.is_object() || !j.contains("min_exp") || !j.contains("coeffs"))
    throw ParseError("polynomial JSON must be an object with min_exp and coeffs");
  const auto& e = j.at("min_exp");
  const auto& cs = j.at("coeffs");
  if (!e.is_number_integer()) throw ParseError("min_exp must be an integer");
  if (!cs.is_array() || cs.empty()) throw ParseError("coeffs must be a nonempty array");
  std::vector<BigInt> coeffs;
  coeffs.reserve(cs.size());
  for (const auto& c : cs) {
    if (!c.is_string()) throw ParseError("coefficients must be decimal strings");
    coeffs.push_back(detail::parse_bigint(c.template get<std::string>()));
  }
  const int min_exp = e.template get<int>();
  if (coeffs.size() == 1 && coeffs[0] == 0) {
    if (min_exp != 0) throw ParseError("zero polynomial must have min_exp 0");
    p = LaurentPoly();
    return;
  }
  if (coeffs.front() == 0 || coeffs.back() == 0)
    throw ParseError("leading or trailing zero coefficients are not allowed");
  p = LaurentPoly(min_exp, std::move(coeffs));
}

inline std::string to_json_string(const LaurentPoly& p) { return nlohmann::ordered_json(p).dump(); }

inline LaurentPoly laurent_from_json_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return j.get<LaurentPoly>();
}

/// Polynomial in t whose coefficients are Laurent polynomials in q.
/// Only nonnegative powers of t occur; trailing zero coefficients are trimmed.
class BiPoly {
 public:
  BiPoly() = default;
  BiPoly(LaurentPoly constant) {  // NOLINT: implicit
    if (!constant.is_zero()) terms_.push_back(std::move(constant));
  }

  static BiPoly monomial(int q_exp, int t_exp, BigInt coefficient = 1) {
    if (t_exp < 0) throw RangeError("negative t exponent");
    BiPoly r;
    r.terms_.resize(static_cast<std::size_t>(t_exp) + 1);
    r.terms_.back() = LaurentPoly::monomial(q_exp, std::move(coefficient));
    r.trim();
    return r;
  }

  // q-polynomial multiplied by t^t_exp.
  static BiPoly with_t_power(LaurentPoly q_part, int t_exp) {
    if (t_exp < 0) throw RangeError("negative t exponent");
    BiPoly r;
    r.terms_.resize(static_cast<std::size_t>(t_exp) + 1);
    r.terms_.back() = std::move(q_part);
    r.trim();
    return r;
  }

  bool is_zero() const noexcept { return terms_.empty(); }
  int t_degree() const noexcept { return static_cast<int>(terms_.size()) - 1; }
  const std::vector<LaurentPoly>& terms() const noexcept { return terms_; }

  LaurentPoly coeff(int t_exp) const {
    if (t_exp < 0 || t_exp > t_degree()) return {};
    return terms_[static_cast<std::size_t>(t_exp)];
  }

  BiPoly& operator+=(const BiPoly& o) {
    if (o.terms_.size() > terms_.size()) terms_.resize(o.terms_.size());
    for (std::size_t i = 0; i < o.terms_.size(); ++i) terms_[i] += o.terms_[i];
    trim();
    return *this;
  }
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    BiPoly r;
    r.terms_.resize(a.terms_.size() + b.terms_.size() - 1);
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      for (std::size_t j = 0; j < b.terms_.size(); ++j) r.terms_[i + j] += a.terms_[i] * b.terms_[j];
    r.trim();
    return r;
  }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

  // Applies f to every q-coefficient.
  template <class F>
  BiPoly map_q(F&& f) const {
    BiPoly r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back(f(t));
    r.trim();
    return r;
  }

  // t^n * P(1/t); requires n >= t_degree().
  BiPoly reversed_t(int n) const {
    if (n < t_degree()) throw RangeError("reversal degree below t-degree");
    BiPoly r;
    if (is_zero()) return r;
    r.terms_.resize(static_cast<std::size_t>(n) + 1);
    for (std::size_t i = 0; i < terms_.size(); ++i) r.terms_[static_cast<std::size_t>(n) - i] = terms_[i];
    r.trim();
    return r;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (terms_[i].is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += "(" + terms_[i].to_string() + ")";
      if (i > 0) s += i == 1 ? "t" : "t^" + std::to_string(i);
    }
    return s;
  }

 private:
  void trim() {
    while (!terms_.empty() && terms_.back().is_zero()) terms_.pop_back();
  }

  std::vector<LaurentPoly> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const BiPoly& p) { return os << p.to_string(); }

// {"t_terms": [{"t": i, "q": <polynomial>}, ...]} listing nonzero terms by increasing t.
inline void to_json(nlohmann::json& j, const BiPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (std::size_t i = 0; i < p.terms().size(); ++i) {
    if (p.terms()[i].is_zero()) continue;
    terms.push_back({{"t", i}, {"q", p.terms()[i]}});
  }
  j = nlohmann::json{{"t_terms", std::move(terms)}};
}

}  // namespace bruhat_rook
