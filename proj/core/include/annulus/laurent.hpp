#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>

namespace annulus {

using Integer = boost::multiprecision::cpp_int;
using Monomial = std::map<std::string, int>;  // variable -> non-zero exponent

class Laurent {
public:
  Laurent() = default;
  static Laurent constant(const Integer& c);
  static Laurent variable(const std::string& name);
  static Laurent monomial(const Monomial& m, const Integer& c = 1);
  // Grammar: integers, names, + - * / ( ) and ^n; every division must be exact.
  static Laurent parse(const std::string& text);

  const std::map<Monomial, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool positive() const;
  Monomial denominator() const;

  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator*(const Laurent& o) const;
  Laurent operator-() const;
  Laurent pow(int n) const;
  bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
  bool operator<(const Laurent& o) const { return terms_ < o.terms_; }

  // Exact quotient; throws NotLaurent when the quotient is not a Laurent polynomial.
  static Laurent divide(const Laurent& num, const Laurent& den);

  std::string to_string() const;

private:
  std::map<Monomial, Integer> terms_;
  void add_term(const Monomial& m, const Integer& c);
};

}  // namespace annulus
