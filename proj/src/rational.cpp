#include "envycut/rational.hpp"

#include <cctype>
#include <ostream>

#include "envycut/errors.hpp"

namespace envycut {

Rational::Rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  auto bad = [&] { return SchemaError("malformed rational \"" + std::string(text) + "\" (expected \"p/q\" or \"p\")"); };
  if (text.empty()) throw bad();
  std::size_t slash = std::string_view::npos;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '/') {
      if (slash != std::string_view::npos) throw bad();
      slash = i;
    } else if (c == '-') {
      if (i != 0) throw bad();
    } else if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw bad();
    }
  }
  std::string_view num = slash == std::string_view::npos ? text : text.substr(0, slash);
  if (num.empty() || num == "-") throw bad();
  mpz_class n(std::string(num), 10);
  mpz_class d(1);
  if (slash != std::string_view::npos) {
    std::string_view den = text.substr(slash + 1);
    if (den.empty()) throw bad();
    d = mpz_class(std::string(den), 10);
    if (d == 0) throw SchemaError("rational \"" + std::string(text) + "\" has a zero denominator");
  }
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(std::move(q));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace envycut
