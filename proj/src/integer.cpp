#include "rbd/integer.hpp"

#include <cctype>
#include <numeric>

#include "rbd/errors.hpp"

namespace rbd {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::NotSquare: return "NotSquare";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::KernelRankTooHigh: return "KernelRankTooHigh";
    case Errc::NoKernel: return "NoKernel";
    case Errc::NotATree: return "NotATree";
    case Errc::NotTreeForm: return "NotTreeForm";
    case Errc::NotNegativeDefinite: return "NotNegativeDefinite";
    case Errc::BadFraction: return "BadFraction";
    case Errc::BadSeifertInvariants: return "BadSeifertInvariants";
    case Errc::BadWeights: return "BadWeights";
    case Errc::BadLensSpace: return "BadLensSpace";
    case Errc::NotCharacteristic: return "NotCharacteristic";
    case Errc::OutsideInitialBox: return "OutsideInitialBox";
    case Errc::EmptyBox: return "EmptyBox";
    case Errc::NotSameClass: return "NotSameClass";
    case Errc::NegativeShift: return "NegativeShift";
    case Errc::NotAlternating: return "NotAlternating";
    case Errc::NotDefiniteEitherOrientation: return "NotDefiniteEitherOrientation";
    case Errc::NoSelfConjugateBase: return "NoSelfConjugateBase";
    case Errc::NotBlowDownable: return "NotBlowDownable";
    case Errc::Parse: return "Parse";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string format_tuple(const IntVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += v[i].get_str();
  }
  out += ')';
  return out;
}

Integer parse_integer(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string s(text.substr(b, e - b));
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  bool ok = !s.empty();
  for (std::size_t i = 0; i < s.size() && ok; ++i) {
    const bool sign = i == 0 && s[i] == '-' && s.size() > 1;
    ok = sign || std::isdigit(static_cast<unsigned char>(s[i]));
  }
  if (!ok) throw Error(Errc::Parse, "not an integer: '" + std::string(text) + "'");
  return Integer(s);
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw Error(Errc::Parse, "zero denominator: '" + std::string(text) + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

IntVector parse_tuple(std::string_view text) {
  std::string s(text);
  for (char& c : s)
    if (c == '(' || c == ')' || c == ',') c = ' ';
  IntVector out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(parse_integer(std::string_view(s).substr(i, j - i)));
    i = j;
  }
  return out;
}

IntVector make_vector(std::initializer_list<long> values) {
  IntVector out;
  out.reserve(values.size());
  for (long v : values) out.emplace_back(v);
  return out;
}

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "dot product");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer gcd_of(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

IntVector negated(const IntVector& v) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (r < 0) r += abs(m);
  return r;
}

}  // namespace rbd
