#include "curvesos/rational.hpp"

#include <cmath>

#include "curvesos/error.hpp"

namespace curvesos {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::EndpointIsRoot: return "EndpointIsRoot";
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::NotHomogeneousDegree2: return "NotHomogeneousDegree2";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::CommonComponent: return "CommonComponent";
    case ErrorCode::UnresolvedPoint: return "UnresolvedPoint";
    case ErrorCode::PointNotOnCurve: return "PointNotOnCurve";
    case ErrorCode::IrrationalPoint: return "IrrationalPoint";
    case ErrorCode::ConstantFactor: return "ConstantFactor";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::UnknownAdjacency: return "UnknownAdjacency";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotPsd: return "NotPsd";
    case ErrorCode::NumericFailure: return "NumericFailure";
    case ErrorCode::ValueMismatch: return "ValueMismatch";
    case ErrorCode::NotPsdOnComponent: return "NotPsdOnComponent";
    case ErrorCode::Inconclusive: return "Inconclusive";
    case ErrorCode::ValueNormMismatch: return "ValueNormMismatch";
    case ErrorCode::IrrationalAttachment: return "IrrationalAttachment";
    case ErrorCode::NoRationalAbscissa: return "NoRationalAbscissa";
    case ErrorCode::NoLinearMultiplier: return "NoLinearMultiplier";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::UnsupportedComponent: return "UnsupportedComponent";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::RationalizationFailed: return "RationalizationFailed";
    case ErrorCode::CompactSet: return "CompactSet";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::UnsupportedComponentKind: return "UnsupportedComponentKind";
    case ErrorCode::FibreNotCurve: return "FibreNotCurve";
    case ErrorCode::Refused: return "Refused";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view s) {
  std::string_view body = s;
  bool neg = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    neg = body[0] == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    fail(ErrorCode::ParseError, "malformed rational '" + std::string(s) + "'");
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) fail(ErrorCode::ParseError, "zero denominator in '" + std::string(s) + "'");
  Rational q(n, d);
  q.canonicalize();
  if (neg) q = -q;
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Integer isqrt(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const Integer& n = q.get_num();
  const Integer& d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
    return std::nullopt;
  Rational r(isqrt(n), isqrt(d));
  r.canonicalize();
  return r;
}

Rational exact_from_double(double x) {
  Rational q(x);
  return q;
}

double to_double(const Rational& q) { return q.get_d(); }

Rational rational_abs(const Rational& q) { return sgn(q) < 0 ? Rational(-q) : q; }

Rational rationalize(double x, const Integer& max_den) {
  if (!std::isfinite(x)) fail(ErrorCode::NumericFailure, "cannot rationalize non-finite value");
  // Continued fraction on the exact binary value, stopped at the denominator cap.
  Rational v = exact_from_double(x);
  Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  Rational rest = v;
  for (int it = 0; it < 200; ++it) {
    Integer a;
    mpz_fdiv_q(a.get_mpz_t(), rest.get_num_mpz_t(), rest.get_den_mpz_t());
    Integer p2 = a * p1 + p0;
    Integer q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    Rational frac = rest - Rational(a);
    if (sgn(frac) == 0) break;
    rest = 1 / frac;
  }
  if (q1 == 0) return Rational(p1 > 0 ? 0 : 0);
  Rational r(p1, q1);
  r.canonicalize();
  return r;
}

}  // namespace curvesos
