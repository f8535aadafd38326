#include "tropnet/rational.hpp"

#include <cctype>

namespace tropnet {

std::string rat_str(const Rat& r) {
  const BigInt num = numerator(r);
  const BigInt den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

static bool is_int_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Rat rat_parse(std::string_view s) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!is_int_token(s))
      fail(Errc::ParseError, "not a rational: '" + std::string(s) + "'");
    return Rat(BigInt(std::string(s)));
  }
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = s.substr(slash + 1);
  if (!is_int_token(num) || !is_int_token(den))
    fail(Errc::ParseError, "not a rational: '" + std::string(s) + "'");
  const BigInt d{std::string(den)};
  if (d == 0) fail(Errc::ParseError, "zero denominator: '" + std::string(s) + "'");
  return Rat(BigInt(std::string(num)), d);
}

Rat rat_from_double(double x) { return Rat(x); }

double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::VerticalEdge: return "VerticalEdge";
    case Errc::CrossingEdges: return "CrossingEdges";
    case Errc::VertexOutsideStrip: return "VertexOutsideStrip";
    case Errc::DuplicateId: return "DuplicateId";
    case Errc::RankMissing: return "RankMissing";
    case Errc::KOutOfRange: return "KOutOfRange";
    case Errc::NotComposable: return "NotComposable";
    case Errc::NOutOfRange: return "NOutOfRange";
    case Errc::ExplosionGuard: return "ExplosionGuard";
    case Errc::NonFiniteEntry: return "NonFiniteEntry";
    case Errc::NonZeroFirstColumn: return "NonZeroFirstColumn";
    case Errc::SingularSystem: return "SingularSystem";
    case Errc::TraceMismatch: return "TraceMismatch";
    case Errc::NTooLarge: return "NTooLarge";
    case Errc::TypeMismatch: return "TypeMismatch";
    case Errc::TripleContact: return "TripleContact";
    case Errc::InfeasibleColoring: return "InfeasibleColoring";
    case Errc::UnknownCell: return "UnknownCell";
    case Errc::UnknownRegion: return "UnknownRegion";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

}  // namespace tropnet
