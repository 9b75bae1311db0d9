#include "lorentz3/classifier.hpp"

#include "lorentz3/errors.hpp"

namespace lorentz3 {

namespace {

const Rational kParabolicB{-1, 4};

bool unimodular(SpaceTag t) {
  return t == SpaceTag::MinkowskiFlat || t == SpaceTag::CahenWallachHyperbolic ||
         t == SpaceTag::CahenWallachElliptic;
}

}  // namespace

std::string to_string(SpaceTag t) {
  switch (t) {
    case SpaceTag::MinkowskiFlat: return "MinkowskiFlat";
    case SpaceTag::HalfMinkowskiFlat: return "HalfMinkowskiFlat";
    case SpaceTag::CahenWallachHyperbolic: return "CahenWallachHyperbolic";
    case SpaceTag::CahenWallachElliptic: return "CahenWallachElliptic";
    case SpaceTag::NonUnimodularHyperbolic: return "NonUnimodularHyperbolic";
    case SpaceTag::NonUnimodularElliptic: return "NonUnimodularElliptic";
    case SpaceTag::NonUnimodularParabolic: return "NonUnimodularParabolic";
  }
  return "unknown";
}

SpaceTag parse_space_tag(const std::string& name) {
  static const std::vector<std::pair<std::string, SpaceTag>> aliases{
      {"minkowski", SpaceTag::MinkowskiFlat},
      {"half-minkowski", SpaceTag::HalfMinkowskiFlat},
      {"cw-hyperbolic", SpaceTag::CahenWallachHyperbolic},
      {"cw-elliptic", SpaceTag::CahenWallachElliptic},
  };
  for (const auto& [alias, tag] : aliases)
    if (name == alias) return tag;
  for (SpaceTag t : {SpaceTag::MinkowskiFlat, SpaceTag::HalfMinkowskiFlat, SpaceTag::CahenWallachHyperbolic,
                     SpaceTag::CahenWallachElliptic, SpaceTag::NonUnimodularHyperbolic,
                     SpaceTag::NonUnimodularElliptic, SpaceTag::NonUnimodularParabolic}) {
    if (name == to_string(t)) return t;
  }
  throw ParseError("unknown space class '" + name + "'");
}

ChartPtr ChartSpec::make() const {
  const double p = to_double(parameter);
  if (profile == PlaneWaveChart::Profile::PowerLaw) return PlaneWaveChart::power_law(p);
  return PlaneWaveChart::constant(p);
}

std::string ChartSpec::descriptor() const {
  return std::string(profile == PlaneWaveChart::Profile::PowerLaw ? "PowerLaw(b=" : "Constant(h=") +
         to_string(parameter) + ")";
}

Rational invariant_b(const Derivation& a) {
  const QuotientSpectrum s = spectrum_on_quotient(a);
  if (s.trace == 0) throw UnimodularInput("b is defined only for tr of the quotient action != 0");
  return -s.det / (s.trace * s.trace);
}

SpaceClass classify(const Derivation& a) {
  const QuotientSpectrum s = spectrum_on_quotient(a);
  if (s.scalar) {
    throw NoInvariantMetric("quotient action is a homothety; no isotropy choice admits a Lorentz metric");
  }
  if (s.trace == 0) {
    if (s.type == SpectrumType::NilpotentNonzero) return {SpaceTag::MinkowskiFlat, std::nullopt};
    if (s.discriminant > 0) return {SpaceTag::CahenWallachHyperbolic, std::nullopt};
    return {SpaceTag::CahenWallachElliptic, std::nullopt};
  }
  const Rational b = invariant_b(a);
  if (b == 0) return {SpaceTag::HalfMinkowskiFlat, b};
  if (b < kParabolicB) return {SpaceTag::NonUnimodularElliptic, b};
  if (b == kParabolicB) return {SpaceTag::NonUnimodularParabolic, b};
  return {SpaceTag::NonUnimodularHyperbolic, b};
}

bool groups_isomorphic(const Derivation& a1, const Derivation& a2) {
  const SpaceClass c1 = classify(a1), c2 = classify(a2);
  const bool u1 = unimodular(c1.tag), u2 = unimodular(c2.tag);
  if (u1 != u2) return false;
  if (u1) return c1.tag == c2.tag;
  return *c1.b == *c2.b;
}

ChartSpec brinkmann_chart_for(const SpaceClass& c) {
  switch (c.tag) {
    case SpaceTag::MinkowskiFlat: return {PlaneWaveChart::Profile::Constant, 0};
    case SpaceTag::CahenWallachHyperbolic: return {PlaneWaveChart::Profile::Constant, 1};
    case SpaceTag::CahenWallachElliptic: return {PlaneWaveChart::Profile::Constant, -1};
    default: return {PlaneWaveChart::Profile::PowerLaw, *c.b};
  }
}

Derivation representative_derivation(SpaceTag tag) {
  RationalMatrix3 m = zero3();
  switch (tag) {
    case SpaceTag::MinkowskiFlat:
      m[kX][kY] = 1;
      return Derivation(m);
    case SpaceTag::CahenWallachHyperbolic:
      m[kX][kX] = 1;
      m[kY][kY] = -1;
      return Derivation(m);
    case SpaceTag::CahenWallachElliptic:
      m[kX][kY] = -1;
      m[kY][kX] = 1;
      return Derivation(m);
    case SpaceTag::HalfMinkowskiFlat:
      return canonical_derivation(0);
    case SpaceTag::NonUnimodularParabolic:
      return canonical_derivation(kParabolicB);
    default:
      throw ParseError("class " + to_string(tag) + " needs an explicit b");
  }
}

SpaceReport space_report(const Derivation& a) {
  SpaceReport r;
  r.space_class = classify(a);
  r.b = r.space_class.b;
  r.spectrum = spectrum_on_quotient(a);
  const SpaceTag tag = r.space_class.tag;
  r.symmetric = unimodular(tag);
  r.flat = tag == SpaceTag::MinkowskiFlat || tag == SpaceTag::HalfMinkowskiFlat;
  r.locally_symmetric = r.symmetric || tag == SpaceTag::HalfMinkowskiFlat;
  r.complete = r.symmetric;
  r.compact_model = tag == SpaceTag::MinkowskiFlat || (r.b && *r.b == 2);
  r.transverse_3d_group = has_transverse_subalgebra(a);
  r.brinkmann_chart = brinkmann_chart_for(r.space_class);
  if (!r.symmetric) {
    const CanonicalForm cf = normalize_to_canonical(a);
    r.canonical = cf.canonical;
    r.orientation_sign = cf.orientation_sign;
  }
  r.isotropy = default_isotropy(a);
  r.metric = build_invariant_metric(a, r.isotropy);

  switch (tag) {
    case SpaceTag::MinkowskiFlat:
      r.isometry_group_note = "flat Minkowski space; compact flat quotients (tori) exist";
      break;
    case SpaceTag::HalfMinkowskiFlat:
      r.isometry_group_note =
          "flat but incomplete half of Minkowski space; no compact model for this homogeneous structure";
      break;
    case SpaceTag::CahenWallachHyperbolic:
    case SpaceTag::CahenWallachElliptic:
      r.isometry_group_note = "Cahen-Wallach symmetric space; solvable isometry group, no compact quotients";
      break;
    default:
      r.isometry_group_note =
          r.compact_model ? "isometry group contains a copy of SOL; lattices in SOL give compact models"
                          : "non-symmetric plane wave; no compact model";
      break;
  }

  r.citations = {
      {"symmetric", "unimodular extensions give globally symmetric spaces (Minkowski or Cahen-Wallach)"},
      {"locally_symmetric", "a non-unimodular plane wave is locally symmetric only in the flat case b = 0"},
      {"flat", "constant curvature occurs only when flat: unipotent unimodular data or b = 0"},
      {"complete", "these plane waves are geodesically complete exactly when symmetric"},
      {"compact_model", "flat Minkowski space and b = 2 (SOL lattices) are the only ones with compact models"},
      {"transverse_3d_group",
       "a 3-dimensional subgroup transverse to the isotropy exists iff the quotient action has a real eigenvector"},
  };
  return r;
}

}  // namespace lorentz3
