#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lorentz3/charts.hpp"
#include "lorentz3/lie_core.hpp"
#include "lorentz3/metric_builder.hpp"

namespace lorentz3 {

enum class SpaceTag {
  MinkowskiFlat,
  HalfMinkowskiFlat,
  CahenWallachHyperbolic,
  CahenWallachElliptic,
  NonUnimodularHyperbolic,
  NonUnimodularElliptic,
  NonUnimodularParabolic,
};

std::string to_string(SpaceTag t);
// Inverse of to_string; also accepts the short CLI aliases
// minkowski, half-minkowski, cw-hyperbolic, cw-elliptic. Throws ParseError.
SpaceTag parse_space_tag(const std::string& name);

struct SpaceClass {
  SpaceTag tag = SpaceTag::MinkowskiFlat;
  std::optional<Rational> b;

  friend bool operator==(const SpaceClass&, const SpaceClass&) = default;
};

// Brinkmann model: Constant(h) or PowerLaw(b).
struct ChartSpec {
  PlaneWaveChart::Profile profile = PlaneWaveChart::Profile::Constant;
  Rational parameter{0};

  ChartPtr make() const;
  std::string descriptor() const;
};

struct Citation {
  std::string flag;
  std::string fact;
};

struct SpaceReport {
  SpaceClass space_class;
  std::optional<Rational> b;
  bool symmetric = false;
  bool locally_symmetric = false;
  bool flat = false;
  bool complete = false;
  bool compact_model = false;
  bool transverse_3d_group = false;
  ChartSpec brinkmann_chart;
  std::string isometry_group_note;
  std::vector<Citation> citations;

  QuotientSpectrum spectrum;
  // Sign of tr(Ā); 0 on the unimodular branch.
  int orientation_sign = 0;
  std::optional<Derivation> canonical;
  IsotropyChoice isotropy{0, 1, 0};
  InvariantMetric metric;
};

// b = −det of the quotient block after scaling A by 1/tr(Ā).
// Throws UnimodularInput when tr(Ā) = 0.
Rational invariant_b(const Derivation& a);

// Throws NoInvariantMetric when Ā is scalar (including Ā = 0).
SpaceClass classify(const Derivation& a);

bool groups_isomorphic(const Derivation& a1, const Derivation& a2);

SpaceReport space_report(const Derivation& a);

// Representative derivations for the unimodular classes.
Derivation representative_derivation(SpaceTag tag);

ChartSpec brinkmann_chart_for(const SpaceClass& c);

}  // namespace lorentz3
