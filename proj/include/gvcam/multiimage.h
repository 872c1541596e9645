#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gvcam/cameras.h"
#include "gvcam/polynomial.h"

namespace gvcam {

using CameraRig = std::vector<GeometricCamera>;

struct CorrespondenceResult {
  bool accepted = false;
  std::optional<Point> point;
  // Max distance of the common point from the lines, or the largest violated
  // residual on rejection.
  double residual = 0;
  std::vector<double> congruence_residuals;
  // Name of the violated condition on rejection, e.g. "congruence[1]" or
  // "cubic[0][1][2][3]".
  std::string violated;
};

// Accepts iff every line lies in its camera's congruence and the lines are
// concurrent. Propagates AmbiguousPencil.
CorrespondenceResult Correspond(const CameraRig& rig,
                                const std::vector<Line>& lines,
                                double tol = kDefaultTolerance);

// Rational description of a linear camera for exact membership tests.
struct ExactLinearCamera {
  enum class Kind { kPinhole, kTwoSlit };
  Kind kind = Kind::kPinhole;
  ProjPoint<Rational> center;
  PlueckerLine<Rational> slit1;
  PlueckerLine<Rational> slit2;
};

// Exact variant of Correspond for pinhole and two-slit rigs: every congruence
// condition and concurrency generator must vanish identically. No point is
// reconstructed.
CorrespondenceResult CorrespondExact(
    const std::vector<ExactLinearCamera>& rig,
    const std::vector<PlueckerLine<Rational>>& lines);

struct Triangulation {
  Point point;
  // Smallest singular value of the stacked unit primal matrices.
  double residual = 0;
};

Triangulation Triangulate(const CameraRig& rig, const std::vector<Line>& lines);

// Zero iff q lies on the epipolar curve of p in the second camera.
double EpipolarResidual(const GeometricCamera& cam2, const Line& p,
                        const Line& q);

int EpipolarDegree(int beta2);
int BaselineCount(int beta1, int beta2);

struct Transversal {
  ComplexLine line;
  bool is_real = false;
  int multiplicity = 1;

  // Real part after dividing by the largest coordinate.
  Line RealLine() const;
};

// Lines meeting l1..l4; l1, l2, l3 must be pairwise skew.
std::vector<Transversal> CommonTransversals(const Line& l1, const Line& l2,
                                            const Line& l3, const Line& l4);

// Baselines of two cameras among pinhole, two-slit and pushbroom.
std::vector<Transversal> BaselinesLinear(const GeometricCamera& cam1,
                                         const GeometricCamera& cam2);

struct MultiImageGeneratorCounts {
  long long linear = 0;
  long long quadrics = 0;
  long long cubics = 0;
};

// n1 pinhole and n2 two-slit cameras.
MultiImageGeneratorCounts LinearGeneratorCounts(int n1, int n2);

// Advisory checks that the focal loci are pairwise disjoint.
std::vector<std::string> RigWarnings(const CameraRig& rig);

// Three two-slit cameras with coordinate slits {e0e1, e2e3}, {e1e3, e0e2},
// {e1e2, e0e3} and the binomials their multi-image variety satisfies
// (variables p.., q.., r.. for the three lines).
CameraRig CoordinateTwoSlitRig();
const std::vector<Polynomial>& CoordinateRigBinomials();

// Two Type3 cameras with conics X1 = V(x0, x1^2 + x2^2 - x3^2),
// L1 = V(x1, x2 - x3) and X2 = V(x0^2 - x1^2 + x2^2, x3), L2 = V(x0 - x1, x2).
std::array<Type3, 2> ConicType3Pair();
// Congruence ideals of the pair (variables p01..p23).
const std::vector<Polynomial>& ConicType3Ideal(int camera);

struct ConicPairBaselines {
  std::vector<Transversal> baselines;
  // Roots a of 5a^4 - 2a^2 + 1 parameterizing four of the baselines.
  std::vector<Complex> parameters;
  int real_count = 0;
};

ConicPairBaselines ConicType3PairBaselines();

}  // namespace gvcam
