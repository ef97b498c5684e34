#pragma once

#include <string>
#include <vector>

#include "seshadri/cxc_engine.hpp"
#include "seshadri/exact_arith.hpp"
#include "seshadri/ns_lattice.hpp"

namespace seshadri {

/// A class together with the multiplicities it is assumed to have at the
/// points it passes through. Multiplicities are positive and nonincreasing.
class CandidateCurve {
 public:
  /// Sorts `mults` nonincreasing. Throws std::invalid_argument if it is empty
  /// or holds a nonpositive entry.
  CandidateCurve(DivisorClass cls, std::vector<long> mults);

  const DivisorClass& cls() const { return cls_; }
  const std::vector<long>& mults() const { return mults_; }
  long max_mult() const { return mults_.front(); }
  long total_mult() const;

  friend bool operator==(const CandidateCurve&, const CandidateCurve&) = default;

 private:
  DivisorClass cls_;
  std::vector<long> mults_;
};

/// Abstract point configuration: each point is described only by the fiber
/// labels it lies on and whether it sits on the diagonal.
class PointConfig {
 public:
  struct Point {
    long f1_fiber;
    long f2_fiber;
    bool on_diagonal = false;
  };

  /// Throws std::invalid_argument for an empty list, repeated points, or two
  /// diagonal points on a common fiber (they would coincide).
  explicit PointConfig(std::vector<Point> points);

  /// n points on pairwise distinct fibers, none on the diagonal.
  static PointConfig very_general(long n);
  static PointConfig two_points(TwoPointConfig cfg);

  long size() const { return static_cast<long>(points_.size()); }
  const std::vector<Point>& points() const { return points_; }
  /// Largest number of points sharing one fiber of the given class.
  long max_on_fiber(Fiber f) const;
  long diagonal_count() const;

 private:
  std::vector<Point> points_;
};

struct KnownCurve {
  std::string name;  // "F1", "F2" or "delta"
  DivisorClass cls;
  Rational ratio;
};

struct Survivor {
  CandidateCurve curve;
  Rational ratio;
};

struct SearchReport {
  std::vector<Survivor> surviving;  // sorted by ratio, class, multiplicities
  std::vector<KnownCurve> known;
  Rational floor;
  long box_bound = 0;
  Rational threshold;
  /// True when the floor is the exact Seshadri constant: the polarization
  /// has a3 = 0 and the Bezout bound on non-fiber curves closes the part of
  /// the lattice outside the box.
  bool certified = false;
};

/// sum m_i^2 - min m_i, the lower bound on C^2 for a curve through very
/// general points with these multiplicities.
BigInt xu_floor(const std::vector<long>& mults);

/// sum m_i (m_i - 1)/2 <= p_a(C) and p_a(C) >= 0.
bool adjunction_filter(const CandidateCurve& c, const Genus& g);

/// C.F1 >= max m_i and C.F2 >= max m_i: every point lies on one fiber of each
/// class, and the curve is not that fiber.
bool bezout_filter(const CandidateCurve& c, const Genus& g);

/// Fibers (and the diagonal, when the configuration puts points on it) with
/// their ratio L.F / (points on one such curve).
std::vector<KnownCurve> known_curve_bounds(const DivisorClass& l, const Genus& g,
                                           const PointConfig& points);

/// Exhaustive scan of classes with |a_i| <= box and of multiplicity vectors
/// over at most points.size() points. A candidate survives when it passes
/// positivity against L, F1 and F2, the Hodge, Xu, adjunction and Bezout
/// filters, and has L.C / sum m_i < threshold.
///
/// Output does not depend on `threads`. Throws std::invalid_argument unless
/// ample_necessary(L, g), box >= 1 and threshold > 0.
SearchReport enumerate_candidates(const DivisorClass& l, const Genus& g,
                                  const PointConfig& points, long box,
                                  const Rational& threshold, unsigned threads = 0);

}  // namespace seshadri
