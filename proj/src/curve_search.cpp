#include "seshadri/curve_search.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>
#include <utility>

namespace seshadri {

CandidateCurve::CandidateCurve(DivisorClass cls, std::vector<long> mults)
    : cls_(std::move(cls)), mults_(std::move(mults)) {
  if (mults_.empty()) throw std::invalid_argument("candidate curve needs at least one point");
  for (long m : mults_) {
    if (m < 1) throw std::invalid_argument("multiplicities must be >= 1");
  }
  std::sort(mults_.begin(), mults_.end(), std::greater<>());
}

long CandidateCurve::total_mult() const {
  return std::accumulate(mults_.begin(), mults_.end(), 0L);
}

PointConfig::PointConfig(std::vector<Point> points) : points_(std::move(points)) {
  if (points_.empty()) throw std::invalid_argument("point configuration is empty");
  std::set<std::pair<long, long>> seen;
  std::set<long> diagonal_f1;
  std::set<long> diagonal_f2;
  for (const auto& p : points_) {
    if (!seen.emplace(p.f1_fiber, p.f2_fiber).second) {
      throw std::invalid_argument("point configuration repeats a point");
    }
    // Diagonal points are (x, x): sharing either fiber means sharing both.
    if (p.on_diagonal && (!diagonal_f1.insert(p.f1_fiber).second ||
                          !diagonal_f2.insert(p.f2_fiber).second)) {
      throw std::invalid_argument("two diagonal points share a fiber");
    }
  }
}

PointConfig PointConfig::very_general(long n) {
  if (n < 1) throw std::invalid_argument("need at least one point");
  std::vector<Point> pts;
  for (long i = 0; i < n; ++i) pts.push_back({i, i});
  return PointConfig(std::move(pts));
}

PointConfig PointConfig::two_points(TwoPointConfig cfg) {
  switch (cfg) {
    case TwoPointConfig::SameFiberF1:
      return PointConfig({{0, 0}, {0, 1}});
    case TwoPointConfig::SameFiberF2:
      return PointConfig({{0, 0}, {1, 0}});
    case TwoPointConfig::General:
      break;
  }
  return PointConfig({{0, 0}, {1, 1}});
}

long PointConfig::max_on_fiber(Fiber f) const {
  std::map<long, long> counts;
  long best = 0;
  for (const auto& p : points_) {
    best = std::max(best, ++counts[f == Fiber::F1 ? p.f1_fiber : p.f2_fiber]);
  }
  return best;
}

long PointConfig::diagonal_count() const {
  return std::count_if(points_.begin(), points_.end(),
                       [](const Point& p) { return p.on_diagonal; });
}

BigInt xu_floor(const std::vector<long>& mults) {
  if (mults.empty()) throw std::invalid_argument("xu_floor needs at least one multiplicity");
  BigInt sum_sq = 0;
  for (long m : mults) sum_sq += BigInt(m) * m;
  return sum_sq - *std::min_element(mults.begin(), mults.end());
}

bool adjunction_filter(const CandidateCurve& c, const Genus& g) {
  Rational pa = arithmetic_genus(c.cls(), g);
  BigInt twice_delta = 0;
  for (long m : c.mults()) twice_delta += BigInt(m) * (m - 1);
  return pa.sign() >= 0 && Rational(twice_delta, 2) <= pa;
}

bool bezout_filter(const CandidateCurve& c, const Genus& g) {
  BigInt top = c.max_mult();
  return intersect(c.cls(), DivisorClass::fiber1(), g) >= top &&
         intersect(c.cls(), DivisorClass::fiber2(), g) >= top;
}

std::vector<KnownCurve> known_curve_bounds(const DivisorClass& l, const Genus& g,
                                           const PointConfig& points) {
  if (!ample_necessary(l, g)) {
    throw std::invalid_argument("class " + l.to_string() + " fails the ampleness conditions");
  }
  std::vector<KnownCurve> out;
  out.push_back({"F1", DivisorClass::fiber1(),
                 Rational(intersect(l, DivisorClass::fiber1(), g), points.max_on_fiber(Fiber::F1))});
  out.push_back({"F2", DivisorClass::fiber2(),
                 Rational(intersect(l, DivisorClass::fiber2(), g), points.max_on_fiber(Fiber::F2))});
  if (long on_diag = points.diagonal_count(); on_diag > 0) {
    out.push_back({"delta", DivisorClass::diagonal(),
                   Rational(intersect(l, DivisorClass::diagonal(), g), on_diag)});
  }
  return out;
}

namespace {

struct ClassData {
  DivisorClass cls;
  BigInt lc;          // L.C
  BigInt self;        // C^2
  BigInt twice_pa;    // 2 p_a(C)
  long bezout_cap;    // min(C.F1, C.F2)
};

bool survivor_less(const Survivor& x, const Survivor& y) {
  if (auto c = x.ratio <=> y.ratio; c != 0) return c < 0;
  if (auto c = x.curve.cls() <=> y.curve.cls(); c != 0) return c < 0;
  return x.curve.mults() < y.curve.mults();
}

class SliceScanner {
 public:
  SliceScanner(const DivisorClass& l, const Genus& g, long npoints, const Rational& threshold)
      : l_(l), g_(g), npoints_(npoints), threshold_(threshold) {}

  void scan_class(const DivisorClass& cls, std::vector<Survivor>& out) {
    if (cls.a3 == 0 && ((cls.a1 > 0 && cls.a2 == 0) || (cls.a1 == 0 && cls.a2 > 0))) {
      return;  // multiples of a fiber are known curves
    }
    ClassData data{cls, intersect(l_, cls, g_), self_int(cls, g_), 0, 0};
    if (data.lc <= 0) return;
    BigInt cf1 = intersect(cls, DivisorClass::fiber1(), g_);
    BigInt cf2 = intersect(cls, DivisorClass::fiber2(), g_);
    if (cf1 < 0 || cf2 < 0) return;
    if (hodge_gap(l_, cls, g_) < 0) return;
    data.twice_pa = 2 + data.self + intersect(canonical_class(g_), cls, g_);
    if (data.twice_pa < 0) return;
    BigInt cap = cf1 < cf2 ? cf1 : cf2;
    if (cap < 1) return;
    data.bezout_cap = cap.get_si();
    std::vector<long> mults;
    extend(data, mults, BigInt(0), BigInt(0), out);
  }

 private:
  // Grows nonincreasing multiplicity vectors. `sum_sq` is sum m_i^2 and
  // `delta2` is sum m_i (m_i - 1); both only grow, so exceeding the Xu or
  // adjunction bound prunes the subtree.
  void extend(const ClassData& data, std::vector<long>& mults, const BigInt& sum_sq,
              const BigInt& delta2, std::vector<Survivor>& out) {
    if (!mults.empty()) consider(data, mults, out);
    if (static_cast<long>(mults.size()) == npoints_) return;
    long top = mults.empty() ? data.bezout_cap : mults.back();
    for (long m = top; m >= 1; --m) {
      BigInt next_sq = sum_sq + BigInt(m) * m;
      BigInt next_delta = delta2 + BigInt(m) * (m - 1);
      if (next_delta > data.twice_pa) continue;
      if (next_sq - m > data.self) continue;
      mults.push_back(m);
      extend(data, mults, next_sq, next_delta, out);
      mults.pop_back();
    }
  }

  void consider(const ClassData& data, const std::vector<long>& mults,
                std::vector<Survivor>& out) {
    long total = std::accumulate(mults.begin(), mults.end(), 0L);
    Rational ratio(data.lc, total);
    if (!(ratio < threshold_)) return;
    CandidateCurve curve(data.cls, mults);
    if (xu_floor(curve.mults()) > data.self) return;
    if (!adjunction_filter(curve, g_)) return;
    if (!bezout_filter(curve, g_)) return;
    out.push_back({std::move(curve), std::move(ratio)});
  }

  const DivisorClass& l_;
  const Genus& g_;
  long npoints_;
  const Rational& threshold_;
};

}  // namespace

SearchReport enumerate_candidates(const DivisorClass& l, const Genus& g,
                                  const PointConfig& points, long box,
                                  const Rational& threshold, unsigned threads) {
  if (!ample_necessary(l, g)) {
    throw std::invalid_argument("class " + l.to_string() + " fails the ampleness conditions");
  }
  if (box < 1) throw std::invalid_argument("search box must be >= 1");
  if (threshold.sign() <= 0) throw std::invalid_argument("threshold must be positive");

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const long width = 2 * box + 1;
  threads = static_cast<unsigned>(std::min<long>(threads, width));

  // Slice t owns every a1 with (a1 + box) % threads == t.
  std::vector<std::vector<Survivor>> slices(threads);
  auto work = [&](unsigned t) {
    SliceScanner scanner(l, g, points.size(), threshold);
    for (long a1 = -box + static_cast<long>(t); a1 <= box; a1 += threads) {
      for (long a2 = -box; a2 <= box; ++a2) {
        for (long a3 = -box; a3 <= box; ++a3) {
          scanner.scan_class(DivisorClass(a1, a2, a3), slices[t]);
        }
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }

  SearchReport report;
  report.box_bound = box;
  report.threshold = threshold;
  for (auto& slice : slices) {
    std::move(slice.begin(), slice.end(), std::back_inserter(report.surviving));
  }
  std::sort(report.surviving.begin(), report.surviving.end(), survivor_less);

  report.known = known_curve_bounds(l, g, points);
  Rational known_min = report.known.front().ratio;
  for (const auto& k : report.known) known_min = min(known_min, k.ratio);
  report.floor = known_min;
  if (!report.surviving.empty()) report.floor = min(known_min, report.surviving.front().ratio);

  if (l.a3 == 0) {
    // A non-fiber curve meets each fiber through its worst point in at least
    // max m_i, so L.C >= 2 min(a1, a2) max m_i >= 2 min(a1, a2) sum m_i / n.
    Rational bezout_lower =
        Rational(2L) * min(Rational(l.a1), Rational(l.a2)) / Rational(points.size());
    report.certified = known_min <= bezout_lower;
  }
  return report;
}

}  // namespace seshadri
