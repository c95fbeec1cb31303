#include <doctest.h>

#include <cmath>
#include <random>

#include "chordgeom/chord.hpp"
#include "chordgeom/errors.hpp"
#include "chordgeom/section.hpp"
#include "support.hpp"

using namespace chordgeom;
using chordgeom::testing::catalog;

namespace {

const CurveSpec kUnitParabola = make_curve(CurveKind::parabola, {1.0});
const CurveSpec kUnitCircle = make_curve(CurveKind::circle, {1.0});

// Closed-form circle values at h = 0.5 (tests/oracles/closed_forms.py).
constexpr double kCircleT = 0.86602540378443865;
constexpr double kCircleL = 1.7320508075688773;
constexpr double kCircleFoot = 0.57735026918962576;
constexpr double kCircleAlpha = 0.81649658092772603;

}  // namespace

TEST_CASE("chord_endpoints examples") {
  SUBCASE("unit parabola vertex, h = 1") {
    const auto c = chord_endpoints(kUnitParabola, probe_frame(kUnitParabola, 0.0), 1.0);
    CHECK(c.s == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(c.t == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(c.length == doctest::Approx(2.0).epsilon(1e-15));
  }
  SUBCASE("unit circle, h = 0.5") {
    const auto c = chord_endpoints(kUnitCircle, probe_frame(kUnitCircle, 0.0), 0.5);
    CHECK(c.t == doctest::Approx(kCircleT).epsilon(1e-14));
    CHECK(c.length == doctest::Approx(kCircleL).epsilon(1e-14));
  }
  SUBCASE("unit parabola at x = 1, h = 0.2 against the closed form") {
    const auto frame = probe_frame(kUnitParabola, 1.0);
    const auto c = chord_endpoints(kUnitParabola, frame, 0.2);
    const double kappa = curvature_at(kUnitParabola, 1.0);
    const double closed = 2.0 * std::sqrt(2.0) * std::sqrt(0.2) / std::sqrt(kappa);
    CHECK(c.length == doctest::Approx(2.9906975624424411).epsilon(1e-13));
    CHECK(c.length == doctest::Approx(closed).epsilon(1e-13));
    CHECK(c.length == doctest::Approx(norm(c.b - c.a)).epsilon(1e-13));
  }
}

TEST_CASE("chord_endpoints errors") {
  const auto frame = probe_frame(kUnitCircle, 0.0);
  CHECK_THROWS_AS(chord_endpoints(kUnitCircle, frame, 1.5), NoChordError);
  CHECK_THROWS_AS(chord_endpoints(kUnitCircle, frame, 0.0), DomainError);
  CHECK_THROWS_AS(chord_endpoints(kUnitCircle, frame, -0.1), DomainError);

  // Off-vertex parabola probe: the left arc stops being a graph over the
  // tangent once f' < -1/f'(x_P); the offset line still meets the curve.
  const auto para = make_curve(CurveKind::parabola, {2.0});
  const auto side = probe_frame(para, 1.5);
  const double hmax = h_max(para, side);
  CHECK(std::isfinite(hmax));
  CHECK_NOTHROW(chord_endpoints(para, side, 0.95 * hmax));
  CHECK_THROWS_AS(chord_endpoints(para, side, 1.5 * hmax), DegenerateError);
}

TEST_CASE("h_max") {
  CHECK(std::isinf(h_max(kUnitParabola, probe_frame(kUnitParabola, 0.0))));
  CHECK(h_max(kUnitCircle, probe_frame(kUnitCircle, 0.0)) == doctest::Approx(1.0).epsilon(1e-6));

  // Graph limit for a x^2 at x_P: left arc ends where f'(x) = -1/f'(x_P).
  const auto para = make_curve(CurveKind::parabola, {2.0});
  const auto frame = probe_frame(para, 1.5);
  const double x_lim = -1.0 / (4.0 * 2.0 * 2.0 * 1.5);
  const double expected = frame_point(para, frame, x_lim).v;
  CHECK(h_max(para, frame) == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("tangent_apex examples") {
  const auto vertex = probe_frame(kUnitParabola, 0.0);
  for (double h : {1.0, 0.25}) {
    const auto q = tangent_apex(kUnitParabola, chord_endpoints(kUnitParabola, vertex, h));
    CHECK(std::abs(q.local.x) <= 1e-15);
    CHECK(q.local.y == doctest::Approx(-h).epsilon(1e-14));
  }
  const auto q = tangent_apex(kUnitCircle, chord_endpoints(kUnitCircle, probe_frame(kUnitCircle, 0.0), 0.5));
  CHECK(std::abs(q.local.x) <= 1e-14);
  CHECK(q.local.y == doctest::Approx(-1.0).epsilon(1e-13));
}

TEST_CASE("tangent_feet examples") {
  const auto chord = chord_endpoints(kUnitParabola, probe_frame(kUnitParabola, 0.0), 1.0);
  const auto feet = tangent_feet(kUnitParabola, chord);
  CHECK(feet.a1_u == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(feet.b1_u == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(feet.a1.y == 0.0);
  CHECK(feet.b1.y == 0.0);

  const auto cc = chord_endpoints(kUnitCircle, probe_frame(kUnitCircle, 0.0), 0.5);
  const auto cf = tangent_feet(kUnitCircle, cc);
  CHECK(cf.a1_u == doctest::Approx(-kCircleFoot).epsilon(1e-13));
  CHECK(cf.b1_u == doctest::Approx(kCircleFoot).epsilon(1e-13));

  // Feet lie on the tangent at P in world coordinates for tilted probes too.
  const auto tilted = probe_frame(kUnitParabola, 0.7);
  const auto tf = tangent_feet(kUnitParabola, chord_endpoints(kUnitParabola, tilted, 0.3));
  CHECK(std::abs(tilted.to_frame(tf.a1).y) <= 1e-14);
  CHECK(std::abs(tilted.to_frame(tf.b1).y) <= 1e-14);
}

TEST_CASE("centroid distances and alpha examples") {
  SUBCASE("parabola j = 2h/3, k = 4h/3, alpha = 1/sqrt(local a)") {
    for (double a : {0.5, 1.0, 2.0}) {
      const auto para = make_curve(CurveKind::parabola, {a});
      for (double xp : {-1.0, 0.0, 1.5}) {
        const auto frame = probe_frame(para, xp);
        const double local_a = canonical_quadratic_coefficient(para, xp);
        if (xp == 0.0) CHECK(local_a == doctest::Approx(a).epsilon(1e-15));
        for (double h : {0.3, 0.01, 1e-4}) {
          const auto r = triangle_report(para, chord_endpoints(para, frame, h));
          CHECK(r.j / h == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
          CHECK(r.k / h == doctest::Approx(4.0 / 3.0).epsilon(1e-10));
          CHECK(r.delta == doctest::Approx(h / 3.0).epsilon(1e-14));
          CHECK(std::abs(r.alpha - 1.0 / std::sqrt(local_a)) <= 1e-9);
        }
      }
    }
  }
  SUBCASE("unit circle at h = 0.5") {
    const auto r = triangle_report(kUnitCircle, chord_endpoints(kUnitCircle, probe_frame(kUnitCircle, 0.0), 0.5));
    CHECK(r.j == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(r.k == doctest::Approx(5.0 / 6.0).epsilon(1e-13));
    CHECK(r.alpha == doctest::Approx(kCircleAlpha).epsilon(1e-13));
  }
  SUBCASE("unit circle alpha tends to sqrt(2)") {
    const auto frame = probe_frame(kUnitCircle, 0.0);
    const double a = alpha(kUnitCircle, chord_endpoints(kUnitCircle, frame, 1e-8));
    CHECK(a == doctest::Approx(std::sqrt(2.0)).epsilon(1e-7));
  }
}

TEST_CASE("centroids in world coordinates match direct averages") {
  const auto ellipse = make_curve(CurveKind::ellipse, {2.0, 1.0});
  const auto frame = probe_frame(ellipse, 0.8);
  const auto chord = chord_endpoints(ellipse, frame, 0.1);
  const auto r = triangle_report(ellipse, chord);
  const Vec2 j = (1.0 / 3.0) * (r.apex.world + chord.a + chord.b);
  CHECK(r.centroid_qab.x == doctest::Approx(j.x).epsilon(1e-12));
  CHECK(r.centroid_qab.y == doctest::Approx(j.y).epsilon(1e-12));
  const Vec2 k = (1.0 / 3.0) * (r.apex.world + r.feet.a1 + r.feet.b1);
  CHECK(r.centroid_qa1b1.x == doctest::Approx(k.x).epsilon(1e-12));
  CHECK(r.centroid_qa1b1.y == doctest::Approx(k.y).epsilon(1e-12));
  // Q really is on both tangent lines.
  const Vec2 ta{1.0, ellipse.df(chord.xa)};
  const Vec2 tb{1.0, ellipse.df(chord.xb)};
  CHECK(std::abs(cross(ta, r.apex.world - chord.a)) <= 1e-12);
  CHECK(std::abs(cross(tb, r.apex.world - chord.b)) <= 1e-12);
  CHECK(frame.to_frame(r.centroid_qab).y == doctest::Approx(0.1 - r.j).epsilon(1e-12));
}

TEST_CASE("chord invariants across the catalog and eight decades of h") {
  std::mt19937_64 rng(2024);
  for (const auto& c : catalog()) {
    CAPTURE(c.label());
    for (int p = 0; p < 10; ++p) {
      const double xp = testing::random_probe(c, rng);
      const auto frame = probe_frame(c, xp);
      const double hmax = h_max(c, frame);
      const double top = std::min(0.5 * hmax, 0.5);
      double prev_len = INFINITY;
      for (double h = top; h >= top * 1e-8; h /= 10.0) {
        CAPTURE(xp);
        CAPTURE(h);
        const auto chord = chord_endpoints(c, frame, h);
        CHECK(chord.residual <= 1e-10 * std::max(1.0, h));
        CHECK(chord.s < 0.0);
        CHECK(chord.t > 0.0);
        CHECK(chord.length < prev_len);
        prev_len = chord.length;
        CHECK(std::abs(chord.length - norm(chord.b - chord.a)) <= 1e-10);

        const auto r = triangle_report(c, chord);
        CHECK(r.apex.local.y < 0.0);
        CHECK(std::abs((r.k - r.j) - 2.0 * h / 3.0) <= 1e-12);
        CHECK(std::abs(r.delta - h / 3.0) <= 1e-12);
        CHECK(r.alpha > 0.0);
      }
    }
  }
}

TEST_CASE("sqrt(h) dL/dh equals alpha") {
  std::mt19937_64 rng(99);
  for (const auto& c : catalog()) {
    CAPTURE(c.label());
    for (int p = 0; p < 5; ++p) {
      const auto frame = probe_frame(c, testing::random_probe(c, rng));
      const double top = std::min(0.3 * h_max(c, frame), 0.5);
      for (double h = top; h >= top / 1000.0; h /= 4.0) {
        const double dl = central_derivative(
            [&](double hh) { return chord_endpoints(c, frame, hh).length; }, h, h / 100.0);
        const double a = alpha(c, chord_endpoints(c, frame, h));
        CHECK(std::abs(std::sqrt(h) * dl - a) <= 1e-5 * a);
      }
    }
  }
}
