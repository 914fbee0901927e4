#include "cce/optimizer.hpp"

#include <cmath>
#include <stdexcept>

#include "cce/detail/frame_kernel.hpp"

namespace cce {

void EnhanceParams::validate() const {
  if (!(lambda_e >= 0.0 && lambda_e <= 2.0)) {
    throw std::invalid_argument("lambda_e must lie in [0, 2]");
  }
  if (!(lambda_jnd_scaled >= 0.0 && lambda_jnd_scaled <= 1.0)) {
    throw std::invalid_argument("scaled JND radius must lie in [0, 1]");
  }
  if (!(epsilon > 0.0 && std::isfinite(epsilon))) {
    throw std::invalid_argument("epsilon must be finite and positive");
  }
}

IdealPoint ideal_point(const ScaledLab& background, double epsilon) {
  const double n = background.norm();
  if (n <= epsilon) return {{}, true};
  return {{-background.x / n, -background.y / n, -background.z / n}, false};
}

Vec3 clamp_shift(const ScaledLab& display, const ScaledLab& ideal, double lambda_e, double epsilon) {
  const Vec3 to_ideal = ideal - display;
  const double d = to_ideal.norm();
  if (d <= epsilon) return {};
  return to_ideal * (std::min(d, lambda_e) / d);
}

ChromaSplit split_chroma(const ScaledLab& display, const Vec3& shift, double epsilon) {
  ChromaSplit s;
  s.planar = {0.0, shift.y, shift.z};
  const double c = chroma(display);
  if (c <= epsilon) {
    // No chroma direction; any planar shift leaves chroma non-decreasing.
    s.achromatic = true;
    s.hue = s.planar;
    return s;
  }
  const Vec3 dir{0.0, display.y / c, display.z / c};
  const double along = s.planar.dot(dir);
  s.along_chroma = dir * along;
  s.hue = s.planar - s.along_chroma;
  s.gate = along >= 0.0 ? 1.0 : 0.0;
  return s;
}

Vec3 chroma_constrained_shift(const ScaledLab& display, const Vec3& shift, double epsilon) {
  return split_chroma(display, shift, epsilon).constrained();
}

double luminance_constrained_shift(const Vec3& shift) {
  const double n = shift.norm();
  if (n == 0.0) return 0.0;
  const double cos_l = shift.x / n;
  return (1.0 - std::abs(cos_l)) * shift.x;
}

ShiftDecomposition decompose_shift(const ScaledLab& display, const ScaledLab& background,
                                   const EnhanceParams& p) {
  ShiftDecomposition d;
  const IdealPoint ideal = ideal_point(project_to_ball(background), p.epsilon);
  if (ideal.degenerate) {
    d.degenerate = true;
    return d;
  }
  d.e = clamp_shift(display, ideal.point, p.lambda_e, p.epsilon);
  if (d.e.squared_norm() == 0.0) {
    d.degenerate = true;
    return d;
  }
  d.chroma = split_chroma(display, d.e, p.epsilon);
  d.dc = d.chroma.constrained();
  d.dl = luminance_constrained_shift(d.e);
  return d;
}

namespace {

Vec3 normalized(const Vec3& v) { return v * (1.0 / v.norm()); }

// Any unit vector orthogonal to n (|n| = 1).
Vec3 orthogonal_unit(const Vec3& n) {
  const Vec3 axis = std::abs(n.x) < 0.9 ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 1.0, 0.0};
  const Vec3 w = axis - n * axis.dot(n);
  return normalized(w);
}

// Closest point to q on { |x - b| = r } restricted to { |x| <= big_r }.
ScaledLab nearest_on_sphere_in_ball(const ScaledLab& q, const ScaledLab& b, double r, double big_r,
                                    double epsilon) {
  const Vec3 qb = q - b;
  const Vec3 u = qb.norm() > epsilon ? normalized(qb) : Vec3{0.0, 1.0, 0.0};
  const ScaledLab direct = b + u * r;
  if (direct.norm() <= big_r) return direct;

  // The sphere crosses the ball boundary on a circle centered on the B axis.
  const double nb = b.norm();
  const Vec3 n = b.as_vector() * (1.0 / nb);
  const double h = (big_r * big_r + nb * nb - r * r) / (2.0 * nb);
  const double rho = std::sqrt(std::max(0.0, big_r * big_r - h * h));
  const ScaledLab center{n.x * h, n.y * h, n.z * h};
  const Vec3 qc = q - center;
  Vec3 w = qc - n * qc.dot(n);
  w = w.norm() > epsilon ? normalized(w) : orthogonal_unit(n);
  return center + w * rho;
}

}  // namespace

JndResult resolve_jnd(const ScaledLab& display, const ScaledLab& candidate,
                      const ScaledLab& background, double radius, double ball_radius,
                      double epsilon) {
  JndResult res{candidate, JndOutcome::kInactive, false};
  if (radius > 0.0 && distance(candidate, background) < radius) {
    const Vec3 dir = candidate - display;
    if (dir.norm() <= epsilon) {
      const Vec3 away = display - background;
      const Vec3 u = away.norm() > epsilon ? normalized(away) : Vec3{0.0, 1.0, 0.0};
      res.point = background + u * radius;
      res.outcome = JndOutcome::kDegenerateFallback;
    } else {
      // |D + t dir - B|^2 = r^2; the candidate (t = 1) is inside, so the
      // larger root lies past it.
      const Vec3 f = display - background;
      const double a = dir.squared_norm();
      const double half_b = dir.dot(f);
      const double c = f.squared_norm() - radius * radius;
      const double disc = std::max(0.0, half_b * half_b - a * c);
      const double t = (-half_b + std::sqrt(disc)) / a;
      res.point = display + dir * t;
      res.outcome = JndOutcome::kIntersected;
    }
  }
  if (res.point.norm() > ball_radius) {
    res.projected = true;
    res.point = project_to_ball(res.point, ball_radius);
    if (radius > 0.0 && distance(res.point, background) < radius) {
      res.point = nearest_on_sphere_in_ball(res.point, background, radius, ball_radius, epsilon);
    }
  }
  return res;
}

ScaledLab optimize_color(const ScaledLab& display, const ScaledLab& background,
                         const EnhanceParams& p) {
  const ShiftDecomposition d = decompose_shift(display, background, p);
  if (d.degenerate) return display;
  return resolve_jnd(display, d.proposed(display), project_to_ball(background), p.lambda_jnd_scaled,
                     solution_radius(display), p.epsilon)
      .point;
}

RasterImage enhance_frame(const RasterImage& virtual_image, const LinearImage& blurred_background,
                          const FovMapping& mapping, const EnhanceParams& p, unsigned workers) {
  p.validate();
  return detail::transform_foreground(
      virtual_image, blurred_background, mapping, workers,
      [&p, cache = detail::DisplayColorCache{}](Srgb8 v, const LinearRgb& bg) mutable {
        const ScaledLab display = cache(v);
        const ScaledLab background = lab_to_scaled(linear_to_lab(bg));
        const ScaledLab best = optimize_color(display, background, p);
        return linear_to_srgb(lab_to_linear(scaled_to_lab(best)), v.a);
      });
}

RasterImage enhance_frame(const RasterImage& virtual_image, const RasterImage& blurred_background,
                          const FovMapping& mapping, const EnhanceParams& p, unsigned workers) {
  return enhance_frame(virtual_image, to_linear_image(blurred_background), mapping, p, workers);
}

}  // namespace cce
