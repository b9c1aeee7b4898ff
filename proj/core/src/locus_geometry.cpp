#include "locus/locus_geometry.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>

#include "locus/error.hpp"

namespace locus {

namespace {

using V3 = std::array<double, 3>;
// The scan runs in extended precision: at a triple point of the variety the
// rank gap vanishes cubically along a valley, so localizing it to 1e-6 in
// direction needs the merit resolved near 1e-18.
using LD = long double;
using L3 = std::array<LD, 3>;
using M3L = std::array<L3, 3>;

L3 unit_sphere(LD theta, LD phi) {
  return {std::cos(theta) * std::sin(phi), std::sin(theta) * std::sin(phi),
          std::cos(phi)};
}

LD dot(const L3& a, const L3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

L3 cross(const L3& a, const L3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

LD norm(const L3& a) { return std::sqrt(dot(a, a)); }

L3 normalized(const L3& a) {
  LD n = norm(a);
  return {a[0] / n, a[1] / n, a[2] / n};
}

// Symmetric coefficient matrices of the three quadrics; the gradient of
// component i at w is then 2 * A[i] w.
std::array<M3L, 3> component_matrices(const Net& net) {
  std::array<M3L, 3> out;
  for (int i = 0; i < 3; ++i) {
    Mat3 a = quad_matrix(net.q[i]);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) out[i][r][c] = a[r][c].to_double();
  }
  return out;
}

std::array<M3L, 3> component_matrices(const SingularJet& jet) {
  std::array<M3L, 3> out;
  for (int i = 0; i < 3; ++i) {
    const auto& c = jet.comp[i];
    LD l = c.l.to_double(), m = c.m.to_double(), n = c.n.to_double();
    LD p = c.p.to_double(), q = c.q.to_double(), r = c.r.to_double();
    out[i] = {L3{l, m, q}, L3{m, n, r}, L3{q, r, p}};
  }
  return out;
}

L3 mat_vec(const M3L& m, const L3& v) {
  return {dot(m[0], v), dot(m[1], v), dot(m[2], v)};
}

// Smallest singular value of the 3x2 Jacobian of eta at w against the
// orthonormal tangent frame (t1, t2), divided by the local gradient size so
// the threshold is insensitive to an overall scaling of the net.  Computed
// through the wedge of the two columns (s_min * s_max = |minor vector|),
// which loses far less to cancellation near a rank drop than the
// characteristic polynomial of J^T J would.
LD rank_gap(const std::array<M3L, 3>& mats, const L3& w, const L3& t1,
            const L3& t2) {
  L3 c0, c1;
  LD grad_sq = 0;
  for (int i = 0; i < 3; ++i) {
    L3 g = mat_vec(mats[i], w);  // gradient / 2, the factor cancels in scale
    grad_sq += dot(g, g);
    c0[i] = dot(g, t1);
    c1[i] = dot(g, t2);
  }
  LD a = dot(c0, c0), b = dot(c0, c1), c = dot(c1, c1);
  LD half = (a + c) / 2;
  LD disc = std::sqrt(std::max((LD)0, half * half - (a * c - b * b)));
  LD smax = std::sqrt(half + disc);
  L3 wedge = cross(c0, c1);
  LD smin = smax > 0 ? std::sqrt(dot(wedge, wedge)) / smax : 0;
  LD scale = std::max((LD)1, std::sqrt(grad_sq));
  return smin / scale;
}

// Parameter domain shared by the scan: the sphere uses (theta, phi) with an
// intrinsic tangent frame (the chart frame would fake rank drops at the
// poles), the cylinder uses (theta, c) with its natural frame.  The seed
// axis of the spherical frame can be frozen so that the frame is a smooth
// function of the parameters within one refinement neighbourhood.
struct Domain {
  bool cylinder = false;
  LD height = 0;
  int frozen_seed = -1;  // -1: pick per point

  L3 point(LD s, LD t) const {
    if (!cylinder) return unit_sphere(s, t);
    return {std::cos(s), std::sin(s), t};
  }
  void frame(LD s, LD t, L3& t1, L3& t2) const {
    if (cylinder) {
      t1 = {-std::sin(s), std::cos(s), 0};
      t2 = {0, 0, 1};
      return;
    }
    L3 u = unit_sphere(s, t);
    int axis = frozen_seed >= 0 ? frozen_seed : (std::fabs(u[0]) < 0.9L ? 0 : 1);
    L3 seed = axis == 0 ? L3{1, 0, 0} : L3{0, 1, 0};
    LD p = dot(seed, u);
    t1 = normalized({seed[0] - p * u[0], seed[1] - p * u[1], seed[2] - p * u[2]});
    t2 = cross(u, t1);
  }
  int pick_seed(LD s, LD t) const {
    if (cylinder) return 0;
    return std::fabs(unit_sphere(s, t)[0]) < 0.9L ? 0 : 1;
  }
  LD clamp_t(LD t) const {
    if (cylinder) return std::clamp(t, -height, height);
    return std::clamp(t, (LD)0, (LD)3.14159265358979323846L);
  }
};

LD gap_at(const std::array<M3L, 3>& mats, const Domain& dom, LD s, LD t) {
  L3 t1, t2;
  dom.frame(s, t, t1, t2);
  return rank_gap(mats, dom.point(s, t), t1, t2);
}

// Raw wedge of the two Jacobian columns; vanishes exactly on the
// rank-deficient set and is smooth once the frame seed is frozen.
L3 wedge_at(const std::array<M3L, 3>& mats, const Domain& dom, LD s, LD t) {
  L3 t1, t2;
  dom.frame(s, t, t1, t2);
  L3 w = dom.point(s, t);
  L3 c0, c1;
  for (int i = 0; i < 3; ++i) {
    L3 g = mat_vec(mats[i], w);
    c0[i] = dot(g, t1);
    c1[i] = dot(g, t2);
  }
  return cross(c0, c1);
}

// Pattern search from a grid minimum: move to the best stencil neighbour,
// growing the step after a successful move and halving it on a stall.  This
// only needs to land inside the attraction basin; the polish below does the
// high-accuracy work.
void descend(const std::array<M3L, 3>& mats, const Domain& dom, LD& s, LD& t,
             LD& value, LD step_s, LD step_t) {
  const LD cap_s = step_s, cap_t = step_t;
  value = gap_at(mats, dom, s, t);
  for (int round = 0; round < 80; ++round) {
    LD best_s = s, best_t = t, best = value;
    for (int ds = -1; ds <= 1; ++ds)
      for (int dt = -1; dt <= 1; ++dt) {
        if (!ds && !dt) continue;
        LD cs = s + ds * step_s;
        LD ct = dom.clamp_t(t + dt * step_t);
        LD v = gap_at(mats, dom, cs, ct);
        if (v < best) {
          best = v;
          best_s = cs;
          best_t = ct;
        }
      }
    if (best < value) {
      s = best_s;
      t = best_t;
      value = best;
      step_s = std::min(cap_s, step_s * 2);
      step_t = std::min(cap_t, step_t * 2);
    } else {
      step_s /= 2;
      step_t /= 2;
      if (step_s < 1e-15L && step_t < 1e-15L) break;
    }
  }
}

// Damped Gauss-Newton on the wedge residual.  Multiple zeros (double and
// triple variety points) sit at the end of narrow curved valleys where a
// stencil walk crawls; Gauss-Newton tracks them with linear rate (m-1)/m at
// an m-fold zero, which reaches extended-double resolution in well under
// sixty steps.
void polish(const std::array<M3L, 3>& mats, Domain dom, LD& s, LD& t,
            LD& value, LD cell) {
  dom.frozen_seed = dom.pick_seed(s, t);
  LD h = 1e-5L;
  LD best_s = s, best_t = t;
  LD best = gap_at(mats, dom, s, t);
  for (int it = 0; it < 80; ++it) {
    L3 r0 = wedge_at(mats, dom, s, t);
    L3 rs1 = wedge_at(mats, dom, s + h, t), rs0 = wedge_at(mats, dom, s - h, t);
    L3 rt1 = wedge_at(mats, dom, s, t + h), rt0 = wedge_at(mats, dom, s, t - h);
    L3 j0, j1;
    for (int i = 0; i < 3; ++i) {
      j0[i] = (rs1[i] - rs0[i]) / (2 * h);
      j1[i] = (rt1[i] - rt0[i]) / (2 * h);
    }
    // Least squares for the step via thin QR.  Normal equations would square
    // the conditioning and lose the nearly-degenerate valley direction to
    // roundoff long before the residual itself does.
    LD r00 = norm(j0);
    if (!(r00 > 0)) break;
    L3 q0 = {j0[0] / r00, j0[1] / r00, j0[2] / r00};
    LD r01 = dot(q0, j1);
    L3 w1 = {j1[0] - r01 * q0[0], j1[1] - r01 * q0[1], j1[2] - r01 * q0[2]};
    LD r11 = norm(w1);
    LD b0 = dot(q0, r0);
    LD dt, ds;
    if (r11 > r00 * 1e-18L) {
      L3 q1 = {w1[0] / r11, w1[1] / r11, w1[2] / r11};
      dt = -dot(q1, r0) / r11;
    } else {
      dt = 0;
    }
    ds = (-b0 - r01 * dt) / r00;
    LD len = std::sqrt(ds * ds + dt * dt);
    if (len > cell) {
      ds *= cell / len;
      dt *= cell / len;
      len = cell;
    }
    s += ds;
    t = dom.clamp_t(t + dt);
    LD v = gap_at(mats, dom, s, t);
    if (v < best) {
      best = v;
      best_s = s;
      best_t = t;
    }
    if (len < 1e-14L) break;
    h = std::clamp(len / 16, (LD)1e-10L, (LD)1e-5L);
  }
  s = best_s;
  t = best_t;
  value = best;
}

SingularScan scan(const std::array<M3L, 3>& mats, const Domain& dom, int grid,
                  double tol) {
  if (grid < 64) fail(Errc::BadInput, "scan grid must be at least 64");
  const LD pi = 3.14159265358979323846L;
  const int n = grid;
  LD t_lo = dom.cylinder ? -dom.height : 0;
  LD t_hi = dom.cylinder ? dom.height : pi;

  // Row-major table of the rank gap; theta wraps, the cross parameter is
  // sampled off the exact edges so a zero sitting exactly on a pole or rim
  // still shows up as an interior basin.
  std::vector<LD> val(static_cast<std::size_t>(n) * n);
  std::vector<LD> ss(n), ts(n);
  for (int i = 0; i < n; ++i) ss[i] = 2 * pi * i / n;
  for (int j = 0; j < n; ++j)
    ts[j] = t_lo + (t_hi - t_lo) * (j + (LD)0.5) / n;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      val[static_cast<std::size_t>(j) * n + i] = gap_at(mats, dom, ss[i], ts[j]);

  auto at = [&](int i, int j) {
    return val[static_cast<std::size_t>(j) * n + ((i % n) + n) % n];
  };

  std::vector<L3> kept;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      LD v = at(i, j);
      bool localmin = true;
      for (int dj = -1; dj <= 1 && localmin; ++dj)
        for (int di = -1; di <= 1 && localmin; ++di) {
          if (!di && !dj) continue;
          int jj = j + dj;
          if (jj < 0 || jj >= n) continue;
          if (at(i + di, jj) < v) localmin = false;
        }
      if (!localmin) continue;
      // The normalized gap is at most 1, so a grid minimum in the upper half
      // of the range cannot sit in a basin that bottoms out near zero.
      if (v > 0.5L) continue;
      LD s = ss[i], t = ts[j], value = v;
      LD cell = std::min((LD)(2 * pi / n), (LD)((t_hi - t_lo) / n));
      descend(mats, dom, s, t, value, 2 * pi / n, (t_hi - t_lo) / n);
      polish(mats, dom, s, t, value, cell);
      if (value >= (LD)tol) continue;
      kept.push_back(normalized(dom.point(s, t)));
    }

  // Antipodal canonicalization and greedy angular clustering.
  SingularScan out;
  for (L3 dl : kept) {
    // Fix the antipodal sign by the dominant component; any smaller one can
    // be pure refinement noise and must not decide the representative.
    int big = 0;
    for (int k = 1; k < 3; ++k)
      if (std::fabs(dl[k]) > std::fabs(dl[big])) big = k;
    if (dl[big] < 0) dl = {-dl[0], -dl[1], -dl[2]};
    V3 d{(double)dl[0], (double)dl[1], (double)dl[2]};
    for (double& x : d)
      if (x == 0) x = 0;  // clear negative zeros
    bool dup = false;
    for (const V3& e : out.directions) {
      double dx = d[0] - e[0], dy = d[1] - e[1], dz = d[2] - e[2];
      double sx = d[0] + e[0], sy = d[1] + e[1], sz = d[2] + e[2];
      double sep = std::min(std::sqrt(dx * dx + dy * dy + dz * dz),
                            std::sqrt(sx * sx + sy * sy + sz * sz));
      if (sep < 1e-4) {
        dup = true;
        break;
      }
    }
    if (!dup) out.directions.push_back(d);
  }
  std::sort(out.directions.begin(), out.directions.end());
  out.curve = out.directions.size() > 8;
  return out;
}

void write_number(std::string& line, double v) {
  char buf[40];
  if (v == 0) v = 0;  // never print a negative zero
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 9);
  line.append(buf, res.ptr);
}

// samples columns around, samples + 1 rows across; row-major vertex ids.
template <class Eval>
void write_mesh(int samples, const Eval& eval, std::ostream& out) {
  if (samples < 8) fail(Errc::BadInput, "mesh needs at least 8 samples");
  const double pi = 3.14159265358979323846;
  const int n = samples;
  std::string line;
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i < n; ++i) {
      V3 p = eval(2 * pi * i / n, static_cast<double>(j) / n);
      line.assign("v ");
      write_number(line, p[0]);
      line.push_back(' ');
      write_number(line, p[1]);
      line.push_back(' ');
      write_number(line, p[2]);
      line.push_back('\n');
      out << line;
    }
  auto id = [n](int i, int j) { return j * n + (i % n) + 1; };
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      out << "f " << id(i, j) << ' ' << id(i + 1, j) << ' ' << id(i + 1, j + 1)
          << '\n';
      out << "f " << id(i, j) << ' ' << id(i + 1, j + 1) << ' ' << id(i, j + 1)
          << '\n';
    }
}

void check_stream(const std::ostream& out, const std::string& path) {
  if (!out) fail(Errc::BadInput, "cannot write mesh to " + path);
}

}  // namespace

std::array<double, 3> eta_regular(const Net& net, double theta, double phi) {
  V3 u{std::cos(theta) * std::sin(phi), std::sin(theta) * std::sin(phi),
       std::cos(phi)};
  return {net.q[0].eval(u), net.q[1].eval(u), net.q[2].eval(u)};
}

std::array<double, 3> eta_expansion(const EtaBasis& basis, double theta,
                                    double phi) {
  double c2t = std::cos(2 * theta), s2t = std::sin(2 * theta);
  double c2p = std::cos(2 * phi), s2p = std::sin(2 * phi);
  double sp2 = std::sin(phi) * std::sin(phi);
  std::array<double, 3> out{};
  for (int k = 0; k < 3; ++k)
    out[k] = basis.H[k].to_double() + (1 + 3 * c2p) * basis.B1[k].to_double() +
             c2t * sp2 * basis.B2[k].to_double() +
             s2t * sp2 * basis.B3[k].to_double() +
             std::cos(theta) * s2p * basis.B4[k].to_double() +
             std::sin(theta) * s2p * basis.B5[k].to_double();
  return out;
}

std::array<double, 3> eta_singular(const SingularJet& jet, double theta,
                                   double c) {
  double a = std::cos(theta), b = std::sin(theta);
  std::array<double, 3> out{};
  for (int i = 0; i < 3; ++i) {
    const auto& k = jet.comp[i];
    out[i] = k.l.to_double() * a * a + 2 * k.m.to_double() * a * b +
             k.n.to_double() * b * b + k.p.to_double() * c * c +
             2 * k.q.to_double() * a * c + 2 * k.r.to_double() * b * c;
  }
  return out;
}

SingularScan numeric_singular_points(const Net& net, int grid, double tol) {
  Domain dom;
  return scan(component_matrices(net), dom, grid, tol);
}

SingularScan numeric_singular_points(const SingularJet& jet, int grid,
                                     double tol, double height) {
  Domain dom;
  dom.cylinder = true;
  dom.height = height;
  return scan(component_matrices(jet), dom, grid, tol);
}

void export_mesh(const Net& net, int samples, std::ostream& out) {
  const double pi = 3.14159265358979323846;
  write_mesh(samples,
             [&](double theta, double frac) {
               return eta_regular(net, theta, pi * frac);
             },
             out);
}

void export_mesh(const SingularJet& jet, int samples, double height,
                 std::ostream& out) {
  write_mesh(samples,
             [&](double theta, double frac) {
               return eta_singular(jet, theta, -height + 2 * height * frac);
             },
             out);
}

void export_mesh_file(const Net& net, int samples, const std::string& path) {
  std::ofstream out(path);
  check_stream(out, path);
  export_mesh(net, samples, out);
  out.flush();
  check_stream(out, path);
}

void export_mesh_file(const SingularJet& jet, int samples, double height,
                      const std::string& path) {
  std::ofstream out(path);
  check_stream(out, path);
  export_mesh(jet, samples, height, out);
  out.flush();
  check_stream(out, path);
}

}  // namespace locus
