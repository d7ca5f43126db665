#include "currents/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "currents/errors.hpp"

namespace currents {

namespace {

struct GLRule {
  std::vector<double> nodes;    // on [0,1]
  std::vector<double> weights;  // sum to 1
};

GLRule build_rule(int n) {
  // Newton iteration on Legendre P_n from Chebyshev initial guesses.
  GLRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    r.nodes[n - 1 - i] = 0.5 * (x + 1.0);
    r.weights[n - 1 - i] = 1.0 / ((1.0 - x * x) * pp * pp);
  }
  return r;
}

const GLRule& rule(int n) {
  static std::map<int, GLRule> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
  return it->second;
}

struct Ctx {
  int nout = 1;
  const Integrand* f = nullptr;
  const SupportTest* support = nullptr;
  QuadratureOptions opts;
  double domain_volume = 1;
  long estimates = 0;
};

void gl_estimate(Ctx& ctx, const Box& b, double* out) {
  if (++ctx.estimates > ctx.opts.max_estimates)
    throw QuadratureBudget("adaptive quadrature exceeded its box budget");
  const GLRule& r = rule(ctx.opts.nodes);
  const int k = b.dim();
  const int n = ctx.opts.nodes;
  std::fill(out, out + ctx.nout, 0.0);
  if (k == 0) {
    Vec u(0);
    (*ctx.f)(u, out);
    return;
  }
  std::array<int, kMaxDim> idx{};
  std::vector<double> val(ctx.nout);
  Vec u(k);
  double vol = b.volume();
  while (true) {
    double w = 1.0;
    for (int d = 0; d < k; ++d) {
      u[d] = b.lo[d] + b.width(d) * r.nodes[idx[d]];
      w *= r.weights[idx[d]];
    }
    (*ctx.f)(u, val.data());
    for (int i = 0; i < ctx.nout; ++i) out[i] += w * val[i];
    int d = 0;
    while (d < k && ++idx[d] == n) {
      idx[d] = 0;
      ++d;
    }
    if (d == k) break;
  }
  for (int i = 0; i < ctx.nout; ++i) {
    out[i] *= vol;
    if (!std::isfinite(out[i]))
      throw NonFiniteValue("quadrature produced a non-finite value");
  }
}

int widest_axis(const Box& b) {
  int ax = 0;
  for (int i = 1; i < b.dim(); ++i)
    if (b.width(i) > b.width(ax)) ax = i;
  return ax;
}

void split(const Box& b, int ax, Box* l, Box* r) {
  *l = b;
  *r = b;
  double mid = 0.5 * (b.lo[ax] + b.hi[ax]);
  l->hi[ax] = mid;
  r->lo[ax] = mid;
}

// coarse = estimate for `b` (already computed); accumulates into acc.
// parent_err/stall track whether refinement still improves: when the local
// error stops shrinking for several levels the values are noise-limited
// (integrands computed by inner quadratures) and the box is accepted.
void refine(Ctx& ctx, const Box& b, const double* coarse, int depth,
            double parent_err, int stall, double* acc) {
  const int k = b.dim();
  if (k == 0) {
    for (int i = 0; i < ctx.nout; ++i) acc[i] += coarse[i];
    return;
  }
  Box lbox, rbox;
  split(b, widest_axis(b), &lbox, &rbox);
  std::vector<double> lv(ctx.nout, 0.0), rv(ctx.nout, 0.0);
  bool lhas = !*ctx.support || (*ctx.support)(lbox);
  bool rhas = !*ctx.support || (*ctx.support)(rbox);
  if (lhas) gl_estimate(ctx, lbox, lv.data());
  if (rhas) gl_estimate(ctx, rbox, rv.data());

  bool force = b.max_width() > 2.0 * ctx.opts.feature_scale;
  double err = 0, scale = 0;
  for (int i = 0; i < ctx.nout; ++i) {
    double fine = lv[i] + rv[i];
    err = std::max(err, std::abs(fine - coarse[i]));
    scale = std::max(scale, std::max(std::abs(fine), std::abs(coarse[i])));
  }
  if (!force || depth >= ctx.opts.max_depth) {
    double local_abs =
        ctx.opts.abs_tol * (b.volume() / std::max(ctx.domain_volume, 1e-300));
    bool feature_floor =
        std::isfinite(ctx.opts.feature_scale) &&
        b.max_width() <= ctx.opts.feature_scale / 8.0;
    if (depth >= ctx.opts.max_depth || feature_floor ||
        err <= std::max(local_abs, ctx.opts.rel_tol * scale)) {
      for (int i = 0; i < ctx.nout; ++i) acc[i] += lv[i] + rv[i];
      return;
    }
  }
  int next_stall = 0;
  if (!force) {
    // expect roughly geometric error decay; three flat levels means the
    // integrand values themselves carry this much noise
    next_stall = (parent_err > 0 && err > 0.6 * parent_err) ? stall + 1 : 0;
    if (next_stall >= 3) {
      for (int i = 0; i < ctx.nout; ++i) acc[i] += lv[i] + rv[i];
      return;
    }
  }
  if (lhas) refine(ctx, lbox, lv.data(), depth + 1, err, next_stall, acc);
  if (rhas) refine(ctx, rbox, rv.data(), depth + 1, err, next_stall, acc);
}

}  // namespace

const std::vector<double>& gl_nodes(int n) { return rule(n).nodes; }
const std::vector<double>& gl_weights(int n) { return rule(n).weights; }

void integrate_box(const Box& domain, int nout, const Integrand& f,
                   const QuadratureOptions& opts, const SupportTest& support,
                   double* out) {
  Ctx ctx;
  ctx.nout = nout;
  ctx.f = &f;
  ctx.support = &support;
  ctx.opts = opts;
  ctx.domain_volume = domain.dim() == 0 ? 1.0 : domain.volume();
  std::fill(out, out + nout, 0.0);
  if (support && !support(domain)) return;
  if (domain.dim() == 0) {
    Vec u(0);
    f(u, out);
    return;
  }
  std::vector<double> coarse(nout, 0.0);
  gl_estimate(ctx, domain, coarse.data());
  refine(ctx, domain, coarse.data(), 0, 0.0, 0, out);
}

double integrate_scalar(const Box& domain,
                        const std::function<double(const Vec&)>& f,
                        const QuadratureOptions& opts,
                        const SupportTest& support) {
  double out = 0;
  integrate_box(
      domain, 1, [&f](const Vec& u, double* o) { o[0] = f(u); }, opts, support,
      &out);
  return out;
}

}  // namespace currents
