#include "currents/smoothing.hpp"

#include <algorithm>
#include <cmath>

#include "currents/errors.hpp"

namespace currents {

namespace {

Box intersect_or_degenerate(const Box& a, const Box& b) {
  Box r = a;
  for (int i = 0; i < a.dim(); ++i) {
    r.lo[i] = std::max(a.lo[i], b.lo[i]);
    r.hi[i] = std::min(a.hi[i], b.hi[i]);
    if (r.lo[i] > r.hi[i]) r.hi[i] = r.lo[i];
  }
  return r;
}

// ---------------------------------------------------------------------------
// Kernel piece: coefficients of r_eps over a chain, optionally conjugated by
// a chart and damped by a density along the cells.
//
// In chart coordinates, for each increasing J' of size p = m-k:
//   b_J'(y) = sign(J'|J'^c) * sum_cells w*or *
//             int f_eps(y - h(sigma(u))) * dens(sigma(u)) *
//                 det(D(h o sigma)(u) rows J'^c) du
// and back in base coordinates a_J(x) = sum_J' det(A[J',J]) b_J'(h(x)).
// ---------------------------------------------------------------------------
class ChainKernelForm : public FormLike {
 public:
  ChainKernelForm(const CellChain& chain, FieldPtr density, const Chart& chart,
                  const BumpProfile& bump, double eps,
                  const SmoothingOptions& opts)
      : m_(chain.m),
        p_(chain.m - chain.k),
        k_(chain.k),
        chart_(chart),
        bump_(bump),
        eps_(eps),
        opts_(opts),
        density_(std::move(density)) {
    reach_ = eps * bump.support_radius * chart.distortion();
    for (const auto& c : chain.cells) {
      PerCell pc;
      pc.cell = c;
      pc.feature = reach_ / std::max(c.jacobian_sup(), 1e-12);
      cells_.push_back(std::move(pc));
    }
    support_ = chain.bounding_box().expanded(reach_);
  }

  int dimension() const override { return m_; }
  int degree() const override { return p_; }
  std::optional<Box> support_box() const override { return support_; }

  void coefficients(const Vec& x, double* out) const override {
    const auto& icombos = combinations(m_, k_);
    const int nI = static_cast<int>(icombos.size());
    std::fill(out, out + nI, 0.0);
    if (!support_.contains(x)) return;
    Vec y = chart_.apply(x);

    std::vector<double> acc(nI);
    for (const auto& pc : cells_) {
      std::fill(acc.begin(), acc.end(), 0.0);
      integrate_cell(pc, x, y, acc.data());
      double s = pc.cell.weight * pc.cell.orientation;
      for (int i = 0; i < nI; ++i) out[i] += s * acc[i];
    }

    // out currently holds, per I, the integral against minor_I; reshuffle to
    // J = I^c with the wedge sign, then pull back through the chart.
    std::vector<double> b(nI, 0.0);
    IndexMask full = (IndexMask{1} << m_) - 1;
    for (int i = 0; i < nI; ++i) {
      IndexMask I = icombos[i];
      IndexMask J = full & ~I;
      int jpos = combination_position(m_, p_, J);
      b[jpos] = merge_sign(J, I) * out[i];
    }

    if (chart_.is_identity()) {
      std::copy(b.begin(), b.end(), out);
      return;
    }
    // a_J(x) = sum_J' det(A[rows J', cols J]) b_J'
    const auto& jcombos = combinations(m_, p_);
    const auto& A = chart_.matrix();
    for (std::size_t j = 0; j < jcombos.size(); ++j) {
      double s = 0;
      for (std::size_t jp = 0; jp < jcombos.size(); ++jp) {
        if (b[jp] == 0.0) continue;
        s += minor_det(A, jcombos[jp], jcombos[j]) * b[jp];
      }
      out[j] = s;
    }
  }

 private:
  struct PerCell {
    Cell cell;
    double feature = 1.0;
  };

  double minor_det(const std::vector<double>& A, IndexMask rows,
                   IndexMask cols) const {
    double M[kMaxDim * kMaxDim];
    int r = 0;
    for (int i = 0; i < m_; ++i) {
      if (!(rows & (IndexMask{1} << i))) continue;
      int c = 0;
      for (int jj = 0; jj < m_; ++jj) {
        if (!(cols & (IndexMask{1} << jj))) continue;
        M[r * p_ + c] = A[i * m_ + jj];
        ++c;
      }
      ++r;
    }
    return det_small(M, p_);
  }

  void integrate_cell(const PerCell& pc, const Vec& x, const Vec& y,
                      double* acc) const {
    const Cell& cell = pc.cell;
    const auto& icombos = combinations(m_, k_);
    const int nI = static_cast<int>(icombos.size());

    SupportTest support = [&](const Box& ubox) {
      Box img = cell.image_box(ubox);
      return img.dist2(x) <= reach_ * reach_ * (1.0 + 1e-9);
    };

    std::vector<double> J(m_ * std::max(k_, 1));
    std::vector<double> Jc(m_ * std::max(k_, 1));
    std::vector<double> Dh(m_ * m_);
    Integrand f = [&](const Vec& u, double* val) {
      Vec pt = cell.eval(u);
      Vec diff(m_);
      Vec hp = chart_.is_identity() ? pt : chart_.apply(pt);
      for (int i = 0; i < m_; ++i) diff[i] = y[i] - hp[i];
      double fe = bump_.scaled(diff, eps_);
      if (fe != 0.0 && density_) fe *= density_->value(pt);
      if (fe == 0.0) {
        std::fill(val, val + nI, 0.0);
        return;
      }
      cell.jacobian(u, J.data());
      const double* Juse = J.data();
      if (!chart_.is_identity()) {
        if (chart_.is_affine()) {
          const auto& A = chart_.matrix();
          for (int i = 0; i < m_; ++i)
            for (int c = 0; c < k_; ++c) {
              double s = 0;
              for (int l = 0; l < m_; ++l) s += A[i * m_ + l] * J[l * k_ + c];
              Jc[i * k_ + c] = s;
            }
        } else {
          chart_.jacobian(pt, Dh.data());
          for (int i = 0; i < m_; ++i)
            for (int c = 0; c < k_; ++c) {
              double s = 0;
              for (int l = 0; l < m_; ++l) s += Dh[i * m_ + l] * J[l * k_ + c];
              Jc[i * k_ + c] = s;
            }
        }
        Juse = Jc.data();
      }
      double M[kMaxDim * kMaxDim];
      for (int ic = 0; ic < nI; ++ic) {
        IndexMask I = icombos[ic];
        int r = 0;
        for (int i = 0; i < m_; ++i) {
          if (!(I & (IndexMask{1} << i))) continue;
          for (int c = 0; c < k_; ++c) M[r * k_ + c] = Juse[i * k_ + c];
          ++r;
        }
        val[ic] = fe * det_small(M, k_);
      }
    };

    QuadratureOptions q;
    q.rel_tol = opts_.rel_tol;
    q.nodes = opts_.nodes;
    q.feature_scale = pc.feature;
    integrate_box(Box::unit(k_), nI, f, q, support, acc);
  }

  int m_, p_, k_;
  Chart chart_;
  BumpProfile bump_;
  double eps_;
  SmoothingOptions opts_;
  FieldPtr density_;
  std::vector<PerCell> cells_;
  double reach_ = 0;
  Box support_;
};

// ---------------------------------------------------------------------------
// Coefficientwise convolution of an already-smooth piece, conjugated by a
// chart: out_J(x) = int f(zeta) g(x - eps A^-1 zeta) inner_J(x - eps A^-1
// zeta) dzeta. The minor transforms of the chart cancel across the
// convolution, leaving a plain anisotropic kernel.
// ---------------------------------------------------------------------------
class ConvolutionForm : public FormLike {
 public:
  ConvolutionForm(FormPtr inner, FieldPtr density, const Chart& chart,
                  const BumpProfile& bump, double eps,
                  const SmoothingOptions& opts)
      : inner_(std::move(inner)),
        density_(std::move(density)),
        chart_(chart),
        bump_(bump),
        eps_(eps),
        opts_(opts) {
    reach_ = eps * bump.support_radius * chart.distortion();
    auto s = inner_->support_box();
    if (s) {
      support_ = s->expanded(reach_);
      if (density_ && density_->support())
        support_ = intersect_or_degenerate(support_,
                                           density_->support()->expanded(reach_));
      has_support_ = true;
    }
  }

  int dimension() const override { return inner_->dimension(); }
  int degree() const override { return inner_->degree(); }
  std::optional<Box> support_box() const override {
    if (has_support_) return support_;
    return std::nullopt;
  }

  void coefficients(const Vec& x, double* out) const override {
    const int n = inner_->coefficient_count();
    std::fill(out, out + n, 0.0);
    if (has_support_ && !support_.contains(x)) return;
    const int m = dimension();
    double r = bump_.support_radius;
    Box dom = Box::cube(m, -r, r);
    std::vector<double> buf(n);
    Integrand f = [&](const Vec& zeta, double* val) {
      double fz = bump_.value(zeta);
      if (fz == 0.0) {
        std::fill(val, val + n, 0.0);
        return;
      }
      Vec shift = shift_of(zeta);
      Vec p(m);
      for (int i = 0; i < m; ++i) p[i] = x[i] - shift[i];
      double g = density_ ? density_->value(p) : 1.0;
      if (g == 0.0) {
        std::fill(val, val + n, 0.0);
        return;
      }
      inner_->coefficients(p, buf.data());
      for (int i = 0; i < n; ++i) val[i] = fz * g * buf[i];
    };
    QuadratureOptions q;
    q.rel_tol = opts_.rel_tol;
    q.nodes = opts_.nodes;
    integrate_box(dom, n, f, q, SupportTest{}, out);
  }

 private:
  Vec shift_of(const Vec& zeta) const {
    const int m = dimension();
    Vec s(m);
    if (chart_.is_identity()) {
      for (int i = 0; i < m; ++i) s[i] = eps_ * zeta[i];
      return s;
    }
    const auto& Ainv = chart_.matrix_inverse();
    for (int i = 0; i < m; ++i) {
      double v = 0;
      for (int j = 0; j < m; ++j) v += Ainv[i * m + j] * zeta[j];
      s[i] = eps_ * v;
    }
    return s;
  }

  FormPtr inner_;
  FieldPtr density_;
  Chart chart_;
  BumpProfile bump_;
  double eps_;
  SmoothingOptions opts_;
  double reach_ = 0;
  Box support_;
  bool has_support_ = false;
};

// Dual convolution on test forms (argument shifted by +eps A^-1 zeta).
class DualConvolutionForm : public FormLike {
 public:
  DualConvolutionForm(FormPtr inner, const Chart& chart,
                      const BumpProfile& bump, double eps,
                      const SmoothingOptions& opts)
      : inner_(std::move(inner)), chart_(chart), bump_(bump), eps_(eps),
        opts_(opts) {
    reach_ = eps * bump.support_radius * chart.distortion();
    auto s = inner_->support_box();
    if (s) {
      support_ = s->expanded(reach_);
      has_support_ = true;
    }
  }

  int dimension() const override { return inner_->dimension(); }
  int degree() const override { return inner_->degree(); }
  std::optional<Box> support_box() const override {
    if (has_support_) return support_;
    return std::nullopt;
  }

  void coefficients(const Vec& x, double* out) const override {
    const int n = inner_->coefficient_count();
    std::fill(out, out + n, 0.0);
    if (has_support_ && !support_.contains(x)) return;
    const int m = dimension();
    double r = bump_.support_radius;
    Box dom = Box::cube(m, -r, r);
    std::vector<double> buf(n);
    Integrand f = [&](const Vec& zeta, double* val) {
      double fz = bump_.value(zeta);
      if (fz == 0.0) {
        std::fill(val, val + n, 0.0);
        return;
      }
      Vec p(m);
      if (chart_.is_identity()) {
        for (int i = 0; i < m; ++i) p[i] = x[i] + eps_ * zeta[i];
      } else {
        const auto& Ainv = chart_.matrix_inverse();
        for (int i = 0; i < m; ++i) {
          double v = 0;
          for (int j = 0; j < m; ++j) v += Ainv[i * m + j] * zeta[j];
          p[i] = x[i] + eps_ * v;
        }
      }
      inner_->coefficients(p, buf.data());
      for (int i = 0; i < n; ++i) val[i] = fz * buf[i];
    };
    QuadratureOptions q;
    q.rel_tol = opts_.rel_tol;
    q.nodes = opts_.nodes;
    integrate_box(dom, n, f, q, SupportTest{}, out);
  }

 private:
  FormPtr inner_;
  Chart chart_;
  BumpProfile bump_;
  double eps_;
  SmoothingOptions opts_;
  double reach_ = 0;
  Box support_;
  bool has_support_ = false;
};

// Homotopy kernel a_eps^* phi: degree p-1 form with coefficients
//   sum_i int_0^1 int eps zeta_i phi_{i,I'}(y + t eps zeta) f(zeta) dzeta dt.
class HomotopyKernelForm : public FormLike {
 public:
  HomotopyKernelForm(FormPtr phi, const BumpProfile& bump, double eps,
                     const SmoothingOptions& opts)
      : phi_(std::move(phi)), bump_(bump), eps_(eps), opts_(opts) {
    auto s = phi_->support_box();
    if (s) {
      support_ = s->expanded(eps * bump.support_radius);
      has_support_ = true;
    }
  }

  int dimension() const override { return phi_->dimension(); }
  int degree() const override { return phi_->degree() - 1; }
  std::optional<Box> support_box() const override {
    if (has_support_) return support_;
    return std::nullopt;
  }

  void coefficients(const Vec& y, double* out) const override {
    const int m = dimension();
    const int p = phi_->degree();
    const auto& out_combos = combinations(m, p - 1);
    const int n = static_cast<int>(out_combos.size());
    std::fill(out, out + n, 0.0);
    if (p == 0) return;  // empty index sum
    if (has_support_ && !support_.contains(y)) return;

    const auto& in_combos = combinations(m, p);
    double r = bump_.support_radius;
    // domain: (zeta, t)
    Box dom = Box::cube(m + 1, 0, 0);
    for (int i = 0; i < m; ++i) {
      dom.lo[i] = -r;
      dom.hi[i] = r;
    }
    dom.lo[m] = 0.0;
    dom.hi[m] = 1.0;

    std::vector<double> buf(in_combos.size());
    Integrand f = [&](const Vec& zt, double* val) {
      std::fill(val, val + n, 0.0);
      Vec zeta(m);
      for (int i = 0; i < m; ++i) zeta[i] = zt[i];
      double t = zt[m];
      double fz = bump_.value(zeta);
      if (fz == 0.0) return;
      Vec pt(m);
      for (int i = 0; i < m; ++i) pt[i] = y[i] + t * eps_ * zeta[i];
      phi_->coefficients(pt, buf.data());
      for (int oc = 0; oc < n; ++oc) {
        IndexMask Ip = out_combos[oc];
        double s = 0;
        for (int i = 0; i < m; ++i) {
          IndexMask bit = IndexMask{1} << i;
          if (Ip & bit) continue;
          int pos = combination_position(m, p, Ip | bit);
          double c = buf[pos];
          if (c == 0.0) continue;
          s += merge_sign(bit, Ip) * eps_ * zeta[i] * c;
        }
        val[oc] = fz * s;
      }
    };
    QuadratureOptions q;
    q.rel_tol = opts_.rel_tol;
    q.nodes = opts_.nodes;
    integrate_box(dom, n, f, q, SupportTest{}, out);
  }

 private:
  FormPtr phi_;
  BumpProfile bump_;
  double eps_;
  SmoothingOptions opts_;
  Box support_;
  bool has_support_ = false;
};

FieldPtr one_minus(const FieldPtr& g) {
  return make_sum_field(make_constant_field(1.0), make_scaled_field(g, -1.0));
}

bool provably_zero_on(const FieldPtr& field, const Box& box) {
  Interval r = field->range(box);
  return r.lo == 0.0 && r.hi == 0.0;
}

}  // namespace

MollifiedForm::MollifiedForm(int m, int degree, double eps,
                             std::vector<FormPtr> pieces,
                             std::vector<ResidualCell> residual, Box support)
    : m_(m),
      degree_(degree),
      eps_(eps),
      pieces_(std::move(pieces)),
      residual_(std::move(residual)),
      support_(support) {}

void MollifiedForm::coefficients(const Vec& x, double* out) const {
  const int n = coefficient_count();
  std::fill(out, out + n, 0.0);
  if (!support_.contains(x)) return;
  std::vector<double> buf(n);
  for (const auto& p : pieces_) {
    auto s = p->support_box();
    if (s && !s->contains(x)) continue;
    p->coefficients(x, buf.data());
    for (int i = 0; i < n; ++i) out[i] += buf[i];
  }
}

bool MollifiedForm::residual_vanishes_on(const Box& region) const {
  for (const auto& rc : residual_) {
    Box cellbox = rc.cell.bounding_box();
    if (!cellbox.intersects(region)) continue;
    if (!provably_zero_on(rc.density, cellbox)) return false;
  }
  return true;
}

double mollifier_reach(double eps, const DeRhamData& data) {
  double reach = 0;
  for (int i = 0; i < data.chart_count(); ++i)
    reach = std::max(reach, eps * data.bump(i).support_radius *
                                data.chart(i).distortion());
  return reach;
}

void check_epsilon(double eps, const DeRhamData& data, double margin) {
  if (!(eps > 0)) throw EpsilonTooLarge("epsilon must be positive");
  if (std::isfinite(margin) && mollifier_reach(eps, data) > margin)
    throw EpsilonTooLarge("mollifier reach exceeds the truncation margin");
}

namespace {

struct GluingState {
  std::vector<FormPtr> pieces;
  std::vector<MollifiedForm::ResidualCell> residual;
};

void apply_chart_step(GluingState& st, const Chart& chart,
                      const BumpProfile& bump, double eps,
                      const SmoothingOptions& opts) {
  const FieldPtr& g = chart.cutoff();
  double reach = eps * bump.support_radius * chart.distortion();

  std::vector<FormPtr> next;
  for (const auto& piece : st.pieces) {
    auto s = piece->support_box();
    // r_eps^B h (g * piece): skip when g vanishes on the piece's support
    bool g_zero = s && provably_zero_on(g, s->expanded(reach));
    if (!g_zero)
      next.push_back(std::make_shared<ConvolutionForm>(piece, g, chart, bump,
                                                       eps, opts));
    // (1 - g) * piece: skip when g is identically 1 there
    FieldPtr rest = one_minus(g);
    bool rest_zero = s && provably_zero_on(rest, *s);
    if (!rest_zero) next.push_back(make_field_scaled_form(piece, rest));
  }

  // chain residual: mollify the g-weighted part, keep the rest
  std::vector<MollifiedForm::ResidualCell> next_res;
  for (const auto& rc : st.residual) {
    Box cellbox = rc.cell.bounding_box();
    FieldPtr gated = rc.density ? make_product_field(rc.density, g) : g;
    if (!provably_zero_on(gated, cellbox)) {
      CellChain single;
      single.m = rc.cell.m;
      single.k = rc.cell.k;
      single.cells.push_back(rc.cell);
      next.push_back(std::make_shared<ChainKernelForm>(single, gated, chart,
                                                       bump, eps, opts));
    }
    FieldPtr left = rc.density ? make_product_field(rc.density, one_minus(g))
                               : one_minus(g);
    if (!provably_zero_on(left, cellbox))
      next_res.push_back({rc.cell, left});
  }

  st.pieces = std::move(next);
  st.residual = std::move(next_res);
}

GluingState initial_state(const Current& T) {
  GluingState st;
  if (T.is_chain() || T.is_point_mass()) {
    CellChain chain = T.is_chain() ? T.chain() : T.as_zero_cell_chain();
    for (const auto& c : chain.cells)
      st.residual.push_back({c, FieldPtr{}});
  } else if (T.is_form()) {
    st.pieces.push_back(
        std::make_shared<SmoothForm>(T.form()));
  } else {
    throw ValidationError(
        "cylinder currents are mollified through the product-space API");
  }
  return st;
}

}  // namespace

MollifiedPtr regularize(const Current& T, double eps, const DeRhamData& data,
                        const SmoothingOptions& opts) {
  if (data.chart_count() == 0) throw ChartCountZero("no charts in data");
  if (T.ambient_dimension() != data.dimension)
    throw DimensionMismatch("current and data dimensions differ");
  check_epsilon(eps, data, T.margin());
  const Chart& chart = data.chart(0);
  const BumpProfile& bump = data.bump(0);

  std::vector<FormPtr> pieces;
  if (T.is_chain() || T.is_point_mass()) {
    CellChain chain = T.is_chain() ? T.chain() : T.as_zero_cell_chain();
    pieces.push_back(std::make_shared<ChainKernelForm>(chain, FieldPtr{},
                                                       chart, bump, eps, opts));
  } else if (T.is_form()) {
    pieces.push_back(std::make_shared<ConvolutionForm>(
        std::make_shared<SmoothForm>(T.form()), FieldPtr{}, chart, bump, eps,
        opts));
  } else {
    throw ValidationError(
        "cylinder currents are mollified through the product-space API");
  }
  double reach = eps * bump.support_radius * chart.distortion();
  Box support = T.bounding_box().expanded(reach);
  return std::make_shared<MollifiedForm>(
      data.dimension, T.degree(), eps, std::move(pieces),
      std::vector<MollifiedForm::ResidualCell>{}, support);
}

MollifiedPtr regularize_glued(const Current& T, double eps,
                              const DeRhamData& data,
                              const SmoothingOptions& opts) {
  if (data.chart_count() == 0) throw ChartCountZero("no charts in data");
  if (T.ambient_dimension() != data.dimension)
    throw DimensionMismatch("current and data dimensions differ");
  check_epsilon(eps, data, T.margin());

  GluingState st = initial_state(T);
  for (int i = 0; i < data.chart_count(); ++i)
    apply_chart_step(st, data.chart(i), data.bump(i), eps, opts);

  Box support = T.bounding_box().expanded(mollifier_reach(eps, data) *
                                          data.chart_count());
  return std::make_shared<MollifiedForm>(data.dimension, T.degree(), eps,
                                         std::move(st.pieces),
                                         std::move(st.residual), support);
}

FormPtr mollify_form(const SmoothForm& phi, double eps, const DeRhamData& data,
                     const SmoothingOptions& opts) {
  if (data.chart_count() == 0) throw ChartCountZero("no charts in data");
  if (phi.dimension() != data.dimension)
    throw DimensionMismatch("form and data dimensions differ");
  check_epsilon(eps, data, std::numeric_limits<double>::infinity());

  // adjoint of the gluing: psi <- psi + g * (conv(psi) - psi), charts in
  // reverse declared order
  FormPtr psi = std::make_shared<SmoothForm>(phi);
  for (int i = data.chart_count() - 1; i >= 0; --i) {
    const Chart& chart = data.chart(i);
    const BumpProfile& bump = data.bump(i);
    const FieldPtr& g = chart.cutoff();
    double reach = eps * bump.support_radius * chart.distortion();
    auto s = psi->support_box();
    if (s && provably_zero_on(g, s->expanded(reach))) continue;
    FormPtr conv =
        std::make_shared<DualConvolutionForm>(psi, chart, bump, eps, opts);
    FormPtr gated = make_field_scaled_form(conv, g);
    FormPtr rest = make_field_scaled_form(psi, one_minus(g));
    psi = make_sum_form({gated, rest});
  }
  return psi;
}

double homotopy_apply(const CellChain& T, const SmoothForm& phi, double eps,
                      const DeRhamData& data, const SmoothingOptions& opts) {
  if (data.chart_count() == 0) throw ChartCountZero("no charts in data");
  if (!data.chart(0).is_identity())
    throw ValidationError(
        "the homotopy kernel is available in the single translation chart "
        "case only");
  check_epsilon(eps, data, T.margin);
  if (phi.degree() == 0) return 0.0;
  HomotopyKernelForm psi(std::make_shared<SmoothForm>(phi), data.bump(0), eps,
                         opts);
  EvaluationOptions eo;
  eo.rel_tol = opts.rel_tol;
  eo.nodes = opts.nodes;
  return evaluate_chain(T, psi, eo);
}

double homotopy_residual(const CellChain& T, const SmoothForm& phi, double eps,
                         const DeRhamData& data, const SmoothingOptions& opts) {
  EvaluationOptions eo;
  eo.rel_tol = std::max(1e-7, opts.rel_tol);  // outer noise floor
  eo.nodes = opts.nodes;
  FormPtr mphi = mollify_form(phi, eps, data, opts);
  double lhs = evaluate_chain(T, *mphi, eo) - evaluate_chain(T, phi, eo);
  double a_d = homotopy_apply(T, exterior_derivative(phi), eps, data, opts);
  CellChain bd = boundary(T);
  double a_b = 0.0;
  if (!bd.cells.empty() && phi.degree() >= 1)
    a_b = homotopy_apply(bd, phi, eps, data, opts);
  return std::abs(lhs - a_d - a_b);
}

}  // namespace currents
