#include "inscribed/optim.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace insc {

NmResult nelder_mead(const std::function<double(const Vec&)>& f, const Vec& x0,
                     double step, int max_eval, double ftol) {
  const int k = static_cast<int>(x0.size());
  std::vector<Vec> xs;
  std::vector<double> fs;
  int evals = 0;
  auto eval = [&](const Vec& x) {
    ++evals;
    return f(x);
  };

  xs.push_back(x0);
  fs.push_back(eval(x0));
  for (int i = 0; i < k; ++i) {
    Vec x = x0;
    x(i) += step;
    xs.push_back(x);
    fs.push_back(eval(x));
  }

  auto order = [&]() {
    std::vector<int> idx(k + 1);
    for (int i = 0; i <= k; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return fs[a] < fs[b]; });
    std::vector<Vec> nxs(k + 1);
    std::vector<double> nfs(k + 1);
    for (int i = 0; i <= k; ++i) {
      nxs[i] = xs[idx[i]];
      nfs[i] = fs[idx[i]];
    }
    xs = std::move(nxs);
    fs = std::move(nfs);
  };

  while (evals < max_eval) {
    order();
    if (fs[k] - fs[0] < ftol) break;
    Vec cen = Vec::Zero(k);
    for (int i = 0; i < k; ++i) cen += xs[i];
    cen /= k;

    Vec xr = cen + (cen - xs[k]);
    double fr = eval(xr);
    if (fr < fs[0]) {
      Vec xe = cen + 2.0 * (cen - xs[k]);
      double fe = eval(xe);
      if (fe < fr) {
        xs[k] = xe;
        fs[k] = fe;
      } else {
        xs[k] = xr;
        fs[k] = fr;
      }
    } else if (fr < fs[k - 1]) {
      xs[k] = xr;
      fs[k] = fr;
    } else {
      Vec xc = cen + 0.5 * ((fr < fs[k] ? xr : xs[k]) - cen);
      double fc = eval(xc);
      if (fc < std::min(fr, fs[k])) {
        xs[k] = xc;
        fs[k] = fc;
      } else {
        for (int i = 1; i <= k; ++i) {
          xs[i] = xs[0] + 0.5 * (xs[i] - xs[0]);
          fs[i] = eval(xs[i]);
        }
      }
    }
  }
  order();
  return {xs[0], fs[0], evals};
}

double golden_max(const std::function<double(double)>& f, double lo, double hi,
                  double xtol) {
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - phi * (b - a), d = a + phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > xtol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace insc
