// Copyright 2026 The poincare Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "optimize.h"

#include <cmath>
#include <limits>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_min.h>
#include <gsl/gsl_multimin.h>

namespace poincare::detail {

namespace {

struct Callbacks {
    const Objective *f;
    const Gradient *grad;
    std::vector<double> buf;
    std::vector<double> gbuf;
};

void load(Callbacks *cb, const gsl_vector *v) {
    for (size_t i = 0; i < v->size; i++) {
        cb->buf[i] = gsl_vector_get(v, i);
    }
}

double eval_f(const gsl_vector *v, void *params) {
    auto *cb = static_cast<Callbacks *>(params);
    load(cb, v);
    double r = (*cb->f)(cb->buf);
    return std::isfinite(r) ? r : std::numeric_limits<double>::max();
}

void eval_df(const gsl_vector *v, void *params, gsl_vector *df) {
    auto *cb = static_cast<Callbacks *>(params);
    load(cb, v);
    (*cb->grad)(cb->buf, cb->gbuf);
    for (size_t i = 0; i < v->size; i++) {
        gsl_vector_set(df, i, cb->gbuf[i]);
    }
}

void eval_fdf(const gsl_vector *v, void *params, double *f, gsl_vector *df) {
    *f = eval_f(v, params);
    eval_df(v, params, df);
}

struct Silence {
    Silence() { gsl_set_error_handler_off(); }
};

void silence() {
    static Silence s;
}

}  // namespace

Minimum nelder_mead(const Objective &f, std::vector<double> x0, double step, double size_tol, int max_iter) {
    silence();
    size_t n = x0.size();
    Callbacks cb{&f, nullptr, std::vector<double>(n), {}};
    gsl_multimin_function fn{&eval_f, n, &cb};
    gsl_vector *x = gsl_vector_alloc(n);
    gsl_vector *ss = gsl_vector_alloc(n);
    for (size_t i = 0; i < n; i++) {
        gsl_vector_set(x, i, x0[i]);
    }
    gsl_vector_set_all(ss, step);
    gsl_multimin_fminimizer *s = gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, n);
    gsl_multimin_fminimizer_set(s, &fn, x, ss);
    for (int it = 0; it < max_iter; it++) {
        if (gsl_multimin_fminimizer_iterate(s) != GSL_SUCCESS) {
            break;
        }
        if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(s), size_tol) == GSL_SUCCESS) {
            break;
        }
    }
    Minimum m{std::vector<double>(n), s->fval};
    for (size_t i = 0; i < n; i++) {
        m.x[i] = gsl_vector_get(s->x, i);
    }
    gsl_multimin_fminimizer_free(s);
    gsl_vector_free(ss);
    gsl_vector_free(x);
    return m;
}

Minimum bfgs(const Objective &f, const Gradient &grad, std::vector<double> x0, double grad_tol, int max_iter) {
    silence();
    size_t n = x0.size();
    Callbacks cb{&f, &grad, std::vector<double>(n), std::vector<double>(n)};
    gsl_multimin_function_fdf fn{&eval_f, &eval_df, &eval_fdf, n, &cb};
    gsl_vector *x = gsl_vector_alloc(n);
    for (size_t i = 0; i < n; i++) {
        gsl_vector_set(x, i, x0[i]);
    }
    gsl_multimin_fdfminimizer *s = gsl_multimin_fdfminimizer_alloc(gsl_multimin_fdfminimizer_vector_bfgs2, n);
    gsl_multimin_fdfminimizer_set(s, &fn, x, 0.05, 0.1);
    for (int it = 0; it < max_iter; it++) {
        if (gsl_multimin_fdfminimizer_iterate(s) != GSL_SUCCESS) {
            break;
        }
        if (gsl_multimin_test_gradient(s->gradient, grad_tol) == GSL_SUCCESS) {
            break;
        }
    }
    Minimum m{std::vector<double>(n), s->f};
    for (size_t i = 0; i < n; i++) {
        m.x[i] = gsl_vector_get(s->x, i);
    }
    gsl_multimin_fdfminimizer_free(s);
    gsl_vector_free(x);
    return m;
}

double golden_section(const std::function<double(double)> &f, double a, double guess, double b, double tol,
                      int max_iter) {
    silence();
    auto thunk = [](double t, void *p) { return (*static_cast<const std::function<double(double)> *>(p))(t); };
    gsl_function fn{thunk, const_cast<std::function<double(double)> *>(&f)};
    gsl_min_fminimizer *s = gsl_min_fminimizer_alloc(gsl_min_fminimizer_goldensection);
    if (gsl_min_fminimizer_set(s, &fn, guess, a, b) != GSL_SUCCESS) {
        gsl_min_fminimizer_free(s);
        return guess;
    }
    for (int it = 0; it < max_iter; it++) {
        if (gsl_min_fminimizer_iterate(s) != GSL_SUCCESS) {
            break;
        }
        double lo = gsl_min_fminimizer_x_lower(s), hi = gsl_min_fminimizer_x_upper(s);
        if (gsl_min_test_interval(lo, hi, tol, 0.0) == GSL_SUCCESS) {
            break;
        }
    }
    double x = gsl_min_fminimizer_x_minimum(s);
    gsl_min_fminimizer_free(s);
    return x;
}

}  // namespace poincare::detail
