"""Smoke tests for the python module: one probe per subsystem."""

import math
import sys

import disktrace as dt


def close(a, b, tol):
    return abs(a - b) <= tol


def main():
    # weights
    w = dt.WeightSequence.builtin("n_plus_1")
    assert w.at(0) == 1.0 and w.at(4) == 5.0
    assert w.start_index == 0
    cls = dt.classify(w, 1000, 1e-12)
    assert cls.shape == dt.Shape.affine and cls.ratio_limit_ok

    # series
    f = dt.PowerSeries([0, 1, 0, 2])
    assert f.degree == 3
    assert close(dt.evaluate(f, 0.5), 0.5 + 2 * 0.125, 1e-15)
    assert close(dt.dirichlet_form(f, dt.PowerSeries.monomial(3)), 6.0, 1e-15)

    # operators + trace
    op = dt.ShiftOperator(dt.WeightSequence.builtin("one"))
    tr = dt.monomial_trace_series(op, 3, 1e-12)
    assert tr.converged and tr.value == 3.0 and tr.partial_terms_used == 3

    wop = dt.ShiftOperator(dt.WeightSequence.builtin("n_plus_1"),
                           dt.ShiftWeights.parse("n_over_n_plus_1"))
    tr2 = dt.monomial_trace_series(wop, 2, 1e-5)
    assert tr2.converged and close(tr2.value, 2.0, 1e-5)

    b = dt.bilinear_form(f, f, op, 1e-9)
    d = dt.dirichlet_oracle(f, f)
    assert close(b.value, d, 1e-8)

    # kernels
    wn = dt.WeightSequence.builtin("n")
    k = dt.kernel_series(wn, 0.5, 1.0, 1e-14)
    assert close(k, -math.log(0.5), 1e-13)
    kf = dt.kernel_form_for(wn)
    assert kf.kind == "log"
    assert close(dt.closed_form_total(kf, 0.5), -math.log(0.5), 1e-13)
    assert close(dt.polylog(2, 0.5), 0.5822405264650125, 1e-13)

    rc = dt.reproducing_check(wn, dt.PowerSeries.monomial(3), 0.4 + 0.2j, 1e-10)
    assert rc.passed

    # quadrature
    dw = dt.DiskWeight(0.0, 1.0, 0)
    assert close(dt.disk_moment_analytic(dw, 0), 0.5, 1e-15)
    assert close(dt.disk_moment_numeric(dw, 0, 1e-10), 0.5, 1e-9)
    z2 = dt.PowerSeries.monomial(2)
    ip = dt.weighted_inner_product_num(z2, z2, dt.DiskWeight(0.0, 0.0, 2), 1e-10)
    assert close(ip, 4.0, 1e-9)

    # a slice of the verification matrix through the bindings
    rows = dt.run_criterion(4)
    assert rows and all(r.passed for r in rows)

    print("python smoke tests passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
