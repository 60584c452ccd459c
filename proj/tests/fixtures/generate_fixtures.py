#!/usr/bin/env python3
"""Generate frozen reference fixtures for the statistical test suite.

Reference implementations: scipy (Shapiro-Wilk), statsmodels (ADF, Granger
F-test, Huber RLM). Run once; outputs are committed. The C++ implementations
are validated against these files, never against live Python.

Usage: python3 generate_fixtures.py [outdir]
"""

import json
import sys

import numpy as np
from scipy import stats
import statsmodels.api as sm
from statsmodels.tsa.stattools import adfuller, grangercausalitytests


def shapiro_fixtures(rng):
    fixtures = []

    # classic reference sample, n=11
    weights = [148, 154, 158, 160, 161, 162, 166, 170, 182, 195, 236]
    w, p = stats.shapiro(weights)
    fixtures.append({"name": "weights_n11", "x": [float(v) for v in weights],
                     "w": float(w), "p": float(p)})

    specs = [
        ("gauss", lambda n: rng.normal(0, 1, n)),
        ("uniform", lambda n: rng.uniform(0, 1, n)),
        ("lognormal", lambda n: np.exp(rng.normal(0, 1, n))),
        ("exponential", lambda n: rng.exponential(1.0, n)),
        ("t3", lambda n: rng.standard_t(3, n)),
    ]
    sizes = [3, 5, 7, 8, 12, 15, 20, 35, 50, 120, 300, 500, 1200, 4999]
    k = 0
    for n in sizes:
        kind, gen = specs[k % len(specs)]
        k += 1
        x = gen(n)
        w, p = stats.shapiro(x)
        fixtures.append({"name": f"{kind}_n{n}", "x": [float(v) for v in x],
                         "w": float(w), "p": float(p)})

    # affine-shifted gaussians (scale/offset stress)
    for i, (a, b, n) in enumerate([(1e6, -3e7, 40), (1e-7, 0.5, 40),
                                   (42.0, 1e4, 90), (-5.0, 2.0, 25)]):
        x = a * rng.normal(0, 1, n) + b
        w, p = stats.shapiro(x)
        fixtures.append({"name": f"affine{i}_n{n}", "x": [float(v) for v in x],
                         "w": float(w), "p": float(p)})

    # near-degenerate but legal: tiny noise
    x = 1.0 + 1e-9 * rng.uniform(0, 1, 60)
    w, p = stats.shapiro(x)
    fixtures.append({"name": "tinynoise_n60", "x": [float(v) for v in x],
                     "w": float(w), "p": float(p)})
    return fixtures


def adf_fixtures(rng):
    fixtures = []

    def add(name, x, maxlag, regression, autolag):
        res = adfuller(np.asarray(x), maxlag=maxlag, regression=regression,
                       autolag=autolag)
        fixtures.append({
            "name": name,
            "x": [float(v) for v in x],
            "maxlag": maxlag,
            "regression": regression,
            "autolag": autolag is not None,
            "tau": float(res[0]),
            "p": float(res[1]),
            "usedlag": int(res[2]),
        })

    # fixed-lag fixtures (pin the regression itself, no lag-selection ambiguity)
    cases = [
        ("wn_c_l0", rng.normal(0, 1, 200), 0, "c"),
        ("wn_c_l2", rng.normal(0, 1, 200), 2, "c"),
        ("wn_ct_l1", rng.normal(0, 1, 150), 1, "ct"),
        ("wn_n_l1", rng.normal(0, 1, 150), 1, "n"),
        ("rw_c_l0", np.cumsum(rng.normal(0, 1, 200)), 0, "c"),
        ("rw_c_l3", np.cumsum(rng.normal(0, 1, 200)), 3, "c"),
        ("rw_ct_l2", np.cumsum(rng.normal(0, 1, 250)), 2, "ct"),
        ("rw_n_l0", np.cumsum(rng.normal(0, 1, 120)), 0, "n"),
        ("ar5_c_l1", None, 1, "c"),
        ("ar5_c_l4", None, 4, "c"),
        ("ar9_c_l2", None, 2, "c"),
        ("ar9_ct_l2", None, 2, "ct"),
        ("trend_rw_ct_l1", None, 1, "ct"),
        ("short_c_l1", rng.normal(0, 1, 30), 1, "c"),
        ("short_rw_c_l1", np.cumsum(rng.normal(0, 1, 30)), 1, "c"),
        ("annual_c_l1", None, 1, "c"),
    ]
    for name, x, lag, reg in cases:
        if x is None:
            if name.startswith("ar5"):
                e = rng.normal(0, 1, 300)
                x = np.zeros(300)
                for t in range(1, 300):
                    x[t] = 0.5 * x[t - 1] + e[t]
                x = x[100:]
            elif name.startswith("ar9"):
                e = rng.normal(0, 1, 400)
                x = np.zeros(400)
                for t in range(1, 400):
                    x[t] = 0.9 * x[t - 1] + e[t]
                x = x[100:]
            elif name.startswith("trend_rw"):
                x = 0.5 * np.arange(200) + np.cumsum(rng.normal(0, 1, 200))
            elif name.startswith("annual"):
                e = rng.normal(0, 1, 20)
                x = np.zeros(20)
                for t in range(1, 20):
                    x[t] = 0.4 * x[t - 1] + e[t]
        add(name, x, lag, reg, None)

    # AIC lag-selection fixtures
    for i, (n, reg, maxlag) in enumerate([(200, "c", 6), (200, "ct", 4),
                                          (150, "c", 8), (120, "n", 5)]):
        e = rng.normal(0, 1, n + 100)
        x = np.zeros(n + 100)
        for t in range(2, n + 100):
            x[t] = 0.6 * x[t - 1] - 0.2 * x[t - 2] + e[t]
        add(f"aic{i}_{reg}", x[100:], maxlag, reg, "AIC")
    return fixtures


def granger_fixtures(rng):
    fixtures = []

    def add(name, x, y, maxlag):
        data = np.column_stack([y, x])  # tests x -> y
        out = grangercausalitytests(data, maxlag=[maxlag], verbose=False)
        f, p, df_denom, df_num = out[maxlag][0]["ssr_ftest"]
        fixtures.append({
            "name": name, "x": [float(v) for v in x],
            "y": [float(v) for v in y], "lag": maxlag,
            "f": float(f), "p": float(p),
            "df_num": int(df_num), "df_denom": int(df_denom),
        })

    n = 120
    e1 = rng.normal(0, 1, n)
    e2 = rng.normal(0, 1, n)
    x = np.zeros(n)
    y = np.zeros(n)
    for t in range(1, n):
        x[t] = 0.5 * x[t - 1] + e1[t]
        y[t] = 0.3 * y[t - 1] + 0.8 * x[t - 1] + 0.3 * e2[t]
    add("coupled_l1", x, y, 1)
    add("coupled_l2", x, y, 2)
    add("coupled_l3", x, y, 3)

    x2 = rng.normal(0, 1, 90)
    y2 = rng.normal(0, 1, 90)
    add("independent_l1", x2, y2, 1)
    add("independent_l2", x2, y2, 2)

    x3 = rng.normal(0, 1, 20)
    y3 = rng.normal(0, 1, 20)
    add("short_l1", x3, y3, 1)
    add("short_l2", x3, y3, 2)
    return fixtures


def rlm_fixtures(rng):
    fixtures = []
    for i, (n, k, outliers) in enumerate([(60, 1, 4), (120, 2, 8), (200, 3, 0)]):
        X = rng.normal(0, 1, (n, k))
        beta = np.arange(1, k + 1, dtype=float)
        y = X @ beta + 0.5 * rng.normal(0, 1, n)
        if outliers:
            idx = rng.choice(n, outliers, replace=False)
            y[idx] += rng.choice([-1, 1], outliers) * rng.uniform(8, 15, outliers)
        exog = sm.add_constant(X)
        fit = sm.RLM(y, exog, M=sm.robust.norms.HuberT(t=1.345)).fit(
            maxiter=100, tol=1e-10, conv="coefs")
        fixtures.append({
            "name": f"huber{i}_n{n}_k{k}",
            "X": [[float(v) for v in row] for row in X],
            "y": [float(v) for v in y],
            "params": [float(v) for v in fit.params],  # [intercept, betas...]
        })
    return fixtures


def adf_pvalue_table():
    """Tau -> asymptotic p grid per regression kind, for embedded interpolation."""
    from statsmodels.tsa.adfvalues import mackinnonp
    taus = np.round(np.arange(-8.0, 4.0 + 1e-9, 0.02), 10)
    table = {}
    for reg in ("n", "c", "ct"):
        table[reg] = [float(mackinnonp(t, regression=reg, N=1)) for t in taus]
    return {"tau_start": -8.0, "tau_step": 0.02, "count": len(taus),
            "kinds": table}


def main():
    outdir = sys.argv[1] if len(sys.argv) > 1 else "."
    rng = np.random.default_rng(20260809)

    sw = shapiro_fixtures(rng)
    adf = adf_fixtures(rng)
    gc = granger_fixtures(rng)
    rlm = rlm_fixtures(rng)

    with open(f"{outdir}/shapiro_fixtures.json", "w") as f:
        json.dump(sw, f, indent=1)
    with open(f"{outdir}/adf_fixtures.json", "w") as f:
        json.dump(adf, f, indent=1)
    with open(f"{outdir}/granger_fixtures.json", "w") as f:
        json.dump(gc, f, indent=1)
    with open(f"{outdir}/rlm_fixtures.json", "w") as f:
        json.dump(rlm, f, indent=1)

    tbl = adf_pvalue_table()
    lines = [
        "# ADF tau -> asymptotic p-value interpolation table (version 1)",
        "# layout: 'grid <tau_start> <tau_step> <count>' then one block per",
        "# regression kind ('kind <name>' followed by <count> p-values, one",
        "# per line, for tau = tau_start + i*tau_step). Linear interpolation",
        "# between grid points; clamped outside the grid.",
        f"grid {tbl['tau_start']} {tbl['tau_step']} {tbl['count']}",
    ]
    for reg in ("n", "c", "ct"):
        lines.append(f"kind {reg}")
        lines.extend(f"{p:.12g}" for p in tbl["kinds"][reg])
    with open(f"{outdir}/adf_pvalues.txt", "w") as f:
        f.write("\n".join(lines) + "\n")

    print(f"shapiro: {len(sw)} fixtures (n11 W={sw[0]['w']:.5f})")
    print(f"adf: {len(adf)} fixtures")
    print(f"granger: {len(gc)} fixtures")
    print(f"rlm: {len(rlm)} fixtures")


if __name__ == "__main__":
    main()
