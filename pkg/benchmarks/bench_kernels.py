"""Benchmark the compiled pulse kernels against the numpy fallback.

Workload mirrors one hardware-aware training step on the default topology:
batched pulse updates over the 784x150 and 150x10 weight matrices, plus a
verification pass asserting the two backends agree bitwise.

Run:  python benchmarks/bench_kernels.py
"""

import time

import numpy as np

from xbtsim import devices
from xbtsim.kernels import backends
from xbtsim.rng import substream

CR = devices.ConductanceRange(133.0, 233.0)


def tabular_case(n, seed, p_scale=4):
    model = devices.fefet_1pct()
    g = substream(seed, "g").uniform(CR.g_min, CR.g_max, n)
    p = substream(seed, "p").poisson(p_scale, n) \
        * substream(seed, "s").choice([-1, 1], n)
    p = p.astype(np.int64)
    absp = np.abs(p)
    offsets = np.zeros(n, dtype=np.int64)
    np.cumsum(absp[:-1], out=offsets[1:])
    u = substream(seed, "u").random(int(absp.sum()))
    return model, (g, p, model.cdf_set, model.cdf_reset, CR.g_min, CR.g_max,
                   model.n_bins / CR.span, u, offsets)


def analytical_case(n, seed, p_scale=4):
    model = devices.reram_real()
    g = substream(seed, "g").uniform(CR.g_min, CR.g_max, n)
    p = substream(seed, "p").poisson(p_scale, n) \
        * substream(seed, "s").choice([-1, 1], n)
    p = p.astype(np.int64)
    absp = np.abs(p)
    offsets = np.zeros(n, dtype=np.int64)
    np.cumsum(absp[:-1], out=offsets[1:])
    factor = np.maximum(
        1.0 + model.d2d_sigma * substream(seed, "d").standard_normal(n), 1e-6)
    cs, bs = devices._analytical_polarity_params(model, factor, devices.SET)
    cr_, br_ = devices._analytical_polarity_params(model, factor,
                                                   devices.RESET)
    pos = p > 0
    coef = np.where(pos, cs, cr_)
    bfull = np.where(pos, bs, br_)
    sign = np.where(pos, 1.0, -1.0)
    z = substream(seed, "z").standard_normal(int(absp.sum()))
    return model, (g, p, coef, bfull, sign, model.c2c_sigma, z, offsets,
                   CR.g_min, CR.g_max)


def bench(fn, args, repeats=20):
    fn(*args)  # warmup
    t0 = time.perf_counter()
    for _ in range(repeats):
        fn(*args)
    return (time.perf_counter() - t0) / repeats


def main():
    impls = backends()
    n = 784 * 150 + 150 * 10
    print(f"entries per update: {n}; backends: {', '.join(impls)}")
    for name, builder in (("tabular", tabular_case),
                          ("analytical", analytical_case)):
        _, args = builder(n, seed=0)
        kernel = f"apply_pulses_{name}"
        times = {}
        outputs = {}
        for backend, impl in impls.items():
            times[backend] = bench(getattr(impl, kernel), args)
            outputs[backend] = np.asarray(getattr(impl, kernel)(*args))
        line = f"{name:10s} " + "  ".join(
            f"{b}: {t * 1e3:8.3f} ms" for b, t in times.items())
        if len(impls) == 2:
            assert np.array_equal(outputs["python"], outputs["compiled"]), \
                "backends disagree"
            line += f"  speedup: {times['python'] / times['compiled']:.1f}x" \
                    "  (bitwise equal)"
        print(line)
    if len(impls) < 2:
        print("compiled backend unavailable; built fallback timings only")


if __name__ == "__main__":
    main()
