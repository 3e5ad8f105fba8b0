#!/usr/bin/env python3
"""Benchmark the compiled kernel core against the NumPy fallback.

Times the conv2d forward/backward and maxpool kernels at the layer shapes
the N1 preset actually runs, plus a full model forward+backward, for both
backends. Run from the repository root:

    python3 benchmarks/bench_kernels.py [--repeats N]
"""

import argparse
import time

import numpy as np

import frshield  # noqa: F401  (pins BLAS threads before timing)
from frshield._kernels import _numpy as numpy_backend

try:
    from frshield._kernels import _native as native_backend
except ImportError:
    native_backend = None

CONV_CASES = [
    # (label, input shape, weight shape) at training batch 64
    ("conv 1->8   @64x64", (64, 1, 64, 64), (8, 1, 3, 3)),
    ("conv 8->16  @32x32", (64, 8, 32, 32), (16, 8, 3, 3)),
    ("conv 16->27 @16x16", (64, 16, 16, 16), (27, 16, 3, 3)),
    ("conv 8->16  @32x32 b1", (1, 8, 32, 32), (16, 8, 3, 3)),
]


def _time(fn, repeats):
    fn()  # warm up
    t0 = time.perf_counter()
    for _ in range(repeats):
        fn()
    return (time.perf_counter() - t0) / repeats * 1e3


def bench_kernels(repeats):
    rng = np.random.default_rng(0)
    rows = []
    for label, xs, ws in CONV_CASES:
        x = rng.standard_normal(xs).astype(np.float32)
        w = rng.standard_normal(ws).astype(np.float32)
        gy = np.ones(
            numpy_backend.conv2d_forward(x, w, 1, 1).shape, dtype=np.float32
        )
        for name, mod in backends():
            fwd = _time(lambda: mod.conv2d_forward(x, w, 1, 1), repeats)
            gin = _time(
                lambda: mod.conv2d_grad_input(gy, w, xs[2], xs[3], 1, 1), repeats
            )
            gwt = _time(lambda: mod.conv2d_grad_weight(x, gy, 3, 3, 1, 1), repeats)
            rows.append((label, name, fwd, gin, gwt))
    return rows


def bench_model(repeats):
    from frshield.nn import TrainedModel, preset_spec, samples_to_batch
    from frshield.dataio import synth_generate

    samples = synth_generate(64, 2.0, seed=1)
    model = TrainedModel.initialize(preset_spec("N1"), seed=2)
    x, y = samples_to_batch(samples, model.dtype)

    def step():
        model.forward_loss_batch(x, y)
        model.backward_batch(x)

    return _time(step, repeats)


def backends():
    out = [("numpy", numpy_backend)]
    if native_backend is not None:
        out.insert(0, ("native", native_backend))
    return out


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=20)
    args = parser.parse_args()
    if native_backend is None:
        print("note: compiled core unavailable; timing the fallback only\n")
    print(f"{'case':26s} {'backend':7s} {'fwd ms':>8s} {'gradX ms':>9s} {'gradW ms':>9s}")
    for label, name, fwd, gin, gwt in bench_kernels(args.repeats):
        print(f"{label:26s} {name:7s} {fwd:8.2f} {gin:9.2f} {gwt:9.2f}")
    print(f"\nN1 forward+backward, batch 64 ({frshield.backend_name()} backend): "
          f"{bench_model(max(3, args.repeats // 4)):.1f} ms")


if __name__ == "__main__":
    main()
