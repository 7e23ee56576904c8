"""Compiled vs numpy GRU cell: agreement and wall time per forward+backward call.

    python3 benchmarks/bench_gru.py [--repeat 200]

Shapes cover the agent network (batch x agents rows, 64 hidden) at a few batch sizes.
"""
import argparse
import timeit

import numpy as np

from dwmix.diffcore import _gru_py

try:
    from dwmix.diffcore import _gru_ext
except ImportError:
    _gru_ext = None

SHAPES = [(48, 26, 64), (240, 26, 64), (960, 26, 64), (16, 64, 128)]


def make_inputs(rows, n_in, hid, seed=0):
    rng = np.random.default_rng(seed)
    x = rng.standard_normal((rows, n_in))
    h = rng.standard_normal((rows, hid)) * 0.5
    w_ih = rng.standard_normal((n_in, 3 * hid)) / np.sqrt(n_in)
    w_hh = rng.standard_normal((hid, 3 * hid)) / np.sqrt(hid)
    b_ih, b_hh = rng.standard_normal(3 * hid) * 0.1, rng.standard_normal(3 * hid) * 0.1
    g = rng.standard_normal((rows, hid))
    return x, h, w_ih, w_hh, b_ih, b_hh, g


def step(mod, args):
    x, h, w_ih, w_hh, b_ih, b_hh, g = args
    out, cache = mod.gru_forward(x, h, w_ih, w_hh, b_ih, b_hh)
    return (out,) + tuple(mod.gru_backward(g, x, h, w_ih, w_hh, *cache))


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=200)
    args = ap.parse_args(argv)
    if _gru_ext is None:
        print("compiled extension not built; only the numpy path is available")
    print(f"{'rows':>5} {'in':>4} {'hid':>4} {'numpy us':>10} {'compiled us':>12} {'speedup':>8} {'max abs diff':>13}")
    for shape in SHAPES:
        a = make_inputs(*shape)
        t_py = min(timeit.repeat(lambda: step(_gru_py, a), number=args.repeat, repeat=3)) / args.repeat
        if _gru_ext is None:
            print(f"{shape[0]:>5} {shape[1]:>4} {shape[2]:>4} {t_py * 1e6:>10.1f}")
            continue
        t_c = min(timeit.repeat(lambda: step(_gru_ext, a), number=args.repeat, repeat=3)) / args.repeat
        diff = max(float(np.max(np.abs(p - c))) for p, c in zip(step(_gru_py, a), step(_gru_ext, a)))
        print(f"{shape[0]:>5} {shape[1]:>4} {shape[2]:>4} {t_py * 1e6:>10.1f} {t_c * 1e6:>12.1f} "
              f"{t_py / t_c:>7.2f}x {diff:>13.2e}")


if __name__ == "__main__":
    main()
