#!/usr/bin/env python3
"""Writes an image pair and its SSIM as computed by scikit-image.

The C++ metric uses an 11x11 Gaussian window (sigma 1.5), population
covariances and averages over fully covered windows, which is what
skimage computes with these arguments once its border crop is applied.
"""

import argparse
import os

import numpy as np
from PIL import Image
from skimage.metrics import structural_similarity


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", required=True)
    parser.add_argument("--seed", type=int, default=11)
    args = parser.parse_args()
    os.makedirs(args.out, exist_ok=True)
    rng = np.random.default_rng(args.seed)
    codes = np.array([0, 200, 255], dtype=np.uint8)
    a = codes[rng.integers(0, 3, size=(40, 48))]
    a[5:30, 10:14] = 0
    b = a.copy()
    flip = rng.random(a.shape) < 0.2
    b[flip] = codes[rng.integers(0, 3, size=int(flip.sum()))]
    c = rng.integers(0, 256, size=(33, 57), dtype=np.uint8)
    d = np.clip(c.astype(int) + rng.integers(-40, 41, size=c.shape), 0, 255)
    d = d.astype(np.uint8)
    lines = []
    for name, (x, y) in {"trinary": (a, b), "gray": (c, d)}.items():
        Image.fromarray(x).save(os.path.join(args.out, name + "_a.png"))
        Image.fromarray(y).save(os.path.join(args.out, name + "_b.png"))
        value = structural_similarity(
            x.astype(np.float64), y.astype(np.float64), data_range=255,
            gaussian_weights=True, sigma=1.5, use_sample_covariance=False)
        lines.append("%s %.17g\n" % (name, value))
    with open(os.path.join(args.out, "expected.txt"), "w") as f:
        f.writelines(lines)


if __name__ == "__main__":
    main()
