#!/usr/bin/env python3
"""Trains the tiny generator on paired errorsim data and exports a .gsm.

Supervised L1 on (erroneous, clean) pairs. This produces the checked-in test
fixture only; it is not the contrastive GAN trainer.
"""

import argparse
import os
import sys
import time

import numpy as np
import torch
from PIL import Image

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))
from gsm_model import make_generator, save_gsm  # noqa: E402

OCCUPIED, FREE, UNEXPLORED = 0, 200, 255
VALUES = {OCCUPIED: -1.0, FREE: 0.6, UNEXPLORED: 1.0}


def remove_floaters(img):
    """Pixels with fewer than two equal 4-neighbors become unexplored."""
    padded = np.pad(img.astype(np.int16), 1, constant_values=-1)
    same = np.zeros(img.shape, np.int8)
    for dr, dc in ((-1, 0), (1, 0), (0, -1), (0, 1)):
        same += padded[1 + dr:1 + dr + img.shape[0],
                       1 + dc:1 + dc + img.shape[1]] == img
    out = img.copy()
    out[(same < 2) & (img != UNEXPLORED)] = UNEXPLORED
    return out


def to_values(img):
    out = np.empty(img.shape, np.float32)
    for code, value in VALUES.items():
        out[img == code] = value
    return out


def load_pairs(directory):
    ids = [line.split()[0] for line in open(os.path.join(directory, "manifest.txt"))
           if line.strip()]
    xs, ys = [], []
    for i in ids:
        err = np.array(Image.open(os.path.join(directory, f"{i}_err.png")))
        clean = np.array(Image.open(os.path.join(directory, f"{i}_clean.png")))
        if err.shape != (256, 256):
            continue
        xs.append(to_values(remove_floaters(err)))
        ys.append(to_values(clean))
    return np.stack(xs)[:, None], np.stack(ys)[:, None]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--data", required=True, help="errorsim dataset directory")
    parser.add_argument("--out", required=True, help="output .gsm path")
    parser.add_argument("--steps", type=int, default=3000)
    parser.add_argument("--batch", type=int, default=4)
    parser.add_argument("--crop", type=int, default=128)
    parser.add_argument("--lr", type=float, default=2e-4)
    parser.add_argument("--occupied-weight", type=float, default=1.0)
    parser.add_argument("--base", type=int, default=16,
                        help="channels after the stem convolution")
    parser.add_argument("--blocks", type=int, default=3, help="residual blocks")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--threads", type=int, default=1)
    args = parser.parse_args()

    torch.manual_seed(args.seed)
    torch.set_num_threads(args.threads)
    rng = np.random.default_rng(args.seed)
    x_all, y_all = load_pairs(args.data)
    print(f"{len(x_all)} pairs", flush=True)

    model = make_generator(args.base, args.blocks)
    opt = torch.optim.Adam(model.parameters(), lr=args.lr, betas=(0.5, 0.999))
    sched = torch.optim.lr_scheduler.LambdaLR(
        opt, lambda s: min(1.0, 2.0 * (1.0 - s / args.steps)))
    start = time.time()
    for step in range(args.steps):
        idx = rng.integers(0, len(x_all), args.batch)
        r0, c0 = rng.integers(0, 256 - args.crop + 1, 2)
        x = x_all[idx, :, r0:r0 + args.crop, c0:c0 + args.crop]
        y = y_all[idx, :, r0:r0 + args.crop, c0:c0 + args.crop]
        k = int(rng.integers(0, 4))
        x = np.ascontiguousarray(np.rot90(x, k, axes=(2, 3)))
        y = np.ascontiguousarray(np.rot90(y, k, axes=(2, 3)))
        x, y = torch.from_numpy(x), torch.from_numpy(y)
        pred = model(x)
        weight = torch.where(y < 0, args.occupied_weight, 1.0)
        loss = (weight * (pred - y).abs()).mean()
        opt.zero_grad()
        loss.backward()
        opt.step()
        sched.step()
        if step % 100 == 0 or step == args.steps - 1:
            print(f"step {step} loss {loss.item():.4f} "
                  f"elapsed {time.time() - start:.0f}s", flush=True)
            save_gsm(model, args.out)
            torch.save(model.state_dict(), args.out + ".pt")
    save_gsm(model, args.out)
    torch.save(model.state_dict(), args.out + ".pt")


if __name__ == "__main__":
    main()
