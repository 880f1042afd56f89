#!/usr/bin/env python3
"""Writes a small random generator and reference outputs from PyTorch.

Files: parity.gsm, parity_input.bin, parity_output.bin (little-endian
float32, N x 1 x S x S each) and, with --model, the outputs of a trained
model on --images.
"""

import argparse
import os
import sys

import numpy as np
import torch
from PIL import Image

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))
from gsm_model import load_gsm_weights, make_generator, save_gsm  # noqa: E402
from train_tiny_cleaner import remove_floaters, to_values  # noqa: E402


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", required=True, help="output directory")
    parser.add_argument("--count", type=int, default=4)
    parser.add_argument("--size", type=int, default=32)
    parser.add_argument("--seed", type=int, default=3)
    parser.add_argument("--model", help="trained .gsm to run on --images")
    parser.add_argument("--images", nargs="*", default=[])
    parser.add_argument("--base", type=int, default=16,
                        help="width of the --model generator")
    parser.add_argument("--blocks", type=int, default=3)
    args = parser.parse_args()
    os.makedirs(args.out, exist_ok=True)
    torch.manual_seed(args.seed)
    torch.set_num_threads(1)

    model = make_generator(base=4, blocks=1)
    with torch.no_grad():
        for p in model.parameters():
            p.copy_(torch.randn_like(p) * 0.3)
    codes = torch.randint(0, 3, (args.count, 1, args.size, args.size))
    x = torch.tensor([-1.0, 0.6, 1.0])[codes]
    with torch.no_grad():
        y = model(x)
    save_gsm(model, os.path.join(args.out, "parity.gsm"))
    x.numpy().astype("<f4").tofile(os.path.join(args.out, "parity_input.bin"))
    y.numpy().astype("<f4").tofile(os.path.join(args.out, "parity_output.bin"))

    if args.model:
        trained = load_gsm_weights(make_generator(args.base, args.blocks),
                                   args.model).eval()
        inputs = np.stack([to_values(remove_floaters(np.array(Image.open(p))))
                           for p in args.images])[:, None]
        with torch.no_grad():
            out = trained(torch.from_numpy(inputs)).numpy()
        inputs.astype("<f4").tofile(os.path.join(args.out, "trained_input.bin"))
        out.astype("<f4").tofile(os.path.join(args.out, "trained_output.bin"))


if __name__ == "__main__":
    main()
