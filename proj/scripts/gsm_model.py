"""PyTorch mirror of the ResNet generator and the .gsm writer/reader."""

import struct

import numpy as np
import torch
from torch import nn

MAGIC = b"GSM1"


class ResidualBlock(nn.Module):
    def __init__(self, channels):
        super().__init__()
        self.body = nn.Sequential(
            nn.ReflectionPad2d(1),
            nn.Conv2d(channels, channels, 3),
            nn.InstanceNorm2d(channels, affine=True),
            nn.ReLU(),
            nn.ReflectionPad2d(1),
            nn.Conv2d(channels, channels, 3),
            nn.InstanceNorm2d(channels, affine=True),
        )

    def forward(self, x):
        return x + self.body(x)


def make_generator(base=32, blocks=3):
    layers = [
        nn.ReflectionPad2d(3),
        nn.Conv2d(1, base, 7),
        nn.InstanceNorm2d(base, affine=True),
        nn.ReLU(),
        nn.Conv2d(base, 2 * base, 3, stride=2, padding=1),
        nn.InstanceNorm2d(2 * base, affine=True),
        nn.ReLU(),
        nn.Conv2d(2 * base, 4 * base, 3, stride=2, padding=1),
        nn.InstanceNorm2d(4 * base, affine=True),
        nn.ReLU(),
    ]
    layers += [ResidualBlock(4 * base) for _ in range(blocks)]
    layers += [
        nn.ConvTranspose2d(4 * base, 2 * base, 4, stride=2, padding=1),
        nn.InstanceNorm2d(2 * base, affine=True),
        nn.ReLU(),
        nn.ConvTranspose2d(2 * base, base, 4, stride=2, padding=1),
        nn.InstanceNorm2d(base, affine=True),
        nn.ReLU(),
        nn.ReflectionPad2d(3),
        nn.Conv2d(base, 1, 7),
        nn.Tanh(),
    ]
    return nn.Sequential(*layers)


def _flatten(module, channels, header, tensors):
    """Appends header lines and weight tensors for `module`; returns channels."""
    if isinstance(module, nn.Sequential):
        for child in module:
            channels = _flatten(child, channels, header, tensors)
        return channels
    if isinstance(module, ResidualBlock):
        header.append(f"residual-block-begin {channels} {channels} 0 1 0")
        channels = _flatten(module.body, channels, header, tensors)
        header.append(f"residual-block-end {channels} {channels} 0 1 0")
        return channels
    if isinstance(module, nn.ReflectionPad2d):
        header.append(f"reflection-pad {channels} {channels} 0 1 {module.padding[0]}")
    elif isinstance(module, nn.ConvTranspose2d):
        header.append(
            f"transposed-conv {module.in_channels} {module.out_channels} "
            f"{module.kernel_size[0]} {module.stride[0]} {module.padding[0]}")
        tensors += [module.weight, module.bias]
        channels = module.out_channels
    elif isinstance(module, nn.Conv2d):
        header.append(
            f"conv {module.in_channels} {module.out_channels} "
            f"{module.kernel_size[0]} {module.stride[0]} {module.padding[0]}")
        tensors += [module.weight, module.bias]
        channels = module.out_channels
    elif isinstance(module, nn.InstanceNorm2d):
        header.append(f"instance-norm {channels} {channels} 0 1 0")
        tensors += [module.weight, module.bias]
    elif isinstance(module, nn.ReLU):
        header.append(f"relu {channels} {channels} 0 1 0")
    elif isinstance(module, nn.Tanh):
        header.append(f"tanh {channels} {channels} 0 1 0")
    else:
        raise TypeError(f"unsupported layer {type(module).__name__}")
    return channels


def to_gsm(model):
    header, tensors = [], []
    _flatten(model, 1, header, tensors)
    weights = np.concatenate(
        [t.detach().cpu().numpy().astype("<f4").ravel() for t in tensors])
    return MAGIC + ("\n".join(header) + "\n").encode() + b"\0" + weights.tobytes()


def save_gsm(model, path):
    with open(path, "wb") as f:
        f.write(to_gsm(model))


def load_gsm_weights(model, path):
    """Loads weights from a .gsm written for the same architecture."""
    data = open(path, "rb").read()
    end = data.index(b"\0")
    weights = np.frombuffer(data[end + 1:], dtype="<f4")
    header, tensors = [], []
    _flatten(model, 1, header, tensors)
    offset = 0
    with torch.no_grad():
        for t in tensors:
            n = t.numel()
            t.copy_(torch.from_numpy(weights[offset:offset + n].copy()).view_as(t))
            offset += n
    if offset != weights.size:
        raise ValueError(f"weight count mismatch: expected {offset}, found {weights.size}")
    return model
