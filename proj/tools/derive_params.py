#!/usr/bin/env python3
"""Regenerates data/halls_params.txt and include/halls/default_params.hpp.

Measured rows are copied as-is. Every other point of the 4x3x5 design space
gets a `source=derived` row from a per-(device, field) least-squares fit of
log(value) against log2(size), log2(ways), log2(line) over the measured rows.
STT write energies of a derived row are made non-decreasing across retention
classes with a running max.
"""
import itertools
import math
import sys

import numpy as np

DEVICES = ["SRAM", "STT-100us", "STT-1ms", "STT-10ms", "STT-100ms"]
HIT_CYCLES = {d: 2 for d in DEVICES}
WRITE_CYCLES = {"SRAM": 2, "STT-100us": 3, "STT-1ms": 4, "STT-10ms": 6, "STT-100ms": 7}

# (size_kb, ways, line): {field: [SRAM, 100us, 1ms, 10ms, 100ms]}
MEASURED = {
    (1024, 16, 64): dict(
        write=[0.338, 0.392, 0.404, 0.419, 0.438],
        hit=[5.318, 5.794, 5.794, 5.794, 5.794],
        leak=[3234.916, 2200.032, 2200.032, 2200.032, 2200.032]),
    (128, 1, 16): dict(
        write=[0.033, 0.033, 0.037, 0.041, 0.047],
        hit=[0.035, 0.028, 0.028, 0.028, 0.028],
        leak=[277.744, 141.139, 141.282, 141.425, 141.568]),
    (128, 1, 32): dict(
        write=[0.059, 0.059, 0.066, 0.074, 0.084],
        hit=[0.061, 0.051, 0.051, 0.051, 0.051],
        leak=[288.864, 186.218, 186.49, 186.761, 187.033]),
    (128, 2, 32): dict(
        write=[0.058, 0.056, 0.062, 0.07, 0.08],
        hit=[0.117, 0.092, 0.092, 0.092, 0.092],
        leak=[346.743, 185.298, 185.298, 185.298, 185.298]),
    (128, 1, 64): dict(
        write=[0.112, 0.108, 0.12, 0.135, 0.153],
        hit=[0.113, 0.09, 0.09, 0.09, 0.09],
        leak=[325.697, 196.05, 196.05, 196.05, 196.05]),
    (128, 4, 64): dict(
        write=[0.130, 0.150, 0.162, 0.177, 0.196],
        hit=[0.519, 0.519, 0.519, 0.519, 0.520],
        leak=[507.852, 363.607, 363.607, 363.607, 363.607]),
    (256, 8, 64): dict(
        write=[0.193, 0.212, 0.224, 0.24, 0.258],
        hit=[1.526, 1.532, 1.532, 1.532, 1.532],
        leak=[1181.176, 858.677, 858.677, 858.677, 858.677]),
    (512, 16, 64): dict(
        write=[0.309, 0.375, 0.351, 0.367, 0.385],
        hit=[4.871, 5.577, 4.953, 4.953, 4.953],
        leak=[2268.544, 1880.816, 1566.491, 1566.491, 1566.491]),
    (1024, 1, 32): dict(
        write=[0.179, 0.128, 0.135, 0.143, 0.153],
        hit=[0.188, 0.12, 0.121, 0.121, 0.122],
        leak=[1745.328, 762.778, 763.444, 764.109, 764.775]),
    (1024, 1, 64): dict(
        write=[0.335, 0.244, 0.257, 0.273, 0.291],
        hit=[0.344, 0.228, 0.229, 0.229, 0.23],
        leak=[1866.193, 982.701, 983.986, 985.271, 986.555]),
    (1024, 2, 64): dict(
        write=[0.329, 0.25, 0.263, 0.278, 0.292],
        hit=[0.663, 0.464, 0.466, 0.467, 0.458],
        leak=[2276.707, 1472.512, 1475.038, 1477.564, 1456.263]),
    (1024, 4, 64): dict(
        write=[0.354, 0.278, 0.29, 0.305, 0.323],
        hit=[1.415, 1.035, 1.035, 1.035, 1.035],
        leak=[3228.278, 2767.573, 2767.573, 2767.573, 2767.573]),
    (1024, 8, 64): dict(
        write=[0.285, 0.256, 0.268, 0.283, 0.301],
        hit=[2.261, 1.841, 1.841, 1.841, 1.841],
        leak=[2839.156, 1432.367, 1432.367, 1432.367, 1432.367]),
}
BASE = (1024, 16, 64)


def size_name(kb):
    return f"{kb // 1024}M" if kb >= 1024 else f"{kb}K"


def features(key):
    kb, ways, line = key
    return [1.0, math.log2(kb), math.log2(ways), math.log2(line)]


def fit(field, di):
    keys = sorted(MEASURED)
    x = np.array([features(k) for k in keys])
    y = np.array([math.log(MEASURED[k][field][di]) for k in keys])
    coef, *_ = np.linalg.lstsq(x, y, rcond=None)
    return coef


def fmt(v):
    return repr(float(v))


def main(out, header):
    coefs = {(f, di): fit(f, di) for f in ("write", "hit", "leak") for di in range(5)}
    lines = [
        "# LLC energy/latency parameters, 22nm, 2GHz.",
        "# One record per (device, size, ways, line). Units: nJ per access, mW, cycles.",
        "# source=measured: measured rows, copied verbatim.",
        "# source=derived: log-linear least-squares completion (tools/derive_params.py).",
        "# hit_cycles_alt: alternate hit latency for the tuned-configuration rows.",
    ]
    for kb, line, ways in itertools.product([1024, 512, 256, 128], [64, 32, 16], [16, 8, 4, 2, 1]):
        key = (kb, ways, line)
        if key in MEASURED:
            src = "measured"
            vals = MEASURED[key]
            rows = [(vals["write"][i], vals["hit"][i], vals["leak"][i]) for i in range(5)]
        else:
            src = "derived"
            feat = np.array(features(key))
            rows = [tuple(math.exp(float(feat @ coefs[(f, di)])) for f in ("write", "hit", "leak"))
                    for di in range(5)]
            running = 0.0
            fixed = [rows[0]]
            for w, h, l in rows[1:]:
                running = max(running, w)
                fixed.append((running, h, l))
            rows = [(round(w, 3), round(h, 3), round(l, 3)) for w, h, l in fixed]
        for di, dev in enumerate(DEVICES):
            w, h, l = rows[di]
            rec = (f"device={dev} size={size_name(kb)} ways={ways} line={line} "
                   f"write_nJ={fmt(w)} hit_nJ={fmt(h)} leakage_mW={fmt(l)} "
                   f"hit_cycles={HIT_CYCLES[dev]} write_cycles={WRITE_CYCLES[dev]}")
            if src == "measured" and key != BASE:
                rec += " hit_cycles_alt=1"
            rec += f" source={src}"
            lines.append(rec)
    text = "\n".join(lines) + "\n"
    with open(out, "w") as fh:
        fh.write(text)
    with open(header, "w") as fh:
        fh.write("#pragma once\n\n// Generated by tools/derive_params.py from data/halls_params.txt.\n\n"
                 "namespace halls {\n\ninline constexpr const char* kDefaultParamsText = R\"params(")
        fh.write(text)
        fh.write(")params\";\n\n}  // namespace halls\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/halls_params.txt",
         sys.argv[2] if len(sys.argv) > 2 else "include/halls/default_params.hpp")
