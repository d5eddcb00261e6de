#!/usr/bin/env python3
"""Pull the printed number triangles out of a markdown/LaTeX source.

Usage: extract_triangles.py SOURCE.md > reference_triangles.inc

Each triangle becomes a C++ initializer {key, {{n, i, "value"}, ...}}.
"""
import re
import sys

KEYS = {
    "1.1": "M", "2.0": "Gnk", "2.1": "V", "2.2": "H", "2.3": "D", "2.4": "U",
    "3.1": "B", "3.2": "Cpt", "3.3": "alpha", "3.4": "beta", "3.5": "mu", "3.6": "r",
    "4.1": "Lud", "4.2": "Luh", "4.3": "Luu", "4.4": "Lhh", "4.5": "Lhd", "4.6": "Lvu",
    "4.7": "Lvv", "4.8": "Ldu", "4.9": "Ldd", "4.10": "Ldv",
}


def parse_array(lines):
    cells = []
    for line in lines:
        line = line.replace(r"\hline", "").strip()
        if not line or line.startswith("n/") or line.startswith(r"\begin"):
            continue
        line = line.rstrip("\\").strip()
        cols = [c.strip() for c in line.split("&")]
        if not cols[0].isdigit():
            continue
        n = int(cols[0])
        for i, v in enumerate(cols[1:]):
            if v:
                cells.append((n, i, v))
    return cells


def main():
    text = open(sys.argv[1], encoding="utf-8").read().splitlines()
    out = []
    for idx, line in enumerate(text):
        m = re.match(r"^Table (\d+\.\d+)\.", line)
        if not m or m.group(1) not in KEYS:
            continue
        end = max(j for j in range(idx) if r"\end{array}" in text[j])
        start = max(j for j in range(end) if r"\begin{array}" in text[j])
        cells = parse_array(text[start:end])
        body = ", ".join(f'{{{n}, {i}, "{v}"}}' for n, i, v in cells)
        out.append(f'{{"{KEYS[m.group(1)]}", {{{body}}}}},')
    print("// Generated by extract_triangles.py; do not edit.")
    print("\n".join(out))


if __name__ == "__main__":
    main()
