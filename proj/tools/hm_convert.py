#!/usr/bin/env python3
"""Convert association-scheme relation matrices into dsrg scheme files.

The input holds one or more n x n relation matrices, one matrix row per line.
A row is either whitespace-separated integers or a run of single characters
0-9, a-z, A-Z (so 'a' is 10, 'A' is 36). Matrices are separated by blank
lines or by any line that is not a matrix row (headers such as
"# as30 nr 3" are fine). Relation numbers are kept as they are, so class
indices in the output match the numbering of the source file.

Each matrix is written as  <out-dir>/as<order>_<nr>.txt  in the format

    n r
    c11 c12 ... c1n
    ...

where nr counts matrices of the same order in input order, starting at
--first (default 1). Pass --nr to name a single-matrix input explicitly.
"""

import argparse
import pathlib
import re
import string
import sys

DIGITS = string.digits + string.ascii_lowercase + string.ascii_uppercase
CHAR_ROW = re.compile(r"^[0-9a-zA-Z]+$")
INT_ROW = re.compile(r"^\d+(\s+\d+)*$")


def parse_row(line):
    """Return the row as a list of ints, or None if it is not a matrix row."""
    s = line.strip()
    if not s:
        return None
    if INT_ROW.match(s) and (" " in s or "\t" in s):
        return [int(x) for x in s.split()]
    if CHAR_ROW.match(s):
        return [DIGITS.index(ch) for ch in s]
    return None


def read_matrices(text):
    """Split the text into square matrices."""
    blocks, cur = [], []
    for line in text.splitlines():
        row = parse_row(line)
        if row is None:
            if cur:
                blocks.append(cur)
                cur = []
            continue
        if cur and len(row) != len(cur[0]):
            raise ValueError(f"row of length {len(row)} inside a matrix of width {len(cur[0])}")
        cur.append(row)
        if len(cur) == len(cur[0]):
            blocks.append(cur)
            cur = []
    if cur:
        blocks.append(cur)
    for m in blocks:
        if len(m) != len(m[0]):
            raise ValueError(f"matrix with {len(m)} rows and {len(m[0])} columns")
    return blocks


def check_matrix(m):
    """Basic sanity: contiguous colors, diagonal colors not used off the diagonal."""
    n = len(m)
    colors = {c for row in m for c in row}
    r = max(colors) + 1
    if colors != set(range(r)):
        raise ValueError(f"colors are not contiguous from 0: {sorted(colors)}")
    diag = {m[i][i] for i in range(n)}
    for i in range(n):
        for j in range(n):
            if i != j and m[i][j] in diag:
                raise ValueError(f"diagonal color {m[i][j]} used at ({i + 1},{j + 1})")
    return r


def format_scheme(m):
    r = check_matrix(m)
    lines = [f"{len(m)} {r}"] + [" ".join(map(str, row)) for row in m]
    return "\n".join(lines) + "\n"


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("input", help="matrix file ('-' for stdin)")
    ap.add_argument("--out-dir", default=".", help="directory for as<order>_<nr>.txt files")
    ap.add_argument("--first", type=int, default=1, help="number of the first matrix of each order")
    ap.add_argument("--nr", type=int, help="number for a single-matrix input")
    args = ap.parse_args(argv)

    text = sys.stdin.read() if args.input == "-" else pathlib.Path(args.input).read_text()
    mats = read_matrices(text)
    if not mats:
        ap.error("no matrices found")
    if args.nr is not None and len(mats) != 1:
        ap.error(f"--nr needs exactly one matrix, found {len(mats)}")

    out = pathlib.Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    next_nr = {}
    for m in mats:
        n = len(m)
        nr = args.nr if args.nr is not None else next_nr.get(n, args.first)
        next_nr[n] = nr + 1
        path = out / f"as{n}_{nr}.txt"
        path.write_text(format_scheme(m))
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
