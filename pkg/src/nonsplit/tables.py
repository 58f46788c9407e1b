"""Tables of 4A(n, P_d) and their maximizers, in the printed rounding style."""

from concurrent.futures import ProcessPoolExecutor
from decimal import ROUND_HALF_EVEN, Decimal

import mpmath

from .admissible import generate_extremal
from .exponent import DEFAULT_PRECISION, maximize_A

TABLE_N = (2, 3, 4, 5, 6, 7, 8, 9, 10, 20, 50, 100, 200, 500, 1000, 2000, 5000, 10000)
TABLE_DEGREES = (100, 1)


def _decimal(x):
    return Decimal(mpmath.nstr(x, 40, min_fixed=-50, max_fixed=50))


def round_sig(x, sig=4):
    """Round half-even to ``sig`` significant figures; returns a Decimal."""
    d = _decimal(x)
    if d == 0:
        return d
    exp = d.adjusted() - sig + 1
    return d.quantize(Decimal(1).scaleb(exp), rounding=ROUND_HALF_EVEN)


def format_four_a(x):
    return str(round_sig(x, 4))


def format_lambda(x):
    """Four significant figures above 1, four decimals (no leading zero) below."""
    d = _decimal(x)
    if d >= 1:
        return str(round_sig(x, 4))
    q = d.quantize(Decimal("0.0001"), rounding=ROUND_HALF_EVEN)
    s = f"{q:.4f}"
    return s[1:] if s.startswith("0") else s


def last_digit_unit(printed):
    """Value of one unit in the last printed digit, e.g. '.0646' -> 0.0001."""
    s = printed.lstrip("-")
    if "." not in s:
        return Decimal(1)
    return Decimal(1).scaleb(-len(s.split(".", 1)[1]))


def _cell(args):
    n, d, precision = args
    res = maximize_A(n, generate_extremal(d), precision)
    return n, d, res


def compute_cells(degrees=TABLE_DEGREES, ns=TABLE_N, precision=DEFAULT_PRECISION, jobs=1):
    """Map (n, d) -> ExponentResult, in a deterministic order."""
    tasks = [(n, d, precision) for n in ns for d in degrees]
    if jobs and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_cell, tasks))
    else:
        results = [_cell(t) for t in tasks]
    return {(n, d): res for n, d, res in results}


def table_rows(degrees=TABLE_DEGREES, ns=TABLE_N, precision=DEFAULT_PRECISION, jobs=1):
    cells = compute_cells(degrees, ns, precision, jobs)
    rows = []
    for n in ns:
        row = {"n": n}
        for d in degrees:
            res = cells[(n, d)]
            row[f"four_A_d{d}"] = format_four_a(res.four_A)
            row[f"lambda_d{d}"] = format_lambda(res.lambda_star)
            row[f"_exact_d{d}"] = res
        rows.append(row)
    return rows


def row_cells(row, degrees):
    out = [str(row["n"])]
    for d in degrees:
        out += [row[f"four_A_d{d}"], row[f"lambda_d{d}"]]
    return out


def format_text(rows, degrees):
    header = ["n"]
    for d in degrees:
        header += [f"4A(n,P_{d})", f"lambda(n,P_{d})"]
    lines = [" | ".join(header)]
    lines += [" | ".join(row_cells(r, degrees)) for r in rows]
    return "\n".join(lines) + "\n"
