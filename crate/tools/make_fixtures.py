#!/usr/bin/env python3
"""Generates the bundled knot-table fixtures from the KnotInfo database.

Sources: the `database_knotinfo` PyPI package, which packages the KnotInfo
export (DT codes from the Hoste-Thistlethwaite tabulation, braid indices,
genera, and reference polynomial values).

Outputs (under fixtures/):
  knots_upto_10.tsv            name <TAB> dt:<code>            (249 knots)
  knots_upto_12_knotscape.tsv  same format, 2977 knots; 11- and 12-crossing
                               knots carry the sequential KnotScape names
                               (alternating knots numbered first)
  knots_13_knotscape.tsv       the 9988 thirteen-crossing knots in the same
                               format (used by the extended census run,
                               not by the acceptance suite)
  knotinfo_reference_upto_10.tsv
                               name, braid_index, genus, alternating,
                               homfly and kauffman in this project's
                               canonical text form

Polynomial conversion: KnotInfo's skein convention (v, z) satisfies
v^-1 P(L+) - v P(L-) = z P(L0); ours is l^-1 P(L+) + l P(L-) = -m P(L0).
They agree under v = i l, z = i m, i.e. each coefficient of v^p z^q picks
up a factor (-1)^((p+q)/2) (p + q is even for knots). KnotInfo's Kauffman
convention matches ours as-is.
"""

import os
import sys

import sympy
from database_knotinfo import link_list

HERE = os.path.dirname(os.path.abspath(__file__))
FIXTURES = os.path.join(HERE, "..", "fixtures")

V, Z, A = sympy.symbols("v z a")


def monomials(text, x1, x2):
    """Parses a KnotInfo polynomial string into {(e1, e2): int}."""
    expr = sympy.expand(sympy.parse_expr(text.replace("^", "**")))
    out = {}
    for term, coeff in expr.as_coefficients_dict().items():
        e1 = e2 = 0
        for base, exp in term.as_powers_dict().items():
            if base == x1:
                e1 = int(exp)
            elif base == x2:
                e2 = int(exp)
            elif base == 1:
                pass
            else:
                raise ValueError(f"unexpected factor {base} in {text}")
        key = (e1, e2)
        assert key not in out
        out[key] = int(coeff)
    return out


def canonical(terms, v1, v2):
    """Renders {(e1,e2): c} in the engine's canonical text form."""
    parts = [
        f"{c}*{v1}^{e1}*{v2}^{e2}"
        for (e1, e2), c in sorted(terms.items())
        if c != 0
    ]
    return " + ".join(parts) if parts else "0"


def homfly_to_lm(text):
    terms = monomials(text, V, Z)
    out = {}
    for (p, q), c in terms.items():
        assert (p + q) % 2 == 0, f"odd total degree in {text}"
        sign = -1 if ((p + q) // 2) % 2 else 1
        out[(p, q)] = sign * c
    return canonical(out, "l", "m")


def kauffman_to_az(text):
    return canonical(monomials(text, A, Z), "a", "z")


def dt_text(entry):
    code = entry["dt_notation"].strip()
    assert code.startswith("[") and code.endswith("]"), code
    # 13-crossing entries wrap the sequence in a tuple: [(a,b,...)]
    inner = code[1:-1].strip().removeprefix("(").removesuffix(")")
    nums = [s.strip() for s in inner.split(",") if s.strip()]
    return "dt: " + " ".join(nums)


def knotscape_name(entry, alt_counts):
    """Sequential KnotScape numbering: for >= 11 crossings the alternating
    knots come first, then the nonalternating ones."""
    name = entry["name"]
    cr = int(entry["crossing_number"])
    if cr <= 10:
        return name
    stem, num = name.split("_")
    k = int(num)
    if stem.endswith("a"):
        return f"{cr}_{k}"
    assert stem.endswith("n"), name
    return f"{cr}_{alt_counts[cr] + k}"


def main():
    os.makedirs(FIXTURES, exist_ok=True)
    rows = [e for e in link_list() if e.get("category", "").isdigit() or True]
    # drop the header row and the unknot; keep knots with 3..12 crossings
    knots = []
    for e in rows[1:]:
        try:
            cr = int(e["crossing_number"])
        except (KeyError, ValueError):
            continue
        if 3 <= cr <= 12 and e.get("dt_notation", "").startswith("["):
            knots.append((cr, e))
    knots.sort(key=lambda t: (t[0], t[1]["name"]))

    alt_counts = {}
    for cr, e in knots:
        if e["name"].split("_")[0].endswith("a"):
            alt_counts[cr] = alt_counts.get(cr, 0) + 1

    # natural ordering key within one crossing number: alternating first,
    # then numeric suffix
    def order_key(item):
        cr, e = item
        stem, num = e["name"].split("_")
        alt_first = 0 if (cr <= 10 or stem.endswith("a")) else 1
        return (cr, alt_first, int(num))

    knots.sort(key=order_key)

    upto10 = [(cr, e) for cr, e in knots if cr <= 10]
    assert len(upto10) == 249, len(upto10)
    assert len(knots) == 2977, len(knots)

    with open(os.path.join(FIXTURES, "knots_upto_10.tsv"), "w") as f:
        for cr, e in upto10:
            f.write(f"{e['name']}\t{dt_text(e)}\n")

    with open(os.path.join(FIXTURES, "knots_upto_12_knotscape.tsv"), "w") as f:
        for cr, e in knots:
            f.write(f"{knotscape_name(e, alt_counts)}\t{dt_text(e)}\n")

    # 13-crossing table for the extended census run
    thirteen = []
    for e in rows[1:]:
        try:
            cr = int(e["crossing_number"])
        except (KeyError, ValueError):
            continue
        if cr == 13 and e.get("dt_notation", "").startswith("["):
            thirteen.append((cr, e))
    thirteen.sort(key=order_key)
    assert len(thirteen) == 9988, len(thirteen)
    alt13 = sum(1 for _, e in thirteen if e["name"].split("_")[0].endswith("a"))
    counts13 = {13: alt13}
    with open(os.path.join(FIXTURES, "knots_13_knotscape.tsv"), "w") as f:
        for cr, e in thirteen:
            f.write(f"{knotscape_name(e, counts13)}\t{dt_text(e)}\n")

    with open(os.path.join(FIXTURES, "knotinfo_reference_upto_10.tsv"), "w") as f:
        f.write("# name\tbraid_index\tgenus\talternating\thomfly_lm\tkauffman_az\n")
        for cr, e in upto10:
            homfly = homfly_to_lm(e["homfly_polynomial"])
            kauffman = kauffman_to_az(e["kauffman_polynomial"])
            f.write(
                "\t".join(
                    [
                        e["name"],
                        e["braid_index"].strip(),
                        e["three_genus"].strip(),
                        e["alternating"].strip(),
                        homfly,
                        kauffman,
                    ]
                )
                + "\n"
            )

    counts = {}
    for cr, _ in knots:
        counts[cr] = counts.get(cr, 0) + 1
    print("written fixtures:", counts)


if __name__ == "__main__":
    sys.exit(main())
