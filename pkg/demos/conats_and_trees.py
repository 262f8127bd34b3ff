"""Conaturals and a branching signature.

The zero/successor signature has the conaturals as its final coalgebra:
every finite number k, plus one extra non-wellfounded point (an endless
successor chain).  The second half unfolds a two-state coalgebra over a
signature with a leaf, a binary label, and a ternary label, and prints the
growing depth-n approximations.
"""

from omegacoalg import approximate, bounded_bisim, enumerate_w, unfold
from omegacoalg.catalog import (
    conat_coalgebra,
    conat_infinity,
    conat_of,
    fig1_coalgebra,
    fig1_signature,
)
from omegacoalg.cli import render_text


def main():
    # Finite conaturals are leaves at a finite depth; infinity never bottoms
    # out, so truncation is all you ever see of it.
    three = conat_of(3)
    inf = conat_infinity()
    print("conat 3 at depth 5:  ", render_text(three.at(5)))
    print("infinity at depth 5: ", render_text(inf.at(5)))

    # Depth-bounded observation separates infinity from every finite k at
    # depth k+1 (and no earlier).
    c = conat_coalgebra(4)
    for k in range(5):
        first_diff = next(
            n for n in range(k + 2) if not bounded_bisim(c, "inf", k, n)
        )
        print(f"infinity vs {k}: first distinguished at depth {first_diff}")

    # A branching signature: arities 0, 2, 3.  The number of depth-n
    # observations grows fast; approximations of a two-state unfold share
    # structure heavily.
    sig = fig1_signature()
    print("observation counts:", [len(enumerate_w(sig, n)) for n in range(3)])
    coalg = fig1_coalgebra()
    for n in range(4):
        print(f"state t at depth {n}:", render_text(approximate(coalg, "t", n)))
    m = unfold(coalg, "t")
    print("unfold agrees with approximate:", m.at(3) is approximate(coalg, "t", 3))


if __name__ == "__main__":
    main()
