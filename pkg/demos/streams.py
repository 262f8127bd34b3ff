"""Streams as a final coalgebra.

A stream over a label set is an element of the M-type for the signature in
which every label has exactly one child.  This script builds streams three
ways (by unfolding a finite cycle, by tabulating a function on the naturals,
and by cons-ing onto an existing stream), then checks the zip law at a few
depths.
"""

from omegacoalg import Coalgebra, tree_equal, unfold
from omegacoalg.catalog import (
    cons,
    head,
    stream_container,
    stream_from_function,
    stream_to_function,
    tail,
    zip_streams,
)


def show(m, depth=6):
    """Render the first `depth` labels of a stream."""
    g = stream_to_function(m)
    return "[" + ", ".join(str(g(k)) for k in range(depth)) + ", ...]"


def main():
    # 1. A stream from a finite presentation: unfold a 3-cycle.
    sc = stream_container()
    cycle = Coalgebra(
        sc,
        {0: ("a", (1,)), 1: ("b", (2,)), 2: ("c", (0,))},
        state_enumeration=(0, 1, 2),
    )
    abc = unfold(cycle, 0)
    print("cycle unfold:      ", show(abc))

    # 2. A stream from a function on the naturals (an infinite label set).
    squares = stream_from_function(lambda k: k * k)
    print("tabulated squares: ", show(squares))

    # 3. Destructors and constructor.
    print("head(squares) =", head(squares))
    print("tail(squares):     ", show(tail(squares)))
    print("cons(99, squares): ", show(cons(99, squares)))

    # 4. The zip law: zip(xs, ys) = cons((head xs, head ys),
    #                                    zip(tail xs, tail ys)).
    lhs = zip_streams(abc, squares)
    rhs = cons((head(abc), head(squares)), zip_streams(tail(abc), tail(squares)))
    assert all(tree_equal(lhs.at(n), rhs.at(n)) for n in range(31))
    print("zip law holds to depth 30; zip(cycle, squares) =", show(lhs))


if __name__ == "__main__":
    main()
