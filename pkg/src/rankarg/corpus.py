"""Small named frameworks used throughout the tests and demos.

The names describe the attack graph shapes: chains, loops of various
lengths, and combinations of both.
"""

from __future__ import annotations

from .framework import ArgumentationFramework

AF = ArgumentationFramework


def simple_reinstatement() -> AF:
    """a > b > c."""
    return AF("abc", [("a", "b"), ("b", "c")])


def three_loop() -> AF:
    """a > b > c > a."""
    return AF("abc", [("a", "b"), ("b", "c"), ("c", "a")])


def attack_on_two_loop() -> AF:
    """a > b > c > b (a hits a mutual pair)."""
    return AF("abc", [("a", "b"), ("b", "c"), ("c", "b")])


def attack_from_two_loop() -> AF:
    """b > a > b > c (a mutual pair hits c)."""
    return AF("abc", [("b", "a"), ("a", "b"), ("b", "c")])


def three_one_loop() -> AF:
    """a > a > b > c > a (3-cycle with a self-attacking member)."""
    return AF("abc", [("a", "a"), ("a", "b"), ("b", "c"), ("c", "a")])


def three_two_loop() -> AF:
    """b > a > b > c > a (3-cycle sharing an edge with a mutual pair)."""
    return AF("abc", [("b", "a"), ("a", "b"), ("b", "c"), ("c", "a")])


def two_loop_chain() -> AF:
    """b > a > b > c > b (two mutual pairs sharing b)."""
    return AF("abc", [("b", "a"), ("a", "b"), ("b", "c"), ("c", "b")])


def splitted_three_chain() -> AF:
    """a > b > c and a > d > c (a chain split through two middles)."""
    return AF("abcd", [("a", "b"), ("b", "c"), ("a", "d"), ("d", "c")])


def spoon() -> AF:
    """a > b > c > d > c (a chain ending in a mutual pair)."""
    return AF("abcd", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "c")])


def chain_example() -> AF:
    """p > q > r, the worked three-argument chain."""
    return AF("pqr", [("p", "q"), ("q", "r")])


def rejection_cut_example() -> AF:
    """b > c > a > b > a; dropping the rejected a changes the skeptical set."""
    return AF("abc", [("b", "c"), ("c", "a"), ("a", "b"), ("b", "a")])


def rejection_cm_example() -> AF:
    """The rejection-cut example plus c > b."""
    return AF("abc", [("b", "c"), ("c", "a"), ("a", "b"), ("b", "a"), ("c", "b")])


NAMED = {
    "simple-reinstatement": simple_reinstatement,
    "3-loop": three_loop,
    "attack-on-2-loop": attack_on_two_loop,
    "attack-from-2-loop": attack_from_two_loop,
    "3,1-loop": three_one_loop,
    "3,2-loop": three_two_loop,
    "2-loop-chain": two_loop_chain,
    "splitted-3-chain": splitted_three_chain,
    "spoon": spoon,
}
