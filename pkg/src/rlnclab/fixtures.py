"""Golden network corpus used across the test and experiment suites.

Three small networks with known behavior:

* ``butterfly`` -- the classic single-source two-sink relay network.  At rate
  (2,) both sinks demand both symbols and the coded relay path is the only
  way to satisfy them simultaneously.
* ``bottleneck`` -- two sources forced through one shared edge into a sink
  that wants only source 1.  At rate (1, 1) the interference from source 2
  cannot be removed, so random coding fails with probability -> 1.
* ``crossing`` -- two sources, two sinks with crossed demands served through
  a shared relay; rate (1, 1) is achievable.
"""
from __future__ import annotations

from .network import NetworkSpec, Rate, make_network


def butterfly() -> NetworkSpec:
    return make_network(
        nodes=["s", "a", "b", "c", "d", "t1", "t2"],
        edges=[
            ("e1", "s", "a"),
            ("e2", "s", "b"),
            ("e3", "a", "t1"),
            ("e4", "a", "c"),
            ("e5", "b", "c"),
            ("e6", "b", "t2"),
            ("e7", "c", "d"),
            ("e8", "d", "t1"),
            ("e9", "d", "t2"),
        ],
        sources=["s"],
        sinks=["t1", "t2"],
        demands={"t1": [1], "t2": [1]},
        name="butterfly",
    )


def bottleneck() -> NetworkSpec:
    return make_network(
        nodes=["s1", "s2", "v", "t"],
        edges=[
            ("e1", "s1", "v"),
            ("e2", "s2", "v"),
            ("e3", "v", "t"),
        ],
        sources=["s1", "s2"],
        sinks=["t"],
        demands={"t": [1]},
        name="bottleneck",
    )


def crossing() -> NetworkSpec:
    return make_network(
        nodes=["s1", "s2", "m", "t1", "t2"],
        edges=[
            ("e1", "s1", "t1"),
            ("e2", "s2", "t2"),
            ("e3", "s1", "m"),
            ("e4", "s2", "m"),
            ("e5", "m", "t1"),
            ("e6", "m", "t2"),
        ],
        sources=["s1", "s2"],
        sinks=["t1", "t2"],
        demands={"t1": [2], "t2": [1]},
        name="crossing",
    )


STANDARD_RATES: dict[str, Rate] = {
    "butterfly": (2,),
    "bottleneck": (1, 1),
    "crossing": (1, 1),
}


def all_fixtures() -> dict[str, tuple[NetworkSpec, Rate]]:
    """Every fixture paired with its standard rate vector."""
    specs = {"butterfly": butterfly(), "bottleneck": bottleneck(), "crossing": crossing()}
    return {name: (spec, STANDARD_RATES[name]) for name, spec in specs.items()}
