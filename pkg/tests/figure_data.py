"""The printed bipartition graph up to size 3, transcribed edge by edge.

Each entry is (source, target, color label); bipartitions are (up, down)."""

E = ()
FIGURE_EDGES = [
    ((E, E), ((1,), E), "1"),
    ((E, (1,)), (E, E), "t^-2"),
    (((1,), E), ((1, 1), E), "q^-2"),
    (((1,), E), ((2,), E), "q^2"),
    (((1,), (1,)), ((1,), E), "t^-2"),
    ((E, (1,)), ((1,), (1,)), "1"),
    ((E, (1, 1)), (E, (1,)), "t^-2*q^2"),
    ((E, (2,)), (E, (1,)), "t^-2*q^-2"),
    (((1, 1), E), ((1, 1, 1), E), "q^-4"),
    (((1, 1), E), ((2, 1), E), "q^2"),
    (((1, 1), (1,)), ((1, 1), E), "t^-2"),
    (((2,), E), ((2, 1), E), "q^-2"),
    (((2,), E), ((3,), E), "q^4"),
    (((2,), (1,)), ((2,), E), "t^-2"),
    (((1,), (1,)), ((1, 1), (1,)), "q^-2"),
    (((1,), (1,)), ((2,), (1,)), "q^2"),
    (((1,), (1, 1)), ((1,), (1,)), "t^-2*q^2"),
    (((1,), (2,)), ((1,), (1,)), "t^-2*q^-2"),
    ((E, (1, 1)), ((1,), (1, 1)), "1"),
    ((E, (1, 1, 1)), (E, (1, 1)), "t^-2*q^4"),
    ((E, (2, 1)), (E, (1, 1)), "t^-2*q^-2"),
    ((E, (2,)), ((1,), (2,)), "1"),
    ((E, (2, 1)), (E, (2,)), "t^-2*q^2"),
    ((E, (3,)), (E, (2,)), "t^-2*q^-4"),
]
