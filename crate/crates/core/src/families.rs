//! Small named graphs used as controls next to the Moebius ladders.

use crate::graph::Graph;

/// Cycle `1 - 2 - ... - len - 1`. Panics if `len < 3`.
pub fn cycle(len: usize) -> Graph {
    assert!(len >= 3, "a cycle needs at least 3 vertices");
    Graph::new(len, (1..=len).map(|i| (i, i % len + 1))).unwrap()
}

/// Path on `len` vertices.
pub fn path(len: usize) -> Graph {
    Graph::new(len, (1..len).map(|i| (i, i + 1))).unwrap()
}

/// Complete graph `K_order`.
pub fn complete(order: usize) -> Graph {
    let edges = (1..=order).flat_map(|u| (u + 1..=order).map(move |v| (u, v)));
    Graph::new(order, edges).unwrap()
}

/// Star `K_{1,leaves}` with center 1.
pub fn star(leaves: usize) -> Graph {
    Graph::new(leaves + 1, (2..=leaves + 1).map(|v| (1, v))).unwrap()
}

/// Petersen graph: outer 5-cycle 1..5, inner pentagram 6..10, spokes i -- i+5.
pub fn petersen() -> Graph {
    let outer = (1..=5).map(|i| (i, i % 5 + 1));
    let inner = (0..5).map(|i| (6 + i, 6 + (i + 2) % 5));
    let spokes = (1..=5).map(|i| (i, i + 5));
    Graph::new(10, outer.chain(inner).chain(spokes)).unwrap()
}

/// Prism `C_len x K_2`: two cycles 1..len and len+1..2len joined by rungs.
pub fn prism(len: usize) -> Graph {
    assert!(len >= 3);
    let outer = (1..=len).map(move |i| (i, i % len + 1));
    let inner = (1..=len).map(move |i| (len + i, len + i % len + 1));
    let rungs = (1..=len).map(move |i| (i, len + i));
    Graph::new(2 * len, outer.chain(inner).chain(rungs)).unwrap()
}
