//! Test-only oracles, written without reference to the library's search or
//! verifier.

#![allow(dead_code)]

use interval_coloring::Graph;

/// Every pair `(u, v)` with `1 <= u < v <= order`, in lexicographic order.
fn pairs(order: usize) -> Vec<(usize, usize)> {
    (1..=order)
        .flat_map(|u| (u + 1..=order).map(move |v| (u, v)))
        .collect()
}

fn permutations(order: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..order).collect();
    heap(order, &mut current, &mut out);
    out
}

fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(a.clone());
        return;
    }
    for i in 0..k {
        heap(k - 1, a, out);
        if k.is_multiple_of(2) {
            a.swap(i, k - 1);
        } else {
            a.swap(0, k - 1);
        }
    }
}

fn connected(order: usize, edges: &[(usize, usize)]) -> bool {
    let mut seen = vec![false; order + 1];
    let mut stack = vec![1];
    seen[1] = true;
    while let Some(x) = stack.pop() {
        for &(u, v) in edges {
            for (a, b) in [(u, v), (v, u)] {
                if a == x && !seen[b] {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
    }
    seen[1..].iter().all(|&s| s)
}

/// One representative per isomorphism class of connected graphs with
/// `1..=max_order` vertices and at most `max_edges` edges. A labeled graph is
/// kept when its edge bitmask is the smallest among all relabelings.
pub fn connected_graphs(max_order: usize, max_edges: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for order in 1..=max_order {
        let all = pairs(order);
        let index = |u: usize, v: usize| all.iter().position(|&p| p == (u.min(v), u.max(v))).unwrap();
        let perms = permutations(order);
        // image[p][bit] = bit index of the relabeled pair under permutation p
        let image: Vec<Vec<usize>> = perms
            .iter()
            .map(|p| {
                all.iter()
                    .map(|&(u, v)| index(p[u - 1] + 1, p[v - 1] + 1))
                    .collect()
            })
            .collect();
        for mask in 0u32..(1 << all.len()) {
            if mask.count_ones() as usize > max_edges {
                continue;
            }
            let canonical = image.iter().all(|img| {
                let mut relabeled = 0u32;
                for (bit, &to) in img.iter().enumerate() {
                    if mask >> bit & 1 == 1 {
                        relabeled |= 1 << to;
                    }
                }
                relabeled >= mask
            });
            if !canonical {
                continue;
            }
            let edges: Vec<_> = all
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            if connected(order, &edges) {
                out.push(Graph::new(order, edges).unwrap());
            }
        }
    }
    out
}

/// Whether `colors` (one per edge of `edges`) is an interval `t`-coloring,
/// checked straight from the definition.
pub fn satisfies_definition(order: usize, edges: &[(usize, usize)], colors: &[u32], t: u32) -> bool {
    let mut at_vertex = vec![Vec::new(); order + 1];
    for (&(u, v), &c) in edges.iter().zip(colors) {
        if c < 1 || c > t {
            return false;
        }
        at_vertex[u].push(c);
        at_vertex[v].push(c);
    }
    for colors in &mut at_vertex[1..] {
        colors.sort_unstable();
        let d = colors.len();
        if colors.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
        if d > 0 && (colors[d - 1] - colors[0]) as usize + 1 != d {
            return false;
        }
    }
    (1..=t).all(|c| colors.contains(&c))
}

/// Tries all `t^|E|` assignments; returns the first that satisfies the
/// definition, in lexicographic order of the color vector.
pub fn brute_force(graph: &Graph, t: u32) -> Option<Vec<u32>> {
    let edges = graph.edges();
    let order = graph.vertex_count();
    if t == 0 {
        return None;
    }
    let mut colors = vec![1u32; edges.len()];
    loop {
        if satisfies_definition(order, edges, &colors, t) {
            return Some(colors);
        }
        let mut i = colors.len();
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if colors[i] < t {
                colors[i] += 1;
                break;
            }
            colors[i] = 1;
        }
    }
}
