//! Graphs built constructively so each can be checked against its defining
//! properties.

use super::Graph;

/// Kneser graph K(5,2): 2-subsets of a 5-set, adjacent when disjoint.
pub fn petersen() -> Graph {
    let pairs: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
    let mut edges = Vec::new();
    for (i, &(a, b)) in pairs.iter().enumerate() {
        for (j, &(c, d)) in pairs.iter().enumerate().skip(i + 1) {
            if a != c && a != d && b != c && b != d {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(10, &edges).expect("petersen construction")
}

/// Dodecahedral skeleton: outer pentagon `0..5`, middle 10-cycle `5..15`,
/// inner pentagon `15..20`.
pub fn dodecahedron() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, 5 + 2 * i));
        edges.push((5 + 2 * i + 1, 15 + i));
        edges.push((15 + i, 15 + (i + 1) % 5));
    }
    for j in 0..10 {
        edges.push((5 + j, 5 + (j + 1) % 10));
    }
    Graph::from_edges(20, &edges).expect("dodecahedron construction")
}

/// Triangle with a pendant vertex attached to vertex 0.
pub fn paw() -> Graph {
    Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (0, 3)]).expect("paw construction")
}

/// Six-vertex gadget: base edge `v1 v2` (0, 1), `M1 = {u, u'}` (2, 3) both
/// adjacent to `v1`, `M2 = {w, w'}` (4, 5) both adjacent to `v2`, edges
/// `u u'` and `w w'`, and all four `M1`–`M2` edges.
pub fn g1_gadget() -> Graph {
    Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (2, 3), (1, 4), (1, 5), (4, 5), (2, 4), (2, 5), (3, 4), (3, 5)])
        .expect("gadget construction")
}

/// Resolves a fixed name to its graph. The order-8 extremal cograph is not
/// listed here because it is identified by enumeration.
pub fn by_name(name: &str) -> Option<Graph> {
    let g = match name {
        "petersen" => petersen(),
        "dodecahedron" => dodecahedron(),
        "g1_gadget" | "g1" => g1_gadget(),
        "paw" => paw(),
        "c4" => Graph::cycle(4).ok()?,
        "c5" => Graph::cycle(5).ok()?,
        "c6" => Graph::cycle(6).ok()?,
        "p3" => Graph::path(3).ok()?,
        "p4" => Graph::path(4).ok()?,
        "p5" => Graph::path(5).ok()?,
        "k2" => Graph::complete(2).ok()?,
        "k3" => Graph::complete(3).ok()?,
        "k4" => Graph::complete(4).ok()?,
        "k5" => Graph::complete(5).ok()?,
        "k33" | "k3,3" => Graph::complete_bipartite(3, 3).ok()?,
        _ => return None,
    };
    Some(g)
}

pub const NAMES: &[&str] = &[
    "petersen",
    "dodecahedron",
    "g1_gadget",
    "paw",
    "c4",
    "c5",
    "c6",
    "p3",
    "p4",
    "p5",
    "k2",
    "k3",
    "k4",
    "k5",
    "k33",
];
