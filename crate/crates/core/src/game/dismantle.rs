use crate::graph::Graph;

/// Whether repeatedly deleting corners (`N[v] ⊆ N[w]` for some `w ≠ v`)
/// reduces the graph to a single vertex. Deletion order does not matter.
pub fn is_dismantlable(g: &Graph) -> bool {
    let mut alive = g.vertices();
    if alive.is_empty() {
        return false;
    }
    while alive.len() > 1 {
        let corner = alive.iter().find(|&v| {
            let nv = g.closed_nbrs(v).intersection(alive);
            nv.without(v).iter().any(|w| nv.is_subset(g.closed_nbrs(w).intersection(alive)))
        });
        match corner {
            Some(v) => alive.remove(v),
            None => return false,
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn examples() {
        assert!(is_dismantlable(&Graph::path(5).unwrap()));
        assert!(is_dismantlable(&Graph::complete(4).unwrap()));
        assert!(is_dismantlable(&named::paw()));
        assert!(!is_dismantlable(&Graph::cycle(4).unwrap()));
        assert!(!is_dismantlable(&named::petersen()));
        // Disconnected graphs never reduce to one vertex.
        assert!(!is_dismantlable(&Graph::empty(2).unwrap()));
    }
}
