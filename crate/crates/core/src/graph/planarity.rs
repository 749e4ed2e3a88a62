//! Planarity by path addition (Demoucron–Malgrange–Pertuiset) on each block.

use std::collections::VecDeque;

use super::{Graph, VertexSet};

enum Fragment {
    Chord(usize, usize),
    Component { vertices: VertexSet, contacts: VertexSet },
}

impl Fragment {
    fn contacts(&self) -> VertexSet {
        match *self {
            Fragment::Chord(u, w) => VertexSet::singleton(u).with(w),
            Fragment::Component { contacts, .. } => contacts,
        }
    }
}

impl Graph {
    pub fn is_planar(&self) -> bool {
        let (n, m) = (self.order(), self.size());
        if n >= 3 && m > 3 * n - 6 {
            return false;
        }
        self.blocks().into_iter().filter(|b| b.len() >= 5).all(|b| {
            let (h, _) = self.induced_subgraph(b).expect("block within graph");
            let (bn, bm) = (h.order(), h.size());
            bm <= 3 * bn - 6 && biconnected_planar(&h)
        })
    }

    /// Vertex sets of the biconnected components with at least one edge.
    pub fn blocks(&self) -> Vec<VertexSet> {
        let n = self.order();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut time = 0;
        let mut out = Vec::new();
        let mut edge_stack: Vec<(usize, usize)> = Vec::new();
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = time;
            low[root] = time;
            time += 1;
            let mut stack = vec![(root, usize::MAX, self.nbrs(root))];
            while let Some(top) = stack.last_mut() {
                let (v, parent) = (top.0, top.1);
                if let Some(w) = top.2.first() {
                    top.2.remove(w);
                    if disc[w] == usize::MAX {
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        edge_stack.push((v, w));
                        stack.push((w, v, self.nbrs(w)));
                    } else if w != parent && disc[w] < disc[v] {
                        low[v] = low[v].min(disc[w]);
                        edge_stack.push((v, w));
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[v]);
                        if low[v] >= disc[parent] {
                            let mut block = VertexSet::EMPTY;
                            while let Some((a, b)) = edge_stack.pop() {
                                block = block.with(a).with(b);
                                if (a, b) == (parent, v) {
                                    break;
                                }
                            }
                            out.push(block);
                        }
                    }
                }
            }
        }
        out
    }
}

/// Path addition on a 2-connected graph.
fn biconnected_planar(g: &Graph) -> bool {
    let Some(cycle) = initial_cycle(g) else {
        return true;
    };
    let n = g.order();
    let mut embedded: VertexSet = cycle.iter().copied().collect();
    let mut emb_adj = vec![VertexSet::EMPTY; n];
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        emb_adj[a].insert(b);
        emb_adj[b].insert(a);
    }
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle];

    loop {
        let fragments = fragments(g, embedded, &emb_adj);
        if fragments.is_empty() {
            return true;
        }
        let face_sets: Vec<VertexSet> = faces.iter().map(|f| f.iter().copied().collect()).collect();
        let mut chosen: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let contacts = frag.contacts();
            let admissible: Vec<usize> = (0..faces.len()).filter(|&x| contacts.is_subset(face_sets[x])).collect();
            match admissible.len() {
                0 => return false,
                1 => {
                    chosen = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if chosen.is_none() {
                        chosen = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = chosen.expect("some fragment");
        let path = fragment_path(g, &fragments[fi]);
        for w in path.windows(2) {
            emb_adj[w[0]].insert(w[1]);
            emb_adj[w[1]].insert(w[0]);
        }
        for &v in &path {
            embedded.insert(v);
        }
        let (f1, f2) = split_face(&faces[face_idx], &path);
        faces[face_idx] = f1;
        faces.push(f2);
    }
}

/// A cycle through the edge `0 - a`, found by BFS from `a` to `0` without using that edge.
fn initial_cycle(g: &Graph) -> Option<Vec<usize>> {
    let a = g.nbrs(0).first()?;
    let n = g.order();
    let mut prev = vec![usize::MAX; n];
    prev[a] = a;
    let mut queue = VecDeque::from([a]);
    while let Some(u) = queue.pop_front() {
        for w in g.nbrs(u).iter() {
            if u == a && w == 0 {
                continue;
            }
            if prev[w] == usize::MAX {
                prev[w] = u;
                if w == 0 {
                    let mut cycle = vec![0];
                    let mut x = u;
                    while x != a {
                        cycle.push(x);
                        x = prev[x];
                    }
                    cycle.push(a);
                    return Some(cycle);
                }
                queue.push_back(w);
            }
        }
    }
    None
}

fn fragments(g: &Graph, embedded: VertexSet, emb_adj: &[VertexSet]) -> Vec<Fragment> {
    let mut out = Vec::new();
    for u in embedded.iter() {
        for w in g.nbrs(u).intersection(embedded).difference(emb_adj[u]).iter() {
            if u < w {
                out.push(Fragment::Chord(u, w));
            }
        }
    }
    let mut rest = g.vertices().difference(embedded);
    while let Some(v) = rest.first() {
        let comp = g.component_within(v, rest);
        rest = rest.difference(comp);
        let contacts = g.open_nbrs_of_set(comp).intersection(embedded);
        out.push(Fragment::Component { vertices: comp, contacts });
    }
    out
}

/// A path through the fragment joining two distinct contact vertices.
fn fragment_path(g: &Graph, frag: &Fragment) -> Vec<usize> {
    match *frag {
        Fragment::Chord(u, w) => vec![u, w],
        Fragment::Component { vertices, contacts } => {
            let a = contacts.first().expect("fragment has contacts");
            let others = contacts.without(a);
            let x = g.nbrs(a).intersection(vertices).first().expect("contact touches fragment");
            let n = g.order();
            let mut prev = vec![usize::MAX; n];
            prev[x] = x;
            let mut queue = VecDeque::from([x]);
            while let Some(u) = queue.pop_front() {
                if let Some(b) = g.nbrs(u).intersection(others).first() {
                    let mut inner = vec![u];
                    let mut y = u;
                    while y != x {
                        y = prev[y];
                        inner.push(y);
                    }
                    inner.reverse();
                    let mut path = vec![a];
                    path.extend(inner);
                    path.push(b);
                    return path;
                }
                for w in g.nbrs(u).intersection(vertices).iter() {
                    if prev[w] == usize::MAX {
                        prev[w] = u;
                        queue.push_back(w);
                    }
                }
            }
            unreachable!("fragment of a 2-connected graph has two contacts")
        }
    }
}

/// Splits `face` along `path`, whose endpoints lie on the face.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let len = face.len();
    let (a, b) = (path[0], path[path.len() - 1]);
    let i = face.iter().position(|&v| v == a).expect("endpoint on face");
    let j = face.iter().position(|&v| v == b).expect("endpoint on face");
    let inner = &path[1..path.len() - 1];
    let walk = |from: usize, to: usize| {
        let mut out = vec![face[from]];
        let mut k = from;
        while k != to {
            k = (k + 1) % len;
            out.push(face[k]);
        }
        out
    };
    let mut f1 = walk(i, j);
    f1.extend(inner.iter().rev());
    let mut f2 = walk(j, i);
    f2.extend(inner.iter());
    (f1, f2)
}
