use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::to_graph6;

/// Canonicalization is exponential in the worst case, so it is capped well
/// below the 64-vertex graph cap. Everything the enumeration module needs
/// fits under this bound.
pub const CANONICAL_MAX_ORDER: usize = 12;

/// Canonical byte form of a graph: the graph6 encoding of a canonically
/// relabeled copy. Two graphs on at most 12 vertices are isomorphic exactly
/// when their canonical forms are equal, and the bytes parse back into a
/// representative of the isomorphism class.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>> {
    Ok(to_graph6(&canonical_graph(g)?).into_bytes())
}

/// The canonically relabeled copy itself. Trees take an AHU-style rooted
/// path through the centers; everything else goes through backtracking
/// individualization-refinement, which picks the relabeling with the
/// lexicographically least adjacency bit string among refinement-compatible
/// orders. Both paths depend only on the isomorphism class.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    let n = g.n();
    if n > CANONICAL_MAX_ORDER {
        return Err(Error::CanonicalCapExceeded {
            order: n,
            cap: CANONICAL_MAX_ORDER,
        });
    }
    let m = g.edge_count();
    if m == 0 || m == n * (n - 1) / 2 {
        return Ok(g.clone());
    }
    let order = if g.is_tree() {
        tree_order(g)
    } else {
        search_order(g)
    };
    let mut perm = vec![0usize; n];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    Ok(g.permuted(&perm))
}

/// Peels leaves layer by layer; the one or two survivors are the centers.
fn tree_centers(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut alive = vec![true; n];
    let mut remaining = n;
    while remaining > 2 {
        let layer: Vec<usize> = (0..n).filter(|&v| alive[v] && deg[v] <= 1).collect();
        for v in layer {
            alive[v] = false;
            remaining -= 1;
            for u in g.neighbors(v).iter() {
                if alive[u] {
                    deg[u] -= 1;
                }
            }
        }
    }
    (0..n).filter(|&v| alive[v]).collect()
}

/// Rooted subtree code over the alphabet "()" plus the preorder vertex list
/// that realizes it. Children are visited smallest code first, so the
/// resulting order depends only on the rooted shape.
fn ahu(g: &Graph, v: usize, parent: Option<usize>) -> (Vec<u8>, Vec<usize>) {
    let mut children: Vec<(Vec<u8>, Vec<usize>)> = g
        .neighbors(v)
        .iter()
        .filter(|&u| Some(u) != parent)
        .map(|u| ahu(g, u, Some(v)))
        .collect();
    children.sort();
    let mut code = vec![b'('];
    let mut order = vec![v];
    for (child_code, child_order) in children {
        code.extend(child_code);
        order.extend(child_order);
    }
    code.push(b')');
    (code, order)
}

fn tree_order(g: &Graph) -> Vec<usize> {
    tree_centers(g)
        .into_iter()
        .map(|c| ahu(g, c, None))
        .min()
        .expect("a tree has at least one center")
        .1
}

/// Adjacency bits of `g` under the vertex order, packed from the top of a
/// u128 in graph6 pair order, so numeric comparison is lexicographic
/// comparison of the encoded bodies.
fn encode(g: &Graph, order: &[usize]) -> u128 {
    let n = g.n();
    let mut code = 0u128;
    let mut bit = 127u32;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(order[i], order[j]) {
                code |= 1u128 << bit;
            }
            bit -= 1;
        }
    }
    code
}

/// Splits every cell by neighbor counts against all cells until stable.
/// Sub-cells inherit a deterministic order (by signature), which keeps the
/// partition sequence isomorphism-invariant.
fn refine(g: &Graph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let masks: Vec<u64> = cells
            .iter()
            .map(|cell| cell.iter().fold(0u64, |acc, &v| acc | 1u64 << v))
            .collect();
        let signature = |v: usize| -> Vec<u32> {
            masks
                .iter()
                .map(|&mask| (g.neighbors(v).bits() & mask).count_ones())
                .collect()
        };
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut groups: Vec<(Vec<u32>, Vec<usize>)> = Vec::new();
            for &v in cell {
                let sig = signature(v);
                match groups.iter_mut().find(|(s, _)| *s == sig) {
                    Some((_, vs)) => vs.push(v),
                    None => groups.push((sig, vec![v])),
                }
            }
            groups.sort_by(|a, b| b.0.cmp(&a.0));
            next.extend(groups.into_iter().map(|(_, vs)| vs));
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

/// Vertices whose neighborhoods agree outside the pair are interchangeable
/// by a transposition automorphism, so one branch per twin class suffices.
fn twins(g: &Graph, u: usize, v: usize) -> bool {
    let outside = !(1u64 << u | 1u64 << v);
    g.neighbors(u).bits() & outside == g.neighbors(v).bits() & outside
}

fn descend(g: &Graph, cells: Vec<Vec<usize>>, best: &mut Option<(u128, Vec<usize>)>) {
    if let Some(target_idx) = cells.iter().position(|c| c.len() > 1) {
        let target = &cells[target_idx];
        let mut reps: Vec<usize> = Vec::new();
        for &v in target {
            if !reps.iter().any(|&u| twins(g, u, v)) {
                reps.push(v);
            }
        }
        for v in reps {
            let mut split: Vec<Vec<usize>> = Vec::with_capacity(cells.len() + 1);
            split.extend_from_slice(&cells[..target_idx]);
            split.push(vec![v]);
            split.push(target.iter().copied().filter(|&u| u != v).collect());
            split.extend_from_slice(&cells[target_idx + 1..]);
            descend(g, refine(g, split), best);
        }
        return;
    }
    let order: Vec<usize> = cells.into_iter().map(|c| c[0]).collect();
    let code = encode(g, &order);
    if best.as_ref().is_none_or(|(b, _)| code < *b) {
        *best = Some((code, order));
    }
}

fn search_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut by_degree: Vec<Vec<usize>> = Vec::new();
    let mut degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    degrees.dedup();
    for d in degrees {
        by_degree.push((0..n).filter(|&v| g.degree(v) == d).collect());
    }
    let mut best = None;
    descend(g, refine(g, by_degree), &mut best);
    best.expect("search visits at least one leaf").1
}
