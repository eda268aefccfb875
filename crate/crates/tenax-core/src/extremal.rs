use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_ORDER};
use crate::rational::Rational;

fn choose2(n: usize) -> usize {
    n * (n - 1) / 2
}

/// The bracket a feasible (n, m) pair falls into: the unique k with
/// C(k,2) + (n-k)(k-1) < m <= C(k,2) + (n-k)k, and the minimum tenacity
/// (k+1)/(n-k) shared by every connected graph of that order and size.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TenacityBracket {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub value: Rational,
}

/// Needs a noncomplete connected regime: n >= 2 and n-1 <= m <= C(n,2)-1.
pub fn min_tenacity_bracket(n: usize, m: usize) -> Result<TenacityBracket> {
    if n < 2 || m < n - 1 || m + 1 > choose2(n) {
        return Err(Error::BracketOutOfDomain { n, m });
    }
    for k in 1..n {
        let lo = choose2(k) + (n - k) * (k - 1);
        let hi = choose2(k) + (n - k) * k;
        if lo < m && m <= hi {
            return Ok(TenacityBracket {
                n,
                m,
                k,
                value: Rational::new(k as i64 + 1, (n - k) as i64),
            });
        }
    }
    unreachable!("brackets tile the whole feasible edge range");
}

/// A graph attaining the minimum tenacity for its order and size: a clique
/// on vertices 0..k with the m - C(k,2) surplus edges spread round-robin
/// from the n-k outside vertices into the clique. Every outside vertex
/// lands within one edge of the others, and each attaches to clique
/// vertices 0, 1, ... in order.
pub fn build_min_tenacity_graph(n: usize, m: usize) -> Result<Graph> {
    let bracket = min_tenacity_bracket(n, m)?;
    let k = bracket.k;
    let mut edges = Vec::with_capacity(m);
    for j in 1..k {
        for i in 0..j {
            edges.push((i, j));
        }
    }
    let surplus = m - choose2(k);
    let outside = n - k;
    let base = surplus / outside;
    let extra = surplus % outside;
    for (idx, v) in (k..n).enumerate() {
        let d = base + usize::from(idx < extra);
        for c in 0..d {
            edges.push((c, v));
        }
    }
    let g = Graph::from_edge_list(n, &edges)?;
    debug_assert_eq!(g.edge_count(), m);
    debug_assert!(g.is_connected());
    Ok(g)
}

fn parity_value(n: usize, odd_num: i64, odd_den: i64) -> Rational {
    if n % 2 == 1 {
        Rational::new(odd_num, odd_den)
    } else {
        Rational::new(n as i64 + 2, n as i64)
    }
}

/// Closed-form tenacity of the path P_n: 1 for odd n, (n+2)/n for even n.
/// Defined for n >= 2; note P_2 = K_2 falls outside what the search engine
/// accepts, the closed form extends the pattern there.
pub fn path_tenacity(n: usize) -> Result<Rational> {
    if n < 2 {
        return Err(Error::OrderBelowMinimum {
            op: "path_tenacity",
            n,
            min: 2,
        });
    }
    Ok(parity_value(n, 1, 1))
}

/// Closed-form tenacity of the cycle C_n: (n+3)/(n-1) for odd n, (n+2)/n
/// for even n. C_3 = K_3 has no vertex cut, so it is rejected outright.
pub fn cycle_tenacity(n: usize) -> Result<Rational> {
    if n < 3 {
        return Err(Error::OrderBelowMinimum {
            op: "cycle_tenacity",
            n,
            min: 3,
        });
    }
    if n == 3 {
        return Err(Error::CompleteGraph);
    }
    Ok(parity_value(n, n as i64 + 3, n as i64 - 1))
}

/// Largest tenacity any tree of order n achieves. Coincides with the path
/// values: 1 for odd n, (n+2)/n for even n.
pub fn max_tree_tenacity(n: usize) -> Result<Rational> {
    if n < 2 {
        return Err(Error::OrderBelowMinimum {
            op: "max_tree_tenacity",
            n,
            min: 2,
        });
    }
    Ok(parity_value(n, 1, 1))
}

/// Largest tenacity any connected unicyclic graph of order n achieves:
/// (n+3)/(n-1) for odd n, (n+2)/n for even n. Needs n >= 4; the only
/// unicyclic graph on 3 vertices is K_3.
pub fn max_unicyclic_tenacity(n: usize) -> Result<Rational> {
    if n < 4 {
        return Err(Error::OrderBelowMinimum {
            op: "max_unicyclic_tenacity",
            n,
            min: 4,
        });
    }
    Ok(parity_value(n, n as i64 + 3, n as i64 - 1))
}

pub fn degree_three_pairwise_adjacent(g: &Graph) -> bool {
    let heavy: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) == 3).collect();
    heavy
        .iter()
        .enumerate()
        .all(|(i, &u)| heavy[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

/// Whether a tree attains the maximum tenacity for its order. For even
/// order that means being the path; for odd order, maximum degree at most 3
/// with every pair of degree-3 vertices adjacent.
pub fn is_max_tenacity_tree(g: &Graph) -> Result<bool> {
    if !g.is_tree() {
        return Err(Error::NotATree);
    }
    let n = g.n();
    if n < 2 {
        return Err(Error::OrderBelowMinimum {
            op: "is_max_tenacity_tree",
            n,
            min: 2,
        });
    }
    if n % 2 == 1 {
        Ok(g.max_degree() <= 3 && degree_three_pairwise_adjacent(g))
    } else {
        Ok(g.is_path_graph())
    }
}

/// Whether a connected unicyclic graph attains the maximum tenacity for its
/// order. For odd order that means being the cycle; for even order, maximum
/// degree at most 3 with every pair of degree-3 vertices adjacent.
pub fn is_max_tenacity_unicyclic(g: &Graph) -> Result<bool> {
    if !g.is_unicyclic() {
        return Err(Error::NotUnicyclic);
    }
    let n = g.n();
    if n == 3 {
        return Err(Error::CompleteGraph);
    }
    if n % 2 == 1 {
        Ok(g.is_cycle_graph())
    } else {
        Ok(g.max_degree() <= 3 && degree_three_pairwise_adjacent(g))
    }
}

/// The unique cycle of a connected unicyclic graph together with the cycle
/// vertices that carry pendant trees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnicyclicAnatomy {
    pub cycle_vertices: VertexSet,
    pub branch_vertices: VertexSet,
}

pub fn unicyclic_anatomy(g: &Graph) -> Result<UnicyclicAnatomy> {
    if !g.is_unicyclic() {
        return Err(Error::NotUnicyclic);
    }
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut alive: VertexSet = (0..n).collect();
    loop {
        let leaves: Vec<usize> = alive.iter().filter(|&v| deg[v] == 1).collect();
        if leaves.is_empty() {
            break;
        }
        for v in leaves {
            alive = alive.difference(VertexSet::singleton(v));
            for u in g.neighbors(v).iter() {
                if alive.contains(u) {
                    deg[u] -= 1;
                }
            }
        }
    }
    let branch_vertices = alive.iter().filter(|&v| g.degree(v) >= 3).collect();
    Ok(UnicyclicAnatomy {
        cycle_vertices: alive,
        branch_vertices,
    })
}

/// Largest connectivity achievable with n vertices and m edges: floor(2m/n)
/// once a spanning tree is affordable, otherwise 0.
pub fn max_connectivity_value(n: usize, m: usize) -> Result<usize> {
    if n == 0 || n > MAX_ORDER {
        return Err(Error::InvalidOrder(n));
    }
    if m > choose2(n) {
        return Err(Error::EdgeCountOutOfRange {
            n,
            m,
            min: 0,
            max: choose2(n),
        });
    }
    if n > 1 && m < n - 1 {
        return Ok(0);
    }
    Ok(2 * m / n)
}

/// A graph on n vertices and m edges whose connectivity hits the
/// floor(2m/n) ceiling: the circulant core on offsets 1..k/2 (plus
/// diagonals when k is odd), topped up with the lexicographically smallest
/// missing pairs.
pub fn build_harary_graph(n: usize, m: usize) -> Result<Graph> {
    if n == 0 || n > MAX_ORDER {
        return Err(Error::InvalidOrder(n));
    }
    let max = choose2(n);
    if m + 1 < n || m > max {
        return Err(Error::EdgeCountOutOfRange {
            n,
            m,
            min: n - 1,
            max,
        });
    }
    let k = 2 * m / n;
    let norm = |a: usize, b: usize| (a.min(b), a.max(b));
    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    if k <= 1 {
        for v in 1..n {
            edges.insert(norm(v - 1, v));
        }
    } else {
        for i in 0..n {
            for off in 1..=k / 2 {
                edges.insert(norm(i, (i + off) % n));
            }
        }
        if k % 2 == 1 {
            if n % 2 == 1 {
                let half = n.div_ceil(2);
                for i in 0..=(n - 1) / 2 {
                    edges.insert(norm(i, (i + half) % n));
                }
            } else {
                for i in 0..n / 2 {
                    edges.insert(norm(i, i + n / 2));
                }
            }
        }
    }
    debug_assert!(edges.len() <= m, "core exceeds requested edge count");
    'fill: for u in 0..n {
        for v in u + 1..n {
            if edges.len() == m {
                break 'fill;
            }
            edges.insert((u, v));
        }
    }
    let edge_vec: Vec<(usize, usize)> = edges.into_iter().collect();
    Graph::from_edge_list(n, &edge_vec)
}

/// A connected graph on n vertices and m edges whose connectivity hits the
/// minimum m - C(n-1,2): a clique on the first n-1 vertices with the last
/// vertex attached by the remaining edges. Below that edge range the
/// minimum is 0 and no connected witness exists.
pub fn build_min_connectivity_graph(n: usize, m: usize) -> Result<Graph> {
    if !(2..=MAX_ORDER).contains(&n) {
        return Err(Error::InvalidOrder(n));
    }
    if m > choose2(n) {
        return Err(Error::EdgeCountOutOfRange {
            n,
            m,
            min: 0,
            max: choose2(n),
        });
    }
    let core = choose2(n - 1);
    if m <= core {
        return Err(Error::MinConnectivityZero { n, m });
    }
    let mut edges = Vec::with_capacity(m);
    for j in 1..n - 1 {
        for i in 0..j {
            edges.push((i, j));
        }
    }
    for c in 0..m - core {
        edges.push((c, n - 1));
    }
    Graph::from_edge_list(n, &edges)
}
