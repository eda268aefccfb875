//! Naive reference implementations used to cross-check the library.
//!
//! Everything here is written against an adjacency matrix with explicit
//! queues and recursion, no bitmasks, no shared code with the crate under
//! test. Slow on purpose; correctness comes from being obvious.

#![allow(dead_code)]

use std::collections::VecDeque;

use tenax_core::{Graph, Rational};

pub struct NaiveGraph {
    pub n: usize,
    pub adj: Vec<Vec<bool>>,
}

impl NaiveGraph {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> NaiveGraph {
        let mut adj = vec![vec![false; n]; n];
        for &(u, v) in edges {
            assert!(u < n && v < n && u != v, "bad edge ({u}, {v})");
            adj[u][v] = true;
            adj[v][u] = true;
        }
        NaiveGraph { n, adj }
    }

    pub fn from_graph(g: &Graph) -> NaiveGraph {
        NaiveGraph::from_edges(g.n(), &g.edges())
    }

    pub fn edge_count(&self) -> usize {
        let mut count = 0;
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.adj[u][v] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degrees: Vec<usize> = (0..self.n)
            .map(|u| (0..self.n).filter(|&v| self.adj[u][v]).count())
            .collect();
        degrees.sort_unstable();
        degrees
    }

    pub fn is_complete(&self) -> bool {
        for u in 0..self.n {
            for v in 0..self.n {
                if u != v && !self.adj[u][v] {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_connected(&self) -> bool {
        self.component_sizes(&[]).len() == 1
    }

    /// Sizes of the components of the graph minus the removed vertices,
    /// by breadth-first search. The removed list must not cover everything.
    pub fn component_sizes(&self, removed: &[usize]) -> Vec<usize> {
        let mut gone = vec![false; self.n];
        for &v in removed {
            gone[v] = true;
        }
        let mut seen = vec![false; self.n];
        let mut sizes = Vec::new();
        for start in 0..self.n {
            if gone[start] || seen[start] {
                continue;
            }
            let mut size = 0;
            let mut queue = VecDeque::new();
            queue.push_back(start);
            seen[start] = true;
            while let Some(u) = queue.pop_front() {
                size += 1;
                for v in 0..self.n {
                    if self.adj[u][v] && !gone[v] && !seen[v] {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
            sizes.push(size);
        }
        assert!(!sizes.is_empty(), "removed set covered the whole graph");
        sizes
    }
}

/// Unreduced fraction with a positive denominator, compared by
/// cross-multiplication in 128 bits.
#[derive(Debug, Clone, Copy)]
pub struct Frac {
    pub num: i64,
    pub den: i64,
}

impl Frac {
    pub fn new(num: i64, den: i64) -> Frac {
        assert!(den > 0);
        Frac { num, den }
    }

    pub fn lt(self, other: Frac) -> bool {
        (self.num as i128) * (other.den as i128) < (other.num as i128) * (self.den as i128)
    }

    pub fn eq_rational(self, r: Rational) -> bool {
        (self.num as i128) * (r.denominator() as i128)
            == (r.numerator() as i128) * (self.den as i128)
    }

    pub fn is(self, num: i64, den: i64) -> bool {
        (self.num as i128) * (den as i128) == (num as i128) * (self.den as i128)
    }
}

/// Calls `f` on every proper subset of {0, .., n-1}, the empty set
/// included, each exactly once, as a sorted vertex list.
pub fn for_each_proper_subset<F: FnMut(&[usize])>(n: usize, f: &mut F) {
    fn extend<F: FnMut(&[usize])>(n: usize, start: usize, chosen: &mut Vec<usize>, f: &mut F) {
        if chosen.len() < n {
            f(chosen);
        }
        for v in start..n {
            chosen.push(v);
            extend(n, v + 1, chosen, f);
            chosen.pop();
        }
    }
    extend(n, 0, &mut Vec::new(), f);
}

/// All six parameters by direct enumeration. The five cut-based values are
/// None exactly when the graph is complete.
pub struct NaiveSix {
    pub connectivity: Option<i64>,
    pub toughness: Option<Frac>,
    pub scattering: Option<i64>,
    pub integrity: i64,
    pub tenacity: Option<Frac>,
    pub rupture: Option<i64>,
}

pub fn naive_all(g: &NaiveGraph) -> NaiveSix {
    assert!(g.is_connected(), "reference implementation expects connected input");
    let n = g.n as i64;
    if g.is_complete() {
        return NaiveSix {
            connectivity: Some(n - 1),
            toughness: None,
            scattering: None,
            integrity: n,
            tenacity: None,
            rupture: None,
        };
    }
    let mut connectivity: Option<i64> = None;
    let mut toughness: Option<Frac> = None;
    let mut scattering: Option<i64> = None;
    let mut integrity = i64::MAX;
    let mut tenacity: Option<Frac> = None;
    let mut rupture: Option<i64> = None;
    for_each_proper_subset(g.n, &mut |subset| {
        let sizes = g.component_sizes(subset);
        let x = subset.len() as i64;
        let omega = sizes.len() as i64;
        let tau = *sizes.iter().max().unwrap() as i64;
        if x + tau < integrity {
            integrity = x + tau;
        }
        if omega < 2 {
            return;
        }
        if connectivity.is_none_or(|best| x < best) {
            connectivity = Some(x);
        }
        let t = Frac::new(x, omega);
        if toughness.is_none_or(|best| t.lt(best)) {
            toughness = Some(t);
        }
        if scattering.is_none_or(|best| omega - x > best) {
            scattering = Some(omega - x);
        }
        let ten = Frac::new(x + tau, omega);
        if tenacity.is_none_or(|best| ten.lt(best)) {
            tenacity = Some(ten);
        }
        if rupture.is_none_or(|best| omega - x - tau > best) {
            rupture = Some(omega - x - tau);
        }
    });
    NaiveSix {
        connectivity,
        toughness,
        scattering,
        integrity,
        tenacity,
        rupture,
    }
}

/// Asserts that the engine agrees with the naive enumeration on all six
/// parameters of a connected graph, and that every certificate the engine
/// returns re-evaluates to the claimed value.
pub fn assert_six_match(g: &Graph) {
    use tenax_core::{all_parameters, evaluate_cut, ParameterKind, ParameterOutcome};

    let naive = naive_all(&NaiveGraph::from_graph(g));
    let outcomes = all_parameters(g).expect("oracle comparison needs a connected graph");
    assert_eq!(outcomes.len(), 6);
    for outcome in &outcomes {
        match outcome {
            ParameterOutcome::Defined(r) => {
                let matches = match r.parameter {
                    ParameterKind::Connectivity => {
                        r.value == Rational::from_integer(naive.connectivity.unwrap())
                    }
                    ParameterKind::Toughness => naive.toughness.unwrap().eq_rational(r.value),
                    ParameterKind::Scattering => {
                        r.value == Rational::from_integer(naive.scattering.unwrap())
                    }
                    ParameterKind::Integrity => {
                        r.value == Rational::from_integer(naive.integrity)
                    }
                    ParameterKind::Tenacity => naive.tenacity.unwrap().eq_rational(r.value),
                    ParameterKind::Rupture => {
                        r.value == Rational::from_integer(naive.rupture.unwrap())
                    }
                };
                assert!(
                    matches,
                    "{} mismatch on {:?}: engine found {}",
                    r.parameter, g, r.value
                );
                if let Some(cert) = &r.certificate {
                    let replay = evaluate_cut(g, cert.cut, r.parameter)
                        .expect("certificate must be admissible");
                    assert_eq!(
                        replay.value, r.value,
                        "{} certificate of {:?} does not replay",
                        r.parameter, g
                    );
                }
            }
            ParameterOutcome::UndefinedForComplete(kind) => {
                let undefined_in_oracle = match kind {
                    ParameterKind::Connectivity | ParameterKind::Integrity => false,
                    ParameterKind::Toughness => naive.toughness.is_none(),
                    ParameterKind::Scattering => naive.scattering.is_none(),
                    ParameterKind::Tenacity => naive.tenacity.is_none(),
                    ParameterKind::Rupture => naive.rupture.is_none(),
                };
                assert!(
                    undefined_in_oracle,
                    "{kind} undefined in engine but defined in oracle on {g:?}"
                );
            }
        }
    }
}

/// Minimal standalone graph6 reader: header, then the upper triangle in
/// column order, six bits per payload byte, most significant first.
pub fn naive_graph6(s: &str) -> (usize, Vec<(usize, usize)>) {
    let bytes: Vec<u8> = s.bytes().collect();
    let (n, pos) = if bytes[0] == b'~' {
        if bytes[1] == b'~' {
            let mut n = 0usize;
            for &b in &bytes[2..8] {
                n = n * 64 + (b - 63) as usize;
            }
            (n, 8)
        } else {
            let mut n = 0usize;
            for &b in &bytes[1..4] {
                n = n * 64 + (b - 63) as usize;
            }
            (n, 4)
        }
    } else {
        ((bytes[0] - 63) as usize, 1)
    };
    let mut edges = Vec::new();
    let mut bit = 0usize;
    for col in 1..n {
        for row in 0..col {
            let byte = bytes[pos + bit / 6] - 63;
            if byte >> (5 - bit % 6) & 1 == 1 {
                edges.push((row, col));
            }
            bit += 1;
        }
    }
    (n, edges)
}

/// Textbook Prüfer decoding: repeatedly join the smallest leaf to the next
/// sequence entry.
pub fn naive_prufer(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    assert_eq!(seq.len(), n - 2);
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::new();
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf.min(s), leaf.max(s)));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    assert_eq!(rest.len(), 2);
    edges.push((rest[0], rest[1]));
    edges
}

/// Isomorphism by trying every vertex bijection; fine through n = 8.
pub fn brute_isomorphic(a: &NaiveGraph, b: &NaiveGraph) -> bool {
    if a.n != b.n || a.edge_count() != b.edge_count() || a.degree_sequence() != b.degree_sequence()
    {
        return false;
    }
    let mut image = vec![usize::MAX; a.n];
    let mut used = vec![false; a.n];
    #[allow(clippy::needless_range_loop)]
    fn assign(a: &NaiveGraph, b: &NaiveGraph, v: usize, image: &mut [usize], used: &mut [bool]) -> bool {
        if v == a.n {
            return true;
        }
        'candidate: for w in 0..a.n {
            if used[w] {
                continue;
            }
            for prior in 0..v {
                if a.adj[v][prior] != b.adj[w][image[prior]] {
                    continue 'candidate;
                }
            }
            image[v] = w;
            used[w] = true;
            if assign(a, b, v + 1, image, used) {
                return true;
            }
            image[v] = usize::MAX;
            used[w] = false;
        }
        false
    }
    assign(a, b, 0, &mut image, &mut used)
}
