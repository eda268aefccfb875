use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::enumeration::{all_trees, all_unicyclic, connected_graphs_iter};
use crate::enumeration::{random_connected_graph, random_connected_spanning_subgraph};
use crate::error::{Error, Result};
use crate::extremal::{
    build_harary_graph, build_min_connectivity_graph, build_min_tenacity_graph,
    cycle_tenacity, is_max_tenacity_tree, is_max_tenacity_unicyclic, max_connectivity_value,
    max_tree_tenacity, max_unicyclic_tenacity, min_tenacity_bracket, path_tenacity,
};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::invariants::{connectivity, tenacity};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VerificationStatus {
    Verified,
    Counterexample,
}

/// The first failure a verification run hit, if any.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub graph6: Option<String>,
    pub expected: String,
    pub observed: String,
    pub detail: String,
}

/// Outcome of re-deriving one claim by exhaustive or sampled checking.
/// Every field except `duration_ms` is deterministic for fixed arguments.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    pub range: String,
    pub status: VerificationStatus,
    pub checked_count: u64,
    pub witnesses: Vec<String>,
    pub counterexample: Option<Counterexample>,
    pub excluded: Vec<String>,
    pub duration_ms: u64,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize cleanly")
    }
}

struct ReportBuilder {
    claim: &'static str,
    range: String,
    started: Instant,
    checked: u64,
    witnesses: Vec<String>,
    excluded: Vec<String>,
    counterexample: Option<Counterexample>,
}

impl ReportBuilder {
    fn new(claim: &'static str, range: String) -> ReportBuilder {
        ReportBuilder {
            claim,
            range,
            started: Instant::now(),
            checked: 0,
            witnesses: Vec::new(),
            excluded: Vec::new(),
            counterexample: None,
        }
    }

    /// Records the first counterexample; verification short-circuits per
    /// claim, later findings are ignored.
    fn fail(&mut self, cex: Counterexample) {
        if self.counterexample.is_none() {
            self.counterexample = Some(cex);
        }
    }

    fn ok(&self) -> bool {
        self.counterexample.is_none()
    }

    fn finish(self) -> VerificationReport {
        VerificationReport {
            claim: self.claim.to_string(),
            range: self.range,
            status: if self.counterexample.is_none() {
                VerificationStatus::Verified
            } else {
                VerificationStatus::Counterexample
            },
            checked_count: self.checked,
            witnesses: self.witnesses,
            counterexample: self.counterexample,
            excluded: self.excluded,
            duration_ms: self.started.elapsed().as_millis() as u64,
        }
    }
}

fn check_range(claim: &'static str, n_max: usize, min: usize, max: usize) -> Result<()> {
    if n_max < min || n_max > max {
        return Err(Error::VerificationRange {
            claim,
            n_max,
            min,
            max,
        });
    }
    Ok(())
}

fn choose2(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Re-derives the minimum-tenacity bracket values by brute force and checks
/// that the companion construction attains them. Returns one report for the
/// bracket claim over all connected graphs and one for the construction.
pub fn verify_theorem1(n_max: usize) -> Result<Vec<VerificationReport>> {
    check_range("theorem1", n_max, 4, 7)?;
    let range = format!("connected noncomplete graphs, n=4..={n_max}, every feasible m");
    let mut thm = ReportBuilder::new("theorem1", range.clone());
    let mut cor = ReportBuilder::new("corollary1", range);

    'bracket: for n in 4..=n_max {
        for m in (n - 1)..choose2(n) {
            let bracket = min_tenacity_bracket(n, m)?;
            let mut minimum: Option<(Rational, String)> = None;
            for g in connected_graphs_iter(n, m)? {
                thm.checked += 1;
                let value = tenacity(&g)?.value;
                if minimum.as_ref().is_none_or(|(best, _)| value < *best) {
                    minimum = Some((value, to_graph6(&g)));
                }
            }
            let (observed, witness) = minimum.expect("every feasible (n, m) cell is nonempty");
            if observed == bracket.value {
                thm.witnesses.push(witness);
            } else {
                thm.fail(Counterexample {
                    graph6: Some(witness),
                    expected: bracket.value.to_string(),
                    observed: observed.to_string(),
                    detail: format!("minimum tenacity over connected graphs with n={n}, m={m}"),
                });
                break 'bracket;
            }
        }
    }

    'attain: for n in 4..=n_max {
        for m in (n - 1)..choose2(n) {
            let bracket = min_tenacity_bracket(n, m)?;
            let built = build_min_tenacity_graph(n, m)?;
            let value = tenacity(&built)?.value;
            cor.checked += 1;
            if value == bracket.value {
                cor.witnesses.push(to_graph6(&built));
            } else {
                cor.fail(Counterexample {
                    graph6: Some(to_graph6(&built)),
                    expected: bracket.value.to_string(),
                    observed: value.to_string(),
                    detail: format!("constructed minimum-tenacity graph for n={n}, m={m}"),
                });
                break 'attain;
            }
        }
    }

    Ok(vec![thm.finish(), cor.finish()])
}

/// Checks the maximum-tenacity tree characterization in both directions
/// against the full tree census: every maximizer satisfies the structural
/// predicate, and every tree satisfying it is a maximizer.
pub fn verify_theorem2(n_max: usize) -> Result<Vec<VerificationReport>> {
    check_range("theorem2", n_max, 2, 12)?;
    let mut b = ReportBuilder::new("theorem2", format!("all trees on 2..={n_max} vertices"));
    b.excluded
        .push("n=2: the only tree is P_2 = K_2, complete, so tenacity is undefined".to_string());

    'search: for n in 2..=n_max {
        let trees = all_trees(n)?;
        if n == 2 {
            b.checked += trees.len() as u64;
            continue;
        }
        let expected = max_tree_tenacity(n)?;
        let mut evaluated = Vec::with_capacity(trees.len());
        let mut observed: Option<Rational> = None;
        for tree in trees {
            b.checked += 1;
            let value = tenacity(&tree)?.value;
            if observed.is_none_or(|best| value > best) {
                observed = Some(value);
            }
            evaluated.push((tree, value));
        }
        let observed = observed.expect("at least one tree per order");
        if observed != expected {
            let (top, _) = evaluated
                .iter()
                .find(|(_, v)| *v == observed)
                .expect("maximum is attained");
            b.fail(Counterexample {
                graph6: Some(to_graph6(top)),
                expected: expected.to_string(),
                observed: observed.to_string(),
                detail: format!("maximum tenacity over trees on {n} vertices"),
            });
            break 'search;
        }
        for (tree, value) in &evaluated {
            let attains = *value == expected;
            let characterized = is_max_tenacity_tree(tree)?;
            if attains && !characterized {
                b.fail(Counterexample {
                    graph6: Some(to_graph6(tree)),
                    expected: "characterization accepts every maximizer".to_string(),
                    observed: "predicate rejects this maximizer".to_string(),
                    detail: format!("completeness direction fails on {n} vertices"),
                });
                break 'search;
            }
            if characterized && !attains {
                b.fail(Counterexample {
                    graph6: Some(to_graph6(tree)),
                    expected: expected.to_string(),
                    observed: value.to_string(),
                    detail: format!("soundness direction fails on {n} vertices"),
                });
                break 'search;
            }
            if attains {
                b.witnesses.push(to_graph6(tree));
            }
        }
    }

    Ok(vec![b.finish()])
}

/// Same double-inclusion check for the maximum-tenacity unicyclic
/// characterization.
pub fn verify_theorem3(n_max: usize) -> Result<Vec<VerificationReport>> {
    check_range("theorem3", n_max, 3, 11)?;
    let mut b = ReportBuilder::new(
        "theorem3",
        format!("all connected unicyclic graphs on 3..={n_max} vertices"),
    );
    b.excluded
        .push("n=3: the only unicyclic graph is C_3 = K_3, complete, so tenacity is undefined".to_string());

    'search: for n in 3..=n_max {
        let graphs = all_unicyclic(n)?;
        if n == 3 {
            b.checked += graphs.len() as u64;
            continue;
        }
        let expected = max_unicyclic_tenacity(n)?;
        let mut evaluated = Vec::with_capacity(graphs.len());
        let mut observed: Option<Rational> = None;
        for g in graphs {
            b.checked += 1;
            let value = tenacity(&g)?.value;
            if observed.is_none_or(|best| value > best) {
                observed = Some(value);
            }
            evaluated.push((g, value));
        }
        let observed = observed.expect("at least one unicyclic graph per order");
        if observed != expected {
            let (top, _) = evaluated
                .iter()
                .find(|(_, v)| *v == observed)
                .expect("maximum is attained");
            b.fail(Counterexample {
                graph6: Some(to_graph6(top)),
                expected: expected.to_string(),
                observed: observed.to_string(),
                detail: format!("maximum tenacity over unicyclic graphs on {n} vertices"),
            });
            break 'search;
        }
        for (g, value) in &evaluated {
            let attains = *value == expected;
            let characterized = is_max_tenacity_unicyclic(g)?;
            if attains && !characterized {
                b.fail(Counterexample {
                    graph6: Some(to_graph6(g)),
                    expected: "characterization accepts every maximizer".to_string(),
                    observed: "predicate rejects this maximizer".to_string(),
                    detail: format!("completeness direction fails on {n} vertices"),
                });
                break 'search;
            }
            if characterized && !attains {
                b.fail(Counterexample {
                    graph6: Some(to_graph6(g)),
                    expected: expected.to_string(),
                    observed: value.to_string(),
                    detail: format!("soundness direction fails on {n} vertices"),
                });
                break 'search;
            }
            if attains {
                b.witnesses.push(to_graph6(g));
            }
        }
    }

    Ok(vec![b.finish()])
}

/// Checks the four lemmas: spanning-subgraph monotonicity and the
/// forest-cut implication on seeded random samples, and the path and cycle
/// closed forms against the search engine. Sampling stays at or below 10
/// vertices; the closed forms run up to `n_max`.
pub fn verify_lemmas(n_max: usize, samples: usize, seed: u64) -> Result<Vec<VerificationReport>> {
    check_range("lemmas", n_max, 3, 16)?;
    if samples == 0 {
        return Err(Error::NoSamples);
    }
    let sample_cap = n_max.min(10);

    let mut l1 = ReportBuilder::new(
        "lemma1",
        format!("{samples} seeded random spanning-subgraph pairs, 3 <= n <= {sample_cap}"),
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pool: Vec<(Graph, Rational)> = Vec::with_capacity(2 * samples);
    for _ in 0..samples {
        let n = rng.random_range(3..=sample_cap);
        let m = rng.random_range((n - 1)..choose2(n));
        let g = random_connected_graph(n, m, rng.random::<u64>())?;
        let h = random_connected_spanning_subgraph(&g, rng.random::<u64>())?;
        let t_g = tenacity(&g)?.value;
        let t_h = tenacity(&h)?.value;
        l1.checked += 1;
        if t_h > t_g {
            l1.fail(Counterexample {
                graph6: Some(to_graph6(&g)),
                expected: format!("T(H) <= T(G) = {t_g}"),
                observed: format!("T(H) = {t_h}"),
                detail: format!("H = {} is a connected spanning subgraph", to_graph6(&h)),
            });
        }
        pool.push((g, t_g));
        pool.push((h, t_h));
    }

    let mut l2 = ReportBuilder::new(
        "lemma2",
        format!("forest cuts of {} sampled graphs", pool.len()),
    );
    let one = Rational::from_integer(1);
    'forest: for (g, t) in &pool {
        let n = g.n();
        let full = (1u64 << n) - 1;
        for mask in 0..full {
            let (omega32, _) = g.omega_tau(mask);
            let omega = omega32 as usize;
            let size = mask.count_ones() as usize;
            if omega < size + 2 {
                continue;
            }
            let rest = full & !mask;
            let mut degree_sum = 0u32;
            let mut bits = rest;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                degree_sum += (g.neighbors(v).bits() & rest).count_ones();
            }
            let acyclic = degree_sum / 2 == rest.count_ones() - omega32;
            if !acyclic {
                continue;
            }
            l2.checked += 1;
            if *t > one {
                l2.fail(Counterexample {
                    graph6: Some(to_graph6(g)),
                    expected: "T(G) <= 1".to_string(),
                    observed: format!("T(G) = {t}"),
                    detail: format!(
                        "forest cut of size {size} leaves {omega} components"
                    ),
                });
                break 'forest;
            }
            if omega >= size + 3 && *t >= one {
                l2.fail(Counterexample {
                    graph6: Some(to_graph6(g)),
                    expected: "T(G) < 1".to_string(),
                    observed: format!("T(G) = {t}"),
                    detail: format!(
                        "forest cut of size {size} leaves {omega} components"
                    ),
                });
                break 'forest;
            }
        }
    }

    let mut l3 = ReportBuilder::new("lemma3", format!("paths P_n, n=3..={n_max}"));
    l3.excluded
        .push("n=2: P_2 = K_2 is complete; the closed form extends the even-order pattern".to_string());
    for n in 3..=n_max {
        let p = Graph::path(n)?;
        let engine = tenacity(&p)?.value;
        let formula = path_tenacity(n)?;
        l3.checked += 1;
        if engine == formula {
            l3.witnesses.push(to_graph6(&p));
        } else {
            l3.fail(Counterexample {
                graph6: Some(to_graph6(&p)),
                expected: formula.to_string(),
                observed: engine.to_string(),
                detail: format!("tenacity of P_{n}"),
            });
            break;
        }
    }

    let mut l4 = ReportBuilder::new("lemma4", format!("cycles C_n, n=4..={n_max}"));
    l4.excluded
        .push("n=3: C_3 = K_3 is complete, so tenacity is undefined".to_string());
    for n in 4..=n_max {
        let c = Graph::cycle(n)?;
        let engine = tenacity(&c)?.value;
        let formula = cycle_tenacity(n)?;
        l4.checked += 1;
        if engine == formula {
            l4.witnesses.push(to_graph6(&c));
        } else {
            l4.fail(Counterexample {
                graph6: Some(to_graph6(&c)),
                expected: formula.to_string(),
                observed: engine.to_string(),
                detail: format!("tenacity of C_{n}"),
            });
            break;
        }
    }

    Ok(vec![l1.finish(), l2.finish(), l3.finish(), l4.finish()])
}

/// Checks both connectivity-extremal constructions against their closed
/// forms, and exhaustively confirms through n = min(n_max, 7) that no
/// connected graph beats the ceiling floor(2m/n) or undercuts the floor
/// m - C(n-1,2).
pub fn verify_harary(n_max: usize) -> Result<Vec<VerificationReport>> {
    check_range("harary", n_max, 4, 10)?;
    let sweep_cap = n_max.min(7);
    let mut hmax = ReportBuilder::new(
        "harary_max",
        format!("n=4..={n_max}, m=n-1..=C(n,2); exhaustive ceiling sweep through n={sweep_cap}"),
    );
    let mut hmin = ReportBuilder::new(
        "harary_min",
        format!(
            "n=4..={n_max}, m=C(n-1,2)+1..=C(n,2); exhaustive floor sweep through n={sweep_cap}"
        ),
    );

    for n in 4..=n_max {
        for m in (n - 1)..=choose2(n) {
            if hmax.ok() {
                let g = build_harary_graph(n, m)?;
                let ceiling = max_connectivity_value(n, m)? as i64;
                let kappa = connectivity(&g)?.value;
                hmax.checked += 1;
                if kappa == Rational::from_integer(ceiling) {
                    hmax.witnesses.push(to_graph6(&g));
                } else {
                    hmax.fail(Counterexample {
                        graph6: Some(to_graph6(&g)),
                        expected: ceiling.to_string(),
                        observed: kappa.to_string(),
                        detail: format!("connectivity of the circulant construction, n={n}, m={m}"),
                    });
                }
            }
            if m > choose2(n - 1) && hmin.ok() {
                let g = build_min_connectivity_graph(n, m)?;
                let floor = (m - choose2(n - 1)) as i64;
                let kappa = connectivity(&g)?.value;
                hmin.checked += 1;
                if kappa == Rational::from_integer(floor) {
                    hmin.witnesses.push(to_graph6(&g));
                } else {
                    hmin.fail(Counterexample {
                        graph6: Some(to_graph6(&g)),
                        expected: floor.to_string(),
                        observed: kappa.to_string(),
                        detail: format!(
                            "connectivity of the clique-plus-vertex construction, n={n}, m={m}"
                        ),
                    });
                }
            }
        }
    }

    for n in 4..=sweep_cap {
        for m in (n - 1)..=choose2(n) {
            if !hmax.ok() && !hmin.ok() {
                break;
            }
            let ceiling = Rational::from_integer(max_connectivity_value(n, m)? as i64);
            let floor = m as i64 - choose2(n - 1) as i64;
            for g in connected_graphs_iter(n, m)? {
                let kappa = connectivity(&g)?.value;
                if hmax.ok() {
                    hmax.checked += 1;
                    if kappa > ceiling {
                        hmax.fail(Counterexample {
                            graph6: Some(to_graph6(&g)),
                            expected: format!("connectivity <= {ceiling}"),
                            observed: kappa.to_string(),
                            detail: format!("ceiling sweep at n={n}, m={m}"),
                        });
                    }
                }
                if floor > 0 && hmin.ok() {
                    hmin.checked += 1;
                    if kappa < Rational::from_integer(floor) {
                        hmin.fail(Counterexample {
                            graph6: Some(to_graph6(&g)),
                            expected: format!("connectivity >= {floor}"),
                            observed: kappa.to_string(),
                            detail: format!("floor sweep at n={n}, m={m}"),
                        });
                    }
                }
            }
        }
    }

    Ok(vec![hmax.finish(), hmin.finish()])
}
