use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::rational::Rational;

/// Default ceiling for the exhaustive subset scans. 2^26 component
/// decompositions stay in the tens of seconds; anything larger must be
/// requested explicitly through the `_with_cap` variants.
pub const DEFAULT_EXHAUSTIVE_MAX_ORDER: usize = 26;

/// The six vulnerability parameters, in canonical reporting order.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash)]
pub enum ParameterKind {
    Connectivity,
    Toughness,
    Scattering,
    Integrity,
    Tenacity,
    Rupture,
}

impl ParameterKind {
    pub const ALL: [ParameterKind; 6] = [
        ParameterKind::Connectivity,
        ParameterKind::Toughness,
        ParameterKind::Scattering,
        ParameterKind::Integrity,
        ParameterKind::Tenacity,
        ParameterKind::Rupture,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ParameterKind::Connectivity => "connectivity",
            ParameterKind::Toughness => "toughness",
            ParameterKind::Scattering => "scattering",
            ParameterKind::Integrity => "integrity",
            ParameterKind::Tenacity => "tenacity",
            ParameterKind::Rupture => "rupture",
        }
    }

    pub fn parse(name: &str) -> Option<ParameterKind> {
        ParameterKind::ALL.into_iter().find(|k| k.name() == name)
    }

    /// Whether the optimum only ranges over vertex cuts. Integrity is the
    /// exception: its objective |X| + tau ranges over every proper subset.
    pub fn needs_cut(self) -> bool {
        !matches!(self, ParameterKind::Integrity)
    }
}

impl std::fmt::Display for ParameterKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// A witness for a parameter value: the removal set together with the
/// component statistics and objective value it produces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutCertificate {
    pub cut: VertexSet,
    pub cut_size: usize,
    pub omega: usize,
    pub tau: usize,
    pub value: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParameterResult {
    pub parameter: ParameterKind,
    pub value: Rational,
    /// Absent exactly for the connectivity of a complete graph, which is
    /// n - 1 by convention without any witnessing cut.
    pub certificate: Option<CutCertificate>,
}

/// Outcome of asking for one parameter of a graph where some parameters may
/// be undefined (the five cut-based ones on complete graphs).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParameterOutcome {
    Defined(ParameterResult),
    UndefinedForComplete(ParameterKind),
}

fn objective(kind: ParameterKind, size: usize, omega: usize, tau: usize) -> Rational {
    let (s, w, t) = (size as i64, omega as i64, tau as i64);
    match kind {
        ParameterKind::Connectivity => Rational::from_integer(s),
        ParameterKind::Toughness => Rational::new(s, w),
        ParameterKind::Scattering => Rational::from_integer(w - s),
        ParameterKind::Integrity => Rational::from_integer(s + t),
        ParameterKind::Tenacity => Rational::new(s + t, w),
        ParameterKind::Rupture => Rational::from_integer(w - s - t),
    }
}

fn is_minimized(kind: ParameterKind) -> bool {
    matches!(
        kind,
        ParameterKind::Connectivity
            | ParameterKind::Toughness
            | ParameterKind::Integrity
            | ParameterKind::Tenacity
    )
}

/// Evaluates one parameter's objective at a specific removal set, without
/// any optimization. The set must be a vertex cut for every parameter
/// except integrity, whose objective is defined at any proper subset.
pub fn evaluate_cut(g: &Graph, x: VertexSet, kind: ParameterKind) -> Result<CutCertificate> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let summary = g.components_after_removal(x)?;
    if kind.needs_cut() && summary.omega < 2 {
        return Err(Error::NotAVertexCut);
    }
    Ok(CutCertificate {
        cut: x,
        cut_size: x.len(),
        omega: summary.omega,
        tau: summary.tau,
        value: objective(kind, x.len(), summary.omega, summary.tau),
    })
}

#[derive(Debug, Clone, Copy)]
struct Best {
    value: Rational,
    size: u32,
    mask: u64,
    omega: u32,
    tau: u32,
}

/// Deterministic preference among equal-valued candidates: smaller cut
/// first, then numerically smaller bitmask. Stated as a comparator rather
/// than relying on scan order, so any future reordering or parallel split
/// of the scan keeps the same winners.
fn prefer(candidate: &Best, incumbent: &Best, minimize: bool) -> bool {
    let by_value = if minimize {
        candidate.value.cmp(&incumbent.value)
    } else {
        incumbent.value.cmp(&candidate.value)
    };
    by_value
        .then(candidate.size.cmp(&incumbent.size))
        .then(candidate.mask.cmp(&incumbent.mask))
        .is_lt()
}

fn consider(slot: &mut Option<Best>, candidate: Best, minimize: bool) {
    match slot {
        Some(incumbent) => {
            if prefer(&candidate, incumbent, minimize) {
                *slot = Some(candidate);
            }
        }
        None => *slot = Some(candidate),
    }
}

#[derive(Default)]
struct ScanResult {
    per_kind: [Option<Best>; 6],
}

/// One pass over every proper subset of the vertices, tracking the optimum
/// of all six objectives simultaneously.
fn exhaustive_scan(g: &Graph) -> ScanResult {
    let n = g.n();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut result = ScanResult::default();
    for mask in 0..full {
        let (omega32, tau32) = g.omega_tau(mask);
        let (omega, tau) = (omega32 as usize, tau32 as usize);
        let size = mask.count_ones() as usize;
        let mut offer = |kind: ParameterKind| {
            let candidate = Best {
                value: objective(kind, size, omega, tau),
                size: size as u32,
                mask,
                omega: omega32,
                tau: tau32,
            };
            consider(
                &mut result.per_kind[kind as usize],
                candidate,
                is_minimized(kind),
            );
        };
        offer(ParameterKind::Integrity);
        if omega >= 2 {
            offer(ParameterKind::Connectivity);
            offer(ParameterKind::Toughness);
            offer(ParameterKind::Scattering);
            offer(ParameterKind::Tenacity);
            offer(ParameterKind::Rupture);
        }
    }
    result
}

fn check_searchable(g: &Graph, cap: usize) -> Result<()> {
    if g.n() > cap {
        return Err(Error::ExhaustiveCapExceeded {
            order: g.n(),
            cap,
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

fn best_to_result(kind: ParameterKind, best: Best) -> ParameterResult {
    ParameterResult {
        parameter: kind,
        value: best.value,
        certificate: Some(CutCertificate {
            cut: VertexSet::from_bits(best.mask),
            cut_size: best.size as usize,
            omega: best.omega as usize,
            tau: best.tau as usize,
            value: best.value,
        }),
    }
}

/// Exact value of one parameter with an optimal-cut certificate, using the
/// given order cap for the exhaustive scan.
pub fn parameter_with_cap(g: &Graph, kind: ParameterKind, cap: usize) -> Result<ParameterResult> {
    check_searchable(g, cap)?;
    if g.is_complete() {
        return match kind {
            ParameterKind::Connectivity => Ok(ParameterResult {
                parameter: kind,
                value: Rational::from_integer(g.n() as i64 - 1),
                certificate: None,
            }),
            ParameterKind::Integrity => {
                let scan = exhaustive_scan(g);
                Ok(best_to_result(kind, scan.per_kind[kind as usize].unwrap()))
            }
            _ => Err(Error::CompleteGraph),
        };
    }
    let scan = exhaustive_scan(g);
    let best = scan.per_kind[kind as usize]
        .expect("a noncomplete connected graph has a vertex cut");
    Ok(best_to_result(kind, best))
}

pub fn parameter(g: &Graph, kind: ParameterKind) -> Result<ParameterResult> {
    parameter_with_cap(g, kind, DEFAULT_EXHAUSTIVE_MAX_ORDER)
}

pub fn connectivity(g: &Graph) -> Result<ParameterResult> {
    parameter(g, ParameterKind::Connectivity)
}

pub fn toughness(g: &Graph) -> Result<ParameterResult> {
    parameter(g, ParameterKind::Toughness)
}

pub fn scattering_number(g: &Graph) -> Result<ParameterResult> {
    parameter(g, ParameterKind::Scattering)
}

pub fn integrity(g: &Graph) -> Result<ParameterResult> {
    parameter(g, ParameterKind::Integrity)
}

pub fn tenacity(g: &Graph) -> Result<ParameterResult> {
    parameter(g, ParameterKind::Tenacity)
}

pub fn rupture_degree(g: &Graph) -> Result<ParameterResult> {
    parameter(g, ParameterKind::Rupture)
}

/// All six parameters from a single subset scan, in `ParameterKind::ALL`
/// order. On complete graphs the five cut-based parameters come back as
/// `UndefinedForComplete` instead of failing the whole call.
pub fn all_parameters_with_cap(g: &Graph, cap: usize) -> Result<Vec<ParameterOutcome>> {
    check_searchable(g, cap)?;
    let complete = g.is_complete();
    let scan = exhaustive_scan(g);
    let mut out = Vec::with_capacity(6);
    for kind in ParameterKind::ALL {
        if complete && kind == ParameterKind::Connectivity {
            out.push(ParameterOutcome::Defined(ParameterResult {
                parameter: kind,
                value: Rational::from_integer(g.n() as i64 - 1),
                certificate: None,
            }));
        } else if complete && kind != ParameterKind::Integrity {
            out.push(ParameterOutcome::UndefinedForComplete(kind));
        } else {
            let best = scan.per_kind[kind as usize].expect("optimum exists");
            out.push(ParameterOutcome::Defined(best_to_result(kind, best)));
        }
    }
    Ok(out)
}

pub fn all_parameters(g: &Graph) -> Result<Vec<ParameterOutcome>> {
    all_parameters_with_cap(g, DEFAULT_EXHAUSTIVE_MAX_ORDER)
}
