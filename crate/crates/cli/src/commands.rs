use std::fmt::Write as _;

use coxlink_core::analysis::{
    analyze_alternating, analyze_classical, contains_golden_square, min_dilatation_search,
    verify_theorems, AnalysisError, AnalysisReport, ClassicalReport, Report, VerifyConfig,
};
use coxlink_core::coxeter::CoxeterSystem;
use coxlink_core::fixtures;
use coxlink_core::graph::{
    adjacency_matrix, is_alternating_sign, is_vertex_extension, MixedSignGraph,
};
use coxlink_core::numeric::format_rational;
use coxlink_core::spectra::{interlace_check, RationalInterval};
use serde::Serialize;

use crate::input::{check_nmax, load_graph, parse_epsilon, CliError};

const PLACES: usize = 10;

impl From<AnalysisError> for CliError {
    fn from(e: AnalysisError) -> Self {
        CliError::contract(e.to_string())
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn interval_line(label: &str, r: &RationalInterval) -> String {
    format!(
        "{label}: {}  ({}, {})\n",
        r.to_decimal_string(PLACES),
        format_rational(&r.lo),
        format_rational(&r.hi)
    )
}

fn with_newline(mut s: String) -> String {
    s.push('\n');
    s
}

fn json<T: Serialize>(value: &T) -> String {
    with_newline(serde_json::to_string_pretty(value).expect("output types always serialize"))
}

pub fn analyze(
    input: &str,
    as_json: bool,
    epsilon: &str,
    classical: bool,
) -> Result<String, CliError> {
    let g = load_graph(input)?;
    let eps = parse_epsilon(epsilon)?;
    let report = if is_alternating_sign(&g) {
        Report::Alternating(analyze_alternating(&g, &eps)?)
    } else if classical {
        Report::Classical(analyze_classical(&g, &eps)?)
    } else {
        return Err(CliError::contract(
            "graph is not alternating-sign (pass --classical for a reduced report)",
        ));
    };
    if as_json {
        return Ok(with_newline(report.to_json()));
    }
    Ok(match &report {
        Report::Alternating(r) => alternating_text(r),
        Report::Classical(r) => classical_text(r),
    })
}

fn alternating_text(r: &AnalysisReport) -> String {
    let f = &r.flags;
    let mut s = String::new();
    let _ = writeln!(
        s,
        "graph: n = {}, edges = {}, alternating-sign",
        r.graph.n, r.graph.edges
    );
    let _ = writeln!(s, "c(t) = {}", r.polynomials.coxeter);
    let _ = writeln!(s, "Δ(t) = {}", r.polynomials.alexander);
    s.push_str(&interval_line("spectral radius", &r.spectral_radius));
    let _ = writeln!(
        s,
        "spectrum real and negative: {}",
        yes_no(r.negative_spectrum)
    );
    let _ = writeln!(s, "Δ real stable: {}", yes_no(f.real_stable));
    let _ = writeln!(s, "Δ sign alternating: {}", yes_no(f.sign_alternating));
    match f.plateau_k {
        Some(k) => {
            let _ = writeln!(s, "Δ trapezoidal: yes (plateau from index {k})");
        }
        None => {
            let _ = writeln!(s, "Δ trapezoidal: no");
        }
    }
    let _ = writeln!(s, "Δ log-concave: {}", yes_no(f.log_concave));
    let _ = writeln!(
        s,
        "monodromy eigenvalues real positive: {}",
        yes_no(f.biorderable_implied)
    );
    let _ = writeln!(
        s,
        "proof identities: {}",
        if f.proof_identities_ok {
            "ok"
        } else {
            "FAILED"
        }
    );
    s
}

fn classical_text(r: &ClassicalReport) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "graph: n = {}, edges = {}, classical signs",
        r.graph.n, r.graph.edges
    );
    let _ = writeln!(s, "c(t) = {}", r.polynomials.coxeter);
    match &r.max_real_root {
        Some(root) => s.push_str(&interval_line("max real root", root)),
        None => s.push_str("max real root: none\n"),
    }
    s
}

#[derive(Debug, Serialize)]
struct Comparison {
    small_n: usize,
    large_n: usize,
    extension: bool,
    /// `C₊₋` spectra.
    interlaced: bool,
    alexander_interlaced: bool,
    adjacency_interlaced: bool,
}

fn polynomials(
    g: &MixedSignGraph,
) -> Result<(CoxeterSystem, coxlink_core::IntPolynomial), CliError> {
    let sys = CoxeterSystem::alternating(g).map_err(|e| CliError::contract(e.to_string()))?;
    let c = sys.coxeter_polynomial();
    Ok((sys, c))
}

pub fn compare(small: &str, large: &str, as_json: bool) -> Result<String, CliError> {
    let g = load_graph(small)?;
    let h = load_graph(large)?;
    let (m, n) = (g.vertex_count(), h.vertex_count());
    if m + 1 != n {
        return Err(CliError::contract(format!(
            "degree mismatch: the second graph needs exactly one more vertex, got {m} and {n}"
        )));
    }
    let (gs, p) = polynomials(&g)?;
    let (hs, q) = polynomials(&h)?;
    let contract = |e: coxlink_core::SpectraError| CliError::contract(e.to_string());
    let alexander = |s: &CoxeterSystem| {
        s.alexander_polynomial()
            .map_err(|e| CliError::contract(e.to_string()))
    };
    let cmp = Comparison {
        small_n: m,
        large_n: n,
        extension: is_vertex_extension(&g, &h),
        interlaced: interlace_check(&p, &q).map_err(contract)?,
        alexander_interlaced: interlace_check(&alexander(&gs)?, &alexander(&hs)?)
            .map_err(contract)?,
        adjacency_interlaced: interlace_check(
            &adjacency_matrix(&g).charpoly(),
            &adjacency_matrix(&h).charpoly(),
        )
        .map_err(contract)?,
    };
    if as_json {
        return Ok(json(&cmp));
    }
    Ok(format!(
        "extension: {}\ninterlaced: {}\nalexander interlaced: {}\nadjacency interlaced: {}\n",
        yes_no(cmp.extension),
        yes_no(cmp.interlaced),
        yes_no(cmp.alexander_interlaced),
        yes_no(cmp.adjacency_interlaced)
    ))
}

pub fn verify(
    nmax: usize,
    seed: u64,
    trials: u64,
    dedup: bool,
    as_json: bool,
) -> Result<String, CliError> {
    check_nmax(nmax)?;
    let config = VerifyConfig {
        n_max: nmax,
        trials,
        seed,
        dedup,
    };
    let summary = verify_theorems(&config)?;
    eprintln!("wall time: {:.3}s", summary.wall_time.as_secs_f64());
    let text = if as_json {
        with_newline(summary.to_json())
    } else {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "verify: n_max={} trials={} seed={} dedup={}",
            nmax,
            trials,
            seed,
            yes_no(dedup)
        );
        let _ = writeln!(s, "graphs examined: {}", summary.graphs_examined);
        for t in &summary.trees {
            let _ = writeln!(s, "trees with {} vertices: {}", t.n, t.trees);
        }
        for c in &summary.checks {
            let _ = writeln!(
                s,
                "{:<45} passed {:>8}  failed {}",
                c.name, c.passed, c.failed
            );
        }
        if let Some(cx) = &summary.counterexample {
            s.push_str("counterexample:\n");
            s.push_str(&json(cx));
        }
        s
    };
    if summary.all_passed() {
        Ok(text)
    } else {
        Err(CliError::violation("counterexample found", text))
    }
}

pub fn min_search(
    nmax: usize,
    dedup: bool,
    epsilon: &str,
    as_json: bool,
) -> Result<String, CliError> {
    check_nmax(nmax)?;
    let eps = parse_epsilon(epsilon)?;
    let r = min_dilatation_search(nmax, dedup, &eps)?;
    let golden = contains_golden_square(&r.minimum);
    let text = if as_json {
        json(&r)
    } else {
        let mut s = String::new();
        let _ = writeln!(s, "trees examined: {}", r.trees_examined);
        s.push_str(&interval_line("minimum spectral radius", &r.minimum));
        let _ = writeln!(s, "contains golden ratio squared: {}", yes_no(golden));
        let _ = writeln!(
            s,
            "attained at n={} (tree index {})",
            r.attained_n, r.attained_index
        );
        s.push_str(&r.attained_graph);
        if !r.attained_graph.ends_with('\n') {
            s.push('\n');
        }
        let _ = writeln!(
            s,
            "monotonicity: {} ({} leaf deletions checked)",
            if r.monotonicity_ok { "ok" } else { "FAILED" },
            r.monotonicity_checks
        );
        s
    };
    if r.attained_n == 2 && golden && r.monotonicity_ok {
        Ok(text)
    } else {
        Err(CliError::violation(
            "minimum search contradicts the golden-ratio bound",
            text,
        ))
    }
}

pub fn example(name: &str) -> Result<String, CliError> {
    match fixtures::by_name(name) {
        Some(g) => Ok(g.to_text()),
        None => Err(CliError::input(format!(
            "unknown example {name:?}; valid names: {}",
            fixtures::NAMES.join(", ")
        ))),
    }
}
