//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_rational::Ratio;
use specbounds::bounds::{bound_explicit, bound_nikiforov, bound_report, density_inequality};
use specbounds::exact::{ExactValue, SqrtRatio};
use specbounds::invariants::{
    chromatic_number, clique_number, enumerate_induced_bipartite, eta, independence_number, iota, is_planar_small, mad,
    theta,
};
use specbounds::spectral::{divisor_spectrum, eigenvalues_sym, lambda_min, rayleigh_witness};
use specbounds::{FamilySpec, Graph, VertexSet};

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-7
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed <= limit, || format!("took {elapsed:?}, limit {limit:?}"))
}

fn exact_int(k: i64) -> ExactValue {
    ExactValue::from_small(Ratio::from_integer(k))
}

fn regular_bipartite() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for t in 1..=5 {
        for d in 1..=t {
            let g = FamilySpec::RegularBipartite { d, t }.generate().map_err(|e| e.to_string())?;
            let lambda = lambda_min(&g).map_err(|e| e.to_string())?;
            let explicit = bound_explicit(&g).map_err(|e| e.to_string())?;
            ensure(close(lambda, -(d as f64)), || format!("d={d} t={t}: lambda {lambda}"))?;
            ensure(explicit == exact_int(-(d as i64)), || format!("d={d} t={t}: explicit {explicit}"))?;
            count += 1;
        }
    }
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!("{count} graphs, lambda = explicit = -d"))
}

fn complete_multipartite() -> Outcome {
    let start = Instant::now();
    for k in 2..=5 {
        for t in 1..=4 {
            let g = FamilySpec::CompleteMultipartite { k, t }.generate().map_err(|e| e.to_string())?;
            let lambda = lambda_min(&g).map_err(|e| e.to_string())?;
            let explicit = bound_explicit(&g).map_err(|e| e.to_string())?;
            let (chi, _) = chromatic_number(&g).map_err(|e| e.to_string())?;
            let (alpha, _) = independence_number(&g).map_err(|e| e.to_string())?;
            let tag = format!("k={k} t={t}");
            ensure(close(lambda, -(t as f64)), || format!("{tag}: lambda {lambda}"))?;
            ensure(explicit == exact_int(-(t as i64)), || format!("{tag}: explicit {explicit}"))?;
            ensure(chi == k && alpha == t, || format!("{tag}: chi {chi} alpha {alpha}"))?;
            ensure(g.m() == common::binomial2(k) * t * t, || format!("{tag}: m {}", g.m()))?;
        }
    }
    within(start.elapsed(), Duration::from_secs(5))?;
    Ok("16 graphs, lambda = explicit = -t, chi = k, alpha = t".into())
}

fn gap_family() -> Outcome {
    let start = Instant::now();
    let mut gaps = Vec::new();
    for s in 1..=4 {
        let g = FamilySpec::JoinFamilyH { s }.generate().map_err(|e| e.to_string())?;
        let value = eta(&g).map_err(|e| e.to_string())?.value;
        let target = -(s as f64 + 1.0);
        let (e, p) = common::eta(&g);
        let brute = SqrtRatio::new(e, p);
        ensure(value == SqrtRatio::new(2, 1) && brute == value, || format!("s={s}: eta {value}"))?;
        let lambda = lambda_min(&g).map_err(|e| e.to_string())?;
        ensure(close(lambda, target), || format!("s={s}: lambda {lambda}"))?;
        let cells: Vec<VertexSet> = (0..4).map(|c| (c * s..(c + 1) * s).collect()).collect();
        let divisor = divisor_spectrum(&g, &cells).map_err(|e| e.to_string())?.smallest();
        ensure(close(divisor, target), || format!("s={s}: divisor {divisor}"))?;
        let gap = (-value.to_f64() - lambda).abs();
        ensure(close(gap, s as f64 - 1.0), || format!("s={s}: gap {gap}"))?;
        gaps.push(gap);
    }
    within(start.elapsed(), Duration::from_secs(30))?;
    Ok(format!("eta = 2, gaps {gaps:.3?} grow by 1 per 4 vertices"))
}

/// λ and ι, with ι from exhaustive subset search.
fn lambda_iota(g: &Graph) -> Result<(f64, f64), String> {
    let lambda = lambda_min(g).map_err(|e| e.to_string())?;
    let iota = common::iota_bfs(g);
    Ok((lambda, *iota.numer() as f64 / *iota.denom() as f64))
}

fn cartesian_products() -> Outcome {
    let start = Instant::now();
    let factors = [
        ("K2", FamilySpec::Complete { n: 2 }.generate().unwrap()),
        ("C4", FamilySpec::Cycle { n: 4 }.generate().unwrap()),
        ("K23", Graph::from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap()),
        ("C6", FamilySpec::Cycle { n: 6 }.generate().unwrap()),
    ];
    let mut problems = Vec::new();
    for (name, g) in &factors {
        let (lambda, iota) = lambda_iota(g)?;
        if !close(lambda, -iota) {
            problems.push(format!("factor {name}: lambda {lambda:.6} != -iota {:.6}", -iota));
        }
    }
    let mut pairs = 0;
    for i in 0..factors.len() {
        for j in i..factors.len() {
            let (a, b) = (&factors[i], &factors[j]);
            if a.1.n() * b.1.n() > 20 {
                continue;
            }
            let p = a.1.cartesian_product(&b.1).map_err(|e| e.to_string())?;
            let (lambda, iota) = lambda_iota(&p)?;
            pairs += 1;
            if !close(lambda, -iota) {
                problems.push(format!("{}x{}: lambda {lambda:.6} != -iota {:.6}", a.0, b.0, -iota));
            }
        }
    }
    within(start.elapsed(), Duration::from_secs(600))?;
    if problems.is_empty() {
        Ok(format!("{pairs} products, lambda = -iota"))
    } else {
        Err(problems.join("; "))
    }
}

fn bound_chain(corpus: &[Graph]) -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for g in corpus.iter().filter(|g| g.m() > 0) {
        let r = bound_report(g, None).map_err(|e| e.to_string())?;
        let explicit = r.explicit_bound.as_ref().expect("edges present");
        let ok =
            r.lambda_min <= r.eta_bound.to_f64() + 1e-8 && r.eta_bound <= r.iota_bound && r.iota_bound <= *explicit;
        ensure(ok && r.chain_ok, || format!("{g}: chain broken"))?;
        checked += 1;
    }
    within(start.elapsed(), Duration::from_secs(120))?;
    Ok(format!("{checked} graphs with n <= 7"))
}

fn nikiforov_and_comparison(corpus: &[Graph]) -> Outcome {
    let start = Instant::now();
    let (mut strict, mut chromatic, mut planar) = (0, 0, 0);
    for g in corpus.iter().filter(|g| g.m() > 0) {
        let omega = clique_number(g).map_err(|e| e.to_string())?;
        let nik = bound_nikiforov(g, omega.max(2) as u32).map_err(|e| e.to_string())?;
        let lambda = lambda_min(g).map_err(|e| e.to_string())?;
        ensure(lambda < nik.to_f64(), || format!("{g}: lambda {lambda} not below {nik}"))?;
        strict += 1;
        let (chi, _) = chromatic_number(g).map_err(|e| e.to_string())?;
        if chi == 2 || chi == 3 {
            let explicit = bound_explicit(g).map_err(|e| e.to_string())?;
            let at_chi = bound_nikiforov(g, chi as u32).map_err(|e| e.to_string())?;
            ensure(explicit <= at_chi, || format!("{g}: explicit {explicit} > {at_chi}"))?;
            chromatic += 1;
        }
        if is_planar_small(g).map_err(|e| e.to_string())? {
            let th = theta(g).map_err(|e| e.to_string())?;
            ensure(density_inequality(g.n(), g.m(), th, 4), || format!("{g}: inequality fails at r = 4"))?;
            planar += 1;
        }
    }
    within(start.elapsed(), Duration::from_secs(180))?;
    Ok(format!("{strict} strict, {chromatic} chi in {{2,3}}, {planar} planar"))
}

fn oracle_equivalence(corpus: &[Graph]) -> Outcome {
    let start = Instant::now();
    let small: Vec<&Graph> = corpus.iter().filter(|g| g.n() <= 6 && g.n() > 0).collect();
    for g in &small {
        let err = |what: &str| format!("{g}: {what} differs");
        ensure(independence_number(g).map_err(|e| e.to_string())?.0 == common::alpha(g), || err("alpha"))?;
        ensure(clique_number(g).map_err(|e| e.to_string())? == common::omega(g), || err("omega"))?;
        ensure(chromatic_number(g).map_err(|e| e.to_string())?.0 == common::chi(g), || err("chi"))?;
        ensure(mad(g).map_err(|e| e.to_string())?.value == common::mad(g), || err("mad"))?;
        if g.m() > 0 {
            let (e, p) = common::eta(g);
            ensure(eta(g).map_err(|e| e.to_string())?.value == SqrtRatio::new(e, p), || err("eta"))?;
            ensure(iota(g).map_err(|e| e.to_string())?.value == common::iota(g), || err("iota"))?;
        }
    }
    within(start.elapsed(), Duration::from_secs(60))?;
    Ok(format!("{} graphs with n <= 6", small.len()))
}

fn eigensolver_health(corpus: &[Graph]) -> Outcome {
    let start = Instant::now();
    let mut witnesses = 0;
    for g in corpus.iter().filter(|g| g.n() > 0) {
        let ev = eigenvalues_sym(g).map_err(|e| e.to_string())?.eigenvalues;
        let sum: f64 = ev.iter().sum();
        let squares: f64 = ev.iter().map(|x| x * x).sum();
        ensure(sum.abs() < 1e-8, || format!("{g}: trace {sum}"))?;
        ensure((squares - 2.0 * g.m() as f64).abs() < 1e-6, || format!("{g}: sum of squares {squares}"))?;
        if g.is_bipartite().is_some() {
            let symmetric = ev.iter().zip(ev.iter().rev()).all(|(x, y)| (x + y).abs() < 1e-9);
            ensure(symmetric, || format!("{g}: bipartite spectrum not symmetric"))?;
        }
        if g.n() <= 6 && g.m() > 0 {
            for w in enumerate_induced_bipartite(g).map_err(|e| e.to_string())? {
                let v = rayleigh_witness(g, &w).map_err(|e| format!("{g}: {e}"))?;
                let expected = -(w.edges as f64) / (w.side_product() as f64).sqrt();
                ensure((v.value - expected).abs() <= 1e-12 * expected.abs(), || format!("{g}: quotient {}", v.value))?;
                witnesses += 1;
            }
        }
    }
    Ok(format!("{} graphs, {witnesses} witnesses, {:?}", corpus.len(), start.elapsed()))
}

fn main() -> ExitCode {
    let corpus = common::corpus(common::UPTO7);
    let criteria: Vec<Criterion> = vec![
        ("1 regular bipartite sharpness", Box::new(regular_bipartite)),
        ("2 complete multipartite sharpness", Box::new(complete_multipartite)),
        ("3 gap family", Box::new(gap_family)),
        ("4 cartesian-product closure", Box::new(cartesian_products)),
        ("5 bound chain", Box::new(|| bound_chain(&corpus))),
        ("6 nikiforov strictness and comparison", Box::new(|| nikiforov_and_comparison(&corpus))),
        ("7 oracle equivalence", Box::new(|| oracle_equivalence(&corpus))),
        ("8 eigensolver health", Box::new(|| eigensolver_health(&corpus))),
    ];
    let mut failed = 0;
    for (name, run) in &criteria {
        let start = Instant::now();
        match run() {
            Ok(detail) => println!("PASS criterion {name}: {detail} [{:.2?}]", start.elapsed()),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail} [{:.2?}]", start.elapsed());
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
