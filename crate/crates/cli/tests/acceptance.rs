//! Acceptance gate: one test per criterion, each printing a single
//! pass/fail line.  Tolerances are exact equality throughout (all
//! arithmetic is exact); time budgets are asserted where stated.

use std::collections::BTreeMap;
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use rootclusters::clusters::{cluster_size, dihedral_quartic, perlis_suite, ClusterSize, Mode};
use rootclusters::factor::{factor_q, is_irreducible_q};
use rootclusters::magnify::{generate_magnifier, magnify};
use rootclusters::poly::rational::{discriminant, primitive_integer_form};
use rootclusters::sn_tower::{build_tower, theorem3_verify, tower_degrees};
use rootclusters::{ratpoly, Config, Error, RatPoly};

fn conclude(n: usize, name: &str, failures: Vec<String>) {
    let ok = failures.is_empty();
    println!("criterion {n} ({name}): {}", if ok { "PASS" } else { "FAIL" });
    for f in &failures {
        println!("  - {f}");
    }
    assert!(ok, "criterion {n} ({name}) failed: {failures:?}");
}

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rootclusters"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn criterion_1_reference_table_reproduction() {
    let mut bad = Vec::new();
    let budgets = [
        ("1", Duration::from_secs(300)),
        ("2", Duration::from_secs(10)),
        ("3", Duration::from_secs(300)),
    ];
    let expected_sizes = ["6", "3", "4"];
    for ((row, budget), want_size) in budgets.iter().zip(expected_sizes) {
        let t = Instant::now();
        let out = bin(&["reproduce-table", "--row", row, "--json"]);
        let elapsed = t.elapsed();
        if !out.status.success() {
            bad.push(format!("row {row} exited {:?}", out.status.code()));
            continue;
        }
        let v: serde_json::Value =
            serde_json::from_slice(&out.stdout).expect("json report");
        let r = &v["result"]["rows"][0];
        if r["poly_match"] != true {
            bad.push(format!("row {row} coefficients diverge: {}", r["diffs"]));
        }
        if r["size"] != want_size {
            bad.push(format!("row {row} size {} want {want_size}", r["size"]));
        }
        if elapsed > *budget {
            bad.push(format!("row {row} took {elapsed:?}, budget {budget:?}"));
        }
    }
    let out = bin(&["reproduce-table", "--json"]);
    if !out.status.success() {
        bad.push("full table run failed".into());
    } else {
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).expect("json report");
        if v["result"]["all_match"] != true {
            bad.push("full table run reports a mismatch".into());
        }
    }
    conclude(1, "reference table reproduction", bad);
}

#[test]
fn criterion_2_input_cluster_sizes() {
    let cfg = Config::default();
    let mut bad = Vec::new();
    let cases: Vec<(RatPoly, usize, &str)> = vec![
        (ratpoly(&[-1, 1, 0, -2, 1]), 2, "quartic with paired roots"),
        (ratpoly(&[-2, 0, 0, 1]), 1, "cube root of 2"),
        (ratpoly(&[-3, -3, 0, 0, 0, 1]), 1, "quintic trinomial"),
        (ratpoly(&[1, 1, 1, 1, 1]), 4, "fifth cyclotomic"),
    ];
    for (f, want, label) in &cases {
        let t = Instant::now();
        match cluster_size(f, Mode::Auto, &cfg) {
            Ok(rep) if rep.size == ClusterSize::Exact(*want) => {}
            Ok(rep) => bad.push(format!("{label}: size {:?}, want {want}", rep.size)),
            Err(e) => bad.push(format!("{label}: {e}")),
        }
        if t.elapsed() > Duration::from_secs(5) {
            bad.push(format!("{label}: over the 5 s budget"));
        }
    }
    for t_param in 4..=12 {
        let t = Instant::now();
        match dihedral_quartic(t_param, &cfg) {
            Ok((_, rep)) if rep.size == ClusterSize::Exact(2) => {}
            Ok((_, rep)) => bad.push(format!("t={t_param}: size {:?}, want 2", rep.size)),
            Err(e) => bad.push(format!("t={t_param}: {e}")),
        }
        if t.elapsed() > Duration::from_secs(5) {
            bad.push(format!("t={t_param}: over the 5 s budget"));
        }
    }
    conclude(2, "input cluster sizes", bad);
}

/// Deterministic corpus of irreducible polynomials of degree at most 8:
/// the named inputs used across the suite, the dihedral quartic family,
/// pure powers, and small trinomials filtered for irreducibility.
fn corpus() -> Vec<RatPoly> {
    let mut polys: Vec<RatPoly> = vec![
        ratpoly(&[-1, 1, 0, -2, 1]),
        ratpoly(&[-2, 0, 0, 1]),
        ratpoly(&[-3, -3, 0, 0, 0, 1]),
        ratpoly(&[1, 1, 1, 1, 1]),
        ratpoly(&[1, 1, 1, 1, 1, 1, 1]),
        ratpoly(&[-1, -1, 0, 0, 1]),
        ratpoly(&[-1, -1, 0, 0, 0, 1]),
        ratpoly(&[-1, -3, 0, 1]),
        ratpoly(&[-2, 0, 1]),
        ratpoly(&[-1, 1, 1]),
        ratpoly(&[-1, -2, 1, 1]),
    ];
    let cfg = Config::default();
    for t in 4..=12 {
        polys.push(dihedral_quartic(t, &cfg).expect("family member").0);
    }
    for n in [3usize, 4, 5, 6, 7, 8] {
        let mut coeffs = vec![0i64; n + 1];
        coeffs[0] = -2;
        coeffs[n] = 1;
        polys.push(ratpoly(&coeffs));
    }
    for n in [3usize, 4, 5, 6, 7, 8] {
        let mut taken = 0;
        for a in [-2i64, -1, 1, 2] {
            for b in [-2i64, -1, 1, 2] {
                if taken >= 5 {
                    continue;
                }
                let mut coeffs = vec![0i64; n + 1];
                coeffs[0] = b;
                coeffs[1] = a;
                coeffs[n] = 1;
                let f = ratpoly(&coeffs);
                if polys.contains(&f) {
                    continue;
                }
                if is_irreducible_q(&f).expect("nonzero") {
                    polys.push(f);
                    taken += 1;
                }
            }
        }
    }
    for f in &polys {
        assert!(f.deg() <= 8);
        assert!(is_irreducible_q(f).expect("nonzero"));
    }
    polys
}

#[test]
fn criterion_3_cluster_invariants_suite() {
    let cfg = Config::default();
    let t = Instant::now();
    let polys = corpus();
    let mut bad = Vec::new();
    if polys.len() < 50 {
        bad.push(format!("corpus has {} members, need at least 50", polys.len()));
    }
    for f in &polys {
        match perlis_suite(f, &cfg) {
            Ok(rep) => {
                for check in &rep.checks {
                    if !check.passed {
                        bad.push(format!("{f}: {} ({})", check.name, check.detail));
                    }
                }
            }
            Err(e) => bad.push(format!("{f}: {e}")),
        }
    }
    if t.elapsed() > Duration::from_secs(600) {
        bad.push("suite over the 10 min budget".into());
    }
    conclude(3, "cluster invariants suite", bad);
}

#[test]
fn criterion_4_magnification_law() {
    let cfg = Config::default();
    let t = Instant::now();
    let mut bad = Vec::new();
    let inputs = [
        ratpoly(&[-2, 0, 0, 1]),
        ratpoly(&[-1, 1, 0, -2, 1]),
        ratpoly(&[-1, -1, 0, 0, 1]),
    ];
    for f in &inputs {
        for d in [2usize, 3] {
            let label = format!("{f} by degree {d}");
            let h = match generate_magnifier(d, f, &cfg) {
                Ok(m) => m,
                Err(e) => {
                    bad.push(format!("{label}: magnifier generation: {e}"));
                    continue;
                }
            };
            match magnify(f, &h.poly, &cfg) {
                Ok(m) => {
                    let n = f.deg();
                    if m.output.deg() != n * d {
                        bad.push(format!("{label}: degree {} want {}", m.output.deg(), n * d));
                    }
                    if !is_irreducible_q(&m.output).expect("nonzero") {
                        bad.push(format!("{label}: output reducible"));
                    }
                    match m.size {
                        ClusterSize::Exact(r) if r == m.input_cluster * d => {}
                        ClusterSize::Exact(r) => {
                            bad.push(format!("{label}: size {r} want {}", m.input_cluster * d))
                        }
                        ClusterSize::Interval { lower, upper } => bad.push(format!(
                            "{label}: interval-only outcome [{lower}, {upper}]"
                        )),
                    }
                }
                Err(e) => bad.push(format!("{label}: {e}")),
            }
        }
    }
    if t.elapsed() > Duration::from_secs(600) {
        bad.push("grid over the 10 min budget".into());
    }
    conclude(4, "magnification law", bad);
}

#[test]
fn criterion_5_magnifier_generator() {
    let cfg = Config::default();
    let t = Instant::now();
    let mut bad = Vec::new();
    let avoids = [ratpoly(&[-2, 0, 1]), ratpoly(&[-2, 0, 0, 1])];
    for avoid in &avoids {
        let disc = {
            let (_, int) = primitive_integer_form(avoid);
            let d = discriminant(&rootclusters::poly::rational::int_to_rat(&int))
                .expect("degree over 1");
            d.numer().clone()
        };
        for d in 2usize..=6 {
            let label = format!("degree {d} avoiding {avoid}");
            let m = match generate_magnifier(d, avoid, &cfg) {
                Ok(m) => m,
                Err(e) => {
                    bad.push(format!("{label}: {e}"));
                    continue;
                }
            };
            if m.poly.deg() != d {
                bad.push(format!("{label}: got degree {}", m.poly.deg()));
            }
            if !is_irreducible_q(&m.poly).expect("nonzero") {
                bad.push(format!("{label}: output reducible"));
            }
            match cluster_size(&m.poly, Mode::Exact, &cfg) {
                Ok(rep) if rep.size == ClusterSize::Exact(d) => {}
                other => bad.push(format!("{label}: not Galois ({other:?})")),
            }
            if m.prime % (d as u64) != 1 {
                bad.push(format!("{label}: prime {} not 1 mod {d}", m.prime));
            }
            if (&disc % m.prime as i64) == 0.into() && disc != 0.into() {
                bad.push(format!("{label}: prime {} divides the discriminant", m.prime));
            }
            if d == 2 && (m.prime, m.poly.clone()) != (5, ratpoly(&[-1, 1, 1])) {
                bad.push(format!("{label}: want p=5, x^2 + x - 1; got p={}, {}", m.prime, m.poly));
            }
            if d == 3 && (m.prime, m.poly.clone()) != (7, ratpoly(&[-1, -2, 1, 1])) {
                bad.push(format!(
                    "{label}: want p=7, x^3 + x^2 - 2*x - 1; got p={}, {}",
                    m.prime, m.poly
                ));
            }
        }
    }
    if t.elapsed() > Duration::from_secs(60) {
        bad.push("generator over the 1 min budget".into());
    }
    conclude(5, "magnifier generator", bad);
}

#[test]
fn criterion_6_root_tower_certification() {
    let cfg = Config::default();
    let t = Instant::now();
    let mut bad = Vec::new();
    let quartic = ratpoly(&[-1, -1, 0, 0, 1]);
    match theorem3_verify(&quartic, 2, &cfg) {
        Ok(rep) => {
            if rep.output.deg() != 12 {
                bad.push(format!("quartic k=2: degree {}", rep.output.deg()));
            }
            if rep.size != Some(ClusterSize::Exact(2)) {
                bad.push(format!("quartic k=2: size {:?}", rep.size));
            }
        }
        Err(e) => bad.push(format!("quartic k=2: {e}")),
    }
    match theorem3_verify(&quartic, 1, &cfg) {
        Ok(rep) => {
            if rep.output.deg() != 4 {
                bad.push(format!("quartic k=1: degree {}", rep.output.deg()));
            }
            if rep.size != Some(ClusterSize::Exact(1)) {
                bad.push(format!("quartic k=1: size {:?}", rep.size));
            }
        }
        Err(e) => bad.push(format!("quartic k=1: {e}")),
    }
    match tower_degrees(&quartic, 3, &cfg) {
        Ok(seq) if seq.degrees == vec![4, 12, 24] && !seq.truncated => {}
        other => bad.push(format!("quartic degree sequence: {other:?}")),
    }
    let quintic = ratpoly(&[-1, -1, 0, 0, 0, 1]);
    match theorem3_verify(&quintic, 2, &cfg) {
        Ok(rep) => {
            if rep.output.deg() != 20 {
                bad.push(format!("quintic k=2: degree {}", rep.output.deg()));
            }
            if rep.size != Some(ClusterSize::Exact(2)) {
                bad.push(format!("quintic k=2: size {:?}", rep.size));
            }
        }
        Err(e) => bad.push(format!("quintic k=2: {e}")),
    }
    match build_tower(&quartic, 3, &cfg) {
        Err(Error::FullSplittingField { k: 3 }) => {}
        other => bad.push(format!(
            "quartic k=3 must flag the splitting-field case, got {other:?}"
        )),
    }
    if t.elapsed() > Duration::from_secs(600) {
        bad.push("towers over the 10 min budget".into());
    }
    conclude(6, "root tower certification", bad);
}

#[test]
fn criterion_7_certificate_bracketing() {
    let cfg = Config::default();
    let mut bad = Vec::new();
    for f in corpus() {
        let exact = match cluster_size(&f, Mode::Exact, &cfg) {
            Ok(rep) => rep.size.exact().expect("exact mode yields a number"),
            Err(e) => {
                bad.push(format!("{f}: exact path: {e}"));
                continue;
            }
        };
        match cluster_size(&f, Mode::Certified, &cfg) {
            Ok(rep) => {
                let cert = rep.certificate.expect("certified mode carries evidence");
                if !(cert.witnesses <= exact && exact <= cert.upper_bound) {
                    bad.push(format!(
                        "{f}: exact {exact} outside [{}, {}]",
                        cert.witnesses, cert.upper_bound
                    ));
                }
                if let ClusterSize::Exact(c) = rep.size {
                    if c != exact {
                        bad.push(format!("{f}: certified {c} but exact {exact}"));
                    }
                }
            }
            Err(e) => bad.push(format!("{f}: certified path: {e}")),
        }
    }
    conclude(7, "certificate bracketing", bad);
}

struct SplitMix(u64);

impl SplitMix {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }
}

fn random_irreducible(rng: &mut SplitMix, deg: usize) -> RatPoly {
    loop {
        let mut coeffs: Vec<i64> = (0..deg).map(|_| rng.below(19) as i64 - 9).collect();
        coeffs.push(1 + rng.below(4) as i64);
        let f = ratpoly(&coeffs);
        if f.deg() == deg && !f.coeff(0).numer().eq(&0.into()) && is_irreducible_q(&f).unwrap() {
            return f;
        }
    }
}

#[test]
fn criterion_8_factorization_round_trip() {
    let t = Instant::now();
    let mut rng = SplitMix(20260822);
    let mut bad = Vec::new();
    for trial in 0..200u32 {
        let mut remaining = 4 + rng.below(9) as usize;
        let mut product = RatPoly::one();
        let mut expected: BTreeMap<String, usize> = BTreeMap::new();
        while remaining >= 1 {
            let deg = 1 + rng.below(remaining.min(4) as u64) as usize;
            let f = random_irreducible(&mut rng, deg);
            product = &product * &f;
            *expected.entry(f.monic().to_string()).or_insert(0) += 1;
            remaining -= deg;
        }
        let list = match factor_q(&product) {
            Ok(l) => l,
            Err(e) => {
                bad.push(format!("trial {trial}: {e}"));
                continue;
            }
        };
        let mut got: BTreeMap<String, usize> = BTreeMap::new();
        let mut rebuilt = RatPoly::constant(list.unit.clone());
        for (f, m) in &list.factors {
            *got.entry(f.to_string()).or_insert(0) += m;
            rebuilt = &rebuilt * &f.pow(*m);
        }
        if got != expected {
            bad.push(format!("trial {trial}: multiset {got:?} want {expected:?}"));
        }
        if rebuilt != product {
            bad.push(format!("trial {trial}: product does not rebuild"));
        }
    }
    if t.elapsed() > Duration::from_secs(300) {
        bad.push("round trips over the 5 min budget".into());
    }
    conclude(8, "factorization round-trip", bad);
}
