//! Acceptance criteria 1-9. Every comparison is exact equality over Q.
//!
//! Run with `cargo test -p sylvsum --test acceptance -- --nocapture` to see
//! one PASS/FAIL line per criterion.

use std::process::Command;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use sylvsum::arith::{BiPoly, Rat, UniPoly};
use sylvsum::cli::{bipoly_from_json, bipoly_to_json, unipoly_from_json, unipoly_to_json};
use sylvsum::doublesum::sylvester_double_sum;
use sylvsum::linalg::{r_product, Matrix, RootList};
use sylvsum::subres::{cofactors, dhks_delta_check, sres};
use sylvsum::sylvmatrix::{ud_det, UdContext};
use sylvsum::verify::{verify_random, Suite, VerificationReport};

const SEEDS: u64 = 20;
const MAX_N: usize = 5;

struct Outcome {
    checked: usize,
    failures: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { checked: 0, failures: Vec::new() }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn pass(&self) -> bool {
        self.checked > 0 && self.failures.is_empty()
    }
}

fn report_line(n: usize, title: &str, o: &Outcome) -> bool {
    println!(
        "[{}] criterion {n}: {title} ({} checks, {} failures)",
        if o.pass() { "PASS" } else { "FAIL" },
        o.checked,
        o.failures.len()
    );
    for f in o.failures.iter().take(5) {
        println!("        {f}");
    }
    o.pass()
}

/// Which criterion a named suite check belongs to.
fn criterion_of(name: &str) -> usize {
    let stem = name.split('[').next().unwrap_or(name);
    match stem {
        "main_theorem" | "res_three_way" => 1,
        "scaling_relation" => 2,
        "ud_vanishes" => 3,
        "pq_degrees" | "condition" | "companion_det" | "leading_data" | "pq_polys" => 4,
        "md_closed_form" | "ud_closed_form" | "pivotal_identity" | "block_identity" | "ud_det" => 5,
        "factor1" => 6,
        _ => 0,
    }
}

fn sweep() -> Vec<VerificationReport> {
    let cells: Vec<(usize, usize, u64)> = (1..=MAX_N)
        .flat_map(|n| (1..=n).flat_map(move |m| (0..SEEDS).map(move |s| (m, n, s))))
        .collect();
    cells
        .into_par_iter()
        .map(|(m, n, seed)| verify_random(m, n, seed, Suite::All).expect("instance builds"))
        .collect()
}

fn suite_criteria(reports: &[VerificationReport]) -> Vec<Outcome> {
    let mut out: Vec<Outcome> = (0..=6).map(|_| Outcome::new()).collect();
    for r in reports {
        for c in &r.checks {
            let idx = criterion_of(&c.name);
            out[idx].record(c.pass, || {
                format!("m={} n={} seed={:?} {} ({})", r.m, r.n, r.seed, c.name, c.case)
            });
        }
    }
    // criterion 3 must actually see the zero branch on the required sizes
    for (m, n) in [(1, 4), (2, 5), (1, 5)] {
        let seen = reports
            .iter()
            .filter(|r| (r.m, r.n) == (m, n))
            .any(|r| r.checks.iter().any(|c| c.name.starts_with("ud_vanishes")));
        out[3].record(seen, || format!("no zero-branch d covered for (m, n) = ({m}, {n})"));
    }
    out
}

fn fixtures() -> Outcome {
    let mut o = Outcome::new();
    let roots = |v: &[i64]| RootList::from_ints(v).unwrap();
    let (a, b) = (roots(&[1, 2]), roots(&[3, 4]));

    let s11 = sylvester_double_sum(&a, &b, 1, 1).unwrap();
    o.record(s11.to_string() == "2*x^2 - 10*x + 14", || format!("Sylv^(1,1) = {s11}"));

    let s10 = sylvester_double_sum(&a, &b, 1, 0).unwrap();
    let sres1 = sres(&a.poly(), &b.poly(), 1).unwrap();
    o.record(s10.to_string() == "4*x - 10", || format!("Sylv^(1,0) = {s10}"));
    o.record(s10 == -sres1.clone(), || format!("Sres_1 = {sres1}"));

    let ctx = UdContext::new(roots(&[2]), roots(&[3]), 1).unwrap();
    let u1 = ud_det(&ctx).unwrap();
    let expected = BiPoly::from_t_coeffs(vec![UniPoly::from_ints(&[-2, 1]), UniPoly::from_ints(&[3, -1])]);
    o.record(u1 == expected, || format!("u_1 = {u1}"));

    let (a1, b1) = (roots(&[2]), roots(&[3]));
    let full = sylvester_double_sum(&a1, &b1, 1, 1).unwrap();
    let res = r_product(a1.values(), b1.values());
    o.record(full == (&a1.poly() * &b1.poly()).scale(&res), || format!("Sylv^(1,1) = {full}"));
    o
}

fn random_rat(rng: &mut ChaCha8Rng) -> Rat {
    Rat::new(rng.random_range(-20i64..=20), rng.random_range(1i64..=6)).unwrap()
}

fn random_monic(rng: &mut ChaCha8Rng, degree: usize) -> UniPoly {
    let mut coeffs: Vec<Rat> = (0..degree).map(|_| random_rat(rng)).collect();
    coeffs.push(Rat::one());
    UniPoly::from_coeffs(coeffs)
}

fn random_roots(rng: &mut ChaCha8Rng, len: usize) -> RootList {
    let mut values: Vec<Rat> = Vec::new();
    while values.len() < len {
        let v = random_rat(rng);
        if !values.contains(&v) {
            values.push(v);
        }
    }
    RootList::new(values).unwrap()
}

fn bounded(p: &UniPoly, bound: i64) -> bool {
    p.degree_at_most(bound)
}

fn subresultant_identities() -> Outcome {
    let mut o = Outcome::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..6 {
        for n in 1..=6 {
            for m in 1..=n {
                let f = random_monic(&mut rng, m);
                let g = random_monic(&mut rng, n);
                let top = if m < n { m } else { m - 1 };
                for k in 0..=top {
                    let s = sres(&f, &g, k).unwrap();
                    let cof = cofactors(&f, &g, k).unwrap();
                    let combo = &(&cof.f_cof * &f) + &(&cof.g_cof * &g);
                    o.record(s == combo, || format!("Sres_{k} != F f + G g for m={m} n={n}"));
                    o.record(bounded(&s, k as i64), || format!("deg Sres_{k} > {k}"));
                    o.record(bounded(&cof.f_cof, n as i64 - k as i64 - 1), || {
                        format!("deg F_{k} too large (m={m}, n={n})")
                    });
                    o.record(bounded(&cof.g_cof, m as i64 - k as i64 - 1), || {
                        format!("deg G_{k} too large (m={m}, n={n})")
                    });
                }
                if m < n {
                    o.record(sres(&f, &g, m).unwrap() == f, || format!("Sres_m != f for m={m} n={n}"));
                } else {
                    let cof = cofactors(&f, &g, m - 1).unwrap();
                    o.record(
                        cof.f_cof == UniPoly::from_ints(&[-1]) && cof.g_cof == UniPoly::one(),
                        || format!("F_(m-1), G_(m-1) = {}, {}", cof.f_cof, cof.g_cof),
                    );
                }
                let a = random_roots(&mut rng, m);
                for k in 0..=m {
                    o.record(dhks_delta_check(&a, &g, k).unwrap(), || {
                        format!("delta identity fails at k={k}, m={m}, n={n}")
                    });
                }
            }
        }
    }
    o
}

fn random_bipoly(rng: &mut ChaCha8Rng) -> BiPoly {
    if rng.random_bool(0.3) {
        return BiPoly::zero();
    }
    let t_coeffs = (0..rng.random_range(1..=2))
        .map(|_| {
            let coeffs: Vec<i64> = (0..rng.random_range(1..=2)).map(|_| rng.random_range(-5..=5)).collect();
            UniPoly::from_ints(&coeffs)
        })
        .collect();
    BiPoly::from_t_coeffs(t_coeffs)
}

fn engine_consistency() -> Outcome {
    let mut o = Outcome::new();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mats: Vec<Matrix<BiPoly>> = (0..200)
        .map(|i| {
            let size = 1 + i % 8;
            Matrix::from_fn(size, size, |_, _| random_bipoly(&mut rng))
        })
        .collect();
    let results: Vec<(usize, bool)> = mats
        .par_iter()
        .map(|m| {
            let laplace = m.det_laplace().unwrap();
            let ok = laplace == m.det_bareiss().unwrap() && laplace == m.det_interpolated().unwrap();
            (m.rows(), ok)
        })
        .collect();
    for (size, ok) in results {
        o.record(ok, || format!("determinant engines disagree on a {size}x{size} matrix"));
    }

    for _ in 0..200 {
        let p = UniPoly::from_coeffs((0..rng.random_range(0..6)).map(|_| random_rat(&mut rng)).collect());
        let back = unipoly_from_json(&unipoly_to_json(&p)).unwrap();
        o.record(back == p, || format!("UniPoly JSON round trip: {p}"));
        let b = BiPoly::from_t_coeffs(vec![p.clone(), UniPoly::zero(), random_monic(&mut rng, 2)]);
        let back = bipoly_from_json(&bipoly_to_json(&b)).unwrap();
        o.record(back == b, || format!("BiPoly JSON round trip: {b}"));
    }

    let run = || {
        Command::new(env!("CARGO_BIN_EXE_sylvsum"))
            .args(["verify", "--m", "2", "--n", "3", "--trials", "5", "--seed", "7"])
            .output()
            .expect("binary runs")
    };
    let (first, second) = (run(), run());
    o.record(first.status.code() == Some(0), || format!("verify exited {:?}", first.status.code()));
    o.record(second.status.code() == Some(0), || format!("verify exited {:?}", second.status.code()));
    o.record(first.stdout == second.stdout, || "verify output differs between runs".to_string());
    o
}

#[test]
fn acceptance() {
    let start = Instant::now();
    let reports = sweep();
    let sweep_time = start.elapsed();
    let suites = suite_criteria(&reports);
    let unassigned = &suites[0];
    assert!(unassigned.checked == 0, "unclassified checks: {:?}", unassigned.failures);

    let titles = [
        "",
        "double sums equal their closed forms (m <= n <= 5, 20 seeds, all p, q)",
        "u_{d,p} equals the scaled double sum, or 0, for all d, p",
        "u_d vanishes identically for m < d < n - 1",
        "P, Q degrees, condition, leading data, companion determinant",
        "det M_d and u_d closed forms; pivotal identity",
        "U_d factorization reproduces U_d entrywise",
    ];
    let mut all = true;
    for n in 1..=6 {
        all &= report_line(n, titles[n], &suites[n]);
    }
    all &= report_line(7, "worked fixtures", &fixtures());
    all &= report_line(8, "subresultant identities on random monic pairs", &subresultant_identities());
    all &= report_line(9, "engine self-consistency, JSON, reproducible verify", &engine_consistency());
    println!(
        "sweep of {} instances took {:.1?}; total {:.1?}",
        reports.len(),
        sweep_time,
        start.elapsed()
    );
    assert!(all, "some acceptance criteria failed");
}
