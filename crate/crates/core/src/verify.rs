//! Closed-form evaluation of every double sum and the randomized suites that
//! check each identity by exact equality.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{binomial, sign_pow, BiPoly, Rat, UniPoly};
use crate::doublesum::sylvester_double_sum;
use crate::error::{Error, Result};
use crate::linalg::{vandermonde, RootList};
use crate::subres::{cofactors, resultant, sres};
use crate::sylvmatrix::{
    block_identity_check, companion_det_check, condition_check, factor1_check,
    leading_data_check, md_closed_form_check, pivotal_identity_check, pq_degree_check, pq_polys,
    scaled_double_sum, ud_closed_form, ud_coeff_of, ud_det, Branch, UdContext,
};

/// Branch and derived indices for one `(m, n, p, q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MainCase {
    pub branch: Branch,
    pub m: usize,
    pub n: usize,
    pub p: usize,
    pub q: usize,
    /// `p + q`
    pub d: usize,
    /// `m + n - d - 1`; equals -1 only on the `d = m + n` branch.
    pub k: i64,
    /// `q(m-p) + n(d-m) + d + n - q - 1`
    pub sigma: i64,
}

pub fn classify(m: usize, n: usize, p: usize, q: usize) -> Result<MainCase> {
    if m == 0 || m > n {
        return Err(Error::Domain(format!("need 1 <= m <= n, got m = {m}, n = {n}")));
    }
    if p > m || q > n {
        return Err(Error::Domain(format!(
            "(p, q) = ({p}, {q}) out of range for m = {m}, n = {n}"
        )));
    }
    let d = p + q;
    let (mi, ni, pi, qi, di) = (m as i64, n as i64, p as i64, q as i64, d as i64);
    Ok(MainCase {
        branch: Branch::of(m, n, d),
        m,
        n,
        p,
        q,
        d,
        k: mi + ni - di - 1,
        sigma: qi * (mi - pi) + ni * (di - mi) + di + ni - qi - 1,
    })
}

fn binom_rat(n: i64, k: i64) -> Result<Rat> {
    Ok(Rat::from(binomial(n, k)?))
}

/// The closed form of `Sylv^{p,q}(A, B; x)` in terms of `f`, `g`, their
/// subresultants and cofactors.
pub fn main_theorem_rhs(a: &RootList, b: &RootList, p: usize, q: usize) -> Result<UniPoly> {
    let case = classify(a.len(), b.len(), p, q)?;
    let (f, g) = (a.poly(), b.poly());
    let (m, n, pi, qi, d) = (case.m as i64, case.n as i64, p as i64, q as i64, case.d as i64);
    Ok(match case.branch {
        Branch::SresBranch => {
            let c = &sign_pow(pi * (m - d)) * &binom_rat(d, pi)?;
            sres(&f, &g, case.d)?.scale(&c)
        }
        Branch::ZeroBranch => UniPoly::zero(),
        Branch::FBranch => {
            let c = &sign_pow((m + qi) * (pi + 1)) * &binom_rat(m, pi)?;
            f.scale(&c)
        }
        Branch::CofactorBranch => {
            let k = case.k;
            let cof = cofactors(&f, &g, k as usize)?;
            let left = (&cof.f_cof * &f).scale(&binom_rat(k, m - pi)?);
            let right = (&cof.g_cof * &g).scale(&binom_rat(k, n - qi)?);
            (&left - &right).scale(&sign_pow(case.sigma))
        }
        Branch::ResBranch => (&f * &g).scale(&resultant(&f, &g)?),
    })
}

/// Expected and actual values of a failed check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub case: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl CheckRecord {
    fn compare<T: PartialEq + ToString>(name: String, case: Branch, expected: &T, actual: &T) -> Self {
        let pass = expected == actual;
        CheckRecord {
            name,
            case: case.name().to_string(),
            pass,
            witness: (!pass).then(|| Witness {
                expected: expected.to_string(),
                actual: actual.to_string(),
            }),
        }
    }

    fn flag(name: String, case: Branch, pass: bool) -> Self {
        CheckRecord {
            name,
            case: case.name().to_string(),
            pass,
            witness: (!pass).then(|| Witness {
                expected: "true".to_string(),
                actual: "false".to_string(),
            }),
        }
    }

    fn from_result(name: String, case: Branch, outcome: Result<CheckRecord>) -> Self {
        outcome.unwrap_or_else(|err| CheckRecord {
            name,
            case: case.name().to_string(),
            pass: false,
            witness: Some(Witness {
                expected: "a computed value".to_string(),
                actual: format!("error: {err}"),
            }),
        })
    }
}

/// Outcome of one suite on one instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub m: usize,
    pub n: usize,
    pub seed: Option<u64>,
    pub a: RootList,
    pub b: RootList,
    pub checks: Vec<CheckRecord>,
}

impl VerificationReport {
    fn new(a: &RootList, b: &RootList, checks: Vec<CheckRecord>) -> Self {
        VerificationReport {
            m: a.len(),
            n: b.len(),
            seed: None,
            a: a.clone(),
            b: b.clone(),
            checks,
        }
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| !c.pass)
    }

    /// Appends the checks of `other`, which must describe the same instance.
    pub fn merge(mut self, other: VerificationReport) -> Self {
        self.checks.extend(other.checks);
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }
}

fn require_ordered(a: &RootList, b: &RootList) -> Result<()> {
    if a.is_empty() || a.len() > b.len() {
        return Err(Error::Domain(format!(
            "need 1 <= |A| <= |B|, got |A| = {}, |B| = {}",
            a.len(),
            b.len()
        )));
    }
    Ok(())
}

/// Compares the double sum with its closed form on every `(p, q)`.
pub fn verify_main_theorem(a: &RootList, b: &RootList) -> Result<VerificationReport> {
    require_ordered(a, b)?;
    let (m, n) = (a.len(), b.len());
    let cells: Vec<(usize, usize)> = (0..=m).flat_map(|p| (0..=n).map(move |q| (p, q))).collect();
    let checks = cells
        .par_iter()
        .map(|&(p, q)| {
            let name = format!("main_theorem[p={p},q={q}]");
            let branch = Branch::of(m, n, p + q);
            let outcome = (|| {
                let lhs = sylvester_double_sum(a, b, p, q)?;
                let rhs = main_theorem_rhs(a, b, p, q)?;
                Ok(CheckRecord::compare(name.clone(), branch, &rhs, &lhs))
            })();
            CheckRecord::from_result(name, branch, outcome)
        })
        .collect();
    Ok(VerificationReport::new(a, b, checks))
}

fn matrix_checks_for_d(ctx: &UdContext) -> Vec<CheckRecord> {
    let d = ctx.d();
    let branch = ctx.branch();
    let mut out = Vec::new();
    let name = |what: &str| format!("{what}[d={d}]");
    let mut record = |label: String, outcome: Result<CheckRecord>| {
        out.push(CheckRecord::from_result(label, branch, outcome));
    };

    record(name("factor1"), factor1_check(ctx).map(|ok| CheckRecord::flag(name("factor1"), branch, ok)));

    let ud = match ud_det(ctx) {
        Ok(ud) => ud,
        Err(err) => {
            record(name("ud_det"), Err(err));
            return out;
        }
    };
    record(
        name("ud_closed_form"),
        ud_closed_form(ctx).map(|closed| CheckRecord::compare(name("ud_closed_form"), branch, &closed, &ud)),
    );
    if branch == Branch::ZeroBranch {
        record(
            name("ud_vanishes"),
            Ok(CheckRecord::compare(name("ud_vanishes"), branch, &BiPoly::zero(), &ud)),
        );
    }
    for p in 0..=ctx.m() {
        let label = format!("scaling_relation[d={d},p={p}]");
        let outcome = (|| {
            let actual = ud_coeff_of(&ud, ctx, p)?;
            let expected = scaled_double_sum(ctx, p)?;
            Ok(CheckRecord::compare(label.clone(), branch, &expected, &actual))
        })();
        record(label, outcome);
    }
    if branch == Branch::ZeroBranch {
        return out;
    }

    let pq = match pq_polys(ctx) {
        Ok(pq) => pq,
        Err(err) => {
            record(name("pq_polys"), Err(err));
            return out;
        }
    };
    record(name("pq_degrees"), Ok(CheckRecord::flag(name("pq_degrees"), branch, pq_degree_check(ctx, &pq))));
    record(name("condition"), Ok(CheckRecord::flag(name("condition"), branch, condition_check(ctx, &pq))));
    record(
        name("companion_det"),
        companion_det_check(&pq, ctx).map(|ok| CheckRecord::flag(name("companion_det"), branch, ok)),
    );
    record(
        name("leading_data"),
        leading_data_check(ctx, &pq).map(|ok| CheckRecord::flag(name("leading_data"), branch, ok)),
    );
    record(
        name("md_closed_form"),
        md_closed_form_check(ctx).map(|ok| CheckRecord::flag(name("md_closed_form"), branch, ok)),
    );
    record(
        name("block_identity"),
        block_identity_check(ctx, &pq).map(|ok| CheckRecord::flag(name("block_identity"), branch, ok)),
    );
    record(
        name("pivotal_identity"),
        pivotal_identity_check(ctx, &pq, &ud).map(|ok| CheckRecord::flag(name("pivotal_identity"), branch, ok)),
    );
    if branch == Branch::ResBranch {
        // Sylv^{m,n} three ways: double sum, Res·f·g, u_{m+n} / (V(A) V(B))
        let label = "res_three_way".to_string();
        let outcome = (|| {
            let (a, b) = (ctx.a(), ctx.b());
            let sum = sylvester_double_sum(a, b, ctx.m(), ctx.n())?;
            let closed = (ctx.f() * ctx.g()).scale(&resultant(ctx.f(), ctx.g())?);
            let vv = &vandermonde(a) * &vandermonde(b);
            let from_det = ud.coeff_of_t(0).scale(&vv.recip()?);
            let agree = sum == closed && closed == from_det;
            Ok(CheckRecord::flag(label.clone(), branch, agree))
        })();
        record(label, outcome);
    }
    out
}

/// Runs every matrix-side identity for all `0 <= d <= m + n`.
pub fn verify_matrix_suite(a: &RootList, b: &RootList) -> Result<VerificationReport> {
    require_ordered(a, b)?;
    let ctx = UdContext::new(a.clone(), b.clone(), 0)?;
    let checks: Vec<Vec<CheckRecord>> = (0..=a.len() + b.len())
        .into_par_iter()
        .map(|d| match ctx.with_d(d) {
            Ok(c) => matrix_checks_for_d(&c),
            Err(err) => vec![CheckRecord::from_result(
                format!("context[d={d}]"),
                Branch::ZeroBranch,
                Err(err),
            )],
        })
        .collect();
    Ok(VerificationReport::new(a, b, checks.into_iter().flatten().collect()))
}

/// Deterministic root lists of sizes `m` and `n`: numerators uniform in
/// `[-99, 99]`, denominators uniform in `[1, 20]`, all `m + n` values distinct.
pub fn random_instance(m: usize, n: usize, seed: u64) -> Result<(RootList, RootList)> {
    if m == 0 || m > n {
        return Err(Error::Domain(format!("need 1 <= m <= n, got m = {m}, n = {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut values: Vec<Rat> = Vec::with_capacity(m + n);
    while values.len() < m + n {
        let numer: i64 = rng.random_range(-99..=99);
        let denom: i64 = rng.random_range(1..=20);
        let v = Rat::new(numer, denom)?;
        if !values.contains(&v) {
            values.push(v);
        }
    }
    let b = values.split_off(m);
    Ok((RootList::new(values)?, RootList::new(b)?))
}

/// Which suites to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Main,
    Matrix,
    All,
}

/// Runs the selected suites on `random_instance(m, n, seed)`.
pub fn verify_random(m: usize, n: usize, seed: u64, suite: Suite) -> Result<VerificationReport> {
    let (a, b) = random_instance(m, n, seed)?;
    let report = match suite {
        Suite::Main => verify_main_theorem(&a, &b)?,
        Suite::Matrix => verify_matrix_suite(&a, &b)?,
        Suite::All => verify_main_theorem(&a, &b)?.merge(verify_matrix_suite(&a, &b)?),
    };
    Ok(report.with_seed(seed))
}
