//! The `(m+n)`-square matrix `U_d(x, T)` whose determinant collects every
//! double sum `Sylv^{p, d-p}` as a coefficient in `T`, its two
//! factorizations, and the closed forms of `det U_d`.
//!
//! Layout, with `d' = m + n - d`:
//!
//! ```text
//!            n columns       m columns
//!   d' rows  <1, B>_d'       <T, A>_d'
//!   d  rows  <x - t, B>_d    <x - t, A>_d
//! ```

use crate::arith::{sign_pow, BiPoly, Rat, UniPoly};
use crate::doublesum::sylvester_double_sum;
use crate::error::{Error, Result};
use crate::linalg::{block, vandermonde, Kernel, Matrix, PolyMatrix, RootList};
use crate::subres::{cofactors, resultant, scalar_subresultant, sres};

/// Which closed form applies to a given `d = p + q` (with `1 <= m <= n`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Branch {
    /// `0 <= d < m`, or `d = m < n`
    SresBranch,
    /// `m < d < n - 1`
    ZeroBranch,
    /// `m < d = n - 1`
    FBranch,
    /// `n <= d < m + n` (includes `d = m = n`)
    CofactorBranch,
    /// `d = m + n`
    ResBranch,
}

impl Branch {
    pub fn of(m: usize, n: usize, d: usize) -> Branch {
        debug_assert!(1 <= m && m <= n && d <= m + n);
        if d < m || (d == m && m < n) {
            Branch::SresBranch
        } else if d == m + n {
            Branch::ResBranch
        } else if d >= n {
            Branch::CofactorBranch
        } else if d + 1 == n {
            Branch::FBranch
        } else {
            Branch::ZeroBranch
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Branch::SresBranch => "SresBranch",
            Branch::ZeroBranch => "ZeroBranch",
            Branch::FBranch => "FBranch",
            Branch::CofactorBranch => "CofactorBranch",
            Branch::ResBranch => "ResBranch",
        }
    }
}

/// Root lists `A` (size `m`), `B` (size `n`) with `1 <= m <= n`, and an index
/// `0 <= d <= m + n`.
#[derive(Clone, Debug)]
pub struct UdContext {
    a: RootList,
    b: RootList,
    d: usize,
    f: UniPoly,
    g: UniPoly,
}

impl UdContext {
    pub fn new(a: RootList, b: RootList, d: usize) -> Result<Self> {
        let (m, n) = (a.len(), b.len());
        if m == 0 || m > n {
            return Err(Error::Domain(format!(
                "need 1 <= |A| <= |B|, got |A| = {m}, |B| = {n}"
            )));
        }
        if d > m + n {
            return Err(Error::Domain(format!("d = {d} exceeds m + n = {}", m + n)));
        }
        let f = a.poly();
        let g = b.poly();
        Ok(UdContext { a, b, d, f, g })
    }

    /// Same lists, different `d`.
    pub fn with_d(&self, d: usize) -> Result<Self> {
        if d > self.m() + self.n() {
            return Err(Error::Domain(format!("d = {d} exceeds m + n = {}", self.m() + self.n())));
        }
        Ok(UdContext { d, ..self.clone() })
    }

    pub fn a(&self) -> &RootList {
        &self.a
    }
    pub fn b(&self) -> &RootList {
        &self.b
    }
    pub fn m(&self) -> usize {
        self.a.len()
    }
    pub fn n(&self) -> usize {
        self.b.len()
    }
    pub fn d(&self) -> usize {
        self.d
    }
    pub fn d_prime(&self) -> usize {
        self.m() + self.n() - self.d
    }
    pub fn f(&self) -> &UniPoly {
        &self.f
    }
    pub fn g(&self) -> &UniPoly {
        &self.g
    }
    pub fn branch(&self) -> Branch {
        Branch::of(self.m(), self.n(), self.d)
    }

    fn vv(&self) -> Rat {
        &vandermonde(&self.a) * &vandermonde(&self.b)
    }

    fn not_applicable(&self) -> Error {
        Error::NotApplicable {
            m: self.m(),
            n: self.n(),
            d: self.d,
        }
    }
}

fn t_minus_one() -> BiPoly {
    BiPoly::from_t_scalars(vec![-Rat::one(), Rat::one()])
}

fn t_power(j: usize) -> BiPoly {
    BiPoly::from_uni_t_power(UniPoly::one(), j)
}

fn stack2x2(tl: &PolyMatrix, tr: &PolyMatrix, bl: &PolyMatrix, br: &PolyMatrix) -> Result<PolyMatrix> {
    tl.hstack(tr)?.vstack(&bl.hstack(br)?)
}

/// `U_d(x, T)`.
pub fn build_ud(ctx: &UdContext) -> Result<PolyMatrix> {
    let (d, dp) = (ctx.d, ctx.d_prime());
    stack2x2(
        &block(Kernel::One, &ctx.b, dp),
        &block(Kernel::T, &ctx.a, dp),
        &block(Kernel::XMinusT, &ctx.b, d),
        &block(Kernel::XMinusT, &ctx.a, d),
    )
}

/// `u_d(x, T) = det U_d(x, T)`.
pub fn ud_det(ctx: &UdContext) -> Result<BiPoly> {
    build_ud(ctx)?.det_interpolated()
}

/// `u_{d,p}(x)`, the coefficient of `T^(m-p)` in `u_d`.
pub fn ud_coeff(ctx: &UdContext, p: usize) -> Result<UniPoly> {
    ud_coeff_of(&ud_det(ctx)?, ctx, p)
}

/// Reads `u_{d,p}` off an already computed `u_d`.
pub fn ud_coeff_of(ud: &BiPoly, ctx: &UdContext, p: usize) -> Result<UniPoly> {
    if p > ctx.m() {
        return Err(Error::Domain(format!("p = {p} exceeds m = {}", ctx.m())));
    }
    Ok(ud.coeff_of_t(ctx.m() - p))
}

/// The value `u_{d,p}` must take: `(-1)^(q(m-p)) V(A) V(B) Sylv^{p,q}` when
/// `q = d - p` lies in `[0, n]`, zero otherwise.
pub fn scaled_double_sum(ctx: &UdContext, p: usize) -> Result<UniPoly> {
    let (m, n) = (ctx.m() as i64, ctx.n() as i64);
    let q = ctx.d as i64 - p as i64;
    if p > ctx.m() {
        return Err(Error::Domain(format!("p = {p} exceeds m = {m}")));
    }
    if q < 0 || q > n {
        return Ok(UniPoly::zero());
    }
    let sylv = sylvester_double_sum(&ctx.a, &ctx.b, p, q as usize)?;
    let factor = &sign_pow(q * (m - p as i64)) * &ctx.vv();
    Ok(sylv.scale(&factor))
}

pub fn scaling_relation_check(ctx: &UdContext, p: usize) -> Result<bool> {
    Ok(ud_coeff(ctx, p)? == scaled_double_sum(ctx, p)?)
}

/// The `(d' + d) x (d' + d + 1)` shift block `[I_d' 0 ; 0 J]`, where `J` is
/// `d x (d+1)` with `x` on the diagonal and `-1` just right of it.
fn shift_block(d: usize, dp: usize) -> PolyMatrix {
    let x = BiPoly::from_uni(UniPoly::x());
    let minus_one = BiPoly::constant(-Rat::one());
    Matrix::from_fn(dp + d, dp + d + 1, |i, j| {
        if i < dp {
            if i == j { BiPoly::one() } else { BiPoly::zero() }
        } else if j == i {
            x.clone()
        } else if j == i + 1 {
            minus_one.clone()
        } else {
            BiPoly::zero()
        }
    })
}

/// The `(m+n+1) x (m+n)` moment factor
/// `[<1,B>_d' <T,A>_d' ; <1,B>_(d+1) <1,A>_(d+1)]`.
fn moment_factor(ctx: &UdContext) -> Result<PolyMatrix> {
    let (d, dp) = (ctx.d, ctx.d_prime());
    stack2x2(
        &block(Kernel::One, &ctx.b, dp),
        &block(Kernel::T, &ctx.a, dp),
        &block(Kernel::One, &ctx.b, d + 1),
        &block(Kernel::One, &ctx.a, d + 1),
    )
}

/// The rectangular factorization `U_d = L R`.
pub fn factor1(ctx: &UdContext) -> Result<(PolyMatrix, PolyMatrix)> {
    Ok((shift_block(ctx.d, ctx.d_prime()), moment_factor(ctx)?))
}

pub fn factor1_check(ctx: &UdContext) -> Result<bool> {
    let (left, right) = factor1(ctx)?;
    Ok(left.mul(&right)? == build_ud(ctx)?)
}

/// Polynomials `P`, `Q` with `Q(β) + P(β) = 0` on `B` and `T Q(α) + P(α) = 0`
/// on `A`.
///
/// For `d <= m` the natural `Q` has a `1/T` term. `q` holds `T^s Q` with
/// `s = t_denominator`, so that every stored entry is a polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PQPair {
    pub p: BiPoly,
    pub q: BiPoly,
    pub t_denominator: u32,
    /// `deg_x P`
    pub k: usize,
    /// Leading `x`-coefficient of `P`, a polynomial in `T`.
    pub p_lead: BiPoly,
}

impl PQPair {
    fn new(p: BiPoly, q: BiPoly, t_denominator: u32) -> Result<Self> {
        let k = p
            .deg_x()
            .ok_or_else(|| Error::CorruptedInput("P vanished".to_string()))?;
        let p_lead = p.leading_x_coeff();
        Ok(PQPair { p, q, t_denominator, k, p_lead })
    }

    /// `T^s P`, the polynomial paired with the stored `q`.
    pub fn p_cleared(&self) -> BiPoly {
        &t_power(self.t_denominator as usize) * &self.p
    }
}

pub fn pq_polys(ctx: &UdContext) -> Result<PQPair> {
    let (f, g) = (&ctx.f, &ctx.g);
    let (fb, gb) = (BiPoly::from_uni(f.clone()), BiPoly::from_uni(g.clone()));
    match ctx.branch() {
        Branch::SresBranch => {
            let cof = cofactors(f, g, ctx.d)?;
            let p = BiPoly::from_uni(sres(f, g, ctx.d)?);
            // T Q = -T F_d f - G_d g
            let ff = BiPoly::from_uni(&cof.f_cof * f);
            let gg = BiPoly::from_uni(&cof.g_cof * g);
            let q = -(&(&BiPoly::t() * &ff) + &gg);
            PQPair::new(p, q, 1)
        }
        Branch::ZeroBranch => Err(ctx.not_applicable()),
        Branch::FBranch => PQPair::new(fb.clone(), -fb, 0),
        Branch::CofactorBranch => {
            let k = ctx.d_prime() - 1;
            let cof = cofactors(f, g, k)?;
            let ff = BiPoly::from_uni(&cof.f_cof * f);
            let gg = BiPoly::from_uni(&cof.g_cof * g);
            let p = &ff + &(&BiPoly::t() * &gg);
            let q = -(&ff + &gg);
            PQPair::new(p, q, 0)
        }
        Branch::ResBranch => PQPair::new(&fb * &gb, BiPoly::zero(), 0),
    }
}

/// `deg_x P <= d` and `deg_x Q <= d' - 1` (with `Q = 0` when `d' = 0`).
pub fn pq_degree_check(ctx: &UdContext, pq: &PQPair) -> bool {
    let q_ok = match pq.q.deg_x() {
        None => true,
        Some(dq) => dq < ctx.d_prime(),
    };
    pq.k <= ctx.d && q_ok
}

/// Checks the `m + n` vanishing conditions, multiplied through by `T^s`.
pub fn condition_check(ctx: &UdContext, pq: &PQPair) -> bool {
    let p = pq.p_cleared();
    let on_b = ctx
        .b
        .iter()
        .all(|beta| (&pq.q.eval_x(beta) + &p.eval_x(beta)).is_zero());
    let on_a = ctx
        .a
        .iter()
        .all(|alpha| (&(&BiPoly::t() * &pq.q.eval_x(alpha)) + &p.eval_x(alpha)).is_zero());
    on_b && on_a
}

/// The square `(m+n+1)` matrix `[I 0 ; 0 J ; Q P]` with the bottom row
/// scaled by `T^s`.
pub fn companion_matrix(ctx: &UdContext, pq: &PQPair) -> PolyMatrix {
    let (d, dp) = (ctx.d, ctx.d_prime());
    let p = pq.p_cleared();
    let shift = shift_block(d, dp);
    let size = d + dp + 1;
    Matrix::from_fn(size, size, |i, j| {
        if i + 1 < size {
            shift.get(i, j).clone()
        } else if j < dp {
            pq.q.coeff_of_x(j)
        } else {
            p.coeff_of_x(j - dp)
        }
    })
}

/// `det [I 0 ; 0 J ; Q P] = P(x)`, compared after the `T^s` scaling.
pub fn companion_det_check(pq: &PQPair, ctx: &UdContext) -> Result<bool> {
    if !pq_degree_check(ctx, pq) {
        return Ok(false);
    }
    Ok(companion_matrix(ctx, pq).det_interpolated()? == pq.p_cleared())
}

/// The bordered matrix `M_d`: the moment factor with an extra column that is
/// zero on the top `d'` rows and the unit vector `e_k` on the bottom `d + 1`.
pub fn md_matrix(ctx: &UdContext, k: usize) -> Result<PolyMatrix> {
    if k > ctx.d {
        return Err(Error::Domain(format!("border index {k} exceeds d = {}", ctx.d)));
    }
    let moments = moment_factor(ctx)?;
    let dp = ctx.d_prime();
    let border = Matrix::from_fn(moments.rows(), 1, |i, _| {
        if i == dp + k { BiPoly::one() } else { BiPoly::zero() }
    });
    moments.hstack(&border)
}

/// Border position used when `M_d` is taken on its own: `m` when
/// `m < d = n - 1`, otherwise `d`.
pub fn border_index(ctx: &UdContext) -> usize {
    match ctx.branch() {
        Branch::FBranch => ctx.m(),
        _ => ctx.d,
    }
}

/// Closed form of `det M_d` for every `d` outside `m < d < n - 1`.
pub fn md_closed_form(ctx: &UdContext) -> Result<BiPoly> {
    let (m, n, d, dp) = (ctx.m(), ctx.n(), ctx.d, ctx.d_prime());
    let vv = ctx.vv();
    let value = match ctx.branch() {
        Branch::SresBranch => {
            let delta = scalar_subresultant(&ctx.f, &ctx.g, d)?;
            let c = &(&sign_pow((d * m) as i64) * &vv) * &delta;
            (&t_power(m - d) * &t_minus_one().pow(d as u32)).scale(&c)
        }
        Branch::ZeroBranch => return Err(ctx.not_applicable()),
        Branch::FBranch => {
            let e = m as i64 * (d as i64 - 1) + d as i64;
            t_minus_one().pow(m as u32).scale(&(&sign_pow(e) * &vv))
        }
        Branch::CofactorBranch => {
            let delta = scalar_subresultant(&ctx.f, &ctx.g, dp)?;
            let c = &(&sign_pow((dp * n) as i64) * &vv) * &delta;
            t_minus_one().pow(dp as u32).scale(&c)
        }
        Branch::ResBranch => BiPoly::constant(&vv * &resultant(&ctx.f, &ctx.g)?),
    };
    Ok(value)
}

/// `det M_d`, computed directly with border index [`border_index`].
pub fn md_det(ctx: &UdContext) -> Result<BiPoly> {
    md_matrix(ctx, border_index(ctx))?.det_interpolated()
}

/// `true` iff [`md_closed_form`] agrees with the direct determinant.
pub fn md_closed_form_check(ctx: &UdContext) -> Result<bool> {
    Ok(md_closed_form(ctx)? == md_det(ctx)?)
}

/// The expected `(deg_x P, P_k)` for each branch.
pub fn expected_leading_data(ctx: &UdContext) -> Result<(usize, BiPoly)> {
    let (m, n, d) = (ctx.m(), ctx.n(), ctx.d);
    Ok(match ctx.branch() {
        Branch::SresBranch => (d, BiPoly::constant(scalar_subresultant(&ctx.f, &ctx.g, d)?)),
        Branch::ZeroBranch => return Err(ctx.not_applicable()),
        Branch::FBranch => (m, BiPoly::one()),
        Branch::CofactorBranch => {
            let delta = scalar_subresultant(&ctx.f, &ctx.g, ctx.d_prime())?;
            let c = &sign_pow(d as i64 - n as i64) * &delta;
            (d, t_minus_one().scale(&c))
        }
        Branch::ResBranch => (d, BiPoly::one()),
    })
}

pub fn leading_data_check(ctx: &UdContext, pq: &PQPair) -> Result<bool> {
    let (k, lead) = expected_leading_data(ctx)?;
    Ok(pq.k == k && pq.p_lead == lead)
}

/// Checks the square factorization `[I 0; 0 J; Q P] · M_d = [U_d * ; 0 P_k]`
/// on every block whose value is determined (the `*` column is skipped).
/// The bottom row carries the `T^s` scaling of the stored `Q`.
pub fn block_identity_check(ctx: &UdContext, pq: &PQPair) -> Result<bool> {
    let size = ctx.m() + ctx.n();
    let product = companion_matrix(ctx, pq).mul(&md_matrix(ctx, pq.k)?)?;
    let ud = build_ud(ctx)?;
    for i in 0..size {
        for j in 0..size {
            if product.get(i, j) != ud.get(i, j) {
                return Ok(false);
            }
        }
    }
    let bottom_zero = (0..size).all(|j| product.get(size, j).is_zero());
    let corner = &t_power(pq.t_denominator as usize) * &pq.p_lead;
    Ok(bottom_zero && product.get(size, size) == &corner)
}

/// `u_d · P_k = P · det M_d`, with `M_d` bordered at `e_k`, `k = deg_x P`.
pub fn pivotal_identity_check(ctx: &UdContext, pq: &PQPair, ud: &BiPoly) -> Result<bool> {
    let md = md_matrix(ctx, pq.k)?.det_interpolated()?;
    Ok(ud * &pq.p_lead == &pq.p * &md)
}

/// The closed form of `u_d(x, T)` for every `0 <= d <= m + n`, with
/// `σ = (d' - 1) n + d`.
pub fn ud_closed_form(ctx: &UdContext) -> Result<BiPoly> {
    let (m, n, d, dp) = (ctx.m(), ctx.n(), ctx.d, ctx.d_prime());
    let vv = ctx.vv();
    let sigma = (dp as i64 - 1) * n as i64 + d as i64;
    let value = match ctx.branch() {
        Branch::SresBranch => {
            let s = BiPoly::from_uni(sres(&ctx.f, &ctx.g, d)?);
            let c = &sign_pow((d * m) as i64) * &vv;
            (&(&s * &t_power(m - d)) * &t_minus_one().pow(d as u32)).scale(&c)
        }
        Branch::ZeroBranch => BiPoly::zero(),
        Branch::FBranch => {
            let c = &sign_pow(sigma) * &vv;
            (&BiPoly::from_uni(ctx.f.clone()) * &t_minus_one().pow(m as u32)).scale(&c)
        }
        Branch::CofactorBranch => {
            let cof = cofactors(&ctx.f, &ctx.g, dp - 1)?;
            let ff = BiPoly::from_uni(&cof.f_cof * &ctx.f);
            let gg = BiPoly::from_uni(&cof.g_cof * &ctx.g);
            let inner = &ff + &(&BiPoly::t() * &gg);
            let c = &sign_pow(sigma) * &vv;
            (&inner * &t_minus_one().pow((dp - 1) as u32)).scale(&c)
        }
        Branch::ResBranch => {
            let c = &vv * &resultant(&ctx.f, &ctx.g)?;
            BiPoly::from_uni(&ctx.f * &ctx.g).scale(&c)
        }
    };
    Ok(value)
}
