// The matrix U_d(x, T) for each d: its determinant, branch, and how its
// T-coefficients relate to the double sums.

use sylvsum::linalg::RootList;
use sylvsum::sylvmatrix::{
    build_ud, md_closed_form, md_det, pq_polys, ud_closed_form, ud_coeff_of, ud_det,
    scaled_double_sum, Branch, UdContext,
};

fn main() -> sylvsum::Result<()> {
    let a = RootList::from_ints(&[1, -2])?;
    let b = RootList::from_ints(&[3, 5, -7])?;
    let base = UdContext::new(a, b, 0)?;
    println!("U_2(x, T) =\n{:?}\n", build_ud(&base.with_d(2)?)?);

    for d in 0..=base.m() + base.n() {
        let ctx = base.with_d(d)?;
        let ud = ud_det(&ctx)?;
        println!("d = {d}  [{}]", ctx.branch().name());
        println!("  u_d = {ud}");
        assert_eq!(ud, ud_closed_form(&ctx)?);
        for p in 0..=ctx.m() {
            assert_eq!(ud_coeff_of(&ud, &ctx, p)?, scaled_double_sum(&ctx, p)?);
        }
        if ctx.branch() != Branch::ZeroBranch {
            let pq = pq_polys(&ctx)?;
            println!("  P = {}", pq.p);
            match pq.t_denominator {
                0 => println!("  Q = {}", pq.q),
                s => println!("  T^{s} Q = {}", pq.q),
            }
            assert_eq!(md_det(&ctx)?, md_closed_form(&ctx)?);
        }
    }
    Ok(())
}
