// Subresultants, their cofactors, and the resultant of two monic polynomials.

use sylvsum::arith::UniPoly;
use sylvsum::subres::{cofactors, resultant, scalar_subresultant, sres, sres_matrix};

fn main() -> sylvsum::Result<()> {
    // f = (x - 1)(x - 2)(x - 3), g = x^4 - 2x^2 + 5
    let f = UniPoly::from_ints(&[-6, 11, -6, 1]);
    let g = UniPoly::from_ints(&[5, 0, -2, 0, 1]);
    println!("f = {f}\ng = {g}\n");

    println!("subresultant matrix for k = 2:\n{:?}\n", sres_matrix(&f, &g, 2)?);

    for k in 0..=3 {
        let s = sres(&f, &g, k)?;
        let cof = cofactors(&f, &g, k)?;
        println!("Sres_{k} = {s}");
        println!("  F_{k} = {}, G_{k} = {}", cof.f_cof, cof.g_cof);
        println!("  Delta_{k} = {}", scalar_subresultant(&f, &g, k)?);
        assert_eq!(&(&cof.f_cof * &f) + &(&cof.g_cof * &g), s);
    }
    println!("\nRes(f, g) = {}", resultant(&f, &g)?);
    Ok(())
}
