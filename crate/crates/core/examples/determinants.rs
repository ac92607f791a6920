// The three determinant engines on a polynomial matrix, and the Vandermonde
// product formula.

use std::time::Instant;

use sylvsum::linalg::{block, vandermonde, Kernel, RootList};

fn main() -> sylvsum::Result<()> {
    let a = RootList::from_ints(&[1, -1, 2])?;
    let b = RootList::from_ints(&[3, -2, 0])?;
    let gamma = a.concat(&b)?;
    let top = block(Kernel::T, &a, 3).hstack(&block(Kernel::One, &b, 3))?;
    let bottom = block(Kernel::XMinusT, &a, 3).hstack(&block(Kernel::XMinusT, &b, 3))?;
    let m = top.vstack(&bottom)?;

    let t = Instant::now();
    let laplace = m.det_laplace()?;
    println!("laplace       {:>10?}", t.elapsed());
    let t = Instant::now();
    let bareiss = m.det_bareiss()?;
    println!("bareiss       {:>10?}", t.elapsed());
    let t = Instant::now();
    let interpolated = m.det_interpolated()?;
    println!("interpolated  {:>10?}", t.elapsed());
    assert_eq!(laplace, bareiss);
    assert_eq!(bareiss, interpolated);
    println!("det = {interpolated}");

    let v = block(Kernel::One, &gamma, gamma.len()).det()?;
    println!("\nV(A|B) by determinant = {v}");
    println!("V(A|B) by product     = {}", vandermonde(&gamma));
    Ok(())
}
