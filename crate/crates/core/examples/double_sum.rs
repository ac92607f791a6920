// Sylvester's double sum for two small root lists, for every (p, q).

use sylvsum::doublesum::{enumerate_subsets, sylvester_double_sum_counted};
use sylvsum::linalg::RootList;

fn main() -> sylvsum::Result<()> {
    let a = RootList::from_ints(&[1, 2])?;
    let b = RootList::from_ints(&[3, 4, 5])?;
    println!("A = {a:?}, B = {b:?}");

    for sel in enumerate_subsets(&b, 2)? {
        println!("  B' = {:?}, B'' = {:?}, sign {:+}", sel.chosen, sel.complement, sel.sign);
    }

    for p in 0..=a.len() {
        for q in 0..=b.len() {
            let (value, terms) = sylvester_double_sum_counted(&a, &b, p, q)?;
            println!("Sylv^({p},{q}) = {value}    [{terms} terms]");
        }
    }
    Ok(())
}
