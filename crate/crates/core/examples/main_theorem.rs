// Every double sum of one instance against its closed form in terms of
// subresultants.

use sylvsum::doublesum::sylvester_double_sum;
use sylvsum::linalg::RootList;
use sylvsum::verify::{classify, main_theorem_rhs};

fn main() -> sylvsum::Result<()> {
    let a = RootList::from_ints(&[1, -2, 3])?;
    let b = RootList::from_ints(&[0, 4, -5, 2])?;
    println!("A = {a:?}\nB = {b:?}\n");
    for p in 0..=a.len() {
        for q in 0..=b.len() {
            let case = classify(a.len(), b.len(), p, q)?;
            let lhs = sylvester_double_sum(&a, &b, p, q)?;
            let rhs = main_theorem_rhs(&a, &b, p, q)?;
            assert_eq!(lhs, rhs);
            println!("(p, q) = ({p}, {q})  {:<15} Sylv = {lhs}", case.branch.name());
        }
    }
    Ok(())
}
